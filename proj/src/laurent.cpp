#include "tpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "tpoly/errors.hpp"

namespace tpoly {

// ---------------------------------------------------------------------------
// LaurentPoly arithmetic

Rat LaurentPoly::coeff(const LatticePoint& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const LatticePoint& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::set_term(const LatticePoint& e, const Rat& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.set_term(e, c * s);
    return r;
}

LaurentPoly LaurentPoly::monomial(const LatticePoint& e, const Rat& c) {
    LaurentPoly r;
    r.set_term(e, c);
    return r;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    LaurentPoly run() {
        LaurentPoly out;
        skip_ws();
        if (at_end()) err("empty input");
        bool first = true;
        while (!at_end()) {
            Rat sign(1);
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
            } else if (!first) {
                err("expected '+' or '-' between terms");
            }
            skip_ws();
            auto [e, c] = term();
            out.add_term(e, sign * c);
            first = false;
            skip_ws();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void err(const std::string& what) const {
        fail(Errc::syntax_error, what + " at offset " + std::to_string(pos_),
             static_cast<long long>(pos_));
    }

    Int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) err("expected a digit");
        Int n = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            n = n * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return n;
    }

    i64 exponent_value() {
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos_; }
        const Int n = integer();
        if (!n.fits_slong_p()) err("exponent out of range");
        return neg ? -n.get_si() : n.get_si();
    }

    // factor := 'x' ['^' int] | 'y' ['^' int] | '1'
    // Each variable may appear at most once per monomial.
    void factor(LatticePoint& e, bool& saw_x, bool& saw_y) {
        const char v = peek();
        if (v == '1') { ++pos_; return; }
        if (v != 'x' && v != 'y') err("expected 'x', 'y', or '1'");
        bool& seen = (v == 'x') ? saw_x : saw_y;
        if (seen) err("variable repeated within a monomial");
        seen = true;
        ++pos_;
        i64 exp = 1;
        if (peek() == '^') {
            ++pos_;
            exp = exponent_value();
        }
        if (v == 'x') e.x += exp; else e.y += exp;
    }

    std::pair<LatticePoint, Rat> term() {
        Rat coeff(1);
        LatticePoint e{0, 0};
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const Int num = integer();
            Int den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                den = integer();
                if (den == 0)
                    fail(Errc::syntax_error,
                         "zero denominator at offset " + std::to_string(den_pos),
                         static_cast<long long>(den_pos));
            }
            coeff = Rat(num, den);
            coeff.canonicalize();
            have_coeff = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            } else {
                return {e, coeff}; // bare constant
            }
        }
        bool saw_x = false, saw_y = false;
        factor(e, saw_x, saw_y);
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            skip_ws();
            factor(e, saw_x, saw_y);
            skip_ws();
        }
        (void)have_coeff;
        return {e, coeff};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

std::string rat_text(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

} // namespace

LaurentPoly parse_laurent(const std::string& text) { return Parser(text).run(); }

std::string to_string(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mono;
        if (e.x != 0) {
            mono += 'x';
            if (e.x != 1) mono += '^' + std::to_string(e.x);
        }
        if (e.y != 0) {
            if (!mono.empty()) mono += '*';
            mono += 'y';
            if (e.y != 1) mono += '^' + std::to_string(e.y);
        }
        if (mono.empty()) {
            os << rat_text(mag);
        } else if (mag == 1) {
            os << mono;
        } else {
            os << rat_text(mag) << '*' << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Newton polygon and periods

std::vector<LatticePoint> support_hull(const LaurentPoly& f) {
    if (f.is_zero())
        fail(Errc::invalid_argument, "the zero polynomial has no Newton polygon");
    std::vector<LatticePoint> pts;
    pts.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    return convex_hull_vertices(std::move(pts));
}

FanoPolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero())
        fail(Errc::invalid_argument, "the zero polynomial has no Newton polygon");
    std::vector<LatticePoint> pts;
    pts.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) pts.push_back(e);
    return validate_fano(std::move(pts));
}

std::vector<Rat> period_coefficients(const LaurentPoly& f, std::size_t horizon) {
    std::vector<Rat> out;
    out.reserve(horizon + 1);
    out.emplace_back(1); // f^0 = 1
    LaurentPoly power = LaurentPoly::monomial({0, 0}, 1);
    for (std::size_t d = 1; d <= horizon; ++d) {
        power = power * f;
        out.push_back(power.coeff({0, 0}));
    }
    return out;
}

PeriodFingerprint period_fingerprint(const LaurentPoly& f, std::size_t horizon) {
    return PeriodFingerprint{period_coefficients(f, horizon), horizon};
}

// ---------------------------------------------------------------------------
// Algebraic mutation

LaurentPoly binomial_factor(const LatticePoint& w, i64 k) {
    if (k < 0) fail(Errc::invalid_argument, "binomial factor needs a nonnegative power");
    LaurentPoly r;
    for (i64 j = 0; j <= k; ++j) r.set_term(w * j, Rat(binomial(k, j)));
    return r;
}

namespace {

// Exact division of a line-supported slice by a line-supported divisor along
// the same direction.  Returns the quotient, or nullopt with `bad` untouched
// when the remainder is nonzero.
std::optional<LaurentPoly> divide_slice(const std::vector<std::pair<LatticePoint, Rat>>& slice,
                                        const LaurentPoly& divisor, const LatticePoint& w,
                                        const LatticePoint& c) {
    // Positions along the line in w-steps, measured by tau = <., c>.
    i64 tmin = dot(slice[0].first, c), tmax = tmin;
    for (const auto& [e, coeff] : slice) {
        tmin = std::min(tmin, dot(e, c));
        tmax = std::max(tmax, dot(e, c));
    }
    LatticePoint base = slice[0].first;
    for (const auto& [e, coeff] : slice)
        if (dot(e, c) == tmin) base = e;
    std::vector<Rat> a(static_cast<std::size_t>(tmax - tmin) + 1);
    for (const auto& [e, coeff] : slice) a[static_cast<std::size_t>(dot(e, c) - tmin)] = coeff;

    i64 bmin = 0, bmax = 0;
    bool has = false;
    for (const auto& [e, coeff] : divisor.terms()) {
        const i64 t = dot(e, c);
        if (!has) { bmin = bmax = t; has = true; }
        bmin = std::min(bmin, t);
        bmax = std::max(bmax, t);
    }
    std::vector<Rat> b(static_cast<std::size_t>(bmax - bmin) + 1);
    for (const auto& [e, coeff] : divisor.terms()) b[static_cast<std::size_t>(dot(e, c) - bmin)] = coeff;

    if (a.size() < b.size()) return std::nullopt;
    std::vector<Rat> q(a.size() - b.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        Rat lead = a[i + b.size() - 1] / b.back();
        q[i] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= lead * b[j];
    }
    for (const Rat& r : a)
        if (r != 0) return std::nullopt;
    LaurentPoly out;
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] != 0) out.add_term(base - w * bmin + w * static_cast<i64>(i), q[i]);
    return out;
}

} // namespace

LaurentPoly algebraic_mutation(const LaurentPoly& f, const LatticePoint& v,
                               const LaurentPoly& F) {
    if (!is_primitive(v))
        fail(Errc::invalid_argument, "mutation direction must be primitive");
    if (F.is_zero()) fail(Errc::invalid_argument, "mutation factor must be nonzero");
    for (const auto& [e, c] : F.terms())
        if (dot(e, v) != 0)
            fail(Errc::invalid_argument,
                 "factor term " + to_string(e) + " is not orthogonal to the direction");

    std::map<i64, std::vector<std::pair<LatticePoint, Rat>>> slices;
    for (const auto& [e, c] : f.terms()) slices[dot(e, v)].push_back({e, c});

    const LatticePoint w = rot90(v);
    const LatticePoint c = dual_partner(w);
    i64 max_abs = 0;
    for (const auto& [h, s] : slices) max_abs = std::max(max_abs, h < 0 ? -h : h);
    std::vector<LaurentPoly> fpow{LaurentPoly::monomial({0, 0}, 1)};
    for (i64 i = 1; i <= max_abs; ++i) fpow.push_back(fpow.back() * F);

    LaurentPoly out;
    for (const auto& [h, slice] : slices) {
        if (h == 0) {
            for (const auto& [e, coeff] : slice) out.add_term(e, coeff);
        } else if (h > 0) {
            LaurentPoly s;
            for (const auto& [e, coeff] : slice) s.set_term(e, coeff);
            out = out + s * fpow[static_cast<std::size_t>(h)];
        } else {
            auto quot = divide_slice(slice, fpow[static_cast<std::size_t>(-h)], w, c);
            if (!quot)
                fail(Errc::not_mutable,
                     "slice at height " + std::to_string(h) + " is not divisible by the factor",
                     h);
            out = out + *quot;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unimodular substitution and canonical form

LaurentPoly apply_unimodular(const LaurentPoly& f, const LatticePoint& col_x,
                             const LatticePoint& col_y) {
    const i64 det = cross(col_x, col_y);
    if (det != 1 && det != -1)
        fail(Errc::invalid_argument, "substitution matrix must be unimodular");
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) out.set_term(col_x * e.x + col_y * e.y, c);
    return out;
}

namespace {

int cmp_rat(const Rat& a, const Rat& b) { return cmp(a, b); }

// Total order on polynomials by their sorted term lists; used only to pick
// canonical representatives deterministically.
bool term_list_less(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (int c = cmp_rat(ia->second, ib->second); c != 0) return c < 0;
    }
    return a.terms().size() < b.terms().size();
}

LaurentPoly mirror_poly(const LaurentPoly& f) {
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) out.set_term({e.x, -e.y}, c);
    return out;
}

} // namespace

LaurentPoly laurent_canonical(const LaurentPoly& f) {
    std::optional<LaurentPoly> best;
    for (const LaurentPoly& g : {f, mirror_poly(f)}) {
        const std::vector<LatticePoint> hull = support_hull(g);
        if (hull.size() < 3)
            fail(Errc::not_convex, "support is not full-dimensional");
        const std::size_t n = hull.size();
        for (std::size_t i = 0; i < n; ++i) {
            // Anchored transform for the edge hull[i] -> hull[i+1]: second
            // coordinate is the inward normal pairing, first is a dual
            // partner sheared so that the first vertex (in ccw order from the
            // anchor) off the normal's zero line lands in [0, |height|).
            // Matches the polygon normal form whenever the origin is
            // strictly interior.
            const LatticePoint u = rot90(primitive(hull[(i + 1) % n] - hull[i]));
            i64 s = 0, t = 0;
            ext_gcd(u.y, -u.x, s, t);
            LatticePoint c{s, t};
            i64 y0 = 0;
            std::size_t anchor = i;
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t idx = (i + j) % n;
                if (dot(u, hull[idx]) != 0) {
                    anchor = idx;
                    y0 = dot(u, hull[idx]);
                    break;
                }
            }
            if (y0 == 0) fail(Errc::internal, "hull is flat along its own normal");
            const i64 x0 = dot(c, hull[anchor]);
            const i64 mod = y0 < 0 ? -y0 : y0;
            i64 r = x0 % mod;
            if (r < 0) r += mod;
            // Solve x0 + m*y0 = r for the unique shear m.
            const i64 m = (r - x0) / y0;
            c = c + u * m;
            LaurentPoly cand;
            for (const auto& [e, coeff] : g.terms())
                cand.set_term({dot(c, e), dot(u, e)}, coeff);
            if (!best || term_list_less(cand, *best)) best = std::move(cand);
        }
    }
    return *best;
}

namespace {

// Mutation candidates read off the Newton polygon of f without requiring the
// origin to be strictly interior: edges at positive height contribute their
// inward normal with widths up to floor(length/height).  On a Fano Newton
// polygon this is exactly the candidate set behind admissible_mutations.
std::vector<MutationData> laurent_mutation_candidates(const LaurentPoly& f) {
    std::vector<MutationData> out;
    const std::vector<LatticePoint> hull = support_hull(f);
    if (hull.size() < 3) return out;
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint d = hull[(i + 1) % n] - hull[i];
        const i64 len = gcd_ll(d.x, d.y);
        const LatticePoint v = rot90(primitive(d));
        const i64 h = -dot(v, hull[i]);
        if (h < 1) continue;
        const LatticePoint w0 = rot90(v);
        for (const LatticePoint& w : {w0, -w0})
            for (i64 k = 1; k * h <= len; ++k) out.push_back({v, w, k});
    }
    return out;
}

std::optional<SingularityContent> fano_content(const LaurentPoly& f) {
    try {
        return singularity_content(newton_polygon(f));
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

LaurentChainResult mutation_equivalent_laurent(const LaurentPoly& f, const LaurentPoly& g,
                                               std::size_t max_nodes, std::size_t max_depth) {
    LaurentChainResult res;
    const auto cf = fano_content(f), cg = fano_content(g);
    if (cf && cg && !(*cf == *cg)) return res; // invariant differs: provably inequivalent
    if (cf.has_value() != cg.has_value()) return res; // one Fano, one not
    const LaurentPoly goal = laurent_canonical(g);
    const std::string goal_key = to_string(goal);

    std::vector<LaurentPoly> nodes{laurent_canonical(f)};
    std::vector<std::size_t> depth{0};
    std::vector<std::size_t> parent{SIZE_MAX};
    std::vector<MutationData> via{MutationData{}};
    std::set<std::string> seen{to_string(nodes[0])};
    auto chain_to = [&](std::size_t i) {
        std::vector<MutationData> chain;
        for (; parent[i] != SIZE_MAX; i = parent[i]) chain.push_back(via[i]);
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    if (to_string(nodes[0]) == goal_key) {
        res.found = true;
        return res;
    }
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (depth[i] >= max_depth) {
            res.truncated = true;
            continue;
        }
        for (const auto& m : laurent_mutation_candidates(nodes[i])) {
            LaurentPoly child;
            try {
                child = algebraic_mutation(nodes[i], m.v, binomial_factor(m.w, m.k));
            } catch (const Error& err) {
                if (err.code() == Errc::not_mutable) continue;
                throw;
            }
            child = laurent_canonical(child);
            const std::string key = to_string(child);
            if (!seen.insert(key).second) continue;
            if (nodes.size() >= max_nodes) {
                res.truncated = true;
                continue;
            }
            const std::size_t j = nodes.size();
            nodes.push_back(std::move(child));
            depth.push_back(depth[i] + 1);
            parent.push_back(i);
            via.push_back(m);
            if (key == goal_key) {
                res.found = true;
                res.chain = chain_to(j);
                return res;
            }
            queue.push_back(j);
        }
    }
    return res;
}

} // namespace tpoly
