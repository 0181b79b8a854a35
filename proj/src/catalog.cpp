#include "tpoly/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "tpoly/errors.hpp"
#include "tpoly/json_io.hpp"
#include "tpoly/mmlp.hpp"

namespace tpoly {

namespace {

i64 affine_eval(const AffineForm& a, const std::vector<i64>& idx) {
    i64 v = a.constant;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) v += a.coeffs[i] * idx[i];
    return v;
}

void check_form(const ClosedForm& cf) {
    auto arity = [&](const AffineForm& a, const char* what) {
        if (a.coeffs.size() != cf.num_indices)
            fail(Errc::invalid_argument,
                 std::string(what) + " arity does not match num_indices",
                 static_cast<long long>(a.coeffs.size()));
    };
    arity(cf.degree, "degree form");
    for (const AffineForm& a : cf.numerator) arity(a, "numerator factor");
    for (const AffineForm& a : cf.denominator) arity(a, "denominator factor");
    for (i64 c : cf.degree.coeffs)
        if (c <= 0)
            fail(Errc::invalid_argument,
                 "degree must strictly grow in every summation index", c);
    if (cf.prefactor < 0)
        fail(Errc::invalid_argument, "exponential prefactor constant must be >= 0",
             cf.prefactor);
}

// Value of one summand, or nothing when a factorial argument is negative.
std::optional<Rat> term_value(const ClosedForm& cf, const std::vector<i64>& idx) {
    Rat term(1);
    for (const AffineForm& a : cf.numerator) {
        i64 v = affine_eval(a, idx);
        if (v < 0) return std::nullopt;
        term *= Rat(factorial(v));
    }
    for (const AffineForm& a : cf.denominator) {
        i64 v = affine_eval(a, idx);
        if (v < 0) return std::nullopt;
        term /= Rat(factorial(v));
    }
    return term;
}

} // namespace

std::vector<Rat> evaluate_closed_form(const ClosedForm& cf, std::size_t horizon) {
    check_form(cf);
    const i64 h = static_cast<i64>(horizon);
    std::vector<Rat> sum(horizon + 1, Rat(0));
    std::vector<i64> idx(cf.num_indices, 0);
    // Every degree coefficient is positive, so extending a partial tuple only
    // raises the degree; pruning at the horizon makes the enumeration finite.
    std::function<void(std::size_t, i64)> rec = [&](std::size_t pos, i64 deg) {
        if (deg > h) return;
        if (pos == cf.num_indices) {
            if (deg < 0) return;
            if (std::optional<Rat> t = term_value(cf, idx))
                sum[static_cast<std::size_t>(deg)] += *t;
            return;
        }
        for (i64 v = 0;; ++v) {
            i64 next = deg + cf.degree.coeffs[pos] * v;
            if (next > h) break;
            idx[pos] = v;
            rec(pos + 1, next);
        }
        idx[pos] = 0;
    };
    rec(0, cf.degree.constant);

    std::vector<Rat> out(horizon + 1, Rat(0));
    Rat epow(1); // (-prefactor)^k / k!
    for (std::size_t k = 0; k <= horizon; ++k) {
        if (k > 0) {
            epow *= Rat(-cf.prefactor);
            epow /= Rat(static_cast<i64>(k));
        }
        for (std::size_t d = k; d <= horizon; ++d) out[d] += epow * sum[d - k];
    }
    return out;
}

Catalog load_catalog(const std::string& explicit_path) {
    std::string path = explicit_path;
    if (path.empty()) {
        if (const char* env = std::getenv("TPOLY_CATALOG"); env && *env) path = env;
    }
    if (path.empty()) {
#ifdef TPOLY_DEFAULT_CATALOG_PATH
        path = TPOLY_DEFAULT_CATALOG_PATH;
#else
        path = "data/catalog.json";
#endif
    }
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot read catalog file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return catalog_from_json_text(buf.str());
}

std::vector<Rat> closed_form_series(const Catalog& cat, int id, std::size_t dmax) {
    for (const ReferenceEntry& e : cat.entries)
        if (e.id == id) {
            if (!e.closed_form)
                fail(Errc::unknown_id,
                     "entry " + std::to_string(id) + " has no closed form", id);
            return evaluate_closed_form(*e.closed_form, dmax);
        }
    fail(Errc::unknown_id, "no catalog entry with id " + std::to_string(id), id);
}

std::optional<int> match_period(const Catalog& cat, const PeriodFingerprint& fp) {
    if (fp.coeffs.size() < 7)
        fail(Errc::invalid_argument,
             "fingerprint horizon must be at least 6 for a reliable match",
             static_cast<long long>(fp.coeffs.size()));
    for (const ReferenceEntry& e : cat.entries) {
        std::size_t common = std::min(fp.coeffs.size(), e.computed_period.size());
        if (common < 7) continue;
        bool ok = true;
        for (std::size_t d = 0; d < common && ok; ++d)
            ok = (fp.coeffs[d] == e.computed_period[d]);
        if (ok) return e.id;
    }
    return std::nullopt;
}

CatalogValidation validate_catalog(const Catalog& cat, std::size_t horizon) {
    CatalogValidation report;
    auto integrity = [&](int id, const std::string& note) {
        CatalogDiscrepancy d;
        d.id = id;
        d.kind = "integrity";
        d.note = note;
        report.discrepancies.push_back(std::move(d));
    };
    for (const ReferenceEntry& e : cat.entries) {
        try {
            MmlpResult mm = mmlp(e.polygon);
            if (!(mm.poly == e.mmlp))
                integrity(e.id, "stored polynomial differs from the re-derived one");
        } catch (const Error& err) {
            integrity(e.id, std::string("re-derivation failed: ") + err.what());
        }
        if (!is_t_polygon(e.polygon))
            integrity(e.id, "polygon is not a T-polygon");
        if (!(singularity_content(e.polygon) == e.content))
            integrity(e.id, "stored singularity content differs from recomputation");
        if (normal_vector_index(e.polygon) != e.normal_index)
            integrity(e.id, "stored normal index differs from recomputation");
        if (boundary_lattice_count(e.polygon) != e.boundary_points)
            integrity(e.id, "stored boundary count differs from recomputation");
        if (!e.computed_period.empty()) {
            std::vector<Rat> pc =
                period_coefficients(e.mmlp, e.computed_period.size() - 1);
            if (pc != e.computed_period)
                integrity(e.id, "stored period coefficients differ from recomputation");
        }

        std::size_t common = std::min(e.printed_period.size(), e.computed_period.size());
        for (std::size_t d = 0; d < common; ++d)
            if (e.printed_period[d] != e.computed_period[d]) {
                CatalogDiscrepancy item;
                item.id = e.id;
                item.kind = "printed-vs-computed";
                item.degree = d;
                item.expected = e.computed_period[d];
                item.stated = e.printed_period[d];
                item.note = "transcribed coefficient disagrees with the constant-term computation";
                report.discrepancies.push_back(std::move(item));
            }

        if (e.closed_form) {
            std::vector<Rat> cs = evaluate_closed_form(*e.closed_form, horizon);
            std::size_t top = std::min(horizon + 1, e.computed_period.size());
            for (std::size_t d = 0; d < top; ++d)
                if (cs[d] != e.computed_period[d]) {
                    CatalogDiscrepancy item;
                    item.id = e.id;
                    item.kind = "closed-form-vs-computed";
                    item.degree = d;
                    item.expected = e.computed_period[d];
                    item.stated = cs[d];
                    item.note = "closed-form series disagrees with the constant-term computation";
                    report.discrepancies.push_back(std::move(item));
                }
        }
    }
    report.printed_all_match = true;
    for (const CatalogDiscrepancy& d : report.discrepancies)
        if (d.kind == "printed-vs-computed") report.printed_all_match = false;
    return report;
}

} // namespace tpoly
