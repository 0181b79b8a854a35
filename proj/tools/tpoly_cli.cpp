// tpoly: exact mutation calculus for Fano polygons and Laurent polynomials.
//
// Subcommands:
//   classify          map a T-polygon to its mutation class in the reference
//                     catalog, with a mutation-chain witness when one is
//                     found within the search bounds
//   period            classical period coefficients of a Laurent polynomial
//   mutate            one polygon mutation (--v/--w/--k) or one algebraic
//                     mutation (--v/--factor)
//   mmlp              maximally mutable Laurent polynomial of a T-polygon
//   graph             bounded mutation graph (DOT or JSON)
//   lattice-classify  root-sublattice class of an anticanonical cycle in
//                     the unimodular lattice I_{1,9}
//   validate-catalog  recompute every reference-catalog entry and report
//                     discrepancies
//
// Exit status is 0 iff the requested computation succeeded; all errors print
// a single "error: ..." line on stderr and exit 1.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tpoly/catalog.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/json_io.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/mmlp.hpp"
#include "tpoly/polygon.hpp"
#include "tpoly/rootlattice.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace tpoly;

struct Opts {
    std::string input;
    std::string expr;
    std::string format = "text";
    std::string catalog;
    std::string v_str, w_str, factor;
    std::size_t horizon = 8;
    std::size_t depth = 3;
    std::size_t max_nodes = 5000;
    i64 k = 1;
    i64 seed = 0;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// The text named by --expr, or the contents of the file named by --input.
std::string input_text(const Opts& o, const char* what) {
    if (!o.expr.empty()) return o.expr;
    if (!o.input.empty()) return slurp(o.input);
    fail(Errc::invalid_argument,
         std::string(what) + " needs --input FILE or --expr TEXT");
}

bool looks_like_json(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos &&
           (text[first] == '{' || text[first] == '[');
}

FanoPolygon polygon_input(const Opts& o) {
    return polygon_from_text(input_text(o, "polygon"));
}

LaurentPoly laurent_input(const Opts& o) {
    std::string text = input_text(o, "laurent polynomial");
    if (looks_like_json(text)) return laurent_from_json_text(text);
    return parse_laurent(text);
}

LatticePoint parse_point(const std::string& s, const char* flag) {
    std::vector<i64> nums;
    for (std::size_t i = 0; i < s.size();) {
        char c = s[i];
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
            if (j == i + (c == '-' ? 1 : 0))
                fail(Errc::invalid_argument,
                     std::string(flag) + ": stray '-' in \"" + s + "\"");
            nums.push_back(std::stoll(s.substr(i, j - i)));
            i = j;
        } else if (c == ' ' || c == '(' || c == ')' || c == ',') {
            ++i;
        } else {
            fail(Errc::invalid_argument,
                 std::string(flag) + ": unexpected character in \"" + s + "\"");
        }
    }
    if (nums.size() != 2)
        fail(Errc::invalid_argument,
             std::string(flag) + " must be a pair \"a,b\", got \"" + s + "\"");
    return {nums[0], nums[1]};
}

// ---------------------------------------------------------------------------
// Shared printers

std::string polygon_text(const FanoPolygon& P) {
    std::string out;
    for (const LatticePoint& v : P.vertices) {
        if (!out.empty()) out += ' ';
        out += to_string(v);
    }
    return out;
}

std::string content_text(const SingularityContent& c) {
    std::string out = "(" + std::to_string(c.t_cones) + ", [";
    for (std::size_t i = 0; i < c.basket.size(); ++i) {
        if (i) out += ", ";
        out += "(" + std::to_string(c.basket[i].residue) + "," +
               std::to_string(c.basket[i].height) + ")";
    }
    return out + "])";
}

std::string rat_list_text(const std::vector<Rat>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += coeffs[i].get_str();
    }
    return out;
}

std::string mutation_text(const MutationData& m) {
    return "v=" + to_string(m.v) + " w=" + to_string(m.w) +
           " k=" + std::to_string(m.k);
}

Json point_json(const LatticePoint& p) { return Json::array({p.x, p.y}); }

Json polygon_vertices_json(const FanoPolygon& P) {
    Json verts = Json::array();
    for (const LatticePoint& v : P.vertices) verts.push_back(point_json(v));
    return verts;
}

Json laurent_terms_json(const LaurentPoly& f) {
    return Json::parse(laurent_to_json(f));
}

Json content_json(const SingularityContent& c) {
    Json basket = Json::array();
    for (const RCone& r : c.basket)
        basket.push_back(Json{{"residue", r.residue}, {"height", r.height}});
    return Json{{"t_cones", c.t_cones}, {"basket", std::move(basket)}};
}

Json rat_list_json(const std::vector<Rat>& coeffs) {
    Json arr = Json::array();
    for (const Rat& c : coeffs) arr.push_back(c.get_str());
    return arr;
}

Json mutation_json(const MutationData& m) {
    return Json{{"v", point_json(m.v)}, {"w", point_json(m.w)}, {"k", m.k}};
}

void emit_json(const Json& j) { std::cout << j.dump(1) << "\n"; }

// ---------------------------------------------------------------------------
// Subcommand bodies

int run_classify(const Opts& o) {
    if (o.horizon < 6)
        fail(Errc::invalid_argument,
             "classify needs --horizon >= 6 to separate the catalog classes");
    FanoPolygon P = polygon_input(o);
    MmlpResult mm = mmlp(P, o.depth);
    PeriodFingerprint fp = period_fingerprint(mm.poly, o.horizon);
    Catalog cat = load_catalog(o.catalog);
    std::optional<int> id = match_period(cat, fp);
    if (!id)
        fail(Errc::no_match,
             "period fingerprint matches no reference catalog entry");
    const ReferenceEntry* entry = nullptr;
    for (const ReferenceEntry& e : cat.entries)
        if (e.id == *id) entry = &e;
    SingularityContent content = singularity_content(P);
    auto witness = find_mutation_chain(P, entry->polygon, o.max_nodes, o.depth);

    if (o.format == "json") {
        Json j{{"class", *id},
               {"content", content_json(content)},
               {"normal_index", normal_vector_index(P)},
               {"boundary_points", boundary_lattice_count(P)},
               {"mmlp", laurent_terms_json(mm.poly)},
               {"period", rat_list_json(fp.coeffs)},
               {"witness_found", witness.has_value()}};
        Json chain = Json::array();
        if (witness)
            for (const MutationData& m : *witness) chain.push_back(mutation_json(m));
        j["witness"] = std::move(chain);
        emit_json(j);
    } else {
        std::cout << "class: " << *id << "\n";
        std::cout << "content: " << content_text(content) << "\n";
        std::cout << "normal_index: " << normal_vector_index(P) << "\n";
        std::cout << "boundary_points: " << boundary_lattice_count(P) << "\n";
        std::cout << "mmlp: " << to_string(mm.poly) << "\n";
        std::cout << "period: " << rat_list_text(fp.coeffs) << "\n";
        if (!witness) {
            std::cout << "witness: not found within bounds\n";
        } else if (witness->empty()) {
            std::cout << "witness: already the catalog representative "
                         "(chain length 0)\n";
        } else {
            std::cout << "witness:";
            for (const MutationData& m : *witness)
                std::cout << " [" << mutation_text(m) << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

int run_period(const Opts& o) {
    LaurentPoly f = laurent_input(o);
    std::vector<Rat> coeffs = period_coefficients(f, o.horizon);
    if (o.format == "json")
        emit_json(Json{{"coefficients", rat_list_json(coeffs)}});
    else
        std::cout << rat_list_text(coeffs) << "\n";
    return 0;
}

int run_mutate(const Opts& o) {
    if (o.v_str.empty())
        fail(Errc::invalid_argument, "mutate needs --v a,b");
    LatticePoint v = parse_point(o.v_str, "--v");
    if (!o.factor.empty()) {
        // Algebraic mutation of a Laurent polynomial.
        LaurentPoly f = laurent_input(o);
        LaurentPoly F = parse_laurent(o.factor);
        LaurentPoly g = algebraic_mutation(f, v, F);
        if (o.format == "json")
            emit_json(laurent_terms_json(g));
        else
            std::cout << to_string(g) << "\n";
        return 0;
    }
    if (o.w_str.empty())
        fail(Errc::invalid_argument,
             "mutate needs --w a,b (polygon mode) or --factor TEXT (laurent mode)");
    FanoPolygon P = polygon_input(o);
    MutationData m{v, parse_point(o.w_str, "--w"), o.k};
    FanoPolygon Q = mutate_polygon(P, m);
    if (o.format == "json")
        emit_json(Json{{"vertices", polygon_vertices_json(Q)}});
    else
        std::cout << polygon_text(Q) << "\n";
    return 0;
}

int run_mmlp(const Opts& o) {
    FanoPolygon P = polygon_input(o);
    MmlpResult mm = mmlp(P, o.depth);
    std::vector<Rat> coeffs = period_coefficients(mm.poly, o.horizon);
    if (o.format == "json") {
        emit_json(Json{{"polynomial", laurent_terms_json(mm.poly)},
                       {"text", to_string(mm.poly)},
                       {"solution_dim", static_cast<i64>(mm.solution_dim)},
                       {"period", rat_list_json(coeffs)}});
    } else {
        std::cout << "mmlp: " << to_string(mm.poly) << "\n";
        std::cout << "solution_dim: " << mm.solution_dim << "\n";
        std::cout << "period: " << rat_list_text(coeffs) << "\n";
    }
    return 0;
}

int run_graph(const Opts& o) {
    FanoPolygon P = polygon_input(o);
    MutationGraph g = mutation_graph(P, o.max_nodes, o.depth);
    if (o.format == "json") {
        Json nodes = Json::array();
        for (const FanoPolygon& n : g.nodes)
            nodes.push_back(polygon_vertices_json(n));
        Json edges = Json::array();
        for (const MutationEdge& e : g.edges) {
            Json item = mutation_json(e.mutation);
            item["from"] = e.from;
            item["to"] = e.to;
            edges.push_back(std::move(item));
        }
        emit_json(Json{{"nodes", std::move(nodes)},
                       {"edges", std::move(edges)},
                       {"depth", g.depth},
                       {"truncated", g.truncated}});
    } else {
        std::cout << graph_to_dot(g);
    }
    return 0;
}

std::vector<LatticeVec> cycle_input(const Opts& o) {
    std::string text = input_text(o, "lattice cycle");
    std::vector<LatticeVec> cycle;
    if (looks_like_json(text)) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const std::exception& e) {
            fail(Errc::invalid_argument,
                 std::string("malformed JSON: ") + e.what());
        }
        if (j.is_object()) {
            if (!j.contains("components"))
                fail(Errc::invalid_argument,
                     "lattice cycle document needs a \"components\" array");
            j = j["components"];
        }
        if (!j.is_array())
            fail(Errc::invalid_argument,
                 "lattice cycle must be an array of coordinate rows");
        for (const Json& row : j) {
            if (!row.is_array())
                fail(Errc::invalid_argument,
                     "each cycle component must be an array of integers");
            LatticeVec vec;
            for (const Json& x : row) {
                if (!x.is_number_integer())
                    fail(Errc::invalid_argument,
                         "cycle coordinates must be integers");
                vec.push_back(x.get<i64>());
            }
            cycle.push_back(std::move(vec));
        }
        return cycle;
    }
    // Bare text: each nonempty line is one coordinate row.
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        LatticeVec vec;
        i64 x;
        while (fields >> x) vec.push_back(x);
        if (!fields.eof()) {
            std::string tail;
            fields.clear();
            fields >> tail;
            fail(Errc::invalid_argument,
                 "unexpected token \"" + tail + "\" in lattice cycle input");
        }
        if (!vec.empty()) cycle.push_back(std::move(vec));
    }
    return cycle;
}

int run_lattice_classify(const Opts& o) {
    std::vector<LatticeVec> cycle = cycle_input(o);
    GramLattice L = make_i1n(9);
    RootSublatticeClass cls = classify_boundary(cycle, L);
    if (o.format == "json") {
        emit_json(Json{{"rank", static_cast<i64>(cls.rank)},
                       {"primitive", cls.primitive},
                       {"label", cls.label}});
    } else {
        std::cout << "rank: " << cls.rank << "\n";
        std::cout << "primitive: " << (cls.primitive ? "true" : "false") << "\n";
        std::cout << "label: " << cls.label << "\n";
    }
    return 0;
}

int run_validate_catalog(const Opts& o) {
    Catalog cat = load_catalog(o.catalog);
    CatalogValidation report = validate_catalog(cat, o.horizon);
    if (o.format == "json") {
        Json items = Json::array();
        for (const CatalogDiscrepancy& d : report.discrepancies)
            items.push_back(Json{{"id", d.id},
                                 {"kind", d.kind},
                                 {"degree", static_cast<i64>(d.degree)},
                                 {"expected", d.expected.get_str()},
                                 {"stated", d.stated.get_str()},
                                 {"note", d.note}});
        emit_json(Json{{"entries", static_cast<i64>(cat.entries.size())},
                       {"printed_all_match", report.printed_all_match},
                       {"discrepancies", std::move(items)}});
    } else {
        std::cout << "entries: " << cat.entries.size() << "\n";
        std::cout << "printed_all_match: "
                  << (report.printed_all_match ? "true" : "false") << "\n";
        for (const CatalogDiscrepancy& d : report.discrepancies) {
            std::cout << "discrepancy: id=" << d.id << " kind=" << d.kind
                      << " degree=" << d.degree
                      << " expected=" << d.expected.get_str()
                      << " stated=" << d.stated.get_str();
            if (!d.note.empty()) std::cout << " note=\"" << d.note << "\"";
            std::cout << "\n";
        }
    }
    // Discrepancies are findings, not failures: exit 0 when the validation ran.
    return 0;
}

void add_io_flags(CLI::App* cmd, Opts& o, const char* what) {
    cmd->add_option("--input", o.input,
                    std::string("file holding the ") + what);
    cmd->add_option("--expr", o.expr,
                    std::string("inline text for the ") + what);
}

void add_format_flag(CLI::App* cmd, Opts& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact mutation calculus for Fano polygons and Laurent polynomials"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* classify =
        app.add_subcommand("classify", "mutation class of a T-polygon");
    add_io_flags(classify, o, "polygon");
    add_format_flag(classify, o);
    classify->add_option("--horizon", o.horizon, "period degrees to compare")
        ->capture_default_str();
    classify->add_option("--depth", o.depth, "witness search depth")
        ->capture_default_str();
    classify->add_option("--max-nodes", o.max_nodes, "witness search node bound")
        ->capture_default_str();
    classify->add_option("--catalog", o.catalog, "reference catalog file");
    classify->add_option("--seed", o.seed, "random seed (reserved)");

    CLI::App* period = app.add_subcommand(
        "period", "classical period coefficients of a Laurent polynomial");
    add_io_flags(period, o, "Laurent polynomial");
    add_format_flag(period, o);
    period->add_option("--horizon", o.horizon, "highest degree to compute")
        ->capture_default_str();

    CLI::App* mutate = app.add_subcommand(
        "mutate", "apply one polygon or algebraic mutation");
    add_io_flags(mutate, o, "polygon (or Laurent polynomial with --factor)");
    add_format_flag(mutate, o);
    mutate->add_option("--v", o.v_str, "mutation direction \"a,b\"");
    mutate->add_option("--w", o.w_str, "factor direction \"a,b\" (polygon mode)");
    mutate->add_option("--k", o.k, "mutation width (polygon mode)")
        ->capture_default_str();
    mutate->add_option("--factor", o.factor,
                       "mutation factor polynomial (laurent mode)");

    CLI::App* mmlp_cmd = app.add_subcommand(
        "mmlp", "maximally mutable Laurent polynomial of a T-polygon");
    add_io_flags(mmlp_cmd, o, "polygon");
    add_format_flag(mmlp_cmd, o);
    mmlp_cmd->add_option("--horizon", o.horizon, "period degrees to print")
        ->capture_default_str();
    mmlp_cmd->add_option("--depth", o.depth, "mutation-constraint depth")
        ->capture_default_str();

    CLI::App* graph =
        app.add_subcommand("graph", "bounded mutation graph (DOT by default)");
    add_io_flags(graph, o, "polygon");
    add_format_flag(graph, o);
    graph->add_option("--depth", o.depth, "BFS depth bound")
        ->capture_default_str();
    graph->add_option("--max-nodes", o.max_nodes, "BFS node bound")
        ->capture_default_str();

    CLI::App* lattice = app.add_subcommand(
        "lattice-classify",
        "root-sublattice class of an anticanonical cycle in I_{1,9}");
    add_io_flags(lattice, o, "cycle (rows of 10 integers)");
    add_format_flag(lattice, o);

    CLI::App* validate = app.add_subcommand(
        "validate-catalog", "recompute the reference catalog and report drift");
    add_format_flag(validate, o);
    validate->add_option("--catalog", o.catalog, "reference catalog file");
    validate->add_option("--horizon", o.horizon,
                         "degrees for closed-form comparison")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(classify)) return run_classify(o);
        if (app.got_subcommand(period)) return run_period(o);
        if (app.got_subcommand(mutate)) return run_mutate(o);
        if (app.got_subcommand(mmlp_cmd)) return run_mmlp(o);
        if (app.got_subcommand(graph)) return run_graph(o);
        if (app.got_subcommand(lattice)) return run_lattice_classify(o);
        if (app.got_subcommand(validate)) return run_validate_catalog(o);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
