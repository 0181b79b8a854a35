#include "tpoly/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tpoly/errors.hpp"

namespace tpoly {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        fail(Errc::invalid_argument, std::string("malformed JSON: ") + e.what());
    }
}

i64 get_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        fail(Errc::invalid_argument, std::string(what) + " must be an integer");
    return j.get<i64>();
}

Rat get_rat(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rat(j.get<i64>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    fail(Errc::invalid_argument,
         std::string(what) + " must be an integer or a \"p/q\" string");
}

std::vector<LatticePoint> points_from_json(const Json& arr, const char* what) {
    if (!arr.is_array())
        fail(Errc::invalid_argument, std::string(what) + " must be an array");
    std::vector<LatticePoint> pts;
    for (const Json& item : arr) {
        if (!item.is_array() || item.size() != 2)
            fail(Errc::invalid_argument,
                 std::string(what) + " entries must be [x, y] pairs");
        pts.push_back({get_int(item[0], what), get_int(item[1], what)});
    }
    return pts;
}

Json polygon_json(const FanoPolygon& P) {
    Json verts = Json::array();
    for (const LatticePoint& v : P.vertices) verts.push_back({v.x, v.y});
    return Json{{"vertices", std::move(verts)}};
}

Json laurent_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(Json{{"exp", {e.x, e.y}}, {"coef", rat_to_string(c)}});
    return Json{{"terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        fail(Errc::invalid_argument, "Laurent polynomial needs a \"terms\" array");
    LaurentPoly f;
    for (const Json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
            fail(Errc::invalid_argument, "each term needs \"exp\" and \"coef\"");
        std::vector<LatticePoint> e = points_from_json(Json::array({t["exp"]}), "exp");
        f.add_term(e[0], get_rat(t["coef"], "coef"));
    }
    return f;
}

Json rat_list_json(const std::vector<Rat>& xs) {
    Json a = Json::array();
    for (const Rat& x : xs) a.push_back(rat_to_string(x));
    return a;
}

std::vector<Rat> rat_list_from_json(const Json& j, const char* what) {
    if (!j.is_array())
        fail(Errc::invalid_argument, std::string(what) + " must be an array");
    std::vector<Rat> xs;
    for (const Json& item : j) xs.push_back(get_rat(item, what));
    return xs;
}

Json affine_json(const AffineForm& a) {
    Json coeffs = Json::array();
    for (i64 c : a.coeffs) coeffs.push_back(c);
    return Json{{"constant", a.constant}, {"coeffs", std::move(coeffs)}};
}

AffineForm affine_from_json(const Json& j) {
    AffineForm a;
    if (!j.is_object() || !j.contains("constant") || !j.contains("coeffs") ||
        !j["coeffs"].is_array())
        fail(Errc::invalid_argument,
             "affine form needs \"constant\" and a \"coeffs\" array");
    a.constant = get_int(j["constant"], "constant");
    for (const Json& c : j["coeffs"]) a.coeffs.push_back(get_int(c, "coeffs"));
    return a;
}

Json closed_form_json(const ClosedForm& cf) {
    Json num = Json::array(), den = Json::array();
    for (const AffineForm& a : cf.numerator) num.push_back(affine_json(a));
    for (const AffineForm& a : cf.denominator) den.push_back(affine_json(a));
    return Json{{"prefactor", cf.prefactor},
                {"num_indices", cf.num_indices},
                {"numerator", std::move(num)},
                {"denominator", std::move(den)},
                {"degree", affine_json(cf.degree)}};
}

ClosedForm closed_form_from_json(const Json& j) {
    ClosedForm cf;
    for (const char* key : {"prefactor", "num_indices", "numerator", "denominator", "degree"})
        if (!j.contains(key))
            fail(Errc::invalid_argument,
                 std::string("closed form is missing \"") + key + "\"");
    cf.prefactor = get_int(j["prefactor"], "prefactor");
    i64 n = get_int(j["num_indices"], "num_indices");
    if (n < 0 || n > 8)
        fail(Errc::invalid_argument, "num_indices out of range", n);
    cf.num_indices = static_cast<std::size_t>(n);
    for (const Json& a : j["numerator"]) cf.numerator.push_back(affine_from_json(a));
    for (const Json& a : j["denominator"]) cf.denominator.push_back(affine_from_json(a));
    cf.degree = affine_from_json(j["degree"]);
    return cf;
}

Json content_json(const SingularityContent& sc) {
    Json basket = Json::array();
    for (const RCone& r : sc.basket)
        basket.push_back(Json{{"residue", r.residue}, {"height", r.height}});
    return Json{{"t_cones", sc.t_cones}, {"basket", std::move(basket)}};
}

SingularityContent content_from_json(const Json& j) {
    SingularityContent sc;
    if (!j.is_object() || !j.contains("t_cones") || !j.contains("basket"))
        fail(Errc::invalid_argument, "content needs \"t_cones\" and \"basket\"");
    sc.t_cones = get_int(j["t_cones"], "t_cones");
    for (const Json& r : j["basket"])
        sc.basket.push_back(RCone{get_int(r.at("residue"), "residue"),
                                  get_int(r.at("height"), "height")});
    return sc;
}

} // namespace

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat r;
    try {
        r = Rat(s);
    } catch (const std::exception&) {
        fail(Errc::invalid_argument, "not a rational: \"" + s + "\"");
    }
    if (r.get_den() == 0)
        fail(Errc::invalid_argument, "zero denominator in \"" + s + "\"");
    r.canonicalize();
    return r;
}

std::string polygon_to_json(const FanoPolygon& P) { return polygon_json(P).dump(); }

FanoPolygon polygon_from_json_text(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("vertices"))
        fail(Errc::invalid_argument, "polygon document needs a \"vertices\" array");
    return validate_fano(points_from_json(j["vertices"], "vertices"));
}

std::string laurent_to_json(const LaurentPoly& f) { return laurent_json(f).dump(); }

LaurentPoly laurent_from_json_text(const std::string& text) {
    return laurent_from_json(parse_json(text));
}

FanoPolygon polygon_from_text(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        fail(Errc::invalid_argument, "empty polygon input");
    if (text[first] == '{') return polygon_from_json_text(text);

    // Bare vertex list: any mix of "(x,y)" pairs or whitespace-separated ints.
    std::vector<i64> nums;
    for (std::size_t i = first; i < text.size();) {
        char c = text[i];
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            if (j == i + 1 && c == '-')
                fail(Errc::invalid_argument, "stray '-' in polygon input");
            nums.push_back(std::stoll(text.substr(i, j - i)));
            i = j;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '(' ||
                   c == ')' || c == ',' || c == ';') {
            ++i;
        } else {
            fail(Errc::invalid_argument,
                 std::string("unexpected character '") + c + "' in polygon input");
        }
    }
    if (nums.size() < 6 || nums.size() % 2 != 0)
        fail(Errc::invalid_argument,
             "polygon input must list at least three x y pairs");
    std::vector<LatticePoint> pts;
    for (std::size_t i = 0; i < nums.size(); i += 2)
        pts.push_back({nums[i], nums[i + 1]});
    return validate_fano(pts);
}

FanoPolygon read_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_argument, "cannot read file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return polygon_from_text(buf.str());
}

std::string catalog_to_json(const Catalog& cat) {
    Json entries = Json::array();
    for (const ReferenceEntry& e : cat.entries) {
        Json item{{"id", e.id},
                  {"polygon", polygon_json(e.polygon)},
                  {"content", content_json(e.content)},
                  {"normal_index", e.normal_index},
                  {"boundary_points", e.boundary_points},
                  {"mmlp", laurent_json(e.mmlp)},
                  {"printed_period", rat_list_json(e.printed_period)},
                  {"computed_period", rat_list_json(e.computed_period)}};
        if (e.closed_form) item["closed_form"] = closed_form_json(*e.closed_form);
        entries.push_back(std::move(item));
    }
    return Json{{"entries", std::move(entries)}}.dump(1) + "\n";
}

Catalog catalog_from_json_text(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        fail(Errc::invalid_argument, "catalog needs an \"entries\" array");
    Catalog cat;
    for (const Json& item : j["entries"]) {
        ReferenceEntry e;
        for (const char* key : {"id", "polygon", "content", "normal_index",
                                "boundary_points", "mmlp", "printed_period",
                                "computed_period"})
            if (!item.contains(key))
                fail(Errc::invalid_argument,
                     std::string("catalog entry is missing \"") + key + "\"");
        e.id = static_cast<int>(get_int(item["id"], "id"));
        e.polygon = validate_fano(points_from_json(item["polygon"].at("vertices"), "vertices"));
        e.content = content_from_json(item["content"]);
        e.normal_index = get_int(item["normal_index"], "normal_index");
        e.boundary_points = get_int(item["boundary_points"], "boundary_points");
        e.mmlp = laurent_from_json(item["mmlp"]);
        e.printed_period = rat_list_from_json(item["printed_period"], "printed_period");
        e.computed_period = rat_list_from_json(item["computed_period"], "computed_period");
        if (item.contains("closed_form") && !item["closed_form"].is_null())
            e.closed_form = closed_form_from_json(item["closed_form"]);
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

} // namespace tpoly
