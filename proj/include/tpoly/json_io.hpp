#pragma once

#include <string>
#include <vector>

#include "tpoly/catalog.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/polygon.hpp"

namespace tpoly {

// JSON (de)serialization for the CLI and the on-disk catalog.
// Polygons: {"vertices": [[x,y], ...]}.  Rationals: "p/q" strings (or "n").
// Laurent polynomials: {"terms": [{"exp": [a,b], "coef": "p/q"}, ...]}.

std::string polygon_to_json(const FanoPolygon& P);
FanoPolygon polygon_from_json_text(const std::string& text);

std::string laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json_text(const std::string& text);

// Accepts either a JSON polygon document or a bare vertex list
// "(x,y) (x,y) ..." / "x y" lines.
FanoPolygon polygon_from_text(const std::string& text);

// polygon_from_text applied to a file's contents; used by the CLI --input path.
FanoPolygon read_polygon_file(const std::string& path);

std::string catalog_to_json(const Catalog& cat);
Catalog catalog_from_json_text(const std::string& text);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

} // namespace tpoly
