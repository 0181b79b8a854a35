// Regenerates the on-disk reference catalog from the embedded source table.
// Everything derivable (distinguished polynomial, period coefficients,
// singularity content, normal index, boundary count) is recomputed here; only
// the representative polygons, the transcribed period sequences, and the
// closed-form descriptors are primary inputs.
//
// Usage: catalog_gen [output-path]   (default: data/catalog.json)

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "tpoly/catalog.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/json_io.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/mmlp.hpp"
#include "tpoly/polygon.hpp"

using namespace tpoly;

namespace {

struct RawEntry {
    int id;
    std::vector<LatticePoint> vertices;
    std::vector<i64> printed;
    ClosedForm closed_form;
};

// Affine form shorthand: cst + sum coeffs[i] * idx_i.
AffineForm af(i64 cst, std::vector<i64> coeffs) { return {cst, std::move(coeffs)}; }

std::vector<RawEntry> source_table() {
    std::vector<RawEntry> t;
    t.push_back({1,
                 {{-1, -2}, {5, -2}, {-1, 4}},
                 {1, 0, 10260, 2021280, 618874020, 184450426560L},
                 {60, 1, {af(0, {6})}, {af(0, {1}), af(0, {2}), af(0, {3})}, af(0, {1})}});
    t.push_back({2,
                 {{-1, -2}, {3, -2}, {-1, 2}},
                 {1, 0, 276, 6816, 314532, 12853440, 569409360},
                 {12, 1, {af(0, {4})}, {af(0, {1}), af(0, {1}), af(0, {2})}, af(0, {1})}});
    t.push_back({3,
                 {{1, 1}, {-2, 1}, {1, -2}},
                 {1, 0, 54, 492, 9882, 158760, 2879640},
                 {6, 1, {af(0, {3})}, {af(0, {1}), af(0, {1}), af(0, {1})}, af(0, {1})}});
    t.push_back({4,
                 {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}},
                 {1, 0, 20, 96, 1188, 10560, 111440},
                 {4, 1, {af(0, {2}), af(0, {2})},
                  {af(0, {1}), af(0, {1}), af(0, {1}), af(0, {1})}, af(0, {1})}});
    t.push_back({5,
                 {{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}},
                 {1, 0, 10, 30, 270, 1560, 11350},
                 {3, 2, {af(0, {1, 2}), af(0, {1, 1})},
                  {af(0, {1, 0}), af(0, {1, 0}), af(0, {0, 1}), af(0, {0, 1}), af(0, {0, 1})},
                  af(0, {1, 1})}});
    t.push_back({6,
                 {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
                 {1, 0, 6, 12, 90, 360},
                 {0, 4, {af(0, {1, 2, 2, 1})},
                  {af(0, {1, 0, 0, 0}), af(0, {0, 1, 0, 0}), af(0, {0, 0, 1, 0}),
                   af(0, {0, 0, 0, 1}), af(0, {1, 1, 0, -1}), af(0, {-1, 0, 1, 1})},
                  af(0, {1, 2, 2, 1})}});
    t.push_back({7,
                 {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}},
                 {1, 0, 4, 6, 36, 120},
                 {0, 3, {af(0, {1, 1, 1})},
                  {af(0, {1, 0, 0}), af(0, {0, 1, 0}), af(0, {1, 1, -1}),
                   af(0, {-1, 0, 1}), af(0, {0, -1, 1})},
                  af(0, {1, 1, 1})}});
    t.push_back({8,
                 {{1, 0}, {0, 1}, {-1, -1}, {0, -1}},
                 {1, 0, 2, 6, 6, 60, 110},
                 {0, 2, {af(0, {1, 2})},
                  {af(0, {1, 0}), af(0, {1, 0}), af(0, {-1, 1}), af(0, {0, 1})},
                  af(0, {1, 2})}});
    t.push_back({9,
                 {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                 {1, 0, 4, 0, 36, 0, 400},
                 {0, 2, {af(0, {2, 2})},
                  {af(0, {1, 0}), af(0, {1, 0}), af(0, {0, 1}), af(0, {0, 1})},
                  af(0, {2, 2})}});
    t.push_back({10,
                 {{1, 0}, {0, 1}, {-1, -1}},
                 {1, 0, 0, 1, 0, 0, 6, 0, 0, 90},
                 {0, 1, {af(0, {3})}, {af(0, {1}), af(0, {1}), af(0, {1})}, af(0, {3})}});
    return t;
}

std::string content_str(const SingularityContent& c) {
    std::string s = "(" + std::to_string(c.t_cones) + ", [";
    for (std::size_t i = 0; i < c.basket.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(c.basket[i].residue) + "/" + std::to_string(c.basket[i].height);
    }
    return s + "])";
}

} // namespace

int main(int argc, char** argv) {
    std::string out_path = argc > 1 ? argv[1] : "data/catalog.json";
    Catalog cat;
    int bad = 0;
    for (const RawEntry& raw : source_table()) {
        ReferenceEntry e;
        e.id = raw.id;
        e.polygon = normal_form(validate_fano(raw.vertices));
        e.content = singularity_content(e.polygon);
        e.normal_index = normal_vector_index(e.polygon);
        e.boundary_points = boundary_lattice_count(e.polygon);
        MmlpResult mm = mmlp(e.polygon);
        e.mmlp = mm.poly;
        for (i64 c : raw.printed) e.printed_period.push_back(Rat(c));
        e.computed_period = period_coefficients(e.mmlp, 10);
        e.closed_form = raw.closed_form;

        std::printf("entry %2d: content %s normal_index %lld boundary %lld dim %zu\n",
                    e.id, content_str(e.content).c_str(),
                    (long long)e.normal_index, (long long)e.boundary_points,
                    mm.solution_dim);
        std::printf("          period:");
        for (std::size_t d = 0; d <= 8; ++d)
            std::printf(" %s", rat_to_string(e.computed_period[d]).c_str());
        std::printf("\n");
        if (e.computed_period[1] != 0) {
            std::printf("          ERROR: linear coefficient nonzero\n");
            ++bad;
        }
        cat.entries.push_back(std::move(e));
    }

    // Fingerprints must be pairwise distinct up to degree 8.
    for (std::size_t i = 0; i < cat.entries.size(); ++i)
        for (std::size_t j = i + 1; j < cat.entries.size(); ++j) {
            bool same = true;
            for (std::size_t d = 0; d <= 8 && same; ++d)
                same = (cat.entries[i].computed_period[d] == cat.entries[j].computed_period[d]);
            if (same) {
                std::printf("ERROR: entries %d and %d share a fingerprint\n",
                            cat.entries[i].id, cat.entries[j].id);
                ++bad;
            }
        }

    // Round-trip through JSON must be lossless.
    std::string text = catalog_to_json(cat);
    Catalog back = catalog_from_json_text(text);
    std::string text2 = catalog_to_json(back);
    if (text != text2) {
        std::printf("ERROR: JSON round trip is not stable\n");
        ++bad;
    }

    if (bad) {
        std::printf("%d problem(s); not writing %s\n", bad, out_path.c_str());
        return 1;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::printf("cannot write %s\n", out_path.c_str());
        return 1;
    }
    out << text;
    std::printf("wrote %s (%zu bytes)\n", out_path.c_str(), text.size());
    return 0;
}
