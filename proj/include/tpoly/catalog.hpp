#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tpoly/laurent.hpp"
#include "tpoly/polygon.hpp"

namespace tpoly {

// Affine integer form a0 + sum a_i * idx_i in the summation indices.
struct AffineForm {
    i64 constant = 0;
    std::vector<i64> coeffs; // one per index variable
    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// Declarative closed form for a period sequence:
//   e^(-prefactor * t) * sum over nonnegative index tuples of
//     t^degree * prod(numerator factorials) / prod(denominator factorials).
// A term whose factorial argument goes negative is skipped, which encodes all
// the printed summation constraints (they appear as denominator factorials).
struct ClosedForm {
    i64 prefactor = 0;                   // c in the e^(-c t) display factor
    std::size_t num_indices = 0;         // free summation indices (up to 4 used)
    std::vector<AffineForm> numerator;   // factorial factors multiplied
    std::vector<AffineForm> denominator; // factorial factors divided
    AffineForm degree;                   // t-exponent as a function of the indices
    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

// Evaluates the closed form as series coefficients c_0..c_horizon: the sum is
// enumerated over all index tuples whose degree lands in range (every degree
// coefficient must be positive for the enumeration to terminate), then
// multiplied by the exact truncation of the exponential prefactor.
std::vector<Rat> evaluate_closed_form(const ClosedForm& cf, std::size_t horizon);

struct ReferenceEntry {
    int id = 0;                        // 1..10
    FanoPolygon polygon;               // representative in normal form
    SingularityContent content;
    i64 normal_index = 1;              // index of the span of the edge normals
    i64 boundary_points = 0;           // boundary lattice point count
    LaurentPoly mmlp;                  // normalized distinguished polynomial
    std::vector<Rat> printed_period;   // transcribed reference coefficients
    std::vector<Rat> computed_period;  // recomputed constant terms, same source
    std::optional<ClosedForm> closed_form;
};

struct Catalog {
    std::vector<ReferenceEntry> entries;
};

// Loads the catalog: explicit path if nonempty, else $TPOLY_CATALOG, else the
// built-in default path.  Errors: invalid_argument on unreadable or malformed
// input.
Catalog load_catalog(const std::string& explicit_path = "");

// Closed-form series of the catalog entry with the given id, to order dmax.
// Errors: unknown_id (no such entry or entry without a closed form).
std::vector<Rat> closed_form_series(const Catalog& cat, int id, std::size_t dmax);

// Identifies a period fingerprint against the stored computed sequences by
// exact agreement on the common horizon.  Requires horizon >= 6 (errors:
// invalid_argument below that); returns the entry id or nullopt.
std::optional<int> match_period(const Catalog& cat, const PeriodFingerprint& fp);

// One report item from catalog validation.
struct CatalogDiscrepancy {
    int id = 0;
    std::string kind; // "printed-vs-computed" | "closed-form-vs-computed" | "integrity"
    std::size_t degree = 0;
    Rat expected;     // recomputed value
    Rat stated;       // transcribed value
    std::string note; // human-readable description
};

struct CatalogValidation {
    bool printed_all_match = false;
    std::vector<CatalogDiscrepancy> discrepancies;
};

// Cross-checks every entry: re-derives the distinguished polynomial from the
// polygon, recomputes content, normal index, boundary count and the period,
// then compares the computed coefficients against the printed sequence and
// the closed form.  Differences are report items, never errors.
CatalogValidation validate_catalog(const Catalog& cat, std::size_t horizon = 6);

} // namespace tpoly
