#pragma once

#include <stdexcept>
#include <string>

namespace tpoly {

// Every failure mode the library reports deliberately.  Each value names the
// condition, not the callsite; `detail` carries the one number that makes the
// condition reproducible (failing height, byte position, solution dimension).
enum class Errc {
    not_convex,
    origin_not_interior,
    non_primitive_vertex,
    not_mutable,
    syntax_error,
    not_t_polygon,
    non_unique_solution,
    inconsistent_constraints,
    not_a_root,
    not_orthonormal_basis,
    wrong_canonical_class,
    not_e8_basis,
    not_in_root_lattice,
    not_anticanonical,
    bad_intersection_pattern,
    not_neg_two_class,
    no_match,
    unknown_id,
    invalid_argument,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, long long detail = 0)
        : std::runtime_error(std::move(message)), code_(code), detail_(detail) {}

    Errc code() const { return code_; }
    // Meaning depends on code(): not_mutable -> failing height,
    // syntax_error -> byte offset, non_unique_solution -> solution dimension.
    long long detail() const { return detail_; }

private:
    Errc code_;
    long long detail_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message, long long detail = 0) {
    throw Error(code, std::string(errc_name(code)) + ": " + message, detail);
}

} // namespace tpoly
