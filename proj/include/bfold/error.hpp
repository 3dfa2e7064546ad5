#pragma once

#include <stdexcept>
#include <string>

namespace bfold {

// Error codes shared by the C++ core, the C API and the CLI.  Every throwing
// operation uses one of these codes so callers can map failures to stable
// numeric identifiers and exit codes.
enum class ErrorCode : int {
    none = 0,
    duplicate_vertex_in_simplex,
    unknown_vertex,
    apex_collision,
    not_pseudo_manifold,
    not_a_subcomplex,
    group_too_large,
    not_subgroup,
    bad_permutation,
    cocycle_invalid,
    base_not_pseudo_manifold,
    branch_locus_not_good,
    incompatible_complexes,
    total_not_connected,
    bases_differ,
    neither_regular,
    dimension_not_two,
    not_a_branched_covering,
    not_simplicial,
    not_effective,
    not_good_action,
    chart_invalid,
    not_conical,
    not_codim_two,
    inconsistent_models,
    singular_locus_not_codim_two,
    not_liftable,
    orientation_violation,
    not_equivalent,
    param_out_of_range,
    io_failure,
    usage_error,
    internal_error,
};

const char* error_code_name(ErrorCode code);

// Exception type carrying a stable error code alongside the message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, ErrorCode code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace bfold
