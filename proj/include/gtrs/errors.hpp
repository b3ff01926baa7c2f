#pragma once

#include <stdexcept>
#include <string>

namespace gtrs {

// Every failure the library raises carries one of these kinds, so callers
// (and tests) can dispatch on the cause without parsing messages.
enum class errc {
    // field construction
    not_prime,
    reducible_modulus,
    degree_mismatch,
    field_too_large,
    // element arithmetic
    division_by_zero,
    mixed_fields,
    // group / subfield structure
    not_a_divisor,
    dependent_basis,
    repeated_coset,
    not_a_quotient_subgroup,
    not_a_subfield,
    not_a_subgroup,
    // linear algebra
    dimension_mismatch,
    not_square_matrix,
    rank_deficient,
    // code specs
    repeated_point,
    zero_multiplier,
    invalid_hook,
    infinity_unsupported,
    bad_permutation,
    // verification
    too_large,
    not_mds,
    // construction recipes
    eta_in_forbidden_set,
    not_a_proper_subgroup,
    mersenne_prime_field,
    bad_coset_element,
    eta_not_in_required_coset,
    non_square_kernel_entry,
    bad_beta,
    not_self_orthogonal,
    broken_chain,
    eta_in_wrong_layer,
    alpha_not_in_base,
    case_not_satisfied,
    // I/O and CLI
    bad_argument,
    parse_error,
    corrupt_record,
    // invariant violated inside the library itself; never expected
    internal_check,
};

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    errc kind() const noexcept { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void raise(errc kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, errc kind, const std::string& what) {
    if (!cond) raise(kind, what);
}

}  // namespace gtrs
