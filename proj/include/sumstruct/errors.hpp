#pragma once

#include <stdexcept>
#include <string>

namespace sumstruct {

enum class Errc {
    empty_spec,
    factor_too_small,
    order_cap_exceeded,
    index_out_of_range,
    lattice_cap_exceeded,
    not_a_subgroup,
    not_subgroup_of_g,
    length_cap_exceeded,
    empty_set,
    non_positive_l,
    set_too_small,
    no_disjoint_representation,
    epsilon_out_of_range,
    not_prime,
    p_too_large,
    p_too_small,
    cap_exceeded,
    not_incomplete,
    not_composite,
    primes_out_of_order,
    precondition_violated,
    usage,
};

const char* errc_name(Errc c);

/// Library-wide exception. `detail` carries an operation-specific index
/// (e.g. the failing target position of a greedy representation search);
/// -1 when unused.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg, long long detail = -1)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
          code_(code),
          detail_(detail) {}

    Errc code() const noexcept { return code_; }
    long long detail() const noexcept { return detail_; }

private:
    Errc code_;
    long long detail_;
};

} // namespace sumstruct
