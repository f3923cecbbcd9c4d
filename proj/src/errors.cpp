#include "sumstruct/errors.hpp"

namespace sumstruct {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::empty_spec: return "EmptySpec";
    case Errc::factor_too_small: return "FactorTooSmall";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::lattice_cap_exceeded: return "LatticeCapExceeded";
    case Errc::not_a_subgroup: return "NotASubgroup";
    case Errc::not_subgroup_of_g: return "NotSubgroupOfG";
    case Errc::length_cap_exceeded: return "LengthCapExceeded";
    case Errc::empty_set: return "EmptySet";
    case Errc::non_positive_l: return "NonPositiveL";
    case Errc::set_too_small: return "SetTooSmall";
    case Errc::no_disjoint_representation: return "NoDisjointRepresentation";
    case Errc::epsilon_out_of_range: return "EpsilonOutOfRange";
    case Errc::not_prime: return "NotPrime";
    case Errc::p_too_large: return "PTooLarge";
    case Errc::p_too_small: return "PTooSmall";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::not_incomplete: return "NotIncomplete";
    case Errc::not_composite: return "NotComposite";
    case Errc::primes_out_of_order: return "PrimesOutOfOrder";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::usage: return "Usage";
    }
    return "Unknown";
}

} // namespace sumstruct
