// Small named instances shared by the self-test and the command line.
#pragma once

#include "tatebc/excursion.hpp"
#include "tatebc/group.hpp"

namespace tatebc {

/// The 2-dimensional summand of the permutation representation of S_3.
GroupRep s3_standard_rep(const GroupPtr& s3, const Field& f);
/// g -> sign of the permutation, for a group built from permutations.
GroupRep sign_rep(const GroupPtr& G, const Field& f);
/// The character of a cyclic group sending its generator to z.
GroupRep cyclic_character(const GroupPtr& cn, const Field& f, Elem z);
/// Some element of multiplicative order n; throws std::domain_error if none.
Elem field_element_of_order(const Field& f, std::uint32_t n);
/// Some element of order n, or the identity.
std::uint32_t group_element_of_order(const FiniteGroup& G, std::uint32_t n);

/// G x| 1.
TargetPtr split_target(const GroupPtr& G);
/// G x| C_k with the generator of C_k acting by conjugation by c.
TargetPtr conj_target(const GroupPtr& G, std::uint32_t c, std::uint32_t k);
/// Gamma = C_{kn} mapping onto C_k by reduction.
GammaData cyclic_over_cyclic(std::uint32_t kn, std::uint32_t k);

}  // namespace tatebc
