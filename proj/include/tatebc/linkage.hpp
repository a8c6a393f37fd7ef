// Representations of G = H^p with the cyclic shift, their sigma-extensions,
// and Tate cohomology as a representation of the fixed group.
#pragma once

#include <optional>

#include "tatebc/group.hpp"
#include "tatebc/sigma_module.hpp"

namespace tatebc {

/// Pi together with A : Pi -> Pi o sigma, i.e. Pi(sigma g) = A Pi(g) A^{-1}, A^p = 1.
struct SigmaExtendedRep {
  SigmaGroup S;
  GroupRep Pi;
  Mat A;

  /// Checks the intertwining identity on generators and A^p = 1.
  static SigmaExtendedRep make(SigmaGroup S, GroupRep Pi, Mat A);
};

/// pi^{(x)p} on H^p with A the factor rotation (last factor first).
SigmaExtendedRep box_power(const GroupRep& pi, std::uint32_t p);

/// The unique extension of an absolutely irreducible sigma-fixed Pi. Requires
/// char k = p. Throws std::invalid_argument ("not sigma-fixed", "not
/// absolutely irreducible").
SigmaExtendedRep extend_action(const GroupRep& Pi, const SigmaGroup& S);
/// Rescales a given intertwiner A0 (A0^p = c) to A0 / c^{1/p}.
SigmaExtendedRep normalize_extension(const GroupRep& Pi, const SigmaGroup& S, const Mat& A0);

struct TateReps {
  GroupRep T0, T1;
  Subquotient q0, q1;
};
/// T^0 = ker(1 - A)/im N, T^1 = ker N/im(1 - A) as representations of Hgrp,
/// which maps into G^sigma by embed.
TateReps tate_of_rep(const SigmaExtendedRep& E, const GroupPtr& Hgrp, const std::vector<std::uint32_t>& embed);
/// Same with Hgrp = G^sigma as its own group.
TateReps tate_of_rep(const SigmaExtendedRep& E);

/// An invertible intertwiner T with T a(g) = b(g) T, if one exists.
std::optional<Mat> find_isomorphism(const GroupRep& a, const GroupRep& b);

/// v (x) ... (x) v, p factors.
Vec tensor_power(const Field& f, const Vec& v, std::uint32_t p);

struct LinkageReport {
  std::size_t dim_pi = 0, dim_Pi = 0;
  std::size_t t0_dim = 0, t1_dim = 0;
  bool extension_is_rotation = false;
  bool t0_iso_twist = false;  // certified by `iso`
  bool t0_iso_pi = false;
  bool t1_iso_twist = false;  // observation only
  Mat iso;
  bool pass() const { return t0_iso_twist && extension_is_rotation; }
};
/// Builds pi^{(x)p}, extends the action, computes T^0 and T^1 as H-reps and
/// certifies T^0 = pi^(p).
LinkageReport linkage_report(const GroupRep& pi, std::uint32_t p);

}  // namespace tatebc
