// Hecke algebras of a finite group G relative to a subgroup K, realized as
// G-invariant functions on (G/K)^2, and the restriction to sigma-fixed points.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tatebc/group.hpp"
#include "tatebc/random.hpp"
#include "tatebc/sigma_module.hpp"

namespace tatebc {

class HeckeSpace;
using HeckeSpacePtr = std::shared_ptr<const HeckeSpace>;

/// Coset data for G/K. Coset 0 is K itself.
class HeckeSpace {
 public:
  static HeckeSpacePtr make(GroupPtr G, std::vector<std::uint32_t> K, Field f);

  const GroupPtr& group() const { return G_; }
  const Field& field() const { return f_; }
  const std::vector<std::uint32_t>& subgroup() const { return K_; }
  std::size_t coset_count() const { return reps_.size(); }
  std::uint32_t coset_of(std::uint32_t g) const { return coset_of_[g]; }
  std::uint32_t rep(std::size_t y) const { return reps_[y]; }
  /// g . (x K)
  std::uint32_t act(std::uint32_t g, std::size_t y) const { return coset_of_[G_->mul(g, reps_[y])]; }
  /// K-orbits on G/K (double cosets K g K).
  std::size_t double_coset_count() const { return dc_members_.size(); }
  std::size_t double_coset_of(std::size_t y) const { return dc_of_[y]; }
  const std::vector<std::uint32_t>& double_coset(std::size_t i) const { return dc_members_[i]; }

 private:
  GroupPtr G_;
  Field f_;
  std::vector<std::uint32_t> K_, coset_of_, reps_, dc_of_;
  std::vector<std::vector<std::uint32_t>> dc_members_;
};

/**
 * f in Fun_G((G/K)^2), stored as the row y -> f(K, y), which is constant on
 * K-orbits; f(xK, zK) = f(K, x^{-1} z K).
 */
class HeckeElement {
 public:
  HeckeElement() = default;
  /// Throws std::invalid_argument if row is not K-invariant.
  HeckeElement(HeckeSpacePtr space, Vec row);
  static HeckeElement zero(HeckeSpacePtr space);
  static HeckeElement unit(HeckeSpacePtr space);
  /// Indicator of the G-orbit of (K, K g K).
  static HeckeElement basis(HeckeSpacePtr space, std::size_t double_coset);

  const HeckeSpacePtr& space() const { return space_; }
  const Vec& row() const { return row_; }
  Elem value(std::size_t x, std::size_t z) const;

  HeckeElement operator+(const HeckeElement& o) const;
  HeckeElement scaled(Elem s) const;
  bool is_zero() const { return vec_is_zero(row_); }
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

 private:
  HeckeSpacePtr space_;
  Vec row_;
};

/// (f * g)(K, z) = sum_y f(K, y) g(y, z). Throws if the spaces differ.
HeckeElement convolve(const HeckeElement& f, const HeckeElement& g);
std::vector<HeckeElement> hecke_basis(const HeckeSpacePtr& space);
HeckeElement random_hecke_element(const HeckeSpacePtr& space, Rng& rng);

// ---------------------------------------------------------------- sigma

/// sigma(K) = K.
bool is_sigma_stable(const SigmaGroup& S, const std::vector<std::uint32_t>& K);
/// Every sigma-fixed coset of K contains an element of H. Throws if K is not sigma-stable.
bool is_plain(const SigmaGroup& S, const std::vector<std::uint32_t>& K);
/// (sigma f)(x, y) = f(sigma^{-1} x, sigma^{-1} y).
HeckeElement sigma_apply(const SigmaGroup& S, const HeckeElement& f);
bool is_sigma_invariant(const SigmaGroup& S, const HeckeElement& f);
/// Sums of sigma-orbits of the double-coset basis.
std::vector<HeckeElement> sigma_invariant_basis(const SigmaGroup& S, const HeckeSpacePtr& space);

/// Restriction Fun_G((G/K)^2)^sigma -> Fun_H((H/U)^2), U = K cap H, hU -> hK.
class BrauerMap {
 public:
  /// Throws std::invalid_argument unless K is sigma-stable and plain.
  static BrauerMap make(const SigmaGroup& S, const HeckeSpacePtr& source);
  /// Same restriction without the plainness requirement (for negative controls).
  static BrauerMap unchecked(const SigmaGroup& S, const HeckeSpacePtr& source);

  /// Throws std::invalid_argument if f is not sigma-invariant (checked form only).
  HeckeElement operator()(const HeckeElement& f) const;
  const HeckeSpacePtr& target() const { return target_; }
  const Subgroup& fixed_group() const { return H_; }

 private:
  SigmaGroup S_;
  HeckeSpacePtr source_, target_;
  Subgroup H_;
  bool checked_ = true;
};

/// Basis of Pi^K as rows.
Mat invariants_basis(const GroupRep& Pi, const std::vector<std::uint32_t>& K);
/// Matrix of f acting on Pi^K (in the basis invariants_basis), v -> sum_y f(K,y) Pi(r_y) v.
Mat hecke_action(const HeckeElement& f, const GroupRep& Pi);
/// The vector sum_y f(K,y) Pi(r_y) v in the ambient space.
Vec hecke_apply(const HeckeElement& f, const GroupRep& Pi, const Vec& v);

struct DiagramReport {
  std::size_t invariant_dim = 0;          // dim Pi^K
  std::size_t tate_dims[2] = {0, 0};      // T^0, T^1 of Pi^K
  std::size_t elements_checked = 0;
  std::size_t failures = 0;
  bool pass = false;
};
/**
 * For every sigma-invariant orbit-sum basis element h and every class [v] in
 * T^i(Pi^K), i = 0, 1, checks [h . v] = [Br(h) . v] in T^i(Pi), where A is
 * the sigma-action on Pi (A Pi(g) A^{-1} = Pi(sigma g), A^p = 1).
 */
DiagramReport tate_hecke_diagram(const SigmaGroup& S, const HeckeSpacePtr& space, const GroupRep& Pi, const Mat& A);

// ---------------------------------------------------------------- sigma-algebras

/// Finite-dimensional associative algebra with basis, structure constants and
/// an automorphism of order dividing p (the characteristic).
class SigmaAlgebra {
 public:
  SigmaAlgebra() = default;
  /// mult[i][j] = e_i e_j in coordinates. Checks associativity, unit and that
  /// sigma is an algebra automorphism with sigma^p = 1.
  SigmaAlgebra(Field f, std::vector<std::vector<Vec>> mult, Vec unit, Mat sigma);

  const Field& field() const { return f_; }
  std::size_t dim() const { return unit_.size(); }
  const Vec& one() const { return unit_; }
  Vec mul(const Vec& a, const Vec& b) const;
  Vec sigma(const Vec& a) const { return sigma_.apply(a); }
  const Mat& sigma_matrix() const { return sigma_; }
  Vec basis(std::size_t i) const;
  bool is_commutative() const;

 private:
  Field f_;
  std::vector<std::vector<Vec>> mult_;
  Vec unit_;
  Mat sigma_;
};

/// a sigma(a) ... sigma^{p-1}(a)
Vec ring_norm(const SigmaAlgebra& A, const Vec& a);
/// a + sigma(a) + ... + sigma^{p-1}(a)
Vec ring_N(const SigmaAlgebra& A, const Vec& a);

/// Functions on a finite set with (sigma phi)(s) = phi(sigma^{-1} s); basis delta_s.
SigmaAlgebra fun_algebra(const Field& f, const std::vector<std::uint32_t>& perm);

/// The subalgebra generated by Nm(A) and N.A, as a row basis.
Mat norm_subalgebra(const SigmaAlgebra& A);

/// A linear functional given by its values on the ambient basis.
using Character = Vec;
Elem char_eval(const SigmaAlgebra& A, const Character& chi, const Vec& a);
/// Multiplicative and unital on the span of the given rows.
bool is_character_on(const SigmaAlgebra& A, const Mat& sub, const Character& chi);
/// chi~(a) = frobenius_inv(chi(Nm a)). chi is a character of the subalgebra
/// sub killing N.A. Throws std::invalid_argument if A is not commutative, chi
/// is not a character of sub, or chi(N.A) != 0; throws std::logic_error if
/// the result is not a character.
Character char_extend(const SigmaAlgebra& A, const Mat& sub, const Character& chi);
/// Evaluations at points, the characters of Fun(S).
std::vector<Character> point_characters(std::size_t points, const Field& f);

}  // namespace tatebc
