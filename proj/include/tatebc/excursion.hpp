// Excursion algebras for a finite group Gamma and a finite target
// L = Ghat x| Q, realized as functions on the set of Ghat-conjugacy classes of
// homomorphisms Gamma -> L over Q.
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tatebc/group.hpp"
#include "tatebc/random.hpp"

namespace tatebc {

class ParamTarget;
using TargetPtr = std::shared_ptr<const ParamTarget>;

/// Upper bound on brute-forced group orders (env TATE_SMITH_MAX_ORDER, default 48).
std::uint32_t max_search_order();

/**
 * L = Ghat x| Q with (g, q)(g', q') = (g q(g'), q q'). The element (g, q) has
 * code g |Q| + q. Optionally carries an automorphism sigma of L over Q that
 * preserves Ghat, with sigma^p = 1.
 */
class ParamTarget {
 public:
  /// action[q][g] = q(g); checked to be a homomorphism Q -> Aut(Ghat).
  static TargetPtr make(GroupPtr Ghat, GroupPtr Q, std::vector<std::vector<std::uint32_t>> action);
  /// Ghat = Hhat^p with q acting by the shift^{shift[q]}; sigma is the
  /// cyclic shift on Ghat and the identity on Q. shift must be a
  /// homomorphism Q -> Z/p.
  static TargetPtr base_change(const GroupPtr& Hhat, const GroupPtr& Q, std::uint32_t p,
                               const std::vector<std::uint32_t>& shift);
  /// A copy carrying sigma (element map of L).
  TargetPtr with_sigma(std::vector<std::uint32_t> sigma, std::uint32_t p) const;

  const GroupPtr& ghat() const { return Ghat_; }
  const GroupPtr& quotient() const { return Q_; }
  const GroupPtr& group() const { return L_; }
  std::uint32_t order() const { return L_->order(); }
  const std::vector<std::vector<std::uint32_t>>& action() const { return action_; }

  std::uint32_t proj(std::uint32_t l) const { return l % Q_->order(); }
  std::uint32_t ghat_part(std::uint32_t l) const { return l / Q_->order(); }
  std::uint32_t embed(std::uint32_t g, std::uint32_t q) const { return g * Q_->order() + q; }
  std::uint32_t from_ghat(std::uint32_t g) const { return embed(g, Q_->identity()); }
  /// Generators of Ghat as elements of L.
  const std::vector<std::uint32_t>& ghat_generators() const { return ghat_gens_; }

  bool has_sigma() const { return sigma_p_ != 0; }
  std::uint32_t sigma_order() const { return sigma_p_; }
  /// sigma^k(l); k may be negative.
  std::uint32_t sigma_pow(std::uint32_t l, long k) const;

  /// Ghat-orbit ids of L^n under diagonal left and right translation.
  struct Orbits {
    std::vector<std::uint32_t> id;
    std::size_t count = 0;
  };
  const Orbits& orbits(std::size_t n) const;
  std::size_t tuple_index(const std::vector<std::uint32_t>& t) const;
  std::vector<std::uint32_t> tuple_at(std::size_t index, std::size_t n) const;

 private:
  GroupPtr Ghat_, Q_, L_;
  std::vector<std::vector<std::uint32_t>> action_;
  std::vector<std::uint32_t> ghat_gens_;
  std::vector<std::uint32_t> sigma_;
  std::uint32_t sigma_p_ = 0;
  mutable std::map<std::size_t, std::shared_ptr<const Orbits>> orbit_cache_;
};

/// Gamma together with a surjective homomorphism onto Q.
struct GammaData {
  GroupPtr G;
  std::vector<std::uint32_t> to_Q;

  static GammaData make(GroupPtr G, std::vector<std::uint32_t> to_Q, const GroupPtr& Q);
  /// Gamma -> 1.
  static GammaData over_trivial(GroupPtr G);
};

/// A homomorphism Gamma -> L, as the image of every element.
using Hom = std::vector<std::uint32_t>;

/// All homomorphisms Gamma -> L over Q.
std::vector<Hom> over_q_homs(const GammaData& Gm, const ParamTarget& T);
/// The Ghat-conjugate whose generator-image tuple is lexicographically smallest.
Hom canonical_rep(const GammaData& Gm, const ParamTarget& T, const Hom& rho);
/// Canonical representatives of the Ghat-conjugacy classes, sorted.
std::vector<Hom> rep_stack(const GammaData& Gm, const ParamTarget& T);

/// A k-valued function on L^n invariant under diagonal left and right
/// Ghat-translation. Index order: first coordinate most significant.
class InvariantFunction {
 public:
  InvariantFunction() = default;
  /// Throws std::invalid_argument if the table is not bi-invariant.
  static InvariantFunction make(TargetPtr T, Field f, std::size_t n, Vec table);
  static InvariantFunction from_function(TargetPtr T, Field f, std::size_t n,
                                         const std::function<Elem(const std::vector<std::uint32_t>&)>& fn);
  static InvariantFunction constant(TargetPtr T, Field f, std::size_t n, Elem c);
  static InvariantFunction random(TargetPtr T, Field f, std::size_t n, Rng& rng);
  static InvariantFunction orbit_indicator(TargetPtr T, Field f, std::size_t n, std::size_t orbit);

  const TargetPtr& target() const { return T_; }
  const Field& field() const { return f_; }
  std::size_t arity() const { return n_; }
  const Vec& table() const { return table_; }
  Elem operator()(const std::vector<std::uint32_t>& g) const { return table_[T_->tuple_index(g)]; }

  InvariantFunction operator+(const InvariantFunction& o) const;
  InvariantFunction operator*(const InvariantFunction& o) const;
  InvariantFunction scaled(Elem s) const;

 private:
  TargetPtr T_;
  Field f_;
  std::size_t n_ = 0;
  Vec table_;
};

enum class Convention {
  LastIndex,  // f(rho(g_0 g_n), ..., rho(g_{n-1} g_n), rho(g_n))
  Naive       // f(rho(g_0), ..., rho(g_n))
};

/// S_{I, f, (gamma_i)}.
struct FirstGen {
  InvariantFunction f;
  std::vector<std::uint32_t> gamma;
};

Elem eval_gen(const GammaData& Gm, const FirstGen& S, const Hom& rho, Convention c = Convention::LastIndex);
/// (gamma_i gamma_n)_{i<n}, gamma_n: last-index evaluation of gamma equals naive evaluation of this.
std::vector<std::uint32_t> reparametrize(const GammaData& Gm, const std::vector<std::uint32_t>& gamma);

/**
 * A representation of L^I on k^d, given by commuting families
 * rho_i : L -> GL_d(k), i in I; (g_i) acts by the product of the rho_i(g_i).
 */
class LRep {
 public:
  LRep() = default;
  /// images[i][l]. Checks the homomorphism property and commutation.
  static LRep make(TargetPtr T, Field f, std::size_t dim, std::vector<std::vector<Mat>> images);
  /// A representation of L placed on a single index.
  static LRep from_rep(TargetPtr T, const GroupRep& R);
  /// Trivial action of L^n on k^dim.
  static LRep trivial(TargetPtr T, Field f, std::size_t n, std::size_t dim = 1);

  const TargetPtr& target() const { return T_; }
  const Field& field() const { return f_; }
  std::size_t arity() const { return images_.size(); }
  std::size_t dim() const { return d_; }
  const Mat& image(std::size_t i, std::uint32_t l) const { return images_[i][l]; }
  Vec act(const std::vector<std::uint32_t>& g, const Vec& v) const;
  Mat act_matrix(const std::vector<std::uint32_t>& g) const;
  /// Action of l embedded diagonally.
  Mat diagonal(std::uint32_t l) const;
  /// Rows spanning the diagonal-Ghat invariants of W and of W*.
  Mat invariant_vectors() const;
  Mat invariant_functionals() const;

  friend LRep box(const LRep& a, const LRep& b);
  friend LRep tensor(const LRep& a, const LRep& b);
  friend LRep direct_sum(const LRep& a, const LRep& b);
  friend LRep disjoint_sum(const LRep& a, const LRep& b);
  friend LRep dual(const LRep& a);
  friend LRep restrict_along(const LRep& a, const std::vector<std::uint32_t>& zeta, std::size_t arity);
  friend LRep pullback(const LRep& a, TargetPtr src, const std::vector<std::uint32_t>& phi);
  friend LRep sigma_twist(const LRep& a, long k);

 private:
  TargetPtr T_;
  Field f_;
  std::size_t d_ = 0;
  std::vector<std::vector<Mat>> images_;
};

/// W1 on I1 and W2 on I2 give W1 (x) W2 on I1 + I2.
LRep box(const LRep& a, const LRep& b);
/// Same index set, tensor product of spaces.
LRep tensor(const LRep& a, const LRep& b);
/// Same index set, direct sum.
LRep direct_sum(const LRep& a, const LRep& b);
/// W1 on I1 and W2 on I2 give W1 + W2 on I1 + I2, each trivial on the other indices.
LRep disjoint_sum(const LRep& a, const LRep& b);
/// rho_i(l^{-1})^T.
LRep dual(const LRep& a);
/// W^zeta for zeta : I -> J: rho'_j = product of rho_i over the fibre of j.
LRep restrict_along(const LRep& a, const std::vector<std::uint32_t>& zeta, std::size_t arity);
/// W o phi for phi : L_src -> L (element map).
LRep pullback(const LRep& a, TargetPtr src, const std::vector<std::uint32_t>& phi);
/// W o sigma^{-k}.
LRep sigma_twist(const LRep& a, long k);

/// S_{I, W, x, xi, (gamma_i)}.
struct SecondGen {
  LRep W;
  Vec x, xi;
  std::vector<std::uint32_t> gamma;

  /// Throws std::invalid_argument if x or xi is not diagonal-Ghat invariant.
  static SecondGen make(LRep W, Vec x, Vec xi, std::vector<std::uint32_t> gamma);
};

/// <xi, (rho(gamma_i))_i . x>
Elem eval_gen(const SecondGen& S, const Hom& rho);
/// f_{x,xi}(g) = <xi, g . x>, re-verified bi-invariant.
InvariantFunction bridge_f(const LRep& W, const Vec& x, const Vec& xi);

/// Small representations of L: trivial, permutation representations on
/// L/C for cyclic C with index at most max_dim, and their determinants.
std::vector<GroupRep> small_reps(const TargetPtr& T, const Field& f, std::size_t max_dim);
/// Box product of random small representations with random invariant x, xi.
SecondGen random_second_gen(const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t arity,
                            std::size_t max_dim, Rng& rng);

/**
 * Cohomology-like family W -> H_I(W) with a Gamma^I action and fusion
 * isomorphisms. Spaces live inside a fixed ambient space per W; basis gives
 * the subspace (rows).
 */
class AdmissibleFamily {
 public:
  virtual ~AdmissibleFamily() = default;
  virtual std::size_t ambient(const LRep& W) const = 0;
  virtual Mat basis(const LRep& W) const = 0;
  /// H(u) for u : W -> W2 equivariant for the diagonal Ghat (u is W2.dim x W.dim).
  virtual Mat functor(const LRep& W, const LRep& W2, const Mat& u) const = 0;
  virtual Mat action(const LRep& W, const std::vector<std::uint32_t>& gamma) const = 0;
  /// chi_zeta : H_I(W) -> H_J(W^zeta).
  virtual Mat fusion(const LRep& W, const std::vector<std::uint32_t>& zeta, std::size_t arity) const = 0;
};

/// H_I(W) = Ghat-equivariant maps from the over-Q homomorphisms to W, with
/// (gamma_i) acting at rho through (rho(gamma_i))_i.
class TautologicalFamily : public AdmissibleFamily {
 public:
  TautologicalFamily(GammaData Gm, TargetPtr T);
  const std::vector<Hom>& homs() const { return homs_; }
  /// Canonical representatives, in the order of the basis of H_{0}(1).
  const std::vector<Hom>& points() const { return points_; }

  std::size_t ambient(const LRep& W) const override { return homs_.size() * W.dim(); }
  Mat basis(const LRep& W) const override;
  Mat functor(const LRep& W, const LRep& W2, const Mat& u) const override;
  Mat action(const LRep& W, const std::vector<std::uint32_t>& gamma) const override;
  Mat fusion(const LRep& W, const std::vector<std::uint32_t>& zeta, std::size_t arity) const override;
  /// The row of H_{0}(1) given by the indicator of the orbit of points()[k].
  Vec point_indicator(std::size_t k, const Field& f) const;

 private:
  GammaData Gm_;
  TargetPtr T_;
  std::vector<Hom> homs_, points_;
  std::vector<std::size_t> point_of_;
};

/**
 * The endomorphism of H_{0}(1) given by H(xi) . chi (gamma_i) chi^{-1} . H(x),
 * in the basis of point indicators. Runs the fusion self-test first and
 * throws std::logic_error if it fails.
 */
Mat eval_construction(const TautologicalFamily& family, const SecondGen& S);

/// An admissible homomorphism L_src -> L_dst over Q with phi(Ghat_src) in Ghat_dst.
struct TargetHom {
  TargetPtr src, dst;
  std::vector<std::uint32_t> map;

  static TargetHom make(TargetPtr src, TargetPtr dst, std::vector<std::uint32_t> map);
  static TargetHom identity(const TargetPtr& T);
  /// (h, q) -> (diagonal(h), q) from Hhat x Q into the base-change target.
  static TargetHom base_change_diagonal(const TargetPtr& H, const TargetPtr& G, std::uint32_t p);
};

Hom compose(const TargetHom& phi, const Hom& rho);
FirstGen pullback(const TargetHom& phi, const FirstGen& S);
SecondGen pullback(const TargetHom& phi, const SecondGen& S);

struct PointCheck {
  std::size_t points = 0;
  std::size_t failures = 0;
};
/// eval(phi^* S, rho) = eval(S, phi o rho) over rep_stack(Gm, src).
PointCheck pullback_check(const TargetHom& phi, const GammaData& Gm, const FirstGen& S, Convention c);
PointCheck pullback_check(const TargetHom& phi, const GammaData& Gm, const SecondGen& S);

/// A generator together with its sigma-equivariant structure A : W -> sigma(W).
struct EquivariantGen {
  SecondGen gen;
  Mat A;
};
/// (W o sigma^{-1}, x, xi, gamma).
SecondGen sigma_gen(const SecondGen& S, long k = 1);
/// W (x) sigma W (x) ... with x^{(x)p}, xi^{(x)p} and the factor rotation.
EquivariantGen norm_gen(const SecondGen& S);
/// W + sigma W + ... with diagonal x, summed xi and the block rotation.
EquivariantGen n_dot_gen(const SecondGen& S);

struct NormCheck {
  std::size_t points = 0;
  std::size_t norm_failures = 0;
  std::size_t sum_failures = 0;
};
/// Pointwise eval(Nm S) = prod_k eval(sigma^k S) and eval(N.S) = sum_k eval(sigma^k S).
NormCheck norm_identities(const GammaData& Gm, const SecondGen& S);

struct CheckLine {
  std::string id;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool informational = false;
};
struct SuiteReport {
  std::vector<CheckLine> lines;
  bool pass() const;
};

/**
 * Relations (i)-(v) of the first presentation under the naive convention,
 * the second-presentation relations, the bridge, the tautological-family
 * oracle and conjugation invariance, each on `instances` random instances.
 * The first-presentation relations under the last-index convention are
 * recorded as informational lines.
 */
SuiteReport relation_suite(const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t instances, Rng& rng);

/// Row basis of the subalgebra of Fun(rep_stack) generated by evaluations of
/// orbit indicators of arity <= max_arity; throws std::domain_error when not
/// multiplicatively closed after degree_cap rounds.
Mat generated_subalgebra(const GammaData& Gm, const TargetPtr& T, const Field& f, Convention c,
                         std::size_t max_arity = 3, std::size_t degree_cap = 4);

struct BijectionReport {
  std::size_t points = 0;
  std::size_t characters = 0;  // point-separation classes
  std::size_t algebra_dim = 0;
  bool conventions_agree = false;
  bool pass() const { return characters == points && algebra_dim == points && conventions_agree; }
};
BijectionReport character_bijection_report(const GammaData& Gm, const TargetPtr& T, const Field& f,
                                           std::size_t max_arity = 3, std::size_t degree_cap = 4);

}  // namespace tatebc
