// Base change for the torus case: parity objects on a discrete Grassmannian
// are finitely supported multiplicity functions on a character lattice Z^r.
#pragma once

#include <map>
#include <vector>

#include "tatebc/matrix.hpp"
#include "tatebc/random.hpp"

namespace tatebc {

using Label = std::vector<long long>;

/// Multiplicity function on Z^rank; zero multiplicities are not stored.
struct TorusObject {
  std::uint32_t rank = 1;
  std::map<Label, std::size_t> support;

  /// Throws std::invalid_argument on a label of the wrong length.
  static TorusObject make(std::uint32_t rank, const std::vector<std::pair<Label, std::size_t>>& entries);
  std::size_t mult(const Label& l) const;
  std::size_t total() const;
  bool is_zero() const { return support.empty(); }
  friend bool operator==(const TorusObject&, const TorusObject&) = default;
};

TorusObject direct_sum(const TorusObject& a, const TorusObject& b);

/// One block per label of src or dst, of shape dst.mult x src.mult.
struct TorusMorphism {
  Field f;
  TorusObject src, dst;
  std::map<Label, Mat> blocks;

  /// Missing labels get zero blocks; throws on a block of the wrong shape or a
  /// label outside both supports.
  static TorusMorphism make(Field f, TorusObject src, TorusObject dst, std::map<Label, Mat> blocks);
  static TorusMorphism identity(const Field& f, const TorusObject& X);
  static TorusMorphism scalar(const Field& f, const TorusObject& X, Elem lambda);
  const Mat& block(const Label& l) const { return blocks.at(l); }
  friend bool operator==(const TorusMorphism&, const TorusMorphism&);
};

/// psi o phi. Throws if phi.dst != psi.src.
TorusMorphism compose(const TorusMorphism& psi, const TorusMorphism& phi);
TorusMorphism operator+(const TorusMorphism& a, const TorusMorphism& b);
TorusMorphism scaled(const TorusMorphism& a, Elem s);
TorusMorphism direct_sum(const TorusMorphism& a, const TorusMorphism& b);

/// (n_1, ..., n_p) -> (s, ..., s) with s = n_1 + ... + n_p. Throws for even p.
TorusObject nm_obj(const TorusObject& F);
/// Nm on morphisms: blocks regrouped by the diagonal label, entries raised to the p-th power.
TorusMorphism nm_mor(const TorusMorphism& phi);
/// (n_1, ..., n_p) -> n_1 + ... + n_p on rank 1. Throws for even p.
TorusObject bc_obj(const TorusObject& F);
/// Nm followed by the inverse Frobenius twist, on rank-1 labels. Requires char k = p.
TorusMorphism bc_mor(const TorusMorphism& phi);

/// Restriction of characters along the diagonal Z -> Z^p: coordinates add.
std::map<long long, std::size_t> res_bc_oracle(const TorusObject& V);

TorusObject random_torus_object(std::uint32_t rank, Rng& rng, std::size_t max_labels = 5, long long range = 4);
TorusMorphism random_torus_morphism(const Field& f, const TorusObject& src, const TorusObject& dst, Rng& rng);

}  // namespace tatebc
