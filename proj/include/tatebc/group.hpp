// Finite groups given by multiplication tables, direct products of such,
// groups with an automorphism of prime order, and matrix representations.
#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "tatebc/matrix.hpp"

namespace tatebc {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * Elements are 0..order-1. A group is a direct product of table groups
 * ("factors"); an element code is the mixed-radix number of its factor
 * components, first factor most significant. A plain table group has one
 * factor.
 */
class FiniteGroup {
 public:
  /// Verifies closure, associativity, identity and inverses.
  static GroupPtr from_table(const std::vector<std::vector<std::uint32_t>>& mul);
  /// Closure of permutations of {0..n-1}; element 0 is the identity and the
  /// rest appear in breadth-first order over the generators.
  static GroupPtr from_permutations(const std::vector<std::vector<std::uint32_t>>& gens);
  static GroupPtr cyclic(std::uint32_t n);
  static GroupPtr symmetric(std::uint32_t n);
  static GroupPtr product(const std::vector<GroupPtr>& groups);
  static GroupPtr power(const GroupPtr& h, std::uint32_t k);

  std::uint32_t order() const { return order_; }
  std::uint32_t identity() const { return id_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t conj(std::uint32_t h, std::uint32_t g) const { return mul(mul(h, g), inv(h)); }
  std::uint32_t element_order(std::uint32_t a) const;
  /// A small generating set; never empty (the identity for the trivial group).
  const std::vector<std::uint32_t>& generators() const { return gens_; }

  std::size_t factor_count() const { return factors_.size(); }
  std::uint32_t factor_order(std::size_t i) const { return factors_[i]->n; }
  std::uint32_t component(std::uint32_t g, std::size_t i) const { return (g / stride_[i]) % factors_[i]->n; }
  std::uint32_t compose(const std::vector<std::uint32_t>& comps) const;

  /// Sorted element list of the subgroup generated by gens.
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t>& gens) const;
  bool is_subgroup(const std::vector<std::uint32_t>& elems) const;
  /// Full multiplication table (for serialization and small groups).
  std::vector<std::vector<std::uint32_t>> table() const;
  /// Permutation generators when the group was built from permutations.
  const std::vector<std::vector<std::uint32_t>>& perm_gens() const { return perm_gens_; }

 private:
  struct Table {
    std::uint32_t n = 0, id = 0;
    std::vector<std::uint32_t> mul, inv;
  };
  std::vector<std::shared_ptr<const Table>> factors_;
  std::vector<std::uint32_t> stride_;
  std::uint32_t order_ = 1, id_ = 0;
  std::vector<std::uint32_t> gens_;
  std::vector<std::vector<std::uint32_t>> perm_gens_;

  static std::shared_ptr<const Table> checked_table(const std::vector<std::vector<std::uint32_t>>& mul);
  static GroupPtr assemble(std::vector<std::shared_ptr<const Table>> factors,
                           std::vector<std::uint32_t> gens = {});
};

/// A group with an automorphism sigma of order dividing p, and H = G^sigma.
struct SigmaGroup {
  GroupPtr G;
  std::vector<std::uint32_t> sigma;  // element map
  std::uint32_t p = 0;
  std::vector<std::uint32_t> H;  // sorted fixed elements

  /// Checks that sigma is an automorphism with sigma^p = id.
  static SigmaGroup make(GroupPtr G, std::vector<std::uint32_t> sigma, std::uint32_t p);
  /// G = Hgrp^p with sigma(h_1, ..., h_p) = (h_p, h_1, ..., h_{p-1}).
  static SigmaGroup cyclic_shift(const GroupPtr& Hgrp, std::uint32_t p);

  std::uint32_t apply(std::uint32_t g) const { return sigma[g]; }
  bool stable(const std::vector<std::uint32_t>& subgroup) const;
};

/// The i-th coordinate of g in a power group built by FiniteGroup::power.
std::uint32_t power_coordinate(std::uint32_t base_order, std::uint32_t g, std::uint32_t i, std::uint32_t k);
std::uint32_t power_element(std::uint32_t base_order, const std::vector<std::uint32_t>& coords);
/// Diagonal embedding H -> H^k.
std::uint32_t diagonal_element(std::uint32_t base_order, std::uint32_t h, std::uint32_t k);

/**
 * A representation of a finite group, stored as the image of every element.
 * Construction checks the homomorphism property (exhaustively when small,
 * on a deterministic sample of pairs otherwise).
 */
class GroupRep {
 public:
  GroupRep() = default;
  /// Images of the listed generators; extended along a spanning tree.
  static GroupRep from_generators(GroupPtr G, const std::vector<std::uint32_t>& gens, const std::vector<Mat>& mats);
  static GroupRep from_function(GroupPtr G, Field f, std::size_t dim,
                                const std::function<Mat(std::uint32_t)>& image);
  static GroupRep trivial(GroupPtr G, Field f, std::size_t dim = 1);
  static GroupRep regular(GroupPtr G, Field f);

  const GroupPtr& group() const { return G_; }
  const Field& field() const { return f_; }
  std::size_t dim() const { return dim_; }
  const Mat& operator()(std::uint32_t g) const { return images_[g]; }
  /// Images of group()->generators().
  std::vector<Mat> generator_images() const;
  /// Images of an arbitrary list of elements.
  std::vector<Mat> images_of(const std::vector<std::uint32_t>& elems) const;
  /// Restriction along an injective map of element lists (subgroup inclusion).
  GroupRep restrict_to(GroupPtr sub, const std::vector<std::uint32_t>& embedding) const;

 private:
  GroupPtr G_;
  Field f_;
  std::size_t dim_ = 0;
  std::vector<Mat> images_;
  void verify() const;
};

/// The subgroup given by a sorted element list, as its own group, plus the
/// embedding list (subgroup index -> element of the ambient group).
struct Subgroup {
  GroupPtr group;
  std::vector<std::uint32_t> embedding;
};
Subgroup make_subgroup(const FiniteGroup& G, const std::vector<std::uint32_t>& elems);

}  // namespace tatebc
