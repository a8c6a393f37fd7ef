// Finite simplicial complexes with an order-p vertex permutation, their
// fixed subcomplexes and the comparison of Tate cohomology on both sides.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatebc/random.hpp"
#include "tatebc/tate_complex.hpp"

namespace tatebc {

/// Sorted vertex indices; the global vertex order is the index order.
using Simplex = std::vector<std::uint32_t>;

class SigmaComplex {
 public:
  SigmaComplex() = default;
  /// facets may be any generating family of simplices; the closure is taken.
  /// perm[v] is the image of vertex v. Checks perm^p = id and that perm is simplicial.
  static SigmaComplex make(std::vector<std::string> labels, const std::vector<Simplex>& facets,
                           std::vector<std::uint32_t> perm, std::uint32_t p);
  /// Label-based form; vertices missing from perm are fixed.
  static SigmaComplex from_labels(const std::vector<std::string>& labels,
                                  const std::vector<std::vector<std::string>>& facets,
                                  const std::map<std::string, std::string>& perm, std::uint32_t p);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::uint32_t>& perm() const { return perm_; }
  std::uint32_t p() const { return p_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const;
  std::size_t index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const;
  /// Image of s under perm, sorted; the sign of the sorting permutation in *sign.
  Simplex apply(const Simplex& s, int* sign = nullptr) const;
  std::vector<Simplex> facets() const;
  long euler_characteristic() const;
  /// Every simplex mapped to itself is fixed vertexwise.
  bool is_admissible() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> perm_;
  std::uint32_t p_ = 2;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// A complex certified admissible.
class AdmissibleComplex {
 public:
  /// Throws std::invalid_argument if X is not admissible.
  explicit AdmissibleComplex(SigmaComplex X);
  static std::optional<AdmissibleComplex> certify(const SigmaComplex& X);
  const SigmaComplex& complex() const { return X_; }

 private:
  SigmaComplex X_;
};

/// Vertices are the simplices of X ordered by (dimension, lexicographic carrier).
SigmaComplex barycentric_subdivide(const SigmaComplex& X);
/// X itself when admissible, otherwise its subdivision (which is checked).
AdmissibleComplex make_admissible(const SigmaComplex& X);

/// Fixed vertices and the simplices spanned by them; identity action.
SigmaComplex fixed_subcomplex(const AdmissibleComplex& X);

/// Simplicial cochains over f (characteristic p) with e_s -> sign * e_{perm s}.
SigmaChainComplex equivariant_cochains(const AdmissibleComplex& X, const Field& f);
std::vector<std::size_t> betti_numbers(const SigmaComplex& X, const Field& f);

struct SmithReport {
  std::size_t t_space[2] = {0, 0};
  std::size_t t_fixed[2] = {0, 0};
  std::size_t fixed_vertices = 0;
  bool pass = false;
};
SmithReport smith_localization_report(const AdmissibleComplex& X);

// ---------------------------------------------------------------- generators

/// n-gon with vertex i -> i + shift mod n.
SigmaComplex polygon(std::size_t n, std::size_t shift, std::uint32_t p);
/// p-gon rotated by one step; for p = 2 a square rotated by two steps.
SigmaComplex rotation_cycle(std::uint32_t p);
/// New fixed apex joined to every simplex.
SigmaComplex cone(const SigmaComplex& X);
/// Two fixed apexes.
SigmaComplex suspension(const SigmaComplex& X);
SigmaComplex disjoint_union(const SigmaComplex& a, const SigmaComplex& b);
/// Same complex with the identity permutation.
SigmaComplex with_identity(const SigmaComplex& X);
/// Boundary of the tetrahedron: 3-fold rotation fixing vertex 0 (p = 3) or
/// the double transposition (01)(23) (p = 2).
SigmaComplex tetrahedron_boundary(std::uint32_t p);
/// Full 2-simplex rotated (p = 3).
SigmaComplex rotated_triangle();
/// Random complex: free orbits and fixed vertices, facets closed under perm.
SigmaComplex random_sigma_complex(std::uint32_t p, Rng& rng);

/// The named battery used by the self-test: admissible versions of each.
std::vector<std::pair<std::string, SigmaComplex>> smith_battery(std::uint32_t p);

}  // namespace tatebc
