#include "tatebc/catalog.hpp"

#include <stdexcept>

namespace tatebc {

GroupRep s3_standard_rep(const GroupPtr& s3, const Field& f) {
  Mat basis = Mat::from_ints(f, 2, 3, {1, -1, 0, 0, 1, -1});
  Decomposer dec(basis);
  std::vector<Mat> mats;
  for (const auto& perm : s3->perm_gens()) {
    Mat m(f, 2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
      Vec v(3, Elem{0});
      for (std::size_t i = 0; i < 3; ++i) v[perm[i]] = basis(j, i);
      m.set_col(j, *dec.coeffs(v));
    }
    mats.push_back(m);
  }
  return GroupRep::from_generators(s3, s3->generators(), mats);
}

GroupRep sign_rep(const GroupPtr& G, const Field& f) {
  std::vector<Mat> mats;
  for (const auto& perm : G->perm_gens()) {
    std::vector<bool> seen(perm.size());
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      for (std::size_t j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        if (j != i) ++transpositions;
      }
    }
    mats.push_back(Mat::from_ints(f, 1, 1, {transpositions % 2 ? -1 : 1}));
  }
  return GroupRep::from_generators(G, G->generators(), mats);
}

GroupRep cyclic_character(const GroupPtr& cn, const Field& f, Elem z) {
  return GroupRep::from_generators(cn, cn->generators(), {Mat::from_rows(f, 1, {Vec{z}})});
}

Elem field_element_of_order(const Field& f, std::uint32_t n) {
  for (std::uint32_t c = 1; c < f.order(); ++c) {
    Elem x = f.from_code(c);
    std::uint32_t k = 1;
    for (Elem y = x; !(y == f.one()); y = f.mul(y, x)) ++k;
    if (k == n) return x;
  }
  throw std::domain_error("no element of multiplicative order " + std::to_string(n));
}

std::uint32_t group_element_of_order(const FiniteGroup& G, std::uint32_t n) {
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (G.element_order(g) == n) return g;
  return G.identity();
}

TargetPtr split_target(const GroupPtr& G) {
  std::vector<std::uint32_t> id(G->order());
  for (std::uint32_t g = 0; g < G->order(); ++g) id[g] = g;
  return ParamTarget::make(G, FiniteGroup::cyclic(1), {id});
}

TargetPtr conj_target(const GroupPtr& G, std::uint32_t c, std::uint32_t k) {
  GroupPtr Q = FiniteGroup::cyclic(k);
  std::vector<std::vector<std::uint32_t>> action(k, std::vector<std::uint32_t>(G->order()));
  for (std::uint32_t q = 0; q < k; ++q) {
    std::uint32_t h = G->pow(c, q);
    for (std::uint32_t g = 0; g < G->order(); ++g) action[q][g] = G->conj(h, g);
  }
  return ParamTarget::make(G, Q, action);
}

GammaData cyclic_over_cyclic(std::uint32_t kn, std::uint32_t k) {
  std::vector<std::uint32_t> to(kn);
  for (std::uint32_t g = 0; g < kn; ++g) to[g] = g % k;
  return GammaData::make(FiniteGroup::cyclic(kn), to, FiniteGroup::cyclic(k));
}

}  // namespace tatebc
