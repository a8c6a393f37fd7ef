#include "tatebc/torus.hpp"

#include <set>
#include <stdexcept>

namespace tatebc {

namespace {

long long label_sum(const Label& l) {
  long long s = 0;
  for (auto x : l) s += x;
  return s;
}

void require_odd(std::uint32_t p) {
  if (p % 2 == 0) throw std::invalid_argument("torus: base change needs odd p");
}

// Regroups a morphism along label -> key(label), transforming each block.
template <class Key, class Fn>
TorusMorphism regroup(const TorusMorphism& phi, std::uint32_t rank, Key key, Fn transform) {
  auto push = [&](const TorusObject& X) {
    std::map<Label, std::size_t> sup;
    for (const auto& [l, m] : X.support) sup[key(l)] += m;
    TorusObject Y;
    Y.rank = rank;
    Y.support = std::move(sup);
    return Y;
  };
  TorusObject src = push(phi.src), dst = push(phi.dst);
  // summands of each target label in lex order of the source labels
  std::map<Label, std::vector<Label>> parts;
  for (const auto& [l, b] : phi.blocks) parts[key(l)].push_back(l);
  std::map<Label, Mat> blocks;
  for (const auto& [t, ls] : parts) {
    Mat B(phi.f, dst.mult(t), src.mult(t));
    std::size_t r0 = 0, c0 = 0;
    for (const auto& l : ls) {
      Mat b = transform(phi.blocks.at(l));
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) B.at(r0 + i, c0 + j) = b(i, j);
      r0 += b.rows();
      c0 += b.cols();
    }
    blocks[t] = std::move(B);
  }
  return TorusMorphism::make(phi.f, std::move(src), std::move(dst), std::move(blocks));
}

void require_char(const TorusMorphism& phi) {
  require_odd(phi.src.rank);
  if (phi.f.characteristic() != phi.src.rank)
    throw std::invalid_argument("torus: the coefficient field must have characteristic p");
}

}  // namespace

TorusObject TorusObject::make(std::uint32_t rank, const std::vector<std::pair<Label, std::size_t>>& entries) {
  if (rank == 0) throw std::invalid_argument("torus: rank must be positive");
  TorusObject X;
  X.rank = rank;
  for (const auto& [l, m] : entries) {
    if (l.size() != rank) throw std::invalid_argument("torus: label has the wrong length");
    if (m > 0) X.support[l] += m;
  }
  return X;
}

std::size_t TorusObject::mult(const Label& l) const {
  auto it = support.find(l);
  return it == support.end() ? 0 : it->second;
}

std::size_t TorusObject::total() const {
  std::size_t t = 0;
  for (const auto& [l, m] : support) t += m;
  return t;
}

TorusObject direct_sum(const TorusObject& a, const TorusObject& b) {
  if (a.rank != b.rank) throw std::invalid_argument("torus: direct sum of different ranks");
  TorusObject X = a;
  for (const auto& [l, m] : b.support) X.support[l] += m;
  return X;
}

TorusMorphism TorusMorphism::make(Field f, TorusObject src, TorusObject dst, std::map<Label, Mat> blocks) {
  if (src.rank != dst.rank) throw std::invalid_argument("torus: morphism between different ranks");
  std::set<Label> labels;
  for (const auto& [l, m] : src.support) labels.insert(l);
  for (const auto& [l, m] : dst.support) labels.insert(l);
  for (const auto& [l, b] : blocks) {
    if (!labels.count(l)) throw std::invalid_argument("torus: block at a label outside both supports");
    if (b.rows() != dst.mult(l) || b.cols() != src.mult(l)) throw std::invalid_argument("torus: block has the wrong shape");
  }
  for (const auto& l : labels)
    if (!blocks.count(l)) blocks.emplace(l, Mat(f, dst.mult(l), src.mult(l)));
  return TorusMorphism{std::move(f), std::move(src), std::move(dst), std::move(blocks)};
}

TorusMorphism TorusMorphism::identity(const Field& f, const TorusObject& X) { return scalar(f, X, f.one()); }

TorusMorphism TorusMorphism::scalar(const Field& f, const TorusObject& X, Elem lambda) {
  std::map<Label, Mat> blocks;
  for (const auto& [l, m] : X.support) blocks.emplace(l, Mat::identity(f, m).scaled(lambda));
  return make(f, X, X, std::move(blocks));
}

bool operator==(const TorusMorphism& a, const TorusMorphism& b) {
  return a.src == b.src && a.dst == b.dst && a.blocks == b.blocks;
}

TorusMorphism compose(const TorusMorphism& psi, const TorusMorphism& phi) {
  if (!(phi.dst == psi.src)) throw std::invalid_argument("torus: morphisms are not composable");
  std::map<Label, Mat> blocks;
  for (const auto& [l, m] : phi.src.support) {
    (void)m;
    if (psi.dst.mult(l) == 0) continue;
    blocks.emplace(l, psi.blocks.at(l) * phi.blocks.at(l));
  }
  return TorusMorphism::make(phi.f, phi.src, psi.dst, std::move(blocks));
}

TorusMorphism operator+(const TorusMorphism& a, const TorusMorphism& b) {
  if (!(a.src == b.src && a.dst == b.dst)) throw std::invalid_argument("torus: adding morphisms of different type");
  TorusMorphism c = a;
  for (auto& [l, m] : c.blocks) m = m + b.blocks.at(l);
  return c;
}

TorusMorphism scaled(const TorusMorphism& a, Elem s) {
  TorusMorphism c = a;
  for (auto& [l, m] : c.blocks) m = m.scaled(s);
  return c;
}

TorusMorphism direct_sum(const TorusMorphism& a, const TorusMorphism& b) {
  TorusObject src = direct_sum(a.src, b.src), dst = direct_sum(a.dst, b.dst);
  std::map<Label, Mat> blocks;
  for (const auto& [l, m] : src.support) {
    (void)m;
    if (dst.mult(l) == 0) continue;
    auto pick = [&](const TorusMorphism& x) {
      auto it = x.blocks.find(l);
      return it == x.blocks.end() ? Mat(a.f, x.dst.mult(l), x.src.mult(l)) : it->second;
    };
    Mat A = pick(a), B = pick(b);
    Mat C(a.f, A.rows() + B.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
      for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = A(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i)
      for (std::size_t j = 0; j < B.cols(); ++j) C.at(A.rows() + i, A.cols() + j) = B(i, j);
    blocks.emplace(l, std::move(C));
  }
  return TorusMorphism::make(a.f, std::move(src), std::move(dst), std::move(blocks));
}

TorusObject nm_obj(const TorusObject& F) {
  require_odd(F.rank);
  TorusObject X;
  X.rank = F.rank;
  for (const auto& [l, m] : F.support) X.support[Label(F.rank, label_sum(l))] += m;
  return X;
}

TorusObject bc_obj(const TorusObject& F) {
  require_odd(F.rank);
  TorusObject X;
  X.rank = 1;
  for (const auto& [l, m] : F.support) X.support[Label{label_sum(l)}] += m;
  return X;
}

TorusMorphism nm_mor(const TorusMorphism& phi) {
  require_char(phi);
  const std::uint32_t p = phi.src.rank;
  return regroup(
      phi, p, [p](const Label& l) { return Label(p, label_sum(l)); },
      [](const Mat& b) { return b.map_entries(&Field::frobenius); });
}

TorusMorphism bc_mor(const TorusMorphism& phi) {
  require_char(phi);
  TorusMorphism n = nm_mor(phi);
  return regroup(
      n, 1, [](const Label& l) { return Label{l[0]}; },
      [](const Mat& b) { return b.map_entries(&Field::frobenius_inv); });
}

std::map<long long, std::size_t> res_bc_oracle(const TorusObject& V) {
  std::map<long long, std::size_t> out;
  for (const auto& [l, m] : V.support) {
    long long s = 0;
    for (auto x : l) s += x;
    out[s] += m;
  }
  return out;
}

TorusObject random_torus_object(std::uint32_t rank, Rng& rng, std::size_t max_labels, long long range) {
  std::vector<std::pair<Label, std::size_t>> entries;
  const std::size_t k = rand_below(rng, max_labels + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Label l(rank);
    for (auto& x : l) x = static_cast<long long>(rand_below(rng, 2 * range + 1)) - range;
    entries.emplace_back(std::move(l), 1 + rand_below(rng, 3));
  }
  return TorusObject::make(rank, entries);
}

TorusMorphism random_torus_morphism(const Field& f, const TorusObject& src, const TorusObject& dst, Rng& rng) {
  std::map<Label, Mat> blocks;
  for (const auto& [l, m] : src.support)
    if (dst.mult(l) > 0) blocks.emplace(l, random_matrix(f, dst.mult(l), m, rng));
  return TorusMorphism::make(f, src, dst, std::move(blocks));
}

}  // namespace tatebc
