#include "tatebc/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace tatebc {

// ---------------------------------------------------------------- FiniteGroup

std::shared_ptr<const FiniteGroup::Table> FiniteGroup::checked_table(
    const std::vector<std::vector<std::uint32_t>>& mul) {
  const std::size_t n = mul.size();
  if (n == 0) throw std::invalid_argument("group: empty multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("group: multiplication table is not square");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("group: table entry out of range");
  }
  auto t = std::make_shared<Table>();
  t->n = static_cast<std::uint32_t>(n);
  t->mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t->mul[a * n + b] = mul[a][b];
  // identity
  bool found = false;
  for (std::uint32_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) ok = t->mul[e * n + a] == a && t->mul[a * n + e] == a;
    if (ok) {
      t->id = e;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group: no identity element");
  t->inv.assign(n, static_cast<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      if (t->mul[a * n + b] == t->id) {
        if (t->mul[b * n + a] != t->id) throw std::invalid_argument("group: one-sided inverse");
        t->inv[a] = b;
      }
  for (auto x : t->inv)
    if (x == n) throw std::invalid_argument("group: element without inverse");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t ab = t->mul[a * n + b];
      for (std::size_t c = 0; c < n; ++c)
        if (t->mul[ab * n + c] != t->mul[a * n + t->mul[b * n + c]])
          throw std::invalid_argument("group: multiplication is not associative");
    }
  return t;
}

GroupPtr FiniteGroup::assemble(std::vector<std::shared_ptr<const Table>> factors, std::vector<std::uint32_t> gens) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->factors_ = std::move(factors);
  const std::size_t k = g->factors_.size();
  g->stride_.assign(k, 1);
  std::uint64_t order = 1;
  for (std::size_t i = k; i-- > 0;) {
    g->stride_[i] = static_cast<std::uint32_t>(order);
    order *= g->factors_[i]->n;
    if (order > (1ull << 31)) throw std::invalid_argument("group: order too large");
  }
  g->order_ = static_cast<std::uint32_t>(order);
  std::vector<std::uint32_t> idc(k);
  for (std::size_t i = 0; i < k; ++i) idc[i] = g->factors_[i]->id;
  g->id_ = g->compose(idc);

  if (gens.empty()) {
    if (k == 1) {
      // greedy generating set in index order
      std::vector<std::uint32_t> sub{g->id_};
      std::vector<char> in(g->order_, 0);
      in[g->id_] = 1;
      for (std::uint32_t x = 0; x < g->order_; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        sub = g->closure(gens);
        std::fill(in.begin(), in.end(), 0);
        for (auto s : sub) in[s] = 1;
      }
    } else {
      // generators of each factor, embedded
      for (std::size_t i = 0; i < k; ++i) {
        auto single = assemble({g->factors_[i]});
        for (auto s : single->gens_) {
          if (s == single->id_) continue;
          std::vector<std::uint32_t> c = idc;
          c[i] = s;
          gens.push_back(g->compose(c));
        }
      }
    }
  }
  if (gens.empty()) gens.push_back(g->id_);
  g->gens_ = std::move(gens);
  return g;
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& mul) {
  return assemble({checked_table(mul)});
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& gens) {
  if (gens.empty()) throw std::invalid_argument("group: no permutation generators");
  const std::size_t n = gens[0].size();
  for (const auto& g : gens) {
    if (g.size() != n) throw std::invalid_argument("group: permutations of different degree");
    std::vector<char> seen(n, 0);
    for (auto x : g) {
      if (x >= n || seen[x]) throw std::invalid_argument("group: generator is not a permutation");
      seen[x] = 1;
    }
  }
  std::vector<std::uint32_t> idp(n);
  for (std::size_t i = 0; i < n; ++i) idp[i] = static_cast<std::uint32_t>(i);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> elems{idp};
  index[idp] = 0;
  // (a*b)(x) = a(b(x)): apply b first
  auto compose = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> c(n);
    for (std::size_t x = 0; x < n; ++x) c[x] = a[b[x]];
    return c;
  };
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      auto c = compose(g, elems[k]);
      if (!index.count(c)) {
        index[c] = static_cast<std::uint32_t>(elems.size());
        elems.push_back(std::move(c));
        if (elems.size() > 100000) throw std::invalid_argument("group: permutation group too large");
      }
    }
  const std::size_t N = elems.size();
  auto t = std::make_shared<Table>();
  t->n = static_cast<std::uint32_t>(N);
  t->id = 0;
  t->mul.resize(N * N);
  t->inv.resize(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::uint32_t ab = index.at(compose(elems[a], elems[b]));
      t->mul[a * N + b] = ab;
      if (ab == 0) t->inv[a] = static_cast<std::uint32_t>(b);
    }
  std::vector<std::uint32_t> gidx;
  for (const auto& g : gens) {
    std::uint32_t gi = index.at(g);
    if (gi != 0 && std::find(gidx.begin(), gidx.end(), gi) == gidx.end()) gidx.push_back(gi);
  }
  auto grp = assemble({t}, gidx);
  auto mut = std::const_pointer_cast<FiniteGroup>(grp);
  mut->perm_gens_ = gens;
  return grp;
}

GroupPtr FiniteGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("group: cyclic group of order 0");
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return assemble({checked_table(mul)}, n > 1 ? std::vector<std::uint32_t>{1} : std::vector<std::uint32_t>{});
}

GroupPtr FiniteGroup::symmetric(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("group: symmetric group on 0 letters");
  if (n == 1) return cyclic(1);
  std::vector<std::uint32_t> t(n), c(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    t[i] = i;
    c[i] = (i + 1) % n;
  }
  std::swap(t[0], t[1]);
  if (n == 2) return from_permutations({t});
  return from_permutations({t, c});
}

GroupPtr FiniteGroup::product(const std::vector<GroupPtr>& groups) {
  std::vector<std::shared_ptr<const Table>> fs;
  for (const auto& g : groups)
    for (const auto& t : g->factors_) fs.push_back(t);
  if (fs.empty()) return cyclic(1);
  return assemble(std::move(fs));
}

GroupPtr FiniteGroup::power(const GroupPtr& h, std::uint32_t k) {
  return product(std::vector<GroupPtr>(k, h));
}

std::uint32_t FiniteGroup::compose(const std::vector<std::uint32_t>& comps) const {
  std::uint32_t g = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) g += comps[i] * stride_[i];
  return g;
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  if (factors_.size() == 1) {
    const Table& t = *factors_[0];
    return t.mul[a * t.n + b];
  }
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Table& t = *factors_[i];
    std::uint32_t x = (a / stride_[i]) % t.n, y = (b / stride_[i]) % t.n;
    r += t.mul[x * t.n + y] * stride_[i];
  }
  return r;
}

std::uint32_t FiniteGroup::inv(std::uint32_t a) const {
  if (factors_.size() == 1) return factors_[0]->inv[a];
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Table& t = *factors_[i];
    r += t.inv[(a / stride_[i]) % t.n] * stride_[i];
  }
  return r;
}

std::uint32_t FiniteGroup::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = id_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteGroup::element_order(std::uint32_t a) const {
  std::uint32_t k = 1, x = a;
  while (x != id_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::vector<std::uint32_t> FiniteGroup::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> in(order_, 0);
  std::vector<std::uint32_t> out{id_};
  in[id_] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : gens) {
      if (s >= order_) throw std::out_of_range("group: element index out of range");
      std::uint32_t x = mul(out[k], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<std::uint32_t>& elems) const {
  std::vector<char> in(order_, 0);
  for (auto x : elems) {
    if (x >= order_) return false;
    in[x] = 1;
  }
  if (!in[id_]) return false;
  for (auto a : elems)
    for (auto b : elems)
      if (!in[mul(a, inv(b))]) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> FiniteGroup::table() const {
  std::vector<std::vector<std::uint32_t>> t(order_, std::vector<std::uint32_t>(order_));
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

// ---------------------------------------------------------------- SigmaGroup

SigmaGroup SigmaGroup::make(GroupPtr G, std::vector<std::uint32_t> sigma, std::uint32_t p) {
  const std::uint32_t n = G->order();
  if (sigma.size() != n) throw std::invalid_argument("sigma: element map has wrong length");
  std::vector<char> seen(n, 0);
  for (auto x : sigma) {
    if (x >= n || seen[x]) throw std::invalid_argument("sigma: element map is not a bijection");
    seen[x] = 1;
  }
  for (auto s : G->generators())
    for (std::uint32_t b = 0; b < n; ++b)
      if (sigma[G->mul(s, b)] != G->mul(sigma[s], sigma[b]))
        throw std::invalid_argument("sigma: not a group automorphism");
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint32_t x = g;
    for (std::uint32_t i = 0; i < p; ++i) x = sigma[x];
    if (x != g) throw std::invalid_argument("sigma: sigma^p is not the identity");
  }
  SigmaGroup S;
  S.G = std::move(G);
  S.sigma = std::move(sigma);
  S.p = p;
  for (std::uint32_t g = 0; g < n; ++g)
    if (S.sigma[g] == g) S.H.push_back(g);
  return S;
}

std::uint32_t power_coordinate(std::uint32_t base_order, std::uint32_t g, std::uint32_t i, std::uint32_t k) {
  std::uint32_t div = 1;
  for (std::uint32_t j = i + 1; j < k; ++j) div *= base_order;
  return (g / div) % base_order;
}

std::uint32_t power_element(std::uint32_t base_order, const std::vector<std::uint32_t>& coords) {
  std::uint32_t g = 0;
  for (auto c : coords) g = g * base_order + c;
  return g;
}

std::uint32_t diagonal_element(std::uint32_t base_order, std::uint32_t h, std::uint32_t k) {
  return power_element(base_order, std::vector<std::uint32_t>(k, h));
}

SigmaGroup SigmaGroup::cyclic_shift(const GroupPtr& Hgrp, std::uint32_t p) {
  GroupPtr G = FiniteGroup::power(Hgrp, p);
  const std::uint32_t m = Hgrp->order();
  std::vector<std::uint32_t> sigma(G->order());
  std::vector<std::uint32_t> c(p), d(p);
  for (std::uint32_t g = 0; g < G->order(); ++g) {
    for (std::uint32_t i = 0; i < p; ++i) c[i] = power_coordinate(m, g, i, p);
    for (std::uint32_t i = 0; i < p; ++i) d[(i + 1) % p] = c[i];
    sigma[g] = power_element(m, d);
  }
  return make(G, std::move(sigma), p);
}

bool SigmaGroup::stable(const std::vector<std::uint32_t>& subgroup) const {
  std::vector<char> in(G->order(), 0);
  for (auto x : subgroup) in[x] = 1;
  for (auto x : subgroup)
    if (!in[sigma[x]]) return false;
  return true;
}

Subgroup make_subgroup(const FiniteGroup& G, const std::vector<std::uint32_t>& elems) {
  if (!G.is_subgroup(elems)) throw std::invalid_argument("subgroup: element list is not a subgroup");
  std::vector<std::uint32_t> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<std::uint32_t, std::uint32_t> pos;
  for (std::uint32_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = i;
  std::vector<std::vector<std::uint32_t>> mul(sorted.size(), std::vector<std::uint32_t>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a)
    for (std::size_t b = 0; b < sorted.size(); ++b) mul[a][b] = pos.at(G.mul(sorted[a], sorted[b]));
  return {FiniteGroup::from_table(mul), sorted};
}

// ---------------------------------------------------------------- GroupRep

GroupRep GroupRep::from_generators(GroupPtr G, const std::vector<std::uint32_t>& gens, const std::vector<Mat>& mats) {
  if (gens.size() != mats.size()) throw std::invalid_argument("rep: generator and matrix lists differ in length");
  if (mats.empty()) throw std::invalid_argument("rep: no generator images");
  GroupRep R;
  R.G_ = G;
  R.f_ = mats[0].field();
  R.dim_ = mats[0].rows();
  for (const auto& m : mats)
    if (!m.square() || m.rows() != R.dim_) throw std::invalid_argument("rep: generator images must be square of equal size");
  const std::uint32_t n = G->order();
  R.images_.assign(n, Mat());
  std::vector<char> done(n, 0);
  R.images_[G->identity()] = Mat::identity(R.f_, R.dim_);
  done[G->identity()] = 1;
  std::vector<std::uint32_t> queue{G->identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      std::uint32_t x = G->mul(gens[s], queue[k]);
      if (done[x]) continue;
      done[x] = 1;
      R.images_[x] = mats[s] * R.images_[queue[k]];
      queue.push_back(x);
    }
  if (queue.size() != n) throw std::invalid_argument("rep: listed elements do not generate the group");
  // every relation: image(s*b) = image(s) image(b)
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (std::uint32_t b = 0; b < n; ++b)
      if (!(R.images_[G->mul(gens[s], b)] == mats[s] * R.images_[b]))
        throw std::invalid_argument("rep: matrices violate the group relations");
  return R;
}

GroupRep GroupRep::from_function(GroupPtr G, Field f, std::size_t dim, const std::function<Mat(std::uint32_t)>& image) {
  GroupRep R;
  R.G_ = std::move(G);
  R.f_ = std::move(f);
  R.dim_ = dim;
  R.images_.reserve(R.G_->order());
  for (std::uint32_t g = 0; g < R.G_->order(); ++g) {
    R.images_.push_back(image(g));
    if (R.images_.back().rows() != dim || !R.images_.back().square())
      throw std::invalid_argument("rep: image has the wrong shape");
  }
  R.verify();
  return R;
}

GroupRep GroupRep::trivial(GroupPtr G, Field f, std::size_t dim) {
  Mat id = Mat::identity(f, dim);
  return from_function(std::move(G), f, dim, [&](std::uint32_t) { return id; });
}

GroupRep GroupRep::regular(GroupPtr G, Field f) {
  const std::uint32_t n = G->order();
  const FiniteGroup& g = *G;
  return from_function(G, f, n, [&](std::uint32_t x) {
    Mat m(f, n, n);
    for (std::uint32_t y = 0; y < n; ++y) m.at(g.mul(x, y), y) = f.one();
    return m;
  });
}

void GroupRep::verify() const {
  const std::uint32_t n = G_->order();
  if (!images_[G_->identity()].is_identity()) throw std::invalid_argument("rep: identity does not act trivially");
  const auto& gens = G_->generators();
  const double cost = double(n) * gens.size() * double(dim_) * dim_ * dim_;
  if (cost <= 2e7) {
    for (auto s : gens)
      for (std::uint32_t b = 0; b < n; ++b)
        if (!(images_[G_->mul(s, b)] == images_[s] * images_[b]))
          throw std::invalid_argument("rep: matrices violate the group relations");
    return;
  }
  std::mt19937_64 rng(0x5eed);
  for (int t = 0; t < 64; ++t) {
    std::uint32_t a = static_cast<std::uint32_t>(rng() % n), b = static_cast<std::uint32_t>(rng() % n);
    if (!(images_[G_->mul(a, b)] == images_[a] * images_[b]))
      throw std::invalid_argument("rep: matrices violate the group relations");
  }
}

std::vector<Mat> GroupRep::generator_images() const { return images_of(G_->generators()); }

std::vector<Mat> GroupRep::images_of(const std::vector<std::uint32_t>& elems) const {
  std::vector<Mat> out;
  out.reserve(elems.size());
  for (auto g : elems) out.push_back(images_.at(g));
  return out;
}

GroupRep GroupRep::restrict_to(GroupPtr sub, const std::vector<std::uint32_t>& embedding) const {
  if (embedding.size() != sub->order()) throw std::invalid_argument("rep: embedding has wrong length");
  return from_function(sub, f_, dim_, [&](std::uint32_t h) { return images_.at(embedding[h]); });
}

}  // namespace tatebc
