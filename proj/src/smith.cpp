#include "tatebc/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tatebc {

namespace {

int sort_sign(Simplex& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) sign = -sign;
  std::sort(v.begin(), v.end());
  return sign;
}

std::string join_labels(const SigmaComplex& X, const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + X.labels()[s[i]];
  return out + "]";
}

}  // namespace

SigmaComplex SigmaComplex::make(std::vector<std::string> labels, const std::vector<Simplex>& facets,
                                std::vector<std::uint32_t> perm, std::uint32_t p) {
  SigmaComplex X;
  const std::size_t n = labels.size();
  if (p < 2) throw std::invalid_argument("sigma complex: p must be at least 2");
  if (perm.size() != n) throw std::invalid_argument("sigma complex: permutation has the wrong length");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw std::invalid_argument("sigma complex: duplicate vertex label");
    std::vector<char> hit(n, 0);
    for (auto v : perm) {
      if (v >= n || hit[v]) throw std::invalid_argument("sigma complex: perm is not a bijection");
      hit[v] = 1;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
      std::uint32_t w = v;
      for (std::uint32_t k = 0; k < p; ++k) w = perm[w];
      if (w != v) throw std::invalid_argument("sigma complex: perm^p is not the identity");
    }
  }
  std::set<Simplex> all;
  for (std::uint32_t v = 0; v < n; ++v) all.insert({v});
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.empty()) throw std::invalid_argument("sigma complex: empty facet");
    if (f.back() >= n) throw std::invalid_argument("sigma complex: facet uses an unknown vertex");
    if (f.size() > 20) throw std::invalid_argument("sigma complex: facet too large");
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1u) s.push_back(f[i]);
      all.insert(s);
    }
  }
  X.labels_ = std::move(labels);
  X.perm_ = std::move(perm);
  X.p_ = p;
  for (const auto& s : all) {
    std::size_t d = s.size() - 1;
    if (X.by_dim_.size() <= d) X.by_dim_.resize(d + 1);
    X.by_dim_[d].push_back(s);  // std::set order is lexicographic
  }
  X.index_.resize(X.by_dim_.size());
  for (std::size_t d = 0; d < X.by_dim_.size(); ++d)
    for (std::size_t i = 0; i < X.by_dim_[d].size(); ++i) X.index_[d][X.by_dim_[d][i]] = i;
  for (const auto& s : all)
    if (!X.contains(X.apply(s))) throw std::invalid_argument("sigma complex: perm is not simplicial");
  return X;
}

SigmaComplex SigmaComplex::from_labels(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<std::string>>& facets,
                                       const std::map<std::string, std::string>& perm, std::uint32_t p) {
  std::map<std::string, std::uint32_t> idx;
  for (std::size_t i = 0; i < labels.size(); ++i) idx[labels[i]] = static_cast<std::uint32_t>(i);
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw std::invalid_argument("sigma complex: unknown vertex '" + s + "'");
    return it->second;
  };
  std::vector<Simplex> fs;
  for (const auto& f : facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(lookup(v));
    fs.push_back(s);
  }
  std::vector<std::uint32_t> pm(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) pm[i] = static_cast<std::uint32_t>(i);
  for (const auto& [a, b] : perm) pm[lookup(a)] = lookup(b);
  return make(labels, fs, pm, p);
}

const std::vector<Simplex>& SigmaComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t SigmaComplex::count(int d) const { return simplices(d).size(); }

bool SigmaComplex::contains(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return false;
  return index_[s.size() - 1].count(s) > 0;
}

std::size_t SigmaComplex::index_of(const Simplex& s) const {
  if (!contains(s)) throw std::invalid_argument("sigma complex: not a simplex");
  return index_[s.size() - 1].at(s);
}

Simplex SigmaComplex::apply(const Simplex& s, int* sign) const {
  Simplex t;
  for (auto v : s) t.push_back(perm_[v]);
  int sg = sort_sign(t);
  if (sign) *sign = sg;
  return t;
}

std::vector<Simplex> SigmaComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = dimension(); d >= 0; --d)
    for (const auto& s : simplices(d)) {
      bool maximal = true;
      for (const auto& f : out)
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

long SigmaComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(count(d));
  return chi;
}

bool SigmaComplex::is_admissible() const {
  for (int d = 1; d <= dimension(); ++d)
    for (const auto& s : simplices(d)) {
      if (apply(s) != s) continue;
      for (auto v : s)
        if (perm_[v] != v) return false;
    }
  return true;
}

AdmissibleComplex::AdmissibleComplex(SigmaComplex X) : X_(std::move(X)) {
  if (!X_.is_admissible())
    throw std::invalid_argument("complex is not admissible: a stable simplex is not fixed vertexwise");
}

std::optional<AdmissibleComplex> AdmissibleComplex::certify(const SigmaComplex& X) {
  if (!X.is_admissible()) return std::nullopt;
  return AdmissibleComplex(X);
}

SigmaComplex barycentric_subdivide(const SigmaComplex& X) {
  std::vector<Simplex> verts;
  for (int d = 0; d <= X.dimension(); ++d)
    for (const auto& s : X.simplices(d)) verts.push_back(s);
  std::map<Simplex, std::uint32_t> id;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    id[verts[i]] = static_cast<std::uint32_t>(i);
    labels.push_back(join_labels(X, verts[i]));
  }
  std::vector<std::uint32_t> perm;
  for (const auto& s : verts) perm.push_back(id.at(X.apply(s)));
  // maximal flags of each facet
  std::vector<Simplex> facets;
  for (const auto& F : X.facets()) {
    Simplex order = F;
    do {
      Simplex flag, carrier;
      for (auto v : order) {
        carrier.push_back(v);
        Simplex c = carrier;
        std::sort(c.begin(), c.end());
        flag.push_back(id.at(c));
      }
      facets.push_back(flag);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return SigmaComplex::make(labels, facets, perm, X.p());
}

AdmissibleComplex make_admissible(const SigmaComplex& X) {
  if (X.is_admissible()) return AdmissibleComplex(X);
  return AdmissibleComplex(barycentric_subdivide(X));
}

SigmaComplex fixed_subcomplex(const AdmissibleComplex& A) {
  const SigmaComplex& X = A.complex();
  std::vector<std::uint32_t> newid(X.vertex_count(), UINT32_MAX);
  std::vector<std::string> labels;
  for (std::uint32_t v = 0; v < X.vertex_count(); ++v)
    if (X.perm()[v] == v) {
      newid[v] = static_cast<std::uint32_t>(labels.size());
      labels.push_back(X.labels()[v]);
    }
  std::vector<Simplex> facets;
  for (int d = 1; d <= X.dimension(); ++d)
    for (const auto& s : X.simplices(d)) {
      Simplex t;
      for (auto v : s) t.push_back(newid[v]);
      if (std::find(t.begin(), t.end(), UINT32_MAX) == t.end()) facets.push_back(t);
    }
  std::vector<std::uint32_t> perm(labels.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
  return SigmaComplex::make(labels, facets, perm, X.p());
}

namespace {

SigmaChainComplex cochains_impl(const SigmaComplex& X, const Field& f) {
  if (X.dimension() < 0) return SigmaChainComplex::single(SigmaModule::zero(f));
  std::vector<SigmaModule> ms;
  std::vector<Mat> ds;
  const Elem one = f.one(), minus = f.neg(f.one());
  for (int d = 0; d <= X.dimension(); ++d) {
    const auto& S = X.simplices(d);
    Mat sg(f, S.size(), S.size());
    for (std::size_t j = 0; j < S.size(); ++j) {
      int sign = 1;
      Simplex t = X.apply(S[j], &sign);
      sg.at(X.index_of(t), j) = sign > 0 ? one : minus;
    }
    ms.emplace_back(sg);
    if (d < X.dimension()) {
      const auto& T = X.simplices(d + 1);
      Mat dd(f, T.size(), S.size());
      for (std::size_t r = 0; r < T.size(); ++r)
        for (std::size_t i = 0; i < T[r].size(); ++i) {
          Simplex face = T[r];
          face.erase(face.begin() + static_cast<long>(i));
          dd.at(r, X.index_of(face)) = i % 2 ? minus : one;
        }
      ds.push_back(dd);
    }
  }
  return SigmaChainComplex(0, ms, ds);
}

}  // namespace

SigmaChainComplex equivariant_cochains(const AdmissibleComplex& A, const Field& f) {
  if (f.characteristic() != A.complex().p())
    throw std::invalid_argument("equivariant_cochains: field characteristic differs from the order of the action");
  return cochains_impl(A.complex(), f);
}

std::vector<std::size_t> betti_numbers(const SigmaComplex& X, const Field& f) {
  SigmaChainComplex C = cochains_impl(with_identity(X), f);
  std::vector<std::size_t> out;
  for (int d = 0; d <= X.dimension(); ++d) out.push_back(cohomology_space(C, d).dim());
  return out;
}

SmithReport smith_localization_report(const AdmissibleComplex& A) {
  Field f = Field::make(A.complex().p());
  SmithReport rep;
  SigmaChainComplex cx = equivariant_cochains(A, f);
  SigmaComplex fixed = fixed_subcomplex(A);
  SigmaChainComplex cf = equivariant_cochains(AdmissibleComplex(fixed), f);
  rep.fixed_vertices = fixed.vertex_count();
  for (int i = 0; i < 2; ++i) {
    rep.t_space[i] = tate_dim(cx, i);
    rep.t_fixed[i] = tate_dim(cf, i);
  }
  rep.pass = rep.t_space[0] == rep.t_fixed[0] && rep.t_space[1] == rep.t_fixed[1];
  return rep;
}

// ---------------------------------------------------------------- generators

SigmaComplex polygon(std::size_t n, std::size_t shift, std::uint32_t p) {
  if (n < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<Simplex> edges;
  std::vector<std::uint32_t> perm;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("v" + std::to_string(i));
    edges.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % n)});
    perm.push_back(static_cast<std::uint32_t>((i + shift) % n));
  }
  return SigmaComplex::make(labels, edges, perm, p);
}

SigmaComplex rotation_cycle(std::uint32_t p) { return p == 2 ? polygon(4, 2, 2) : polygon(p, 1, p); }

namespace {

std::string fresh_label(const SigmaComplex& X, std::string base) {
  const auto& L = X.labels();
  while (std::find(L.begin(), L.end(), base) != L.end()) base += "'";
  return base;
}

SigmaComplex join_apexes(const SigmaComplex& X, const std::vector<std::string>& names) {
  std::vector<std::string> labels = X.labels();
  std::vector<std::uint32_t> perm = X.perm();
  std::vector<Simplex> facets;
  auto base = X.facets();
  for (const auto& nm : names) {
    std::uint32_t a = static_cast<std::uint32_t>(labels.size());
    labels.push_back(fresh_label(X, nm));
    perm.push_back(a);
    facets.push_back({a});
    for (Simplex s : base) {
      s.push_back(a);
      facets.push_back(s);
    }
  }
  return SigmaComplex::make(labels, facets, perm, X.p());
}

}  // namespace

SigmaComplex cone(const SigmaComplex& X) { return join_apexes(X, {"apex"}); }

SigmaComplex suspension(const SigmaComplex& X) { return join_apexes(X, {"north", "south"}); }

SigmaComplex disjoint_union(const SigmaComplex& a, const SigmaComplex& b) {
  if (a.p() != b.p()) throw std::invalid_argument("disjoint_union: different p");
  std::vector<std::string> labels;
  std::vector<std::uint32_t> perm;
  for (const auto& l : a.labels()) labels.push_back("0:" + l);
  for (const auto& l : b.labels()) labels.push_back("1:" + l);
  const auto off = static_cast<std::uint32_t>(a.vertex_count());
  perm = a.perm();
  for (auto v : b.perm()) perm.push_back(v + off);
  std::vector<Simplex> facets = a.facets();
  for (Simplex s : b.facets()) {
    for (auto& v : s) v += off;
    facets.push_back(s);
  }
  return SigmaComplex::make(labels, facets, perm, a.p());
}

SigmaComplex with_identity(const SigmaComplex& X) {
  std::vector<std::uint32_t> perm(X.vertex_count());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::uint32_t>(i);
  return SigmaComplex::make(X.labels(), X.facets(), perm, X.p());
}

SigmaComplex tetrahedron_boundary(std::uint32_t p) {
  std::vector<Simplex> faces{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::vector<std::uint32_t> perm;
  if (p == 3)
    perm = {0, 2, 3, 1};
  else if (p == 2)
    perm = {1, 0, 3, 2};
  else
    throw std::invalid_argument("tetrahedron_boundary: p must be 2 or 3");
  return SigmaComplex::make({"a", "b", "c", "d"}, faces, perm, p);
}

SigmaComplex rotated_triangle() { return SigmaComplex::make({"a", "b", "c"}, {{0, 1, 2}}, {1, 2, 0}, 3); }

SigmaComplex random_sigma_complex(std::uint32_t p, Rng& rng) {
  const std::size_t orbits = 1 + rand_below(rng, 2), fixed = rand_below(rng, 3);
  const std::size_t n = orbits * p + fixed;
  std::vector<std::string> labels;
  std::vector<std::uint32_t> perm;
  for (std::size_t o = 0; o < orbits; ++o)
    for (std::uint32_t i = 0; i < p; ++i) {
      labels.push_back("o" + std::to_string(o) + "_" + std::to_string(i));
      perm.push_back(static_cast<std::uint32_t>(o * p + (i + 1) % p));
    }
  for (std::size_t i = 0; i < fixed; ++i) {
    labels.push_back("f" + std::to_string(i));
    perm.push_back(static_cast<std::uint32_t>(orbits * p + i));
  }
  std::vector<Simplex> facets;
  const std::size_t k = 1 + rand_below(rng, 3);
  for (std::size_t t = 0; t < k; ++t) {
    std::size_t size = 1 + rand_below(rng, std::min<std::size_t>(3, n));
    Simplex s;
    while (s.size() < size) {
      auto v = static_cast<std::uint32_t>(rand_below(rng, n));
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    for (std::uint32_t r = 0; r < p; ++r) {
      facets.push_back(s);
      for (auto& v : s) v = perm[v];
    }
  }
  return SigmaComplex::make(labels, facets, perm, p);
}

std::vector<std::pair<std::string, SigmaComplex>> smith_battery(std::uint32_t p) {
  std::vector<std::pair<std::string, SigmaComplex>> out;
  SigmaComplex cyc = rotation_cycle(p);
  out.emplace_back("cycle", cyc);
  out.emplace_back("cone", cone(cyc));
  out.emplace_back("suspension", suspension(cyc));
  out.emplace_back("double_suspension", make_admissible(suspension(suspension(cyc))).complex());
  if (p == 2 || p == 3) out.emplace_back("tetrahedron", barycentric_subdivide(tetrahedron_boundary(p)));
  out.emplace_back("union", disjoint_union(cyc, cone(cyc)));
  out.emplace_back("identity", with_identity(suspension(cyc)));
  return out;
}

}  // namespace tatebc
