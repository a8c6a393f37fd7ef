#include "tatebc/excursion.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tatebc/sigma_module.hpp"

namespace tatebc {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Vec kron_vec(const Field& f, const Vec& a, const Vec& b) {
  Vec out;
  out.reserve(a.size() * b.size());
  for (Elem x : a)
    for (Elem y : b) out.push_back(f.mul(x, y));
  return out;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  Elem s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Vec random_combination(const Mat& rows, Rng& rng) {
  const Field& f = rows.field();
  Vec v(rows.cols(), f.zero());
  for (std::size_t i = 0; i < rows.rows(); ++i) v = vec_add(f, v, vec_scale(f, random_elem(f, rng), rows.row(i)));
  return v;
}

void check_order(std::uint32_t n, const char* what) {
  if (n > max_search_order())
    throw std::domain_error(std::string("excursion: ") + what + " exceeds TATE_SMITH_MAX_ORDER");
}

}  // namespace

std::uint32_t max_search_order() {
  const char* s = std::getenv("TATE_SMITH_MAX_ORDER");
  if (!s || !*s) return 48;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v <= 0) return 48;
  return static_cast<std::uint32_t>(v);
}

// ---------------------------------------------------------------- target

TargetPtr ParamTarget::make(GroupPtr Ghat, GroupPtr Q, std::vector<std::vector<std::uint32_t>> action) {
  const std::uint32_t ng = Ghat->order(), nq = Q->order();
  check_order(ng * nq, "|L|");
  if (action.size() != nq) throw std::invalid_argument("target: action needs one entry per element of Q");
  for (const auto& a : action) {
    if (a.size() != ng) throw std::invalid_argument("target: action entry has the wrong length");
    std::vector<char> seen(ng, 0);
    for (auto x : a) {
      if (x >= ng || seen[x]) throw std::invalid_argument("target: action entry is not a bijection");
      seen[x] = 1;
    }
    for (std::uint32_t g = 0; g < ng; ++g)
      for (std::uint32_t h = 0; h < ng; ++h)
        if (a[Ghat->mul(g, h)] != Ghat->mul(a[g], a[h]))
          throw std::invalid_argument("target: action entry is not an automorphism");
  }
  for (std::uint32_t q = 0; q < nq; ++q)
    for (std::uint32_t r = 0; r < nq; ++r)
      for (std::uint32_t g = 0; g < ng; ++g)
        if (action[Q->mul(q, r)][g] != action[q][action[r][g]])
          throw std::invalid_argument("target: action is not a homomorphism Q -> Aut(Ghat)");

  auto T = std::make_shared<ParamTarget>();
  T->Ghat_ = Ghat;
  T->Q_ = Q;
  T->action_ = std::move(action);
  const std::uint32_t n = ng * nq;
  std::vector<std::vector<std::uint32_t>> mul(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      std::uint32_t g = a / nq, q = a % nq, g2 = b / nq, q2 = b % nq;
      mul[a][b] = Ghat->mul(g, T->action_[q][g2]) * nq + Q->mul(q, q2);
    }
  T->L_ = FiniteGroup::from_table(mul);
  for (auto h : Ghat->generators()) T->ghat_gens_.push_back(T->from_ghat(h));
  return T;
}

TargetPtr ParamTarget::base_change(const GroupPtr& Hhat, const GroupPtr& Q, std::uint32_t p,
                                   const std::vector<std::uint32_t>& shift) {
  SigmaGroup S = SigmaGroup::cyclic_shift(Hhat, p);
  const std::uint32_t nq = Q->order();
  if (shift.size() != nq) throw std::invalid_argument("target: shift needs one entry per element of Q");
  for (std::uint32_t a = 0; a < nq; ++a)
    for (std::uint32_t b = 0; b < nq; ++b)
      if (shift[Q->mul(a, b)] % p != (shift[a] + shift[b]) % p)
        throw std::invalid_argument("target: shift is not a homomorphism Q -> Z/p");
  const std::uint32_t ng = S.G->order();
  std::vector<std::vector<std::uint32_t>> action(nq, std::vector<std::uint32_t>(ng));
  for (std::uint32_t q = 0; q < nq; ++q)
    for (std::uint32_t g = 0; g < ng; ++g) {
      std::uint32_t x = g;
      for (std::uint32_t k = 0; k < shift[q] % p; ++k) x = S.sigma[x];
      action[q][g] = x;
    }
  TargetPtr T = make(S.G, Q, std::move(action));
  std::vector<std::uint32_t> sigma(T->order());
  for (std::uint32_t l = 0; l < T->order(); ++l) sigma[l] = T->embed(S.sigma[T->ghat_part(l)], T->proj(l));
  return T->with_sigma(std::move(sigma), p);
}

TargetPtr ParamTarget::with_sigma(std::vector<std::uint32_t> sigma, std::uint32_t p) const {
  const std::uint32_t n = order();
  if (sigma.size() != n) throw std::invalid_argument("target: sigma has the wrong length");
  if (p == 0) throw std::invalid_argument("target: sigma order must be positive");
  std::vector<char> seen(n, 0);
  for (auto x : sigma) {
    if (x >= n || seen[x]) throw std::invalid_argument("target: sigma is not a bijection");
    seen[x] = 1;
  }
  for (std::uint32_t a = 0; a < n; ++a) {
    if (proj(sigma[a]) != proj(a)) throw std::invalid_argument("target: sigma is not over Q");
    for (std::uint32_t b = 0; b < n; ++b)
      if (sigma[L_->mul(a, b)] != L_->mul(sigma[a], sigma[b]))
        throw std::invalid_argument("target: sigma is not a homomorphism");
    std::uint32_t x = a;
    for (std::uint32_t k = 0; k < p; ++k) x = sigma[x];
    if (x != a) throw std::invalid_argument("target: sigma^p is not the identity");
  }
  auto T = std::make_shared<ParamTarget>();
  T->Ghat_ = Ghat_;
  T->Q_ = Q_;
  T->L_ = L_;
  T->action_ = action_;
  T->ghat_gens_ = ghat_gens_;
  T->sigma_ = std::move(sigma);
  T->sigma_p_ = p;
  return T;
}

std::uint32_t ParamTarget::sigma_pow(std::uint32_t l, long k) const {
  if (!has_sigma()) throw std::invalid_argument("target: no sigma-action");
  long e = k % static_cast<long>(sigma_p_);
  if (e < 0) e += sigma_p_;
  for (long i = 0; i < e; ++i) l = sigma_[l];
  return l;
}

std::size_t ParamTarget::tuple_index(const std::vector<std::uint32_t>& t) const {
  std::size_t idx = 0;
  for (auto x : t) idx = idx * order() + x;
  return idx;
}

std::vector<std::uint32_t> ParamTarget::tuple_at(std::size_t index, std::size_t n) const {
  std::vector<std::uint32_t> t(n);
  for (std::size_t i = n; i-- > 0;) {
    t[i] = static_cast<std::uint32_t>(index % order());
    index /= order();
  }
  return t;
}

const ParamTarget::Orbits& ParamTarget::orbits(std::size_t n) const {
  auto it = orbit_cache_.find(n);
  if (it != orbit_cache_.end()) return *it->second;
  const std::size_t total = ipow(order(), n);
  if (total > 5'000'000) throw std::domain_error("excursion: L^n too large for exhaustive tables");
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::uint32_t> t(n), u(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    t = tuple_at(idx, n);
    for (auto h : ghat_gens_) {
      for (int side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < n; ++i) u[i] = side == 0 ? L_->mul(h, t[i]) : L_->mul(t[i], h);
        auto a = find(static_cast<std::uint32_t>(idx)), b = find(static_cast<std::uint32_t>(tuple_index(u)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  auto o = std::make_shared<Orbits>();
  o->id.resize(total);
  std::vector<std::uint32_t> label(total, UINT32_MAX);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto r = find(static_cast<std::uint32_t>(idx));
    if (label[r] == UINT32_MAX) label[r] = static_cast<std::uint32_t>(o->count++);
    o->id[idx] = label[r];
  }
  orbit_cache_[n] = o;
  return *o;
}

// ---------------------------------------------------------------- Gamma, homs

GammaData GammaData::make(GroupPtr G, std::vector<std::uint32_t> to_Q, const GroupPtr& Q) {
  if (to_Q.size() != G->order()) throw std::invalid_argument("gamma: map to Q has the wrong length");
  for (auto q : to_Q)
    if (q >= Q->order()) throw std::invalid_argument("gamma: map to Q out of range");
  for (std::uint32_t a = 0; a < G->order(); ++a)
    for (std::uint32_t b = 0; b < G->order(); ++b)
      if (to_Q[G->mul(a, b)] != Q->mul(to_Q[a], to_Q[b]))
        throw std::invalid_argument("gamma: map to Q is not a homomorphism");
  std::set<std::uint32_t> im(to_Q.begin(), to_Q.end());
  if (im.size() != Q->order()) throw std::invalid_argument("gamma: map to Q is not surjective");
  return GammaData{std::move(G), std::move(to_Q)};
}

GammaData GammaData::over_trivial(GroupPtr G) {
  std::vector<std::uint32_t> z(G->order(), 0);
  return GammaData{std::move(G), std::move(z)};
}

std::vector<Hom> over_q_homs(const GammaData& Gm, const ParamTarget& T) {
  const FiniteGroup& G = *Gm.G;
  const FiniteGroup& L = *T.group();
  check_order(G.order(), "|Gamma|");
  check_order(L.order(), "|L|");
  if (Gm.to_Q.size() != G.order()) throw std::invalid_argument("excursion: gamma data does not match Gamma");
  const auto& gens = G.generators();
  std::vector<std::vector<std::uint32_t>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::uint32_t l = 0; l < L.order(); ++l)
      if (T.proj(l) == Gm.to_Q[gens[j]]) cand[j].push_back(l);
  std::vector<Hom> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  const std::uint32_t unset = UINT32_MAX;
  for (;;) {
    bool any_empty = false;
    for (const auto& c : cand) any_empty = any_empty || c.empty();
    if (any_empty) break;
    // extend along the Cayley graph, checking every edge
    Hom img(G.order(), unset);
    img[G.identity()] = L.identity();
    std::vector<std::uint32_t> queue{G.identity()};
    bool ok = true;
    for (std::size_t k = 0; k < queue.size() && ok; ++k) {
      std::uint32_t x = queue[k];
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        std::uint32_t y = G.mul(x, gens[j]);
        std::uint32_t v = L.mul(img[x], cand[j][pick[j]]);
        if (img[y] == unset) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          ok = false;
        }
      }
    }
    if (ok) out.push_back(std::move(img));
    std::size_t j = 0;
    while (j < gens.size() && ++pick[j] == cand[j].size()) pick[j++] = 0;
    if (j == gens.size()) break;
  }
  return out;
}

Hom canonical_rep(const GammaData& Gm, const ParamTarget& T, const Hom& rho) {
  const FiniteGroup& L = *T.group();
  const auto& gens = Gm.G->generators();
  std::vector<std::uint32_t> best;
  std::uint32_t best_h = 0;
  for (std::uint32_t g = 0; g < T.ghat()->order(); ++g) {
    std::uint32_t h = T.from_ghat(g);
    std::vector<std::uint32_t> key;
    for (auto s : gens) key.push_back(L.conj(h, rho[s]));
    if (best.empty() || key < best) {
      best = key;
      best_h = h;
    }
  }
  Hom out(rho.size());
  for (std::size_t x = 0; x < rho.size(); ++x) out[x] = L.conj(best_h, rho[x]);
  return out;
}

std::vector<Hom> rep_stack(const GammaData& Gm, const ParamTarget& T) {
  std::set<Hom> seen;
  for (const auto& rho : over_q_homs(Gm, T)) seen.insert(canonical_rep(Gm, T, rho));
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------- invariant functions

InvariantFunction InvariantFunction::make(TargetPtr T, Field f, std::size_t n, Vec table) {
  const std::size_t total = ipow(T->order(), n);
  if (table.size() != total) throw std::invalid_argument("excursion: function table has the wrong size");
  const FiniteGroup& L = *T->group();
  std::vector<std::uint32_t> u(n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    auto t = T->tuple_at(idx, n);
    for (auto h : T->ghat_generators())
      for (int side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < n; ++i) u[i] = side == 0 ? L.mul(h, t[i]) : L.mul(t[i], h);
        if (table[T->tuple_index(u)] != table[idx])
          throw std::invalid_argument("excursion: function is not bi-invariant under Ghat");
      }
  }
  InvariantFunction F;
  F.T_ = std::move(T);
  F.f_ = std::move(f);
  F.n_ = n;
  F.table_ = std::move(table);
  return F;
}

InvariantFunction InvariantFunction::from_function(TargetPtr T, Field f, std::size_t n,
                                                   const std::function<Elem(const std::vector<std::uint32_t>&)>& fn) {
  const std::size_t total = ipow(T->order(), n);
  Vec table(total);
  for (std::size_t idx = 0; idx < total; ++idx) table[idx] = fn(T->tuple_at(idx, n));
  return make(std::move(T), std::move(f), n, std::move(table));
}

InvariantFunction InvariantFunction::constant(TargetPtr T, Field f, std::size_t n, Elem c) {
  InvariantFunction F;
  F.table_.assign(ipow(T->order(), n), c);
  F.T_ = std::move(T);
  F.f_ = std::move(f);
  F.n_ = n;
  return F;
}

InvariantFunction InvariantFunction::random(TargetPtr T, Field f, std::size_t n, Rng& rng) {
  const auto& o = T->orbits(n);
  Vec vals(o.count);
  for (auto& v : vals) v = random_elem(f, rng);
  InvariantFunction F;
  F.table_.resize(o.id.size());
  for (std::size_t i = 0; i < o.id.size(); ++i) F.table_[i] = vals[o.id[i]];
  F.T_ = std::move(T);
  F.f_ = std::move(f);
  F.n_ = n;
  return F;
}

InvariantFunction InvariantFunction::orbit_indicator(TargetPtr T, Field f, std::size_t n, std::size_t orbit) {
  const auto& o = T->orbits(n);
  if (orbit >= o.count) throw std::invalid_argument("excursion: orbit index out of range");
  InvariantFunction F;
  F.table_.resize(o.id.size());
  for (std::size_t i = 0; i < o.id.size(); ++i) F.table_[i] = o.id[i] == orbit ? f.one() : f.zero();
  F.T_ = std::move(T);
  F.f_ = std::move(f);
  F.n_ = n;
  return F;
}

InvariantFunction InvariantFunction::operator+(const InvariantFunction& o) const {
  if (n_ != o.n_ || T_ != o.T_) throw std::invalid_argument("excursion: adding functions of different shape");
  InvariantFunction F = *this;
  F.table_ = vec_add(f_, table_, o.table_);
  return F;
}

InvariantFunction InvariantFunction::operator*(const InvariantFunction& o) const {
  if (n_ != o.n_ || T_ != o.T_) throw std::invalid_argument("excursion: multiplying functions of different shape");
  InvariantFunction F = *this;
  for (std::size_t i = 0; i < table_.size(); ++i) F.table_[i] = f_.mul(table_[i], o.table_[i]);
  return F;
}

InvariantFunction InvariantFunction::scaled(Elem s) const {
  InvariantFunction F = *this;
  F.table_ = vec_scale(f_, s, table_);
  return F;
}

std::vector<std::uint32_t> reparametrize(const GammaData& Gm, const std::vector<std::uint32_t>& gamma) {
  if (gamma.empty()) return gamma;
  std::vector<std::uint32_t> out(gamma.size());
  const std::uint32_t last = gamma.back();
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i) out[i] = Gm.G->mul(gamma[i], last);
  out.back() = last;
  return out;
}

Elem eval_gen(const GammaData& Gm, const FirstGen& S, const Hom& rho, Convention c) {
  if (S.gamma.size() != S.f.arity()) throw std::invalid_argument("excursion: gamma tuple does not match the arity");
  for (auto g : S.gamma)
    if (g >= Gm.G->order()) throw std::invalid_argument("excursion: gamma element out of range");
  const auto gam = c == Convention::LastIndex ? reparametrize(Gm, S.gamma) : S.gamma;
  std::vector<std::uint32_t> args(gam.size());
  for (std::size_t i = 0; i < gam.size(); ++i) args[i] = rho[gam[i]];
  return S.f(args);
}

// ---------------------------------------------------------------- LRep

LRep LRep::make(TargetPtr T, Field f, std::size_t dim, std::vector<std::vector<Mat>> images) {
  const FiniteGroup& L = *T->group();
  for (const auto& fam : images) {
    if (fam.size() != L.order()) throw std::invalid_argument("excursion: rep needs one image per element of L");
    for (const auto& m : fam)
      if (m.rows() != dim || m.cols() != dim) throw std::invalid_argument("excursion: rep image has the wrong shape");
    if (!fam[L.identity()].is_identity()) throw std::invalid_argument("excursion: identity does not act trivially");
    for (auto s : L.generators())
      for (std::uint32_t b = 0; b < L.order(); ++b)
        if (!(fam[L.mul(s, b)] == fam[s] * fam[b]))
          throw std::invalid_argument("excursion: rep images violate the group relations");
  }
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      for (auto a : L.generators())
        for (auto b : L.generators())
          if (!(images[i][a] * images[j][b] == images[j][b] * images[i][a]))
            throw std::invalid_argument("excursion: actions of different indices do not commute");
  LRep W;
  W.T_ = std::move(T);
  W.f_ = std::move(f);
  W.d_ = dim;
  W.images_ = std::move(images);
  return W;
}

LRep LRep::from_rep(TargetPtr T, const GroupRep& R) {
  if (R.group()->order() != T->order()) throw std::invalid_argument("excursion: rep is not a rep of L");
  std::vector<Mat> fam;
  for (std::uint32_t l = 0; l < T->order(); ++l) fam.push_back(R(l));
  LRep W;
  W.T_ = std::move(T);
  W.f_ = R.field();
  W.d_ = R.dim();
  W.images_ = {std::move(fam)};
  return W;
}

LRep LRep::trivial(TargetPtr T, Field f, std::size_t n, std::size_t dim) {
  LRep W;
  W.images_.assign(n, std::vector<Mat>(T->order(), Mat::identity(f, dim)));
  W.T_ = std::move(T);
  W.f_ = std::move(f);
  W.d_ = dim;
  return W;
}

Vec LRep::act(const std::vector<std::uint32_t>& g, const Vec& v) const {
  if (g.size() != arity()) throw std::invalid_argument("excursion: tuple does not match the arity");
  Vec w = v;
  for (std::size_t i = 0; i < g.size(); ++i) w = images_[i][g[i]].apply(w);
  return w;
}

Mat LRep::act_matrix(const std::vector<std::uint32_t>& g) const {
  Mat m = Mat::identity(f_, d_);
  for (std::size_t i = 0; i < g.size(); ++i) m = images_[i][g[i]] * m;
  return m;
}

Mat LRep::diagonal(std::uint32_t l) const { return act_matrix(std::vector<std::uint32_t>(arity(), l)); }

Mat LRep::invariant_vectors() const {
  Mat eq(f_, 0, d_);
  for (auto h : T_->ghat_generators()) eq = vstack(eq, diagonal(h) - Mat::identity(f_, d_));
  return kernel(eq);
}

Mat LRep::invariant_functionals() const {
  Mat eq(f_, 0, d_);
  for (auto h : T_->ghat_generators()) eq = vstack(eq, diagonal(h).transpose() - Mat::identity(f_, d_));
  return kernel(eq);
}

LRep box(const LRep& a, const LRep& b) {
  LRep W;
  W.T_ = a.T_;
  W.f_ = a.f_;
  W.d_ = a.d_ * b.d_;
  const Mat ia = Mat::identity(a.f_, a.d_), ib = Mat::identity(a.f_, b.d_);
  for (const auto& fam : a.images_) {
    std::vector<Mat> out;
    for (const auto& m : fam) out.push_back(m.kron(ib));
    W.images_.push_back(std::move(out));
  }
  for (const auto& fam : b.images_) {
    std::vector<Mat> out;
    for (const auto& m : fam) out.push_back(ia.kron(m));
    W.images_.push_back(std::move(out));
  }
  return W;
}

LRep tensor(const LRep& a, const LRep& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("excursion: tensor of reps of different arity");
  LRep W;
  W.T_ = a.T_;
  W.f_ = a.f_;
  W.d_ = a.d_ * b.d_;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    std::vector<Mat> out;
    for (std::uint32_t l = 0; l < a.T_->order(); ++l) out.push_back(a.images_[i][l].kron(b.images_[i][l]));
    W.images_.push_back(std::move(out));
  }
  return W;
}

LRep direct_sum(const LRep& a, const LRep& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("excursion: direct sum of reps of different arity");
  LRep W;
  W.T_ = a.T_;
  W.f_ = a.f_;
  W.d_ = a.d_ + b.d_;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    std::vector<Mat> out;
    for (std::uint32_t l = 0; l < a.T_->order(); ++l) out.push_back(block_diag(a.images_[i][l], b.images_[i][l]));
    W.images_.push_back(std::move(out));
  }
  return W;
}

LRep disjoint_sum(const LRep& a, const LRep& b) {
  LRep W;
  W.T_ = a.T_;
  W.f_ = a.f_;
  W.d_ = a.d_ + b.d_;
  const Mat ia = Mat::identity(a.f_, a.d_), ib = Mat::identity(a.f_, b.d_);
  for (const auto& fam : a.images_) {
    std::vector<Mat> out;
    for (const auto& m : fam) out.push_back(block_diag(m, ib));
    W.images_.push_back(std::move(out));
  }
  for (const auto& fam : b.images_) {
    std::vector<Mat> out;
    for (const auto& m : fam) out.push_back(block_diag(ia, m));
    W.images_.push_back(std::move(out));
  }
  return W;
}

LRep dual(const LRep& a) {
  LRep W = a;
  const FiniteGroup& L = *a.T_->group();
  for (std::size_t i = 0; i < a.arity(); ++i)
    for (std::uint32_t l = 0; l < L.order(); ++l) W.images_[i][l] = a.images_[i][L.inv(l)].transpose();
  return W;
}

LRep restrict_along(const LRep& a, const std::vector<std::uint32_t>& zeta, std::size_t arity) {
  if (zeta.size() != a.arity()) throw std::invalid_argument("excursion: zeta must be defined on every index");
  for (auto j : zeta)
    if (j >= arity) throw std::invalid_argument("excursion: zeta value out of range");
  LRep W;
  W.T_ = a.T_;
  W.f_ = a.f_;
  W.d_ = a.d_;
  W.images_.assign(arity, std::vector<Mat>(a.T_->order(), Mat::identity(a.f_, a.d_)));
  for (std::size_t i = 0; i < zeta.size(); ++i)
    for (std::uint32_t l = 0; l < a.T_->order(); ++l)
      W.images_[zeta[i]][l] = a.images_[i][l] * W.images_[zeta[i]][l];
  return W;
}

LRep pullback(const LRep& a, TargetPtr src, const std::vector<std::uint32_t>& phi) {
  if (phi.size() != src->order()) throw std::invalid_argument("excursion: phi has the wrong length");
  LRep W;
  W.T_ = std::move(src);
  W.f_ = a.f_;
  W.d_ = a.d_;
  for (const auto& fam : a.images_) {
    std::vector<Mat> out;
    for (auto l : phi) out.push_back(fam[l]);
    W.images_.push_back(std::move(out));
  }
  return W;
}

LRep sigma_twist(const LRep& a, long k) {
  LRep W = a;
  for (std::size_t i = 0; i < a.arity(); ++i)
    for (std::uint32_t l = 0; l < a.T_->order(); ++l) W.images_[i][l] = a.images_[i][a.T_->sigma_pow(l, -k)];
  return W;
}

SecondGen SecondGen::make(LRep W, Vec x, Vec xi, std::vector<std::uint32_t> gamma) {
  if (x.size() != W.dim() || xi.size() != W.dim()) throw std::invalid_argument("excursion: x or xi has the wrong length");
  if (gamma.size() != W.arity()) throw std::invalid_argument("excursion: gamma tuple does not match the arity");
  for (auto h : W.target()->ghat_generators()) {
    Mat D = W.diagonal(h);
    if (D.apply(x) != x) throw std::invalid_argument("excursion: x is not invariant under the diagonal Ghat");
    if (D.apply_left(xi) != xi) throw std::invalid_argument("excursion: xi is not invariant under the diagonal Ghat");
  }
  return SecondGen{std::move(W), std::move(x), std::move(xi), std::move(gamma)};
}

Elem eval_gen(const SecondGen& S, const Hom& rho) {
  std::vector<std::uint32_t> g(S.gamma.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = rho[S.gamma[i]];
  return dot(S.W.field(), S.xi, S.W.act(g, S.x));
}

InvariantFunction bridge_f(const LRep& W, const Vec& x, const Vec& xi) {
  SecondGen::make(W, x, xi, std::vector<std::uint32_t>(W.arity(), 0));
  const Field& f = W.field();
  return InvariantFunction::from_function(W.target(), f, W.arity(), [&](const std::vector<std::uint32_t>& g) {
    return dot(f, xi, W.act(g, x));
  });
}

std::vector<GroupRep> small_reps(const TargetPtr& T, const Field& f, std::size_t max_dim) {
  const FiniteGroup& L = *T->group();
  std::vector<GroupRep> out{GroupRep::trivial(T->group(), f)};
  std::set<std::vector<std::uint32_t>> seen_subgroups;
  auto same = [&](const GroupRep& a, const GroupRep& b) {
    if (a.dim() != b.dim()) return false;
    for (std::uint32_t l = 0; l < L.order(); ++l)
      if (!(a(l) == b(l))) return false;
    return true;
  };
  auto add = [&](GroupRep R) {
    for (const auto& o : out)
      if (same(o, R)) return;
    out.push_back(std::move(R));
  };
  for (std::uint32_t c = 0; c < L.order(); ++c) {
    auto C = L.closure({c});
    if (!seen_subgroups.insert(C).second) continue;
    const std::size_t index = L.order() / C.size();
    if (index > max_dim || index < 2) continue;
    // cosets lC, numbered by first appearance
    std::vector<std::uint32_t> coset(L.order(), UINT32_MAX), reps;
    for (std::uint32_t l = 0; l < L.order(); ++l) {
      if (coset[l] != UINT32_MAX) continue;
      for (auto x : C) coset[L.mul(l, x)] = static_cast<std::uint32_t>(reps.size());
      reps.push_back(l);
    }
    GroupRep P = GroupRep::from_function(T->group(), f, index, [&](std::uint32_t g) {
      Mat m(f, index, index);
      for (std::size_t y = 0; y < index; ++y) m.at(coset[L.mul(g, reps[y])], y) = f.one();
      return m;
    });
    GroupRep det = GroupRep::from_function(T->group(), f, 1, [&](std::uint32_t g) {
      // sign of the permutation
      const Mat& m = P(g);
      std::vector<std::size_t> perm(index);
      for (std::size_t y = 0; y < index; ++y)
        for (std::size_t z = 0; z < index; ++z)
          if (m(z, y) == f.one()) perm[y] = z;
      std::vector<char> vis(index, 0);
      std::size_t swaps = 0;
      for (std::size_t s = 0; s < index; ++s) {
        std::size_t len = 0;
        for (std::size_t y = s; !vis[y]; y = perm[y], ++len) vis[y] = 1;
        if (len > 0) swaps += len - 1;
      }
      Mat d(f, 1, 1);
      d.at(0, 0) = swaps % 2 ? f.neg(f.one()) : f.one();
      return d;
    });
    add(std::move(P));
    add(std::move(det));
  }
  std::stable_sort(out.begin(), out.end(), [](const GroupRep& a, const GroupRep& b) { return a.dim() < b.dim(); });
  return out;
}

SecondGen random_second_gen(const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t arity,
                            std::size_t max_dim, Rng& rng) {
  const auto reps = small_reps(T, f, max_dim);
  for (int attempt = 0; attempt < 32; ++attempt) {
    LRep W = LRep::trivial(T, f, 0);
    for (std::size_t i = 0; i < arity; ++i) {
      const std::size_t budget = max_dim / W.dim();
      std::vector<std::size_t> ok;
      for (std::size_t r = 0; r < reps.size(); ++r)
        if (reps[r].dim() <= budget) ok.push_back(r);
      W = box(W, LRep::from_rep(T, reps[ok[rand_below(rng, ok.size())]]));
    }
    Mat X = W.invariant_vectors(), Xi = W.invariant_functionals();
    if (X.rows() == 0 || Xi.rows() == 0) continue;
    Vec x = random_combination(X, rng), xi = random_combination(Xi, rng);
    std::vector<std::uint32_t> gamma(arity);
    for (auto& g : gamma) g = static_cast<std::uint32_t>(rand_below(rng, Gm.G->order()));
    return SecondGen::make(std::move(W), std::move(x), std::move(xi), std::move(gamma));
  }
  LRep W = LRep::trivial(T, f, arity);
  std::vector<std::uint32_t> gamma(arity);
  for (auto& g : gamma) g = static_cast<std::uint32_t>(rand_below(rng, Gm.G->order()));
  return SecondGen::make(std::move(W), Vec{random_elem(f, rng)}, Vec{random_elem(f, rng)}, std::move(gamma));
}

// ---------------------------------------------------------------- tautological family

TautologicalFamily::TautologicalFamily(GammaData Gm, TargetPtr T) : Gm_(std::move(Gm)), T_(std::move(T)) {
  homs_ = over_q_homs(Gm_, *T_);
  std::sort(homs_.begin(), homs_.end());
  points_ = rep_stack(Gm_, *T_);
  point_of_.resize(homs_.size());
  for (std::size_t k = 0; k < homs_.size(); ++k) {
    Hom c = canonical_rep(Gm_, *T_, homs_[k]);
    point_of_[k] = static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), c) - points_.begin());
  }
}

Mat TautologicalFamily::basis(const LRep& W) const {
  // F(h rho h^{-1}) = diag(h) F(rho) for h in the generators of Ghat
  const Field& f = W.field();
  const std::size_t d = W.dim(), n = ambient(W);
  const FiniteGroup& L = *T_->group();
  Mat eq(f, 0, n);
  for (auto h : T_->ghat_generators()) {
    Mat D = W.diagonal(h);
    Mat block(f, n, n);
    for (std::size_t k = 0; k < homs_.size(); ++k) {
      Hom c(homs_[k].size());
      for (std::size_t x = 0; x < c.size(); ++x) c[x] = L.conj(h, homs_[k][x]);
      std::size_t k2 = static_cast<std::size_t>(std::lower_bound(homs_.begin(), homs_.end(), c) - homs_.begin());
      for (std::size_t a = 0; a < d; ++a) {
        block.at(k2 * d + a, k2 * d + a) = f.add(block(k2 * d + a, k2 * d + a), f.one());
        for (std::size_t b = 0; b < d; ++b)
          block.at(k2 * d + a, k * d + b) = f.sub(block(k2 * d + a, k * d + b), D(a, b));
      }
    }
    eq = vstack(eq, block);
  }
  return kernel(eq);
}

Mat TautologicalFamily::functor(const LRep& W, const LRep& W2, const Mat& u) const {
  if (u.rows() != W2.dim() || u.cols() != W.dim()) throw std::invalid_argument("family: map has the wrong shape");
  Mat out(W.field(), ambient(W2), ambient(W));
  for (std::size_t k = 0; k < homs_.size(); ++k)
    for (std::size_t a = 0; a < W2.dim(); ++a)
      for (std::size_t b = 0; b < W.dim(); ++b) out.at(k * W2.dim() + a, k * W.dim() + b) = u(a, b);
  return out;
}

Mat TautologicalFamily::action(const LRep& W, const std::vector<std::uint32_t>& gamma) const {
  const std::size_t d = W.dim();
  Mat out(W.field(), ambient(W), ambient(W));
  std::vector<std::uint32_t> g(gamma.size());
  for (std::size_t k = 0; k < homs_.size(); ++k) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = homs_[k][gamma[i]];
    Mat m = W.act_matrix(g);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out.at(k * d + a, k * d + b) = m(a, b);
  }
  return out;
}

Mat TautologicalFamily::fusion(const LRep& W, const std::vector<std::uint32_t>& zeta, std::size_t arity) const {
  (void)zeta;
  (void)arity;
  return Mat::identity(W.field(), ambient(W));
}

Vec TautologicalFamily::point_indicator(std::size_t k, const Field& f) const {
  Vec v(homs_.size(), f.zero());
  for (std::size_t j = 0; j < homs_.size(); ++j)
    if (point_of_[j] == k) v[j] = f.one();
  return v;
}

Mat eval_construction(const TautologicalFamily& family, const SecondGen& S) {
  const LRep& W = S.W;
  const Field& f = W.field();
  const std::size_t n = W.arity();
  const TargetPtr& T = W.target();
  std::vector<std::uint32_t> collapse(n, 0);
  LRep Wz = restrict_along(W, collapse, 1);
  LRep one = LRep::trivial(T, f, 1);

  // fusion compatibility: chi_zeta (gamma_{zeta(i)})_I = (gamma_j)_J chi_zeta on H_I(W)
  Mat HI = family.basis(W);
  Mat chi = family.fusion(W, collapse, 1);
  std::vector<std::uint32_t> gJ{S.gamma.empty() ? 0u : S.gamma[0]};
  std::vector<std::uint32_t> gI(n, gJ[0]);
  Mat lhs = chi * family.action(W, gI), rhs = family.action(Wz, gJ) * chi;
  Mat act = family.action(W, S.gamma);
  for (std::size_t r = 0; r < HI.rows(); ++r) {
    Vec v = HI.row(r);
    if (lhs.apply(v) != rhs.apply(v)) throw std::logic_error("family: fusion compatibility fails");
    if (!in_span(HI, act.apply(v))) throw std::logic_error("family: Gamma^I action leaves H_I(W)");
  }

  Mat Hx = family.functor(one, Wz, Mat::from_cols(f, W.dim(), {S.x}));
  Mat Hxi = family.functor(Wz, one, Mat::from_rows(f, W.dim(), {S.xi}));
  Mat M = Hxi * chi * act * inverse(chi) * Hx;

  const std::size_t pts = family.points().size();
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < pts; ++k) rows.push_back(family.point_indicator(k, f));
  Mat P = Mat::from_rows(f, family.ambient(one), rows);
  Mat H0 = family.basis(one);
  if (rank(vstack(P, H0)) != pts || H0.rows() != pts)
    throw std::logic_error("family: H_{0}(1) is not spanned by the point indicators");
  Decomposer dec(P);
  Mat out(f, pts, pts);
  for (std::size_t k = 0; k < pts; ++k) {
    auto c = dec.coeffs(M.apply(rows[k]));
    if (!c) throw std::logic_error("family: composite leaves H_{0}(1)");
    out.set_col(k, *c);
  }
  return out;
}

// ---------------------------------------------------------------- functoriality

TargetHom TargetHom::make(TargetPtr src, TargetPtr dst, std::vector<std::uint32_t> map) {
  const FiniteGroup& A = *src->group();
  const FiniteGroup& B = *dst->group();
  if (map.size() != A.order()) throw std::invalid_argument("excursion: phi has the wrong length");
  if (src->quotient()->order() != dst->quotient()->order())
    throw std::invalid_argument("excursion: phi relates targets with different Q");
  for (auto y : map)
    if (y >= B.order()) throw std::invalid_argument("excursion: phi value out of range");
  for (std::uint32_t a = 0; a < A.order(); ++a) {
    if (dst->proj(map[a]) != src->proj(a)) throw std::invalid_argument("excursion: phi is not over Q");
    for (std::uint32_t b = 0; b < A.order(); ++b)
      if (map[A.mul(a, b)] != B.mul(map[a], map[b])) throw std::invalid_argument("excursion: phi is not a homomorphism");
  }
  return TargetHom{std::move(src), std::move(dst), std::move(map)};
}

TargetHom TargetHom::identity(const TargetPtr& T) {
  std::vector<std::uint32_t> m(T->order());
  std::iota(m.begin(), m.end(), 0u);
  return TargetHom{T, T, std::move(m)};
}

TargetHom TargetHom::base_change_diagonal(const TargetPtr& H, const TargetPtr& G, std::uint32_t p) {
  const std::uint32_t nh = H->ghat()->order();
  if (G->ghat()->order() != ipow(nh, p)) throw std::invalid_argument("excursion: base-change target has the wrong size");
  std::vector<std::uint32_t> m(H->order());
  for (std::uint32_t l = 0; l < H->order(); ++l)
    m[l] = G->embed(diagonal_element(nh, H->ghat_part(l), p), H->proj(l));
  return make(H, G, std::move(m));
}

Hom compose(const TargetHom& phi, const Hom& rho) {
  Hom out(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) out[i] = phi.map[rho[i]];
  return out;
}

FirstGen pullback(const TargetHom& phi, const FirstGen& S) {
  if (S.f.target() != phi.dst) throw std::invalid_argument("excursion: generator is not over the target of phi");
  const InvariantFunction& f = S.f;
  auto g = InvariantFunction::from_function(phi.src, f.field(), f.arity(), [&](const std::vector<std::uint32_t>& t) {
    std::vector<std::uint32_t> u(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) u[i] = phi.map[t[i]];
    return f(u);
  });
  return FirstGen{std::move(g), S.gamma};
}

SecondGen pullback(const TargetHom& phi, const SecondGen& S) {
  if (S.W.target() != phi.dst) throw std::invalid_argument("excursion: generator is not over the target of phi");
  return SecondGen::make(pullback(S.W, phi.src, phi.map), S.x, S.xi, S.gamma);
}

PointCheck pullback_check(const TargetHom& phi, const GammaData& Gm, const FirstGen& S, Convention c) {
  FirstGen P = pullback(phi, S);
  PointCheck r;
  for (const auto& rho : rep_stack(Gm, *phi.src)) {
    ++r.points;
    if (eval_gen(Gm, P, rho, c) != eval_gen(Gm, S, compose(phi, rho), c)) ++r.failures;
  }
  return r;
}

PointCheck pullback_check(const TargetHom& phi, const GammaData& Gm, const SecondGen& S) {
  SecondGen P = pullback(phi, S);
  PointCheck r;
  for (const auto& rho : rep_stack(Gm, *phi.src)) {
    ++r.points;
    if (eval_gen(P, rho) != eval_gen(S, compose(phi, rho))) ++r.failures;
  }
  return r;
}

// ---------------------------------------------------------------- sigma, norms

SecondGen sigma_gen(const SecondGen& S, long k) {
  if (!S.W.target()->has_sigma()) throw std::invalid_argument("excursion: target lacks a sigma-action");
  return SecondGen::make(sigma_twist(S.W, k), S.x, S.xi, S.gamma);
}

namespace {

// A W -> sigma(W), i.e. A W(g) = W(sigma^{-1} g) A, and A x = x, xi A = xi.
void verify_equivariant(const SecondGen& S, const Mat& A) {
  const LRep& W = S.W;
  const TargetPtr& T = W.target();
  for (std::size_t i = 0; i < W.arity(); ++i)
    for (std::uint32_t l = 0; l < T->order(); ++l)
      if (!(A * W.image(i, l) == W.image(i, T->sigma_pow(l, -1)) * A))
        throw std::logic_error("excursion: rotation is not a sigma-equivariant structure");
  if (A.apply(S.x) != S.x || A.apply_left(S.xi) != S.xi)
    throw std::logic_error("excursion: x or xi is not sigma-invariant");
  if (!A.pow(T->sigma_order()).is_identity()) throw std::logic_error("excursion: rotation does not have order p");
}

}  // namespace

EquivariantGen norm_gen(const SecondGen& S) {
  const TargetPtr& T = S.W.target();
  if (!T->has_sigma()) throw std::invalid_argument("excursion: target lacks a sigma-action");
  const std::uint32_t p = T->sigma_order();
  const Field& f = S.W.field();
  LRep W = S.W;
  Vec x = S.x, xi = S.xi;
  for (std::uint32_t k = 1; k < p; ++k) {
    W = tensor(W, sigma_twist(S.W, k));
    x = kron_vec(f, x, S.x);
    xi = kron_vec(f, xi, S.xi);
  }
  // position k of A v is factor k+1 of v
  Mat A = tensor_rotation(f, S.W.dim(), p).pow(p - 1);
  SecondGen g = SecondGen::make(std::move(W), std::move(x), std::move(xi), S.gamma);
  verify_equivariant(g, A);
  return EquivariantGen{std::move(g), std::move(A)};
}

EquivariantGen n_dot_gen(const SecondGen& S) {
  const TargetPtr& T = S.W.target();
  if (!T->has_sigma()) throw std::invalid_argument("excursion: target lacks a sigma-action");
  const std::uint32_t p = T->sigma_order();
  const Field& f = S.W.field();
  const std::size_t d = S.W.dim();
  LRep W = S.W;
  Vec x = S.x, xi = S.xi;
  for (std::uint32_t k = 1; k < p; ++k) {
    W = direct_sum(W, sigma_twist(S.W, k));
    x = concat(x, S.x);
    xi = concat(xi, S.xi);
  }
  Mat A(f, p * d, p * d);
  for (std::uint32_t k = 0; k < p; ++k)
    for (std::size_t a = 0; a < d; ++a) A.at(k * d + a, ((k + 1) % p) * d + a) = f.one();
  SecondGen g = SecondGen::make(std::move(W), std::move(x), std::move(xi), S.gamma);
  verify_equivariant(g, A);
  return EquivariantGen{std::move(g), std::move(A)};
}

NormCheck norm_identities(const GammaData& Gm, const SecondGen& S) {
  const TargetPtr& T = S.W.target();
  const Field& f = S.W.field();
  const std::uint32_t p = T->sigma_order();
  EquivariantGen nm = norm_gen(S), nd = n_dot_gen(S);
  std::vector<SecondGen> twists;
  for (std::uint32_t k = 0; k < p; ++k) twists.push_back(sigma_gen(S, k));
  NormCheck r;
  for (const auto& rho : rep_stack(Gm, *T)) {
    ++r.points;
    Elem prod = f.one(), sum = f.zero();
    for (const auto& t : twists) {
      Elem v = eval_gen(t, rho);
      prod = f.mul(prod, v);
      sum = f.add(sum, v);
    }
    if (eval_gen(nm.gen, rho) != prod) ++r.norm_failures;
    if (eval_gen(nd.gen, rho) != sum) ++r.sum_failures;
  }
  return r;
}

// ---------------------------------------------------------------- relation suite

bool SuiteReport::pass() const {
  for (const auto& l : lines)
    if (!l.informational && l.failures > 0) return false;
  return !lines.empty();
}

namespace {

class Suite {
 public:
  Suite(const GammaData& Gm, const TargetPtr& T, const Field& f, Rng& rng)
      : Gm_(Gm), T_(T), f_(f), rng_(rng), homs_(over_q_homs(Gm, *T)), points_(rep_stack(Gm, *T)) {}

  std::vector<std::uint32_t> random_gamma(std::size_t n) {
    std::vector<std::uint32_t> g(n);
    for (auto& x : g) x = static_cast<std::uint32_t>(rand_below(rng_, Gm_.G->order()));
    return g;
  }

  // Compares two functions on the representation stack.
  template <class A, class B>
  bool same(A lhs, B rhs) {
    for (const auto& rho : points_)
      if (lhs(rho) != rhs(rho)) return false;
    return true;
  }

  Elem first(const FirstGen& S, const Hom& rho, Convention c) const { return eval_gen(Gm_, S, rho, c); }

  void record(SuiteReport& rep, const std::string& id, bool ok, bool info = false) {
    for (auto& l : rep.lines)
      if (l.id == id) {
        ++l.instances;
        if (!ok) ++l.failures;
        return;
      }
    rep.lines.push_back(CheckLine{id, 1, ok ? 0u : 1u, info});
  }

  // arity of first-presentation tests: keep tables small
  std::size_t max_arity(std::size_t copies) const {
    std::size_t n = 1;
    while (ipow(T_->order(), copies * (n + 1)) <= 50'000 && n < 2) ++n;
    return n;
  }

  void first_presentation(SuiteReport& rep, Convention c, const std::string& suffix, bool info) {
    const std::size_t n1 = 1 + rand_below(rng_, max_arity(1));
    // (i)
    {
      Elem v = random_elem(f_, rng_);
      FirstGen S{InvariantFunction::constant(T_, f_, 0, v), {}};
      record(rep, "i" + suffix, same([&](const Hom& r) { return first(S, r, c); }, [&](const Hom&) { return v; }), info);
    }
    // (ii)
    {
      auto f1 = InvariantFunction::random(T_, f_, n1, rng_), f2 = InvariantFunction::random(T_, f_, n1, rng_);
      auto g = random_gamma(n1);
      Elem lam = random_elem(f_, rng_);
      FirstGen A{f1, g}, B{f2, g}, Sum{f1 + f2, g}, Prod{f1 * f2, g}, Sc{f1.scaled(lam), g};
      bool ok = same([&](const Hom& r) { return first(Sum, r, c); },
                     [&](const Hom& r) { return f_.add(first(A, r, c), first(B, r, c)); }) &&
                same([&](const Hom& r) { return first(Prod, r, c); },
                     [&](const Hom& r) { return f_.mul(first(A, r, c), first(B, r, c)); }) &&
                same([&](const Hom& r) { return first(Sc, r, c); },
                     [&](const Hom& r) { return f_.mul(lam, first(A, r, c)); });
      record(rep, "ii" + suffix, ok, info);
    }
    // (iii): zeta : I -> J, f^zeta(g_J) = f(g_{zeta(i)})
    {
      const std::size_t nI = 1 + rand_below(rng_, max_arity(1));
      const std::size_t nJ = 1 + rand_below(rng_, max_arity(1));
      std::vector<std::uint32_t> zeta(nI);
      for (auto& z : zeta) z = static_cast<std::uint32_t>(rand_below(rng_, nJ));
      if (nI == nJ && rand_below(rng_, 2) == 0) {
        std::iota(zeta.begin(), zeta.end(), 0u);
        std::shuffle(zeta.begin(), zeta.end(), rng_);
      }
      auto f = InvariantFunction::random(T_, f_, nI, rng_);
      auto fz = InvariantFunction::from_function(T_, f_, nJ, [&](const std::vector<std::uint32_t>& g) {
        std::vector<std::uint32_t> u(nI);
        for (std::size_t i = 0; i < nI; ++i) u[i] = g[zeta[i]];
        return f(u);
      });
      auto gJ = random_gamma(nJ);
      std::vector<std::uint32_t> gI(nI);
      for (std::size_t i = 0; i < nI; ++i) gI[i] = gJ[zeta[i]];
      FirstGen L{fz, gJ}, R{f, gI};
      record(rep, "iii" + suffix,
             same([&](const Hom& r) { return first(L, r, c); }, [&](const Hom& r) { return first(R, r, c); }), info);
    }
    // (iv): f~(g, g', g'') = f(g_i g'_i^{-1} g''_i)
    {
      const std::size_t n = max_arity(3) >= 2 && T_->order() <= 6 ? 1 + rand_below(rng_, 2) : 1;
      const FiniteGroup& L = *T_->group();
      const FiniteGroup& G = *Gm_.G;
      auto f = InvariantFunction::random(T_, f_, n, rng_);
      auto ft = InvariantFunction::from_function(T_, f_, 3 * n, [&](const std::vector<std::uint32_t>& g) {
        std::vector<std::uint32_t> u(n);
        for (std::size_t i = 0; i < n; ++i) u[i] = L.mul(L.mul(g[i], L.inv(g[n + i])), g[2 * n + i]);
        return f(u);
      });
      auto a = random_gamma(n), b = random_gamma(n), d = random_gamma(n);
      std::vector<std::uint32_t> all = a, comb(n);
      all.insert(all.end(), b.begin(), b.end());
      all.insert(all.end(), d.begin(), d.end());
      for (std::size_t i = 0; i < n; ++i) comb[i] = G.mul(G.mul(a[i], G.inv(b[i])), d[i]);
      FirstGen Lg{ft, all}, Rg{f, comb};
      record(rep, "iv" + suffix,
             same([&](const Hom& r) { return first(Lg, r, c); }, [&](const Hom& r) { return first(Rg, r, c); }), info);
    }
    // (v): inflation from Q^I, then the J-version
    {
      const std::size_t n = 1 + rand_below(rng_, max_arity(1));
      const std::uint32_t nq = T_->quotient()->order();
      Vec tab(ipow(nq, n));
      for (auto& v : tab) v = random_elem(f_, rng_);
      auto qidx = [&](const std::vector<std::uint32_t>& qs) {
        std::size_t k = 0;
        for (auto q : qs) k = k * nq + q;
        return k;
      };
      auto f = InvariantFunction::from_function(T_, f_, n, [&](const std::vector<std::uint32_t>& g) {
        std::vector<std::uint32_t> qs(n);
        for (std::size_t i = 0; i < n; ++i) qs[i] = T_->proj(g[i]);
        return tab[qidx(qs)];
      });
      auto g = random_gamma(n);
      std::vector<std::uint32_t> qg(n);
      for (std::size_t i = 0; i < n; ++i) qg[i] = Gm_.to_Q[g[i]];
      FirstGen S{f, g};
      Elem expect = tab[qidx(qg)];
      bool ok = same([&](const Hom& r) { return first(S, r, c); }, [&](const Hom&) { return expect; });

      // J = {0}, I \ J = {1}: f(g0, g1) = F[orbit(g0)][proj(g1)]
      const auto& o1 = T_->orbits(1);
      std::vector<Vec> F(o1.count, Vec(nq));
      for (auto& row : F)
        for (auto& v : row) v = random_elem(f_, rng_);
      auto fj = InvariantFunction::from_function(T_, f_, 2, [&](const std::vector<std::uint32_t>& t) {
        return F[o1.id[t[0]]][T_->proj(t[1])];
      });
      auto g2 = random_gamma(2);
      const std::uint32_t q1 = Gm_.to_Q[g2[1]];
      auto fc = InvariantFunction::from_function(T_, f_, 1, [&](const std::vector<std::uint32_t>& t) {
        return F[o1.id[t[0]]][q1];
      });
      FirstGen SI{fj, g2}, SJ{fc, {g2[0]}};
      ok = ok && same([&](const Hom& r) { return first(SI, r, c); }, [&](const Hom& r) { return first(SJ, r, c); });
      record(rep, "v" + suffix, ok, info);
    }
  }

  void second_presentation(SuiteReport& rep) {
    const std::size_t max_dim = 4;
    // (i): S_{empty, x, xi} = <x, xi>
    {
      const std::size_t d = 1 + rand_below(rng_, 3);
      LRep W = LRep::trivial(T_, f_, 0, d);
      Vec x(d), xi(d);
      for (auto& v : x) v = random_elem(f_, rng_);
      for (auto& v : xi) v = random_elem(f_, rng_);
      SecondGen S = SecondGen::make(W, x, xi, {});
      Elem e = dot(f_, x, xi);
      record(rep, "a0", same([&](const Hom& r) { return eval_gen(S, r); }, [&](const Hom&) { return e; }));
    }
    const std::size_t n = 1 + rand_below(rng_, 2);
    SecondGen S = random_second_gen(Gm_, T_, f_, n, max_dim, rng_);
    // a-1: u : W -> W' = W + W'' an intertwiner of L^I-representations
    {
      SecondGen S2 = random_second_gen(Gm_, T_, f_, n, max_dim, rng_);
      LRep Wp = direct_sum(S.W, S2.W);
      std::vector<Mat> A, B;
      for (std::size_t i = 0; i < n; ++i)
        for (auto s : T_->group()->generators()) {
          A.push_back(S.W.image(i, s));
          B.push_back(Wp.image(i, s));
        }
      auto us = intertwiner_space(A, B);
      Mat u(f_, Wp.dim(), S.W.dim());
      for (const auto& m : us) u = u + m.scaled(random_elem(f_, rng_));
      Mat Xi = Wp.invariant_functionals();
      Vec xip(Wp.dim(), f_.zero());
      for (std::size_t r = 0; r < Xi.rows(); ++r) xip = vec_add(f_, xip, vec_scale(f_, random_elem(f_, rng_), Xi.row(r)));
      SecondGen Lg = SecondGen::make(S.W, S.x, u.apply_left(xip), S.gamma);
      SecondGen Rg = SecondGen::make(Wp, u.apply(S.x), xip, S.gamma);
      record(rep, "a1", same([&](const Hom& r) { return eval_gen(Lg, r); }, [&](const Hom& r) { return eval_gen(Rg, r); }));
    }
    // a-2 and a-2b
    {
      SecondGen S2 = random_second_gen(Gm_, T_, f_, 1, max_dim, rng_);
      std::vector<std::uint32_t> g = S.gamma;
      g.insert(g.end(), S2.gamma.begin(), S2.gamma.end());
      SecondGen P = SecondGen::make(box(S.W, S2.W), kron_vec(f_, S.x, S2.x), kron_vec(f_, S.xi, S2.xi), g);
      SecondGen Sm = SecondGen::make(disjoint_sum(S.W, S2.W), concat(S.x, S2.x), concat(S.xi, S2.xi), g);
      record(rep, "a2", same([&](const Hom& r) { return eval_gen(P, r); },
                             [&](const Hom& r) { return f_.mul(eval_gen(S, r), eval_gen(S2, r)); }));
      record(rep, "a2b", same([&](const Hom& r) { return eval_gen(Sm, r); },
                              [&](const Hom& r) { return f_.add(eval_gen(S, r), eval_gen(S2, r)); }));
      // linearity in x and xi
      Elem a = random_elem(f_, rng_);
      Mat X = S.W.invariant_vectors();
      Vec x2 = random_combination(X, rng_);
      SecondGen Lin = SecondGen::make(S.W, vec_add(f_, S.x, vec_scale(f_, a, x2)), S.xi, S.gamma);
      SecondGen S3 = SecondGen::make(S.W, x2, S.xi, S.gamma);
      record(rep, "a2.linear", same([&](const Hom& r) { return eval_gen(Lin, r); }, [&](const Hom& r) {
               return f_.add(eval_gen(S, r), f_.mul(a, eval_gen(S3, r)));
             }));
    }
    // a-1.5: W^zeta on J with gamma_J against W on I with gamma_{zeta(i)}
    {
      const std::size_t nJ = 1 + rand_below(rng_, 2);
      std::vector<std::uint32_t> zeta(n);
      for (auto& z : zeta) z = static_cast<std::uint32_t>(rand_below(rng_, nJ));
      LRep Wz = restrict_along(S.W, zeta, nJ);
      auto gJ = random_gamma(nJ);
      std::vector<std::uint32_t> gI(n);
      for (std::size_t i = 0; i < n; ++i) gI[i] = gJ[zeta[i]];
      SecondGen Lg = SecondGen::make(Wz, S.x, S.xi, gJ), Rg = SecondGen::make(S.W, S.x, S.xi, gI);
      record(rep, "a1.5", same([&](const Hom& r) { return eval_gen(Lg, r); }, [&](const Hom& r) { return eval_gen(Rg, r); }));
    }
    // a-3: W (x) W* (x) W with delta_W (x) x and xi (x) ev_W
    {
      const std::size_t d = S.W.dim();
      LRep B = box(box(S.W, dual(S.W)), S.W);
      Vec x3(d * d * d, f_.zero()), xi3(d * d * d, f_.zero());
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t c = 0; c < d; ++c) x3[(a * d + a) * d + c] = S.x[c];
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) xi3[(a * d + b) * d + b] = S.xi[a];
      auto g1 = random_gamma(n), g2 = random_gamma(n), g3 = random_gamma(n);
      std::vector<std::uint32_t> all = g1, comb(n);
      all.insert(all.end(), g2.begin(), g2.end());
      all.insert(all.end(), g3.begin(), g3.end());
      const FiniteGroup& G = *Gm_.G;
      for (std::size_t i = 0; i < n; ++i) comb[i] = G.mul(G.mul(g1[i], G.inv(g2[i])), g3[i]);
      SecondGen Lg = SecondGen::make(B, x3, xi3, all), Rg = SecondGen::make(S.W, S.x, S.xi, comb);
      record(rep, "a3", same([&](const Hom& r) { return eval_gen(Lg, r); }, [&](const Hom& r) { return eval_gen(Rg, r); }));
    }
    // bridge and the tautological-family oracle
    {
      FirstGen F{bridge_f(S.W, S.x, S.xi), S.gamma};
      record(rep, "bridge", same([&](const Hom& r) { return eval_gen(Gm_, F, r, Convention::Naive); },
                                 [&](const Hom& r) { return eval_gen(S, r); }));
      TautologicalFamily fam(Gm_, T_);
      SecondGen Sp = SecondGen::make(S.W, S.x, S.xi, reparametrize(Gm_, S.gamma));
      Mat M = eval_construction(fam, Sp);
      bool ok = true;
      for (std::size_t k = 0; k < fam.points().size(); ++k)
        for (std::size_t j = 0; j < fam.points().size(); ++j) {
          Elem want = j == k ? eval_gen(Gm_, F, fam.points()[k], Convention::LastIndex) : f_.zero();
          ok = ok && M(j, k) == want;
        }
      record(rep, "construction", ok);
    }
    // conjugation invariance at every homomorphism
    {
      auto f = InvariantFunction::random(T_, f_, n, rng_);
      FirstGen F{f, random_gamma(n)};
      bool ok = true;
      for (const auto& rho : homs_) {
        Hom c = canonical_rep(Gm_, *T_, rho);
        for (Convention cv : {Convention::LastIndex, Convention::Naive})
          ok = ok && eval_gen(Gm_, F, rho, cv) == eval_gen(Gm_, F, c, cv);
        ok = ok && eval_gen(S, rho) == eval_gen(S, c);
      }
      record(rep, "conjugation", ok);
    }
  }

 private:
  const GammaData& Gm_;
  TargetPtr T_;
  Field f_;
  Rng& rng_;
  std::vector<Hom> homs_, points_;
};

}  // namespace

SuiteReport relation_suite(const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t instances, Rng& rng) {
  Suite s(Gm, T, f, rng);
  SuiteReport rep;
  for (std::size_t k = 0; k < instances; ++k) {
    s.first_presentation(rep, Convention::Naive, "", false);
    s.second_presentation(rep);
    s.first_presentation(rep, Convention::LastIndex, ".last", true);
  }
  std::stable_sort(rep.lines.begin(), rep.lines.end(), [](const CheckLine& a, const CheckLine& b) {
    return a.informational < b.informational;
  });
  return rep;
}

// ---------------------------------------------------------------- bijection

Mat generated_subalgebra(const GammaData& Gm, const TargetPtr& T, const Field& f, Convention c, std::size_t max_arity,
                         std::size_t degree_cap) {
  const auto points = rep_stack(Gm, *T);
  const std::size_t m = points.size();
  std::vector<Vec> gens{Vec(m, f.one())};
  const std::uint32_t ng = Gm.G->order();
  for (std::size_t n = 1; n <= max_arity; ++n) {
    if (ipow(ng, n) * m > 200'000 || ipow(T->order(), n) > 2'000'000) break;
    const auto& o = T->orbits(n);
    const std::size_t tuples = ipow(ng, n);
    std::vector<std::uint32_t> gamma(n), args(n);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t r = t;
      for (std::size_t i = n; i-- > 0;) {
        gamma[i] = static_cast<std::uint32_t>(r % ng);
        r /= ng;
      }
      const auto g = c == Convention::LastIndex ? reparametrize(Gm, gamma) : gamma;
      std::vector<std::uint32_t> orbit(m);
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) args[i] = points[k][g[i]];
        orbit[k] = o.id[T->tuple_index(args)];
      }
      std::set<std::uint32_t> seen(orbit.begin(), orbit.end());
      for (auto id : seen) {
        Vec v(m, f.zero());
        for (std::size_t k = 0; k < m; ++k)
          if (orbit[k] == id) v[k] = f.one();
        gens.push_back(std::move(v));
      }
    }
  }
  auto mul = [&](const Vec& a, const Vec& b) {
    Vec out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = f.mul(a[k], b[k]);
    return out;
  };
  Mat span = row_space(Mat::from_rows(f, m, gens));
  for (std::size_t deg = 2; deg <= degree_cap; ++deg) {
    std::vector<Vec> more;
    for (std::size_t i = 0; i < span.rows(); ++i) more.push_back(span.row(i));
    for (std::size_t i = 0; i < span.rows(); ++i)
      for (const auto& g : gens) more.push_back(mul(span.row(i), g));
    Mat next = row_space(Mat::from_rows(f, m, more));
    const bool stable = next.rows() == span.rows();
    span = next;
    if (stable) break;
  }
  for (std::size_t i = 0; i < span.rows(); ++i)
    for (std::size_t j = i; j < span.rows(); ++j)
      if (!in_span(span, mul(span.row(i), span.row(j))))
        throw std::domain_error("excursion: subalgebra not saturated within the degree cap");
  return span;
}

BijectionReport character_bijection_report(const GammaData& Gm, const TargetPtr& T, const Field& f,
                                           std::size_t max_arity, std::size_t degree_cap) {
  BijectionReport r;
  Mat A = generated_subalgebra(Gm, T, f, Convention::LastIndex, max_arity, degree_cap);
  Mat B = generated_subalgebra(Gm, T, f, Convention::Naive, max_arity, degree_cap);
  r.points = A.cols();
  r.algebra_dim = A.rows();
  r.conventions_agree = A == B;
  // characters of a subalgebra of Fun(points) = classes of points it does not separate
  std::set<Vec> classes;
  for (std::size_t k = 0; k < A.cols(); ++k) classes.insert(A.col(k));
  r.characters = classes.size();
  return r;
}

}  // namespace tatebc
