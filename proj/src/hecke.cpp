#include "tatebc/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace tatebc {

// ---------------------------------------------------------------- cosets

HeckeSpacePtr HeckeSpace::make(GroupPtr G, std::vector<std::uint32_t> K, Field f) {
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  if (!G->is_subgroup(K)) throw std::invalid_argument("hecke: K is not a subgroup");
  auto S = std::make_shared<HeckeSpace>();
  S->G_ = G;
  S->f_ = std::move(f);
  S->K_ = std::move(K);
  const std::uint32_t n = G->order();
  S->coset_of_.assign(n, UINT32_MAX);
  auto add_coset = [&](std::uint32_t g) {
    auto c = static_cast<std::uint32_t>(S->reps_.size());
    S->reps_.push_back(g);
    for (auto k : S->K_) S->coset_of_[G->mul(g, k)] = c;
  };
  add_coset(G->identity());
  for (std::uint32_t g = 0; g < n; ++g)
    if (S->coset_of_[g] == UINT32_MAX) add_coset(g);
  const std::size_t m = S->reps_.size();
  S->dc_of_.assign(m, UINT32_MAX);
  for (std::size_t y = 0; y < m; ++y) {
    if (S->dc_of_[y] != UINT32_MAX) continue;
    auto i = static_cast<std::uint32_t>(S->dc_members_.size());
    std::vector<std::uint32_t> members;
    for (auto k : S->K_) {
      std::uint32_t z = S->act(k, y);
      if (S->dc_of_[z] == UINT32_MAX) {
        S->dc_of_[z] = i;
        members.push_back(z);
      }
    }
    std::sort(members.begin(), members.end());
    S->dc_members_.push_back(members);
  }
  return S;
}

// ---------------------------------------------------------------- elements

HeckeElement::HeckeElement(HeckeSpacePtr space, Vec row) : space_(std::move(space)), row_(std::move(row)) {
  if (row_.size() != space_->coset_count()) throw std::invalid_argument("hecke element: wrong number of values");
  for (std::size_t i = 0; i < space_->double_coset_count(); ++i) {
    const auto& dc = space_->double_coset(i);
    for (auto y : dc)
      if (row_[y] != row_[dc.front()]) throw std::invalid_argument("hecke element: values are not K-invariant");
  }
}

HeckeElement HeckeElement::zero(HeckeSpacePtr space) {
  Vec row(space->coset_count(), Elem{0});
  return HeckeElement(std::move(space), std::move(row));
}

HeckeElement HeckeElement::unit(HeckeSpacePtr space) { return basis(std::move(space), 0); }

HeckeElement HeckeElement::basis(HeckeSpacePtr space, std::size_t i) {
  Vec row(space->coset_count(), Elem{0});
  for (auto y : space->double_coset(i)) row[y] = space->field().one();
  return HeckeElement(std::move(space), std::move(row));
}

Elem HeckeElement::value(std::size_t x, std::size_t z) const {
  const FiniteGroup& G = *space_->group();
  return row_[space_->coset_of(G.mul(G.inv(space_->rep(x)), space_->rep(z)))];
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
  if (space_ != o.space_) throw std::invalid_argument("hecke: elements of different algebras");
  return HeckeElement(space_, vec_add(space_->field(), row_, o.row_));
}

HeckeElement HeckeElement::scaled(Elem s) const { return HeckeElement(space_, vec_scale(space_->field(), s, row_)); }

bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.space_ == b.space_ && a.row_ == b.row_; }

HeckeElement convolve(const HeckeElement& f, const HeckeElement& g) {
  if (f.space() != g.space()) throw std::invalid_argument("convolve: elements over different (G, K)");
  const HeckeSpace& S = *f.space();
  const FiniteGroup& G = *S.group();
  const Field& fld = S.field();
  const std::size_t m = S.coset_count();
  Vec out(m, Elem{0});
  for (std::size_t y = 0; y < m; ++y) {
    Elem a = f.row()[y];
    if (!a.v) continue;
    std::uint32_t ry_inv = G.inv(S.rep(y));
    for (std::size_t z = 0; z < m; ++z) {
      Elem b = g.row()[S.coset_of(G.mul(ry_inv, S.rep(z)))];
      if (b.v) out[z] = fld.add(out[z], fld.mul(a, b));
    }
  }
  return HeckeElement(f.space(), std::move(out));
}

std::vector<HeckeElement> hecke_basis(const HeckeSpacePtr& space) {
  std::vector<HeckeElement> out;
  for (std::size_t i = 0; i < space->double_coset_count(); ++i) out.push_back(HeckeElement::basis(space, i));
  return out;
}

HeckeElement random_hecke_element(const HeckeSpacePtr& space, Rng& rng) {
  Vec row(space->coset_count(), Elem{0});
  for (std::size_t i = 0; i < space->double_coset_count(); ++i) {
    Elem c = random_elem(space->field(), rng);
    for (auto y : space->double_coset(i)) row[y] = c;
  }
  return HeckeElement(space, std::move(row));
}

// ---------------------------------------------------------------- sigma

bool is_sigma_stable(const SigmaGroup& S, const std::vector<std::uint32_t>& K) {
  std::vector<std::uint32_t> sorted = K;
  std::sort(sorted.begin(), sorted.end());
  for (auto k : K)
    if (!std::binary_search(sorted.begin(), sorted.end(), S.apply(k))) return false;
  return true;
}

bool is_plain(const SigmaGroup& S, const std::vector<std::uint32_t>& K) {
  if (!is_sigma_stable(S, K)) throw std::invalid_argument("is_plain: K is not sigma-stable");
  HeckeSpacePtr space = HeckeSpace::make(S.G, K, Field::make(2));
  std::vector<char> meets_h(space->coset_count(), 0);
  for (auto h : S.H) meets_h[space->coset_of(h)] = 1;
  for (std::size_t y = 0; y < space->coset_count(); ++y)
    if (space->coset_of(S.apply(space->rep(y))) == y && !meets_h[y]) return false;
  return true;
}

HeckeElement sigma_apply(const SigmaGroup& S, const HeckeElement& f) {
  const HeckeSpace& sp = *f.space();
  if (!is_sigma_stable(S, sp.subgroup())) throw std::invalid_argument("sigma_apply: K is not sigma-stable");
  Vec row(sp.coset_count());
  for (std::size_t y = 0; y < sp.coset_count(); ++y) row[sp.coset_of(S.apply(sp.rep(y)))] = f.row()[y];
  return HeckeElement(f.space(), std::move(row));
}

bool is_sigma_invariant(const SigmaGroup& S, const HeckeElement& f) {
  const HeckeSpace& sp = *f.space();
  for (std::size_t y = 0; y < sp.coset_count(); ++y)
    if (f.row()[sp.coset_of(S.apply(sp.rep(y)))] != f.row()[y]) return false;
  return true;
}

namespace {

std::vector<std::vector<std::size_t>> sigma_orbits_of_double_cosets(const SigmaGroup& S, const HeckeSpace& sp) {
  std::vector<char> seen(sp.double_coset_count(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < sp.double_coset_count(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      orbit.push_back(j);
      j = sp.double_coset_of(sp.coset_of(S.apply(sp.rep(sp.double_coset(j).front()))));
    }
    out.push_back(orbit);
  }
  return out;
}

HeckeElement orbit_sum(const HeckeSpacePtr& space, const std::vector<std::size_t>& orbit) {
  Vec row(space->coset_count(), Elem{0});
  for (auto i : orbit)
    for (auto y : space->double_coset(i)) row[y] = space->field().one();
  return HeckeElement(space, std::move(row));
}

}  // namespace

std::vector<HeckeElement> sigma_invariant_basis(const SigmaGroup& S, const HeckeSpacePtr& space) {
  if (!is_sigma_stable(S, space->subgroup())) throw std::invalid_argument("hecke: K is not sigma-stable");
  std::vector<HeckeElement> out;
  for (const auto& orbit : sigma_orbits_of_double_cosets(S, *space)) out.push_back(orbit_sum(space, orbit));
  return out;
}

BrauerMap BrauerMap::unchecked(const SigmaGroup& S, const HeckeSpacePtr& source) {
  if (S.G != source->group()) throw std::invalid_argument("brauer: group mismatch");
  if (!is_sigma_stable(S, source->subgroup())) throw std::invalid_argument("brauer: K is not sigma-stable");
  BrauerMap B;
  B.S_ = S;
  B.source_ = source;
  B.H_ = make_subgroup(*S.G, S.H);
  std::vector<std::uint32_t> U;
  const auto& K = source->subgroup();
  for (std::uint32_t i = 0; i < B.H_.embedding.size(); ++i)
    if (std::binary_search(K.begin(), K.end(), B.H_.embedding[i])) U.push_back(i);
  B.target_ = HeckeSpace::make(B.H_.group, U, source->field());
  B.checked_ = false;
  return B;
}

BrauerMap BrauerMap::make(const SigmaGroup& S, const HeckeSpacePtr& source) {
  if (!is_plain(S, source->subgroup())) throw std::invalid_argument("brauer: K is not plain");
  BrauerMap B = unchecked(S, source);
  B.checked_ = true;
  return B;
}

HeckeElement BrauerMap::operator()(const HeckeElement& f) const {
  if (f.space() != source_) throw std::invalid_argument("brauer: element of a different algebra");
  if (checked_ && !is_sigma_invariant(S_, f)) throw std::invalid_argument("brauer: element is not sigma-invariant");
  Vec row(target_->coset_count());
  for (std::size_t y = 0; y < target_->coset_count(); ++y)
    row[y] = f.row()[source_->coset_of(H_.embedding[target_->rep(y)])];
  return HeckeElement(target_, std::move(row));
}

// ---------------------------------------------------------------- actions

namespace {

std::vector<std::uint32_t> subgroup_generators(const FiniteGroup& G, const std::vector<std::uint32_t>& K) {
  std::vector<std::uint32_t> gens, span{G.identity()};
  for (auto k : K) {
    if (std::binary_search(span.begin(), span.end(), k)) continue;
    gens.push_back(k);
    span = G.closure(gens);
  }
  return gens;
}

}  // namespace

Mat invariants_basis(const GroupRep& Pi, const std::vector<std::uint32_t>& K) {
  const std::size_t n = Pi.dim();
  Mat stacked(Pi.field(), 0, n);
  for (auto k : subgroup_generators(*Pi.group(), K)) stacked = vstack(stacked, Pi(k) - Mat::identity(Pi.field(), n));
  return kernel(stacked);
}

Vec hecke_apply(const HeckeElement& f, const GroupRep& Pi, const Vec& v) {
  const HeckeSpace& sp = *f.space();
  if (Pi.group() != sp.group()) throw std::invalid_argument("hecke_apply: representation of a different group");
  const Field& fld = Pi.field();
  Vec out(Pi.dim(), Elem{0});
  for (std::size_t y = 0; y < sp.coset_count(); ++y) {
    Elem c = f.row()[y];
    if (!c.v) continue;
    Vec w = Pi(sp.rep(y)).apply(v);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fld.add(out[i], fld.mul(c, w[i]));
  }
  return out;
}

Mat hecke_action(const HeckeElement& f, const GroupRep& Pi) {
  Mat B = invariants_basis(Pi, f.space()->subgroup());
  Decomposer dec(B);
  Mat out(Pi.field(), B.rows(), B.rows());
  for (std::size_t j = 0; j < B.rows(); ++j) {
    auto c = dec.coeffs(hecke_apply(f, Pi, B.row(j)));
    if (!c) throw std::logic_error("hecke_action: result is not K-invariant");
    out.set_col(j, *c);
  }
  return out;
}

DiagramReport tate_hecke_diagram(const SigmaGroup& S, const HeckeSpacePtr& space, const GroupRep& Pi, const Mat& A) {
  const Field& f = Pi.field();
  const std::size_t n = Pi.dim();
  if (Pi.group() != S.G || space->group() != S.G) throw std::invalid_argument("diagram: group mismatch");
  if (f.characteristic() != S.p) throw std::invalid_argument("diagram: field characteristic differs from p");
  if (A.rows() != n || A.cols() != n || !A.pow(S.p).is_identity())
    throw std::invalid_argument("diagram: sigma-action must be a square matrix with A^p = 1");
  for (auto g : S.G->generators())
    if (!(A * Pi(g) == Pi(S.apply(g)) * A)) throw std::invalid_argument("diagram: A is not compatible with sigma");
  BrauerMap br = BrauerMap::make(S, space);

  DiagramReport rep;
  Mat B = invariants_basis(Pi, space->subgroup());
  rep.invariant_dim = B.rows();
  SigmaModule MK(B.rows() == 0 ? Mat(f, 0, 0) : [&] {
    Decomposer dec(B);
    Mat m(f, B.rows(), B.rows());
    for (std::size_t j = 0; j < B.rows(); ++j) m.set_col(j, *dec.coeffs(A.apply(B.row(j))));
    return m;
  }());
  TateGroups local = tate_groups(MK), ambient = tate_groups(SigmaModule(A));
  const Subquotient* loc[2] = {&local.t0, &local.t1};
  const Subquotient* amb[2] = {&ambient.t0, &ambient.t1};
  rep.tate_dims[0] = local.t0.dim();
  rep.tate_dims[1] = local.t1.dim();

  std::vector<std::vector<Vec>> classes(2);
  for (int i = 0; i < 2; ++i)
    for (std::size_t r = 0; r < loc[i]->dim(); ++r) classes[i].push_back(B.apply_left(loc[i]->reps().row(r)));

  const auto& target = *br.target();
  for (const auto& orbit : sigma_orbits_of_double_cosets(S, *space)) {
    HeckeElement h = orbit_sum(space, orbit);
    HeckeElement bh = br(h);
    ++rep.elements_checked;
    for (int i = 0; i < 2; ++i)
      for (const Vec& v : classes[i]) {
        Vec lhs = hecke_apply(h, Pi, v);
        Vec rhs(n, Elem{0});
        for (std::size_t y = 0; y < target.coset_count(); ++y) {
          Elem c = bh.row()[y];
          if (!c.v) continue;
          rhs = vec_add(f, rhs, vec_scale(f, c, Pi(br.fixed_group().embedding[target.rep(y)]).apply(v)));
        }
        bool ok = amb[i]->coords(lhs).has_value() && amb[i]->is_trivial(vec_sub(f, lhs, rhs));
        if (!ok) ++rep.failures;
      }
  }
  rep.pass = rep.failures == 0;
  return rep;
}

// ---------------------------------------------------------------- sigma-algebras

SigmaAlgebra::SigmaAlgebra(Field f, std::vector<std::vector<Vec>> mult, Vec unit, Mat sigma)
    : f_(std::move(f)), mult_(std::move(mult)), unit_(std::move(unit)), sigma_(std::move(sigma)) {
  const std::size_t n = unit_.size();
  if (mult_.size() != n) throw std::invalid_argument("sigma algebra: structure constants have the wrong size");
  for (const auto& r : mult_) {
    if (r.size() != n) throw std::invalid_argument("sigma algebra: structure constants have the wrong size");
    for (const auto& v : r)
      if (v.size() != n) throw std::invalid_argument("sigma algebra: structure constants have the wrong size");
  }
  if (sigma_.rows() != n || sigma_.cols() != n) throw std::invalid_argument("sigma algebra: sigma has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = basis(i);
    if (mul(unit_, e) != e || mul(e, unit_) != e) throw std::invalid_argument("sigma algebra: unit is not a unit");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mul(mult_[i][j], basis(k)) != mul(basis(i), mult_[j][k]))
          throw std::invalid_argument("sigma algebra: not associative");
  if (!sigma_.pow(f_.characteristic()).is_identity()) throw std::invalid_argument("sigma algebra: sigma^p != 1");
  if (this->sigma(unit_) != unit_) throw std::invalid_argument("sigma algebra: sigma does not fix the unit");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (this->sigma(mult_[i][j]) != mul(this->sigma(basis(i)), this->sigma(basis(j))))
        throw std::invalid_argument("sigma algebra: sigma is not multiplicative");
}

Vec SigmaAlgebra::basis(std::size_t i) const {
  Vec e(dim(), Elem{0});
  e[i] = f_.one();
  return e;
}

Vec SigmaAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  Vec out(n, Elem{0});
  for (std::size_t i = 0; i < n; ++i) {
    if (!a[i].v) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b[j].v) continue;
      Elem c = f_.mul(a[i], b[j]);
      const Vec& m = mult_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (m[k].v) out[k] = f_.add(out[k], f_.mul(c, m[k]));
    }
  }
  return out;
}

bool SigmaAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (mult_[i][j] != mult_[j][i]) return false;
  return true;
}

Vec ring_norm(const SigmaAlgebra& A, const Vec& a) {
  Vec out = a, cur = a;
  for (std::uint32_t k = 1; k < A.field().characteristic(); ++k) {
    cur = A.sigma(cur);
    out = A.mul(out, cur);
  }
  return out;
}

Vec ring_N(const SigmaAlgebra& A, const Vec& a) {
  Vec out = a, cur = a;
  for (std::uint32_t k = 1; k < A.field().characteristic(); ++k) {
    cur = A.sigma(cur);
    out = vec_add(A.field(), out, cur);
  }
  return out;
}

SigmaAlgebra fun_algebra(const Field& f, const std::vector<std::uint32_t>& perm) {
  const std::size_t n = perm.size();
  std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n, Vec(n, Elem{0})));
  for (std::size_t i = 0; i < n; ++i) mult[i][i][i] = f.one();
  Mat sigma(f, n, n);
  for (std::size_t s = 0; s < n; ++s) {
    if (perm[s] >= n) throw std::invalid_argument("fun_algebra: bad permutation");
    sigma.at(perm[s], s) = f.one();
  }
  return SigmaAlgebra(f, mult, Vec(n, f.one()), sigma);
}

namespace {

// All elements when there are few of them, otherwise a fixed sample.
std::vector<Vec> test_elements(const SigmaAlgebra& A) {
  const std::size_t n = A.dim();
  const std::uint64_t q = A.field().order();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < n && small; ++i) {
    total *= q;
    small = total <= 4096;
  }
  std::vector<Vec> out;
  if (small) {
    for (std::uint64_t code = 0; code < total; ++code) {
      Vec v(n);
      std::uint64_t c = code;
      for (auto& x : v) {
        x = A.field().from_code(static_cast<std::uint32_t>(c % q));
        c /= q;
      }
      out.push_back(v);
    }
    return out;
  }
  Rng rng(0x5eed);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(A.basis(i));
    out.push_back(vec_add(A.field(), A.one(), A.basis(i)));
  }
  for (int k = 0; k < 64; ++k) {
    Vec v(n);
    for (auto& x : v) x = random_elem(A.field(), rng);
    out.push_back(v);
  }
  return out;
}

}  // namespace

Mat norm_subalgebra(const SigmaAlgebra& A) {
  const Field& f = A.field();
  const std::size_t n = A.dim();
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(ring_N(A, A.basis(i)));
  for (const auto& a : test_elements(A)) gens.push_back(ring_norm(A, a));
  Mat span = row_space(Mat::from_rows(f, n, gens));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < span.rows(); ++i) rows.push_back(span.row(i));
    for (std::size_t i = 0; i < span.rows(); ++i)
      for (std::size_t j = 0; j < span.rows(); ++j) rows.push_back(A.mul(span.row(i), span.row(j)));
    Mat next = row_space(Mat::from_rows(f, n, rows));
    if (next.rows() != span.rows()) {
      span = next;
      grew = true;
    }
  }
  return span;
}

Elem char_eval(const SigmaAlgebra& A, const Character& chi, const Vec& a) {
  if (chi.size() != A.dim() || a.size() != A.dim()) throw std::invalid_argument("char_eval: length mismatch");
  const Field& f = A.field();
  Elem s{0};
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], chi[i]));
  return s;
}

bool is_character_on(const SigmaAlgebra& A, const Mat& sub, const Character& chi) {
  const Field& f = A.field();
  if (in_span(sub, A.one()) && char_eval(A, chi, A.one()) != f.one()) return false;
  for (std::size_t i = 0; i < sub.rows(); ++i)
    for (std::size_t j = 0; j < sub.rows(); ++j) {
      Vec x = sub.row(i), y = sub.row(j);
      if (char_eval(A, chi, A.mul(x, y)) != f.mul(char_eval(A, chi, x), char_eval(A, chi, y))) return false;
    }
  return true;
}

Character char_extend(const SigmaAlgebra& A, const Mat& sub, const Character& chi) {
  const Field& f = A.field();
  if (!A.is_commutative()) throw std::invalid_argument("char_extend: algebra is not commutative");
  if (!in_span(sub, A.one())) throw std::invalid_argument("char_extend: subalgebra does not contain 1");
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (!in_span(sub, ring_N(A, A.basis(i))) || !in_span(sub, ring_norm(A, A.basis(i))))
      throw std::invalid_argument("char_extend: subalgebra does not contain Nm(A) and N.A");
    if (char_eval(A, chi, ring_N(A, A.basis(i))).v != 0)
      throw std::invalid_argument("char_extend: character does not vanish on N.A");
  }
  if (!is_character_on(A, sub, chi)) throw std::invalid_argument("char_extend: not a character of the subalgebra");
  Character out(A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) out[i] = f.frobenius_inv(char_eval(A, chi, ring_norm(A, A.basis(i))));
  Mat whole = Mat::identity(f, A.dim());
  if (!is_character_on(A, whole, out)) throw std::logic_error("char_extend: extension is not multiplicative");
  for (const auto& a : test_elements(A)) {
    Vec nm = ring_norm(A, a);
    if (!in_span(sub, nm)) throw std::invalid_argument("char_extend: subalgebra does not contain Nm(A)");
    if (char_eval(A, out, a) != f.frobenius_inv(char_eval(A, chi, nm)))
      throw std::logic_error("char_extend: a -> chi(Nm a)^(1/p) is not additive");
  }
  for (std::size_t i = 0; i < sub.rows(); ++i)
    if (char_eval(A, out, sub.row(i)) != char_eval(A, chi, sub.row(i)))
      throw std::logic_error("char_extend: extension does not restrict to chi");
  return out;
}

std::vector<Character> point_characters(std::size_t points, const Field& f) {
  std::vector<Character> out;
  for (std::size_t s = 0; s < points; ++s) {
    Character c(points, Elem{0});
    c[s] = f.one();
    out.push_back(c);
  }
  return out;
}

}  // namespace tatebc
