#include "tatebc/linkage.hpp"

#include <stdexcept>

#include "tatebc/random.hpp"

namespace tatebc {

SigmaExtendedRep SigmaExtendedRep::make(SigmaGroup S, GroupRep Pi, Mat A) {
  if (Pi.group()->order() != S.G->order()) throw std::invalid_argument("linkage: rep is not a rep of G");
  if (A.rows() != Pi.dim() || !A.square()) throw std::invalid_argument("linkage: A has the wrong shape");
  if (!A.pow(S.p).is_identity()) throw std::invalid_argument("linkage: A^p is not the identity");
  for (auto g : S.G->generators())
    if (!(A * Pi(g) == Pi(S.apply(g)) * A)) throw std::invalid_argument("linkage: A does not intertwine Pi and Pi o sigma");
  return SigmaExtendedRep{std::move(S), std::move(Pi), std::move(A)};
}

SigmaExtendedRep box_power(const GroupRep& pi, std::uint32_t p) {
  SigmaGroup S = SigmaGroup::cyclic_shift(pi.group(), p);
  const std::uint32_t base = pi.group()->order();
  std::vector<Mat> mats;
  for (auto g : S.G->generators()) {
    Mat m = Mat::identity(pi.field(), 1);
    for (std::uint32_t i = 0; i < p; ++i) m = m.kron(pi(power_coordinate(base, g, i, p)));
    mats.push_back(m);
  }
  GroupRep Pi = GroupRep::from_generators(S.G, S.G->generators(), mats);
  Mat A = tensor_rotation(pi.field(), pi.dim(), p);
  return SigmaExtendedRep::make(std::move(S), std::move(Pi), std::move(A));
}

SigmaExtendedRep normalize_extension(const GroupRep& Pi, const SigmaGroup& S, const Mat& A0) {
  const Field& f = Pi.field();
  if (f.characteristic() != S.p) throw std::invalid_argument("linkage: the field must have characteristic p");
  Mat P = A0.pow(S.p);
  const Elem c = P.rows() ? P(0, 0) : f.one();
  if (!(P == Mat::identity(f, P.rows()).scaled(c)) || c == f.zero())
    throw std::invalid_argument("linkage: A0^p is not a nonzero scalar");
  Mat A = A0.scaled(f.inv(f.frobenius_inv(c)));
  return SigmaExtendedRep::make(S, Pi, std::move(A));
}

SigmaExtendedRep extend_action(const GroupRep& Pi, const SigmaGroup& S) {
  std::vector<Mat> a = Pi.generator_images(), b;
  for (auto g : S.G->generators()) b.push_back(Pi(S.apply(g)));
  if (intertwiner_space(a, a).size() != 1) throw std::invalid_argument("linkage: Pi is not absolutely irreducible");
  auto T = intertwiner_space(a, b);
  if (T.empty()) throw std::invalid_argument("linkage: Pi is not sigma-fixed");
  return normalize_extension(Pi, S, T[0]);
}

TateReps tate_of_rep(const SigmaExtendedRep& E, const GroupPtr& Hgrp, const std::vector<std::uint32_t>& embed) {
  const Field& f = E.Pi.field();
  const std::size_t n = E.Pi.dim();
  Mat one_minus = Mat::identity(f, n) - E.A;
  Mat N(f, n, n), Ak = Mat::identity(f, n);
  for (std::uint32_t k = 0; k < E.S.p; ++k) {
    N = N + Ak;
    Ak = Ak * E.A;
  }
  for (auto h : embed)
    if (E.S.apply(h) != h) throw std::invalid_argument("linkage: embedding leaves the fixed group");
  Subquotient q0(kernel(one_minus), image(N)), q1(kernel(N), image(one_minus));
  auto rep_on = [&](const Subquotient& q) {
    return GroupRep::from_function(Hgrp, f, q.dim(), [&](std::uint32_t h) { return q.induced(E.Pi(embed[h]), q); });
  };
  GroupRep T0 = rep_on(q0), T1 = rep_on(q1);
  return TateReps{std::move(T0), std::move(T1), std::move(q0), std::move(q1)};
}

TateReps tate_of_rep(const SigmaExtendedRep& E) {
  Subgroup H = make_subgroup(*E.S.G, E.S.H);
  return tate_of_rep(E, H.group, H.embedding);
}

std::optional<Mat> find_isomorphism(const GroupRep& a, const GroupRep& b) {
  if (a.dim() != b.dim() || a.group()->order() != b.group()->order()) return std::nullopt;
  auto T = intertwiner_space(a.generator_images(), b.generator_images());
  if (T.empty()) return std::nullopt;
  auto invertible = [](const Mat& m) { return rank(m) == m.rows(); };
  for (const auto& t : T)
    if (invertible(t)) return t;
  Rng rng(0x150);
  const Field& f = a.field();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat m(f, a.dim(), a.dim());
    for (const auto& t : T) m = m + t.scaled(random_elem(f, rng));
    if (invertible(m)) return m;
  }
  return std::nullopt;
}

Vec tensor_power(const Field& f, const Vec& v, std::uint32_t p) {
  Vec out{f.one()};
  for (std::uint32_t k = 0; k < p; ++k) {
    Vec next;
    next.reserve(out.size() * v.size());
    for (Elem x : out)
      for (Elem y : v) next.push_back(f.mul(x, y));
    out = std::move(next);
  }
  return out;
}

LinkageReport linkage_report(const GroupRep& pi, std::uint32_t p) {
  LinkageReport r;
  SigmaExtendedRep box = box_power(pi, p);
  SigmaExtendedRep E = extend_action(box.Pi, box.S);
  r.dim_pi = pi.dim();
  r.dim_Pi = E.Pi.dim();
  r.extension_is_rotation = E.A == box.A;
  const GroupPtr& H = pi.group();
  std::vector<std::uint32_t> diag(H->order());
  for (std::uint32_t h = 0; h < H->order(); ++h) diag[h] = diagonal_element(H->order(), h, p);
  TateReps T = tate_of_rep(E, H, diag);
  r.t0_dim = T.T0.dim();
  r.t1_dim = T.T1.dim();
  GroupRep twist = frobenius_twist_rep(pi);
  if (auto iso = find_isomorphism(T.T0, twist)) {
    r.t0_iso_twist = true;
    r.iso = *iso;
  }
  r.t0_iso_pi = find_isomorphism(T.T0, pi).has_value();
  r.t1_iso_twist = find_isomorphism(T.T1, twist).has_value();
  return r;
}

}  // namespace tatebc
