#include <set>

#include "doctest.h"
#include "tatebc/excursion.hpp"

using namespace tatebc;

namespace {

TargetPtr split_target(const GroupPtr& G) {
  GroupPtr one = FiniteGroup::cyclic(1);
  std::vector<std::uint32_t> id(G->order());
  for (std::uint32_t g = 0; g < G->order(); ++g) id[g] = g;
  return ParamTarget::make(G, one, {id});
}

// Ghat x| C_k with the generator of C_k acting by conjugation by c.
TargetPtr conj_target(const GroupPtr& G, std::uint32_t c, std::uint32_t k) {
  GroupPtr Q = FiniteGroup::cyclic(k);
  std::vector<std::vector<std::uint32_t>> action(k, std::vector<std::uint32_t>(G->order()));
  for (std::uint32_t q = 0; q < k; ++q) {
    std::uint32_t h = G->pow(c, q);
    for (std::uint32_t g = 0; g < G->order(); ++g) action[q][g] = G->conj(h, g);
  }
  return ParamTarget::make(G, Q, action);
}

std::uint32_t element_of_order(const FiniteGroup& G, std::uint32_t n) {
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (G.element_order(g) == n) return g;
  return G.identity();
}

// Independent count: all maps on generators, full pair check, orbit sets.
std::size_t brute_points(const GammaData& Gm, const ParamTarget& T) {
  const FiniteGroup& G = *Gm.G;
  const FiniteGroup& L = *T.group();
  std::vector<Hom> homs;
  std::vector<std::uint32_t> gens = G.generators();
  std::vector<std::uint32_t> pick(gens.size(), 0);
  for (;;) {
    Hom m(G.order(), UINT32_MAX);
    m[G.identity()] = L.identity();
    bool changed = true, ok = true;
    while (changed && ok) {
      changed = false;
      for (std::uint32_t x = 0; x < G.order() && ok; ++x) {
        if (m[x] == UINT32_MAX) continue;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          std::uint32_t y = G.mul(x, gens[j]), v = L.mul(m[x], pick[j]);
          if (m[y] == UINT32_MAX) {
            m[y] = v;
            changed = true;
          } else if (m[y] != v) {
            ok = false;
          }
        }
      }
    }
    for (std::uint32_t a = 0; a < G.order() && ok; ++a)
      for (std::uint32_t b = 0; b < G.order() && ok; ++b) ok = m[G.mul(a, b)] == L.mul(m[a], m[b]);
    for (std::uint32_t a = 0; a < G.order() && ok; ++a) ok = T.proj(m[a]) == Gm.to_Q[a];
    if (ok) homs.push_back(m);
    std::size_t j = 0;
    while (j < gens.size() && ++pick[j] == L.order()) pick[j++] = 0;
    if (j == gens.size()) break;
  }
  std::set<std::set<Hom>> orbits;
  for (const auto& h : homs) {
    std::set<Hom> orb;
    for (std::uint32_t g = 0; g < T.ghat()->order(); ++g) {
      std::uint32_t e = T.from_ghat(g);
      Hom c(h.size());
      for (std::size_t x = 0; x < h.size(); ++x) c[x] = L.conj(e, h[x]);
      orb.insert(c);
    }
    orbits.insert(orb);
  }
  return orbits.size();
}

GroupRep perm3(const TargetPtr& T, const GroupPtr& s3, const Field& f) {
  // the natural permutation representation of S_3 = L on 3 points
  std::vector<Mat> mats;
  for (const auto& perm : s3->perm_gens()) {
    Mat m(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) m.at(perm[i], i) = f.one();
    mats.push_back(m);
  }
  return GroupRep::from_generators(T->group(), s3->generators(), mats);
}

GroupRep sign_char(const TargetPtr& T, const Field& f) {
  // C_2 = {0, 1}
  return GroupRep::from_function(T->group(), f, 1, [&](std::uint32_t g) {
    Mat m(f, 1, 1);
    m.at(0, 0) = g == 0 ? f.one() : f.neg(f.one());
    return m;
  });
}

}  // namespace

TEST_CASE("representation stack") {
  GroupPtr c2 = FiniteGroup::cyclic(2), s3 = FiniteGroup::symmetric(3);
  auto Tc2 = split_target(c2);
  auto Ts3 = split_target(s3);
  CHECK(rep_stack(GammaData::over_trivial(c2), *Tc2).size() == 2);
  GammaData Gs3 = GammaData::over_trivial(s3);
  CHECK(rep_stack(Gs3, *Ts3).size() == 3);
  CHECK(brute_points(Gs3, *Ts3) == 3);
  CHECK(over_q_homs(Gs3, *Ts3).size() == 10);  // 1 + 3 + 6

  // Q = Gamma, Ghat = 1: the canonical section only
  GroupPtr c3 = FiniteGroup::cyclic(3);
  auto Tsec = ParamTarget::make(FiniteGroup::cyclic(1), c3, {{0}, {0}, {0}});
  std::vector<std::uint32_t> id{0, 1, 2};
  CHECK(rep_stack(GammaData::make(c3, id, c3), *Tsec).size() == 1);

  // twisted targets against the independent count
  std::uint32_t r = element_of_order(*s3, 3);
  auto T18 = conj_target(s3, r, 3);
  CHECK(T18->order() == 18);
  GammaData G3 = GammaData::make(c3, id, c3);
  CHECK(rep_stack(G3, *T18).size() == brute_points(G3, *T18));
  auto T24 = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  GroupPtr c6 = FiniteGroup::cyclic(6);
  std::vector<std::uint32_t> to3(6);
  for (std::uint32_t g = 0; g < 6; ++g) to3[g] = g % 3;
  GammaData G6 = GammaData::make(c6, to3, c3);
  CHECK(T24->order() == 24);
  CHECK(rep_stack(G6, *T24).size() == brute_points(G6, *T24));

  // canonical representatives are idempotent and constant on orbits
  for (const auto& rho : over_q_homs(Gs3, *Ts3)) {
    Hom c = canonical_rep(Gs3, *Ts3, rho);
    CHECK(canonical_rep(Gs3, *Ts3, c) == c);
  }

  CHECK_THROWS_AS(GammaData::make(c3, {0, 0, 0}, c3), std::invalid_argument);
  CHECK_THROWS_AS(ParamTarget::make(c3, c2, {{0, 1, 2}, {0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("invariant functions and first-presentation evaluation") {
  Field f3 = Field::make(3);
  GroupPtr c2 = FiniteGroup::cyclic(2), s3 = FiniteGroup::symmetric(3);
  auto T = split_target(c2);
  GammaData G = GammaData::over_trivial(c2);
  // n = 0: single coordinate; Ghat abelian and Q = 1, so f is constant on L
  auto f1 = InvariantFunction::constant(T, f3, 1, f3.from_int(2));
  for (const auto& rho : rep_stack(G, *T)) CHECK(eval_gen(G, FirstGen{f1, {1}}, rho) == f3.from_int(2));
  CHECK_THROWS_AS(InvariantFunction::make(T, f3, 1, Vec{f3.one(), f3.zero()}), std::invalid_argument);

  // f(g0, g1) = chi(g0 g1^{-1}) on C_2 is bi-invariant
  auto f2 = InvariantFunction::from_function(T, f3, 2, [&](const std::vector<std::uint32_t>& g) {
    return (g[0] ^ g[1]) ? f3.neg(f3.one()) : f3.one();
  });
  auto pts = rep_stack(G, *T);
  // last-index: f(rho(g0 g1), rho(g1)) = chi(rho(g0))
  for (const auto& rho : pts) {
    Elem want = rho[1] == 1 ? f3.neg(f3.one()) : f3.one();
    CHECK(eval_gen(G, FirstGen{f2, {1, 0}}, rho) == want);
    CHECK(eval_gen(G, FirstGen{f2, {1, 1}}, rho) == want);
    CHECK(eval_gen(G, FirstGen{f2, {1, 1}}, rho, Convention::Naive) == f3.one());
  }

  // S_3: the trace of the permutation representation through the
  // last-index formula is the number of fixed points of rho(gamma_0)
  auto Ts3 = split_target(s3);
  GammaData Gs3 = GammaData::over_trivial(s3);
  Field f5 = Field::make(5);
  LRep V = LRep::from_rep(Ts3, perm3(Ts3, s3, f5));
  LRep W = box(V, dual(V));
  Vec delta(9, f5.zero());
  for (std::size_t a = 0; a < 3; ++a) delta[a * 3 + a] = f5.one();
  auto ftr = bridge_f(W, delta, delta);
  TautologicalFamily fam(Gs3, Ts3);
  for (std::uint32_t g0 = 0; g0 < 6; ++g0)
    for (std::uint32_t g1 = 0; g1 < 6; ++g1) {
      FirstGen S{ftr, {g0, g1}};
      SecondGen Sp = SecondGen::make(W, delta, delta, reparametrize(Gs3, {g0, g1}));
      Mat M = eval_construction(fam, Sp);
      for (std::size_t k = 0; k < fam.points().size(); ++k) {
        const Hom& rho = fam.points()[k];
        Elem v = eval_gen(Gs3, S, rho);
        CHECK(v == M(k, k));
        // fixed points of rho(g0) acting on 3 letters, via the matrix
        Mat P = perm3(Ts3, s3, f5)(rho[g0]);
        Elem tr = f5.zero();
        for (std::size_t a = 0; a < 3; ++a) tr = f5.add(tr, P(a, a));
        CHECK(v == tr);
      }
    }

  // orbit constancy of evaluation
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    auto f = InvariantFunction::random(Ts3, f5, 2, rng);
    FirstGen S{f, {static_cast<std::uint32_t>(rand_below(rng, 6)), static_cast<std::uint32_t>(rand_below(rng, 6))}};
    for (const auto& rho : over_q_homs(Gs3, *Ts3)) {
      Hom c = canonical_rep(Gs3, *Ts3, rho);
      CHECK(eval_gen(Gs3, S, rho) == eval_gen(Gs3, S, c));
      CHECK(eval_gen(Gs3, S, rho, Convention::Naive) == eval_gen(Gs3, S, c, Convention::Naive));
    }
  }
}

TEST_CASE("second presentation, bridge and the construction") {
  Field f3 = Field::make(3);
  GroupPtr c2 = FiniteGroup::cyclic(2);
  auto T = split_target(c2);
  GammaData G = GammaData::over_trivial(c2);

  // W = 1
  LRep one = LRep::trivial(T, f3, 1);
  auto fc = bridge_f(one, {f3.one()}, {f3.one()});
  for (auto v : fc.table()) CHECK(v == f3.one());
  TautologicalFamily fam(G, T);
  Mat M1 = eval_construction(fam, SecondGen::make(one, {f3.one()}, {f3.one()}, {1}));
  CHECK(M1.is_identity());

  // chi (x) chi^{-1}: f(g0, g1) = chi(g0) chi(g1)^{-1}
  LRep chi = LRep::from_rep(T, sign_char(T, f3));
  LRep W = box(chi, dual(chi));
  auto f = bridge_f(W, {f3.one()}, {f3.one()});
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      Elem want = (a ^ b) ? f3.neg(f3.one()) : f3.one();
      CHECK(f({a, b}) == want);
    }
  for (std::uint32_t g0 = 0; g0 < 2; ++g0)
    for (std::uint32_t g1 = 0; g1 < 2; ++g1) {
      Mat M = eval_construction(fam, SecondGen::make(W, {f3.one()}, {f3.one()}, {g0, g1}));
      for (std::size_t k = 0; k < fam.points().size(); ++k) {
        const Hom& rho = fam.points()[k];
        Elem want = (rho[g0] ^ rho[g1]) ? f3.neg(f3.one()) : f3.one();
        CHECK(M(k, k) == want);
      }
    }

  // W' + W'' with x, xi supported on W'
  LRep Ws = direct_sum(W, box(chi, chi));
  auto fs = bridge_f(Ws, {f3.one(), f3.zero()}, {f3.one(), f3.zero()});
  CHECK(fs.table() == f.table());
  CHECK_THROWS_AS(bridge_f(chi, {f3.one()}, {f3.one()}), std::invalid_argument);

  // one-point stack: the scalar <xi, gamma-images . x>
  GroupPtr c3 = FiniteGroup::cyclic(3);
  auto Tsec = ParamTarget::make(FiniteGroup::cyclic(1), c3, {{0}, {0}, {0}});
  GammaData G3 = GammaData::make(c3, {0, 1, 2}, c3);
  TautologicalFamily fam3(G3, Tsec);
  REQUIRE(fam3.points().size() == 1);
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    SecondGen S = random_second_gen(G3, Tsec, f3, 2, 3, rng);
    Mat M = eval_construction(fam3, S);
    CHECK(M(0, 0) == eval_gen(S, fam3.points()[0]));
  }
}

TEST_CASE("relation suite") {
  Field f5 = Field::make(5);
  GroupPtr s3 = FiniteGroup::symmetric(3);
  auto T = split_target(s3);
  GammaData G = GammaData::over_trivial(s3);
  Rng rng(11);
  SuiteReport r = relation_suite(G, T, f5, 50, rng);
  for (const auto& l : r.lines) {
    CAPTURE(l.id);
    if (!l.informational) CHECK(l.failures == 0);
    CHECK(l.instances == 50);
  }
  CHECK(r.pass());

  // a twisted target of order 24
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), c6 = FiniteGroup::cyclic(6);
  auto T24 = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  std::vector<std::uint32_t> to3(6);
  for (std::uint32_t g = 0; g < 6; ++g) to3[g] = g % 3;
  Rng rng2(12);
  SuiteReport r24 = relation_suite(GammaData::make(c6, to3, c3), T24, Field::make(3), 5, rng2);
  CHECK(r24.pass());
}

TEST_CASE("functoriality") {
  Field f3 = Field::make(3), f5 = Field::make(5);
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
  Rng rng(21);

  // identity
  auto Ts3 = split_target(s3);
  GammaData Gs3 = GammaData::over_trivial(s3);
  TargetHom id = TargetHom::identity(Ts3);
  auto f = InvariantFunction::random(Ts3, f5, 2, rng);
  CHECK(pullback(id, FirstGen{f, {1, 2}}).f.table() == f.table());

  // phi_BC: (h, q) -> (diag h, q) from C_2 x C_3 into C_2^3 x| C_3
  auto TG = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  std::vector<std::vector<std::uint32_t>> triv(3, std::vector<std::uint32_t>{0, 1});
  auto TH = ParamTarget::make(c2, c3, triv);
  TargetHom bc = TargetHom::base_change_diagonal(TH, TG, 3);
  // product of coordinates of the Ghat-part of g0^{-1} g1
  const FiniteGroup& LG = *TG->group();
  auto chi3 = InvariantFunction::from_function(TG, f3, 2, [&](const std::vector<std::uint32_t>& g) {
    std::uint32_t a = TG->ghat_part(LG.mul(LG.inv(g[0]), g[1]));
    std::uint32_t par = power_coordinate(2, a, 0, 3) ^ power_coordinate(2, a, 1, 3) ^ power_coordinate(2, a, 2, 3);
    return par ? f3.neg(f3.one()) : f3.one();
  });
  FirstGen S{chi3, {0, 1}};
  FirstGen P = pullback(bc, S);
  const FiniteGroup& LH = *TH->group();
  for (std::uint32_t a = 0; a < LH.order(); ++a)
    for (std::uint32_t b = 0; b < LH.order(); ++b) {
      std::uint32_t h = TH->ghat_part(LH.mul(LH.inv(a), b));  // h^3 = h
      CHECK(P.f({a, b}) == (h ? f3.neg(f3.one()) : f3.one()));
    }
  GroupPtr c6 = FiniteGroup::cyclic(6);
  std::vector<std::uint32_t> to3(6);
  for (std::uint32_t g = 0; g < 6; ++g) to3[g] = g % 3;
  GammaData G6 = GammaData::make(c6, to3, c3);
  for (std::uint32_t g0 = 0; g0 < 6; ++g0)
    for (std::uint32_t g1 = 0; g1 < 6; ++g1)
      for (Convention c : {Convention::LastIndex, Convention::Naive}) {
        auto pc = pullback_check(bc, G6, FirstGen{chi3, {g0, g1}}, c);
        CHECK(pc.points > 0);
        CHECK(pc.failures == 0);
      }
  for (int t = 0; t < 10; ++t) {
    SecondGen S2 = random_second_gen(G6, TG, f3, 1 + rand_below(rng, 2), 4, rng);
    CHECK(pullback_check(bc, G6, S2).failures == 0);
  }

  // S_3 targets: sign S_3 -> C_2 and the inclusion C_3 -> S_3
  auto Tc2 = split_target(c2);
  std::vector<std::uint32_t> sgn(6);
  for (std::uint32_t g = 0; g < 6; ++g) sgn[g] = s3->element_order(g) == 2 ? 1 : 0;
  TargetHom sign = TargetHom::make(Ts3, Tc2, sgn);
  auto Tc3 = split_target(c3);
  std::uint32_t r3 = element_of_order(*s3, 3);
  TargetHom incl = TargetHom::make(Tc3, Ts3, {s3->identity(), r3, s3->mul(r3, r3)});
  GammaData Gc3 = GammaData::over_trivial(c3);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 1 + rand_below(rng, 2);
    std::vector<std::uint32_t> gs(n), gc(n);
    for (auto& g : gs) g = static_cast<std::uint32_t>(rand_below(rng, 6));
    for (auto& g : gc) g = static_cast<std::uint32_t>(rand_below(rng, 3));
    for (Convention c : {Convention::LastIndex, Convention::Naive}) {
      CHECK(pullback_check(sign, Gs3, FirstGen{InvariantFunction::random(Tc2, f5, n, rng), gs}, c).failures == 0);
      CHECK(pullback_check(incl, Gc3, FirstGen{InvariantFunction::random(Ts3, f5, n, rng), gc}, c).failures == 0);
    }
    CHECK(pullback_check(incl, Gc3, random_second_gen(Gc3, Ts3, f5, n, 4, rng)).failures == 0);
  }
  // not over Q
  CHECK_THROWS_AS(TargetHom::make(TH, TG, std::vector<std::uint32_t>(6, 0)), std::invalid_argument);
}

TEST_CASE("norm identities") {
  Field f3 = Field::make(3);
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), c6 = FiniteGroup::cyclic(6);
  auto TG = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  std::vector<std::uint32_t> to3(6);
  for (std::uint32_t g = 0; g < 6; ++g) to3[g] = g % 3;
  GammaData G6 = GammaData::make(c6, to3, c3);
  Rng rng(31);
  std::size_t checked = 0;
  for (int t = 0; t < 8; ++t) {
    SecondGen S = random_second_gen(G6, TG, f3, 1 + rand_below(rng, 2), 2, rng);
    NormCheck nc = norm_identities(G6, S);
    CHECK(nc.points > 0);
    CHECK(nc.norm_failures == 0);
    CHECK(nc.sum_failures == 0);
    checked += nc.points;
    // sigma acts on values through rho -> sigma^{-1} rho
    for (const auto& rho : rep_stack(G6, *TG)) {
      Hom r2(rho.size());
      for (std::size_t x = 0; x < rho.size(); ++x) r2[x] = TG->sigma_pow(rho[x], -1);
      CHECK(eval_gen(sigma_gen(S), rho) == eval_gen(S, r2));
    }
  }
  CHECK(checked >= 8);

  // sigma trivial: Nm is the p-th power, N. is p times the value
  GroupPtr s3 = FiniteGroup::symmetric(3);
  auto T = split_target(s3);
  std::vector<std::uint32_t> ident(6);
  for (std::uint32_t g = 0; g < 6; ++g) ident[g] = g;
  auto Tsig = T->with_sigma(ident, 3);
  GammaData G = GammaData::over_trivial(s3);
  for (int t = 0; t < 5; ++t) {
    SecondGen S = random_second_gen(G, Tsig, f3, 1, 3, rng);
    EquivariantGen nm = norm_gen(S), nd = n_dot_gen(S);
    for (const auto& rho : rep_stack(G, *Tsig)) {
      Elem v = eval_gen(S, rho);
      CHECK(eval_gen(nm.gen, rho) == f3.pow(v, 3));
      CHECK(eval_gen(nd.gen, rho) == f3.zero());
    }
  }
  CHECK_THROWS_AS(norm_gen(random_second_gen(G, T, f3, 1, 3, rng)), std::invalid_argument);
}

TEST_CASE("character bijection") {
  Field f2 = Field::make(2), f3 = Field::make(3), f5 = Field::make(5);
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
  auto check = [](const BijectionReport& r, std::size_t points) {
    CHECK(r.points == points);
    CHECK(r.characters == points);
    CHECK(r.algebra_dim == points);
    CHECK(r.conventions_agree);
    CHECK(r.pass());
  };
  check(character_bijection_report(GammaData::over_trivial(c2), split_target(c2), f3), 2);
  check(character_bijection_report(GammaData::over_trivial(s3), split_target(s3), f5), 3);
  auto Tsec = ParamTarget::make(FiniteGroup::cyclic(1), c3, {{0}, {0}, {0}});
  check(character_bijection_report(GammaData::make(c3, {0, 1, 2}, c3), Tsec, f2), 1);
  check(character_bijection_report(GammaData::over_trivial(c3), split_target(s3), f2), 2);

  std::uint32_t r = element_of_order(*s3, 3);
  auto T18 = conj_target(s3, r, 3);
  GammaData G3 = GammaData::make(c3, {0, 1, 2}, c3);
  check(character_bijection_report(G3, T18, f2), brute_points(G3, *T18));

  GroupPtr c6 = FiniteGroup::cyclic(6);
  std::vector<std::uint32_t> to3(6);
  for (std::uint32_t g = 0; g < 6; ++g) to3[g] = g % 3;
  GammaData G6 = GammaData::make(c6, to3, c3);
  auto T24 = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  check(character_bijection_report(G6, T24, f3), brute_points(G6, *T24));
}
