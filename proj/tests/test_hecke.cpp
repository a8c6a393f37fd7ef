#include "doctest.h"
#include "tatebc/hecke.hpp"

using namespace tatebc;

namespace {

// Kernel matrix F[x][z] = f(xK, zK); convolution is the matrix product.
std::vector<std::vector<Elem>> kernel_matrix(const HeckeElement& f) {
  const std::size_t m = f.space()->coset_count();
  std::vector<std::vector<Elem>> out(m, std::vector<Elem>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t z = 0; z < m; ++z) out[x][z] = f.value(x, z);
  return out;
}

std::vector<std::vector<Elem>> kernel_product(const Field& fld, const std::vector<std::vector<Elem>>& a,
                                              const std::vector<std::vector<Elem>>& b) {
  const std::size_t m = a.size();
  std::vector<std::vector<Elem>> out(m, std::vector<Elem>(m, Elem{0}));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) out[x][z] = fld.add(out[x][z], fld.mul(a[x][y], b[y][z]));
  return out;
}

// The 2-dimensional summand of the permutation representation of S_3.
GroupRep standard_rep(const GroupPtr& s3, const Field& f) {
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

GroupRep box_rep(const SigmaGroup& S, const GroupRep& pi) {
  const std::uint32_t base = pi.group()->order();
  std::vector<Mat> mats;
  for (auto g : S.G->generators()) {
    Mat m = Mat::identity(pi.field(), 1);
    for (std::uint32_t i = 0; i < S.p; ++i) m = m.kron(pi(power_coordinate(base, g, i, S.p)));
    mats.push_back(m);
  }
  return GroupRep::from_generators(S.G, S.G->generators(), mats);
}

GroupRep permutation_rep(const HeckeSpacePtr& sp) {
  const std::size_t m = sp->coset_count();
  return GroupRep::from_function(sp->group(), sp->field(), m, [&](std::uint32_t g) {
    Mat P(sp->field(), m, m);
    for (std::size_t y = 0; y < m; ++y) P.at(sp->act(g, y), y) = sp->field().one();
    return P;
  });
}

}  // namespace

TEST_CASE("convolution") {
  Field f3 = Field::make(3);
  GroupPtr s3 = FiniteGroup::symmetric(3);
  std::vector<std::uint32_t> c3 = s3->closure({s3->generators()[1]});
  REQUIRE(c3.size() == 3);
  HeckeSpacePtr sp = HeckeSpace::make(s3, c3, f3);
  CHECK(sp->coset_count() == 2);
  CHECK(sp->double_coset_count() == 2);
  HeckeElement e = HeckeElement::unit(sp), t = HeckeElement::basis(sp, 1);
  CHECK(convolve(t, t) == e);
  CHECK(convolve(e, t) == t);
  CHECK(convolve(t, e) == t);

  HeckeSpacePtr whole = HeckeSpace::make(s3, s3->closure(s3->generators()), f3);
  CHECK(whole->coset_count() == 1);
  HeckeElement a(whole, {f3.from_int(2)}), b(whole, {f3.from_int(2)});
  CHECK(convolve(a, b).row()[0] == f3.one());

  CHECK_THROWS_AS(HeckeSpace::make(s3, {0, s3->generators()[0], s3->generators()[1]}, f3), std::invalid_argument);
  HeckeSpacePtr triv = HeckeSpace::make(s3, {s3->identity()}, f3);
  CHECK_THROWS_AS(convolve(t, HeckeElement::unit(triv)), std::invalid_argument);

  // associativity, unit and agreement with the kernel-matrix product
  Rng rng(31);
  for (auto K : {std::vector<std::uint32_t>{s3->identity()}, c3, s3->closure({s3->generators()[0]})}) {
    HeckeSpacePtr s = HeckeSpace::make(s3, K, f3);
    for (int k = 0; k < 10; ++k) {
      HeckeElement x = random_hecke_element(s, rng), y = random_hecke_element(s, rng), z = random_hecke_element(s, rng);
      CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
      CHECK(convolve(HeckeElement::unit(s), x) == x);
      CHECK(kernel_matrix(convolve(x, y)) == kernel_product(f3, kernel_matrix(x), kernel_matrix(y)));
    }
  }
  // a row that is not K-invariant
  HeckeSpacePtr s2 = HeckeSpace::make(s3, s3->closure({s3->generators()[0]}), f3);
  Vec bad(3, Elem{0});
  bad[1] = f3.one();
  CHECK_THROWS_AS(HeckeElement(s2, bad), std::invalid_argument);
}

TEST_CASE("plain subgroups") {
  GroupPtr s3 = FiniteGroup::symmetric(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(s3, 3);
  CHECK(is_plain(S, {S.G->identity()}));
  CHECK(is_plain(S, S.G->closure(S.G->generators())));

  // C_4 with inversion: the coset 1 + {0, 2} is fixed but misses H = {0, 2}
  SigmaGroup c4 = SigmaGroup::make(FiniteGroup::cyclic(4), {0, 3, 2, 1}, 2);
  CHECK_FALSE(is_plain(c4, {0, 2}));
  CHECK(is_plain(c4, {0, 1, 2, 3}));
  CHECK(is_plain(c4, {0}));

  SigmaGroup c23 = SigmaGroup::cyclic_shift(FiniteGroup::cyclic(2), 3);
  std::uint32_t x = power_element(2, {1, 0, 0});
  CHECK_THROWS_AS(is_plain(c23, {0, x}), std::invalid_argument);  // not sigma-stable
}

TEST_CASE("brauer homomorphism") {
  Field f3 = Field::make(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(FiniteGroup::cyclic(2), 3);
  HeckeSpacePtr sp = HeckeSpace::make(S.G, {S.G->identity()}, f3);
  BrauerMap br = BrauerMap::make(S, sp);
  CHECK(br.target()->coset_count() == 2);

  // indicator of the free orbit of (1,0,0)
  Vec row(8, Elem{0});
  for (auto c : {std::vector<std::uint32_t>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
    row[sp->coset_of(power_element(2, c))] = f3.one();
  HeckeElement orbit(sp, row);
  CHECK(is_sigma_invariant(S, orbit));
  CHECK(br(orbit).is_zero());

  std::uint32_t diag = power_element(2, {1, 1, 1});
  HeckeElement d = HeckeElement::basis(sp, sp->double_coset_of(sp->coset_of(diag)));
  HeckeElement bd = br(d);
  const auto& emb = br.fixed_group().embedding;
  for (std::size_t y = 0; y < 2; ++y)
    CHECK(bd.row()[y] == (emb[br.target()->rep(y)] == diag ? f3.one() : f3.zero()));

  // not sigma-invariant
  HeckeElement single = HeckeElement::basis(sp, sp->double_coset_of(sp->coset_of(power_element(2, {1, 0, 0}))));
  CHECK_THROWS_AS(br(single), std::invalid_argument);
  CHECK(sigma_apply(S, sigma_apply(S, sigma_apply(S, single))) == single);

  // multiplicativity on all sigma-invariant basis pairs, checked by kernel products on H
  auto basis = sigma_invariant_basis(S, sp);
  CHECK(basis.size() == 4);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      CHECK(br(convolve(a, b)) == convolve(br(a), br(b)));
      CHECK(kernel_matrix(br(convolve(a, b))) == kernel_product(f3, kernel_matrix(br(a)), kernel_matrix(br(b))));
    }
  CHECK(br(HeckeElement::unit(sp)) == HeckeElement::unit(br.target()));
}

TEST_CASE("brauer on power groups and the non-plain control") {
  Field f2 = Field::make(2);
  GroupPtr s3 = FiniteGroup::symmetric(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(s3, 2);
  for (auto L : {std::vector<std::uint32_t>{s3->identity()}, s3->closure({s3->generators()[0]}),
                 s3->closure({s3->generators()[1]})}) {
    std::vector<std::uint32_t> K;
    for (auto a : L)
      for (auto b : L) K.push_back(power_element(6, {a, b}));
    CHECK(is_plain(S, K));
    HeckeSpacePtr sp = HeckeSpace::make(S.G, K, f2);
    BrauerMap br = BrauerMap::make(S, sp);
    // U is the diagonal copy of L
    CHECK(br.target()->subgroup().size() == L.size());
    const auto& emb = br.fixed_group().embedding;
    for (auto h : br.target()->subgroup()) {
      std::uint32_t g = emb[h];
      CHECK(power_coordinate(6, g, 0, 2) == power_coordinate(6, g, 1, 2));
    }
    for (std::uint32_t h = 0; h < 6; ++h) {
      std::uint32_t dh = diagonal_element(6, h, 2);
      HeckeElement cls = HeckeElement::basis(sp, sp->double_coset_of(sp->coset_of(dh)));
      if (!is_sigma_invariant(S, cls)) continue;
      HeckeElement b = br(cls);
      // the class of h in U \ H / U
      std::uint32_t hi = static_cast<std::uint32_t>(std::find(emb.begin(), emb.end(), dh) - emb.begin());
      const HeckeSpace& T = *br.target();
      CHECK(b == HeckeElement::basis(br.target(), T.double_coset_of(T.coset_of(hi))));
    }
    auto basis = sigma_invariant_basis(S, sp);
    for (const auto& a : basis)
      for (const auto& c : basis) CHECK(br(convolve(a, c)) == convolve(br(a), br(c)));
  }

  // C_4, inversion, K = {0, 2}: t * t = 1 but the restriction of t is 0
  SigmaGroup c4 = SigmaGroup::make(FiniteGroup::cyclic(4), {0, 3, 2, 1}, 2);
  HeckeSpacePtr sp = HeckeSpace::make(c4.G, {0, 2}, f2);
  CHECK_THROWS_AS(BrauerMap::make(c4, sp), std::invalid_argument);
  BrauerMap raw = BrauerMap::unchecked(c4, sp);
  HeckeElement t = HeckeElement::basis(sp, 1);
  CHECK(convolve(t, t) == HeckeElement::unit(sp));
  CHECK(raw(convolve(t, t)) == HeckeElement::unit(raw.target()));
  CHECK(convolve(raw(t), raw(t)).is_zero());
}

TEST_CASE("hecke action on invariants") {
  Field f5 = Field::make(5);
  GroupPtr s3 = FiniteGroup::symmetric(3);
  std::vector<std::uint32_t> c3 = s3->closure({s3->generators()[1]});
  HeckeSpacePtr sp = HeckeSpace::make(s3, c3, f5);
  GroupRep reg = GroupRep::regular(s3, f5);
  HeckeElement t = HeckeElement::basis(sp, 1);
  Mat at = hecke_action(t, reg);
  CHECK(at.rows() == 2);
  CHECK((at * at).is_identity());
  CHECK(hecke_action(HeckeElement::unit(sp), reg).is_identity());

  // Yoneda: on k[G/K], f . delta_K is the row of f
  Rng rng(12);
  for (auto K : {c3, s3->closure({s3->generators()[0]}), std::vector<std::uint32_t>{s3->identity()}}) {
    HeckeSpacePtr s = HeckeSpace::make(s3, K, f5);
    GroupRep perm = permutation_rep(s);
    Vec delta(s->coset_count(), Elem{0});
    delta[0] = f5.one();
    for (int k = 0; k < 5; ++k) {
      HeckeElement f = random_hecke_element(s, rng), g = random_hecke_element(s, rng);
      CHECK(hecke_apply(f, perm, delta) == f.row());
      for (const GroupRep* R : {&perm, &reg}) {
        CHECK(hecke_action(convolve(f, g), *R) == hecke_action(f, *R) * hecke_action(g, *R));
      }
    }
  }
}

TEST_CASE("tate compatibility of the hecke action") {
  Field f3 = Field::make(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(FiniteGroup::cyclic(2), 3);
  HeckeSpacePtr sp = HeckeSpace::make(S.G, {S.G->identity()}, f3);

  GroupRep triv = GroupRep::trivial(S.G, f3);
  DiagramReport r0 = tate_hecke_diagram(S, sp, triv, Mat::identity(f3, 1));
  CHECK(r0.pass);
  CHECK(r0.tate_dims[0] == 1);

  GroupRep reg = GroupRep::regular(S.G, f3);
  Mat A(f3, 8, 8);
  for (std::uint32_t g = 0; g < 8; ++g) A.at(S.apply(g), g) = f3.one();
  DiagramReport r1 = tate_hecke_diagram(S, sp, reg, A);
  CHECK(r1.pass);
  CHECK(r1.elements_checked == 4);
  CHECK(r1.tate_dims[0] == 2);
  CHECK_THROWS_AS(tate_hecke_diagram(S, sp, reg, Mat::identity(f3, 8).scaled(f3.from_int(2))), std::invalid_argument);

  // K = H^p-stable but larger: the whole group and the diagonal
  HeckeSpacePtr diag = HeckeSpace::make(S.G, S.H, f3);
  CHECK(tate_hecke_diagram(S, diag, reg, A).pass);
}

TEST_CASE("tate compatibility for a box power of the S_3 standard representation") {
  Field f5 = Field::make(5);
  GroupPtr s3 = FiniteGroup::symmetric(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(s3, 5);
  GroupRep pi = standard_rep(s3, f5);
  GroupRep Pi = box_rep(S, pi);
  Mat A = tensor_rotation(f5, 2, 5);
  HeckeSpacePtr sp = HeckeSpace::make(S.G, {S.G->identity()}, f5);
  DiagramReport r = tate_hecke_diagram(S, sp, Pi, A);
  CHECK(r.pass);
  CHECK(r.invariant_dim == 32);
  CHECK(r.tate_dims[0] == 2);
  CHECK(r.tate_dims[1] == 2);
}

TEST_CASE("sigma-algebras and character extension") {
  Field f3 = Field::make(3);
  // S = {*, a, b, c}, sigma fixes * and rotates a -> b -> c
  SigmaAlgebra A = fun_algebra(f3, {0, 2, 3, 1});
  CHECK(A.is_commutative());
  Mat sub = norm_subalgebra(A);
  CHECK(sub.rows() == 2);  // the sigma-invariant functions
  // chi = evaluation at the orbit of *, on the subalgebra
  Character chi = point_characters(4, f3)[0];
  Character ext = char_extend(A, sub, chi);
  CHECK(ext == point_characters(4, f3)[0]);

  // uniqueness: exactly one point evaluation restricts to chi on the subalgebra
  std::size_t matches = 0;
  for (const auto& c : point_characters(4, f3)) {
    bool agree = true;
    for (std::size_t i = 0; i < sub.rows(); ++i) agree &= char_eval(A, c, sub.row(i)) == char_eval(A, chi, sub.row(i));
    matches += agree;
  }
  CHECK(matches == 1);
  // the evaluations at a, b, c do not kill N.A
  for (std::size_t s = 1; s < 4; ++s) CHECK_THROWS_AS(char_extend(A, sub, point_characters(4, f3)[s]), std::invalid_argument);

  // sigma-invariance of the extension
  for (std::size_t i = 0; i < 4; ++i) CHECK(char_eval(A, ext, A.sigma(A.basis(i))) == char_eval(A, ext, A.basis(i)));
  // Nm(a) = a^p on invariants
  Vec inv{f3.from_int(2), f3.one(), f3.one(), f3.one()};
  CHECK(ring_norm(A, inv) == A.mul(A.mul(inv, inv), inv));
  CHECK(ring_N(A, A.basis(0)) == Vec(4, Elem{0}));

  // over F_9 the p-th root matters
  Field f9 = Field::make(3, 2);
  SigmaAlgebra B = fun_algebra(f9, {0, 2, 3, 1, 4});
  Mat subB = norm_subalgebra(B);
  for (std::size_t s : {0u, 4u}) {
    Character e = char_extend(B, subB, point_characters(5, f9)[s]);
    CHECK(e == point_characters(5, f9)[s]);
    Vec a{f9.gen(), f9.one(), f9.zero(), f9.gen(), f9.from_int(2)};
    CHECK(char_eval(B, e, a) == f9.frobenius_inv(char_eval(B, point_characters(5, f9)[s], ring_norm(B, a))));
  }

  // a non-commutative algebra is rejected: 2x2 matrices with trivial sigma
  std::vector<std::vector<Vec>> mult(4, std::vector<Vec>(4, Vec(4, Elem{0})));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) mult[i * 2 + j][j * 2 + k][i * 2 + k] = f3.one();
  SigmaAlgebra M(f3, mult, Vec{f3.one(), f3.zero(), f3.zero(), f3.one()}, Mat::identity(f3, 4));
  CHECK_FALSE(M.is_commutative());
  CHECK_THROWS_AS(char_extend(M, Mat::identity(f3, 4), Character(4, Elem{0})), std::invalid_argument);
  CHECK_THROWS_AS(SigmaAlgebra(f3, mult, Vec{f3.one(), f3.zero(), f3.zero(), f3.zero()}, Mat::identity(f3, 4)),
                  std::invalid_argument);
}
