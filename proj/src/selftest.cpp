#include "tatebc/selftest.hpp"

#include <exception>

#include "tatebc/catalog.hpp"
#include "tatebc/excursion.hpp"
#include "tatebc/hecke.hpp"
#include "tatebc/linkage.hpp"
#include "tatebc/smith.hpp"
#include "tatebc/tate_complex.hpp"
#include "tatebc/torus.hpp"

namespace tatebc {

namespace {

using json = nlohmann::json;

Rng rng_for(std::uint64_t seed, int criterion) { return Rng(seed * 1000003ull + static_cast<std::uint64_t>(criterion)); }

const std::uint32_t kPrimes[] = {2, 3, 5};

CheckResult tate_table(std::uint64_t) {
  CheckResult r{"01-tate-table", true, json::object()};
  json rows = json::array();
  for (std::uint32_t p : kPrimes) {
    Field f = Field::make(p);
    for (std::size_t i = 1; i <= p; ++i) {
      SigmaModule J = SigmaModule::jordan(f, i);
      auto [t0, t1] = tate_dims(J);
      const std::size_t want = i < p ? 1 : 0;
      JordanProfile prof = jordan_profile(J);
      std::size_t short_blocks = 0;
      for (auto b : prof) short_blocks += b < p;
      const bool ok = t0 == want && t1 == want && prof == JordanProfile{i} && short_blocks == t0;
      r.pass &= ok;
      rows.push_back({{"p", p}, {"i", i}, {"t0", t0}, {"t1", t1}, {"ok", ok}});
    }
  }
  r.values["table"] = rows;
  return r;
}

SigmaChainComplex random_for(std::uint32_t p, Rng& rng, ComplexOptions opt) {
  opt.lo = static_cast<int>(rand_below(rng, 5)) - 2;
  opt.length = 2 + rand_below(rng, 2);
  return random_complex(Field::make(p), opt, rng);
}

CheckResult perfect_vanishing(std::uint64_t seed) {
  Rng rng = rng_for(seed, 2);
  CheckResult r{"02-perfect-vanishing", true, json::object()};
  std::size_t failures = 0, nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    ComplexOptions opt;
    opt.free_only = true;
    SigmaChainComplex C = random_for(kPrimes[t % 3], rng, opt);
    nonzero += !C.zero_differential();
    if (tate_dim(C, 0) != 0 || tate_dim(C, 1) != 0) ++failures;
  }
  r.pass = failures == 0;
  r.values = {{"complexes", 100}, {"nonzero_differential", nonzero}, {"failures", failures}};
  return r;
}

CheckResult periodicity(std::uint64_t seed) {
  Rng rng = rng_for(seed, 3);
  CheckResult r{"03-periodicity-shift", true, json::object()};
  std::size_t failures = 0, nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    SigmaChainComplex C = random_for(kPrimes[t % 3], rng, {});
    nonzero += !C.zero_differential();
    SigmaChainComplex C1 = C.shifted(1);
    for (int i = 0; i < 2; ++i) {
      const std::size_t d = tate_dim(C, i);
      if (d != tate_dim(C, i + 2) || tate_dim(C1, i) != tate_dim(C, i + 1)) {
        ++failures;
        break;
      }
    }
  }
  r.pass = failures == 0;
  r.values = {{"complexes", 100}, {"nonzero_differential", nonzero}, {"failures", failures}};
  return r;
}

CheckResult kunneth(std::uint64_t seed) {
  Rng rng = rng_for(seed, 4);
  CheckResult r{"04-trivial-action-kunneth", true, json::object()};
  std::size_t failures = 0;
  for (int t = 0; t < 50; ++t) {
    ComplexOptions opt;
    opt.trivial_action = true;
    SigmaChainComplex C = random_for(kPrimes[t % 3], rng, opt);
    KunnethReport k = trivial_action_factor(C);
    std::size_t sum_h = 0;
    for (int j = C.lo(); j <= C.hi(); ++j) sum_h += cohomology(C, j).dim();
    if (!k.pass || k.t[0] != sum_h || k.t[1] != sum_h) ++failures;
  }
  r.pass = failures == 0;
  r.values = {{"complexes", 50}, {"failures", failures}};
  return r;
}

CheckResult les(std::uint64_t seed) {
  Rng rng = rng_for(seed, 5);
  CheckResult r{"05-les-exactness", true, json::object()};
  std::size_t failures = 0;
  for (int t = 0; t < 200; ++t) {
    ComplexOptions opt;
    opt.length = 1 + rand_below(rng, 2);
    opt.max_blocks = 2;
    ShortExactSequence ses = random_ses(Field::make(kPrimes[t % 3]), opt, t % 4 == 0, rng);
    if (!les_check(ses).exact) ++failures;
  }
  r.pass = failures == 0;
  r.values = {{"sequences", 200}, {"failures", failures}};
  return r;
}

CheckResult spectral(std::uint64_t seed) {
  Rng rng = rng_for(seed, 6);
  CheckResult r{"06-spectral-bound", true, json::object()};
  std::size_t failures = 0, equalities = 0;
  for (int t = 0; t < 130; ++t) {
    ComplexOptions opt;
    opt.zero_differential = t >= 100;
    SigmaChainComplex C = random_for(kPrimes[t % 3], rng, opt);
    SpectralReport s = tate_ss(C);
    bool ok = s.pass;
    for (int n = 0; n < 2; ++n) {
      ok &= s.t[n] <= s.bound[n];
      if (C.zero_differential()) ok &= s.t[n] == s.bound[n];
    }
    if (C.zero_differential()) ++equalities;
    failures += !ok;
  }
  r.pass = failures == 0;
  r.values = {{"complexes", 130}, {"zero_differential", equalities}, {"failures", failures}};
  return r;
}

CheckResult smith(std::uint64_t) {
  CheckResult r{"07-smith-localization", true, json::object()};
  json rows = json::array();
  for (std::uint32_t p : kPrimes) {
    for (const auto& [name, X] : smith_battery(p)) {
      AdmissibleComplex A = make_admissible(X);
      SmithReport s = smith_localization_report(A);
      SmithReport sd = smith_localization_report(AdmissibleComplex(barycentric_subdivide(A.complex())));
      const bool ok = s.pass && sd.pass && s.t_space[0] == sd.t_space[0] && s.t_space[1] == sd.t_space[1];
      r.pass &= ok;
      rows.push_back({{"p", p}, {"name", name}, {"t", {s.t_space[0], s.t_space[1]}},
                      {"t_fixed", {s.t_fixed[0], s.t_fixed[1]}}, {"ok", ok}});
    }
  }
  r.values["battery"] = rows;
  return r;
}

std::vector<std::uint32_t> power_subgroup(const GroupPtr& base, const std::vector<std::uint32_t>& L, std::uint32_t k) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<std::uint32_t> c(k);
    for (std::uint32_t i = 0; i < k; ++i) c[i] = L[idx[i]];
    out.push_back(power_element(base->order(), c));
    std::uint32_t i = k;
    while (i > 0 && ++idx[i - 1] == L.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::size_t brauer_failures(const SigmaGroup& S, const std::vector<std::uint32_t>& K, const Field& f, std::size_t* pairs) {
  HeckeSpacePtr sp = HeckeSpace::make(S.G, K, f);
  BrauerMap br = BrauerMap::make(S, sp);
  auto basis = sigma_invariant_basis(S, sp);
  std::vector<HeckeElement> img;
  for (const auto& a : basis) img.push_back(br(a));
  std::size_t failures = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) failures += !(br(convolve(basis[i], basis[j])) == convolve(img[i], img[j]));
  *pairs += basis.size() * basis.size();
  return failures;
}

CheckResult brauer(std::uint64_t) {
  CheckResult r{"08-brauer-homomorphism", true, json::object()};
  Field f3 = Field::make(3);
  json rows = json::array();
  auto run = [&](const std::string& name, const SigmaGroup& S, const std::vector<std::uint32_t>& K) {
    const bool plain = is_plain(S, K);
    std::size_t pairs = 0, failures = plain ? brauer_failures(S, K, f3, &pairs) : 1;
    r.pass &= plain && failures == 0;
    rows.push_back({{"instance", name}, {"plain", plain}, {"pairs", pairs}, {"failures", failures}});
  };
  SigmaGroup c2 = SigmaGroup::cyclic_shift(FiniteGroup::cyclic(2), 3);
  run("C2^3 shift, K=1", c2, {c2.G->identity()});
  GroupPtr s3 = FiniteGroup::symmetric(3);
  SigmaGroup s33 = SigmaGroup::cyclic_shift(s3, 3);
  run("S3^3 shift, K=1", s33, {s33.G->identity()});
  run("S3^3 shift, K=C3^3", s33, power_subgroup(s3, s3->closure({group_element_of_order(*s3, 3)}), 3));

  // non-plain control: C_4 with inversion, K = {0, 2}
  Field f2 = Field::make(2);
  SigmaGroup c4 = SigmaGroup::make(FiniteGroup::cyclic(4), {0, 3, 2, 1}, 2);
  HeckeSpacePtr sp = HeckeSpace::make(c4.G, {0, 2}, f2);
  BrauerMap raw = BrauerMap::unchecked(c4, sp);
  HeckeElement t = HeckeElement::basis(sp, 1);
  const bool plain = is_plain(c4, {0, 2});
  const bool breaks = !(raw(convolve(t, t)) == convolve(raw(t), raw(t)));
  r.pass &= !plain && breaks;
  rows.push_back({{"instance", "C4 inversion, K={0,2} (control)"}, {"plain", plain}, {"multiplicativity_fails", breaks}});
  r.values["instances"] = rows;
  return r;
}

CheckResult character_extension(std::uint64_t seed) {
  Rng rng = rng_for(seed, 9);
  CheckResult r{"09-character-extension", true, json::object()};
  struct Model {
    std::uint32_t p, m;
    std::vector<std::uint32_t> perm;
  };
  const std::vector<Model> models = {
      {2, 1, {1, 0, 2}}, {2, 2, {1, 0, 2, 4, 3}}, {3, 1, {0, 2, 3, 1}}, {3, 2, {0, 2, 3, 1, 4}}, {5, 1, {1, 2, 3, 4, 0, 5, 6}}};
  json rows = json::array();
  for (const auto& md : models) {
    Field f = Field::make(md.p, md.m);
    SigmaAlgebra A = fun_algebra(f, md.perm);
    Mat sub = norm_subalgebra(A);
    const std::size_t n = md.perm.size();
    auto points = point_characters(n, f);
    Mat all = Mat::identity(f, n);
    for (std::size_t s = 0; s < n; ++s) {
      if (md.perm[s] != s) continue;
      const Character& chi = points[s];
      Character ext = char_extend(A, sub, chi);
      bool ok = is_character_on(A, all, ext);
      for (std::size_t i = 0; i < sub.rows(); ++i) ok &= char_eval(A, ext, sub.row(i)) == char_eval(A, chi, sub.row(i));
      for (int t = 0; t < 10; ++t) {
        Vec a(n);
        for (auto& x : a) x = random_elem(f, rng);
        ok &= char_eval(A, ext, a) == f.frobenius_inv(char_eval(A, chi, ring_norm(A, a)));
      }
      std::size_t agreeing = 0;
      for (const auto& c : points) {
        bool agree = true;
        for (std::size_t i = 0; i < sub.rows(); ++i) agree &= char_eval(A, c, sub.row(i)) == char_eval(A, chi, sub.row(i));
        if (agree) {
          ++agreeing;
          ok &= c == ext;
        }
      }
      ok &= agreeing == 1;
      r.pass &= ok;
      rows.push_back({{"field", {md.p, md.m}}, {"points", n}, {"fixed_point", s}, {"extensions", agreeing}, {"ok", ok}});
    }
  }
  r.values["models"] = rows;
  return r;
}

CheckResult excursion(std::uint64_t seed) {
  Rng rng = rng_for(seed, 10);
  CheckResult r{"10-excursion-relations-bijection", true, json::object()};
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
  Field f2 = Field::make(2), f3 = Field::make(3), f5 = Field::make(5);
  auto T18 = conj_target(s3, group_element_of_order(*s3, 3), 3);
  auto T24 = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  GammaData G3 = GammaData::make(c3, {0, 1, 2}, c3), G6 = cyclic_over_cyclic(6, 3);

  json suites = json::array();
  std::size_t instances = 0;
  auto suite = [&](const std::string& name, const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t n) {
    SuiteReport s = relation_suite(Gm, T, f, n, rng);
    json lines = json::object();
    for (const auto& l : s.lines) lines[l.id] = {{"failures", l.failures}, {"informational", l.informational}};
    r.pass &= s.pass();
    instances += n;
    suites.push_back({{"instance", name}, {"order", T->order()}, {"instances", n}, {"pass", s.pass()}, {"lines", lines}});
  };
  suite("S3 split", GammaData::over_trivial(s3), split_target(s3), f5, 50);
  suite("S3 x| C3", G3, T18, f2, 5);
  suite("C2^3 x| C3", G6, T24, f3, 5);
  r.pass &= instances >= 50;

  json bij = json::array();
  auto bijection = [&](const std::string& name, const GammaData& Gm, const TargetPtr& T, const Field& f, std::size_t want) {
    BijectionReport b = character_bijection_report(Gm, T, f);
    const bool ok = b.pass() && (want == 0 || b.points == want);
    r.pass &= ok;
    bij.push_back({{"instance", name}, {"points", b.points}, {"characters", b.characters}, {"algebra_dim", b.algebra_dim},
                   {"ok", ok}});
  };
  bijection("(C2, C2)", GammaData::over_trivial(c2), split_target(c2), f3, 2);
  bijection("(S3, S3)", GammaData::over_trivial(s3), split_target(s3), f5, 3);
  bijection("(C3, S3)", GammaData::over_trivial(c3), split_target(s3), f2, 2);
  bijection("(C3, S3 x| C3)", G3, T18, f2, 0);
  bijection("(C6, C2^3 x| C3)", G6, T24, f3, 0);
  r.values = {{"relation_suites", suites}, {"bijection", bij}, {"instances", instances}};
  return r;
}

CheckResult functoriality_norm(std::uint64_t seed) {
  Rng rng = rng_for(seed, 11);
  CheckResult r{"11-functoriality-norm", true, json::object()};
  Field f3 = Field::make(3), f5 = Field::make(5);
  GroupPtr c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), s3 = FiniteGroup::symmetric(3);
  std::size_t points = 0, failures = 0;
  auto add = [&](const PointCheck& pc) {
    points += pc.points;
    failures += pc.failures;
  };

  // phi_BC: (h, q) -> (diag h, q)
  auto TG = ParamTarget::base_change(c2, c3, 3, {0, 1, 2});
  std::vector<std::vector<std::uint32_t>> triv(3, std::vector<std::uint32_t>{0, 1});
  auto TH = ParamTarget::make(c2, c3, triv);
  TargetHom bc = TargetHom::base_change_diagonal(TH, TG, 3);
  GammaData G6 = cyclic_over_cyclic(6, 3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 1 + rand_below(rng, 2);
    std::vector<std::uint32_t> gs(n);
    for (auto& g : gs) g = static_cast<std::uint32_t>(rand_below(rng, 6));
    for (Convention c : {Convention::LastIndex, Convention::Naive})
      add(pullback_check(bc, G6, FirstGen{InvariantFunction::random(TG, f3, n, rng), gs}, c));
    add(pullback_check(bc, G6, random_second_gen(G6, TG, f3, n, 4, rng)));
  }
  // sign: S_3 -> C_2 and the inclusion C_3 -> S_3
  auto Ts3 = split_target(s3), Tc2 = split_target(c2), Tc3 = split_target(c3);
  std::vector<std::uint32_t> sgn(6);
  for (std::uint32_t g = 0; g < 6; ++g) sgn[g] = s3->element_order(g) == 2 ? 1 : 0;
  TargetHom sign = TargetHom::make(Ts3, Tc2, sgn);
  std::uint32_t r3 = group_element_of_order(*s3, 3);
  TargetHom incl = TargetHom::make(Tc3, Ts3, {s3->identity(), r3, s3->mul(r3, r3)});
  GammaData Gs3 = GammaData::over_trivial(s3), Gc3 = GammaData::over_trivial(c3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 1 + rand_below(rng, 2);
    std::vector<std::uint32_t> gs(n), gc(n);
    for (auto& g : gs) g = static_cast<std::uint32_t>(rand_below(rng, 6));
    for (auto& g : gc) g = static_cast<std::uint32_t>(rand_below(rng, 3));
    for (Convention c : {Convention::LastIndex, Convention::Naive}) {
      add(pullback_check(sign, Gs3, FirstGen{InvariantFunction::random(Tc2, f5, n, rng), gs}, c));
      add(pullback_check(incl, Gc3, FirstGen{InvariantFunction::random(Ts3, f5, n, rng), gc}, c));
    }
    add(pullback_check(incl, Gc3, random_second_gen(Gc3, Ts3, f5, n, 4, rng)));
  }
  // norm identities on the base-change target
  std::size_t npoints = 0, nfail = 0;
  for (int t = 0; t < 8; ++t) {
    NormCheck nc = norm_identities(G6, random_second_gen(G6, TG, f3, 1 + rand_below(rng, 2), 2, rng));
    npoints += nc.points;
    nfail += nc.norm_failures + nc.sum_failures;
  }
  r.pass = failures == 0 && nfail == 0 && points > 0 && npoints > 0;
  r.values = {{"pullback_points", points}, {"pullback_failures", failures}, {"norm_points", npoints},
              {"norm_failures", nfail}};
  return r;
}

CheckResult torus(std::uint64_t seed) {
  Rng rng = rng_for(seed, 12);
  CheckResult r{"12-torus-base-change", true, json::object()};
  std::size_t failures = 0;
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t p = t % 2 ? 5 : 3;
    TorusObject X = random_torus_object(p, rng);
    TorusObject B = bc_obj(X);
    std::map<long long, std::size_t> got;
    for (const auto& [l, m] : B.support) got[l[0]] = m;
    failures += got != res_bc_oracle(X);
  }
  std::size_t scalar_failures = 0;
  for (auto [p, m] : {std::pair{3u, 1u}, {3u, 2u}, {5u, 1u}}) {
    Field f = Field::make(p, m);
    Label l(p, 0);
    l[0] = 2;
    l[1] = -1;
    TorusObject V = TorusObject::make(p, {{l, 1}, {Label(p, 1), 2}});
    for (std::uint32_t c = 0; c < f.order(); ++c) {
      Elem lam = f.from_code(c);
      scalar_failures += !(bc_mor(TorusMorphism::scalar(f, V, lam)) == TorusMorphism::scalar(f, bc_obj(V), lam));
    }
  }
  TorusObject ex = TorusObject::make(3, {{{2, 3, -1}, 1}});
  const bool example = bc_obj(ex) == TorusObject::make(1, {{{4}, 1}});
  r.pass = failures == 0 && scalar_failures == 0 && example;
  r.values = {{"objects", 500}, {"failures", failures}, {"scalar_failures", scalar_failures}, {"example_2_3_-1_to_4", example}};
  return r;
}

CheckResult linkage(std::uint64_t) {
  CheckResult r{"13-linkage", true, json::object()};
  GroupPtr s3 = FiniteGroup::symmetric(3), c4 = FiniteGroup::cyclic(4);
  json rows = json::array();
  auto add = [&](const std::string& name, const GroupRep& pi, std::uint32_t p, bool expect_pi) {
    LinkageReport L = linkage_report(pi, p);
    const bool ok = L.pass() && L.t0_dim == pi.dim() && L.t0_iso_pi == expect_pi;
    r.pass &= ok;
    rows.push_back({{"pi", name}, {"p", p}, {"dim_pi", L.dim_pi}, {"t0_dim", L.t0_dim}, {"t1_dim", L.t1_dim},
                    {"t0_iso_twist", L.t0_iso_twist}, {"t0_iso_pi", L.t0_iso_pi}, {"t1_iso_twist_observed", L.t1_iso_twist},
                    {"ok", ok}});
  };
  for (std::uint32_t p : {3u, 5u}) {
    Field f = Field::make(p);
    add("trivial of S3", GroupRep::trivial(s3, f), p, true);
    add("sign of S3", sign_rep(s3, f), p, true);
  }
  add("standard of S3 over F5", s3_standard_rep(s3, Field::make(5)), 5, true);
  Field f9 = Field::make(3, 2);
  Elem i4 = field_element_of_order(f9, 4);
  add("C4 character z -> i over F9", cyclic_character(c4, f9, i4), 3, false);
  add("C4 character z -> -1 over F9", cyclic_character(c4, f9, f9.pow(i4, 2)), 3, true);

  // normalization does not depend on the chosen intertwiner
  SigmaExtendedRep box = box_power(cyclic_character(c4, f9, i4), 3);
  bool choice_free = true;
  for (std::uint32_t c = 1; c < f9.order(); ++c)
    choice_free &= normalize_extension(box.Pi, box.S, box.A.scaled(f9.from_code(c))).A == box.A;
  SigmaExtendedRep sbox = box_power(s3_standard_rep(s3, Field::make(5)), 5);
  choice_free &= extend_action(sbox.Pi, sbox.S).A == sbox.A;
  r.pass &= choice_free;
  r.values = {{"battery", rows}, {"normalization_choice_free", choice_free}};
  return r;
}

CheckResult hecke_diagram(std::uint64_t) {
  CheckResult r{"14-hecke-tate-diagram", true, json::object()};
  json rows = json::array();
  auto add = [&](const std::string& name, const DiagramReport& d) {
    r.pass &= d.pass;
    rows.push_back({{"instance", name}, {"invariant_dim", d.invariant_dim}, {"t", {d.tate_dims[0], d.tate_dims[1]}},
                    {"elements", d.elements_checked}, {"failures", d.failures}, {"pass", d.pass}});
  };
  Field f3 = Field::make(3);
  SigmaGroup S = SigmaGroup::cyclic_shift(FiniteGroup::cyclic(2), 3);
  GroupRep reg = GroupRep::regular(S.G, f3);
  Mat A(f3, 8, 8);
  for (std::uint32_t g = 0; g < 8; ++g) A.at(S.apply(g), g) = f3.one();
  add("C2^3 shift, regular", tate_hecke_diagram(S, HeckeSpace::make(S.G, {S.G->identity()}, f3), reg, A));

  Field f5 = Field::make(5);
  SigmaExtendedRep box = box_power(s3_standard_rep(FiniteGroup::symmetric(3), f5), 5);
  DiagramReport d = tate_hecke_diagram(box.S, HeckeSpace::make(box.S.G, {box.S.G->identity()}, f5), box.Pi, box.A);
  add("S3 standard box 5", d);
  // shared instance with the linkage computation
  TateReps T = tate_of_rep(box);
  const bool shared = d.tate_dims[0] == T.T0.dim() && d.tate_dims[1] == T.T1.dim();
  r.pass &= shared;
  r.values = {{"instances", rows}, {"agrees_with_linkage", shared}};
  return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> all = {
      {1, "01-tate-table", tate_table},
      {2, "02-perfect-vanishing", perfect_vanishing},
      {3, "03-periodicity-shift", periodicity},
      {4, "04-trivial-action-kunneth", kunneth},
      {5, "05-les-exactness", les},
      {6, "06-spectral-bound", spectral},
      {7, "07-smith-localization", smith},
      {8, "08-brauer-homomorphism", brauer},
      {9, "09-character-extension", character_extension},
      {10, "10-excursion-relations-bijection", excursion},
      {11, "11-functoriality-norm", functoriality_norm},
      {12, "12-torus-base-change", torus},
      {13, "13-linkage", linkage},
      {14, "14-hecke-tate-diagram", hecke_diagram},
  };
  return all;
}

CheckResult run_criterion(const Criterion& c, std::uint64_t seed) {
  try {
    CheckResult r = c.run(seed);
    r.id = c.id;
    return r;
  } catch (const std::exception& e) {
    return CheckResult{c.id, false, {{"error", e.what()}}};
  }
}

std::vector<CheckResult> run_selftest(std::uint64_t seed) {
  std::vector<CheckResult> out;
  for (const auto& c : acceptance_criteria()) out.push_back(run_criterion(c, seed));
  return out;
}

}  // namespace tatebc
