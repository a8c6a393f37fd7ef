#include "tatebc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tatebc/catalog.hpp"
#include "tatebc/hecke.hpp"
#include "tatebc/json_io.hpp"
#include "tatebc/linkage.hpp"
#include "tatebc/report.hpp"
#include "tatebc/selftest.hpp"

namespace tatebc {

namespace {

struct Options {
  std::string input, module, group, rep, target, gamma, subgroup = "1", check, field, report;
  std::uint32_t p = 0;
  std::uint64_t seed = 7;
  std::size_t instances = 20;
  bool timing = false;
};

// Input problems; everything else thrown while checking counts as a failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json load(Report& rep, const std::string& flag, const std::string& path) {
  if (path.empty()) throw UsageError("missing --" + flag);
  json j = load_json_file(path);
  rep.inputs["files"][flag] = digest(j);
  return j;
}

template <class F>
auto parse_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const json::exception& e) {
    throw InputError(std::string("ill-typed input: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid input: ") + e.what());
  }
}

std::optional<Field> field_flag(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_input([&] { return field_from_string(o.field); });
}

json dims(std::size_t a, std::size_t b) { return json::array({a, b}); }

// ---------------------------------------------------------------- tate

void cmd_tate(const Options& o, Report& rep) {
  if (!o.module.empty()) {
    json j = load(rep, "module", o.module);
    SigmaModule M = parse_input([&] { return module_from_json(j); });
    auto [t0, t1] = tate_dims(M);
    JordanProfile prof = jordan_profile(M);
    std::size_t short_blocks = 0;
    for (auto b : prof) short_blocks += b < M.p();
    rep.checks.push_back({"tate-dims", t0 == short_blocks && t1 == short_blocks,
                          {{"t0", t0}, {"t1", t1}, {"jordan_profile", prof}, {"perfect", is_perfect(M)}}});
    return;
  }
  json j = load(rep, "input", o.input);
  SigmaChainComplex C = parse_input([&] { return complex_from_json(j); });
  std::size_t t[4];
  for (int i = 0; i < 4; ++i) t[i] = tate_dim(C, i);
  SigmaChainComplex C1 = C.shifted(1);
  const std::size_t s0 = tate_dim(C1, 0), s1 = tate_dim(C1, 1);
  rep.checks.push_back({"tate-dims", true, {{"t0", t[0]}, {"t1", t[1]}}});
  rep.checks.push_back({"periodicity", t[0] == t[2] && t[1] == t[3], {{"t2", t[2]}, {"t3", t[3]}}});
  rep.checks.push_back({"shift", s0 == t[1] && s1 == t[2], {{"shifted", dims(s0, s1)}}});
  SpectralReport s = tate_ss(C);
  rep.checks.push_back({"spectral-bound", s.pass, {{"t", dims(s.t[0], s.t[1])}, {"bound", dims(s.bound[0], s.bound[1])}}});
  if (C.trivial_action()) {
    KunnethReport k = trivial_action_factor(C);
    rep.checks.push_back({"kunneth", k.pass, {{"t", dims(k.t[0], k.t[1])}, {"sum_h", k.sum_h}}});
  }
}

// ---------------------------------------------------------------- smith

void cmd_smith(const Options& o, Report& rep) {
  json j = load(rep, "input", o.input);
  SigmaComplex X = parse_input([&] { return simplicial_from_json(j, o.p ? std::optional<std::uint32_t>(o.p) : std::nullopt); });
  AdmissibleComplex A = make_admissible(X);
  SmithReport s = smith_localization_report(A);
  rep.checks.push_back({"smith-localization", s.pass,
                        {{"t_space", dims(s.t_space[0], s.t_space[1])},
                         {"t_fixed", dims(s.t_fixed[0], s.t_fixed[1])},
                         {"fixed_vertices", s.fixed_vertices},
                         {"subdivided", !X.is_admissible()}}});
}

// ---------------------------------------------------------------- hecke

std::vector<std::uint32_t> subgroup_flag(const std::string& s, const SigmaGroup& S) {
  if (s == "1") return {S.G->identity()};
  if (s == "G") return S.G->closure(S.G->generators());
  if (s == "H") return S.H;
  std::vector<std::uint32_t> elems;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(tok, &used);
      if (used != tok.size() || v >= S.G->order()) throw std::invalid_argument(tok);
      elems.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw InputError("bad --subgroup element \"" + tok + "\"");
    }
  }
  return S.G->closure(elems);
}

void cmd_hecke(const Options& o, Report& rep) {
  json gj = load(rep, "group", o.group);
  GroupInput gi = parse_input([&] { return group_from_json(gj); });
  if (!gi.S) throw InputError("hecke needs a group with sigma");
  const SigmaGroup& S = *gi.S;
  std::vector<std::uint32_t> K = subgroup_flag(o.subgroup, S);
  std::optional<Field> f = field_flag(o);
  if (!f) f = Field::make(S.p);
  if (o.check == "plain") {
    const bool plain = parse_input([&] { return is_plain(S, K); });
    rep.checks.push_back({"plain", plain, {{"subgroup_order", K.size()}, {"sigma_stable", true}}});
  } else if (o.check == "brauer") {
    if (!parse_input([&] { return is_plain(S, K); })) {
      rep.checks.push_back({"brauer-multiplicativity", false, {{"plain", false}}});
      return;
    }
    HeckeSpacePtr sp = HeckeSpace::make(S.G, K, *f);
    BrauerMap br = BrauerMap::make(S, sp);
    auto basis = sigma_invariant_basis(S, sp);
    std::size_t failures = 0;
    for (const auto& a : basis)
      for (const auto& b : basis) failures += !(br(convolve(a, b)) == convolve(br(a), br(b)));
    const bool unit = br(HeckeElement::unit(sp)) == HeckeElement::unit(br.target());
    rep.checks.push_back({"brauer-multiplicativity", failures == 0 && unit,
                          {{"plain", true}, {"basis", basis.size()}, {"failures", failures}, {"unital", unit}}});
  } else if (o.check == "diagram") {
    json rj = load(rep, "rep", o.rep);
    RepInput ri = parse_input([&] { return rep_from_json(S.G, rj, f); });
    Mat A;
    if (ri.A) {
      A = *ri.A;
    } else if (rj.value("regular", false)) {
      A = Mat(ri.rep.field(), S.G->order(), S.G->order());
      for (std::uint32_t g = 0; g < S.G->order(); ++g) A.at(S.apply(g), g) = ri.rep.field().one();
    } else {
      A = parse_input([&] { return extend_action(ri.rep, S).A; });
    }
    HeckeSpacePtr sp = HeckeSpace::make(S.G, K, ri.rep.field());
    DiagramReport d = parse_input([&] { return tate_hecke_diagram(S, sp, ri.rep, A); });
    rep.checks.push_back({"tate-hecke-diagram", d.pass,
                          {{"invariant_dim", d.invariant_dim}, {"t", dims(d.tate_dims[0], d.tate_dims[1])},
                           {"elements", d.elements_checked}, {"failures", d.failures}}});
  } else {
    throw UsageError("--check must be plain, brauer or diagram");
  }
}

// ---------------------------------------------------------------- excursion

void cmd_excursion(const Options& o, Report& rep) {
  json tj = load(rep, "target", o.target), gj = load(rep, "gamma", o.gamma);
  TargetPtr T = parse_input([&] { return target_from_json(tj); });
  GammaData Gm = parse_input([&] { return gamma_from_json(gj, *T); });
  std::optional<Field> f = field_flag(o);
  if (!f) f = Field::make(T->has_sigma() ? T->sigma_order() : 3);
  Rng rng(o.seed);
  if (o.check == "relations") {
    SuiteReport s = relation_suite(Gm, T, *f, o.instances, rng);
    for (const auto& l : s.lines)
      rep.checks.push_back({"relation." + l.id, l.informational || l.failures == 0,
                            {{"instances", l.instances}, {"failures", l.failures}, {"informational", l.informational}}});
  } else if (o.check == "bijection") {
    BijectionReport b = character_bijection_report(Gm, T, *f);
    rep.checks.push_back({"character-bijection", b.pass(),
                          {{"points", b.points}, {"characters", b.characters}, {"algebra_dim", b.algebra_dim},
                           {"conventions_agree", b.conventions_agree}}});
  } else if (o.check == "functoriality") {
    std::vector<std::pair<std::string, TargetHom>> homs;
    homs.emplace_back("identity", TargetHom::identity(T));
    const FiniteGroup& L = *T->group();
    for (auto g : T->ghat_generators()) {
      std::vector<std::uint32_t> map(L.order());
      for (std::uint32_t l = 0; l < L.order(); ++l) map[l] = L.conj(g, l);
      homs.emplace_back("conjugation by " + std::to_string(g), TargetHom::make(T, T, map));
    }
    if (tj.contains("base_change")) {
      const json& b = tj["base_change"];
      GroupPtr H = parse_input([&] { return group_from_json(b.at("H")).G; });
      std::vector<std::vector<std::uint32_t>> triv(T->quotient()->order(), std::vector<std::uint32_t>(H->order()));
      for (auto& row : triv)
        for (std::uint32_t h = 0; h < H->order(); ++h) row[h] = h;
      auto TH = ParamTarget::make(H, T->quotient(), triv);
      homs.emplace_back("phi_BC", TargetHom::base_change_diagonal(TH, T, b.at("p").get<std::uint32_t>()));
    }
    for (const auto& [name, phi] : homs) {
      std::size_t points = 0, failures = 0;
      for (std::size_t t = 0; t < o.instances; ++t) {
        const std::size_t n = 1 + rand_below(rng, 2);
        std::vector<std::uint32_t> gs(n);
        for (auto& g : gs) g = static_cast<std::uint32_t>(rand_below(rng, Gm.G->order()));
        for (Convention c : {Convention::LastIndex, Convention::Naive}) {
          PointCheck pc = pullback_check(phi, Gm, FirstGen{InvariantFunction::random(phi.dst, *f, n, rng), gs}, c);
          points += pc.points;
          failures += pc.failures;
        }
        PointCheck pc = pullback_check(phi, Gm, random_second_gen(Gm, phi.dst, *f, n, 4, rng));
        points += pc.points;
        failures += pc.failures;
      }
      rep.checks.push_back({"functoriality." + name, failures == 0, {{"points", points}, {"failures", failures}}});
    }
  } else if (o.check == "norm") {
    if (!T->has_sigma()) throw InputError("--check norm needs a target with sigma");
    if (f->characteristic() != T->sigma_order()) throw InputError("--field must have characteristic p");
    std::size_t points = 0, nf = 0, sf = 0;
    for (std::size_t t = 0; t < o.instances; ++t) {
      NormCheck nc = norm_identities(Gm, random_second_gen(Gm, T, *f, 1 + rand_below(rng, 2), 2, rng));
      points += nc.points;
      nf += nc.norm_failures;
      sf += nc.sum_failures;
    }
    rep.checks.push_back({"norm-identities", nf == 0 && sf == 0,
                          {{"points", points}, {"norm_failures", nf}, {"sum_failures", sf}}});
  } else {
    throw UsageError("--check must be relations, bijection, functoriality or norm");
  }
}

// ---------------------------------------------------------------- bc-torus

void cmd_bc_torus(const Options& o, Report& rep) {
  json j = load(rep, "input", o.input);
  TorusObject X = parse_input([&] { return torus_from_json(j); });
  if (X.rank % 2 == 0) throw InputError("bc-torus needs odd p");
  TorusObject B = bc_obj(X);
  std::map<long long, std::size_t> got;
  for (const auto& [l, m] : B.support) got[l[0]] = m;
  std::map<long long, std::size_t> want = res_bc_oracle(X);
  json labels = json::array();
  for (const auto& [l, m] : got) labels.push_back({{"label", l}, {"mult", m}});
  rep.checks.push_back({"bc-object", got == want, {{"bc", labels}, {"total", B.total()}}});
  std::optional<Field> f = field_flag(o);
  if (!f) f = Field::make(X.rank);
  if (f->characteristic() != X.rank) throw InputError("--field must have characteristic p");
  std::size_t failures = 0;
  for (std::uint32_t c = 0; c < f->order(); ++c) {
    Elem lam = f->from_code(c);
    failures += !(bc_mor(TorusMorphism::scalar(*f, X, lam)) == TorusMorphism::scalar(*f, B, lam));
  }
  rep.checks.push_back({"bc-scalars", failures == 0, {{"scalars", f->order()}, {"failures", failures}}});
}

// ---------------------------------------------------------------- linkage

void cmd_linkage(const Options& o, Report& rep) {
  json gj = load(rep, "group", o.group), rj = load(rep, "rep", o.rep);
  GroupInput gi = parse_input([&] { return group_from_json(gj); });
  std::optional<Field> f = field_flag(o);
  RepInput ri = parse_input([&] { return rep_from_json(gi.G, rj, f); });
  const std::uint32_t p = o.p ? o.p : ri.rep.field().characteristic();
  if (ri.rep.field().characteristic() != p) throw InputError("--p must be the field characteristic");
  LinkageReport L = parse_input([&] { return linkage_report(ri.rep, p); });
  rep.checks.push_back({"linkage", L.pass(),
                        {{"dim_pi", L.dim_pi}, {"dim_Pi", L.dim_Pi}, {"t0_dim", L.t0_dim}, {"t1_dim", L.t1_dim},
                         {"extension_is_rotation", L.extension_is_rotation}, {"t0_iso_twist", L.t0_iso_twist},
                         {"t0_iso_pi", L.t0_iso_pi}, {"t1_iso_twist_observed", L.t1_iso_twist},
                         {"iso", L.t0_iso_twist ? mat_to_json(L.iso) : json(nullptr)}}});
}

void cmd_selftest(const Options& o, Report& rep) {
  for (auto& c : run_selftest(o.seed)) rep.checks.push_back(std::move(c));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tate cohomology, Smith theory and base change checks"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "seed for randomized checks");
    sub->add_option("--report", o.report, "also write the report to this file");
    sub->add_flag("--timing", o.timing, "include wall time in the report");
  };
  CLI::App* tate = app.add_subcommand("tate", "Tate cohomology of a sigma-module or complex");
  tate->add_option("--module", o.module, "sigma-module JSON");
  tate->add_option("--input", o.input, "complex JSON");
  CLI::App* smith = app.add_subcommand("smith", "Smith localization for a simplicial complex");
  smith->add_option("--input", o.input, "complex JSON")->required();
  smith->add_option("--p", o.p, "order of the action");
  CLI::App* hecke = app.add_subcommand("hecke", "Hecke algebras and the Brauer restriction");
  hecke->add_option("--group", o.group, "group JSON with sigma")->required();
  hecke->add_option("--subgroup", o.subgroup, "1, G, H or comma-separated generators");
  hecke->add_option("--check", o.check, "plain|brauer|diagram")->required();
  hecke->add_option("--rep", o.rep, "representation JSON (diagram)");
  hecke->add_option("--field", o.field, "p or p,m");
  CLI::App* exc = app.add_subcommand("excursion", "excursion algebra checks");
  exc->add_option("--gamma", o.gamma, "Gamma JSON")->required();
  exc->add_option("--target", o.target, "target JSON")->required();
  exc->add_option("--check", o.check, "relations|bijection|functoriality|norm")->required();
  exc->add_option("--field", o.field, "p or p,m");
  exc->add_option("--instances", o.instances, "random instances per check");
  CLI::App* torus = app.add_subcommand("bc-torus", "base change for the torus case");
  torus->add_option("--input", o.input, "object JSON")->required();
  torus->add_option("--field", o.field, "p or p,m");
  CLI::App* link = app.add_subcommand("linkage", "Tate cohomology of a box power");
  link->add_option("--group", o.group, "group JSON")->required();
  link->add_option("--rep", o.rep, "representation JSON")->required();
  link->add_option("--p", o.p, "the prime p");
  link->add_option("--field", o.field, "p or p,m");
  CLI::App* self = app.add_subcommand("selftest", "run the acceptance battery");
  for (CLI::App* sub : {tate, smith, hecke, exc, torus, link, self}) add_common(sub);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Report rep;
  rep.command = sub->get_name();
  rep.inputs["args"] = args;
  rep.seed = o.seed;
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (sub == tate) {
      if (o.module.empty() == o.input.empty()) throw UsageError("tate needs exactly one of --module, --input");
      cmd_tate(o, rep);
    } else if (sub == smith) {
      cmd_smith(o, rep);
    } else if (sub == hecke) {
      cmd_hecke(o, rep);
    } else if (sub == exc) {
      cmd_excursion(o, rep);
    } else if (sub == torus) {
      cmd_bc_torus(o, rep);
    } else if (sub == link) {
      cmd_linkage(o, rep);
    } else {
      cmd_selftest(o, rep);
    }
    code = rep.pass() ? 0 : 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    rep.checks.clear();
    rep.checks.push_back({"input", false, {{"error", e.what()}}});
    if (e.byte()) rep.checks.back().values["byte"] = *e.byte();
    code = 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    rep.checks.clear();
    rep.checks.push_back({"input", false, {{"error", e.what()}}});
    code = 2;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    rep.checks.push_back({"error", false, {{"error", e.what()}}});
    code = 1;
  }
  if (o.timing)
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = rep.to_json().dump(2) + "\n";
  out << text;
  if (!o.report.empty()) {
    std::ofstream f(o.report, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.report << "\n";
      return 2;
    }
    f << text;
  }
  return code;
}

}  // namespace tatebc
