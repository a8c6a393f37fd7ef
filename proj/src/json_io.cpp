#include "tatebc/json_io.hpp"

#include <fstream>
#include <sstream>

namespace tatebc {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::uint32_t as_u32(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint32_t>();
}

std::vector<std::uint32_t> as_u32_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::uint32_t> out;
  for (const auto& x : j) out.push_back(as_u32(x, what));
  return out;
}

std::uint32_t perm_order(const std::vector<std::uint32_t>& perm) {
  std::uint32_t k = 1;
  std::vector<std::uint32_t> cur = perm;
  auto is_id = [](const std::vector<std::uint32_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != i) return false;
    return true;
  };
  while (!is_id(cur) && k <= perm.size() * perm.size() + 1) {
    for (auto& x : cur) x = perm[x];
    ++k;
  }
  return k;
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError(source + ": malformed JSON at byte " + std::to_string(at) + ": " + e.what(), at);
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Field field_from_string(const std::string& s) {
  std::uint32_t p = 0, m = 1;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> p)) throw InputError("bad field \"" + s + "\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> m)) throw InputError("bad field \"" + s + "\"");
  }
  std::string rest;
  if (in >> rest) throw InputError("bad field \"" + s + "\"");
  return Field::make(p, m);
}

Field field_from_json(const json& j) {
  if (j.is_number_integer()) return Field::make(as_u32(j, "p"));
  if (j.is_array() && j.size() == 2) return Field::make(as_u32(j[0], "p"), as_u32(j[1], "m"));
  if (j.is_object()) return Field::make(as_u32(need(j, "p"), "p"), j.contains("m") ? as_u32(j["m"], "m") : 1);
  throw InputError("field must be p, [p, m] or {p, m}");
}

json field_to_json(const Field& f) { return json::array({f.characteristic(), f.degree()}); }

Elem scalar_from_json(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_array()) {
    std::vector<long long> c;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InputError("scalar coefficients must be integers");
      c.push_back(x.get<long long>());
    }
    if (c.size() > f.degree()) throw InputError("scalar has too many coefficients");
    return f.from_coeffs(c);
  }
  throw InputError("scalar must be an integer or a coefficient list");
}

json scalar_to_json(const Field& f, Elem a) {
  if (f.degree() == 1) return a.v;
  return f.coeffs(a);
}

Mat mat_from_json(const Field& f, const json& j) {
  const std::uint32_t r = as_u32(need(j, "rows"), "rows"), c = as_u32(need(j, "cols"), "cols");
  const json& e = need(j, "entries");
  if (!e.is_array()) throw InputError("entries must be an array");
  std::vector<const json*> flat;
  if (e.size() != std::size_t(r) * c && e.size() == r) {
    for (const auto& row : e) {
      if (!row.is_array() || row.size() != c) throw InputError("ragged entries");
      for (const auto& x : row) flat.push_back(&x);
    }
  } else {
    for (const auto& x : e) flat.push_back(&x);
  }
  if (flat.size() != std::size_t(r) * c) throw InputError("entries has the wrong length");
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < c; ++k) m.at(i, k) = scalar_from_json(f, *flat[i * c + k]);
  return m;
}

json mat_to_json(const Mat& m) {
  json e = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) e.push_back(scalar_to_json(m.field(), m(i, k)));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

SigmaModule module_from_json(const json& j) {
  Field f = Field::make(as_u32(need(j, "p"), "p"), j.contains("m") ? as_u32(j["m"], "m") : 1);
  Mat s = mat_from_json(f, need(j, "sigma"));
  if (j.contains("dim") && as_u32(j["dim"], "dim") != s.rows()) throw InputError("dim does not match sigma");
  return SigmaModule(s);
}

json module_to_json(const SigmaModule& M) {
  return {{"p", M.p()}, {"m", M.field().degree()}, {"dim", M.dim()}, {"sigma", mat_to_json(M.sigma())}};
}

SigmaChainComplex complex_from_json(const json& j) {
  const json& deg = need(j, "degrees");
  if (!deg.is_array() || deg.size() != 2 || !deg[0].is_number_integer() || !deg[1].is_number_integer())
    throw InputError("degrees must be [a, b]");
  const int a = deg[0].get<int>(), b = deg[1].get<int>();
  if (b < a) throw InputError("degrees must satisfy a <= b");
  const json& mods = need(j, "modules");
  const json& diffs = need(j, "differentials");
  if (!mods.is_array() || mods.size() != std::size_t(b - a + 1)) throw InputError("modules must have b - a + 1 entries");
  if (!diffs.is_array() || diffs.size() != std::size_t(b - a)) throw InputError("differentials must have b - a entries");
  std::vector<SigmaModule> ms;
  for (const auto& m : mods) ms.push_back(module_from_json(m));
  std::vector<Mat> ds;
  for (const auto& d : diffs) ds.push_back(mat_from_json(ms.front().field(), d));
  return SigmaChainComplex(a, std::move(ms), std::move(ds));
}

json complex_to_json(const SigmaChainComplex& C) {
  json mods = json::array(), diffs = json::array();
  for (int j = C.lo(); j <= C.hi(); ++j) {
    mods.push_back(module_to_json(C.module(j)));
    if (j < C.hi()) diffs.push_back(mat_to_json(C.diff(j)));
  }
  return {{"degrees", {C.lo(), C.hi()}}, {"modules", mods}, {"differentials", diffs}};
}

SigmaComplex simplicial_from_json(const json& j, std::optional<std::uint32_t> p) {
  std::vector<std::string> labels;
  for (const auto& v : need(j, "vertices")) {
    if (!v.is_string()) throw InputError("vertices must be strings");
    labels.push_back(v.get<std::string>());
  }
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : need(j, "facets")) {
    std::vector<std::string> s;
    for (const auto& v : f) {
      if (!v.is_string()) throw InputError("facet entries must be strings");
      s.push_back(v.get<std::string>());
    }
    facets.push_back(std::move(s));
  }
  std::map<std::string, std::string> perm;
  if (j.contains("perm")) {
    if (!j["perm"].is_object()) throw InputError("perm must be an object");
    for (const auto& [k, v] : j["perm"].items()) {
      if (!v.is_string()) throw InputError("perm values must be strings");
      perm[k] = v.get<std::string>();
    }
  }
  if (j.contains("p")) p = as_u32(j["p"], "p");
  if (!p) {
    std::map<std::string, std::uint32_t> idx;
    for (std::uint32_t i = 0; i < labels.size(); ++i) idx[labels[i]] = i;
    std::vector<std::uint32_t> pv(labels.size());
    for (std::uint32_t i = 0; i < labels.size(); ++i) {
      auto it = perm.find(labels[i]);
      if (it == perm.end()) {
        pv[i] = i;
        continue;
      }
      auto jt = idx.find(it->second);
      if (jt == idx.end()) throw InputError("perm names an unknown vertex " + it->second);
      pv[i] = jt->second;
    }
    p = perm_order(pv);
    if (*p == 1) throw InputError("identity perm: give p explicitly");
  }
  return SigmaComplex::from_labels(labels, facets, perm, *p);
}

GroupInput group_from_json(const json& j) {
  if (!j.is_object()) throw InputError("group must be an object");
  GroupInput out;
  if (j.contains("mul")) {
    std::vector<std::vector<std::uint32_t>> t;
    for (const auto& row : j["mul"]) t.push_back(as_u32_list(row, "mul"));
    if (j.contains("order") && as_u32(j["order"], "order") != t.size()) throw InputError("order does not match mul");
    out.G = FiniteGroup::from_table(t);
  } else if (j.contains("perm_gens")) {
    std::vector<std::vector<std::uint32_t>> gens;
    for (const auto& g : j["perm_gens"]) gens.push_back(as_u32_list(g, "perm_gens"));
    out.G = FiniteGroup::from_permutations(gens);
  } else if (j.contains("cyclic")) {
    out.G = FiniteGroup::cyclic(as_u32(j["cyclic"], "cyclic"));
  } else if (j.contains("symmetric")) {
    out.G = FiniteGroup::symmetric(as_u32(j["symmetric"], "symmetric"));
  } else if (j.contains("power")) {
    GroupInput base = group_from_json(j["power"]);
    const std::uint32_t k = as_u32(need(j, "k"), "k");
    if (j.contains("sigma") && j["sigma"] == "shift") {
      out.S = SigmaGroup::cyclic_shift(base.G, k);
      out.G = out.S->G;
      return out;
    }
    out.G = FiniteGroup::power(base.G, k);
  } else {
    throw InputError("group needs one of mul, perm_gens, cyclic, symmetric, power");
  }
  if (j.contains("sigma")) {
    if (j["sigma"].is_string()) throw InputError("sigma \"shift\" needs a power group");
    auto sigma = as_u32_list(j["sigma"], "sigma");
    const std::uint32_t p = j.contains("p") ? as_u32(j["p"], "p") : perm_order(sigma);
    out.S = SigmaGroup::make(out.G, std::move(sigma), p);
  }
  return out;
}

RepInput rep_from_json(const GroupPtr& G, const json& j, std::optional<Field> f) {
  if (!j.is_object()) throw InputError("rep must be an object");
  if (j.contains("field")) f = field_from_json(j["field"]);
  if (!f) throw InputError("rep needs a field");
  RepInput out;
  if (j.value("regular", false)) {
    out.rep = GroupRep::regular(G, *f);
  } else if (j.contains("trivial")) {
    out.rep = GroupRep::trivial(G, *f, as_u32(j["trivial"], "trivial"));
  } else {
    std::vector<std::uint32_t> gens = j.contains("generators") ? as_u32_list(j["generators"], "generators") : G->generators();
    const json& imgs = need(j, "images");
    if (!imgs.is_array() || imgs.size() != gens.size()) throw InputError("images must match generators");
    std::vector<Mat> mats;
    for (const auto& m : imgs) mats.push_back(mat_from_json(*f, m));
    for (auto g : gens)
      if (g >= G->order()) throw InputError("generator out of range");
    out.rep = GroupRep::from_generators(G, gens, mats);
  }
  if (j.contains("A")) out.A = mat_from_json(*f, j["A"]);
  return out;
}

TargetPtr target_from_json(const json& j) {
  if (!j.is_object()) throw InputError("target must be an object");
  if (j.contains("base_change")) {
    const json& b = j["base_change"];
    GroupPtr H = group_from_json(need(b, "H")).G, Q = group_from_json(need(b, "Q")).G;
    return ParamTarget::base_change(H, Q, as_u32(need(b, "p"), "p"), as_u32_list(need(b, "shift"), "shift"));
  }
  GroupPtr Ghat = group_from_json(need(j, "Ghat")).G, Q = group_from_json(need(j, "Q")).G;
  std::vector<std::vector<std::uint32_t>> action;
  if (j.contains("action")) {
    for (const auto& a : j["action"]) action.push_back(as_u32_list(a, "action"));
  } else {
    std::vector<std::uint32_t> id(Ghat->order());
    for (std::uint32_t g = 0; g < Ghat->order(); ++g) id[g] = g;
    action.assign(Q->order(), id);
  }
  TargetPtr T = ParamTarget::make(Ghat, Q, std::move(action));
  if (j.contains("sigma")) {
    auto sigma = as_u32_list(j["sigma"], "sigma");
    const std::uint32_t p = j.contains("p") ? as_u32(j["p"], "p") : perm_order(sigma);
    T = T->with_sigma(std::move(sigma), p);
  }
  return T;
}

GammaData gamma_from_json(const json& j, const ParamTarget& T) {
  GroupPtr G = group_from_json(need(j, "group")).G;
  if (!j.contains("to_Q")) {
    if (T.quotient()->order() != 1) throw InputError("gamma needs to_Q for a nontrivial quotient");
    return GammaData::over_trivial(G);
  }
  return GammaData::make(G, as_u32_list(j["to_Q"], "to_Q"), T.quotient());
}

TorusObject torus_from_json(const json& j) {
  const std::uint32_t p = as_u32(need(j, "p"), "p");
  std::vector<std::pair<Label, std::size_t>> entries;
  for (const auto& e : need(j, "support")) {
    Label l;
    for (const auto& x : need(e, "label")) {
      if (!x.is_number_integer()) throw InputError("labels must be integers");
      l.push_back(x.get<long long>());
    }
    entries.emplace_back(std::move(l), as_u32(need(e, "mult"), "mult"));
  }
  return TorusObject::make(p, entries);
}

json torus_to_json(const TorusObject& X) {
  json s = json::array();
  for (const auto& [l, m] : X.support) s.push_back({{"label", l}, {"mult", m}});
  return {{"p", X.rank}, {"support", s}};
}

}  // namespace tatebc
