// JSON readers and writers for the command-line inputs and reports.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "tatebc/excursion.hpp"
#include "tatebc/group.hpp"
#include "tatebc/smith.hpp"
#include "tatebc/tate_complex.hpp"
#include "tatebc/torus.hpp"

namespace tatebc {

using json = nlohmann::json;

/// Malformed or ill-typed input. `byte` is set for syntax errors.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::optional<std::size_t> byte = std::nullopt)
      : std::runtime_error(what), byte_(byte) {}
  std::optional<std::size_t> byte() const { return byte_; }

 private:
  std::optional<std::size_t> byte_;
};

json parse_json(const std::string& text, const std::string& source = "input");
json load_json_file(const std::string& path);

/// "p" or "p,m".
Field field_from_string(const std::string& s);
/// p, [p, m] or {p, m}.
Field field_from_json(const json& j);
json field_to_json(const Field& f);

/// An integer (reduced mod p) or a little-endian coefficient list.
Elem scalar_from_json(const Field& f, const json& j);
/// An integer for prime fields, else the coefficient list.
json scalar_to_json(const Field& f, Elem a);

/// {rows, cols, entries}; entries is row-major, flat or nested.
Mat mat_from_json(const Field& f, const json& j);
json mat_to_json(const Mat& m);

/// {p, m, dim, sigma}
SigmaModule module_from_json(const json& j);
json module_to_json(const SigmaModule& M);

/// {degrees: [a, b], modules: [...], differentials: [...]}
SigmaChainComplex complex_from_json(const json& j);
json complex_to_json(const SigmaChainComplex& C);

/// {vertices, facets, perm, p?}; p falls back to `p`, then to the order of perm.
SigmaComplex simplicial_from_json(const json& j, std::optional<std::uint32_t> p = std::nullopt);

/// {order, mul}, {perm_gens}, {cyclic: n}, {symmetric: n} or {power: G, k};
/// optional sigma: element map (with p) or "shift" for a power group.
struct GroupInput {
  GroupPtr G;
  std::optional<SigmaGroup> S;
};
GroupInput group_from_json(const json& j);

/// {field?, images: [Mat...], generators?: [...]} or {field?, regular: true}
/// or {field?, trivial: dim}. An optional "A" is returned separately.
struct RepInput {
  GroupRep rep;
  std::optional<Mat> A;
};
RepInput rep_from_json(const GroupPtr& G, const json& j, std::optional<Field> f = std::nullopt);

/// {Ghat, Q, action, sigma?, p?} or {base_change: {H, Q, p, shift}}.
TargetPtr target_from_json(const json& j);
/// {group, to_Q?}; without to_Q the quotient must be trivial.
GammaData gamma_from_json(const json& j, const ParamTarget& T);

/// {p, support: [{label, mult}...]}
TorusObject torus_from_json(const json& j);
json torus_to_json(const TorusObject& X);

}  // namespace tatebc
