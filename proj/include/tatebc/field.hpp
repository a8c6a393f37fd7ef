// Finite fields F_{p^m}.
//
// Elements are stored as their coefficient vector packed in base p
// (code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}), so 0 and 1 have codes 0 and 1
// and the prime subfield is the range [0, p).
#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tatebc {

struct Elem {
  std::uint32_t v = 0;
  friend bool operator==(Elem, Elem) = default;
  friend auto operator<=>(Elem, Elem) = default;
};

namespace detail {
struct FieldTables;
}

class Field {
 public:
  Field() = default;

  /// F_{p^m} with the lexicographically smallest monic irreducible modulus
  /// (coefficient lists compared little-endian, constant term first).
  static Field make(std::uint32_t p, std::uint32_t m = 1);

  bool valid() const { return static_cast<bool>(t_); }
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  /// Little-endian coefficients of the modulus, length m + 1, monic.
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(long long n) const;
  Elem from_coeffs(const std::vector<long long>& c) const;
  Elem from_code(std::uint32_t code) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  /// The element x (generator of the extension); equals 0 when m = 1.
  Elem gen() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const;
  Elem frobenius_inv(Elem a) const;
  bool in_prime_field(Elem a) const { return a.v < characteristic(); }

  friend bool operator==(const Field& a, const Field& b);

 private:
  std::shared_ptr<const detail::FieldTables> t_;
  const detail::FieldTables& tab() const;
};

namespace detail {
struct FieldTables {
  std::uint32_t p = 0, m = 0, q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> exp, log;  // only for m > 1
  std::vector<std::uint32_t> addt;      // q*q table when small, m > 1
  std::vector<std::uint32_t> negt, frob, frob_inv, invt;
};
}  // namespace detail

inline const detail::FieldTables& Field::tab() const { return *t_; }
inline std::uint32_t Field::characteristic() const { return t_->p; }
inline std::uint32_t Field::degree() const { return t_->m; }
inline std::uint32_t Field::order() const { return t_->q; }

inline Elem Field::add(Elem a, Elem b) const {
  const auto& t = *t_;
  if (t.m == 1) {
    std::uint32_t s = a.v + b.v;
    return {s >= t.p ? s - t.p : s};
  }
  if (!t.addt.empty()) return {t.addt[a.v * t.q + b.v]};
  std::uint32_t r = 0, place = 1, x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < t.m; ++i) {
    r += ((x % t.p + y % t.p) % t.p) * place;
    x /= t.p;
    y /= t.p;
    place *= t.p;
  }
  return {r};
}

inline Elem Field::neg(Elem a) const {
  const auto& t = *t_;
  if (t.m == 1) return {a.v == 0 ? 0 : t.p - a.v};
  return {t.negt[a.v]};
}

inline Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

inline Elem Field::mul(Elem a, Elem b) const {
  const auto& t = *t_;
  if (t.m == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.v} * b.v) % t.p)};
  if (a.v == 0 || b.v == 0) return {0};
  std::uint32_t s = t.log[a.v] + t.log[b.v];
  if (s >= t.q - 1) s -= t.q - 1;
  return {t.exp[s]};
}

}  // namespace tatebc
