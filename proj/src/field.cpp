#include "tatebc/field.hpp"

#include <stdexcept>

namespace tatebc {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over F_p

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(r), mod, p);
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of idx, constant term as the most significant digit (lexicographic order).
Poly monic_from_index(std::uint64_t idx, std::uint32_t d, std::uint32_t p) {
  Poly f(d + 1, 0);
  f[d] = 1;
  for (std::uint32_t i = d; i-- > 0;) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  // f[0] is now the most significant digit
  return f;
}

bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = monic_from_index(idx, d, p);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t r = 0, place = 1;
  for (std::uint32_t c : a) {
    r += c * place;
    place *= p;
  }
  return r;
}

Poly decode(std::uint32_t code, std::uint32_t p, std::uint32_t m) {
  Poly a(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    a[i] = code % p;
    code /= p;
  }
  trim(a);
  return a;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("field_make: " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("field_make: extension degree must be positive");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q64 *= p;
    if (q64 > (1u << 16)) throw std::invalid_argument("field_make: field order above 65536 not supported");
  }
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = t->q;

  if (m == 1) {
    t->modulus = {0, 1};
  } else {
    std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly f = monic_from_index(idx, m, p);
      if (irreducible(f, p)) {
        t->modulus = f;
        break;
      }
    }
    // exp/log tables from the first primitive element in code order
    for (std::uint32_t g = 2; g < q; ++g) {
      Poly gp = decode(g, p, m);
      Poly cur{1};
      std::vector<std::uint32_t> ex(q - 1);
      bool prim = true;
      for (std::uint32_t k = 0; k < q - 1; ++k) {
        std::uint32_t c = encode(cur, p);
        if (k > 0 && c == 1) {
          prim = false;
          break;
        }
        ex[k] = c;
        cur = poly_mulmod(cur, gp, t->modulus, p);
      }
      if (!prim) continue;
      t->exp = std::move(ex);
      t->log.assign(q, 0);
      for (std::uint32_t k = 0; k < q - 1; ++k) t->log[t->exp[k]] = k;
      break;
    }
    t->negt.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      Poly c = decode(a, p, m);
      for (auto& x : c) x = (p - x) % p;
      t->negt[a] = encode(c, p);
    }
    if (q <= 1024) {
      t->addt.resize(std::size_t{q} * q);
      for (std::uint32_t a = 0; a < q; ++a)
        for (std::uint32_t b = 0; b < q; ++b) {
          std::uint32_t r = 0, place = 1, x = a, y = b;
          for (std::uint32_t i = 0; i < m; ++i) {
            r += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
          }
          t->addt[std::size_t{a} * q + b] = r;
        }
    }
  }

  Field f;
  f.t_ = t;
  // Frobenius and inverse tables, built through the public arithmetic.
  t->frob.resize(q);
  t->frob_inv.resize(q);
  t->invt.assign(q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    Elem x{a};
    Elem y = x;
    Elem acc{1};
    for (std::uint32_t i = 0; i < p; ++i) acc = f.mul(acc, y);
    t->frob[a] = acc.v;
  }
  for (std::uint32_t a = 0; a < q; ++a) t->frob_inv[t->frob[a]] = a;
  for (std::uint32_t a = 1; a < q; ++a) {
    if (m == 1) {
      std::uint64_t r = 1, b = a, e = p - 2;
      while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      t->invt[a] = static_cast<std::uint32_t>(r);
    } else {
      t->invt[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];
    }
  }
  return f;
}

const std::vector<std::uint32_t>& Field::modulus() const { return t_->modulus; }

std::string Field::name() const {
  if (t_->m == 1) return "F_" + std::to_string(t_->p);
  return "F_" + std::to_string(t_->p) + "^" + std::to_string(t_->m);
}

Elem Field::from_int(long long n) const {
  long long p = t_->p;
  long long r = n % p;
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(const std::vector<long long>& c) const {
  // reduce modulo the modulus when more than m coefficients are given
  const std::uint32_t p = t_->p;
  Poly a;
  for (long long x : c) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += p;
    a.push_back(static_cast<std::uint32_t>(r));
  }
  a = poly_mod(std::move(a), t_->modulus, p);
  return {encode(a, p)};
}

Elem Field::from_code(std::uint32_t code) const {
  if (code >= t_->q) throw std::out_of_range("field element code out of range");
  return {code};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(t_->m, 0);
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < t_->m; ++i) {
    c[i] = x % t_->p;
    x /= t_->p;
  }
  return c;
}

Elem Field::gen() const { return t_->m == 1 ? Elem{0} : Elem{t_->p}; }

Elem Field::inv(Elem a) const {
  if (a.v == 0) throw std::domain_error("division by zero in " + name());
  return {t_->invt[a.v]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::frobenius(Elem a) const { return {t_->frob[a.v]}; }
Elem Field::frobenius_inv(Elem a) const { return {t_->frob_inv[a.v]}; }

bool operator==(const Field& a, const Field& b) {
  if (a.t_ == b.t_) return true;
  if (!a.t_ || !b.t_) return false;
  return a.t_->p == b.t_->p && a.t_->m == b.t_->m;
}

}  // namespace tatebc
