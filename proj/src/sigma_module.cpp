#include "tatebc/sigma_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace tatebc {

SigmaModule::SigmaModule(Mat sigma) : sigma_(std::move(sigma)) {
  if (!sigma_.square()) throw std::invalid_argument("sigma module: sigma must be square");
  if (!sigma_.field().valid()) throw std::invalid_argument("sigma module: no field");
  if (!sigma_.pow(sigma_.field().characteristic()).is_identity())
    throw std::invalid_argument("sigma module: sigma^p is not the identity");
}

SigmaModule SigmaModule::zero(Field f) { return SigmaModule(Mat(std::move(f), 0, 0)); }

SigmaModule SigmaModule::trivial(Field f, std::size_t n) { return SigmaModule(Mat::identity(std::move(f), n)); }

SigmaModule SigmaModule::jordan(Field f, std::size_t i) {
  if (i == 0 || i > f.characteristic()) throw std::invalid_argument("jordan block size must lie in [1, p]");
  Mat s = Mat::identity(f, i);
  for (std::size_t r = 0; r + 1 < i; ++r) s.at(r, r + 1) = f.one();
  return SigmaModule(std::move(s));
}

SigmaModule SigmaModule::regular(Field f) {
  const std::size_t p = f.characteristic();
  Mat s(f, p, p);
  for (std::size_t i = 0; i < p; ++i) s.at((i + 1) % p, i) = f.one();
  return SigmaModule(std::move(s));
}

Mat SigmaModule::one_minus_sigma() const { return Mat::identity(field(), dim()) - sigma_; }

Mat norm_operator(const SigmaModule& M) {
  Mat acc(M.field(), M.dim(), M.dim());
  Mat pw = Mat::identity(M.field(), M.dim());
  for (std::uint32_t i = 0; i < M.p(); ++i) {
    acc = acc + pw;
    pw = pw * M.sigma();
  }
  return acc;
}

TateGroups tate_groups(const SigmaModule& M) {
  Mat n = norm_operator(M), d = M.one_minus_sigma();
  return {Subquotient(kernel(d), image(n)), Subquotient(kernel(n), image(d))};
}

std::pair<std::size_t, std::size_t> tate_dims(const SigmaModule& M) {
  TateGroups t = tate_groups(M);
  return {t.t0.dim(), t.t1.dim()};
}

JordanProfile jordan_profile(const SigmaModule& M) {
  const std::uint32_t p = M.p();
  Mat t = M.sigma() - Mat::identity(M.field(), M.dim());
  // r[i] = rank (sigma - 1)^i
  std::vector<std::size_t> r{M.dim()};
  Mat pw = Mat::identity(M.field(), M.dim());
  for (std::uint32_t i = 1; i <= p + 1; ++i) {
    pw = pw * t;
    r.push_back(rank(pw));
  }
  JordanProfile prof;
  for (std::uint32_t i = 1; i <= p; ++i) {
    std::size_t at_least_i = r[i - 1] - r[i];
    std::size_t at_least_next = r[i] - r[i + 1];
    for (std::size_t c = 0; c < at_least_i - at_least_next; ++c) prof.push_back(i);
  }
  return prof;
}

bool is_perfect(const SigmaModule& M) {
  for (auto b : jordan_profile(M))
    if (b != M.p()) return false;
  return true;
}

bool tate_equivalent(const SigmaModule& a, const SigmaModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tate_equivalent: field mismatch");
  auto strip = [&](JordanProfile j) {
    j.erase(std::remove(j.begin(), j.end(), std::size_t{a.p()}), j.end());
    return j;
  };
  return strip(jordan_profile(a)) == strip(jordan_profile(b));
}

SigmaModule tensor(const SigmaModule& a, const SigmaModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("tensor: field mismatch");
  return SigmaModule(a.sigma().kron(b.sigma()));
}

SigmaModule direct_sum(const SigmaModule& a, const SigmaModule& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct_sum: field mismatch");
  return SigmaModule(block_diag(a.sigma(), b.sigma()));
}

SigmaModule dual(const SigmaModule& a) { return SigmaModule(a.sigma().pow(a.p() - 1).transpose()); }

Mat tensor_rotation(const Field& f, std::size_t d, std::uint32_t p) {
  std::size_t n = 1;
  for (std::uint32_t i = 0; i < p; ++i) n *= d;
  Mat s(f, n, n);
  if (n == 0) return s;
  std::vector<std::size_t> digits(p), rot(p);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t x = idx;
    for (std::uint32_t i = p; i-- > 0;) {
      digits[i] = x % d;
      x /= d;
    }
    for (std::uint32_t i = 0; i < p; ++i) rot[(i + 1) % p] = digits[i];
    std::size_t out = 0;
    for (std::uint32_t i = 0; i < p; ++i) out = out * d + rot[i];
    s.at(out, idx) = f.one();
  }
  return s;
}

SigmaModule tensor_induce(const Field& f, std::size_t d) { return SigmaModule(tensor_rotation(f, d, f.characteristic())); }

SigmaModule induced(const Field& f, std::size_t d) {
  return SigmaModule(SigmaModule::regular(f).sigma().kron(Mat::identity(f, d)));
}

GroupRep frobenius_twist_rep(const GroupRep& R) {
  return GroupRep::from_function(R.group(), R.field(), R.dim(),
                                 [&](std::uint32_t g) { return R(g).map_entries(&Field::frobenius); });
}

}  // namespace tatebc
