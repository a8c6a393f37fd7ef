// Modules over k[sigma]/(sigma^p - 1) in characteristic p.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tatebc/group.hpp"
#include "tatebc/matrix.hpp"

namespace tatebc {

class SigmaModule {
 public:
  SigmaModule() = default;
  /// Throws std::invalid_argument unless sigma is square with sigma^p = 1,
  /// p the characteristic of the field.
  explicit SigmaModule(Mat sigma);

  static SigmaModule zero(Field f);
  static SigmaModule trivial(Field f, std::size_t n = 1);
  /// J_i: one Jordan block of size i (1 <= i <= p) for sigma - 1.
  static SigmaModule jordan(Field f, std::size_t i);
  /// k[sigma] in the group basis 1, sigma, ..., sigma^{p-1}.
  static SigmaModule regular(Field f);

  const Field& field() const { return sigma_.field(); }
  std::uint32_t p() const { return field().characteristic(); }
  std::size_t dim() const { return sigma_.rows(); }
  const Mat& sigma() const { return sigma_; }
  /// 1 - sigma
  Mat one_minus_sigma() const;

 private:
  Mat sigma_;
};

/// Multiset of Jordan block sizes of sigma - 1, sorted ascending.
using JordanProfile = std::vector<std::size_t>;

/// N = 1 + sigma + ... + sigma^{p-1}.
Mat norm_operator(const SigmaModule& M);

/// Tate groups T^0 = ker(1 - sigma)/im N and T^1 = ker N/im(1 - sigma).
struct TateGroups {
  Subquotient t0, t1;
};
TateGroups tate_groups(const SigmaModule& M);
std::pair<std::size_t, std::size_t> tate_dims(const SigmaModule& M);

JordanProfile jordan_profile(const SigmaModule& M);
bool is_perfect(const SigmaModule& M);
bool tate_equivalent(const SigmaModule& a, const SigmaModule& b);

SigmaModule tensor(const SigmaModule& a, const SigmaModule& b);
SigmaModule direct_sum(const SigmaModule& a, const SigmaModule& b);
SigmaModule dual(const SigmaModule& a);

/// V^{(x)p} (dim V = d) with sigma moving factor i to position i+1.
SigmaModule tensor_induce(const Field& f, std::size_t d);
/// V (x) k[sigma], i.e. V + sigma V + ... + sigma^{p-1} V with block rotation.
SigmaModule induced(const Field& f, std::size_t d);

/// Permutation matrix on (k^d)^{(x)p} sending v_1 (x) ... (x) v_p to
/// v_p (x) v_1 (x) ... (x) v_{p-1}.
Mat tensor_rotation(const Field& f, std::size_t d, std::uint32_t p);

/// Every matrix entry raised to the p-th power.
GroupRep frobenius_twist_rep(const GroupRep& R);

}  // namespace tatebc
