#include "tatebc/random.hpp"

namespace tatebc {

std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}

Elem random_elem(const Field& f, Rng& rng) { return f.from_code(static_cast<std::uint32_t>(rand_below(rng, f.order()))); }

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = random_elem(f, rng);
  return m;
}

Mat random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

SigmaModule module_from_blocks(const Field& f, const std::vector<std::size_t>& blocks, Rng& rng) {
  SigmaModule m = SigmaModule::zero(f);
  for (auto b : blocks) m = direct_sum(m, SigmaModule::jordan(f, b));
  if (m.dim() == 0) return m;
  Mat P = random_invertible(f, m.dim(), rng);
  return SigmaModule(P * m.sigma() * inverse(P));
}

SigmaModule random_module(const Field& f, std::size_t max_blocks, Rng& rng, bool free_only) {
  const std::size_t p = f.characteristic();
  std::size_t k = rand_below(rng, max_blocks + 1);
  std::vector<std::size_t> blocks;
  for (std::size_t i = 0; i < k; ++i) blocks.push_back(free_only ? p : 1 + rand_below(rng, p));
  return module_from_blocks(f, blocks, rng);
}

}  // namespace tatebc
