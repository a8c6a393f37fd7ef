// Seeded random objects for property tests and the self-test battery.
#pragma once

#include <cstdint>
#include <random>

#include "tatebc/sigma_module.hpp"

namespace tatebc {

using Rng = std::mt19937_64;

std::uint64_t rand_below(Rng& rng, std::uint64_t n);
Elem random_elem(const Field& f, Rng& rng);
Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Mat random_invertible(const Field& f, std::size_t n, Rng& rng);

/// Direct sum of 0..max_blocks random Jordan blocks, in a random basis.
/// With free_only every block is J_p.
SigmaModule random_module(const Field& f, std::size_t max_blocks, Rng& rng, bool free_only = false);

/// Direct sum of the given Jordan blocks, in a random basis.
SigmaModule module_from_blocks(const Field& f, const std::vector<std::size_t>& blocks, Rng& rng);

}  // namespace tatebc
