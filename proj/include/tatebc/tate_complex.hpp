// Bounded complexes of sigma-modules and their Tate hypercohomology.
//
// The Tate double complex has column j equal to C^j, horizontal maps d, and
// vertical maps from row r to row r+1 equal to 1 - sigma for even r and N
// for odd r, multiplied by (-1)^j. Total degree of (r, j) is r + j, so for a
// module in degree 0 the row-0 cohomology is ker(1 - sigma)/im N = T^0.
#pragma once

#include <string>
#include <vector>

#include "tatebc/random.hpp"
#include "tatebc/sigma_module.hpp"

namespace tatebc {

class SigmaChainComplex {
 public:
  SigmaChainComplex() = default;
  /// modules[k] sits in degree lo + k; diffs[k] : C^{lo+k} -> C^{lo+k+1}.
  /// Checks d o d = 0 and d sigma = sigma d.
  SigmaChainComplex(int lo, std::vector<SigmaModule> modules, std::vector<Mat> diffs);

  static SigmaChainComplex single(const SigmaModule& M, int degree = 0);

  const Field& field() const { return modules_.front().field(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(modules_.size()) - 1; }
  /// Zero module outside [lo, hi].
  SigmaModule module(int j) const;
  std::size_t dim(int j) const;
  /// d^j : C^j -> C^{j+1}, a zero matrix of the right shape outside the range.
  Mat diff(int j) const;

  /// (C[k])^j = C^{j+k} with differential (-1)^k d.
  SigmaChainComplex shifted(int k = 1) const;
  /// Same complex with zero modules added so that it spans [lo, hi].
  SigmaChainComplex padded(int lo, int hi) const;
  bool trivial_action() const;
  bool zero_differential() const;

 private:
  int lo_ = 0;
  std::vector<SigmaModule> modules_;
  std::vector<Mat> diffs_;
};

/// H^j with the induced sigma-action.
SigmaModule cohomology(const SigmaChainComplex& C, int j);
Subquotient cohomology_space(const SigmaChainComplex& C, int j);

/// Rows [row_lo, row_hi] of the double complex kept in the truncation.
struct TateWindow {
  int row_lo = 0, row_hi = 0;
  int width() const { return row_hi - row_lo + 1; }
};

/// Totalization of the row-truncated double complex over a column range.
class TotalComplex {
 public:
  TotalComplex(const SigmaChainComplex& C, TateWindow w);
  struct Block {
    int row, col;
    std::size_t offset, dim;
  };
  std::vector<Block> blocks(int n) const;
  std::size_t dim(int n) const;
  /// D^n : Tot^n -> Tot^{n+1}.
  Mat differential(int n) const;
  /// Block-diagonal map induced by degreewise maps (maps[j - lo] : C^j -> C'^j)
  /// into the totalization of a complex with the same column range and window.
  Mat chain_map(int n, const std::vector<Mat>& maps, const TotalComplex& target) const;
  Subquotient cohomology(int n) const;
  const TateWindow& window() const { return w_; }

 private:
  SigmaChainComplex C_;
  TateWindow w_;
  std::vector<Mat> vert_even_, vert_odd_;  // 1 - sigma and N per column
};

struct TateResult {
  int degree = 0;
  std::size_t dim = 0;
  Subquotient group;  // inside Tot^degree
  TateWindow window;
  Mat d_in, d_out;    // D^{degree-1}, D^{degree}
  bool stable = false;
};

/// Window of width 2 (b - a + 3) centred on the rows that meet total degrees
/// i-1, i, i+1.
TateWindow default_window(const SigmaChainComplex& C, int i);
/// T^i(C); throws std::logic_error if widening the window by 2 changes the answer.
TateResult tate_hyper(const SigmaChainComplex& C, int i);
std::size_t tate_dim(const SigmaChainComplex& C, int i);

/// 0 -> A -f-> B -g-> C -> 0, degreewise, over a common degree range.
struct ShortExactSequence {
  SigmaChainComplex A, B, C;
  std::vector<Mat> f, g;  // indexed by degree - lo
};

struct LesNode {
  std::string name;  // e.g. "T0(B)"
  std::size_t dim = 0;
  bool exact = false;
};

struct LesReport {
  std::vector<LesNode> nodes;
  std::vector<std::size_t> connecting_ranks;  // delta^{-1}, delta^0, delta^1
  bool exact = false;
};

/// Throws std::invalid_argument if the input is not a short exact sequence
/// of complexes of sigma-modules.
LesReport les_check(const ShortExactSequence& ses);

struct SpectralReport {
  std::size_t t[2] = {0, 0};      // dim T^0, T^1
  std::size_t bound[2] = {0, 0};  // sum_j dim T^{n-j}(H^j)
  std::vector<std::pair<int, std::pair<std::size_t, std::size_t>>> e2;  // j -> T^0(H^j), T^1(H^j)
  bool zero_differential = false;
  bool pass = false;
};
SpectralReport tate_ss(const SigmaChainComplex& C);

struct KunnethReport {
  std::size_t t[2] = {0, 0};
  std::size_t sum_h = 0;
  bool pass = false;
};
/// Throws std::invalid_argument unless sigma acts trivially in every degree.
KunnethReport trivial_action_factor(const SigmaChainComplex& C);

struct ComplexOptions {
  int lo = 0;
  std::size_t length = 3;      // number of degrees
  std::size_t max_blocks = 3;  // per degree
  bool free_only = false;
  bool trivial_action = false;
  bool zero_differential = false;
};
SigmaChainComplex random_complex(const Field& f, const ComplexOptions& opt, Rng& rng);
/// A non-split short exact sequence built from the subcomplex generated by
/// random vectors, or the split sequence A -> A + C -> C.
ShortExactSequence random_ses(const Field& f, const ComplexOptions& opt, bool split, Rng& rng);

}  // namespace tatebc
