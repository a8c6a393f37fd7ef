// Dense matrices over F_{p^m} and exact Gauss-Jordan linear algebra.
//
// Vectors are columns: a matrix M acts by v -> M v. Subspaces are given by a
// matrix whose rows are a basis (kept in reduced echelon form where stated).
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tatebc/field.hpp"

namespace tatebc {

using Vec = std::vector<Elem>;

class Mat {
 public:
  Mat() = default;
  Mat(Field f, std::size_t rows, std::size_t cols);

  static Mat identity(Field f, std::size_t n);
  static Mat from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& v);
  static Mat from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows);
  static Mat from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols);

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Elem* row_ptr(std::size_t i) const { return a_.data() + i * c_; }
  Elem* row_ptr(std::size_t i) { return a_.data() + i * c_; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(Elem s) const;
  Mat pow(std::uint64_t e) const;
  Mat kron(const Mat& o) const;
  Mat map_entries(Elem (Field::*fn)(Elem) const) const;
  Vec apply(const Vec& v) const;
  /// Row vector times matrix: w^T M.
  Vec apply_left(const Vec& w) const;
  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  bool is_zero() const;
  bool is_identity() const;
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elem> a_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);
Mat inverse(const Mat& m);  // throws std::domain_error when singular

Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_scale(const Field& f, Elem s, const Vec& a);
bool vec_is_zero(const Vec& a);

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis (rows, reduced echelon) of {v : M v = 0}.
Mat kernel(const Mat& m);
/// Basis (rows, reduced echelon) of the column space of M.
Mat image(const Mat& m);
/// Reduced echelon basis of the row space.
Mat row_space(const Mat& m);
/// Some x with M x = b (free variables set to zero), or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);
/// Is v in the span of the rows of basis?
bool in_span(const Mat& basis, const Vec& v);

/// Expresses vectors in terms of a fixed list of linearly independent rows.
class Decomposer {
 public:
  Decomposer() = default;
  explicit Decomposer(const Mat& independent_rows);
  std::size_t size() const { return k_; }
  /// Coefficients c with v = sum c_i row_i, or nullopt when v is outside the span.
  std::optional<Vec> coeffs(const Vec& v) const;

 private:
  Field f_;
  std::size_t n_ = 0, k_ = 0;
  Mat ech_, trans_;
  std::vector<std::size_t> piv_;
};

/// The quotient span(U) / span(W) with chosen representatives.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const Mat& U, const Mat& W);

  std::size_t dim() const { return reps_.rows(); }
  std::size_t ambient() const { return n_; }
  const Mat& reps() const { return reps_; }
  const Mat& sub_basis() const { return w_; }
  /// Coordinates of the class of v (v must lie in U), nullopt otherwise.
  std::optional<Vec> coords(const Vec& v) const;
  Vec coords_checked(const Vec& v) const;
  /// Is v in W?
  bool is_trivial(const Vec& v) const;
  /// Matrix of the map induced by M (ambient -> target.ambient) on classes.
  Mat induced(const Mat& m, const Subquotient& target) const;

 private:
  Field f_;
  std::size_t n_ = 0;
  Mat w_, reps_;
  Decomposer dec_;
};

/// dim U/W with representatives chosen by echelon-pivot extension.
Subquotient subquotient(const Mat& U, const Mat& W);
std::size_t subquotient_dim(const Mat& U, const Mat& W);

/// Basis of {T : T A_g = B_g T for every g}. Uses a spinning reduction when
/// some standard basis vector is cyclic for the A_g, else the full system.
std::vector<Mat> intertwiner_space(const std::vector<Mat>& A, const std::vector<Mat>& B);
/// The full Kronecker-system solve, exposed for cross-checks.
std::vector<Mat> intertwiner_space_direct(const std::vector<Mat>& A, const std::vector<Mat>& B);

}  // namespace tatebc
