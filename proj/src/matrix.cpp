#include "tatebc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tatebc {

namespace {

void check_same_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": field mismatch");
}

// dst[k] += c * src[k] for k in [from, n)
inline void axpy(const Field& f, Elem* dst, Elem c, const Elem* src, std::size_t from, std::size_t n) {
  if (c.v == 0) return;
  if (f.degree() == 1) {
    const std::uint64_t p = f.characteristic();
    const std::uint64_t cv = c.v;
    for (std::size_t k = from; k < n; ++k)
      if (src[k].v) dst[k].v = static_cast<std::uint32_t>((dst[k].v + cv * src[k].v) % p);
  } else {
    for (std::size_t k = from; k < n; ++k)
      if (src[k].v) dst[k] = f.add(dst[k], f.mul(c, src[k]));
  }
}

inline void scale_row(const Field& f, Elem* row, Elem c, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) row[k] = f.mul(row[k], c);
}

// Semi-echelon accumulator: row i has pivot piv[i] (normalized to 1) and is
// zero in the pivot columns of rows inserted before it.
class RowReducer {
 public:
  RowReducer(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t width() const { return n_; }

  // Reduces v in place; returns true if v became zero.
  bool reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elem c = v[piv_[i]];
      if (c.v) axpy(f_, v.data(), f_.neg(c), rows_[i].data(), 0, n_);
    }
    for (auto e : v)
      if (e.v) return false;
    return true;
  }

  // Returns true if v was independent of the rows so far.
  bool insert(Vec v) {
    if (reduce(v)) return false;
    std::size_t p = 0;
    while (v[p].v == 0) ++p;
    scale_row(f_, v.data(), f_.inv(v[p]), n_);
    rows_.push_back(std::move(v));
    piv_.push_back(p);
    return true;
  }

  // Fully reduced rows sorted by pivot.
  Mat reduced() const {
    std::vector<Vec> r = rows_;
    for (std::size_t i = r.size(); i-- > 0;)
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j == i) continue;
        Elem c = r[j][piv_[i]];
        if (c.v) axpy(f_, r[j].data(), f_.neg(c), r[i].data(), 0, n_);
      }
    std::vector<std::size_t> order(r.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
    Mat out(f_, r.size(), n_);
    for (std::size_t i = 0; i < order.size(); ++i) out.set_row(i, r[order[i]]);
    return out;
  }

  Mat kernel() const {
    Mat red = reduced();
    std::vector<long> pivot_row(n_, -1);
    for (std::size_t i = 0; i < red.rows(); ++i) {
      std::size_t p = 0;
      while (red(i, p).v == 0) ++p;
      pivot_row[p] = static_cast<long>(i);
    }
    std::vector<Vec> basis;
    for (std::size_t fcol = 0; fcol < n_; ++fcol) {
      if (pivot_row[fcol] >= 0) continue;
      Vec v(n_, Elem{0});
      v[fcol] = f_.one();
      for (std::size_t c = 0; c < n_; ++c)
        if (pivot_row[c] >= 0) v[c] = f_.neg(red(static_cast<std::size_t>(pivot_row[c]), fcol));
      basis.push_back(std::move(v));
    }
    return row_space(Mat::from_rows(f_, n_, basis));
  }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace

// ---------------------------------------------------------------- Mat basics

Mat::Mat(Field f, std::size_t rows, std::size_t cols) : f_(std::move(f)), r_(rows), c_(cols), a_(rows * cols) {}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(std::move(f), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Elem{1};
  return m;
}

Mat Mat::from_ints(Field f, std::size_t rows, std::size_t cols, const std::vector<long long>& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("Mat::from_ints: entry count does not match shape");
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) m.a_[i] = f.from_int(v[i]);
  return m;
}

Mat Mat::from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(std::move(f), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Mat Mat::from_cols(Field f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(std::move(f), rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Mat::col(std::size_t j) const {
  Vec v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = a_[i * c_ + j];
  return v;
}

void Mat::set_row(std::size_t i, const Vec& v) {
  if (v.size() != c_) throw std::invalid_argument("Mat::set_row: length mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + i * c_);
}

void Mat::set_col(std::size_t j, const Vec& v) {
  if (v.size() != r_) throw std::invalid_argument("Mat::set_col: length mismatch");
  for (std::size_t i = 0; i < r_; ++i) a_[i * c_ + j] = v[i];
}

Mat Mat::transpose() const {
  Mat t(f_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.a_[j * r_ + i] = a_[i * c_ + j];
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("Mat::operator*: shape mismatch");
  check_same_field(f_, o.f_, "Mat::operator*");
  Mat out(f_, r_, o.c_);
  for (std::size_t i = 0; i < r_; ++i) {
    Elem* dst = out.row_ptr(i);
    for (std::size_t k = 0; k < c_; ++k) {
      Elem c = a_[i * c_ + k];
      if (c.v) axpy(f_, dst, c, o.row_ptr(k), 0, o.c_);
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator+: shape mismatch");
  Mat out(f_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("Mat::operator-: shape mismatch");
  Mat out(f_, r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.sub(a_[i], o.a_[i]);
  return out;
}

Mat Mat::scaled(Elem s) const {
  Mat out(*this);
  for (auto& e : out.a_) e = f_.mul(e, s);
  return out;
}

Mat Mat::pow(std::uint64_t e) const {
  if (!square()) throw std::invalid_argument("Mat::pow: not square");
  Mat r = identity(f_, r_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat out(f_, r_ * o.r_, c_ * o.c_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) {
      Elem a = a_[i * c_ + j];
      if (!a.v) continue;
      for (std::size_t k = 0; k < o.r_; ++k)
        for (std::size_t l = 0; l < o.c_; ++l) out.at(i * o.r_ + k, j * o.c_ + l) = f_.mul(a, o(k, l));
    }
  return out;
}

Mat Mat::map_entries(Elem (Field::*fn)(Elem) const) const {
  Mat out(*this);
  for (auto& e : out.a_) e = (f_.*fn)(e);
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("Mat::apply: length mismatch");
  Vec out(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Elem s{0};
    const Elem* row = row_ptr(i);
    for (std::size_t j = 0; j < c_; ++j)
      if (row[j].v && v[j].v) s = f_.add(s, f_.mul(row[j], v[j]));
    out[i] = s;
  }
  return out;
}

Vec Mat::apply_left(const Vec& w) const {
  if (w.size() != r_) throw std::invalid_argument("Mat::apply_left: length mismatch");
  Vec out(c_, Elem{0});
  for (std::size_t i = 0; i < r_; ++i) axpy(f_, out.data(), w[i], row_ptr(i), 0, c_);
  return out;
}

Mat Mat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > r_ || c0 + nc > c_) throw std::out_of_range("Mat::submatrix");
  Mat out(f_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

bool Mat::is_zero() const {
  for (auto e : a_)
    if (e.v) return false;
  return true;
}

bool Mat::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (a_[i * c_ + j].v != (i == j ? 1u : 0u)) return false;
  return true;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_ && (a.a_.empty() || a.f_ == b.f_);
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Mat out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b(i, j);
  }
  return out;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) out.set_row(a.rows() + i, b.row(i));
  return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Mat inverse(const Mat& m) {
  if (!m.square()) throw std::invalid_argument("inverse: not square");
  const std::size_t n = m.rows();
  RrefResult r = rref(hstack(m, Mat::identity(m.field(), n)));
  for (std::size_t i = 0; i < n; ++i)
    if (i >= r.pivots.size() || r.pivots[i] != i) throw std::domain_error("inverse: singular matrix");
  return r.reduced.submatrix(0, n, n, n);
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Field& f, Elem s, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(s, a[i]);
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (auto e : a)
    if (e.v) return false;
  return true;
}

// ---------------------------------------------------------------- elimination

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& a = res.reduced;
  const Field& f = m.field();
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c).v == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t k = 0; k < C; ++k) std::swap(a.at(piv, k), a.at(r, k));
    scale_row(f, a.row_ptr(r), f.inv(a(r, c)), C);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r) continue;
      Elem x = a(i, c);
      if (x.v) axpy(f, a.row_ptr(i), f.neg(x), a.row_ptr(r), c, C);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  RowReducer rr(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
  return rr.rank();
}

Mat row_space(const Mat& m) {
  if (m.rows() == 0) return Mat(m.field(), 0, m.cols());
  RrefResult r = rref(m);
  return r.reduced.submatrix(0, 0, r.rank, m.cols());
}

Mat kernel(const Mat& m) {
  RowReducer rr(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) rr.insert(m.row(i));
  return rr.kernel();
}

Mat image(const Mat& m) { return row_space(m.transpose()); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  const std::size_t C = m.cols();
  Mat aug(m.field(), m.rows(), C + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < C; ++j) aug.at(i, j) = m(i, j);
    aug.at(i, C) = b[i];
  }
  RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == C) return std::nullopt;
  Vec x(C, Elem{0});
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, C);
  return x;
}

bool in_span(const Mat& basis, const Vec& v) {
  if (vec_is_zero(v)) return true;
  RowReducer rr(basis.field(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) rr.insert(basis.row(i));
  Vec w = v;
  return rr.reduce(w);
}

// ---------------------------------------------------------------- Decomposer

Decomposer::Decomposer(const Mat& rows) : f_(rows.field()), n_(rows.cols()), k_(rows.rows()) {
  RrefResult r = rref(hstack(rows, Mat::identity(f_, k_)));
  // independence: the left block must have full row rank
  std::size_t left_rank = 0;
  for (auto p : r.pivots)
    if (p < n_) ++left_rank;
  if (left_rank != k_) throw std::invalid_argument("Decomposer: rows are not independent");
  ech_ = r.reduced.submatrix(0, 0, k_, n_);
  trans_ = r.reduced.submatrix(0, n_, k_, k_);
  piv_.assign(r.pivots.begin(), r.pivots.begin() + static_cast<long>(k_));
}

std::optional<Vec> Decomposer::coeffs(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("Decomposer::coeffs: length mismatch");
  Vec resid = v;
  Vec out(k_, Elem{0});
  for (std::size_t l = 0; l < k_; ++l) {
    Elem c = v[piv_[l]];
    if (!c.v) continue;
    axpy(f_, resid.data(), f_.neg(c), ech_.row_ptr(l), 0, n_);
    axpy(f_, out.data(), c, trans_.row_ptr(l), 0, k_);
  }
  if (!vec_is_zero(resid)) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------- Subquotient

Subquotient::Subquotient(const Mat& U, const Mat& W) : f_(U.field()), n_(U.cols()) {
  if (W.cols() != U.cols()) throw std::invalid_argument("subquotient: ambient dimension mismatch");
  Mat u = row_space(U);
  w_ = row_space(W);
  RowReducer ru(f_, n_);
  for (std::size_t i = 0; i < u.rows(); ++i) ru.insert(u.row(i));
  for (std::size_t i = 0; i < w_.rows(); ++i) {
    Vec v = w_.row(i);
    if (!ru.reduce(v)) throw std::invalid_argument("subquotient: W is not contained in U");
  }
  RowReducer ext(f_, n_);
  for (std::size_t i = 0; i < w_.rows(); ++i) ext.insert(w_.row(i));
  std::vector<Vec> reps;
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (ext.insert(u.row(i))) reps.push_back(u.row(i));
  reps_ = Mat::from_rows(f_, n_, reps);
  dec_ = Decomposer(vstack(w_, reps_));
}

std::optional<Vec> Subquotient::coords(const Vec& v) const {
  auto c = dec_.coeffs(v);
  if (!c) return std::nullopt;
  return Vec(c->begin() + static_cast<long>(w_.rows()), c->end());
}

Vec Subquotient::coords_checked(const Vec& v) const {
  auto c = coords(v);
  if (!c) throw std::logic_error("subquotient: vector outside the numerator space");
  return *c;
}

bool Subquotient::is_trivial(const Vec& v) const {
  auto c = coords(v);
  return c && vec_is_zero(*c);
}

Mat Subquotient::induced(const Mat& m, const Subquotient& target) const {
  if (m.cols() != n_ || m.rows() != target.n_) throw std::invalid_argument("Subquotient::induced: shape mismatch");
  Mat out(f_, target.dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) out.set_col(j, target.coords_checked(m.apply(reps_.row(j))));
  return out;
}

Subquotient subquotient(const Mat& U, const Mat& W) { return Subquotient(U, W); }
std::size_t subquotient_dim(const Mat& U, const Mat& W) { return Subquotient(U, W).dim(); }

// ---------------------------------------------------------------- intertwiners

namespace {

void check_reps(const std::vector<Mat>& A, const std::vector<Mat>& B) {
  if (A.size() != B.size()) throw std::invalid_argument("intertwiner_space: generator lists differ in length");
  for (std::size_t g = 0; g < A.size(); ++g) {
    if (!A[g].square() || !B[g].square()) throw std::invalid_argument("intertwiner_space: non-square matrix");
    if (A[g].rows() != A[0].rows() || B[g].rows() != B[0].rows())
      throw std::invalid_argument("intertwiner_space: dimension mismatch");
  }
}

std::vector<Mat> canonical_basis(const Field& f, std::size_t m, std::size_t n, const std::vector<Mat>& ts) {
  std::vector<Vec> flat;
  for (const auto& t : ts) {
    Vec v(m * n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = t(i, j);
    flat.push_back(std::move(v));
  }
  Mat rs = row_space(Mat::from_rows(f, m * n, flat));
  std::vector<Mat> out;
  for (std::size_t r = 0; r < rs.rows(); ++r) {
    Mat t(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = rs(r, i * n + j);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<Mat> solve_direct(const Field& f, std::size_t n, std::size_t m, const std::vector<Mat>& A,
                              const std::vector<Mat>& B) {
  // unknown T (m x n), flattened row-major
  const std::size_t N = m * n;
  RowReducer rr(f, N);
  for (std::size_t g = 0; g < A.size(); ++g)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec eq(N, Elem{0});
        for (std::size_t k = 0; k < n; ++k) eq[i * n + k] = f.add(eq[i * n + k], A[g](k, j));
        for (std::size_t k = 0; k < m; ++k) eq[k * n + j] = f.sub(eq[k * n + j], B[g](i, k));
        rr.insert(std::move(eq));
        if (rr.rank() == N) return {};
      }
  Mat ker = rr.kernel();
  std::vector<Mat> out;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Mat t(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = ker(r, i * n + j);
    out.push_back(std::move(t));
  }
  return out;
}

struct Spin {
  std::vector<Vec> basis;            // b_k
  std::vector<std::size_t> parent;   // b_k = A[gen[k]] b_parent[k]
  std::vector<std::size_t> gen;
};

std::optional<Spin> spin(const Field& f, std::size_t n, const std::vector<Mat>& A, const Vec& v) {
  Spin s;
  RowReducer rr(f, n);
  if (!rr.insert(v)) return std::nullopt;
  s.basis.push_back(v);
  s.parent.push_back(0);
  s.gen.push_back(0);
  for (std::size_t k = 0; k < s.basis.size() && s.basis.size() < n; ++k)
    for (std::size_t g = 0; g < A.size() && s.basis.size() < n; ++g) {
      Vec w = A[g].apply(s.basis[k]);
      if (rr.insert(w)) {
        s.basis.push_back(std::move(w));
        s.parent.push_back(k);
        s.gen.push_back(g);
      }
    }
  if (s.basis.size() != n) return std::nullopt;
  return s;
}

std::optional<std::vector<Mat>> solve_spin(const Field& f, std::size_t n, std::size_t m, const std::vector<Mat>& A,
                                           const std::vector<Mat>& B) {
  std::optional<Spin> s;
  for (std::size_t i = 0; i < n && i < 4 && !s; ++i) {
    Vec e(n, Elem{0});
    e[i] = f.one();
    s = spin(f, n, A, e);
  }
  if (!s) return std::nullopt;
  // T b_k = M_k u with u = T b_0
  std::vector<Mat> M;
  M.reserve(n);
  M.push_back(Mat::identity(f, m));
  for (std::size_t k = 1; k < n; ++k) M.push_back(B[s->gen[k]] * M[s->parent[k]]);
  Mat bcols = Mat::from_rows(f, n, s->basis);  // rows are b_k
  Decomposer dec(bcols);
  RowReducer rr(f, m);
  for (std::size_t k = 0; k < n && rr.rank() < m; ++k)
    for (std::size_t g = 0; g < A.size() && rr.rank() < m; ++g) {
      Vec c = *dec.coeffs(A[g].apply(s->basis[k]));
      Mat E = (B[g] * M[k]).scaled(f.neg(f.one()));
      for (std::size_t l = 0; l < n; ++l)
        if (c[l].v) E = E + M[l].scaled(c[l]);
      for (std::size_t r = 0; r < m; ++r) rr.insert(E.row(r));
    }
  Mat us = rr.kernel();
  Mat binv = inverse(bcols.transpose());  // columns b_k
  std::vector<Mat> out;
  for (std::size_t r = 0; r < us.rows(); ++r) {
    Vec u = us.row(r);
    std::vector<Vec> imgs;
    for (std::size_t k = 0; k < n; ++k) imgs.push_back(M[k].apply(u));
    out.push_back(Mat::from_cols(f, m, imgs) * binv);
  }
  return out;
}

}  // namespace

std::vector<Mat> intertwiner_space_direct(const std::vector<Mat>& A, const std::vector<Mat>& B) {
  check_reps(A, B);
  if (A.empty()) throw std::invalid_argument("intertwiner_space: empty generator list");
  const Field& f = A[0].field();
  const std::size_t n = A[0].rows(), m = B[0].rows();
  if (n == 0 || m == 0) return {};
  return canonical_basis(f, m, n, solve_direct(f, n, m, A, B));
}

std::vector<Mat> intertwiner_space(const std::vector<Mat>& A, const std::vector<Mat>& B) {
  check_reps(A, B);
  if (A.empty()) throw std::invalid_argument("intertwiner_space: empty generator list");
  const Field& f = A[0].field();
  const std::size_t n = A[0].rows(), m = B[0].rows();
  if (n == 0 || m == 0) return {};
  if (auto sp = solve_spin(f, n, m, A, B)) return canonical_basis(f, m, n, *sp);
  return canonical_basis(f, m, n, solve_direct(f, n, m, A, B));
}

}  // namespace tatebc
