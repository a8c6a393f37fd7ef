#include "tatebc/tate_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tatebc {

namespace {

int parity(int r) { return ((r % 2) + 2) % 2; }

Elem sign_elem(const Field& f, int j) { return parity(j) ? f.neg(f.one()) : f.one(); }

void place(Mat& dst, std::size_t r0, std::size_t c0, const Mat& src) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = src(i, j);
}

// Matrix of the projection onto a quotient, in the quotient's coordinates.
Mat projection_matrix(const Subquotient& q) {
  const Field& f = q.reps().field();
  const std::size_t n = q.ambient();
  Mat out(f, q.dim(), n);
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n, Elem{0});
    e[k] = f.one();
    out.set_col(k, q.coords_checked(e));
  }
  return out;
}

// Matrix of M restricted to span(rows of src) -> span(rows of dst), in those bases.
Mat restricted(const Mat& M, const Mat& src, const Mat& dst) {
  Decomposer dec(dst);
  Mat out(M.field(), dst.rows(), src.rows());
  for (std::size_t k = 0; k < src.rows(); ++k) {
    auto c = dec.coeffs(M.apply(src.row(k)));
    if (!c) throw std::logic_error("restricted: subspace is not invariant");
    out.set_col(k, *c);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- complexes

SigmaChainComplex::SigmaChainComplex(int lo, std::vector<SigmaModule> modules, std::vector<Mat> diffs)
    : lo_(lo), modules_(std::move(modules)), diffs_(std::move(diffs)) {
  if (modules_.empty()) throw std::invalid_argument("complex: at least one degree is required");
  if (diffs_.size() + 1 != modules_.size())
    throw std::invalid_argument("complex: expected one differential between consecutive degrees");
  const Field& f = modules_.front().field();
  for (const auto& m : modules_)
    if (!(m.field() == f)) throw std::invalid_argument("complex: modules over different fields");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    const Mat& d = diffs_[k];
    if (d.rows() != modules_[k + 1].dim() || d.cols() != modules_[k].dim())
      throw std::invalid_argument("complex: differential has the wrong shape");
    if (!(d * modules_[k].sigma() == modules_[k + 1].sigma() * d))
      throw std::invalid_argument("complex: differential does not commute with sigma");
    if (k + 1 < diffs_.size() && !(diffs_[k + 1] * d).is_zero())
      throw std::invalid_argument("complex: d o d is not zero");
  }
}

SigmaChainComplex SigmaChainComplex::single(const SigmaModule& M, int degree) {
  return SigmaChainComplex(degree, {M}, {});
}

SigmaModule SigmaChainComplex::module(int j) const {
  if (j < lo() || j > hi()) return SigmaModule::zero(field());
  return modules_[static_cast<std::size_t>(j - lo_)];
}

std::size_t SigmaChainComplex::dim(int j) const {
  if (j < lo() || j > hi()) return 0;
  return modules_[static_cast<std::size_t>(j - lo_)].dim();
}

Mat SigmaChainComplex::diff(int j) const {
  if (j < lo() || j >= hi()) return Mat(field(), dim(j + 1), dim(j));
  return diffs_[static_cast<std::size_t>(j - lo_)];
}

SigmaChainComplex SigmaChainComplex::shifted(int k) const {
  std::vector<Mat> d;
  for (const auto& m : diffs_) d.push_back(m.scaled(sign_elem(field(), k)));
  return SigmaChainComplex(lo_ - k, modules_, d);
}

SigmaChainComplex SigmaChainComplex::padded(int lo, int hi) const {
  if (lo > lo_ || hi < this->hi()) throw std::invalid_argument("complex: padding must enlarge the range");
  std::vector<SigmaModule> ms;
  std::vector<Mat> ds;
  for (int j = lo; j <= hi; ++j) {
    ms.push_back(module(j));
    if (j < hi) ds.push_back(diff(j));
  }
  return SigmaChainComplex(lo, ms, ds);
}

bool SigmaChainComplex::trivial_action() const {
  for (const auto& m : modules_)
    if (!m.sigma().is_identity()) return false;
  return true;
}

bool SigmaChainComplex::zero_differential() const {
  for (const auto& d : diffs_)
    if (!d.is_zero()) return false;
  return true;
}

Subquotient cohomology_space(const SigmaChainComplex& C, int j) {
  return Subquotient(kernel(C.diff(j)), image(C.diff(j - 1)));
}

SigmaModule cohomology(const SigmaChainComplex& C, int j) {
  if (C.dim(j) == 0) return SigmaModule::zero(C.field());
  Subquotient h = cohomology_space(C, j);
  return SigmaModule(h.induced(C.module(j).sigma(), h));
}

// ---------------------------------------------------------------- totalization

TotalComplex::TotalComplex(const SigmaChainComplex& C, TateWindow w) : C_(C), w_(w) {
  for (int j = C.lo(); j <= C.hi(); ++j) {
    SigmaModule m = C.module(j);
    Elem s = sign_elem(C.field(), j);
    vert_even_.push_back(m.one_minus_sigma().scaled(s));
    vert_odd_.push_back(norm_operator(m).scaled(s));
  }
}

std::vector<TotalComplex::Block> TotalComplex::blocks(int n) const {
  std::vector<Block> out;
  std::size_t off = 0;
  for (int j = C_.lo(); j <= C_.hi(); ++j) {
    int r = n - j;
    if (r < w_.row_lo || r > w_.row_hi) continue;
    out.push_back({r, j, off, C_.dim(j)});
    off += C_.dim(j);
  }
  return out;
}

std::size_t TotalComplex::dim(int n) const {
  std::size_t d = 0;
  for (const auto& b : blocks(n)) d += b.dim;
  return d;
}

Mat TotalComplex::differential(int n) const {
  auto src = blocks(n), dst = blocks(n + 1);
  std::map<int, Block> by_col;
  for (const auto& b : dst) by_col[b.col] = b;
  Mat D(C_.field(), dim(n + 1), dim(n));
  for (const auto& b : src) {
    // horizontal: (r, j) -> (r, j+1)
    auto h = by_col.find(b.col + 1);
    if (h != by_col.end() && h->second.row == b.row) place(D, h->second.offset, b.offset, C_.diff(b.col));
    // vertical: (r, j) -> (r+1, j)
    auto v = by_col.find(b.col);
    if (v != by_col.end() && v->second.row == b.row + 1) {
      std::size_t k = static_cast<std::size_t>(b.col - C_.lo());
      place(D, v->second.offset, b.offset, parity(b.row) == 0 ? vert_even_[k] : vert_odd_[k]);
    }
  }
  return D;
}

Mat TotalComplex::chain_map(int n, const std::vector<Mat>& maps, const TotalComplex& target) const {
  auto src = blocks(n), dst = target.blocks(n);
  std::map<int, Block> by_col;
  for (const auto& b : dst) by_col[b.col] = b;
  Mat F(C_.field(), target.dim(n), dim(n));
  for (const auto& b : src) {
    auto t = by_col.find(b.col);
    if (t == by_col.end()) continue;
    const Mat& m = maps.at(static_cast<std::size_t>(b.col - C_.lo()));
    if (m.rows() != t->second.dim || m.cols() != b.dim) throw std::invalid_argument("chain_map: shape mismatch");
    place(F, t->second.offset, b.offset, m);
  }
  return F;
}

Subquotient TotalComplex::cohomology(int n) const {
  return Subquotient(kernel(differential(n)), image(differential(n - 1)));
}

TateWindow default_window(const SigmaChainComplex& C, int i) {
  const int len = C.hi() - C.lo();
  const int needed = len + 3;
  const int width = 2 * (len + 3);
  const int pad = width - needed;
  const int pad_lo = pad / 2;
  TateWindow w;
  w.row_lo = i - 1 - C.hi() - pad_lo;
  w.row_hi = w.row_lo + width - 1;
  return w;
}

TateResult tate_hyper(const SigmaChainComplex& C, int i) {
  TateResult res;
  res.degree = i;
  res.window = default_window(C, i);
  TotalComplex tot(C, res.window);
  res.d_in = tot.differential(i - 1);
  res.d_out = tot.differential(i);
  res.group = Subquotient(kernel(res.d_out), image(res.d_in));
  res.dim = res.group.dim();
  TateWindow wide{res.window.row_lo - 1, res.window.row_hi + 1};
  TotalComplex tot2(C, wide);
  std::size_t dim2 = tot2.cohomology(i).dim();
  if (dim2 != res.dim) throw std::logic_error("tate_hyper: window computation is not stable under widening");
  res.stable = true;
  return res;
}

std::size_t tate_dim(const SigmaChainComplex& C, int i) { return tate_hyper(C, i).dim; }

// ---------------------------------------------------------------- long exact sequence

namespace {

bool exact_at(const Mat& alpha, const Mat& beta, std::size_t dim_mid) {
  if (!(beta * alpha).is_zero()) return false;
  return rank(alpha) + rank(beta) == dim_mid;
}

}  // namespace

LesReport les_check(const ShortExactSequence& ses_in) {
  const int lo = std::min({ses_in.A.lo(), ses_in.B.lo(), ses_in.C.lo()});
  const int hi = std::max({ses_in.A.hi(), ses_in.B.hi(), ses_in.C.hi()});
  // maps are indexed from the lowest degree of B
  const SigmaChainComplex A = ses_in.A.padded(lo, hi), B = ses_in.B.padded(lo, hi), C = ses_in.C.padded(lo, hi);
  const Field& fld = B.field();
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  auto get_map = [&](const std::vector<Mat>& maps, int j, std::size_t rows, std::size_t cols) {
    int k = j - ses_in.B.lo();
    if (k >= 0 && static_cast<std::size_t>(k) < maps.size()) return maps[static_cast<std::size_t>(k)];
    if (rows == 0 || cols == 0) return Mat(fld, rows, cols);
    throw std::invalid_argument("les_check: missing map in degree " + std::to_string(j));
  };
  std::vector<Mat> f, g;
  for (int j = lo; j <= hi; ++j) {
    f.push_back(get_map(ses_in.f, j, B.dim(j), A.dim(j)));
    g.push_back(get_map(ses_in.g, j, C.dim(j), B.dim(j)));
  }
  for (std::size_t k = 0; k < len; ++k) {
    int j = lo + static_cast<int>(k);
    const Mat &fj = f[k], &gj = g[k];
    if (fj.rows() != B.dim(j) || fj.cols() != A.dim(j) || gj.rows() != C.dim(j) || gj.cols() != B.dim(j))
      throw std::invalid_argument("les_check: map has the wrong shape");
    if (!(fj * A.module(j).sigma() == B.module(j).sigma() * fj) ||
        !(gj * B.module(j).sigma() == C.module(j).sigma() * gj))
      throw std::invalid_argument("les_check: maps do not commute with sigma");
    if (k + 1 < len) {
      if (!(f[k + 1] * A.diff(j) == B.diff(j) * fj) || !(g[k + 1] * B.diff(j) == C.diff(j) * gj))
        throw std::invalid_argument("les_check: maps do not commute with the differentials");
    }
    if (!(gj * fj).is_zero() || rank(fj) != A.dim(j) || rank(gj) != C.dim(j) || B.dim(j) != A.dim(j) + C.dim(j))
      throw std::invalid_argument("les_check: not short exact in degree " + std::to_string(j));
  }

  TateWindow w{-4 - hi, 5 - lo};
  TotalComplex tA(A, w), tB(B, w), tC(C, w);
  std::map<int, Subquotient> hA, hB, hC;
  for (int n = -1; n <= 2; ++n) {
    hA[n] = tA.cohomology(n);
    hB[n] = tB.cohomology(n);
    hC[n] = tC.cohomology(n);
  }
  auto Fn = [&](int n) { return hA[n].induced(tA.chain_map(n, f, tB), hB[n]); };
  auto Gn = [&](int n) { return hB[n].induced(tB.chain_map(n, g, tC), hC[n]); };
  auto delta = [&](int n) {
    Mat G = tB.chain_map(n, g, tC), F1 = tA.chain_map(n + 1, f, tB), D = tB.differential(n);
    Mat out(fld, hA[n + 1].dim(), hC[n].dim());
    for (std::size_t k = 0; k < hC[n].dim(); ++k) {
      auto y = solve(G, hC[n].reps().row(k));
      if (!y) throw std::logic_error("les_check: lift through g failed");
      auto x = solve(F1, D.apply(*y));
      if (!x) throw std::logic_error("les_check: boundary does not come from A");
      out.set_col(k, hA[n + 1].coords_checked(*x));
    }
    return out;
  };

  LesReport rep;
  Mat dm1 = delta(-1), d0 = delta(0), d1 = delta(1);
  rep.connecting_ranks = {rank(dm1), rank(d0), rank(d1)};
  auto add = [&](std::string name, std::size_t dim, bool ok) { rep.nodes.push_back({std::move(name), dim, ok}); };
  add("T0(A)", hA[0].dim(), exact_at(dm1, Fn(0), hA[0].dim()));
  for (int n = 0; n <= 1; ++n) {
    std::string s = std::to_string(n);
    Mat F = Fn(n), G = Gn(n), d = n == 0 ? d0 : d1;
    add("T" + s + "(B)", hB[n].dim(), exact_at(F, G, hB[n].dim()));
    add("T" + s + "(C)", hC[n].dim(), exact_at(G, d, hC[n].dim()));
    add("T" + std::to_string(n + 1) + "(A)", hA[n + 1].dim(), exact_at(d, Fn(n + 1), hA[n + 1].dim()));
  }
  rep.exact = std::all_of(rep.nodes.begin(), rep.nodes.end(), [](const LesNode& x) { return x.exact; });
  return rep;
}

// ---------------------------------------------------------------- spectral sequence, trivial action

SpectralReport tate_ss(const SigmaChainComplex& C) {
  SpectralReport rep;
  rep.zero_differential = C.zero_differential();
  for (int n = 0; n < 2; ++n) rep.t[n] = tate_dim(C, n);
  for (int j = C.lo(); j <= C.hi(); ++j) {
    auto td = tate_dims(cohomology(C, j));
    rep.e2.push_back({j, td});
    for (int n = 0; n < 2; ++n) rep.bound[n] += parity(n - j) == 0 ? td.first : td.second;
  }
  rep.pass = true;
  for (int n = 0; n < 2; ++n) {
    if (rep.t[n] > rep.bound[n]) rep.pass = false;
    if (rep.zero_differential && rep.t[n] != rep.bound[n]) rep.pass = false;
  }
  return rep;
}

KunnethReport trivial_action_factor(const SigmaChainComplex& C) {
  if (!C.trivial_action()) throw std::invalid_argument("trivial_action_factor: sigma is not the identity");
  KunnethReport rep;
  for (int n = 0; n < 2; ++n) rep.t[n] = tate_dim(C, n);
  for (int j = C.lo(); j <= C.hi(); ++j) rep.sum_h += cohomology_space(C, j).dim();
  rep.pass = rep.t[0] == rep.sum_h && rep.t[1] == rep.sum_h;
  return rep;
}

// ---------------------------------------------------------------- random complexes

SigmaChainComplex random_complex(const Field& f, const ComplexOptions& opt, Rng& rng) {
  std::vector<SigmaModule> ms;
  for (std::size_t k = 0; k < opt.length; ++k) {
    if (opt.trivial_action)
      ms.push_back(SigmaModule::trivial(f, rand_below(rng, opt.max_blocks + 2)));
    else
      ms.push_back(random_module(f, opt.max_blocks, rng, opt.free_only));
  }
  std::vector<Mat> ds;
  for (std::size_t k = 0; k + 1 < ms.size(); ++k) {
    const SigmaModule &src = ms[k], &dst = ms[k + 1];
    Mat d(f, dst.dim(), src.dim());
    if (!opt.zero_differential && src.dim() > 0 && dst.dim() > 0) {
      Mat prev = k == 0 ? Mat(f, src.dim(), 0) : ds.back();
      Subquotient q(Mat::identity(f, src.dim()), image(prev));
      if (q.dim() > 0) {
        Mat sq = q.induced(src.sigma(), q);
        auto homs = intertwiner_space({sq}, {dst.sigma()});
        Mat e(f, dst.dim(), q.dim());
        for (const auto& h : homs) e = e + h.scaled(random_elem(f, rng));
        d = e * projection_matrix(q);
      }
    }
    ds.push_back(d);
  }
  return SigmaChainComplex(opt.lo, ms, ds);
}

ShortExactSequence random_ses(const Field& f, const ComplexOptions& opt, bool split, Rng& rng) {
  ShortExactSequence s;
  if (split) {
    s.A = random_complex(f, opt, rng);
    s.C = random_complex(f, opt, rng);
    std::vector<SigmaModule> ms;
    std::vector<Mat> ds;
    for (int j = s.A.lo(); j <= s.A.hi(); ++j) {
      ms.push_back(direct_sum(s.A.module(j), s.C.module(j)));
      if (j < s.A.hi()) ds.push_back(block_diag(s.A.diff(j), s.C.diff(j)));
      std::size_t a = s.A.dim(j), c = s.C.dim(j);
      Mat fj(f, a + c, a), gj(f, c, a + c);
      for (std::size_t i = 0; i < a; ++i) fj.at(i, i) = f.one();
      for (std::size_t i = 0; i < c; ++i) gj.at(i, a + i) = f.one();
      s.f.push_back(fj);
      s.g.push_back(gj);
    }
    s.B = SigmaChainComplex(s.A.lo(), ms, ds);
    return s;
  }

  s.B = random_complex(f, opt, rng);
  const int lo = s.B.lo(), hi = s.B.hi();
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  // subcomplex generated by a few random vectors
  std::vector<Mat> span(len);
  for (std::size_t k = 0; k < len; ++k) span[k] = Mat(f, 0, s.B.dim(lo + static_cast<int>(k)));
  std::size_t seeds = 1 + rand_below(rng, 2);
  for (std::size_t t = 0; t < seeds; ++t) {
    std::size_t k = rand_below(rng, len);
    std::size_t n = span[k].cols();
    if (n == 0) continue;
    span[k] = row_space(vstack(span[k], random_matrix(f, 1, n, rng)));
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t k = 0; k < len; ++k) {
      int j = lo + static_cast<int>(k);
      const Mat sg = s.B.module(j).sigma();
      Mat add_s(f, 0, span[k].cols());
      for (std::size_t r = 0; r < span[k].rows(); ++r)
        add_s = vstack(add_s, Mat::from_rows(f, span[k].cols(), {sg.apply(span[k].row(r))}));
      Mat ns = row_space(vstack(span[k], add_s));
      if (ns.rows() != span[k].rows()) {
        span[k] = ns;
        grew = true;
      }
      if (k + 1 < len) {
        Mat d = s.B.diff(j);
        Mat add_d(f, 0, span[k + 1].cols());
        for (std::size_t r = 0; r < span[k].rows(); ++r)
          add_d = vstack(add_d, Mat::from_rows(f, span[k + 1].cols(), {d.apply(span[k].row(r))}));
        Mat nd = row_space(vstack(span[k + 1], add_d));
        if (nd.rows() != span[k + 1].rows()) {
          span[k + 1] = nd;
          grew = true;
        }
      }
    }
  }
  std::vector<SigmaModule> am, cm;
  std::vector<Mat> ad, cd;
  std::vector<Subquotient> quo;
  for (std::size_t k = 0; k < len; ++k) {
    int j = lo + static_cast<int>(k);
    const Mat sg = s.B.module(j).sigma();
    am.push_back(SigmaModule(restricted(sg, span[k], span[k])));
    quo.emplace_back(Mat::identity(f, s.B.dim(j)), span[k]);
    cm.push_back(SigmaModule(quo.back().induced(sg, quo.back())));
    s.f.push_back(span[k].transpose());
    s.g.push_back(projection_matrix(quo.back()));
  }
  for (std::size_t k = 0; k + 1 < len; ++k) {
    int j = lo + static_cast<int>(k);
    ad.push_back(restricted(s.B.diff(j), span[k], span[k + 1]));
    cd.push_back(quo[k].induced(s.B.diff(j), quo[k + 1]));
  }
  s.A = SigmaChainComplex(lo, am, ad);
  s.C = SigmaChainComplex(lo, cm, cd);
  return s;
}

}  // namespace tatebc
