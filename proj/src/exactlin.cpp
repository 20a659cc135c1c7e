#include "dqg/exactlin.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dqg {

namespace {

// acc += a * b
inline void addmul(GQ& acc, const GQ& a, const GQ& b) {
  if (a.is_real() && b.is_real()) {
    acc.re += a.re * b.re;
    return;
  }
  acc.re += a.re * b.re - a.im * b.im;
  acc.im += a.re * b.im + a.im * b.re;
}

// acc -= a * b
inline void submul(GQ& acc, const GQ& a, const GQ& b) {
  if (a.is_real() && b.is_real()) {
    acc.re -= a.re * b.re;
    return;
  }
  acc.re -= a.re * b.re - a.im * b.im;
  acc.im -= a.re * b.im + a.im * b.re;
}

// In-place reduced row echelon form restricted to the first `ncols` columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    GQ inv = GQ(1) / rows[r][c];
    for (auto& x : rows[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      GQ f = rows[i][c];
      for (std::size_t j = c; j < rows[r].size(); ++j)
        if (!rows[r][j].is_zero()) submul(rows[i][j], f, rows[r][j]);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<Vec> to_rows(const GMatrix& m) {
  std::vector<Vec> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i] = m.row(i);
  return rows;
}

}  // namespace

GQ& GQ::operator+=(const GQ& o) {
  re += o.re;
  if (!o.is_real()) im += o.im;
  return *this;
}

GQ& GQ::operator-=(const GQ& o) {
  re -= o.re;
  if (!o.is_real()) im -= o.im;
  return *this;
}

GQ& GQ::operator*=(const GQ& o) {
  if (is_real() && o.is_real()) {
    re *= o.re;
    return *this;
  }
  Q r = re * o.re - im * o.im;
  Q i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GQ& GQ::operator/=(const GQ& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.is_real()) {
    re /= o.re;
    if (!is_real()) im /= o.re;
    return *this;
  }
  Q n = o.norm2();
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GQ operator+(GQ a, const GQ& b) { return a += b; }
GQ operator-(GQ a, const GQ& b) { return a -= b; }
GQ operator*(const GQ& a, const GQ& b) {
  GQ r = a;
  r *= b;
  return r;
}
GQ operator/(GQ a, const GQ& b) { return a /= b; }
bool operator==(const GQ& a, const GQ& b) { return a.re == b.re && a.im == b.im; }

std::string GQ::str() const {
  if (is_real()) return rational_str(re);
  if (sgn(re) == 0) return rational_str(im) + "i";
  std::string s = rational_str(re);
  s += sgn(im) > 0 ? "+" : "-";
  s += rational_str(abs(im)) + "i";
  return s;
}

std::complex<double> GQ::to_complex() const { return {re.get_d(), im.get_d()}; }

Q parse_rational(const std::string& s) {
  Q q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rational_str(const Q& q) { return q.get_str(); }

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = GQ(1);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const GQ& x) { return x.is_zero(); });
}

void axpy(Vec& y, const GQ& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) addmul(y[i], a, x[i]);
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] -= b[i];
  return a;
}

Vec operator*(const GQ& s, Vec v) {
  for (auto& x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

Vec conj(Vec v) {
  for (auto& x : v)
    if (!x.is_real()) x.im = -x.im;
  return v;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].str();
  os << "]";
  return os.str();
}

GMatrix::GMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

GMatrix GMatrix::identity(std::size_t n) {
  GMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GQ(1);
  return m;
}

GMatrix GMatrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  GMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
  return m;
}

Vec GMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void GMatrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw std::invalid_argument("set_col: length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Vec GMatrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_),
             a_.begin() + static_cast<long>((i + 1) * cols_));
}

GMatrix GMatrix::adjoint() const {
  GMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

GMatrix GMatrix::transpose() const {
  GMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

GMatrix GMatrix::conj() const {
  GMatrix t = *this;
  for (auto& x : t.a_)
    if (!x.is_real()) x.im = -x.im;
  return t;
}

bool GMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const GQ& x) { return x.is_zero(); });
}

Vec GMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const GQ& x = (*this)(i, j);
      if (!x.is_zero()) addmul(out[i], x, v[j]);
    }
  }
  return out;
}

GMatrix operator*(const GMatrix& a, const GMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  GMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GQ& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GQ& y = b(k, j);
        if (!y.is_zero()) addmul(c(i, j), x, y);
      }
    }
  return c;
}

GMatrix operator+(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  GMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i)
    if (!b.a_[i].is_zero()) c.a_[i] += b.a_[i];
  return c;
}

GMatrix operator-(const GMatrix& a, const GMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  GMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i)
    if (!b.a_[i].is_zero()) c.a_[i] -= b.a_[i];
  return c;
}

GMatrix operator*(const GQ& s, const GMatrix& m) {
  GMatrix c = m;
  for (auto& x : c.a_)
    if (!x.is_zero()) x *= s;
  return c;
}

bool operator==(const GMatrix& a, const GMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

GMatrix kron(const GMatrix& a, const GMatrix& b) {
  GMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

std::size_t rank(const GMatrix& m) {
  auto rows = to_rows(m);
  return rref(rows, m.cols()).size();
}

std::vector<Vec> nullspace(const GMatrix& m) {
  auto rows = to_rows(m);
  auto piv = rref(rows, m.cols());
  std::vector<bool> is_piv(m.cols(), false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(m.cols());
    v[f] = GQ(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<GMatrix> solve(const GMatrix& a, const GMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  std::vector<Vec> rows(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    rows[i] = a.row(i);
    auto br = b.row(i);
    rows[i].insert(rows[i].end(), br.begin(), br.end());
  }
  auto piv = rref(rows, a.cols());
  for (std::size_t r = piv.size(); r < rows.size(); ++r)
    for (std::size_t j = a.cols(); j < rows[r].size(); ++j)
      if (!rows[r][j].is_zero()) return std::nullopt;
  GMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = rows[r][a.cols() + j];
  return x;
}

std::optional<GMatrix> inverse(const GMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, GMatrix::identity(m.rows()));
}

bool is_hermitian(const GMatrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.cols(); ++j)
      if (g(i, j) != g(j, i).conj()) return false;
  return true;
}

bool is_psd_hermitian(const GMatrix& g) {
  if (!is_hermitian(g)) throw std::invalid_argument("is_psd_hermitian: matrix is not Hermitian");
  const std::size_t n = g.rows();
  GMatrix a = g;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !a(i, i).is_zero()) {
        p = i;
        break;
      }
    if (p == n) {
      // all remaining diagonal entries vanish: PSD iff the block is zero
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !a(i, j).is_zero()) return false;
      return true;
    }
    if (sgn(a(p, p).re) < 0) return false;
    done[p] = true;
    GQ d = a(p, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a(i, p).is_zero()) continue;
      GQ f = a(i, p) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && !a(p, j).is_zero()) submul(a(i, j), f, a(p, j));
    }
  }
  return true;
}

bool Subspace::add(Vec v) {
  if (v.size() != dim_) throw std::invalid_argument("Subspace::add: length mismatch");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  GQ inv = GQ(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  for (auto& r : rows_) {
    if (r[p].is_zero()) continue;
    GQ f = r[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (!v[j].is_zero()) submul(r[j], f, v[j]);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("Subspace::reduce: length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p].is_zero()) continue;
    GQ f = v[p];
    const Vec& r = rows_[k];
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) submul(v[j], f, r[j]);
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::vector<std::size_t> Subspace::free_coordinates() const {
  std::vector<bool> piv(dim_, false);
  for (auto p : pivots_) piv[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

Subspace span_of(std::size_t dim, const std::vector<Vec>& vs) {
  Subspace s(dim);
  for (const auto& v : vs) s.add(v);
  return s;
}

GQ GramSpace::inner(const Vec& x, const Vec& y) const {
  Vec gy = gram.apply(y);
  GQ acc;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !gy[i].is_zero()) addmul(acc, x[i].conj(), gy[i]);
  return acc;
}

bool GramSpace::same_class(const Vec& x, const Vec& y) const { return radical.contains(x - y); }

GramSpacePtr radical_quotient(const GMatrix& g) {
  if (!is_hermitian(g)) throw std::domain_error("Gram matrix is not Hermitian");
  if (!is_psd_hermitian(g)) throw std::domain_error("Gram matrix is not positive semidefinite");
  auto s = std::make_shared<GramSpace>();
  s->gram = g;
  s->radical = span_of(g.rows(), nullspace(g));
  s->free_idx = s->radical.free_coordinates();
  return s;
}

bool well_defined(const GramMap& f) {
  for (const auto& r : f.dom->radical.basis())
    if (!f.cod->radical.contains(f.m.apply(r))) return false;
  return true;
}

bool preserves_form(const GramMap& f) { return f.m.adjoint() * f.cod->gram * f.m == f.dom->gram; }

bool quotient_surjective(const GramMap& f) {
  Subspace s = f.cod->radical;
  for (std::size_t j = 0; j < f.m.cols(); ++j) s.add(f.m.col(j));
  return s.rank() == f.cod->dim_ambient();
}

GramMap gram_adjoint(const GramMap& f) {
  // Solve G_dom X = M^H G_cod on the complement of the domain radical.
  const auto& P = f.dom->free_idx;
  GMatrix rhs = f.m.adjoint() * f.cod->gram;
  GMatrix gpp(P.size(), P.size());
  GMatrix rp(P.size(), rhs.cols());
  for (std::size_t a = 0; a < P.size(); ++a) {
    for (std::size_t b = 0; b < P.size(); ++b) gpp(a, b) = f.dom->gram(P[a], P[b]);
    for (std::size_t j = 0; j < rhs.cols(); ++j) rp(a, j) = rhs(P[a], j);
  }
  auto x = solve(gpp, rp);
  if (!x) throw std::domain_error("gram_adjoint: singular quotient form");
  GMatrix out(f.dom->dim_ambient(), f.cod->dim_ambient());
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(P[a], j) = (*x)(a, j);
  return GramMap{f.cod, f.dom, std::move(out)};
}

bool same_on_quotient(const GramSpace& cod, const GMatrix& a, const GMatrix& b) {
  GMatrix d = a - b;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!cod.radical.contains(d.col(j))) return false;
  return true;
}

bool same_on_quotient(const GramMap& f, const GramMap& g) { return same_on_quotient(*f.cod, f.m, g.m); }

std::optional<SpanGap> span_gap(const std::vector<GMatrix>& s1, const std::vector<GMatrix>& s2, const Subspace* mod) {
  auto flat = [&](const GMatrix& m) {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Vec c = m.col(j);
      if (mod) c = mod->reduce(std::move(c));
      v.insert(v.end(), c.begin(), c.end());
    }
    return v;
  };
  std::size_t dim = 0;
  for (const auto* s : {&s1, &s2})
    for (const auto& m : *s) {
      std::size_t d = m.rows() * m.cols();
      if (dim && d != dim) throw std::invalid_argument("span_equal: shape mismatch");
      dim = d;
    }
  if (dim == 0) return std::nullopt;
  std::vector<Vec> f1, f2;
  for (const auto& m : s1) f1.push_back(flat(m));
  for (const auto& m : s2) f2.push_back(flat(m));
  Subspace a(dim), b(dim);
  for (const auto& v : f1) a.add(v);
  for (const auto& v : f2) b.add(v);
  for (std::size_t k = 0; k < f1.size(); ++k)
    if (!b.contains(f1[k])) return SpanGap{true, k};
  for (std::size_t k = 0; k < f2.size(); ++k)
    if (!a.contains(f2[k])) return SpanGap{false, k};
  return std::nullopt;
}

bool span_equal(const std::vector<GMatrix>& s1, const std::vector<GMatrix>& s2, const Subspace* mod) {
  return !span_gap(s1, s2, mod).has_value();
}

}  // namespace dqg
