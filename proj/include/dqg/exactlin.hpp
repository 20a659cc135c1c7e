#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dqg {

using Q = mpq_class;

// Element of Q(i).
struct GQ {
  Q re;
  Q im;

  GQ() = default;
  GQ(long v) : re(v), im(0) {}
  GQ(const Q& r) : re(r), im(0) {}
  GQ(const Q& r, const Q& i) : re(r), im(i) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GQ conj() const { return GQ(re, -im); }
  Q norm2() const { return re * re + im * im; }

  GQ& operator+=(const GQ& o);
  GQ& operator-=(const GQ& o);
  GQ& operator*=(const GQ& o);
  GQ& operator/=(const GQ& o);
  GQ operator-() const { return GQ(-re, -im); }

  std::string str() const;
  std::complex<double> to_complex() const;
};

GQ operator+(GQ a, const GQ& b);
GQ operator-(GQ a, const GQ& b);
GQ operator*(const GQ& a, const GQ& b);
GQ operator/(GQ a, const GQ& b);
bool operator==(const GQ& a, const GQ& b);
inline bool operator!=(const GQ& a, const GQ& b) { return !(a == b); }

// Accepts "p/q" or an integer; throws std::invalid_argument otherwise.
Q parse_rational(const std::string& s);
std::string rational_str(const Q& q);

using Vec = std::vector<GQ>;

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
void axpy(Vec& y, const GQ& a, const Vec& x);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(const GQ& s, Vec v);
Vec conj(Vec v);
std::string vec_str(const Vec& v);

class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(std::size_t rows, std::size_t cols);
  static GMatrix identity(std::size_t n);
  static GMatrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GQ& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const GQ& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec col(std::size_t j) const;
  void set_col(std::size_t j, const Vec& v);
  Vec row(std::size_t i) const;

  GMatrix adjoint() const;
  GMatrix transpose() const;
  GMatrix conj() const;
  bool is_zero() const;

  // Skips zero entries of the vector, so sparse inputs are cheap.
  Vec apply(const Vec& v) const;

  friend GMatrix operator*(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator+(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator-(const GMatrix& a, const GMatrix& b);
  friend GMatrix operator*(const GQ& s, const GMatrix& m);
  friend bool operator==(const GMatrix& a, const GMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GQ> a_;
};

GMatrix kron(const GMatrix& a, const GMatrix& b);

std::size_t rank(const GMatrix& m);
std::vector<Vec> nullspace(const GMatrix& m);
std::optional<GMatrix> inverse(const GMatrix& m);
// Some X with A X = B, or nullopt when inconsistent.
std::optional<GMatrix> solve(const GMatrix& a, const GMatrix& b);

bool is_hermitian(const GMatrix& g);
// Pivoted LDL^H over Q(i); lowest-index nonzero diagonal pivot first.
bool is_psd_hermitian(const GMatrix& g);

// Span kept in reduced row echelon form. reduce() returns the canonical
// representative of v modulo the span, so two vectors are congruent iff
// their reductions are equal.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool add(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Coordinates that are not pivots; their unit vectors span a complement.
  std::vector<std::size_t> free_coordinates() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace span_of(std::size_t dim, const std::vector<Vec>& vs);

// Inner-product space given by a spanning family and its Gram matrix.
struct GramSpace {
  GMatrix gram;
  Subspace radical;
  std::vector<std::size_t> free_idx;

  std::size_t dim_ambient() const { return gram.rows(); }
  std::size_t quotient_dim() const { return free_idx.size(); }
  GQ inner(const Vec& x, const Vec& y) const;
  Vec normal(const Vec& v) const { return radical.reduce(v); }
  bool same_class(const Vec& x, const Vec& y) const;
};

using GramSpacePtr = std::shared_ptr<const GramSpace>;

// Throws std::domain_error when g is not Hermitian PSD.
GramSpacePtr radical_quotient(const GMatrix& g);

struct GramMap {
  GramSpacePtr dom;
  GramSpacePtr cod;
  GMatrix m;
};

bool well_defined(const GramMap& f);
bool preserves_form(const GramMap& f);
bool quotient_surjective(const GramMap& f);
GramMap gram_adjoint(const GramMap& f);
// Equality of the induced maps between quotients.
bool same_on_quotient(const GramMap& f, const GramMap& g);
bool same_on_quotient(const GramSpace& cod, const GMatrix& a, const GMatrix& b);

// Linear span equality of two operator families; columns are first reduced
// modulo `mod` when given.
bool span_equal(const std::vector<GMatrix>& s1, const std::vector<GMatrix>& s2,
                const Subspace* mod = nullptr);

// First member of one family outside the span of the other.
struct SpanGap {
  bool in_first;  // the member belongs to s1
  std::size_t index;
};

std::optional<SpanGap> span_gap(const std::vector<GMatrix>& s1, const std::vector<GMatrix>& s2,
                                const Subspace* mod = nullptr);

}  // namespace dqg
