#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dqg/base.hpp"

namespace dqg {

using BasePtr = std::shared_ptr<const Base>;

struct Term {
  std::size_t k;
  GQ c;
};

struct MultTriple {
  std::size_t i, j, k;
  GQ c;
};

struct AlgebraSpec {
  std::vector<std::string> basis;
  std::vector<std::pair<int, int>> grading;
  std::vector<MultTriple> mult;
  std::vector<std::pair<std::size_t, Vec>> star;  // star(e_i) as a full vector
  std::vector<Vec> r;                             // r(delta_x)
  std::vector<Vec> s;                             // s(delta_x)
};

// Finite-dimensional bigraded *-algebra with commuting embeddings r, s of B.
// Every basis element is homogeneous of degree (d[i], db[i]).
struct Algebroid {
  BasePtr base;
  std::vector<std::string> labels;
  std::vector<int> d;
  std::vector<int> db;
  std::vector<std::vector<Term>> mult;  // index i*n+j
  GMatrix star_m;                       // column j is star(e_j)
  std::vector<Vec> r_img;
  std::vector<Vec> s_img;

  std::size_t n() const { return labels.size(); }
  const Group& group() const { return base->group; }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec basis_mul(std::size_t i, std::size_t j) const;
  Vec star(const Vec& a) const;
  Vec r(const Vec& b) const;
  Vec s(const Vec& b) const;
  Vec one() const;
  Vec e(std::size_t i) const { return unit(n(), i); }
  GMatrix left_mul(const Vec& a) const;
  GMatrix right_mul(const Vec& a) const;
  // Degree of a nonzero homogeneous element.
  std::optional<std::pair<int, int>> degree(const Vec& a) const;
};

using AlgebroidPtr = std::shared_ptr<const Algebroid>;

// Structural validation only (shapes, ranges); axioms go through check_algebroid.
Algebroid build_algebra(BasePtr base, const AlgebraSpec& spec);
Report check_algebroid(const Algebroid& a, const std::string& prefix = "algebra");

// Crossed product B x| Gamma on basis delta_x g, index g*m + x.
Algebroid crossed_product(BasePtr base);
AlgebraSpec crossed_product_spec(const Base& base);
AlgebraSpec spec_of(const Algebroid& a);
std::size_t cp_index(const Base& base, int g, int x);

Algebroid opposite(const Algebroid& a);
Algebroid coopposite(const Algebroid& a);
bool same_tables(const Algebroid& a, const Algebroid& b);

Vec tensor(const Vec& a, const Vec& b);
Vec tensor3(const Vec& a, const Vec& b, const Vec& c);

// Apply a bilinear map given on basis pairs to t in the tensor square.
template <class F>
Vec sweedler(const Vec& t, std::size_t n1, std::size_t n2, std::size_t out_dim, F&& f) {
  Vec out(out_dim);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) {
      const GQ& c = t[i * n2 + j];
      if (!c.is_zero()) axpy(out, c, f(i, j));
    }
  return out;
}

template <class F>
Vec sweedler3(const Vec& t, std::size_t n, std::size_t out_dim, F&& f) {
  Vec out(out_dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const GQ& c = t[(i * n + j) * n + k];
        if (!c.is_zero()) axpy(out, c, f(i, j, k));
      }
  return out;
}

enum class Side { Left, Right };
enum class Emb { R, S };

// Module structure of one tensor factor: r or s multiplied on the given side.
struct ModTag {
  Side side;
  Emb emb;
};

std::string tag_name(ModTag t, bool left_factor);
Vec module_act(const Algebroid& a, ModTag t, const Vec& x, const Vec& b);

struct BalancedTensor {
  ModTag left;
  ModTag right;
  std::size_t n = 0;
  Subspace rel;

  std::size_t quotient_dim() const { return n * n - rel.rank(); }
  Vec project(const Vec& v) const { return rel.reduce(v); }
  bool same(const Vec& u, const Vec& v) const { return rel.contains(u - v); }
};

BalancedTensor balanced_tensor(const Algebroid& a, ModTag left, ModTag right);

// (L (x)^Gamma R) / I with I generated by s(b) (x) 1 - 1 (x) r(b).
struct FiberProduct {
  std::size_t nl = 0;
  std::size_t nr = 0;
  std::vector<bool> graded;
  Subspace rel;
  std::vector<std::size_t> basis;  // quotient basis: graded, non-pivot coordinates

  std::size_t quotient_dim() const { return basis.size(); }
  Vec project(const Vec& v) const { return rel.reduce(v); }
  bool in_graded(const Vec& v) const;
  bool same(const Vec& u, const Vec& v) const { return rel.contains(u - v); }
};

// Generator s(delta_x) e_i (x) e_j - e_i (x) r(delta_x) e_j of the ideal, on a graded pair.
struct FiberRelation {
  std::size_t i;
  std::size_t j;
  std::size_t x;
  Vec v;
};

std::vector<FiberRelation> fiber_relations(const Algebroid& l, const Algebroid& r);
// Names the generator for witnesses: "(e_i, e_j) at point x".
std::string relation_label(const Algebroid& l, const Algebroid& r, const FiberRelation& g);

FiberProduct fiber_product(const Algebroid& l, const Algebroid& r);
// The fiber product as an algebroid on its quotient basis.
Algebroid fiber_product_algebroid(const Algebroid& l, const Algebroid& r, const FiberProduct& fp);
// Coordinates of an ambient vector on the quotient basis, after projection.
Vec fp_coords(const FiberProduct& fp, const Vec& v);

struct TripleFiber {
  std::size_t n = 0;
  std::vector<bool> graded;
  Subspace rel;

  std::size_t quotient_dim() const;
  Vec project(const Vec& v) const { return rel.reduce(v); }
  bool same(const Vec& u, const Vec& v) const { return rel.contains(u - v); }
};

TripleFiber triple_fiber(const Algebroid& a);

Report check_fiber_product(const Algebroid& a, const FiberProduct& fp);

std::string pair_label(const Algebroid& a, std::size_t i, std::size_t j);

}  // namespace dqg
