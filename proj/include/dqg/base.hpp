#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dqg/exactlin.hpp"
#include "dqg/report.hpp"

namespace dqg {

// Carries every violated axiom, not just the first one.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

struct Group {
  std::vector<std::string> names;
  std::vector<std::vector<int>> table;
  int e = 0;
  std::vector<int> inv;

  int size() const { return static_cast<int>(names.size()); }
  int mul(int a, int b) const { return table[a][b]; }
};

struct BaseSpec {
  std::vector<std::string> points;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  std::vector<std::vector<int>> action;  // action[g][x] = index of g.x
  std::vector<Q> weight;
};

// Functions on a finite set X with a group acting and a weight w > 0.
// Elements of B are vectors of length |X|.
struct Base {
  std::vector<std::string> points;
  Group group;
  std::vector<std::vector<int>> action;
  std::vector<Q> weight;

  std::size_t m() const { return points.size(); }
  int act_point(int g, int x) const { return action[g][x]; }
  // (g b)(x) = b(g^{-1} x)
  Vec act(int g, const Vec& b) const;
  GQ mu(const Vec& b) const;
  Vec delta(int x) const { return unit(m(), static_cast<std::size_t>(x)); }
  Vec one() const;
  Vec mul(const Vec& b, const Vec& c) const;
  Vec star(const Vec& b) const { return conj(b); }
};

Base build_base(const BaseSpec& spec);

struct Cocycle {
  std::vector<std::vector<Q>> d;       // d[g][x]
  std::vector<std::vector<Q>> d_half;  // d_half[g][x]

  Vec d_vec(int g) const;
  Vec d_half_vec(int g) const;
};

class CocycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves mu(g(b d_g)) = mu(b) on indicator functions and takes rational square
// roots; an explicit d_half override is validated instead of derived.
Cocycle solve_cocycle(const Base& base, const std::optional<std::vector<std::vector<Q>>>& d_half_override = {});
std::optional<Q> rational_sqrt(const Q& q);

// GNS space of (B, mu) and the operators living on it.
GMatrix k_gram(const Base& base);
GMatrix pi_mu(const Base& base, const Vec& b);
GMatrix u_gamma(const Base& base, const Cocycle& c, int g);

Report check_base(const Base& base, const std::optional<Cocycle>& cocycle);

}  // namespace dqg
