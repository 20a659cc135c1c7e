#include "dqg/base.hpp"

#include <sstream>

namespace dqg {

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

Vec Base::act(int g, const Vec& b) const {
  Vec out(m());
  for (std::size_t x = 0; x < m(); ++x) out[static_cast<std::size_t>(action[g][x])] = b[x];
  return out;
}

GQ Base::mu(const Vec& b) const {
  GQ s;
  for (std::size_t x = 0; x < m(); ++x)
    if (!b[x].is_zero()) s += GQ(weight[x]) * b[x];
  return s;
}

Vec Base::one() const { return Vec(m(), GQ(1)); }

Vec Base::mul(const Vec& b, const Vec& c) const {
  Vec out(m());
  for (std::size_t x = 0; x < m(); ++x) out[x] = b[x] * c[x];
  return out;
}

Base build_base(const BaseSpec& spec) {
  std::vector<std::string> bad;
  const int n = static_cast<int>(spec.elements.size());
  const int m = static_cast<int>(spec.points.size());
  if (m == 0) bad.push_back("no points");
  if (n == 0) bad.push_back("empty group");
  if (static_cast<int>(spec.table.size()) != n) bad.push_back("multiplication table has wrong size");
  for (const auto& row : spec.table)
    if (static_cast<int>(row.size()) != n) bad.push_back("multiplication table row has wrong size");
  if (static_cast<int>(spec.action.size()) != n) bad.push_back("action table has wrong size");
  for (const auto& row : spec.action)
    if (static_cast<int>(row.size()) != m) bad.push_back("action table row has wrong size");
  if (static_cast<int>(spec.weight.size()) != m) bad.push_back("weight has wrong size");
  if (!bad.empty()) throw ValidationError(bad);
  for (const auto& row : spec.table)
    for (int v : row)
      if (v < 0 || v >= n) bad.push_back("multiplication table entry out of range");
  for (const auto& row : spec.action)
    for (int v : row)
      if (v < 0 || v >= m) bad.push_back("action table entry out of range");
  if (!bad.empty()) throw ValidationError(bad);

  Base b;
  b.points = spec.points;
  b.group.names = spec.elements;
  b.group.table = spec.table;
  b.action = spec.action;
  b.weight = spec.weight;
  Group& g = b.group;

  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d)
        if (g.mul(g.mul(a, c), d) != g.mul(a, g.mul(c, d))) {
          bad.push_back("not associative at (" + g.names[a] + "," + g.names[c] + "," + g.names[d] + ")");
          a = c = d = n;
        }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int c = 0; c < n; ++c) ok = ok && g.mul(a, c) == c && g.mul(c, a) == c;
    if (ok) e = a;
  }
  if (e < 0) {
    bad.push_back("no identity element");
  } else {
    g.e = e;
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        if (g.mul(a, c) == e && g.mul(c, a) == e) g.inv[a] = c;
    for (int a = 0; a < n; ++a)
      if (g.inv[a] < 0) bad.push_back("element " + g.names[a] + " has no inverse");
    bool action_ok = true;
    for (int x = 0; x < m; ++x)
      if (b.action[e][x] != x) action_ok = false;
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c)
        for (int x = 0; x < m; ++x)
          if (b.action[a][b.action[c][x]] != b.action[g.mul(a, c)][x]) action_ok = false;
    if (!action_ok) bad.push_back("not an action");
  }
  for (int x = 0; x < m; ++x)
    if (sgn(spec.weight[x]) <= 0) bad.push_back("weight of point " + spec.points[x] + " is not positive");
  if (!bad.empty()) throw ValidationError(bad);
  return b;
}

Vec Cocycle::d_vec(int g) const {
  Vec v;
  for (const auto& q : d[g]) v.emplace_back(q);
  return v;
}

Vec Cocycle::d_half_vec(int g) const {
  Vec v;
  for (const auto& q : d_half[g]) v.emplace_back(q);
  return v;
}

std::optional<Q> rational_sqrt(const Q& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Q(rn, rd);
}

Cocycle solve_cocycle(const Base& base, const std::optional<std::vector<std::vector<Q>>>& d_half_override) {
  const int n = base.group.size();
  const std::size_t m = base.m();
  Cocycle c;
  c.d.assign(n, std::vector<Q>(m));
  c.d_half.assign(n, std::vector<Q>(m));
  for (int g = 0; g < n; ++g)
    for (std::size_t y = 0; y < m; ++y) {
      // mu(g(delta_y d)) = d(y) mu(g(delta_y)) must equal mu(delta_y)
      GQ lhs = base.mu(base.act(g, base.delta(static_cast<int>(y))));
      GQ rhs = base.mu(base.delta(static_cast<int>(y)));
      c.d[g][y] = (rhs / lhs).re;
    }
  if (d_half_override) {
    const auto& o = *d_half_override;
    if (static_cast<int>(o.size()) != n) throw CocycleError("sqrt_cocycle override has wrong size");
    for (int g = 0; g < n; ++g) {
      if (o[g].size() != m) throw CocycleError("sqrt_cocycle override has wrong size");
      for (std::size_t y = 0; y < m; ++y) {
        if (sgn(o[g][y]) <= 0 || o[g][y] * o[g][y] != c.d[g][y])
          throw CocycleError("sqrt_cocycle override does not square to the cocycle");
        c.d_half[g][y] = o[g][y];
      }
    }
    return c;
  }
  for (int g = 0; g < n; ++g)
    for (std::size_t y = 0; y < m; ++y) {
      auto r = rational_sqrt(c.d[g][y]);
      if (!r) throw CocycleError("no rational square-root cocycle (ratio " + c.d[g][y].get_str() + ")");
      c.d_half[g][y] = *r;
    }
  return c;
}

GMatrix k_gram(const Base& base) {
  GMatrix g(base.m(), base.m());
  for (std::size_t x = 0; x < base.m(); ++x) g(x, x) = GQ(base.weight[x]);
  return g;
}

GMatrix pi_mu(const Base& base, const Vec& b) {
  GMatrix p(base.m(), base.m());
  for (std::size_t x = 0; x < base.m(); ++x) p(x, x) = b[x];
  return p;
}

GMatrix u_gamma(const Base& base, const Cocycle& c, int g) {
  // U_g Lambda(delta_y) = d_half(g)(y) Lambda(delta_{g y})
  GMatrix u(base.m(), base.m());
  for (std::size_t y = 0; y < base.m(); ++y)
    u(static_cast<std::size_t>(base.act_point(g, static_cast<int>(y))), y) = GQ(c.d_half[g][y]);
  return u;
}

Report check_base(const Base& base, const std::optional<Cocycle>& cocycle) {
  Report rep;
  const int n = base.group.size();
  const std::size_t m = base.m();
  const Group& G = base.group;

  rep.run("base.mu-positive", "weight:positive-faithful", [&]() -> Witness {
    for (std::size_t x = 0; x < m; ++x) {
      Vec b = base.delta(static_cast<int>(x));
      if (sgn(base.mu(base.mul(base.star(b), b)).re) <= 0) return "mu(b*b) <= 0 at point " + base.points[x];
    }
    return std::nullopt;
  });

  rep.run("base.pi-mu-star-rep", "gns:pi-mu-star", [&]() -> Witness {
    GMatrix kg = k_gram(base);
    auto K = radical_quotient(kg);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vec b = base.delta(static_cast<int>(x)), c = base.delta(static_cast<int>(y));
        if (!(pi_mu(base, base.mul(b, c)) == pi_mu(base, b) * pi_mu(base, c))) return "pi_mu not multiplicative";
      }
    for (std::size_t x = 0; x < m; ++x) {
      Vec b = base.delta(static_cast<int>(x));
      b[x] = GQ(Q(1), Q(1));
      GramMap p{K, K, pi_mu(base, b)};
      if (!(gram_adjoint(p).m == pi_mu(base, base.star(b)))) return "pi_mu(b)^# != pi_mu(b*) at " + base.points[x];
    }
    return std::nullopt;
  });

  rep.run("base.j-mu-antiunitary", "gns:j-mu", [&]() -> Witness {
    GMatrix kg = k_gram(base);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vec a = base.delta(static_cast<int>(x)), b = base.delta(static_cast<int>(y));
        a[x] = GQ(Q(2), Q(1));
        b[y] += GQ(Q(0), Q(3));
        GramSpace k{kg, Subspace(m), {}};
        GQ lhs = k.inner(conj(a), conj(b));
        if (lhs != k.inner(a, b).conj()) return "J_mu not antiunitary";
        if (conj(conj(a)) != a) return "J_mu not involutive";
      }
    return std::nullopt;
  });

  if (!cocycle) return rep;
  const Cocycle& c = *cocycle;

  rep.run("base.cocycle-defining", "cocycle:defining-equation", [&]() -> Witness {
    for (int g = 0; g < n; ++g)
      for (std::size_t y = 0; y < m; ++y) {
        Vec b = base.delta(static_cast<int>(y));
        if (base.mu(base.act(g, base.mul(b, c.d_vec(g)))) != base.mu(b))
          return "mu(g(b d_g)) != mu(b) for g=" + G.names[g] + ", b=delta_" + base.points[y];
      }
    return std::nullopt;
  });

  rep.run("base.cocycle-unique", "cocycle:uniqueness", [&]() -> Witness {
    // the linear system for d_g is diagonal in the indicator basis
    for (int g = 0; g < n; ++g) {
      GMatrix a(m, m);
      for (std::size_t y = 0; y < m; ++y) a(y, y) = base.mu(base.act(g, base.delta(static_cast<int>(y))));
      if (rank(a) != m) return "cocycle system singular for g=" + G.names[g];
    }
    return std::nullopt;
  });

  rep.run("base.cocycle-law", "cocycle:multiplicative", [&]() -> Witness {
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        Vec lhs = c.d_vec(G.mul(g, h));
        Vec rhs = base.mul(base.act(G.inv[h], c.d_vec(g)), c.d_vec(h));
        if (lhs != rhs) return "d(gh) != h^-1(d(g)) d(h) for g=" + G.names[g] + ", h=" + G.names[h];
      }
    for (int g = 0; g < n; ++g)
      if (base.mul(base.act(G.inv[g], c.d_vec(G.inv[g])), c.d_vec(g)) != base.one())
        return "g^-1(d(g^-1)) d(g) != 1 for g=" + G.names[g];
    return std::nullopt;
  });

  rep.run("base.cocycle-conjugation", "cocycle:conjugation", [&]() -> Witness {
    for (int g = 0; g < n; ++g)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          Vec b = base.delta(static_cast<int>(x)), cc = base.delta(static_cast<int>(y));
          GQ lhs = base.mu(base.mul(base.act(G.inv[g], b), cc));
          GQ rhs = base.mu(base.mul(b, base.act(g, base.mul(cc, c.d_vec(g)))));
          if (lhs != rhs) return "mu(g^-1(b)c) != mu(b g(c d_g)) at g=" + G.names[g];
        }
    return std::nullopt;
  });

  rep.run("base.sqrt-cocycle", "cocycle:square-root", [&]() -> Witness {
    for (std::size_t x = 0; x < m; ++x)
      if (c.d_half[G.e][x] != 1) return std::string("d_half(e) != 1");
    for (int g = 0; g < n; ++g)
      for (std::size_t x = 0; x < m; ++x) {
        if (sgn(c.d_half[g][x]) <= 0) return "d_half not positive at g=" + G.names[g];
        if (c.d_half[g][x] * c.d_half[g][x] != c.d[g][x]) return "d_half^2 != d at g=" + G.names[g];
      }
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h) {
        Vec lhs = c.d_half_vec(G.mul(g, h));
        Vec rhs = base.mul(base.act(G.inv[h], c.d_half_vec(g)), c.d_half_vec(h));
        if (lhs != rhs) return "d_half cocycle law fails for g=" + G.names[g] + ", h=" + G.names[h];
      }
    return std::nullopt;
  });

  rep.run("base.u-gamma", "unitaries:u-gamma", [&]() -> Witness {
    GMatrix kg = k_gram(base);
    for (int g = 0; g < n; ++g) {
      GMatrix u = u_gamma(base, c, g);
      if (!(u.adjoint() * kg * u == kg)) return "U_g not isometric for g=" + G.names[g];
      if (rank(u) != m) return "U_g not surjective for g=" + G.names[g];
      for (std::size_t x = 0; x < m; ++x) {
        Vec b = base.delta(static_cast<int>(x));
        // U pi(b) U^{-1} = pi(g(b))
        if (!(u * pi_mu(base, b) == pi_mu(base, base.act(g, b)) * u))
          return "U_g pi(b) U_g* != pi(g(b)) for g=" + G.names[g];
      }
      for (int h = 0; h < n; ++h)
        if (!(u_gamma(base, c, G.mul(g, h)) == u * u_gamma(base, c, h)))
          return "U_{gh} != U_g U_h for g=" + G.names[g] + ", h=" + G.names[h];
    }
    if (!(u_gamma(base, c, G.e) == GMatrix::identity(m))) return std::string("U_e != 1");
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
