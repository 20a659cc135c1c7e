#include "dqg/dual.hpp"

namespace dqg {

namespace {

std::string lbl(const Algebroid& a, std::size_t i) { return a.labels[i]; }

std::string triple_label(const Algebroid& a, std::size_t i, std::size_t j, std::size_t k) {
  return "(" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")";
}

}  // namespace

Vec fourier(const Measured& M, const Vec& x) {
  const Algebroid& A = M.A();
  Vec sx = M.kit->S(x), out(A.n());
  for (std::size_t j = 0; j < A.n(); ++j) out[j] = M.nu(A.mul(sx, A.e(j)));
  return out;
}

Vec fourier_check(const Measured& M, const Vec& x) {
  const Algebroid& A = M.A();
  Vec sx = M.kit->S(x), out(A.n());
  for (std::size_t j = 0; j < A.n(); ++j) out[j] = M.nu(A.mul(A.e(j), sx));
  return out;
}

Vec convolve_right(const Measured& M, const Vec& a, const Vec& x) {
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  Vec sx = M.kit->S(x);
  return sweedler(M.kit->delta(a), n, n, n, [&](std::size_t p, std::size_t q) {
    return A.mul(A.e(q), A.r(M.psi(A.mul(sx, A.e(p)))));
  });
}

Vec convolve_right_modular(const Measured& M, const Vec& a, const Vec& x) {
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  Vec tx = M.theta_Db().apply(M.kit->S(x));
  return sweedler(M.kit->delta(a), n, n, n, [&](std::size_t p, std::size_t q) {
    return A.mul(A.r(M.psi(A.mul(A.e(p), tx))), A.e(q));
  });
}

Vec convolve_right_strong(const Measured& M, const Vec& a, const Vec& x) {
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  return sweedler(M.kit->delta(x), n, n, n, [&](std::size_t p, std::size_t q) {
    return A.mul(A.e(p), A.s(M.psi(A.mul(M.kit->S(A.e(q)), a))));
  });
}

Vec convolve_left(const Measured& M, const Vec& x, const Vec& a) {
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  Vec sx = M.kit->S(x);
  return sweedler(M.kit->delta(a), n, n, n, [&](std::size_t p, std::size_t q) {
    return A.mul(A.s(M.phi(A.mul(A.e(q), sx))), A.e(p));
  });
}

Vec dual_mul(const Measured& M, const Vec& x, const Vec& y) { return convolve_right(M, y, x); }

Vec dual_star(const Measured& M, const Vec& x) { return M.A().star(M.kit->S(x)); }

Vec dual_r_left(const Measured& M, const Vec& b, const Vec& x) { return M.A().mul(x, M.A().r(b)); }
Vec dual_r_right(const Measured& M, const Vec& x, const Vec& b) { return M.A().mul(x, M.A().s(b)); }
Vec dual_s_left(const Measured& M, const Vec& b, const Vec& x) { return M.A().mul(M.A().r(b), x); }
Vec dual_s_right(const Measured& M, const Vec& x, const Vec& b) { return M.A().mul(M.A().s(b), x); }

GMatrix fourier_matrix(const Measured& M) {
  const std::size_t n = M.n();
  GMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = fourier(M, M.A().e(i));
    for (std::size_t j = 0; j < n; ++j) f(i, j) = row[j];
  }
  return f;
}

Report check_dual(const Measured& M) {
  Report rep;
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const Group& G = B.group;
  const HopfKit& K = *M.kit;
  const std::size_t n = A.n(), m = B.m();
  auto e = [&](std::size_t i) { return A.e(i); };
  auto pt = [&](std::size_t x) { return B.delta(static_cast<int>(x)); };

  // Convolution tables on basis pairs, reused by several checks.
  std::vector<Vec> conv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) conv[i * n + j] = convolve_right(M, e(i), e(j));
  auto cv = [&](std::size_t a, std::size_t x) -> const Vec& { return conv[a * n + x]; };
  auto conv_by = [&](const Vec& a, std::size_t x) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!a[i].is_zero()) axpy(out, a[i], cv(i, x));
    return out;
  };

  rep.run("dual.fourier-injective", "fourier:bijective", [&]() -> Witness {
    std::size_t r = rank(fourier_matrix(M));
    if (r != n) return "Fourier transform has rank " + std::to_string(r) + " < " + std::to_string(n);
    return std::nullopt;
  });

  rep.run("dual.fourier-slices", "fourier:module-slices", [&]() -> Witness {
    const GMatrix& th = M.th();
    for (std::size_t i = 0; i < n; ++i) {
      Vec sx = K.S(e(i)), tsx = th.apply(sx);
      Vec fx = fourier(M, e(i)), cx = fourier_check(M, e(i));
      for (std::size_t j = 0; j < n; ++j) {
        Vec p = A.mul(sx, e(j)), q = A.mul(e(j), tsx);
        if (B.mu(M.psi(p)) != fx[j] || B.mu(M.phi(p)) != fx[j])
          return "x^ differs from mu o psi(S(x) -) or mu o phi(S(x) -) at " + pair_label(A, i, j);
        if (B.mu(M.psi(q)) != fx[j] || B.mu(M.phi(q)) != fx[j])
          return "x^ differs from mu o psi(- theta(S(x))) at " + pair_label(A, i, j);
        if (cx[j] != M.nu(A.mul(e(j), sx))) return "x-check differs from nu(- S(x)) at " + pair_label(A, i, j);
      }
    }
    return std::nullopt;
  });

  rep.run("dual.convolution-forms", "convolution:alternative-forms", [&]() -> Witness {
    for (std::size_t x = 0; x < n; ++x) {
      Vec sx = K.S(e(x));
      auto f = [&](const Vec& t) {
        return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
          return A.mul(e(q), A.r(M.psi(A.mul(sx, e(p)))));
        });
      };
      if (auto w = K.lift_independent("a * " + lbl(A, x) + "^", f)) return w;
      for (std::size_t a = 0; a < n; ++a) {
        if (convolve_right_modular(M, e(a), e(x)) != cv(a, x))
          return "sum r(psi(a1 theta_Dbar(S(x))))a2 != a * x^ at " + pair_label(A, a, x);
        if (convolve_right_strong(M, e(a), e(x)) != cv(a, x))
          return "sum x1 s(psi(S(x2)a)) != a * x^ at " + pair_label(A, a, x);
      }
    }
    return std::nullopt;
  });

  rep.run("dual.convolution-module", "convolution:module-laws", [&]() -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t p = 0; p < m; ++p) {
          Vec b = pt(p);
          const std::string at = pair_label(A, a, x) + " with point " + B.points[p];
          if (convolve_right(M, A.mul(A.r(b), e(a)), e(x)) != convolve_right(M, e(a), A.mul(A.s(b), e(x))))
            return "r(b)a * x^ != a * (s(b)x)^ at " + at;
          if (convolve_right(M, A.mul(e(a), A.r(b)), e(x)) != convolve_right(M, e(a), A.mul(e(x), A.s(b))))
            return "a r(b) * x^ != a * (x s(b))^ at " + at;
          if (convolve_right(M, A.mul(A.s(b), e(a)), e(x)) != A.mul(A.s(b), cv(a, x)))
            return "s(b)a * x^ != s(b)(a * x^) at " + at;
          if (convolve_right(M, A.mul(e(a), A.s(b)), e(x)) != A.mul(cv(a, x), A.s(b)))
            return "a s(b) * x^ != (a * x^)s(b) at " + at;
        }
    return std::nullopt;
  });

  rep.run("dual.convolution-product", "convolution:associativity", [&]() -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < n; ++x) {
        const Vec& ax = cv(a, x);
        for (std::size_t y = 0; y < n; ++y) {
          Vec lhs = conv_by(ax, y);
          Vec rhs = convolve_right(M, e(a), cv(x, y));
          if (lhs != rhs) return "(a * x^) * y^ != a * (x * y^)^ at " + triple_label(A, a, x, y);
        }
      }
    return std::nullopt;
  });

  rep.run("dual.convolution-grading", "convolution:grading", [&]() -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t x = 0; x < n; ++x) {
        const Vec& c = cv(a, x);
        if (is_zero(c)) continue;
        if (A.d[a] != A.db[x]) return "a * x^ nonzero although the degrees do not match at " + pair_label(A, a, x);
        auto dg = A.degree(c);
        if (!dg || dg->first != A.d[x] || dg->second != A.db[a])
          return "a * x^ has the wrong degree at " + pair_label(A, a, x);
      }
    return std::nullopt;
  });

  bool phi_s_is_psi = true;
  for (std::size_t i = 0; i < n && phi_s_is_psi; ++i)
    if (M.phi(K.S(e(i))) != M.psi(e(i))) phi_s_is_psi = false;
  if (phi_s_is_psi) {
    rep.run("dual.convolution-left", "convolution:left-antipode", [&]() -> Witness {
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x)
          if (convolve_left(M, K.S(e(x)), K.S(e(a))) != K.S(cv(a, x)))
            return "S(x)-check * S(a) != S(a * x^) at " + pair_label(A, a, x);
      return std::nullopt;
    });
  }

  rep.run("dual.algebra-associative", "dual-algebra:associative", [&]() -> Witness {
    // (x^ y^) z^ has preimage z * (y * x^)^, and x^ (y^ z^) has (z * y^) * x^
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Vec& yx = cv(y, x);
        for (std::size_t z = 0; z < n; ++z) {
          Vec lhs = convolve_right(M, e(z), yx);
          Vec rhs = conv_by(cv(z, y), x);
          if (lhs != rhs) return "(x^ y^) z^ != x^ (y^ z^) at " + triple_label(A, x, y, z);
        }
      }
    return std::nullopt;
  });

  rep.run("dual.involution", "dual-algebra:involution", [&]() -> Witness {
    for (std::size_t x = 0; x < n; ++x)
      if (dual_star(M, dual_star(M, e(x))) != e(x)) return "x^** != x^ at " + lbl(A, x);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        // (y^ x^)^* = x^* y^*
        Vec lhs = dual_star(M, dual_mul(M, e(y), e(x)));
        Vec rhs = dual_mul(M, dual_star(M, e(x)), dual_star(M, e(y)));
        if (lhs != rhs) return "(y^ x^)^* != x^* y^* at " + pair_label(A, x, y);
      }
    return std::nullopt;
  });

  rep.run("dual.grading", "dual-algebra:grading", [&]() -> Witness {
    for (std::size_t x = 0; x < n; ++x) {
      auto ds = A.degree(dual_star(M, e(x)));
      if (!ds || ds->first != A.db[x] || ds->second != A.d[x]) return "(x^)^* has the wrong degree at " + lbl(A, x);
      for (std::size_t y = 0; y < n; ++y) {
        Vec p = dual_mul(M, e(x), e(y));
        if (is_zero(p)) continue;
        if (A.db[x] != A.d[y]) return "x^ y^ nonzero although the degrees do not match at " + pair_label(A, x, y);
        auto dg = A.degree(p);
        if (!dg || dg->first != A.d[x] || dg->second != A.db[y]) return "x^ y^ has the wrong degree at " + pair_label(A, x, y);
      }
    }
    return std::nullopt;
  });

  rep.run("dual.base-maps", "dual-algebra:base-maps", [&]() -> Witness {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t p = 0; p < m; ++p) {
        Vec b = pt(p), bs = B.star(b);
        const std::string at = lbl(A, x) + " with point " + B.points[p];
        for (std::size_t y = 0; y < n; ++y) {
          // y^ (r^(b) x^) = (y^ r^(b)) x^ and the same for s^
          if (dual_mul(M, e(y), dual_r_left(M, b, e(x))) != dual_mul(M, dual_r_right(M, e(y), b), e(x)))
            return "r^(b) is not a multiplier at " + pair_label(A, y, x) + " with point " + B.points[p];
          if (dual_mul(M, e(y), dual_s_left(M, b, e(x))) != dual_mul(M, dual_s_right(M, e(y), b), e(x)))
            return "s^(b) is not a multiplier at " + pair_label(A, y, x) + " with point " + B.points[p];
        }
        if (dual_star(M, dual_r_right(M, e(x), b)) != dual_r_left(M, bs, dual_star(M, e(x))))
          return "(x^ r^(b))^* != r^(b^*) x^* at " + at;
        if (dual_star(M, dual_s_right(M, e(x), b)) != dual_s_left(M, bs, dual_star(M, e(x))))
          return "(x^ s^(b))^* != s^(b^*) x^* at " + at;
        for (std::size_t q = 0; q < m; ++q) {
          Vec c = pt(q);
          if (dual_r_left(M, b, dual_s_left(M, c, e(x))) != dual_s_left(M, c, dual_r_left(M, b, e(x))))
            return "r^ and s^ do not commute at " + at;
        }
        if (dual_r_left(M, b, e(x)) != dual_s_left(M, B.act(A.d[x], b), e(x)))
          return "r^(b) x^ != s^(gamma(b)) x^ at " + at;
        if (dual_r_right(M, e(x), b) != dual_s_right(M, e(x), B.act(A.db[x], b)))
          return "x^ r^(b) != x^ s^(gamma'(b)) at " + at;
      }
    return std::nullopt;
  });

  rep.run("dual.twist-laws", "dual-algebra:twist-laws", [&]() -> Witness {
    for (std::size_t x = 0; x < n; ++x) {
      int g = A.d[x], gp = A.db[x];
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          Vec b = pt(p), bp = pt(q);
          const std::string at = lbl(A, x) + " with points " + B.points[p] + ", " + B.points[q];
          Vec lhs = dual_r_left(M, b, dual_s_left(M, bp, e(x)));
          Vec rhs = dual_r_left(M, B.act(G.inv[g], bp), dual_s_left(M, B.act(g, b), e(x)));
          if (lhs != rhs) return "(b (x) b') x^ != (gamma^-1(b') (x) gamma(b)) x^ at " + at;
          lhs = dual_s_right(M, dual_r_right(M, e(x), b), bp);
          rhs = dual_s_right(M, dual_r_right(M, e(x), B.act(G.inv[gp], bp)), B.act(gp, b));
          if (lhs != rhs) return "x^ (b (x) b') != x^ (gamma'^-1(b') (x) gamma'(b)) at " + at;
        }
    }
    return std::nullopt;
  });

  rep.run("dual.nondegenerate", "dual-algebra:nondegenerate", [&]() -> Witness {
    Subspace diag(n), all(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        all.add(cv(x, y));
        if (A.d[x] == A.db[x]) diag.add(dual_mul(M, e(x), e(y)));
      }
    if (all.rank() != n) return "A * A^ spans a subspace of dimension " + std::to_string(all.rank());
    if (diag.rank() != n) return "<(sum of A^{g,g}) A^> has dimension " + std::to_string(diag.rank());
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
