#include "dqg/integrals.hpp"

#include <random>

namespace dqg {

namespace {

std::string lbl(const Algebroid& a, std::size_t i) { return a.labels[i]; }

GMatrix columns(std::size_t rows, std::size_t n, const std::function<Vec(std::size_t)>& f) {
  GMatrix out(rows, n);
  for (std::size_t i = 0; i < n; ++i) out.set_col(i, f(i));
  return out;
}

Vec inv_entries(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = GQ(1) / v[i];
  return out;
}

// b (x) b' in coordinates x*m + y
Vec btensor(const Vec& b, const Vec& c) { return tensor(b, c); }

}  // namespace

GQ Measured::nu(const Vec& x) const {
  GQ s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * nu_row[i];
  return s;
}

GQ Measured::nu_inv(const Vec& x) const {
  GQ s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s += x[i] * nuinv_row[i];
  return s;
}

const GMatrix& Measured::th() const {
  if (!theta) throw std::domain_error("nu is not faithful; no modular automorphism");
  return *theta;
}

const GMatrix& Measured::th_inv() const {
  if (!theta_inv) throw std::domain_error("modular automorphism is not invertible");
  return *theta_inv;
}

std::optional<GMatrix> solve_theta(const GMatrix& nu_pair) {
  // N T = N^T with N[i][j] = nu(e_i e_j) and T the matrix of theta
  auto inv = inverse(nu_pair);
  if (!inv) return std::nullopt;
  return *inv * nu_pair.transpose();
}

void refresh_derived(Measured& M) {
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const std::size_t n = A.n(), m = B.m();
  M.phi_m = GMatrix::from_columns(m, M.integ.phi);
  M.psi_m = GMatrix::from_columns(m, M.integ.psi);
  M.h_m = M.integ.h ? GMatrix::from_columns(m * m, *M.integ.h) : GMatrix();
  M.nu_row = Vec(n);
  M.nuinv_row = Vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    M.nu_row[i] = B.mu(M.integ.phi[i]);
    M.nuinv_row[i] = B.mu(M.integ.psi[i]);
  }
  M.nu_gram = GMatrix(n, n);
  M.nu_pair = GMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec si = A.star(A.e(i));
    for (std::size_t j = 0; j < n; ++j) {
      M.nu_gram(i, j) = M.nu(A.mul(si, A.e(j)));
      M.nu_pair(i, j) = M.nu(A.basis_mul(i, j));
    }
  }
  M.theta = solve_theta(M.nu_pair);
  M.theta_inv = M.theta ? inverse(*M.theta) : std::nullopt;

  const Group& G = B.group;
  auto twist = [&](bool left, bool half, bool inv) {
    return columns(n, n, [&](std::size_t i) {
      int g = G.inv[left ? A.d[i] : A.db[i]];
      Vec f = half ? M.coc.d_half_vec(g) : M.coc.d_vec(g);
      if (inv) f = inv_entries(f);
      return A.mul(left ? A.r(f) : A.s(f), A.e(i));
    });
  };
  M.D = twist(true, false, false);
  M.D_inv = twist(true, false, true);
  M.Db = twist(false, false, false);
  M.Db_inv = twist(false, false, true);
  M.Dh = twist(true, true, false);
  M.Dh_inv = twist(true, true, true);
  M.Dbh = twist(false, true, false);
  M.Dbh_inv = twist(false, true, true);
}

Measured build_measured(HopfKitPtr kit, IntegralData integ, Cocycle coc) {
  Measured M;
  M.kit = std::move(kit);
  M.integ = std::move(integ);
  M.coc = std::move(coc);
  const std::size_t n = M.n(), m = M.m();
  std::vector<std::string> bad;
  if (M.integ.phi.size() != n || M.integ.psi.size() != n) bad.push_back("integral tables need one entry per basis element");
  for (const auto& v : M.integ.phi)
    if (v.size() != m) bad.push_back("phi entry has wrong length");
  for (const auto& v : M.integ.psi)
    if (v.size() != m) bad.push_back("psi entry has wrong length");
  if (M.integ.h) {
    if (M.integ.h->size() != n) bad.push_back("h needs one entry per basis element");
    for (const auto& v : *M.integ.h)
      if (v.size() != m * m) bad.push_back("h entry has wrong length");
  }
  if (!bad.empty()) throw ValidationError(bad);
  refresh_derived(M);
  return M;
}

std::pair<Vec, Vec> constructive_pair(const Measured& M, const Vec& c, const Vec& d) {
  const Algebroid& A = M.A();
  const HopfKit& K = *M.kit;
  const std::size_t n = A.n();
  // a = sum Dbar(s(psi(d S(c2))) c1)
  Vec a = sweedler(K.delta(c), n, n, n, [&](std::size_t p, std::size_t q) {
    return M.Db.apply(A.mul(A.s(M.psi(A.mul(d, K.S(A.e(q))))), A.e(p)));
  });
  // a' = sum d2 r(phi(D(S(d1)) Dbar(c)))
  Vec Dbc = M.Db.apply(c);
  Vec ap = sweedler(K.delta(d), n, n, n, [&](std::size_t p, std::size_t q) {
    return A.mul(A.e(q), A.r(M.phi(A.mul(M.D.apply(K.S(A.e(p))), Dbc))));
  });
  return {a, ap};
}

Report check_integrals(const Measured& M, int constructive_samples, unsigned seed) {
  Report rep;
  const HopfKit& K = *M.kit;
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const Group& G = B.group;
  const std::size_t n = A.n(), m = B.m();
  auto e = [&](std::size_t i) { return A.e(i); };

  auto module_law = [&](const char* name, const GMatrix& w, bool use_r) -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      Vec wi = w.apply(e(i));
      if ((A.d[i] != G.e || A.db[i] != G.e) && !is_zero(wi))
        return std::string(name) + " nonzero off degree (e,e) at " + lbl(A, i);
      for (std::size_t x = 0; x < m; ++x) {
        Vec b = B.delta(static_cast<int>(x));
        Vec lhs = w.apply(A.mul(use_r ? A.r(b) : A.s(b), e(i)));
        if (lhs != B.mul(b, wi)) return std::string(name) + " not B-linear at " + lbl(A, i) + ", point " + B.points[x];
      }
    }
    return std::nullopt;
  };
  rep.run("integrals.phi-module", "left-integral:module-map", [&] { return module_law("phi", M.phi_m, true); });
  rep.run("integrals.psi-module", "right-integral:module-map", [&] { return module_law("psi", M.psi_m, false); });

  auto left_f = [&](const Vec& t) {
    return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) { return A.mul(A.s(M.phi(e(q))), e(p)); });
  };
  auto right_f = [&](const Vec& t) {
    return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) { return A.mul(e(q), A.r(M.psi(e(p)))); });
  };
  rep.run("integrals.left-invariant", "left-integral:invariance", [&]() -> Witness {
    if (auto w = K.lift_independent("(Id (x) phi)Delta", left_f)) return w;
    for (std::size_t i = 0; i < n; ++i) {
      Vec l = left_f(K.delta_e(i));
      Vec r = A.r(M.phi(e(i)));
      for (std::size_t j = 0; j < n; ++j)
        if (A.mul(l, e(j)) != A.mul(r, e(j))) return "x = " + lbl(A, i) + ", a = " + lbl(A, j);
    }
    return std::nullopt;
  });
  rep.run("integrals.right-invariant", "right-integral:invariance", [&]() -> Witness {
    if (auto w = K.lift_independent("(psi (x) Id)Delta", right_f)) return w;
    for (std::size_t i = 0; i < n; ++i) {
      Vec l = right_f(K.delta_e(i));
      Vec r = A.s(M.psi(e(i)));
      for (std::size_t j = 0; j < n; ++j)
        if (A.mul(e(j), l) != A.mul(e(j), r)) return "x = " + lbl(A, i) + ", a = " + lbl(A, j);
    }
    return std::nullopt;
  });

  rep.run("integrals.measured", "measured:faithful-positive", [&]() -> Witness {
    if (M.nu_row != M.nuinv_row) return std::string("mu o phi != mu o psi");
    if (!is_hermitian(M.nu_gram)) return std::string("nu Gram matrix is not Hermitian");
    if (!is_psd_hermitian(M.nu_gram)) return std::string("nu is not positive");
    if (rank(M.nu_gram) != n) return std::string("nu is not faithful");
    if (rank(M.phi_m) != m) return std::string("phi is not surjective");
    if (rank(M.psi_m) != m) return std::string("psi is not surjective");
    return std::nullopt;
  });

  rep.run("integrals.star-linear", "measured:star-linear", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      Vec s = A.star(e(i));
      if (M.phi(s) != conj(M.phi(e(i)))) return "phi(x*) != phi(x)* at " + lbl(A, i);
      if (M.psi(s) != conj(M.psi(e(i)))) return "psi(x*) != psi(x)* at " + lbl(A, i);
      if (M.has_h() && M.h(s) != conj(M.h(e(i)))) return "h(x*) != h(x)* at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("integrals.bimodule-trace", "integrals:base-trace", [&]() -> Witness {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vec rs = A.mul(A.r_img[x], A.s_img[y]);
        for (std::size_t i = 0; i < n; ++i) {
          Vec l = A.mul(rs, e(i)), r = A.mul(e(i), rs);
          if (M.phi(l) != M.phi(r) || M.psi(l) != M.psi(r) || M.nu(l) != M.nu(r))
            return "omega(r(b)s(b')a) != omega(a r(b)s(b')) at " + lbl(A, i);
        }
      }
    return std::nullopt;
  });

  rep.run("integrals.dtwist-trace", "integrals:twist-trace", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec l1 = A.mul(M.D.apply(e(i)), e(j)), r1 = A.mul(e(i), M.D_inv.apply(e(j)));
        Vec l2 = A.mul(M.Db.apply(e(i)), e(j)), r2 = A.mul(e(i), M.Db_inv.apply(e(j)));
        if (M.phi(l1) != M.phi(r1) || M.psi(l1) != M.psi(r1) || M.nu(l1) != M.nu(r1))
          return "omega(D(a)a') != omega(a D^-1(a')) at " + pair_label(A, i, j);
        if (M.phi(l2) != M.phi(r2) || M.psi(l2) != M.psi(r2) || M.nu(l2) != M.nu(r2))
          return "omega(Dbar(a)a') != omega(a Dbar^-1(a')) at " + pair_label(A, i, j);
      }
    return std::nullopt;
  });

  // strong invariance: x1 s(phi(z x2)) = S(z1) r(phi(z2 x)), r(psi(x1 z)) x2 = s(psi(x z1)) S(z2)
  rep.run("integrals.strong-invariance-phi", "strong-invariance:left", [&]() -> Witness {
    for (std::size_t z = 0; z < n; ++z) {
      auto lf = [&](const Vec& t) {
        return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
          return A.mul(e(p), A.s(M.phi(A.basis_mul(z, q))));
        });
      };
      if (auto w = K.lift_independent("x1 s(phi(z x2))", lf)) return w;
      for (std::size_t x = 0; x < n; ++x) {
        auto rf = [&](const Vec& t) {
          return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
            return A.mul(K.S(e(p)), A.r(M.phi(A.basis_mul(q, x))));
          });
        };
        if (x == 0)
          if (auto w = K.lift_independent("S(z1) r(phi(z2 x))", rf)) return w;
        if (lf(K.delta_e(x)) != rf(K.delta_e(z))) return "x = " + lbl(A, x) + ", z = " + lbl(A, z);
      }
    }
    return std::nullopt;
  });
  rep.run("integrals.strong-invariance-psi", "strong-invariance:right", [&]() -> Witness {
    for (std::size_t z = 0; z < n; ++z) {
      auto lf = [&](const Vec& t) {
        return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
          return A.mul(A.r(M.psi(A.basis_mul(p, z))), e(q));
        });
      };
      if (auto w = K.lift_independent("r(psi(x1 z)) x2", lf)) return w;
      for (std::size_t x = 0; x < n; ++x) {
        auto rf = [&](const Vec& t) {
          return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
            return A.mul(A.s(M.psi(A.basis_mul(x, p))), K.S(e(q)));
          });
        };
        if (x == 0)
          if (auto w = K.lift_independent("s(psi(x z1)) S(z2)", rf)) return w;
        if (lf(K.delta_e(x)) != rf(K.delta_e(z))) return "x = " + lbl(A, x) + ", z = " + lbl(A, z);
      }
    }
    return std::nullopt;
  });

  rep.run("integrals.antipode-integrals", "integrals:antipode-exchange", [&]() -> Witness {
    GMatrix phiS = M.phi_m * K.data().antipode;
    auto rf = [&](const Vec& t) {
      return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) { return A.mul(e(q), A.r(phiS.apply(e(p)))); });
    };
    if (auto w = K.lift_independent("(phi S (x) Id)Delta", rf)) return w;
    for (std::size_t i = 0; i < n; ++i)
      if (rf(K.delta_e(i)) != A.s(phiS.apply(e(i)))) return "phi o S is not a right integral at " + lbl(A, i);
    for (std::size_t i = 0; i < n; ++i)
      if (M.nu(K.S(e(i))) != M.nu(e(i))) return "nu o S != nu at " + lbl(A, i);
    if (M.has_h())
      for (std::size_t i = 0; i < n; ++i)
        if (phiS.apply(e(i)) != M.psi(e(i))) return "phi o S != psi at " + lbl(A, i);
    return std::nullopt;
  });

  rep.run("integrals.theta-modular", "modular-automorphism:kms", [&]() -> Witness {
    const GMatrix& T = M.th();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (M.nu(A.basis_mul(i, j)) != M.nu(A.mul(e(j), T.apply(e(i)))))
          return "nu(xy) != nu(y theta(x)) at " + pair_label(A, i, j);
    return std::nullopt;
  });

  rep.run("integrals.theta-automorphism", "modular-automorphism:properties", [&]() -> Witness {
    const GMatrix& T = M.th();
    const GMatrix& Ti = M.th_inv();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (T.apply(A.basis_mul(i, j)) != A.mul(T.apply(e(i)), T.apply(e(j))))
          return "theta not multiplicative at " + pair_label(A, i, j);
    for (std::size_t i = 0; i < n; ++i) {
      Vec ti = T.apply(e(i));
      if (M.nu(ti) != M.nu(e(i))) return "nu o theta != nu at " + lbl(A, i);
      if (T.apply(A.star(T.apply(A.star(e(i))))) != e(i)) return "theta * theta * != Id at " + lbl(A, i);
      if (!is_zero(ti)) {
        auto deg = A.degree(ti);
        if (!deg || deg->first != A.d[i] || deg->second != A.db[i]) return "theta changes the degree of " + lbl(A, i);
      }
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
          Vec rs = A.mul(A.r_img[x], A.s_img[y]);
          if (T.apply(A.mul(rs, e(i))) != A.mul(rs, ti)) return "theta not B (x) B-linear at " + lbl(A, i);
        }
      if (M.nu(K.S(e(i))) == M.nu(e(i)) && T.apply(K.S(e(i))) != K.S(Ti.apply(e(i))))
        return "theta S != S theta^-1 at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("integrals.d-twists", "modular-cocycle:twists", [&]() -> Witness {
    const FiberProduct& fp = K.fp();
    GMatrix I = GMatrix::identity(n);
    if (M.D * M.D_inv != I || M.Db * M.Db_inv != I || M.Dh * M.Dh_inv != I || M.Dbh * M.Dbh_inv != I)
      return std::string("twist inverses are wrong");
    if (M.Dh * M.Dh != M.D || M.Dbh * M.Dbh != M.Db) return std::string("square roots do not square to D, Dbar");
    if (M.D * M.Db != M.Db * M.D) return std::string("D Dbar != Dbar D");
    const GMatrix& S = K.data().antipode;
    if (S * M.D != M.Db_inv * S) return std::string("S D != Dbar^-1 S");
    if (S * M.Db != M.D_inv * S) return std::string("S Dbar != D^-1 S");
    for (std::size_t i = 0; i < n; ++i) {
      if (A.star(M.D.apply(e(i))) != M.D_inv.apply(A.star(e(i)))) return "* D != D^-1 * at " + lbl(A, i);
      if (A.star(M.Db.apply(e(i))) != M.Db_inv.apply(A.star(e(i)))) return "* Dbar != Dbar^-1 * at " + lbl(A, i);
      for (std::size_t j = 0; j < n; ++j) {
        if (M.D.apply(A.basis_mul(i, j)) != A.mul(M.D.apply(e(i)), M.D.apply(e(j))))
          return "D not multiplicative at " + pair_label(A, i, j);
        if (M.Db.apply(A.basis_mul(i, j)) != A.mul(M.Db.apply(e(i)), M.Db.apply(e(j))))
          return "Dbar not multiplicative at " + pair_label(A, i, j);
      }
    }
    auto leg = [&](const GMatrix& l, const GMatrix& r) {
      return [&l, &r, n](const Vec& t) {
        return sweedler(t, n, n, n * n, [&](std::size_t p, std::size_t q) { return tensor(l.apply(unit(n, p)), r.apply(unit(n, q))); });
      };
    };
    auto DI = leg(M.D, I), IDb = leg(I, M.Db), DbI = leg(M.Db, I), ID = leg(I, M.D);
    for (auto* f : {&DI, &IDb, &DbI, &ID})
      if (auto w = K.lift_independent("twist (x) twist", *f, &fp.rel)) return w;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec t = K.delta_e(i);
      if (!fp.same(DI(t), K.delta(M.D.apply(e(i))))) return "(D (x) Id)Delta != Delta D at " + lbl(A, i);
      if (!fp.same(IDb(t), K.delta(M.Db.apply(e(i))))) return "(Id (x) Dbar)Delta != Delta Dbar at " + lbl(A, i);
      if (!fp.same(DbI(t), ID(t))) return "(Dbar (x) Id)Delta != (Id (x) D)Delta at " + lbl(A, i);
    }
    if (M.theta && M.theta_D() * M.D != *M.theta) return std::string("theta != theta_D D");
    if (M.theta && M.D * M.theta_D() != *M.theta) return std::string("theta != D theta_D");
    return std::nullopt;
  });

  rep.run("integrals.modular-phi", "modular-integrals:phi", [&]() -> Witness {
    GMatrix tD = M.theta_D();
    for (std::size_t i = 0; i < n; ++i) {
      if (M.phi(M.th().apply(e(i))) != M.phi(e(i))) return "phi o theta != phi at " + lbl(A, i);
      Vec ti = tD.apply(e(i));
      for (std::size_t j = 0; j < n; ++j)
        if (M.phi(A.basis_mul(i, j)) != B.act(A.d[i], M.phi(A.mul(e(j), ti))))
          return "phi(xy) != d_x(phi(y theta_D(x))) at " + pair_label(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("integrals.modular-psi", "modular-integrals:psi", [&]() -> Witness {
    GMatrix tDb = M.theta_Db();
    for (std::size_t i = 0; i < n; ++i) {
      if (M.psi(M.th().apply(e(i))) != M.psi(e(i))) return "psi o theta != psi at " + lbl(A, i);
      Vec ti = tDb.apply(e(i));
      for (std::size_t j = 0; j < n; ++j)
        if (M.psi(A.basis_mul(i, j)) != B.act(A.db[i], M.psi(A.mul(e(j), ti))))
          return "psi(xy) != dbar_x(psi(y theta_Dbar(x))) at " + pair_label(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("integrals.modular-delta", "modular-automorphism:comultiplication", [&]() -> Witness {
    const FiberProduct& fp = K.fp();
    GMatrix tD = M.theta_D();
    GMatrix S2 = K.data().antipode * K.data().antipode;
    auto f = [&](const Vec& t) {
      return sweedler(t, n, n, n * n, [&](std::size_t p, std::size_t q) { return tensor(S2.apply(e(p)), tD.apply(e(q))); });
    };
    if (auto w = K.lift_independent("S^2 (x) theta_D", f, &fp.rel)) return w;
    for (std::size_t i = 0; i < n; ++i)
      if (!fp.same(K.delta(tD.apply(e(i))), f(K.delta_e(i)))) return "Delta theta_D != (S^2 (x) theta_D) Delta at " + lbl(A, i);
    return std::nullopt;
  });

  rep.run("integrals.constructive-elements", "modular-automorphism:construction", [&]() -> Witness {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < constructive_samples; ++s) {
      Vec c(n), d(n);
      for (std::size_t i = 0; i < n; ++i) {
        c[i] = GQ(Q(coef(rng)), Q(coef(rng)));
        d[i] = GQ(Q(coef(rng)), Q(coef(rng)));
      }
      auto [a, ap] = constructive_pair(M, c, d);
      for (std::size_t z = 0; z < n; ++z)
        if (M.nu(A.mul(e(z), a)) != M.nu(A.mul(ap, e(z))))
          return "sample " + std::to_string(s) + ": nu(z a) != nu(a' z) at z = " + lbl(A, z);
    }
    // lift independence of the construction on basis inputs
    for (std::size_t dj = 0; dj < n; ++dj) {
      auto fa = [&](const Vec& t) {
        return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) {
          return M.Db.apply(A.mul(A.s(M.psi(A.mul(e(dj), K.S(e(q))))), e(p)));
        });
      };
      if (auto w = K.lift_independent("constructive element a", fa)) return w;
    }
    return std::nullopt;
  });

  if (!M.has_h()) return rep;

  rep.run("integrals.h-module", "bi-integral:module-map", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      Vec hi = M.h(e(i));
      if ((A.d[i] != G.e || A.db[i] != G.e) && !is_zero(hi)) return "h nonzero off degree (e,e) at " + lbl(A, i);
      for (std::size_t x = 0; x < m; ++x) {
        Vec b = B.delta(static_cast<int>(x));
        if (M.h(A.mul(A.r(b), e(i))) != kron(pi_mu(B, b), GMatrix::identity(m)).apply(hi))
          return "h(r(b)a) != (b (x) 1)h(a) at " + lbl(A, i);
        if (M.h(A.mul(A.s(b), e(i))) != kron(GMatrix::identity(m), pi_mu(B, b)).apply(hi))
          return "h(s(b)a) != (1 (x) b)h(a) at " + lbl(A, i);
      }
    }
    return std::nullopt;
  });

  rep.run("integrals.h-normalized", "bi-integral:normalization", [&]() -> Witness {
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (M.h(A.mul(A.r_img[x], A.s_img[y])) != btensor(B.delta(static_cast<int>(x)), B.delta(static_cast<int>(y))))
          return "h(r(b)s(b')) != b (x) b' at points " + B.points[x] + ", " + B.points[y];
    return std::nullopt;
  });

  rep.run("integrals.h-kernel", "bi-integral:kernel-coideal", [&]() -> Witness {
    const FiberProduct& fp = K.fp();
    auto ker = nullspace(M.h_m);
    Subspace left = fp.rel, right = fp.rel;
    for (const auto& k : ker)
      for (std::size_t j = 0; j < n; ++j) {
        left.add(tensor(k, e(j)));
        right.add(tensor(e(j), k));
      }
    for (const auto& k : ker) {
      Vec t = K.delta(k);
      for (std::size_t u = 0; u < n; ++u) {
        if (A.d[u] != G.e || A.db[u] != G.e) continue;
        Vec tr = sweedler(t, n, n, n * n, [&](std::size_t p, std::size_t q) { return tensor(e(p), A.basis_mul(q, u)); });
        Vec tl = sweedler(t, n, n, n * n, [&](std::size_t p, std::size_t q) { return tensor(A.basis_mul(p, u), e(q)); });
        if (!left.contains(tr)) return "Delta(ker h)(1 (x) " + lbl(A, u) + ") not in ker h (x) A";
        if (!right.contains(tl)) return "Delta(ker h)(" + lbl(A, u) + " (x) 1) not in A (x) ker h";
      }
    }
    return std::nullopt;
  });

  // (r . s) on B (x) B and the multiplication m_B
  auto rs_of = [&](const Vec& bb) {
    Vec out(n);
    for (std::size_t k = 0; k < m * m; ++k)
      if (!bb[k].is_zero()) axpy(out, bb[k], A.mul(A.r_img[k / m], A.s_img[k % m]));
    return out;
  };
  auto mB = [&](const Vec& bb) {
    Vec out(m);
    for (std::size_t x = 0; x < m; ++x) out[x] = bb[x * m + x];
    return out;
  };

  rep.run("integrals.h-slices", "bi-integral:slices", [&]() -> Witness {
    auto fl = [&](const Vec& t) {
      return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) { return A.mul(A.s(mB(M.h(e(q)))), e(p)); });
    };
    auto fr = [&](const Vec& t) {
      return sweedler(t, n, n, n, [&](std::size_t p, std::size_t q) { return A.mul(A.r(mB(M.h(e(p)))), e(q)); });
    };
    if (auto w = K.lift_independent("(Id (x) m_B h)Delta", fl)) return w;
    if (auto w = K.lift_independent("(m_B h (x) Id)Delta", fr)) return w;
    for (std::size_t i = 0; i < n; ++i) {
      Vec want = rs_of(M.h(e(i)));
      if (fl(K.delta_e(i)) != want) return "(Id (x) m_B h)Delta != h at " + lbl(A, i);
      if (fr(K.delta_e(i)) != want) return "(m_B h (x) Id)Delta != h at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("integrals.h-antipode", "bi-integral:antipode-flip", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      Vec hs = M.h(K.S(e(i))), hi = M.h(e(i)), flip(m * m);
      for (std::size_t k = 0; k < m * m; ++k) flip[(k % m) * m + k / m] = hi[k];
      if (hs != flip) return "h o S != flip o h at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("integrals.h-integrals", "bi-integral:partial-integrals", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      Vec hi = M.h(e(i)), l(m), r(m);
      GQ tot;
      for (std::size_t k = 0; k < m * m; ++k) {
        if (hi[k].is_zero()) continue;
        l[k / m] += hi[k] * GQ(B.weight[k % m]);
        r[k % m] += hi[k] * GQ(B.weight[k / m]);
        tot += hi[k] * GQ(B.weight[k / m] * B.weight[k % m]);
      }
      if (l != M.phi(e(i))) return "phi != (Id (x) mu) h at " + lbl(A, i);
      if (r != M.psi(e(i))) return "psi != (mu (x) Id) h at " + lbl(A, i);
      if (tot != M.nu(e(i))) return "nu != (mu (x) mu) h at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("integrals.h-theta", "modular-integrals:bi-integral", [&]() -> Witness {
    GMatrix t = M.theta_DDb();
    for (std::size_t i = 0; i < n; ++i) {
      if (M.h(M.th().apply(e(i))) != M.h(e(i))) return "h o theta != h at " + lbl(A, i);
      Vec ti = t.apply(e(i));
      for (std::size_t j = 0; j < n; ++j) {
        Vec rhs = M.h(A.mul(e(j), ti)), moved(m * m);
        for (std::size_t k = 0; k < m * m; ++k) {
          if (rhs[k].is_zero()) continue;
          int x = B.act_point(A.d[i], static_cast<int>(k / m));
          int y = B.act_point(A.db[i], static_cast<int>(k % m));
          moved[static_cast<std::size_t>(x) * m + static_cast<std::size_t>(y)] += rhs[k];
        }
        if (M.h(A.basis_mul(i, j)) != moved) return "h(xy) != (d (x) dbar)(h(y theta_D,Dbar(x))) at " + pair_label(A, i, j);
      }
    }
    return std::nullopt;
  });

  rep.run("integrals.h-unique", "bi-integral:uniqueness", [&]() -> Witness {
    // unknown H[k][i] at k*n + i; homogeneous versions of the linear conditions
    const std::size_t U = m * m * n;
    std::vector<Vec> rows;
    auto var = [&](std::size_t k, std::size_t i) { return k * n + i; };
    for (std::size_t i = 0; i < n; ++i)
      if (A.d[i] != G.e || A.db[i] != G.e)
        for (std::size_t k = 0; k < m * m; ++k) {
          Vec r(U);
          r[var(k, i)] = GQ(1);
          rows.push_back(r);
        }
    // H(r(b_x) s(b_y)) = 0
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        Vec a = A.mul(A.r_img[x], A.s_img[y]);
        for (std::size_t k = 0; k < m * m; ++k) {
          Vec r(U);
          for (std::size_t i = 0; i < n; ++i)
            if (!a[i].is_zero()) r[var(k, i)] += a[i];
          rows.push_back(r);
        }
      }
    // (Id (x) m_B H)Delta(e_i) = (r.s)(H(e_i)), coordinatewise in A
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Vec> lhs(n, Vec(U));  // output coordinate -> row
      const Vec& t = K.delta_e(i);
      for (std::size_t p = 0; p < n * n; ++p) {
        if (t[p].is_zero()) continue;
        std::size_t a = p / n, b = p % n;
        for (std::size_t x = 0; x < m; ++x) {
          Vec v = A.mul(A.s_img[x], e(a));
          for (std::size_t o = 0; o < n; ++o)
            if (!v[o].is_zero()) lhs[o][var(x * m + x, b)] += t[p] * v[o];
        }
      }
      for (std::size_t k = 0; k < m * m; ++k) {
        Vec v = A.mul(A.r_img[k / m], A.s_img[k % m]);
        for (std::size_t o = 0; o < n; ++o)
          if (!v[o].is_zero()) lhs[o][var(k, i)] -= v[o];
      }
      for (auto& r : lhs) rows.push_back(r);
    }
    GMatrix sys(rows.size(), U);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < U; ++c) sys(r, c) = rows[r][c];
    auto ns = nullspace(sys);
    if (!ns.empty()) return "normalized bi-integral conditions leave " + std::to_string(ns.size()) + " free parameters";
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
