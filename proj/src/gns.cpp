#include "dqg/gns.hpp"

#include <stdexcept>

namespace dqg {

std::string rep_name(Rep r) {
  switch (r) {
    case Rep::Alpha: return "alpha";
    case Rep::Beta: return "beta";
    case Rep::AlphaHat: return "alpha^";
    case Rep::BetaHat: return "beta^";
  }
  return "?";
}

Gns::Gns(const Measured& M) : M_(M) {
  K_ = radical_quotient(k_gram(M.B()));
  H_ = radical_quotient(M.nu_gram);
  auto ki = inverse(K_->gram);
  auto hi = inverse(H_->gram);
  if (!ki || !hi) throw std::domain_error("GNS Gram matrix is singular");
  k_inv_ = std::move(*ki);
  h_inv_ = std::move(*hi);
}

GMatrix Gns::lam(const Vec& x, bool use_r, bool left) const {
  const Algebroid& A = M_.A();
  GMatrix out(A.n(), M_.m());
  for (std::size_t p = 0; p < M_.m(); ++p) {
    Vec b = M_.B().delta(static_cast<int>(p));
    Vec e = use_r ? A.r(b) : A.s(b);
    out.set_col(p, left ? A.mul(e, x) : A.mul(x, e));
  }
  return out;
}

GMatrix Gns::lam_phi(const Vec& x) const { return lam(x, true, false); }
GMatrix Gns::lam_psi(const Vec& x) const { return lam(x, false, false); }
GMatrix Gns::lam_phi_dag(const Vec& x) const { return lam(x, true, true); }
GMatrix Gns::lam_psi_dag(const Vec& x) const { return lam(x, false, true); }

GMatrix Gns::pi_mu(const Vec& b) const { return dqg::pi_mu(M_.B(), b); }
GMatrix Gns::pi_nu(const Vec& a) const { return M_.A().left_mul(a); }

GMatrix Gns::rep(Rep r, const Vec& b) const {
  const Algebroid& A = M_.A();
  switch (r) {
    case Rep::Alpha: return A.left_mul(A.r(b));
    case Rep::Beta: return A.left_mul(A.s(b));
    case Rep::AlphaHat: return A.right_mul(A.s(b));
    case Rep::BetaHat: return A.right_mul(A.r(b));
  }
  throw std::logic_error("unknown representation");
}

GMatrix Gns::R(Rep r, const Vec& x) const {
  switch (r) {
    case Rep::Alpha: return lam_phi_dag(x);
    case Rep::Beta: return lam_psi_dag(x);
    case Rep::AlphaHat: return lam_psi(x);
    case Rep::BetaHat: return lam_phi(x);
  }
  throw std::logic_error("unknown representation");
}

Vec Gns::inner_b(Rep r, const Vec& x, const Vec& y) const {
  const Algebroid& A = M_.A();
  Vec xs = A.star(x);
  switch (r) {
    case Rep::Alpha: return M_.phi(A.mul(y, M_.th().apply(xs)));
    case Rep::Beta: return M_.psi(A.mul(y, M_.th().apply(xs)));
    case Rep::AlphaHat: return M_.psi(A.mul(xs, y));
    case Rep::BetaHat: return M_.phi(A.mul(xs, y));
  }
  throw std::logic_error("unknown representation");
}

GMatrix Gns::adj_kh(const GMatrix& x) const { return k_inv_ * (x.adjoint() * H_->gram); }
GMatrix Gns::adj_hk(const GMatrix& x) const { return h_inv_ * (x.adjoint() * K_->gram); }
GMatrix Gns::adj_h(const GMatrix& x) const { return h_inv_ * (x.adjoint() * H_->gram); }
GMatrix Gns::adj_k(const GMatrix& x) const { return k_inv_ * (x.adjoint() * K_->gram); }

namespace {

std::string point_label(const Base& B, std::size_t p) { return "point " + B.points[p]; }

}  // namespace

Report check_gns(const Measured& M) {
  Report rep;
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const std::size_t n = A.n(), m = B.m();
  auto e = [&](std::size_t i) { return A.e(i); };
  auto pt = [&](std::size_t p) { return B.delta(static_cast<int>(p)); };

  std::optional<Gns> gns;
  std::string build_error;
  try {
    gns.emplace(M);
  } catch (const std::exception& ex) {
    build_error = ex.what();
  }

  rep.run("gns.spaces", "gns:spaces", [&]() -> Witness {
    if (!gns) return "GNS spaces not built: " + build_error;
    if (!is_psd_hermitian(gns->K()->gram)) return std::string("K Gram is not Hermitian PSD");
    if (!is_psd_hermitian(gns->H()->gram)) return std::string("H Gram is not Hermitian PSD");
    if (gns->K()->radical.rank() != 0) return std::string("K Gram is singular");
    if (gns->H()->radical.rank() != 0) return std::string("H Gram is singular");
    return std::nullopt;
  });
  if (!gns) return rep;
  const Gns& G = *gns;

  rep.run("gns.pi-nu-star", "gns:pi-nu-star", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(G.adj_h(G.pi_nu(e(i))) == G.pi_nu(A.star(e(i))))) return "pi_nu(x)^# != pi_nu(x^*) at " + A.labels[i];
      for (std::size_t j = 0; j < n; ++j)
        if (!(G.pi_nu(A.basis_mul(i, j)) == G.pi_nu(e(i)) * G.pi_nu(e(j))))
          return "pi_nu not multiplicative at " + pair_label(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("gns.lambda-identities", "lambda:identities", [&]() -> Witness {
    const GMatrix& th = M.th();
    for (std::size_t i = 0; i < n; ++i) {
      Vec xs = A.star(e(i)), txs = th.apply(xs);
      GMatrix lp = G.lam_phi(e(i)), ls = G.lam_psi(e(i)), lpd = G.lam_phi_dag(e(i)), lsd = G.lam_psi_dag(e(i));
      GMatrix lpa = G.adj_kh(lp), lsa = G.adj_kh(ls), lpda = G.adj_kh(lpd), lsda = G.adj_kh(lsd);
      for (std::size_t p = 0; p < m; ++p) {
        Vec b = pt(p);
        const std::string at = A.labels[i] + ", " + point_label(B, p);
        if (lp.col(p) != A.mul(e(i), A.r(b))) return "Lambda_phi(x)Lambda_mu(b) != Lambda_nu(x r(b)) at " + at;
        if (ls.col(p) != A.mul(e(i), A.s(b))) return "Lambda_psi(x)Lambda_mu(b) != Lambda_nu(x s(b)) at " + at;
        if (lpd.col(p) != A.mul(A.r(b), e(i))) return "Lambda_phi^dag(x)Lambda_mu(b) != Lambda_nu(r(b)x) at " + at;
        if (lsd.col(p) != A.mul(A.s(b), e(i))) return "Lambda_psi^dag(x)Lambda_mu(b) != Lambda_nu(s(b)x) at " + at;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const std::string at = pair_label(A, i, j);
        Vec xy = A.mul(xs, e(j)), yt = A.mul(e(j), txs);
        if (lpa.col(j) != M.phi(xy)) return "Lambda_phi(x)^# Lambda_nu(y) != Lambda_mu(phi(x^*y)) at " + at;
        if (lsa.col(j) != M.psi(xy)) return "Lambda_psi(x)^# Lambda_nu(y) != Lambda_mu(psi(x^*y)) at " + at;
        if (lpda.col(j) != M.phi(yt)) return "Lambda_phi^dag(x)^# Lambda_nu(y) != Lambda_mu(phi(y theta(x^*))) at " + at;
        if (lsda.col(j) != M.psi(yt)) return "Lambda_psi^dag(x)^# Lambda_nu(y) != Lambda_mu(psi(y theta(x^*))) at " + at;
        if (!(lpa * G.lam_phi(e(j)) == G.pi_mu(M.phi(xy))))
          return "Lambda_phi(x)^# Lambda_phi(y) != pi_mu(phi(x^*y)) at " + at;
        if (!(lsa * G.lam_psi(e(j)) == G.pi_mu(M.psi(xy))))
          return "Lambda_psi(x)^# Lambda_psi(y) != pi_mu(psi(x^*y)) at " + at;
        if (!(lpda * G.lam_phi_dag(e(j)) == G.pi_mu(M.phi(yt))))
          return "Lambda_phi^dag(x)^# Lambda_phi^dag(y) != pi_mu(phi(y theta(x^*))) at " + at;
        if (!(lsda * G.lam_psi_dag(e(j)) == G.pi_mu(M.psi(yt))))
          return "Lambda_psi^dag(x)^# Lambda_psi^dag(y) != pi_mu(psi(y theta(x^*))) at " + at;
      }
    }
    return std::nullopt;
  });

  auto inner_cocycle = [&](bool use_phi) -> Witness {
    const GMatrix& half = use_phi ? M.Dh : M.Dbh;
    for (std::size_t i = 0; i < n; ++i) {
      int g = use_phi ? A.d[i] : A.db[i];
      GMatrix u = u_gamma(B, M.coc, B.group.inv[g]);
      Vec hx = half.apply(e(i));
      GMatrix lhs = (use_phi ? G.lam_phi(e(i)) : G.lam_psi(e(i))) * u;
      GMatrix rhs = use_phi ? G.lam_phi_dag(hx) : G.lam_psi_dag(hx);
      if (!(lhs == rhs))
        return std::string(use_phi ? "Lambda_phi(x)U != Lambda_phi^dag(D^1/2(x))" : "Lambda_psi(x)U != Lambda_psi^dag(Dbar^1/2(x))") +
               " at " + A.labels[i];
      Rep r = use_phi ? Rep::Alpha : Rep::Beta;
      GMatrix ra = G.adj_kh(G.R(r, hx));
      Vec xs = A.star(e(i));
      for (std::size_t j = 0; j < n; ++j) {
        Vec hy = half.apply(e(j));
        Vec w = use_phi ? M.phi(A.mul(xs, e(j))) : M.psi(A.mul(xs, e(j)));
        if (!(ra * G.R(r, hy) == G.pi_mu(B.act(g, w))))
          return "<Lambda_nu(D^1/2 x)|Lambda_nu(D^1/2 y)>_" + rep_name(r) + " != pi_mu(shifted integral) at " +
                 pair_label(A, i, j);
      }
    }
    return std::nullopt;
  };
  rep.run("gns.inner-phi", "lambda:inner-phi", [&]() { return inner_cocycle(true); });
  rep.run("gns.inner-psi", "lambda:inner-psi", [&]() { return inner_cocycle(false); });

  rep.run("gns.representations", "representations:formulas", [&]() -> Witness {
    Vec one = B.one();
    for (Rep r : kReps) {
      if (!(G.rep(r, one) == GMatrix::identity(n))) return rep_name(r) + "(1) != Id";
      for (std::size_t p = 0; p < m; ++p) {
        Vec b = pt(p);
        GMatrix op = G.rep(r, b);
        const std::string at = rep_name(r) + " at " + point_label(B, p);
        if (!(G.adj_h(op) == G.rep(r, B.star(b)))) return "rep(b)^# != rep(b^*) for " + at;
        for (std::size_t q = 0; q < m; ++q)
          if (!(op * G.rep(r, pt(q)) == G.rep(r, B.mul(b, pt(q))))) return "rep not multiplicative for " + at;
        // rho_E(x) xi = xi x for xi in the module space
        for (std::size_t i = 0; i < n; ++i)
          if (!(op * G.R(r, e(i)) == G.R(r, e(i)) * G.pi_mu(b)))
            return "rep(b) R(x) != R(x) pi_mu(b) for " + at + ", " + A.labels[i];
      }
    }
    return std::nullopt;
  });

  rep.run("gns.commutators", "representations:commuting", [&]() -> Witness {
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t c = a + 1; c < 4; ++c)
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q) {
            GMatrix x = G.rep(kReps[a], pt(p)), y = G.rep(kReps[c], pt(q));
            if (!(x * y == y * x))
              return "[" + rep_name(kReps[a]) + ", " + rep_name(kReps[c]) + "] != 0 at points " + B.points[p] + ", " +
                     B.points[q];
          }
    return std::nullopt;
  });

  rep.run("gns.module-spans", "representations:cstar-modules", [&]() -> Witness {
    std::vector<GMatrix> pis;
    for (std::size_t p = 0; p < m; ++p) pis.push_back(G.pi_mu(pt(p)));
    for (Rep r : kReps) {
      std::vector<GMatrix> E, EB, EE;
      Subspace cols(n);
      for (std::size_t i = 0; i < n; ++i) {
        GMatrix op = G.R(r, e(i));
        E.push_back(op);
        for (std::size_t p = 0; p < m; ++p) {
          EB.push_back(op * pis[p]);
          cols.add(op.col(p));
        }
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EE.push_back(G.adj_kh(E[i]) * E[j]);
      if (cols.rank() != n) return "[E K] != H for " + rep_name(r);
      if (!span_equal(EB, E)) return "[E pi_mu(B)] != E for " + rep_name(r);
      if (!span_equal(EE, pis)) return "[E^* E] != [pi_mu(B)] for " + rep_name(r);
      for (Rep f : kReps) {
        if (f == r) continue;
        std::vector<GMatrix> F, RF;
        for (std::size_t i = 0; i < n; ++i) {
          F.push_back(G.R(f, e(i)));
          for (std::size_t p = 0; p < m; ++p) RF.push_back(G.rep(r, pt(p)) * F.back());
        }
        if (!span_equal(RF, F)) return "[rho_E(pi_mu(B)) F] != F for E of " + rep_name(r) + ", F of " + rep_name(f);
      }
    }
    return std::nullopt;
  });

  rep.run("gns.bounded-vectors", "bounded:r-operators", [&]() -> Witness {
    for (Rep r : kReps)
      for (std::size_t i = 0; i < n; ++i) {
        GMatrix R = G.R(r, e(i)), Ra = G.adj_kh(R);
        for (std::size_t p = 0; p < m; ++p)
          if (R.col(p) != G.rep(r, pt(p)).apply(e(i)))
            return "R Lambda_mu(b) != rep(b) Lambda_nu(x) for " + rep_name(r) + " at " + A.labels[i];
        for (std::size_t j = 0; j < n; ++j) {
          GMatrix ip = G.inner(r, e(i), e(j));
          if (!(Ra * G.R(r, e(j)) == ip))
            return "<x|y>_" + rep_name(r) + " differs from its closed form at " + pair_label(A, i, j);
          if (Ra.col(j) != ip.apply(B.one()))
            return "R_x^# y != Lambda_mu(<x|y>) for " + rep_name(r) + " at " + pair_label(A, i, j);
        }
      }
    return std::nullopt;
  });

  rep.run("gns.bounded-commutant", "bounded:commutant", [&]() -> Witness {
    for (Rep r : kReps) {
      bool left = r == Rep::Alpha || r == Rep::Beta;
      for (std::size_t k = 0; k < n; ++k) {
        GMatrix T = left ? A.right_mul(e(k)) : G.pi_nu(e(k));
        for (std::size_t p = 0; p < m; ++p) {
          GMatrix op = G.rep(r, pt(p));
          if (!(T * op == op * T)) return "test operator is not in the commutant of " + rep_name(r);
        }
        for (std::size_t i = 0; i < n; ++i)
          if (!(G.R(r, T.apply(e(i))) == T * G.R(r, e(i))))
            return "R_{T x} != T R_x for " + rep_name(r) + " at " + pair_label(A, k, i);
      }
    }
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
