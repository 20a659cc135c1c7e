#include "dqg/modular.hpp"

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <stdexcept>

namespace dqg {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string basis_pair(const Algebroid& A, std::size_t i, std::size_t j) { return "(" + A.labels[i] + ", " + A.labels[j] + ")"; }

}  // namespace

Tomita build_tomita(const Measured& M, double tol) {
  Tomita T;
  const GMatrix& G = M.nu_gram;
  T.S_sharp = M.A().star_m;
  auto gi = inverse(G);
  if (!gi) throw std::domain_error("nu is degenerate");
  // <S w|S v> = v^H (S^H G S)^T w
  T.delta = *gi * (T.S_sharp.adjoint() * G * T.S_sharp).transpose();

  SqrtResult root = numeric_psd_sqrt(G, tol);
  if (!root.ok) throw std::domain_error("square root of the Gram of H has residual " + fmt(root.residual));
  T.frame = root.root;
  T.frame_inv = T.frame.inverse();
  CMat s_on = T.frame * to_numeric(T.S_sharp) * T.frame_inv.conjugate();
  CMat d_on = T.frame * to_numeric(T.delta) * T.frame_inv;
  CMat d_herm = (d_on + d_on.adjoint()) / 2.0;
  SqrtResult droot = numeric_psd_sqrt(d_herm, tol);
  if (!droot.ok) throw std::domain_error("square root of Delta_nu has residual " + fmt(droot.residual));
  T.sqrt_residual = std::max(root.residual, droot.residual);
  // S = J Delta^1/2, so J u = S_on conj(Delta^-1/2 u).
  T.J = s_on * droot.root.inverse().conjugate();
  return T;
}

CMat in_frame(const Tomita& T, const GMatrix& x) { return T.frame * to_numeric(x) * T.frame_inv; }

CMat j_conjugate(const Tomita& T, const GMatrix& x) {
  // u |-> J conj(X^* J conj(u)) = J conj(X^*) conj(J) u, and conj(X^H) = X^T.
  return T.J * in_frame(T, x).transpose() * T.J.conjugate();
}

std::optional<Vec> pi_nu_preimage(const Measured& M, const GMatrix& x) {
  const Algebroid& A = M.A();
  Vec a = x.apply(A.one());
  if (!(A.left_mul(a) == x)) return std::nullopt;
  return a;
}

std::optional<GMatrix> phi_tilde(const Measured& M, const GMatrix& x) {
  auto a = pi_nu_preimage(M, x);
  if (!a) return std::nullopt;
  return pi_mu(M.B(), M.phi(*a));
}

std::optional<GMatrix> psi_tilde(const Measured& M, const GMatrix& x) {
  auto a = pi_nu_preimage(M, x);
  if (!a) return std::nullopt;
  return pi_mu(M.B(), M.psi(*a));
}

GMatrix iota(const Measured& M) {
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const std::size_t m = B.m();
  GMatrix out(A.n(), m * m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      out.set_col(p * m + q, A.mul(A.r(B.delta(static_cast<int>(p))), A.s(B.delta(static_cast<int>(q)))));
  return out;
}

Report check_modular(const Fundamental& F, double tol) {
  Report rep;
  const Gns& G = F.gns();
  const Measured& M = F.measured();
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const HopfKit& kit = *M.kit;
  const std::size_t n = A.n(), m = B.m();
  auto e = [&](std::size_t i) { return A.e(i); };
  auto pt = [&](std::size_t p) { return B.delta(static_cast<int>(p)); };
  const GMatrix& th = M.th();
  const GMatrix& th_inv = M.th_inv();

  std::optional<Tomita> tom;
  std::string tomita_error;
  try {
    tom = build_tomita(M, tol);
  } catch (const std::exception& ex) {
    tomita_error = ex.what();
  }

  rep.run("modular.pre-closed", "tomita:pre-closed", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec xs = A.star(e(i)), ys = A.star(e(j));
        if (M.nu(A.mul(xs, ys)) != M.nu(A.mul(ys, th.apply(xs))))
          return "<x|y^*> != <y|theta(x^*)> at " + basis_pair(A, i, j);
      }
    return std::nullopt;
  });

  rep.run("modular.operator", "tomita:modular-operator", [&]() -> Witness {
    if (!tom) return "Tomita data not built: " + tomita_error;
    if (!(tom->delta == th)) return std::string("Delta_nu Lambda_nu(a) != Lambda_nu(theta(a))");
    GMatrix gd = M.nu_gram * tom->delta;
    if (!is_psd_hermitian(gd)) return std::string("Delta_nu is not a positive operator");
    return std::nullopt;
  });

  rep.run("modular.integer-times", "tomita:integer-times", [&]() -> Witness {
    if (!tom) return "Tomita data not built: " + tomita_error;
    const GMatrix& d = tom->delta;
    auto di = inverse(d);
    if (!di) return std::string("Delta_nu is singular");
    GMatrix dn = d, dni = *di, tn_inv = th_inv;
    for (int k = 1; k <= 2; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        GMatrix lhs = dni * G.pi_nu(e(i)) * dn;
        if (!(lhs == G.pi_nu(tn_inv.apply(e(i))))) {
          GMatrix tn = th;
          if (k == 2) tn = th * th;
          std::string other = lhs == G.pi_nu(tn.apply(e(i))) ? " (the opposite sign holds)" : "";
          return "Delta^-" + std::to_string(k) + " pi_nu(a) Delta^" + std::to_string(k) + " != pi_nu(theta^-" +
                 std::to_string(k) + "(a)) at " + A.labels[i] + other;
        }
      }
      dn = dn * d;
      dni = dni * *di;
      tn_inv = tn_inv * th_inv;
    }
    return std::nullopt;
  });

  rep.run("modular.fixed-algebra", "tomita:fixed-algebra", [&]() -> Witness {
    if (!tom) return "Tomita data not built: " + tomita_error;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vec x = A.mul(A.r(pt(p)), A.s(pt(q)));
        if (th.apply(x) != x) return "r(b)s(b') is not fixed by theta at points " + B.points[p] + ", " + B.points[q];
      }
    std::vector<Vec> fixed = nullspace(th - GMatrix::identity(n));
    for (const Vec& x : fixed) {
      GMatrix px = G.pi_nu(x);
      if (!(tom->delta * px == px * tom->delta)) return "Delta_nu does not commute with pi_nu(" + vec_str(x) + ")";
    }
    return std::nullopt;
  });

  rep.run("modular.right-bounded", "tomita:right-bounded", [&]() -> Witness {
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        Vec x = A.mul(A.r(pt(p)), A.s(pt(q)));
        for (std::size_t t = 0; t < m; ++t)
          if (A.mul(x, A.r(pt(t))) != A.mul(A.r(pt(t)), x)) return "r(b)s(b') does not commute with r(B)";
        GMatrix rx = A.right_mul(x);
        for (std::size_t i = 0; i < n; ++i)
          if (!(G.pi_nu(e(i)) * G.lam_phi(x) == rx * G.lam_phi(e(i))))
            return "pi_nu(a) Lambda_phi(x) != R_x Lambda_phi(a) at " + A.labels[i] + " and points " + B.points[p] + ", " +
                   B.points[q];
      }
    return std::nullopt;
  });

  rep.run(
      "modular.conjugation", "tomita:conjugation",
      [&]() -> Witness {
        if (!tom) return "Tomita data not built: " + tomita_error;
        const CMat& J = tom->J;
        const CMat id = CMat::Identity(J.rows(), J.cols());
        double r = max_abs(J * J.conjugate() - id);
        if (r > tol) return "J^2 != 1, residual " + fmt(r);
        r = max_abs(J.adjoint() * J - id);
        if (r > tol) return "J is not anti-unitary, residual " + fmt(r);
        for (std::size_t p = 0; p < m; ++p) {
          r = max_abs(j_conjugate(*tom, G.rep(Rep::Alpha, pt(p))) - in_frame(*tom, G.rep(Rep::BetaHat, pt(p))));
          if (r > tol) return "J alpha(b)^* J != beta^(b) at point " + B.points[p] + ", residual " + fmt(r);
          r = max_abs(j_conjugate(*tom, G.rep(Rep::Beta, pt(p))) - in_frame(*tom, G.rep(Rep::AlphaHat, pt(p))));
          if (r > tol) return "J beta(b)^* J != alpha^(b) at point " + B.points[p] + ", residual " + fmt(r);
        }
        // R_{Lambda_nu(x)} = J pi_nu(x)^* J on the fixed algebra.
        for (const Vec& x : nullspace(th - GMatrix::identity(n))) {
          r = max_abs(j_conjugate(*tom, G.pi_nu(x)) - in_frame(*tom, A.right_mul(x)));
          if (r > tol) return "J pi_nu(x)^* J != R_x for fixed x = " + vec_str(x) + ", residual " + fmt(r);
        }
        return std::nullopt;
      },
      Mode::Numeric);

  rep.run("modular.flip-identity", "weights:flip-identity", [&]() -> Witness {
    const GramSpace& s = *F.ba.space;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q)
        for (std::size_t t = 0; t < m; ++t) {
          GMatrix lhs = F.Wstar * F.rho(A.mul(A.r(pt(p)), A.s(pt(q)))) * G.rep(Rep::Beta, pt(t));
          GMatrix rhs = F.rho(A.mul(A.r(pt(t)), A.s(pt(q)))) * G.rep(Rep::Alpha, pt(p));
          if (!same_on_quotient(s, lhs, rhs))
            return "W^* rho_{r(b)s(b')} beta(b'') != rho_{r(b'')s(b')} alpha(b) at points " + B.points[p] + ", " +
                   B.points[q] + ", " + B.points[t];
        }
    return std::nullopt;
  });

  std::vector<GMatrix> deltas(n);
  for (std::size_t k = 0; k < n; ++k) deltas[k] = F.delta_op(e(k));
  auto delta_of = [&](const Vec& a) {
    GMatrix out(n * n, n * n);
    for (std::size_t k = 0; k < n; ++k)
      if (!a[k].is_zero()) out = out + a[k] * deltas[k];
    return out;
  };

  rep.run("modular.left-invariance", "weights:left-invariance", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec xy = A.mul(A.star(e(i)), e(j));
        GMatrix d = delta_of(xy);
        GMatrix tl = G.rep(Rep::Alpha, M.phi(xy));
        for (std::size_t k = 0; k < n; ++k) {
          GMatrix slice = F.leg_adjoint(F.ba, F.lambda(e(k))) * d * F.lambda(e(k));
          auto lhs = phi_tilde(M, slice);
          if (!lhs) return "left slice of Delta(x^*y) is not in pi_nu(A) at " + basis_pair(A, i, j);
          GMatrix R = G.R(Rep::Beta, e(k));
          if (!(*lhs == G.adj_kh(R) * tl * R))
            return "phi~(lambda^* Delta(x^*y) lambda) != R^* T_L(x^*y) R at " + basis_pair(A, i, j) + ", xi = " + A.labels[k];
        }
      }
    return std::nullopt;
  });

  rep.run("modular.right-invariance", "weights:right-invariance", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec xy = A.mul(A.star(e(i)), e(j));
        GMatrix d = delta_of(xy);
        GMatrix tr = G.rep(Rep::Beta, M.psi(xy));
        for (std::size_t k = 0; k < n; ++k) {
          GMatrix slice = F.leg_adjoint(F.ba, F.rho(e(k))) * d * F.rho(e(k));
          auto lhs = psi_tilde(M, slice);
          if (!lhs) return "right slice of Delta(x^*y) is not in pi_nu(A) at " + basis_pair(A, i, j);
          GMatrix R = G.R(Rep::Alpha, e(k));
          if (!(*lhs == G.adj_kh(R) * tr * R))
            return "psi~(rho^* Delta(x^*y) rho) != R^* T_R(x^*y) R at " + basis_pair(A, i, j) + ", eta = " + A.labels[k];
        }
      }
    return std::nullopt;
  });

  rep.run("modular.u-h", "mqg:u-h", [&]() -> Witness {
    for (std::size_t w = 0; w < n; ++w) {
      GMatrix lw = F.leg_adjoint(F.ba, F.lambda(e(w)));
      GMatrix lws = lw * F.Wstar;
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t a = 0; a < n; ++a) {
          GMatrix slice = lw * deltas[a] * F.lambda(e(v));
          auto c = pi_nu_preimage(M, slice);
          if (!c) return "slice of Delta(a) is not in pi_nu(A) at a = " + A.labels[a];
          if (lws.apply(tensor(e(v), e(a))) != *c)
            return "lambda_w^* W^*(v (x) a) != Lambda((omega_{w,v} * id)Delta(a)) at w, v = " + basis_pair(A, w, v) +
                   ", a = " + A.labels[a];
        }
    }
    return std::nullopt;
  });

  rep.run("modular.u-h-prime", "mqg:u-h-prime", [&]() -> Witness {
    for (std::size_t w = 0; w < n; ++w) {
      GMatrix rw = F.leg_adjoint(F.ba, F.rho(e(w)));
      GMatrix rwv = rw * F.V;
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t a = 0; a < n; ++a) {
          GMatrix slice = rw * deltas[a] * F.rho(e(v));
          auto c = pi_nu_preimage(M, slice);
          if (!c) return "slice of Delta(a) is not in pi_nu(A) at a = " + A.labels[a];
          if (rwv.apply(tensor(e(a), e(v))) != *c)
            return "rho_w^* V(a (x) v) != Lambda((id * omega_{w,v})Delta(a)) at w, v = " + basis_pair(A, w, v) +
                   ", a = " + A.labels[a];
        }
    }
    return std::nullopt;
  });

  rep.run("modular.antipode", "mqg:operator-antipode", [&]() -> Witness {
    // V^* as the adjoint of V, whose formulas do not involve S.
    GMatrix vstar = gram_adjoint(GramMap{F.ahb.space, F.ba.space, F.V}).m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec a = F.slice_v_element(e(i), e(j));
        GMatrix lhs = F.leg_adjoint(F.ahb, F.lambda(e(i))) * vstar * F.lambda(e(j));
        Vec sa = M.Dh.apply(kit.S(M.Dh.apply(a)));
        if (!(lhs == G.pi_nu(sa))) return "(omega * id)(V^*) != pi_nu(D^1/2 S D^1/2(a)) at " + basis_pair(A, i, j);
      }
    return std::nullopt;
  });

  if (M.has_h()) {
    rep.run("modular.h-compression", "weights:h-compression", [&]() -> Witness {
      GMatrix io = iota(M);
      GMatrix gk = G.K()->gram;
      GMatrix gkk = kron(gk, gk);
      if (!(io.adjoint() * M.nu_gram * io == gkk)) return std::string("iota is not isometric");
      auto gkk_inv = inverse(gkk);
      if (!gkk_inv) return std::string("Gram of K (x) K is singular");
      GMatrix io_adj = *gkk_inv * (io.adjoint() * M.nu_gram);
      for (std::size_t i = 0; i < n; ++i) {
        Vec h = M.h(e(i));
        GMatrix want(m * m, m * m);
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q)
            if (!h[p * m + q].is_zero()) want = want + h[p * m + q] * kron(G.pi_mu(pt(p)), G.pi_mu(pt(q)));
        if (!(io_adj * G.pi_nu(e(i)) * io == want)) return "iota^* pi_nu(a) iota != (pi_mu (x) pi_mu)(h(a)) at " + A.labels[i];
      }
      return std::nullopt;
    });
  }

  rep.run(
      "modular.psd-numeric", "numeric:psd-agreement",
      [&]() -> Witness {
        std::vector<std::pair<std::string, GMatrix>> grams = {
            {"K", G.K()->gram}, {"H", G.H()->gram}, {"beta-alpha", F.ba.space->gram},
            {"alpha-beta^", F.ab.space->gram}, {"alpha^-beta", F.ahb.space->gram}};
        if (tom) grams.emplace_back("Delta_nu form", M.nu_gram * tom->delta);
        for (const auto& [name, g] : grams) {
          bool exact = is_psd_hermitian(g);
          double ev = min_eigenvalue(g);
          if (exact != (ev >= -1e-9)) return name + ": exact PSD test disagrees with minimum eigenvalue " + fmt(ev);
        }
        return std::nullopt;
      },
      Mode::Numeric);

  return rep;
}

}  // namespace dqg
