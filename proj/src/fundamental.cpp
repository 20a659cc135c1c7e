#include "dqg/fundamental.hpp"

#include "dqg/numeric.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <utility>

namespace dqg {

namespace {

GMatrix leg_op(const GMatrix& op, int leg, std::size_t n) {
  GMatrix id = GMatrix::identity(n);
  return leg == 0 ? kron(op, id) : kron(id, op);
}

// Vanishing against a PSD Gram matrix is membership in its radical.
bool in_radical(const GramSpace& s, const Vec& v) { return is_zero(s.gram.apply(v)); }

}  // namespace

RelTensor rel_tensor(const Gns& G, Rep left, Rep right) {
  const Measured& M = G.measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), m = M.m();
  const std::size_t N = n * n;
  // inner[j*n+l] is <e_j|e_l> in B.
  auto inner_table = [&](Rep r) {
    std::vector<Vec> t(N);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) t[j * n + l] = G.inner_b(r, A.e(j), A.e(l));
    return t;
  };
  std::vector<Vec> in_r = inner_table(right), in_l = inner_table(left);
  std::vector<GMatrix> gl(m), gr(m);
  for (std::size_t p = 0; p < m; ++p) {
    Vec b = M.B().delta(static_cast<int>(p));
    gl[p] = M.nu_gram * G.rep(left, b);
    gr[p] = M.nu_gram * G.rep(right, b);
  }
  GMatrix g(N, N), go(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          GQ a, b;
          for (std::size_t p = 0; p < m; ++p) {
            const GQ& cr = in_r[j * n + l][p];
            if (!cr.is_zero()) a += cr * gl[p](i, k);
            const GQ& cl = in_l[i * n + k][p];
            if (!cl.is_zero()) b += cl * gr[p](j, l);
          }
          g(i * n + j, k * n + l) = a;
          go(i * n + j, k * n + l) = b;
        }
  return RelTensor{left, right, radical_quotient(g), std::move(go)};
}

Fundamental::Fundamental(const Gns& G)
    : ba(rel_tensor(G, Rep::Beta, Rep::Alpha)),
      ab(rel_tensor(G, Rep::Alpha, Rep::BetaHat)),
      ahb(rel_tensor(G, Rep::AlphaHat, Rep::Beta)),
      G_(G) {
  const Measured& M = G.measured();
  const HopfKit& kit = *M.kit;
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), N = n * n;
  if (!kit.has_Sinv()) throw std::domain_error("antipode is not invertible");
  auto build = [&](auto&& f) {
    GMatrix out(N, N);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.set_col(i * n + j, f(A.e(i), A.e(j)));
    return out;
  };
  auto cols = [](const GMatrix& m, std::size_t q) { return m.col(q); };
  // W^*: x (x) y |-> sum y1 x (x) D^1/2(y2) = sum Dbar^1/2(y1) x (x) y2
  Wstar = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(y), n, n, N,
                    [&](std::size_t p, std::size_t q) { return tensor(A.mul(A.e(p), x), cols(M.Dh, q)); });
  });
  Wstar_alt = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(y), n, n, N,
                    [&](std::size_t p, std::size_t q) { return tensor(A.mul(cols(M.Dbh, p), x), A.e(q)); });
  });
  // W: x (x) y |-> sum S^-1(D^-1/2(y1)) x (x) y2 = sum Dbar^1/2(S^-1(y1)) x (x) y2
  W = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(y), n, n, N, [&](std::size_t p, std::size_t q) {
      return tensor(A.mul(kit.Sinv(cols(M.Dh_inv, p)), x), A.e(q));
    });
  });
  W_alt = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(y), n, n, N, [&](std::size_t p, std::size_t q) {
      return tensor(A.mul(M.Dbh.apply(kit.Sinv(A.e(p))), x), A.e(q));
    });
  });
  // V: x (x) y |-> sum Dbar^1/2(x1) (x) x2 y = sum x1 (x) D^1/2(x2) y
  V = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(x), n, n, N,
                    [&](std::size_t p, std::size_t q) { return tensor(cols(M.Dbh, p), A.mul(A.e(q), y)); });
  });
  V_alt = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(x), n, n, N,
                    [&](std::size_t p, std::size_t q) { return tensor(A.e(p), A.mul(cols(M.Dh, q), y)); });
  });
  // V^*: x (x) y |-> sum x1 (x) S(Dbar^-1/2(x2)) y = sum x1 (x) D^1/2(S(x2)) y
  Vstar = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(x), n, n, N, [&](std::size_t p, std::size_t q) {
      return tensor(A.e(p), A.mul(kit.S(cols(M.Dbh_inv, q)), y));
    });
  });
  Vstar_alt = build([&](const Vec& x, const Vec& y) {
    return sweedler(kit.delta(x), n, n, N, [&](std::size_t p, std::size_t q) {
      return tensor(A.e(p), A.mul(M.Dh.apply(kit.S(A.e(q))), y));
    });
  });
}

GMatrix Fundamental::lambda(const Vec& x) const {
  const std::size_t n = measured().n();
  GMatrix out(n * n, n);
  for (std::size_t j = 0; j < n; ++j) out.set_col(j, tensor(x, unit(n, j)));
  return out;
}

GMatrix Fundamental::rho(const Vec& y) const {
  const std::size_t n = measured().n();
  GMatrix out(n * n, n);
  for (std::size_t i = 0; i < n; ++i) out.set_col(i, tensor(unit(n, i), y));
  return out;
}

GMatrix Fundamental::leg_adjoint(const RelTensor& t, const GMatrix& op) const {
  return G_.adj_from_h(op, t.space->gram);
}

GMatrix Fundamental::rho_hat(const Vec& c) const {
  const Measured& M = measured();
  GMatrix out(M.n(), M.n());
  for (std::size_t z = 0; z < M.n(); ++z) out.set_col(z, convolve_right(M, M.A().e(z), c));
  return out;
}

GMatrix Fundamental::conv_left(const Vec& c) const {
  const Measured& M = measured();
  GMatrix out(M.n(), M.n());
  for (std::size_t z = 0; z < M.n(); ++z) out.set_col(z, convolve_left(M, c, M.A().e(z)));
  return out;
}

GMatrix Fundamental::slice_wstar_right(const Vec& y, const Vec& yp) const {
  return leg_adjoint(ba, rho(y)) * (Wstar * rho(yp));
}

GMatrix Fundamental::slice_wstar_left(const Vec& x, const Vec& xp) const {
  return leg_adjoint(ba, lambda(x)) * (Wstar * lambda(xp));
}

GMatrix Fundamental::slice_w_right(const Vec& y, const Vec& yp) const {
  return leg_adjoint(ab, rho(y)) * (W * rho(yp));
}

GMatrix Fundamental::slice_w_left(const Vec& x, const Vec& xp) const {
  return leg_adjoint(ab, lambda(x)) * (W * lambda(xp));
}

GMatrix Fundamental::slice_v_left(const Vec& x, const Vec& xp) const {
  return leg_adjoint(ba, lambda(x)) * (V * lambda(xp));
}

GMatrix Fundamental::slice_v_right(const Vec& y, const Vec& yp) const {
  return leg_adjoint(ba, rho(y)) * (V * rho(yp));
}

Vec Fundamental::slice_element(const Vec& y, const Vec& yp) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  Vec ys = A.star(y);
  return sweedler(M.kit->delta(yp), n, n, n, [&](std::size_t p, std::size_t q) {
    return M.Dbh_inv.apply(A.mul(A.e(p), A.s(M.phi(A.mul(ys, A.e(q))))));
  });
}

Vec Fundamental::slice_dual(const Vec& x, const Vec& xp) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  return M.kit->Sinv(M.Dbh.apply(A.mul(M.th_inv().apply(xp), A.star(x))));
}

Vec Fundamental::slice_v_element(const Vec& x, const Vec& xp) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n();
  Vec xs = A.star(x);
  return sweedler(M.kit->delta(xp), n, n, n, [&](std::size_t p, std::size_t q) {
    return M.Dh_inv.apply(A.mul(A.e(q), A.r(M.psi(A.mul(xs, A.e(p))))));
  });
}

Vec Fundamental::slice_v_dual(const Vec& y, const Vec& yp) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  return M.kit->Sinv(M.Dh_inv.apply(A.mul(yp, M.th().apply(A.star(y)))));
}

GMatrix Fundamental::delta_op(const Vec& a) const {
  const std::size_t n = measured().n();
  return Wstar * (kron(GMatrix::identity(n), pi_nu(a)) * W);
}

GMatrix Fundamental::delta_formula(const Vec& a) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), N = n * n;
  Vec da = M.kit->delta(a);
  GMatrix out(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.set_col(i * n + j, sweedler(da, n, n, N, [&](std::size_t p, std::size_t q) {
                    return tensor(A.basis_mul(p, i), A.mul(M.Dh.col(q), A.e(j)));
                  }));
  return out;
}

GMatrix Fundamental::delta_hat_op(const Vec& c) const {
  const std::size_t n = measured().n();
  return W * (kron(rho_hat(c), GMatrix::identity(n)) * Wstar);
}

GMatrix Fundamental::delta_hat_formula(const Vec& c) const {
  const Measured& M = measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), N = n * n;
  Vec sc = M.kit->S(c);
  GMatrix out(N, N);
  for (std::size_t i = 0; i < n; ++i) {
    Vec dx = M.kit->delta(A.e(i));
    for (std::size_t j = 0; j < n; ++j) {
      Vec dy = M.kit->delta(A.e(j));
      out.set_col(i * n + j, sweedler(dx, n, n, N, [&](std::size_t p, std::size_t q) {
                    return sweedler(dy, n, n, N, [&](std::size_t s, std::size_t t) {
                      Vec b = M.psi(A.mul(A.mul(sc, A.e(s)), A.e(p)));
                      return tensor(A.mul(A.e(q), A.r(b)), A.e(t));
                    });
                  }));
    }
  }
  return out;
}

namespace {

// Operator on a two-leg ambient stored by sparse columns, applied to a pair of
// legs of the three-leg ambient.
class LegOp {
 public:
  LegOp(const GMatrix& m, std::size_t n) : n_(n), cols_(m.cols()) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, c).is_zero()) cols_[c].emplace_back(r, m(r, c));
  }

  Vec apply(const Vec& v, int a, int b) const {
    const std::size_t n = n_;
    Vec out(n * n * n);
    std::array<std::size_t, 3> idx{};
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      idx = {k / (n * n), (k / n) % n, k % n};
      for (const auto& [r, c] : cols_[idx[a] * n + idx[b]]) {
        std::array<std::size_t, 3> o = idx;
        o[a] = r / n;
        o[b] = r % n;
        out[(o[0] * n + o[1]) * n + o[2]] += c * v[k];
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<std::pair<std::size_t, GQ>>> cols_;
};

struct Triple {
  std::string name;
  GramSpacePtr space;
};

using Chain = std::function<Vec(const Vec&)>;

// Gram of (X) (x) H where the third leg's `sigma` product acts through `rho`
// on leg `leg` of X.
GMatrix left_nested(const Gns& G, const RelTensor& X, Rep rho, int leg, Rep sigma) {
  const Measured& M = G.measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), m = M.m(), N = n * n;
  std::vector<GMatrix> gx(m);
  for (std::size_t p = 0; p < m; ++p)
    gx[p] = X.space->gram * leg_op(G.rep(rho, M.B().delta(static_cast<int>(p))), leg, n);
  GMatrix g(N * n, N * n);
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t zp = 0; zp < n; ++zp) {
      Vec b = G.inner_b(sigma, A.e(z), A.e(zp));
      for (std::size_t p = 0; p < m; ++p) {
        if (b[p].is_zero()) continue;
        for (std::size_t u = 0; u < N; ++u)
          for (std::size_t v = 0; v < N; ++v) {
            const GQ& c = gx[p](u, v);
            if (!c.is_zero()) g(u * n + z, v * n + zp) += b[p] * c;
          }
      }
    }
  return g;
}

// Gram of H (x) (Y) where the first leg's `left` product acts through `rho`
// on leg `leg` of Y.
GMatrix right_nested(const Gns& G, Rep left, const RelTensor& Y, Rep rho, int leg) {
  const Measured& M = G.measured();
  const Algebroid& A = M.A();
  const std::size_t n = A.n(), m = M.m(), N = n * n;
  std::vector<GMatrix> gy(m);
  for (std::size_t p = 0; p < m; ++p)
    gy[p] = Y.space->gram * leg_op(G.rep(rho, M.B().delta(static_cast<int>(p))), leg, n);
  GMatrix g(N * n, N * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      Vec b = G.inner_b(left, A.e(x), A.e(xp));
      for (std::size_t p = 0; p < m; ++p) {
        if (b[p].is_zero()) continue;
        for (std::size_t u = 0; u < N; ++u)
          for (std::size_t v = 0; v < N; ++v) {
            const GQ& c = gy[p](u, v);
            if (!c.is_zero()) g(x * N + u, xp * N + v) += b[p] * c;
          }
      }
    }
  return g;
}

// Radical vectors of `dom` must land in the radical of `cod`.
Witness chain_well_defined(const std::string& what, const Triple& dom, const Triple& cod, const Chain& f) {
  for (const Vec& r : dom.space->radical.basis())
    if (!in_radical(*cod.space, f(r))) return what + " does not map the null space of " + dom.name + " into that of " + cod.name;
  return std::nullopt;
}

// Two well-defined maps agree on the quotient iff they agree on the unit
// vectors of the free coordinates.
Witness chains_agree(const std::string& what, const Triple& dom, const Triple& cod, const Chain& f, const Chain& g) {
  const std::size_t dim = dom.space->dim_ambient();
  for (std::size_t k : dom.space->free_idx) {
    Vec u = unit(dim, k);
    if (!in_radical(*cod.space, f(u) - g(u))) return what + " differs on basis vector " + std::to_string(k) + " of " + dom.name;
  }
  return std::nullopt;
}

std::string basis_pair(const Algebroid& A, std::size_t i, std::size_t j) { return "(" + A.labels[i] + ", " + A.labels[j] + ")"; }

Witness check_unitary(const std::string& name, const RelTensor& dom, const RelTensor& cod, const GMatrix& u,
                      const GMatrix& ustar, const GMatrix& u_alt, const GMatrix& ustar_alt) {
  const std::size_t N = u.rows();
  GramMap f{dom.space, cod.space, u}, fs{cod.space, dom.space, ustar};
  if (!same_on_quotient(*cod.space, u, u_alt)) return name + " formulas disagree on the quotient";
  if (!same_on_quotient(*dom.space, ustar, ustar_alt)) return name + "^* formulas disagree on the quotient";
  if (!well_defined(f)) return name + " is not well defined on the relative tensor product";
  if (!well_defined(fs)) return name + "^* is not well defined on the relative tensor product";
  if (!preserves_form(f)) return name + " is not isometric";
  if (!preserves_form(fs)) return name + "^* is not isometric";
  if (!quotient_surjective(f)) return name + " is not surjective";
  if (!same_on_quotient(*dom.space, ustar * u, GMatrix::identity(N))) return name + "^* " + name + " != Id";
  if (!same_on_quotient(*cod.space, u * ustar, GMatrix::identity(N))) return name + " " + name + "^* != Id";
  if (!same_on_quotient(*dom.space, gram_adjoint(f).m, ustar)) return "adjoint of " + name + " != " + name + "^*";
  return std::nullopt;
}

}  // namespace

Report check_fundamental(const Fundamental& F) {
  Report rep;
  const Gns& G = F.gns();
  const Measured& M = F.measured();
  const Algebroid& A = M.A();
  const Base& B = M.B();
  const std::size_t n = A.n(), m = B.m(), N = n * n;
  auto e = [&](std::size_t i) { return A.e(i); };
  auto pt = [&](std::size_t p) { return B.delta(static_cast<int>(p)); };
  const GMatrix I = GMatrix::identity(n);

  struct Variant {
    const RelTensor* t;
    const char* name;
    ModTag left, right;
  };
  const Variant variants[] = {
      {&F.ba, "beta-alpha", {Side::Left, Emb::S}, {Side::Left, Emb::R}},
      {&F.ab, "alpha-beta^", {Side::Left, Emb::R}, {Side::Right, Emb::R}},
      {&F.ahb, "alpha^-beta", {Side::Right, Emb::S}, {Side::Left, Emb::S}},
  };

  rep.run("fundamental.tensor-forms", "tensor:sesquilinear", [&]() -> Witness {
    for (const Variant& v : variants) {
      const GramSpace& s = *v.t->space;
      if (!is_psd_hermitian(s.gram)) return std::string(v.name) + " Gram is not Hermitian PSD";
      if (!(s.gram == v.t->gram_other)) return std::string(v.name) + " Gram depends on which leg carries the inner product";
      BalancedTensor bt = balanced_tensor(A, v.left, v.right);
      if (bt.rel.rank() != s.radical.rank()) return std::string(v.name) + " null space differs from the balancing relations";
      for (const Vec& r : bt.rel.basis())
        if (!s.radical.contains(r)) return std::string(v.name) + " balancing relation is not null";
    }
    // On (alpha, beta^) the form is nu(x^* r(phi(y^* y')) x').
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            Vec mid = A.r(M.phi(A.mul(A.star(e(j)), e(l))));
            GQ want = M.nu(A.mul(A.mul(A.star(e(i)), mid), e(k)));
            if (F.ab.space->gram(i * n + j, k * n + l) != want)
              return "alpha-beta^ form differs from its closed form at " + basis_pair(A, i, j) + ", " + basis_pair(A, k, l);
          }
    return std::nullopt;
  });

  rep.run("fundamental.leg-adjoints", "tensor:leg-adjoints", [&]() -> Witness {
    for (const Variant& v : variants) {
      const RelTensor& t = *v.t;
      for (std::size_t a = 0; a < n; ++a) {
        GMatrix la = F.leg_adjoint(t, F.lambda(e(a))), ra = F.leg_adjoint(t, F.rho(e(a)));
        for (std::size_t i = 0; i < n; ++i) {
          GMatrix lr = G.rep(t.right, G.inner_b(t.left, e(a), e(i)));
          GMatrix rl = G.rep(t.left, G.inner_b(t.right, e(a), e(i)));
          for (std::size_t j = 0; j < n; ++j) {
            if (la.col(i * n + j) != lr.col(j))
              return std::string(v.name) + " lambda adjoint formula fails at " + A.labels[a] + " on " + basis_pair(A, i, j);
            if (ra.col(j * n + i) != rl.col(j))
              return std::string(v.name) + " rho adjoint formula fails at " + A.labels[a] + " on " + basis_pair(A, j, i);
          }
        }
      }
    }
    return std::nullopt;
  });

  rep.run("fundamental.w-unitary", "fundamental:w-unitary",
          [&]() -> Witness { return check_unitary("W", F.ba, F.ab, F.W, F.Wstar, F.W_alt, F.Wstar_alt); });
  rep.run("fundamental.v-unitary", "fundamental:v-unitary",
          [&]() -> Witness { return check_unitary("V", F.ahb, F.ba, F.V, F.Vstar, F.V_alt, F.Vstar_alt); });

  rep.run("fundamental.intertwining", "fundamental:intertwining", [&]() -> Witness {
    const GramSpace& cod = *F.ab.space;
    for (std::size_t p = 0; p < m; ++p) {
      Vec b = pt(p);
      GMatrix al = G.rep(Rep::Alpha, b), be = G.rep(Rep::Beta, b);
      GMatrix ah = G.rep(Rep::AlphaHat, b), bh = G.rep(Rep::BetaHat, b);
      const std::string at = " at point " + B.points[p];
      if (!same_on_quotient(cod, F.W * kron(I, bh), kron(be, I) * F.W)) return "W(1 (x) beta^) != (beta (x) 1)W" + at;
      if (!same_on_quotient(cod, F.W * kron(ah, I), kron(ah, I) * F.W)) return "W(alpha^ (x) 1) != (alpha^ (x) 1)W" + at;
      if (!same_on_quotient(cod, F.W * kron(bh, I), kron(bh, I) * F.W)) return "W(beta^ (x) 1) != (beta^ (x) 1)W" + at;
      if (!same_on_quotient(cod, F.W * kron(al, I), kron(I, al) * F.W)) return "W(alpha (x) 1) != (1 (x) alpha)W" + at;
      if (!same_on_quotient(cod, F.W * kron(I, be), kron(I, be) * F.W)) return "W(1 (x) beta) != (1 (x) beta)W" + at;
      if (!same_on_quotient(cod, F.W * kron(I, ah), kron(I, ah) * F.W)) return "W(1 (x) alpha^) != (1 (x) alpha^)W" + at;
    }
    return std::nullopt;
  });

  // Triple relative tensor products for the pentagon and coassociativity.
  std::vector<Triple> S;
  std::string triple_error;
  rep.run("fundamental.triple-spaces", "pentagon:triple-spaces", [&]() -> Witness {
    struct Spec {
      const char* name;
      std::optional<GMatrix> left, right;
    };
    std::vector<Spec> specs;
    specs.push_back({"S1", left_nested(G, F.ba, Rep::Beta, 1, Rep::Alpha), right_nested(G, Rep::Beta, F.ba, Rep::Alpha, 0)});
    specs.push_back({"S2", left_nested(G, F.ab, Rep::Beta, 1, Rep::Alpha), right_nested(G, Rep::Alpha, F.ba, Rep::BetaHat, 0)});
    specs.push_back({"S3", left_nested(G, F.ab, Rep::Alpha, 1, Rep::BetaHat), right_nested(G, Rep::Alpha, F.ab, Rep::BetaHat, 0)});
    specs.push_back({"S4", std::nullopt, right_nested(G, Rep::Beta, F.ab, Rep::Alpha, 1)});
    specs.push_back({"S5", left_nested(G, F.ba, Rep::Alpha, 0, Rep::BetaHat), std::nullopt});
    for (Spec& s : specs) {
      if (s.left && s.right && !(*s.left == *s.right)) return std::string(s.name) + " Gram depends on the nesting";
      const GMatrix& g = s.left ? *s.left : *s.right;
      try {
        S.push_back({s.name, radical_quotient(g)});
      } catch (const std::exception& ex) {
        S.clear();
        return std::string(s.name) + ": " + ex.what();
      }
    }
    return std::nullopt;
  });

  if (S.size() == 5) {
    rep.run(
        "fundamental.psd-numeric", "numeric:psd-agreement-triple",
        [&]() -> Witness {
          for (const Triple& t : S) {
            bool exact = is_psd_hermitian(t.space->gram);
            double ev = min_eigenvalue(t.space->gram);
            if (exact != (ev >= -1e-9))
              return t.name + ": exact PSD test disagrees with minimum eigenvalue " + std::to_string(ev);
          }
          return std::nullopt;
        },
        Mode::Numeric);

    const Triple &S1 = S[0], &S2 = S[1], &S3 = S[2], &S4 = S[3], &S5 = S[4];
    LegOp w(F.W, n), ws(F.Wstar, n);
    auto W12 = [&](const Vec& v) { return w.apply(v, 0, 1); };
    auto W23 = [&](const Vec& v) { return w.apply(v, 1, 2); };
    auto W13 = [&](const Vec& v) { return w.apply(v, 0, 2); };
    auto W12s = [&](const Vec& v) { return ws.apply(v, 0, 1); };
    auto W23s = [&](const Vec& v) { return ws.apply(v, 1, 2); };
    auto W13s = [&](const Vec& v) { return ws.apply(v, 0, 2); };
    const HopfKit& kit = *M.kit;
    // x (x) y (x) z |-> sum z1 y1 x (x) D^1/2(z2 y2) (x) D^1/2(z3)
    auto closed = [&](const Vec& v) {
      Vec out(N * n);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero()) continue;
        std::size_t x = k / N, y = (k / n) % n, z = k % n;
        Vec dz = kit.delta_left(kit.delta(e(z))), dy = kit.delta(e(y));
        Vec t = sweedler3(dz, n, N * n, [&](std::size_t z1, std::size_t z2, std::size_t z3) {
          return sweedler(dy, n, n, N * n, [&](std::size_t y1, std::size_t y2) {
            return tensor3(A.mul(A.basis_mul(z1, y1), e(x)), M.Dh.apply(A.basis_mul(z2, y2)), M.Dh.col(z3));
          });
        });
        axpy(out, v[k], t);
      }
      return out;
    };

    rep.run("fundamental.pentagon-legs", "pentagon:leg-maps", [&]() -> Witness {
      const std::tuple<const char*, const Triple*, const Triple*, Chain> maps[] = {
          {"W12", &S1, &S2, W12},   {"W23", &S2, &S3, W23},   {"W23", &S1, &S4, W23},  {"W13", &S4, &S5, W13},
          {"W12", &S5, &S3, W12},   {"W12^*", &S2, &S1, W12s}, {"W23^*", &S3, &S2, W23s}, {"W23^*", &S4, &S1, W23s},
          {"W13^*", &S5, &S4, W13s}, {"W12^*", &S3, &S5, W12s}, {"closed form", &S3, &S1, closed},
      };
      for (const auto& [name, dom, cod, f] : maps)
        if (Witness wit = chain_well_defined(name, *dom, *cod, f)) return wit;
      return std::nullopt;
    });

    rep.run("fundamental.pentagon", "pentagon:product", [&]() -> Witness {
      return chains_agree("W23 W12 vs W12 W13 W23", S1, S3, [&](const Vec& v) { return W23(W12(v)); },
                          [&](const Vec& v) { return W12(W13(W23(v))); });
    });
    rep.run("fundamental.pentagon-closed", "pentagon:closed-form", [&]() -> Witness {
      return chains_agree("closed form vs W12^* W23^*", S3, S1, closed, [&](const Vec& v) { return W12s(W23s(v)); });
    });
    rep.run("fundamental.pentagon-adjoint", "pentagon:adjoint-chain", [&]() -> Witness {
      return chains_agree("closed form vs W23^* W13^* W12^*", S3, S1, closed,
                          [&](const Vec& v) { return W23s(W13s(W12s(v))); });
    });

    rep.run("fundamental.coassociativity", "comultiplication:coassociative", [&]() -> Witness {
      for (std::size_t i = 0; i < n; ++i) {
        LegOp d(F.delta_formula(e(i)), n);
        Chain lhs = [&](const Vec& v) { return W12s(d.apply(W12(v), 1, 2)); };
        Chain rhs = [&](const Vec& v) { return W23s(d.apply(W23(v), 0, 2)); };
        const std::string at = " for " + A.labels[i];
        if (Witness wit = chain_well_defined("Delta on legs 2,3" + at, S2, S2, [&](const Vec& v) { return d.apply(v, 1, 2); }))
          return wit;
        if (Witness wit = chain_well_defined("Delta on legs 1,3" + at, S4, S4, [&](const Vec& v) { return d.apply(v, 0, 2); }))
          return wit;
        if (Witness wit = chains_agree("(Delta (x) id)Delta vs (id (x) Delta)Delta" + at, S1, S1, lhs, rhs)) return wit;
      }
      return std::nullopt;
    });
  }

  rep.run("fundamental.slices-w", "slices:w-closed-form", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!(F.slice_wstar_right(e(i), e(j)) == F.pi_nu(F.slice_element(e(i), e(j)))))
          return "right slice of W^* != pi_nu(a) at " + basis_pair(A, i, j);
        if (!(F.slice_wstar_left(e(i), e(j)) == F.rho_hat(F.slice_dual(e(i), e(j)))))
          return "left slice of W^* != rho(c^) at " + basis_pair(A, i, j);
      }
    return std::nullopt;
  });

  rep.run("fundamental.slices-v", "slices:v-closed-form", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!(F.slice_v_left(e(i), e(j)) == F.pi_nu(F.slice_v_element(e(i), e(j)))))
          return "left slice of V != pi_nu(a) at " + basis_pair(A, i, j);
        if (!(F.slice_v_right(e(i), e(j)) == F.conv_left(F.slice_v_dual(e(i), e(j)))))
          return "right slice of V != c-check * - at " + basis_pair(A, i, j);
      }
    return std::nullopt;
  });

  rep.run("fundamental.rho-star-hom", "slices:rho-star-homomorphism", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(G.adj_h(F.rho_hat(e(i))) == F.rho_hat(dual_star(M, e(i)))))
        return "rho(c^)^# != rho((c^)^*) at " + A.labels[i];
      for (std::size_t j = 0; j < n; ++j)
        if (!(F.rho_hat(e(i)) * F.rho_hat(e(j)) == F.rho_hat(dual_mul(M, e(i), e(j)))))
          return "rho(x^) rho(y^) != rho(x^ y^) at " + basis_pair(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("fundamental.slice-spans", "slices:generated-algebras", [&]() -> Witness {
    std::vector<GMatrix> pis, rhos, wsr, wsl, wr, wl;
    for (std::size_t i = 0; i < n; ++i) {
      pis.push_back(F.pi_nu(e(i)));
      rhos.push_back(F.rho_hat(e(i)));
      for (std::size_t j = 0; j < n; ++j) {
        wsr.push_back(F.slice_wstar_right(e(i), e(j)));
        wsl.push_back(F.slice_wstar_left(e(i), e(j)));
        wr.push_back(F.slice_w_right(e(i), e(j)));
        wl.push_back(F.slice_w_left(e(i), e(j)));
      }
    }
    const std::tuple<const char*, const std::vector<GMatrix>*, const char*, const std::vector<GMatrix>*> eqs[] = {
        {"right slice of W^*", &wsr, "pi_nu", &pis},
        {"right slice of W", &wr, "pi_nu", &pis},
        {"left slice of W^*", &wsl, "rho", &rhos},
        {"left slice of W", &wl, "rho", &rhos},
    };
    for (const auto& [slice, fam, gen, gens] : eqs)
      if (auto gap = span_gap(*fam, *gens))
        return gap->in_first ? std::string(slice) + " at " + basis_pair(A, gap->index / n, gap->index % n) +
                                   " is not in the span of " + gen + "(A)"
                             : std::string(gen) + "(" + A.labels[gap->index] + ") is not in the span of the " + slice + "s";
    return std::nullopt;
  });

  rep.run("fundamental.commutation", "slices:commutation", [&]() -> Witness {
    for (std::size_t p = 0; p < m; ++p) {
      GMatrix be = G.rep(Rep::Beta, pt(p)), ah = G.rep(Rep::AlphaHat, pt(p)), bh = G.rep(Rep::BetaHat, pt(p));
      for (std::size_t i = 0; i < n; ++i) {
        GMatrix a = F.pi_nu(e(i)), c = F.rho_hat(e(i));
        const std::string at = A.labels[i] + " and point " + B.points[p];
        if (!(a * bh == bh * a)) return "pi_nu does not commute with beta^ at " + at;
        if (!(a * ah == ah * a)) return "pi_nu does not commute with alpha^ at " + at;
        if (!(c * be == be * c)) return "rho does not commute with beta at " + at;
        if (!(c * ah == ah * c)) return "rho does not commute with alpha^ at " + at;
      }
    }
    return std::nullopt;
  });

  rep.run("fundamental.span-equalities", "fundamental:module-spans", [&]() -> Witness {
    using Fam = std::function<GMatrix(const Vec&, const Vec&)>;
    const std::tuple<const char*, Fam, Fam> eqs[] = {
        {"W lambda_x Lambda_phi(y) vs rho_y Lambda_psi^dag(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.lambda(x) * G.lam_phi(y)); },
         [&](const Vec& x, const Vec& y) { return F.rho(y) * G.lam_psi_dag(x); }},
        {"W rho_y Lambda_psi(x) vs rho_y Lambda_psi(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.rho(y) * G.lam_psi(x)); },
         [&](const Vec& x, const Vec& y) { return F.rho(y) * G.lam_psi(x); }},
        {"W rho_y Lambda_phi(x) vs rho_y Lambda_phi(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.rho(y) * G.lam_phi(x)); },
         [&](const Vec& x, const Vec& y) { return F.rho(y) * G.lam_phi(x); }},
        {"W rho_y Lambda_phi^dag(x) vs lambda_y Lambda_phi^dag(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.rho(y) * G.lam_phi_dag(x)); },
         [&](const Vec& x, const Vec& y) { return F.lambda(y) * G.lam_phi_dag(x); }},
        {"W lambda_y Lambda_psi^dag(x) vs lambda_y Lambda_psi^dag(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.lambda(y) * G.lam_psi_dag(x)); },
         [&](const Vec& x, const Vec& y) { return F.lambda(y) * G.lam_psi_dag(x); }},
        {"W lambda_y Lambda_psi(x) vs lambda_y Lambda_psi(x)",
         [&](const Vec& x, const Vec& y) { return F.W * (F.lambda(y) * G.lam_psi(x)); },
         [&](const Vec& x, const Vec& y) { return F.lambda(y) * G.lam_psi(x); }},
    };
    for (const auto& [name, f, g] : eqs) {
      std::vector<GMatrix> s1, s2;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          s1.push_back(f(e(i), e(j)));
          s2.push_back(g(e(i), e(j)));
        }
      if (auto gap = span_gap(s1, s2, &F.ab.space->radical))
        return std::string(name) + ": " + (gap->in_first ? "left" : "right") + " family at " +
               basis_pair(A, gap->index / n, gap->index % n) + " is not in the other span";
    }
    return std::nullopt;
  });

  rep.run("fundamental.regularity", "fundamental:regularity", [&]() -> Witness {
    std::vector<GMatrix> w, wk, v, vk;
    for (std::size_t i = 0; i < n; ++i) {
      GMatrix lpd_i = G.lam_phi_dag(e(i)), lsd_i = G.lam_psi_dag(e(i));
      GMatrix wl = F.leg_adjoint(F.ab, F.lambda(e(i))) * F.W;
      GMatrix vl = F.leg_adjoint(F.ba, F.lambda(e(i))) * F.V;
      for (std::size_t j = 0; j < n; ++j) {
        w.push_back(wl * F.rho(e(j)));
        v.push_back(vl * F.rho(e(j)));
        wk.push_back(G.lam_phi_dag(e(j)) * G.adj_kh(lpd_i));
        vk.push_back(G.lam_psi_dag(e(j)) * G.adj_kh(lsd_i));
      }
    }
    if (auto gap = span_gap(w, wk))
      return (gap->in_first ? "mixed slice of W at " : "Lambda_phi^dag Lambda_phi^dag# at ") +
             basis_pair(A, gap->index / n, gap->index % n) + " is not in the other span";
    if (auto gap = span_gap(v, vk))
      return (gap->in_first ? "mixed slice of V at " : "Lambda_psi^dag Lambda_psi^dag# at ") +
             basis_pair(A, gap->index / n, gap->index % n) + " is not in the other span";
    return std::nullopt;
  });

  rep.run("fundamental.comultiplication", "comultiplication:closed-form", [&]() -> Witness {
    const GramSpace& s = *F.ba.space;
    for (std::size_t i = 0; i < n; ++i) {
      GMatrix df = F.delta_formula(e(i));
      if (!well_defined(GramMap{F.ba.space, F.ba.space, df})) return "closed form of Delta is not well defined at " + A.labels[i];
      if (!same_on_quotient(s, F.delta_op(e(i)), df)) return "W^*(1 (x) pi(a))W != closed form at " + A.labels[i];
      for (std::size_t j = 0; j < n; ++j)
        if (!same_on_quotient(s, F.delta_op(e(i)) * F.delta_op(e(j)), F.delta_op(A.basis_mul(i, j))))
          return "Delta is not multiplicative at " + basis_pair(A, i, j);
    }
    for (std::size_t p = 0; p < m; ++p) {
      if (!same_on_quotient(s, F.delta_op(A.r(pt(p))), kron(G.rep(Rep::Alpha, pt(p)), I)))
        return "Delta(alpha(b)) != alpha(b) (x) 1 at point " + B.points[p];
      if (!same_on_quotient(s, F.delta_op(A.s(pt(p))), kron(I, G.rep(Rep::Beta, pt(p)))))
        return "Delta(beta(b)) != 1 (x) beta(b) at point " + B.points[p];
    }
    return std::nullopt;
  });

  rep.run("fundamental.dual-comultiplication", "comultiplication:dual-closed-form", [&]() -> Witness {
    const GramSpace& s = *F.ab.space;
    for (std::size_t i = 0; i < n; ++i) {
      GMatrix df = F.delta_hat_formula(e(i));
      if (!well_defined(GramMap{F.ab.space, F.ab.space, df}))
        return "closed form of Delta^ is not well defined at " + A.labels[i];
      if (!same_on_quotient(s, F.delta_hat_op(e(i)), df)) return "W(rho(c^) (x) 1)W^* != closed form at " + A.labels[i];
    }
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
