#include "dqg/hopf.hpp"

namespace dqg {

namespace {

std::string lbl(const Algebroid& a, std::size_t i) { return a.labels[i]; }
std::string pr(const Algebroid& a, std::size_t i, std::size_t j) { return pair_label(a, i, j); }

// Apply an operator given on ambient basis pairs to an ambient vector.
Vec on_pairs(const Vec& t, std::size_t n, std::size_t out, const std::function<Vec(std::size_t, std::size_t)>& f) {
  return sweedler(t, n, n, out, f);
}

}  // namespace

HopfKit::HopfKit(const HopfData& h) : h_(h), fp_(fiber_product(*h.alg, *h.alg)), cp_(crossed_product(h.alg->base)) {
  sinv_ = inverse(h_.antipode);
}

const TripleFiber& HopfKit::triple() const {
  if (!triple_) triple_ = std::make_shared<TripleFiber>(triple_fiber(A()));
  return *triple_;
}

Vec HopfKit::delta(const Vec& x) const {
  Vec out(n() * n());
  for (std::size_t i = 0; i < n(); ++i) axpy(out, x[i], h_.delta[i]);
  return out;
}

Vec HopfKit::Sinv(const Vec& x) const {
  if (!sinv_) throw std::domain_error("antipode is not invertible");
  return sinv_->apply(x);
}

Vec HopfKit::eps_sharp(const Vec& x) const {
  const Base& B = *A().base;
  Vec out(B.m());
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i].is_zero()) continue;
    for (int g = 0; g < B.group.size(); ++g)
      for (std::size_t y = 0; y < B.m(); ++y) {
        const GQ& c = h_.counit[i][cp_index(B, g, static_cast<int>(y))];
        if (!c.is_zero()) out[y] += x[i] * c;
      }
  }
  return out;
}

Vec HopfKit::eps_flat(const Vec& x) const {
  // sum b_g g = sum g g^{-1}(b_g)
  const Base& B = *A().base;
  Vec out(B.m());
  for (std::size_t i = 0; i < n(); ++i) {
    if (x[i].is_zero()) continue;
    for (int g = 0; g < B.group.size(); ++g) {
      Vec bg(B.m());
      for (std::size_t y = 0; y < B.m(); ++y) bg[y] = h_.counit[i][cp_index(B, g, static_cast<int>(y))];
      axpy(out, x[i], B.act(B.group.inv[g], bg));
    }
  }
  return out;
}

Vec HopfKit::delta_left(const Vec& t) const {
  const std::size_t N = n();
  return on_pairs(t, N, N * N * N, [&](std::size_t a, std::size_t b) { return tensor(h_.delta[a], e(b)); });
}

Vec HopfKit::delta_right(const Vec& t) const {
  const std::size_t N = n();
  return on_pairs(t, N, N * N * N, [&](std::size_t a, std::size_t b) { return tensor(e(a), h_.delta[b]); });
}

Witness HopfKit::lift_independent(const std::string& what, const std::function<Vec(const Vec&)>& f,
                                  const Subspace* mod) const {
  auto bad = [&](const Vec& g) {
    Vec v = f(g);
    return mod ? !mod->contains(v) : !is_zero(v);
  };
  bool ok = true;
  for (const auto& g : fp_.rel.basis()) ok = ok && !bad(g);
  if (ok) return std::nullopt;
  // Slow path: name the first generator of the ideal that is not killed.
  for (const FiberRelation& g : fiber_relations(A(), A()))
    if (bad(g.v)) return what + " depends on the choice of lift: relation " + relation_label(A(), A(), g);
  return what + " depends on the choice of lift";
}

GaloisMap galois(const HopfKit& kit, int k) {
  const Algebroid& A = kit.A();
  const std::size_t n = A.n();
  const ModTag rL{Side::Left, Emb::R}, sL{Side::Left, Emb::S}, rR{Side::Right, Emb::R}, sR{Side::Right, Emb::S};
  GaloisMap g;
  std::function<Vec(std::size_t, std::size_t)> fwd, bwd;
  auto e = [&](std::size_t i) { return A.e(i); };
  switch (k) {
    case 1:  // A_s (x) sA -> sA (x) rA, x(x)y |-> x1 (x) x2 y
      g.dom = balanced_tensor(A, sR, sL);
      g.cod = balanced_tensor(A, sL, rL);
      fwd = [&](std::size_t i, std::size_t j) {
        return on_pairs(kit.delta_e(i), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(e(a), A.basis_mul(b, j)); });
      };
      bwd = [&](std::size_t i, std::size_t j) {
        Vec sy = kit.Sinv(e(j));
        return on_pairs(kit.delta_e(i), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(e(a), kit.S(A.mul(sy, e(b)))); });
      };
      break;
    case 2:  // A_r (x) rA -> A_s (x) A_r, x(x)y |-> x y1 (x) y2
      g.dom = balanced_tensor(A, rR, rL);
      g.cod = balanced_tensor(A, sR, rR);
      fwd = [&](std::size_t i, std::size_t j) {
        return on_pairs(kit.delta_e(j), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(A.basis_mul(i, a), e(b)); });
      };
      bwd = [&](std::size_t i, std::size_t j) {
        Vec sx = kit.Sinv(e(i));
        return on_pairs(kit.delta_e(j), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(kit.S(A.mul(e(a), sx)), e(b)); });
      };
      break;
    case 3:  // sA (x) A_s -> A_s (x) A_r, x(x)y |-> x1 (x) y x2
      g.dom = balanced_tensor(A, sL, sR);
      g.cod = balanced_tensor(A, sR, rR);
      fwd = [&](std::size_t i, std::size_t j) {
        return on_pairs(kit.delta_e(i), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(e(a), A.basis_mul(j, b)); });
      };
      bwd = [&](std::size_t i, std::size_t j) {
        Vec sy = kit.S(e(j));
        return on_pairs(kit.delta_e(i), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(e(a), kit.Sinv(A.mul(e(b), sy))); });
      };
      break;
    case 4:  // rA (x) A_r -> sA (x) rA, x(x)y |-> y1 x (x) y2
      g.dom = balanced_tensor(A, rL, rR);
      g.cod = balanced_tensor(A, sL, rL);
      fwd = [&](std::size_t i, std::size_t j) {
        return on_pairs(kit.delta_e(j), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(A.basis_mul(a, i), e(b)); });
      };
      bwd = [&](std::size_t i, std::size_t j) {
        Vec sx = kit.S(e(i));
        return on_pairs(kit.delta_e(j), n, n * n,
                        [&](std::size_t a, std::size_t b) { return tensor(kit.Sinv(A.mul(sx, e(a))), e(b)); });
      };
      break;
    default:
      throw std::invalid_argument("Galois map index must be 1..4");
  }
  g.t = GMatrix(n * n, n * n);
  g.t_inv = GMatrix(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.t.set_col(i * n + j, fwd(i, j));
      if (kit.has_Sinv()) g.t_inv.set_col(i * n + j, bwd(i, j));
    }
  return g;
}

Report check_hopf(const HopfKit& kit) {
  Report rep;
  const Algebroid& A = kit.A();
  const Base& B = *A.base;
  const Group& G = B.group;
  const std::size_t n = A.n(), m = B.m();
  const FiberProduct& fp = kit.fp();

  rep.run("hopf.delta-graded", "comultiplication:grading", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& t = kit.delta_e(i);
      if (!fp.in_graded(t)) return "Delta(" + lbl(A, i) + ") leaves the graded tensor square";
      for (std::size_t p = 0; p < n * n; ++p)
        if (!t[p].is_zero() && (A.d[p / n] != A.d[i] || A.db[p % n] != A.db[i]))
          return "Delta(" + lbl(A, i) + ") has the wrong bidegree";
    }
    return std::nullopt;
  });

  auto star2 = [&](const Vec& t) {
    Vec out(n * n);
    for (std::size_t p = 0; p < n * n; ++p)
      if (!t[p].is_zero()) axpy(out, t[p].conj(), tensor(A.star(A.e(p / n)), A.star(A.e(p % n))));
    return out;
  };
  auto mul2 = [&](const Vec& u, const Vec& v) {
    Vec out(n * n);
    for (std::size_t p = 0; p < n * n; ++p) {
      if (u[p].is_zero()) continue;
      for (std::size_t q = 0; q < n * n; ++q)
        if (!v[q].is_zero())
          axpy(out, u[p] * v[q], tensor(A.basis_mul(p / n, q / n), A.basis_mul(p % n, q % n)));
    }
    return out;
  };

  rep.run("hopf.delta-homomorphism", "comultiplication:star-homomorphism", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!fp.same(kit.delta(A.basis_mul(i, j)), mul2(kit.delta_e(i), kit.delta_e(j))))
          return "Delta(xy) != Delta(x)Delta(y) at " + pr(A, i, j);
    for (std::size_t i = 0; i < n; ++i)
      if (!fp.same(kit.delta(A.star(A.e(i))), star2(kit.delta_e(i))))
        return "Delta(x*) != Delta(x)* at " + lbl(A, i);
    for (std::size_t x = 0; x < m; ++x) {
      if (!fp.same(kit.delta(A.r_img[x]), tensor(A.r_img[x], A.one())))
        return "Delta(r(delta_" + B.points[x] + ")) != r(delta) (x) 1";
      if (!fp.same(kit.delta(A.s_img[x]), tensor(A.one(), A.s_img[x])))
        return "Delta(s(delta_" + B.points[x] + ")) != 1 (x) s(delta)";
    }
    return std::nullopt;
  });

  rep.run("hopf.coassociative", "comultiplication:coassociativity", [&]() -> Witness {
    const TripleFiber& t = kit.triple();
    for (const FiberRelation& g : fiber_relations(A, A)) {
      if (!t.rel.contains(kit.delta_left(g.v))) return "(Delta (x) Id) not well defined on relation " + relation_label(A, A, g);
      if (!t.rel.contains(kit.delta_right(g.v))) return "(Id (x) Delta) not well defined on relation " + relation_label(A, A, g);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!t.same(kit.delta_left(kit.delta_e(i)), kit.delta_right(kit.delta_e(i)))) return "element " + lbl(A, i);
    return std::nullopt;
  });

  // Sweedler forms of the counit axioms.
  auto c1 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(A.r(kit.eps_sharp(A.e(a))), A.e(b)); });
  };
  auto c2 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(A.e(a), A.s(kit.eps_flat(A.e(b)))); });
  };
  auto c3 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(A.e(b), A.r(kit.eps_flat(A.e(a)))); });
  };
  auto c4 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(A.s(kit.eps_sharp(A.e(b))), A.e(a)); });
  };
  struct CounitLaw {
    const char* id;
    std::function<Vec(const Vec&)> f;
    bool acts_on_x;  // Delta applied to the left factor
  };
  std::vector<CounitLaw> laws = {{"hopf.counit-1", c1, true},
                                 {"hopf.counit-2", c2, false},
                                 {"hopf.counit-3", c3, false},
                                 {"hopf.counit-4", c4, true}};
  for (const auto& law : laws) {
    rep.run(law.id, "counit:sweedler", [&]() -> Witness {
      if (auto w = kit.lift_independent(law.id, law.f)) return w;
      for (std::size_t i = 0; i < n; ++i) {
        Vec fi = law.f(kit.delta_e(i));
        for (std::size_t j = 0; j < n; ++j) {
          Vec lhs = law.acts_on_x ? A.mul(fi, A.e(j)) : A.mul(A.e(j), fi);
          Vec rhs = law.acts_on_x ? A.basis_mul(i, j) : A.basis_mul(j, i);
          if (lhs != rhs) return law.acts_on_x ? pr(A, i, j) : pr(A, j, i);
        }
      }
      return std::nullopt;
    });
  }

  rep.run("hopf.counit-diagrams", "counit:diagram", [&]() -> Witness {
    const Algebroid& cp = kit.cp();
    const std::size_t nc = cp.n();
    FiberProduct lf = fiber_product(cp, A), rf = fiber_product(A, cp);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& t = kit.delta_e(i);
      Vec l(nc * n), r(n * nc);
      for (std::size_t p = 0; p < n * n; ++p) {
        if (t[p].is_zero()) continue;
        axpy(l, t[p], tensor(kit.eps(p / n), A.e(p % n)));
        axpy(r, t[p], tensor(A.e(p / n), kit.eps(p % n)));
      }
      if (!lf.in_graded(l) || !rf.in_graded(r)) return "(eps (x) Id)Delta not graded at " + lbl(A, i);
      // unit isomorphisms b g ~ a |-> r(b) a and a ~ b g |-> s(b) a
      Vec li(n), ri(n);
      for (std::size_t p = 0; p < nc * n; ++p)
        if (!l[p].is_zero()) axpy(li, l[p], A.mul(A.r_img[(p / n) % m], A.e(p % n)));
      for (std::size_t p = 0; p < n * nc; ++p)
        if (!r[p].is_zero()) axpy(ri, r[p], A.mul(A.s_img[(p % nc) % m], A.e(p / nc)));
      if (li != A.e(i)) return "(eps (x) Id)Delta != Id at " + lbl(A, i);
      if (ri != A.e(i)) return "(Id (x) eps)Delta != Id at " + lbl(A, i);
    }
    return std::nullopt;
  });

  rep.run("hopf.counit-morphism", "counit:morphism", [&]() -> Witness {
    const Algebroid& cp = kit.cp();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& ei = kit.eps(i);
      if (is_zero(ei)) continue;
      if (A.d[i] != A.db[i]) return "eps nonzero off the diagonal grading at " + lbl(A, i);
      auto deg = cp.degree(ei);
      if (!deg || deg->first != A.d[i]) return "eps(" + lbl(A, i) + ") has the wrong degree";
    }
    auto eps = [&](const Vec& x) {
      Vec out(kit.cp().n());
      for (std::size_t i = 0; i < n; ++i) axpy(out, x[i], kit.eps(i));
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (eps(A.basis_mul(i, j)) != cp.mul(kit.eps(i), kit.eps(j))) return "eps not multiplicative at " + pr(A, i, j);
    for (std::size_t i = 0; i < n; ++i)
      if (eps(A.star(A.e(i))) != cp.star(kit.eps(i))) return "eps not *-preserving at " + lbl(A, i);
    for (std::size_t x = 0; x < m; ++x) {
      Vec want = unit(cp.n(), cp_index(B, G.e, static_cast<int>(x)));
      if (eps(A.r_img[x]) != want || eps(A.s_img[x]) != want) return "eps(r(b)) or eps(s(b)) != b at " + B.points[x];
    }
    return std::nullopt;
  });

  rep.run("hopf.counit-unique", "counit:uniqueness", [&]() -> Witness {
    // unknown eps'(e_i) = sum_x u_{i,x} delta_x d_i for diagonal e_i
    std::vector<std::pair<std::size_t, std::size_t>> unk;
    for (std::size_t i = 0; i < n; ++i)
      if (A.d[i] == A.db[i])
        for (std::size_t x = 0; x < m; ++x) unk.emplace_back(i, x);
    if (unk.empty()) return std::string("no admissible counit entries");
    auto sharp = [&](std::size_t u) { return B.delta(static_cast<int>(unk[u].second)); };
    auto flat = [&](std::size_t u) { return B.act(G.inv[A.d[unk[u].first]], sharp(u)); };
    GMatrix sys(4 * n * n, unk.size());
    for (std::size_t u = 0; u < unk.size(); ++u) {
      std::size_t a0 = unk[u].first;
      for (std::size_t i = 0; i < n; ++i) {
        const Vec& t = kit.delta_e(i);
        Vec v1(n), v2(n), v3(n), v4(n);
        for (std::size_t p = 0; p < n * n; ++p) {
          if (t[p].is_zero()) continue;
          std::size_t a = p / n, b = p % n;
          if (a == a0) {
            axpy(v1, t[p], A.mul(A.r(sharp(u)), A.e(b)));
            axpy(v3, t[p], A.mul(A.e(b), A.r(flat(u))));
          }
          if (b == a0) {
            axpy(v2, t[p], A.mul(A.e(a), A.s(flat(u))));
            axpy(v4, t[p], A.mul(A.s(sharp(u)), A.e(a)));
          }
        }
        for (std::size_t k = 0; k < n; ++k) {
          sys(((0 * n) + i) * n + k, u) = v1[k];
          sys(((1 * n) + i) * n + k, u) = v2[k];
          sys(((2 * n) + i) * n + k, u) = v3[k];
          sys(((3 * n) + i) * n + k, u) = v4[k];
        }
      }
    }
    // eps' is a module map: eps'#(r(b)a) = b eps'#(a) = eps'#(s(b)a)
    std::vector<std::vector<long>> uidx(n, std::vector<long>(m, -1));
    for (std::size_t u = 0; u < unk.size(); ++u) uidx[unk[u].first][unk[u].second] = static_cast<long>(u);
    std::vector<Vec> extra;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < m; ++x)
        for (const auto* img : {&A.r_img[x], &A.s_img[x]}) {
          Vec a = A.mul(*img, A.e(i));
          for (std::size_t y = 0; y < m; ++y) {
            Vec row(unk.size());
            for (std::size_t k = 0; k < n; ++k)
              if (!a[k].is_zero() && uidx[k][y] >= 0) row[static_cast<std::size_t>(uidx[k][y])] += a[k];
            if (x == y && uidx[i][y] >= 0) row[static_cast<std::size_t>(uidx[i][y])] -= GQ(1);
            if (!is_zero(row)) extra.push_back(row);
          }
        }
    GMatrix full(sys.rows() + extra.size(), unk.size());
    for (std::size_t r = 0; r < sys.rows(); ++r)
      for (std::size_t c = 0; c < unk.size(); ++c) full(r, c) = sys(r, c);
    for (std::size_t r = 0; r < extra.size(); ++r)
      for (std::size_t c = 0; c < unk.size(); ++c) full(sys.rows() + r, c) = extra[r][c];
    auto ns = nullspace(full);
    if (!ns.empty()) return "counit relations leave " + std::to_string(ns.size()) + " free parameters";
    return std::nullopt;
  });

  auto a1 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(kit.S(A.e(a)), A.e(b)); });
  };
  auto a2 = [&](const Vec& t) {
    return on_pairs(t, n, n, [&](std::size_t a, std::size_t b) { return A.mul(A.e(a), kit.S(A.e(b))); });
  };

  rep.run("hopf.antipode-diagram-1", "antipode:diagram-left", [&]() -> Witness {
    if (auto w = kit.lift_independent("S(x1)x2", a1)) return w;
    for (std::size_t i = 0; i < n; ++i) {
      Vec f = a1(kit.delta_e(i));
      Vec s = A.s(kit.eps_flat(A.e(i)));
      for (std::size_t j = 0; j < n; ++j)
        if (A.mul(f, A.e(j)) != A.mul(s, A.e(j))) return pr(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("hopf.antipode-diagram-2", "antipode:diagram-right", [&]() -> Witness {
    if (auto w = kit.lift_independent("y1 S(y2)", a2)) return w;
    for (std::size_t j = 0; j < n; ++j) {
      Vec f = a2(kit.delta_e(j));
      Vec r = A.r(kit.eps_sharp(A.e(j)));
      for (std::size_t i = 0; i < n; ++i)
        if (A.mul(A.e(i), f) != A.mul(A.e(i), r)) return pr(A, i, j);
    }
    return std::nullopt;
  });

  rep.run("hopf.antipode-sigma", "antipode:flip", [&]() -> Witness {
    Algebroid coop = opposite(coopposite(A));
    FiberProduct f2 = fiber_product(coop, coop);
    auto ss = [&](const Vec& t) {
      return on_pairs(t, n, n * n, [&](std::size_t a, std::size_t b) { return tensor(kit.S(A.e(a)), kit.S(A.e(b))); });
    };
    auto flip = [&](const Vec& t) {
      Vec out(n * n);
      for (std::size_t p = 0; p < n * n; ++p)
        if (!t[p].is_zero()) out[(p % n) * n + p / n] = t[p];
      return out;
    };
    if (auto w = kit.lift_independent("S (x) S", ss, &f2.rel)) return w;
    if (auto w = kit.lift_independent("flip", flip, &f2.rel)) return w;
    for (std::size_t i = 0; i < n; ++i)
      if (!f2.same(ss(kit.delta_e(i)), flip(kit.delta(kit.S(A.e(i)))))) return "element " + lbl(A, i);
    return std::nullopt;
  });

  rep.run("hopf.antipode-antihomomorphism", "antipode:co-op-iso", [&]() -> Witness {
    if (!kit.has_Sinv()) return std::string("S is not bijective");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (kit.S(A.basis_mul(i, j)) != A.mul(kit.S(A.e(j)), kit.S(A.e(i)))) return "S(xy) != S(y)S(x) at " + pr(A, i, j);
    for (std::size_t x = 0; x < m; ++x)
      if (kit.S(A.r_img[x]) != A.s_img[x] || kit.S(A.s_img[x]) != A.r_img[x])
        return "S does not swap r and s at " + B.points[x];
    for (std::size_t i = 0; i < n; ++i) {
      Vec s = kit.S(A.e(i));
      if (is_zero(s)) continue;
      auto deg = A.degree(s);
      if (!deg || deg->first != G.inv[A.db[i]] || deg->second != G.inv[A.d[i]])
        return "S(" + lbl(A, i) + ") has the wrong degree";
    }
    for (std::size_t i = 0; i < n; ++i)
      if (A.star(kit.S(A.star(kit.S(A.e(i))))) != A.e(i)) return "S(S(x)*)* != x at " + lbl(A, i);
    return std::nullopt;
  });

  rep.run("hopf.antipode-unique", "antipode:uniqueness", [&]() -> Witness {
    // unknown S'_{k,a}; equations from both diagrams with y = 1 and x = 1
    GMatrix sys(2 * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec& t = kit.delta_e(i);
      for (std::size_t p = 0; p < n * n; ++p) {
        if (t[p].is_zero()) continue;
        std::size_t a = p / n, b = p % n;
        for (std::size_t k = 0; k < n; ++k) {
          Vec l = A.basis_mul(k, b);  // S'(e_a) = sum_k S'_{k,a} e_k
          Vec r = A.basis_mul(a, k);  // S'(e_b)
          for (std::size_t q = 0; q < n; ++q) {
            if (!l[q].is_zero()) sys(i * n + q, k * n + a) += t[p] * l[q];
            if (!r[q].is_zero()) sys(n * n + i * n + q, k * n + b) += t[p] * r[q];
          }
        }
      }
    }
    // S' is an anti-isomorphism swapping r and s and the two gradings
    std::vector<Vec> extra;
    auto var = [n](std::size_t k, std::size_t a) { return k * n + a; };
    auto module_rows = [&](std::size_t a, const Vec& b, bool b_left, const Vec& c, bool c_right) {
      // S'(b e_a) or S'(e_a b) against c S'(e_a) or S'(e_a) c
      Vec in = b_left ? A.mul(b, A.e(a)) : A.mul(A.e(a), b);
      std::vector<Vec> rows(n, Vec(n * n));
      for (std::size_t j = 0; j < n; ++j)
        if (!in[j].is_zero())
          for (std::size_t q = 0; q < n; ++q) rows[q][var(q, j)] += in[j];
      for (std::size_t k = 0; k < n; ++k) {
        Vec out = c_right ? A.mul(A.e(k), c) : A.mul(c, A.e(k));
        for (std::size_t q = 0; q < n; ++q)
          if (!out[q].is_zero()) rows[q][var(k, a)] -= out[q];
      }
      for (auto& r : rows)
        if (!is_zero(r)) extra.push_back(r);
    };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t x = 0; x < m; ++x) {
        module_rows(a, A.r_img[x], true, A.s_img[x], true);
        module_rows(a, A.s_img[x], true, A.r_img[x], true);
        module_rows(a, A.r_img[x], false, A.s_img[x], false);
        module_rows(a, A.s_img[x], false, A.r_img[x], false);
      }
      for (std::size_t k = 0; k < n; ++k)
        if (A.d[k] != G.inv[A.db[a]] || A.db[k] != G.inv[A.d[a]]) extra.push_back(unit(n * n, var(k, a)));
    }
    GMatrix full(sys.rows() + extra.size(), n * n);
    for (std::size_t r = 0; r < sys.rows(); ++r)
      for (std::size_t c = 0; c < n * n; ++c) full(r, c) = sys(r, c);
    for (std::size_t r = 0; r < extra.size(); ++r)
      for (std::size_t c = 0; c < n * n; ++c) full(sys.rows() + r, c) = extra[r][c];
    auto ns = nullspace(full);
    if (!ns.empty()) return "antipode relations leave " + std::to_string(ns.size()) + " free parameters";
    return std::nullopt;
  });

  for (int k = 1; k <= 4; ++k) {
    rep.run("hopf.galois-T" + std::to_string(k), "galois:bijective", [&, k]() -> Witness {
      if (!kit.has_Sinv()) return std::string("S is not invertible; no inverse formula");
      GaloisMap g = galois(kit, k);
      for (const auto& r : g.dom.rel.basis())
        if (!g.cod.rel.contains(g.t.apply(r))) return std::string("map not well defined");
      for (const auto& r : g.cod.rel.basis())
        if (!g.dom.rel.contains(g.t_inv.apply(r))) return std::string("inverse not well defined");
      for (std::size_t p = 0; p < n * n; ++p) {
        Vec u = unit(n * n, p);
        if (!g.dom.same(g.t_inv.apply(g.t.apply(u)), u)) return "T^-1 T != Id at " + pr(A, p / n, p % n);
        if (!g.cod.same(g.t.apply(g.t_inv.apply(u)), u)) return "T T^-1 != Id at " + pr(A, p / n, p % n);
      }
      Subspace img = g.cod.rel;
      for (std::size_t p = 0; p < n * n; ++p) img.add(g.t.col(p));
      if (img.rank() != n * n || g.dom.quotient_dim() != g.cod.quotient_dim())
        return "rank deficient: image rank " + std::to_string(img.rank() - g.cod.rel.rank()) + " of " +
               std::to_string(g.cod.quotient_dim());
      return std::nullopt;
    });
  }

  return rep;
}

}  // namespace dqg
