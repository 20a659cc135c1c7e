#include "dqg/algebroid.hpp"

#include <functional>
#include <sstream>

namespace dqg {

namespace {

std::string lbl(const Algebroid& a, std::size_t i) { return a.labels[i]; }

// Product in L (x) R of two ambient tensors.
Vec mul2(const Algebroid& l, const Algebroid& r, const Vec& u, const Vec& v) {
  const std::size_t nl = l.n(), nr = r.n();
  Vec out(nl * nr);
  for (std::size_t p = 0; p < u.size(); ++p) {
    if (u[p].is_zero()) continue;
    for (std::size_t q = 0; q < v.size(); ++q) {
      if (v[q].is_zero()) continue;
      Vec t = tensor(l.basis_mul(p / nr, q / nr), r.basis_mul(p % nr, q % nr));
      axpy(out, u[p] * v[q], t);
    }
  }
  return out;
}

}  // namespace

Vec Algebroid::basis_mul(std::size_t i, std::size_t j) const {
  Vec out(n());
  for (const auto& t : mult[i * n() + j]) out[t.k] += t.c;
  return out;
}

Vec Algebroid::mul(const Vec& a, const Vec& b) const {
  const std::size_t N = n();
  Vec out(N);
  for (std::size_t i = 0; i < N; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (b[j].is_zero()) continue;
      const auto& terms = mult[i * N + j];
      if (terms.empty()) continue;
      GQ f = a[i] * b[j];
      for (const auto& t : terms) out[t.k] += f * t.c;
    }
  }
  return out;
}

Vec Algebroid::star(const Vec& a) const { return star_m.apply(conj(a)); }

Vec Algebroid::r(const Vec& b) const {
  Vec out(n());
  for (std::size_t x = 0; x < b.size(); ++x) axpy(out, b[x], r_img[x]);
  return out;
}

Vec Algebroid::s(const Vec& b) const {
  Vec out(n());
  for (std::size_t x = 0; x < b.size(); ++x) axpy(out, b[x], s_img[x]);
  return out;
}

Vec Algebroid::one() const { return r(base->one()); }

GMatrix Algebroid::left_mul(const Vec& a) const {
  GMatrix m(n(), n());
  for (std::size_t j = 0; j < n(); ++j) m.set_col(j, mul(a, e(j)));
  return m;
}

GMatrix Algebroid::right_mul(const Vec& a) const {
  GMatrix m(n(), n());
  for (std::size_t j = 0; j < n(); ++j) m.set_col(j, mul(e(j), a));
  return m;
}

std::optional<std::pair<int, int>> Algebroid::degree(const Vec& a) const {
  std::optional<std::pair<int, int>> deg;
  for (std::size_t i = 0; i < n(); ++i) {
    if (a[i].is_zero()) continue;
    std::pair<int, int> di{d[i], db[i]};
    if (deg && *deg != di) return std::nullopt;
    deg = di;
  }
  return deg;
}

Algebroid build_algebra(BasePtr base, const AlgebraSpec& spec) {
  std::vector<std::string> bad;
  const std::size_t n = spec.basis.size();
  const std::size_t m = base->m();
  const int gsz = base->group.size();
  if (n == 0) bad.push_back("empty basis");
  if (spec.grading.size() != n) bad.push_back("grading has wrong length");
  for (const auto& g : spec.grading)
    if (g.first < 0 || g.first >= gsz || g.second < 0 || g.second >= gsz) bad.push_back("grading entry out of range");
  for (const auto& t : spec.mult)
    if (t.i >= n || t.j >= n || t.k >= n) bad.push_back("structure constant index out of range");
  for (const auto& s : spec.star)
    if (s.first >= n || s.second.size() != n) bad.push_back("star entry malformed");
  if (spec.r.size() != m || spec.s.size() != m) bad.push_back("r/s must be given for every point");
  for (const auto* side : {&spec.r, &spec.s})
    for (const auto& v : *side)
      if (v.size() != n) bad.push_back("r/s image has wrong length");
  if (!bad.empty()) throw ValidationError(bad);

  Algebroid a;
  a.base = std::move(base);
  a.labels = spec.basis;
  for (const auto& g : spec.grading) {
    a.d.push_back(g.first);
    a.db.push_back(g.second);
  }
  a.mult.assign(n * n, {});
  for (const auto& t : spec.mult) {
    auto& cell = a.mult[t.i * n + t.j];
    bool merged = false;
    for (auto& c : cell)
      if (c.k == t.k) {
        c.c += t.c;
        merged = true;
      }
    if (!merged) cell.push_back({t.k, t.c});
  }
  a.star_m = GMatrix(n, n);
  for (const auto& s : spec.star) a.star_m.set_col(s.first, s.second);
  a.r_img = spec.r;
  a.s_img = spec.s;
  return a;
}

Report check_algebroid(const Algebroid& a, const std::string& prefix) {
  Report rep;
  const std::size_t n = a.n();
  const Base& B = *a.base;
  const Group& G = a.group();
  const std::size_t m = B.m();

  rep.run(prefix + ".associative", "algebra:associativity", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec ij = a.basis_mul(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          if (a.mul(ij, a.e(k)) != a.mul(a.e(i), a.basis_mul(j, k)))
            return "(" + lbl(a, i) + "," + lbl(a, j) + "," + lbl(a, k) + ")";
        }
      }
    return std::nullopt;
  });

  rep.run(prefix + ".star-involutive", "algebra:star", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      if (a.star(a.star(a.e(i))) != a.e(i)) return "star(star(" + lbl(a, i) + ")) != " + lbl(a, i);
      Vec ie = a.e(i);
      ie[i] = GQ(Q(0), Q(1));
      if (a.star(ie) != GQ(Q(0), Q(-1)) * a.star(a.e(i))) return "star not antilinear at " + lbl(a, i);
    }
    return std::nullopt;
  });

  rep.run(prefix + ".star-antimultiplicative", "algebra:star", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a.star(a.basis_mul(i, j)) != a.mul(a.star(a.e(j)), a.star(a.e(i))))
          return "(" + lbl(a, i) + "," + lbl(a, j) + ")";
    return std::nullopt;
  });

  rep.run(prefix + ".grading-multiplicative", "algebra:grading", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec p = a.basis_mul(i, j);
        if (is_zero(p)) continue;
        auto deg = a.degree(p);
        std::pair<int, int> want{G.mul(a.d[i], a.d[j]), G.mul(a.db[i], a.db[j])};
        if (!deg || *deg != want) return "(" + lbl(a, i) + "," + lbl(a, j) + ")";
      }
    return std::nullopt;
  });

  rep.run(prefix + ".star-grading", "algebra:grading", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i) {
      auto deg = a.degree(a.star(a.e(i)));
      std::pair<int, int> want{G.inv[a.d[i]], G.inv[a.db[i]]};
      if (!deg || *deg != want) return "star(" + lbl(a, i) + ")";
    }
    return std::nullopt;
  });

  rep.run(prefix + ".unit", "algebra:unit", [&]() -> Witness {
    Vec one = a.one();
    if (a.s(B.one()) != one) return std::string("sum r(delta_x) != sum s(delta_x)");
    for (std::size_t i = 0; i < n; ++i)
      if (a.mul(one, a.e(i)) != a.e(i) || a.mul(a.e(i), one) != a.e(i)) return "1 * " + lbl(a, i);
    return std::nullopt;
  });

  rep.run(prefix + ".base-embeddings", "algebra:r-s-embeddings", [&]() -> Witness {
    for (int which = 0; which < 2; ++which) {
      const auto& img = which ? a.s_img : a.r_img;
      const std::string nm = which ? "s" : "r";
      for (std::size_t x = 0; x < m; ++x) {
        if (is_zero(img[x])) return nm + "(delta_" + B.points[x] + ") = 0";
        auto deg = a.degree(img[x]);
        if (!deg || deg->first != G.e || deg->second != G.e) return nm + "(delta_" + B.points[x] + ") not in A_(e,e)";
        if (a.star(img[x]) != img[x]) return nm + " not *-preserving at " + B.points[x];
        for (std::size_t y = 0; y < m; ++y) {
          Vec p = a.mul(img[x], img[y]);
          Vec want = x == y ? img[x] : Vec(n);
          if (p != want) return nm + " not multiplicative at (" + B.points[x] + "," + B.points[y] + ")";
        }
      }
    }
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        if (a.mul(a.r_img[x], a.s_img[y]) != a.mul(a.s_img[y], a.r_img[x]))
          return "r(delta_" + B.points[x] + ") and s(delta_" + B.points[y] + ") do not commute";
    return std::nullopt;
  });

  rep.run(prefix + ".twist-laws", "algebra:module-twist", [&]() -> Witness {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t x = 0; x < m; ++x) {
        Vec lhs = a.mul(a.e(i), a.r_img[x]);
        Vec rhs = a.mul(a.r_img[static_cast<std::size_t>(B.act_point(a.d[i], static_cast<int>(x)))], a.e(i));
        if (lhs != rhs) return lbl(a, i) + " r(delta_" + B.points[x] + ")";
        lhs = a.mul(a.e(i), a.s_img[x]);
        rhs = a.mul(a.s_img[static_cast<std::size_t>(B.act_point(a.db[i], static_cast<int>(x)))], a.e(i));
        if (lhs != rhs) return lbl(a, i) + " s(delta_" + B.points[x] + ")";
      }
    return std::nullopt;
  });

  return rep;
}

std::size_t cp_index(const Base& base, int g, int x) {
  return static_cast<std::size_t>(g) * base.m() + static_cast<std::size_t>(x);
}

AlgebraSpec crossed_product_spec(const Base& B) {
  const Group& G = B.group;
  const std::size_t m = B.m();
  const int gs = G.size();
  AlgebraSpec spec;
  for (int g = 0; g < gs; ++g)
    for (std::size_t x = 0; x < m; ++x) {
      spec.basis.push_back("d" + B.points[x] + "." + G.names[g]);
      spec.grading.emplace_back(g, g);
    }
  const std::size_t n = spec.basis.size();
  // (delta_x g)(delta_y h) = [x = g y] delta_x gh
  for (int g = 0; g < gs; ++g)
    for (int h = 0; h < gs; ++h)
      for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
          if (B.act_point(g, static_cast<int>(y)) == static_cast<int>(x))
            spec.mult.push_back({cp_index(B, g, static_cast<int>(x)), cp_index(B, h, static_cast<int>(y)),
                                 cp_index(B, G.mul(g, h), static_cast<int>(x)), GQ(1)});
  // (delta_x g)* = delta_{g^-1 x} g^-1
  for (int g = 0; g < gs; ++g)
    for (std::size_t x = 0; x < m; ++x) {
      int gi = G.inv[g];
      spec.star.emplace_back(cp_index(B, g, static_cast<int>(x)),
                             unit(n, cp_index(B, gi, B.act_point(gi, static_cast<int>(x)))));
    }
  for (std::size_t x = 0; x < m; ++x) {
    spec.r.push_back(unit(n, cp_index(B, G.e, static_cast<int>(x))));
    spec.s.push_back(unit(n, cp_index(B, G.e, static_cast<int>(x))));
  }
  return spec;
}

Algebroid crossed_product(BasePtr base) {
  AlgebraSpec spec = crossed_product_spec(*base);
  return build_algebra(std::move(base), spec);
}

AlgebraSpec spec_of(const Algebroid& a) {
  AlgebraSpec spec;
  const std::size_t n = a.n();
  spec.basis = a.labels;
  for (std::size_t i = 0; i < n; ++i) spec.grading.emplace_back(a.d[i], a.db[i]);
  for (std::size_t p = 0; p < n * n; ++p)
    for (const auto& t : a.mult[p]) spec.mult.push_back({p / n, p % n, t.k, t.c});
  for (std::size_t i = 0; i < n; ++i) spec.star.emplace_back(i, a.star_m.col(i));
  spec.r = a.r_img;
  spec.s = a.s_img;
  return spec;
}

Algebroid opposite(const Algebroid& a) {
  Algebroid o = a;
  const std::size_t n = a.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) o.mult[i * n + j] = a.mult[j * n + i];
  for (std::size_t i = 0; i < n; ++i) {
    o.d[i] = a.group().inv[a.d[i]];
    o.db[i] = a.group().inv[a.db[i]];
  }
  return o;
}

Algebroid coopposite(const Algebroid& a) {
  Algebroid c = a;
  c.d = a.db;
  c.db = a.d;
  c.r_img = a.s_img;
  c.s_img = a.r_img;
  return c;
}

bool same_tables(const Algebroid& a, const Algebroid& b) {
  if (a.n() != b.n() || a.d != b.d || a.db != b.db || !(a.star_m == b.star_m)) return false;
  if (a.r_img != b.r_img || a.s_img != b.s_img) return false;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (a.basis_mul(i, j) != b.basis_mul(i, j)) return false;
  return true;
}

Vec tensor(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

Vec tensor3(const Vec& a, const Vec& b, const Vec& c) { return tensor(tensor(a, b), c); }

std::string tag_name(ModTag t, bool left_factor) {
  std::string e = t.emb == Emb::R ? "r" : "s";
  std::string side = t.side == Side::Left ? e + "A" : "A" + e;
  (void)left_factor;
  return side;
}

Vec module_act(const Algebroid& a, ModTag t, const Vec& x, const Vec& b) {
  Vec eb = t.emb == Emb::R ? a.r(b) : a.s(b);
  return t.side == Side::Left ? a.mul(eb, x) : a.mul(x, eb);
}

BalancedTensor balanced_tensor(const Algebroid& a, ModTag left, ModTag right) {
  BalancedTensor bt;
  bt.left = left;
  bt.right = right;
  bt.n = a.n();
  bt.rel = Subspace(a.n() * a.n());
  const Base& B = *a.base;
  if (B.m() == 1) return bt;
  std::vector<std::vector<Vec>> lact(B.m()), ract(B.m());
  for (std::size_t x = 0; x < B.m(); ++x)
    for (std::size_t i = 0; i < a.n(); ++i) {
      lact[x].push_back(module_act(a, left, a.e(i), B.delta(static_cast<int>(x))));
      ract[x].push_back(module_act(a, right, a.e(i), B.delta(static_cast<int>(x))));
    }
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      for (std::size_t x = 0; x < B.m(); ++x)
        bt.rel.add(tensor(lact[x][i], a.e(j)) - tensor(a.e(i), ract[x][j]));
  return bt;
}

bool FiberProduct::in_graded(const Vec& v) const {
  for (std::size_t p = 0; p < v.size(); ++p)
    if (!v[p].is_zero() && !graded[p]) return false;
  return true;
}

std::vector<FiberRelation> fiber_relations(const Algebroid& l, const Algebroid& r) {
  std::vector<FiberRelation> out;
  const Base& B = *l.base;
  if (B.m() <= 1) return out;
  for (std::size_t x = 0; x < B.m(); ++x) {
    Vec sx = l.s_img[x], rx = r.r_img[x];
    for (std::size_t i = 0; i < l.n(); ++i) {
      Vec li = l.mul(sx, l.e(i));
      for (std::size_t j = 0; j < r.n(); ++j) {
        if (l.db[i] != r.d[j]) continue;
        out.push_back({i, j, x, tensor(li, r.e(j)) - tensor(l.e(i), r.mul(rx, r.e(j)))});
      }
    }
  }
  return out;
}

std::string relation_label(const Algebroid& l, const Algebroid& r, const FiberRelation& g) {
  return "(" + l.labels[g.i] + ", " + r.labels[g.j] + ") at point " + l.base->points[g.x];
}

FiberProduct fiber_product(const Algebroid& l, const Algebroid& r) {
  FiberProduct fp;
  fp.nl = l.n();
  fp.nr = r.n();
  fp.graded.assign(fp.nl * fp.nr, false);
  for (std::size_t i = 0; i < fp.nl; ++i)
    for (std::size_t j = 0; j < fp.nr; ++j) fp.graded[i * fp.nr + j] = l.db[i] == r.d[j];
  fp.rel = Subspace(fp.nl * fp.nr);
  for (const FiberRelation& g : fiber_relations(l, r)) fp.rel.add(g.v);
  std::vector<bool> piv(fp.nl * fp.nr, false);
  for (auto p : fp.rel.pivots()) piv[p] = true;
  for (std::size_t p = 0; p < fp.graded.size(); ++p)
    if (fp.graded[p] && !piv[p]) fp.basis.push_back(p);
  return fp;
}

Vec fp_coords(const FiberProduct& fp, const Vec& v) {
  Vec w = fp.project(v);
  Vec out(fp.basis.size());
  for (std::size_t k = 0; k < fp.basis.size(); ++k) out[k] = w[fp.basis[k]];
  return out;
}

Algebroid fiber_product_algebroid(const Algebroid& l, const Algebroid& r, const FiberProduct& fp) {
  AlgebraSpec spec;
  const std::size_t N = fp.basis.size();
  auto amb = [&](std::size_t k) { return unit(fp.nl * fp.nr, fp.basis[k]); };
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t i = fp.basis[k] / fp.nr, j = fp.basis[k] % fp.nr;
    spec.basis.push_back(l.labels[i] + "~" + r.labels[j]);
    spec.grading.emplace_back(l.d[i], r.db[j]);
  }
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      Vec c = fp_coords(fp, mul2(l, r, amb(p), amb(q)));
      for (std::size_t k = 0; k < N; ++k)
        if (!c[k].is_zero()) spec.mult.push_back({p, q, k, c[k]});
    }
  for (std::size_t p = 0; p < N; ++p) {
    std::size_t i = fp.basis[p] / fp.nr, j = fp.basis[p] % fp.nr;
    spec.star.emplace_back(p, fp_coords(fp, tensor(l.star(l.e(i)), r.star(r.e(j)))));
  }
  const Base& B = *l.base;
  for (std::size_t x = 0; x < B.m(); ++x) {
    spec.r.push_back(fp_coords(fp, tensor(l.r_img[x], r.one())));
    spec.s.push_back(fp_coords(fp, tensor(l.one(), r.s_img[x])));
  }
  return build_algebra(l.base, spec);
}

std::size_t TripleFiber::quotient_dim() const {
  std::size_t g = 0;
  for (bool b : graded) g += b;
  return g - rel.rank();
}

TripleFiber triple_fiber(const Algebroid& a) {
  TripleFiber t;
  const std::size_t n = a.n();
  t.n = n;
  t.graded.assign(n * n * n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.graded[(i * n + j) * n + k] = a.db[i] == a.d[j] && a.db[j] == a.d[k];
  t.rel = Subspace(n * n * n);
  const Base& B = *a.base;
  if (B.m() == 1) return t;
  for (std::size_t x = 0; x < B.m(); ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (!t.graded[(i * n + j) * n + k]) continue;
          Vec ei = a.e(i), ej = a.e(j), ek = a.e(k);
          t.rel.add(tensor3(a.mul(a.s_img[x], ei), ej, ek) - tensor3(ei, a.mul(a.r_img[x], ej), ek));
          t.rel.add(tensor3(ei, a.mul(a.s_img[x], ej), ek) - tensor3(ei, ej, a.mul(a.r_img[x], ek)));
        }
  return t;
}

std::string pair_label(const Algebroid& a, std::size_t i, std::size_t j) {
  return "(" + a.labels[i] + "," + a.labels[j] + ")";
}

Report check_fiber_product(const Algebroid& a, const FiberProduct& fp) {
  Report rep;
  const std::size_t n = a.n();
  const Base& B = *a.base;

  rep.run("fiber.ideal", "fiber-product:ideal", [&]() -> Witness {
    for (const auto& g : fp.rel.basis())
      for (std::size_t p = 0; p < n * n; ++p) {
        if (!fp.graded[p]) continue;
        Vec u = unit(n * n, p);
        if (!fp.rel.contains(mul2(a, a, g, u)) || !fp.rel.contains(mul2(a, a, u, g)))
          return "relation times " + pair_label(a, p / n, p % n);
      }
    for (const auto& g : fp.rel.basis()) {
      Vec sg(n * n);
      for (std::size_t p = 0; p < n * n; ++p)
        if (!g[p].is_zero())
          axpy(sg, g[p].conj(), tensor(a.star(a.e(p / n)), a.star(a.e(p % n))));
      if (!fp.rel.contains(sg)) return std::string("relations not *-closed");
    }
    return std::nullopt;
  });

  rep.run("fiber.section", "fiber-product:lift", [&]() -> Witness {
    for (std::size_t p = 0; p < n * n; ++p) {
      if (!fp.graded[p]) continue;
      Vec v = fp.project(unit(n * n, p));
      if (fp.project(v) != v) return "projection not idempotent at " + pair_label(a, p / n, p % n);
      if (!fp.in_graded(v)) return "normal form leaves the graded part at " + pair_label(a, p / n, p % n);
    }
    return std::nullopt;
  });

  rep.run("fiber.induced-algebroid", "fiber-product:structure", [&]() -> Witness {
    Algebroid f = fiber_product_algebroid(a, a, fp);
    Report sub = check_algebroid(f, "fiber");
    for (const auto& r : sub.results())
      if (!r.pass) return r.id + ": " + r.witness;
    return std::nullopt;
  });

  rep.run("fiber.unit-isos", "fiber-product:unital", [&]() -> Witness {
    Algebroid cp = crossed_product(a.base);
    const std::size_t nc = cp.n();
    // (B x| G) ~(x) A -> A, b g ~ a |-> r(b) a
    FiberProduct left = fiber_product(cp, a);
    auto fl = [&](std::size_t p) {
      std::size_t c = p / n, j = p % n;
      return a.mul(a.r_img[c % B.m()], a.e(j));
    };
    FiberProduct right = fiber_product(a, cp);
    auto fr = [&](std::size_t p) {
      std::size_t i = p / nc, c = p % nc;
      return a.mul(a.s_img[c % B.m()], a.e(i));
    };
    struct Side3 {
      const FiberProduct* fp;
      std::function<Vec(std::size_t)> f;
      const Algebroid* l;
      const Algebroid* r;
      const char* name;
    };
    for (const Side3& s : {Side3{&left, fl, &cp, &a, "left"}, Side3{&right, fr, &a, &cp, "right"}}) {
      auto apply = [&](const Vec& v) {
        Vec out(n);
        for (std::size_t p = 0; p < v.size(); ++p)
          if (!v[p].is_zero()) axpy(out, v[p], s.f(p));
        return out;
      };
      for (const auto& g : s.fp->rel.basis())
        if (!is_zero(apply(g))) return std::string(s.name) + " unit map not well defined";
      std::vector<Vec> imgs;
      for (auto p : s.fp->basis) imgs.push_back(s.f(p));
      if (span_of(n, imgs).rank() != n || s.fp->quotient_dim() != n)
        return std::string(s.name) + " unit map not bijective";
      for (auto p : s.fp->basis)
        for (auto q : s.fp->basis) {
          Vec u = unit(s.fp->nl * s.fp->nr, p), v = unit(s.fp->nl * s.fp->nr, q);
          if (apply(mul2(*s.l, *s.r, u, v)) != a.mul(s.f(p), s.f(q)))
            return std::string(s.name) + " unit map not multiplicative";
        }
    }
    return std::nullopt;
  });

  rep.run("fiber.associativity-iso", "fiber-product:associative", [&]() -> Witness {
    Algebroid f = fiber_product_algebroid(a, a, fp);
    TripleFiber t = triple_fiber(a);
    const std::size_t nf = f.n();
    // (A~A)~A and A~(A~A) both map onto the triple quotient
    for (int side = 0; side < 2; ++side) {
      FiberProduct q = side == 0 ? fiber_product(f, a) : fiber_product(a, f);
      auto g = [&](std::size_t p) {
        if (side == 0) {
          std::size_t u = fp.basis[p / n], k = p % n;
          return tensor(unit(n * n, u), a.e(k));
        }
        std::size_t i = p / nf, u = fp.basis[p % nf];
        return tensor(a.e(i), unit(n * n, u));
      };
      for (const auto& rel : q.rel.basis()) {
        Vec img(n * n * n);
        for (std::size_t p = 0; p < rel.size(); ++p)
          if (!rel[p].is_zero()) axpy(img, rel[p], g(p));
        if (!t.rel.contains(img)) return std::string(side ? "A~(A~A)" : "(A~A)~A") + " map not well defined";
      }
      Subspace s = t.rel;
      for (auto p : q.basis) s.add(g(p));
      if (s.rank() - t.rel.rank() != t.quotient_dim() || q.quotient_dim() != t.quotient_dim())
        return std::string(side ? "A~(A~A)" : "(A~A)~A") + " map not bijective";
    }
    return std::nullopt;
  });

  rep.run("fiber.co-flip", "fiber-product:co-compatible", [&]() -> Witness {
    Algebroid co = coopposite(a);
    FiberProduct fc = fiber_product(co, co);
    auto flip = [&](const Vec& v) {
      Vec out(n * n);
      for (std::size_t p = 0; p < n * n; ++p)
        if (!v[p].is_zero()) out[(p % n) * n + p / n] = v[p];
      return out;
    };
    for (const auto& g : fp.rel.basis())
      if (!fc.rel.contains(flip(g))) return std::string("flip not well defined");
    Subspace s = fc.rel;
    for (auto p : fp.basis) s.add(flip(unit(n * n, p)));
    if (s.rank() - fc.rel.rank() != fc.quotient_dim() || fc.quotient_dim() != fp.quotient_dim())
      return std::string("flip not bijective");
    for (auto p : fp.basis)
      for (auto q : fp.basis) {
        Vec u = unit(n * n, p), v = unit(n * n, q);
        if (!fc.same(flip(mul2(a, a, u, v)), mul2(co, co, flip(u), flip(v))))
          return "flip not multiplicative at " + pair_label(a, p / n, p % n);
      }
    return std::nullopt;
  });

  rep.run("fiber.grading", "fiber-product:grading", [&]() -> Witness {
    for (auto p : fp.basis) {
      std::size_t i = p / n, j = p % n;
      if (a.db[i] != a.d[j]) return "ungraded basis pair " + pair_label(a, i, j);
    }
    for (const auto& g : fp.rel.basis()) {
      std::optional<std::pair<int, int>> deg;
      for (std::size_t p = 0; p < g.size(); ++p) {
        if (g[p].is_zero()) continue;
        std::pair<int, int> dp{a.d[p / n], a.db[p % n]};
        if (deg && *deg != dp) return std::string("relation not homogeneous");
        deg = dp;
      }
    }
    return std::nullopt;
  });

  return rep;
}

}  // namespace dqg
