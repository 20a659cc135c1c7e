#include "dqg/instance.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace dqg {

using nlohmann::json;

Built build(const Instance& inst) {
  Built b;
  b.base = std::make_shared<Base>(build_base(inst.base_spec));
  b.alg = std::make_shared<Algebroid>(build_algebra(b.base, inst.algebra));
  const std::size_t n = b.alg->n();
  const std::size_t nc = b.base->m() * static_cast<std::size_t>(b.base->group.size());
  std::vector<std::string> bad;
  if (inst.delta.size() != n) bad.push_back("hopf.delta needs one entry per basis element");
  for (const auto& v : inst.delta)
    if (v.size() != n * n) bad.push_back("hopf.delta entry has wrong length");
  if (inst.counit.size() != n) bad.push_back("hopf.counit needs one entry per basis element");
  for (const auto& v : inst.counit)
    if (v.size() != nc) bad.push_back("hopf.counit entry has wrong length");
  if (inst.antipode.rows() != n || inst.antipode.cols() != n) bad.push_back("hopf.antipode has wrong shape");
  if (!bad.empty()) throw ValidationError(bad);
  b.kit = std::make_shared<HopfKit>(HopfData{b.alg, inst.delta, inst.counit, inst.antipode});
  try {
    b.coc = solve_cocycle(*b.base, inst.sqrt_cocycle);
  } catch (const CocycleError& e) {
    b.cocycle_error = e.what();
  }
  if (b.coc) b.measured = std::make_shared<Measured>(build_measured(b.kit, inst.integrals, *b.coc));
  return b;
}

namespace {

BaseSpec trivial_group_base(const std::vector<std::string>& points, const std::vector<Q>& weight) {
  BaseSpec s;
  s.points = points;
  s.elements = {"e"};
  s.table = {{0}};
  s.action = {std::vector<int>(points.size())};
  std::iota(s.action[0].begin(), s.action[0].end(), 0);
  s.weight = weight;
  return s;
}

}  // namespace

Instance example_pair(const std::vector<std::string>& points, const std::vector<Q>& weight) {
  if (points.empty()) throw std::invalid_argument("pair example needs at least one point");
  if (weight.size() != points.size()) throw std::invalid_argument("one weight per point required");
  Instance inst;
  inst.name = "pair";
  inst.description = "pair algebroid B (x) B over " + std::to_string(points.size()) + " points";
  inst.base_spec = trivial_group_base(points, weight);
  const std::size_t m = points.size(), n = m * m;
  auto idx = [m](std::size_t u, std::size_t v) { return u * m + v; };
  AlgebraSpec& a = inst.algebra;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      a.basis.push_back("d" + points[u] + "_d" + points[v]);
      a.grading.emplace_back(0, 0);
      a.mult.push_back({idx(u, v), idx(u, v), idx(u, v), GQ(1)});
      a.star.emplace_back(idx(u, v), unit(n, idx(u, v)));
    }
  for (std::size_t x = 0; x < m; ++x) {
    Vec r(n), s(n);
    for (std::size_t v = 0; v < m; ++v) {
      r[idx(x, v)] = GQ(1);
      s[idx(v, x)] = GQ(1);
    }
    a.r.push_back(r);
    a.s.push_back(s);
  }
  inst.antipode = GMatrix(n, n);
  std::vector<Vec> h;
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v) {
      Vec t(n * n);
      for (std::size_t z = 0; z < m; ++z) t[idx(u, z) * n + idx(z, v)] = GQ(1);
      inst.delta.push_back(t);
      inst.counit.push_back(u == v ? unit(m, u) : Vec(m));
      inst.antipode(idx(v, u), idx(u, v)) = GQ(1);
      inst.integrals.phi.push_back(GQ(weight[v]) * unit(m, u));
      inst.integrals.psi.push_back(GQ(weight[u]) * unit(m, v));
      h.push_back(unit(m * m, idx(u, v)));
    }
  inst.integrals.h = h;
  return inst;
}

Instance example_crossed(const BaseSpec& bs) {
  Base base = build_base(bs);
  solve_cocycle(base);  // rejects non-rational square roots
  Instance inst;
  inst.name = "crossed";
  inst.description = "crossed product B x| Gamma over " + std::to_string(base.m()) + " points";
  inst.base_spec = bs;
  inst.algebra = crossed_product_spec(base);
  const Group& G = base.group;
  const std::size_t m = base.m();
  const std::size_t n = m * static_cast<std::size_t>(G.size());
  inst.antipode = GMatrix(n, n);
  for (int g = 0; g < G.size(); ++g)
    for (std::size_t x = 0; x < m; ++x) {
      const int xi = static_cast<int>(x);
      const std::size_t i = cp_index(base, g, xi);
      // Delta(delta_x g) = delta_x g (x) g
      Vec t(n * n);
      for (std::size_t y = 0; y < m; ++y) t[i * n + cp_index(base, g, static_cast<int>(y))] = GQ(1);
      inst.delta.push_back(t);
      inst.counit.push_back(unit(n, i));
      // S(delta_x g) = delta_{g^-1 x} g^-1
      const int gi = G.inv[g];
      inst.antipode(cp_index(base, gi, base.act_point(gi, xi)), i) = GQ(1);
      Vec phi = g == G.e ? unit(m, x) : Vec(m);
      inst.integrals.phi.push_back(phi);
    }
  GMatrix phi_m = GMatrix::from_columns(m, inst.integrals.phi);
  for (std::size_t i = 0; i < n; ++i) inst.integrals.psi.push_back(phi_m.apply(inst.antipode.col(i)));
  return inst;
}

Instance example_group(const std::vector<std::string>& elements, const std::vector<std::vector<int>>& table) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n) throw std::invalid_argument("group table does not match its element list");
  int id = -1;
  for (std::size_t g = 0; g < n && id < 0; ++g) {
    bool ok = table[g].size() == n;
    for (std::size_t h = 0; ok && h < n; ++h) ok = table[g][h] == static_cast<int>(h) && table[h][g] == static_cast<int>(h);
    if (ok) id = static_cast<int>(g);
  }
  if (id < 0) throw std::invalid_argument("group table has no identity");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] == id) inv[g] = h;
  for (auto v : inv)
    if (v == n) throw std::invalid_argument("group table has an element without inverse");

  Instance inst;
  inst.name = "group";
  inst.description = "group algebra of a group of order " + std::to_string(n);
  inst.base_spec = trivial_group_base({"pt"}, {Q(1)});
  AlgebraSpec& a = inst.algebra;
  a.basis = elements;
  inst.antipode = GMatrix(n, n);
  std::vector<Vec> h;
  for (std::size_t g = 0; g < n; ++g) {
    a.grading.emplace_back(0, 0);
    for (std::size_t k = 0; k < n; ++k) a.mult.push_back({g, k, static_cast<std::size_t>(table[g][k]), GQ(1)});
    a.star.emplace_back(g, unit(n, inv[g]));
    Vec t(n * n);
    t[g * n + g] = GQ(1);
    inst.delta.push_back(t);
    inst.counit.push_back(Vec{GQ(1)});
    inst.antipode(inv[g], g) = GQ(1);
    Vec v{static_cast<int>(g) == id ? GQ(1) : GQ()};
    inst.integrals.phi.push_back(v);
    inst.integrals.psi.push_back(v);
    h.push_back(v);
  }
  a.r = {unit(n, static_cast<std::size_t>(id))};
  a.s = {unit(n, static_cast<std::size_t>(id))};
  inst.integrals.h = h;
  return inst;
}

Instance example_sweedler4() {
  Instance inst;
  inst.name = "sweedler4";
  inst.description = "Sweedler's 4-dimensional Hopf algebra with g* = g, x* = x";
  inst.base_spec = trivial_group_base({"pt"}, {Q(1)});
  AlgebraSpec& a = inst.algebra;
  a.basis = {"1", "g", "x", "gx"};
  for (int i = 0; i < 4; ++i) a.grading.emplace_back(0, 0);
  auto mul = [&](std::size_t i, std::size_t j, std::size_t k, int c) { a.mult.push_back({i, j, k, GQ(c)}); };
  for (std::size_t i = 0; i < 4; ++i) {
    mul(0, i, i, 1);
    if (i > 0) mul(i, 0, i, 1);
  }
  mul(1, 1, 0, 1);
  mul(1, 2, 3, 1);
  mul(1, 3, 2, 1);
  mul(2, 1, 3, -1);
  mul(3, 1, 2, -1);
  a.star = {{0, unit(4, 0)}, {1, unit(4, 1)}, {2, unit(4, 2)}, {3, GQ(-1) * unit(4, 3)}};
  a.r = {unit(4, 0)};
  a.s = {unit(4, 0)};
  auto tensor = [](std::vector<std::pair<std::size_t, std::size_t>> terms) {
    Vec t(16);
    for (auto [i, j] : terms) t[i * 4 + j] += GQ(1);
    return t;
  };
  // g grouplike, x (1, g)-primitive: D(x) = x(x)1 + g(x)x
  inst.delta = {tensor({{0, 0}}), tensor({{1, 1}}), tensor({{2, 0}, {1, 2}}), tensor({{3, 1}, {0, 3}})};
  inst.counit = {Vec{GQ(1)}, Vec{GQ(1)}, Vec{GQ()}, Vec{GQ()}};
  inst.antipode = GMatrix(4, 4);
  inst.antipode(0, 0) = GQ(1);
  inst.antipode(1, 1) = GQ(1);
  inst.antipode(3, 2) = GQ(-1);
  inst.antipode(2, 3) = GQ(1);
  inst.integrals.phi = {Vec{GQ()}, Vec{GQ()}, Vec{GQ()}, Vec{GQ(1)}};
  inst.integrals.psi = {Vec{GQ()}, Vec{GQ()}, Vec{GQ(1)}, Vec{GQ()}};
  return inst;
}

std::pair<std::vector<std::string>, std::vector<std::vector<int>>> named_group(const std::string& name) {
  std::vector<std::string> el;
  std::vector<std::vector<int>> tab;
  if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'z')) {
    int k = 0;
    try {
      k = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("unknown group " + name);
    }
    if (k < 1) throw std::invalid_argument("cyclic group order must be positive");
    for (int g = 0; g < k; ++g) {
      el.push_back(g == 0 ? "e" : "g" + std::to_string(g));
      tab.emplace_back();
      for (int h = 0; h < k; ++h) tab.back().push_back((g + h) % k);
    }
    return {el, tab};
  }
  if (name == "S3" || name == "s3") {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto cycle_name = [](const std::array<int, 3>& q) -> std::string {
      std::string s;
      std::array<bool, 3> seen{};
      for (int i = 0; i < 3; ++i) {
        if (seen[i] || q[i] == i) continue;
        s += "(";
        for (int j = i; !seen[j]; j = q[j]) {
          seen[j] = true;
          s += std::to_string(j + 1);
        }
        s += ")";
      }
      return s.empty() ? "e" : s;
    };
    for (const auto& q : perms) el.push_back(cycle_name(q));
    for (const auto& a : perms) {
      tab.emplace_back();
      for (const auto& b : perms) {
        std::array<int, 3> c{a[b[0]], a[b[1]], a[b[2]]};  // a after b
        tab.back().push_back(static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin()));
      }
    }
    return {el, tab};
  }
  throw std::invalid_argument("unknown group " + name + " (expected Z<n> or S3)");
}

BaseSpec instance_c_base(const std::vector<Q>& weight) {
  BaseSpec s;
  s.points = {"1", "2", "3"};
  s.elements = {"e", "g"};
  s.table = {{0, 1}, {1, 0}};
  s.action = {{0, 1, 2}, {1, 0, 2}};
  s.weight = weight;
  return s;
}

json scalar_json(const GQ& z) {
  if (sgn(z.im) == 0) return rational_str(z.re);
  return json{{"re", rational_str(z.re)}, {"im", rational_str(z.im)}};
}

GQ scalar_from_json(const json& j) {
  if (j.is_string()) return GQ(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return GQ(Q(j.get<long>()));
  if (j.is_object() && j.contains("re")) {
    GQ z(parse_rational(j.at("re").get<std::string>()));
    if (j.contains("im")) z.im = parse_rational(j.at("im").get<std::string>());
    return z;
  }
  throw std::invalid_argument("scalar must be a \"p/q\" string or {\"re\",\"im\"}");
}

namespace {

json sparse(const Vec& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.push_back(json::array({i, scalar_json(v[i])}));
  return out;
}

json point_map(const Base& B, const Vec& b) {
  json out = json::object();
  for (std::size_t x = 0; x < b.size(); ++x)
    if (!b[x].is_zero()) out[B.points[x]] = scalar_json(b[x]);
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& s, const char* what) {
  auto it = std::find(names.begin(), names.end(), s);
  if (it == names.end()) throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::size_t checked_index(const json& j, std::size_t bound, const char* what) {
  auto i = j.get<long>();
  if (i < 0 || static_cast<std::size_t>(i) >= bound) throw std::invalid_argument(std::string(what) + " index out of range");
  return static_cast<std::size_t>(i);
}

Vec vec_from_sparse(const json& j, std::size_t n, const char* what) {
  Vec v(n);
  for (const auto& e : j) v[checked_index(e.at(0), n, what)] += scalar_from_json(e.at(1));
  return v;
}

Vec vec_from_point_map(const json& j, const std::vector<std::string>& points) {
  Vec v(points.size());
  for (auto it = j.begin(); it != j.end(); ++it) v[index_of(points, it.key(), "point")] += scalar_from_json(it.value());
  return v;
}

}  // namespace

json to_json(const Instance& inst) {
  const BaseSpec& bs = inst.base_spec;
  Base B = build_base(bs);
  const std::size_t n = inst.algebra.basis.size(), m = B.m();
  json j;
  j["name"] = inst.name;
  j["description"] = inst.description;
  json base;
  base["points"] = bs.points;
  base["group"] = {{"elements", bs.elements}, {"table", bs.table}};
  base["action"] = bs.action;
  json w = json::object();
  for (std::size_t x = 0; x < m; ++x) w[bs.points[x]] = rational_str(bs.weight[x]);
  base["weight"] = w;
  if (inst.sqrt_cocycle) {
    json sc = json::object();
    for (std::size_t g = 0; g < bs.elements.size(); ++g) {
      json row = json::object();
      for (std::size_t x = 0; x < m; ++x) row[bs.points[x]] = rational_str((*inst.sqrt_cocycle)[g][x]);
      sc[bs.elements[g]] = row;
    }
    base["sqrt_cocycle"] = sc;
  }
  j["base"] = base;

  const AlgebraSpec& a = inst.algebra;
  json alg;
  alg["basis"] = a.basis;
  json gr = json::array();
  for (const auto& g : a.grading) gr.push_back(json::array({bs.elements[g.first], bs.elements[g.second]}));
  alg["grading"] = gr;
  json mult = json::array();
  for (const auto& t : a.mult) mult.push_back(json::array({t.i, t.j, t.k, scalar_json(t.c)}));
  alg["mult"] = mult;
  json star = json::array();
  for (const auto& s : a.star)
    for (std::size_t k = 0; k < n; ++k)
      if (!s.second[k].is_zero()) star.push_back(json::array({s.first, k, scalar_json(s.second[k])}));
  alg["star"] = star;
  json r = json::object(), s = json::object();
  for (std::size_t x = 0; x < m; ++x) {
    r[bs.points[x]] = sparse(a.r[x]);
    s[bs.points[x]] = sparse(a.s[x]);
  }
  alg["r"] = r;
  alg["s"] = s;
  j["algebra"] = alg;

  json hopf;
  json delta = json::array();
  for (const auto& t : inst.delta) {
    json terms = json::array();
    for (std::size_t p = 0; p < t.size(); ++p)
      if (!t[p].is_zero()) terms.push_back(json::array({p / n, p % n, scalar_json(t[p])}));
    delta.push_back(terms);
  }
  hopf["delta"] = delta;
  json counit = json::array();
  for (const auto& c : inst.counit) {
    json terms = json::array();
    for (std::size_t p = 0; p < c.size(); ++p)
      if (!c[p].is_zero()) terms.push_back(json::array({bs.elements[p / m], bs.points[p % m], scalar_json(c[p])}));
    counit.push_back(terms);
  }
  hopf["counit"] = counit;
  json anti = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!inst.antipode(k, i).is_zero()) anti.push_back(json::array({i, k, scalar_json(inst.antipode(k, i))}));
  hopf["antipode"] = anti;
  j["hopf"] = hopf;

  json integ;
  json phi = json::array(), psi = json::array();
  for (const auto& v : inst.integrals.phi) phi.push_back(point_map(B, v));
  for (const auto& v : inst.integrals.psi) psi.push_back(point_map(B, v));
  integ["phi"] = phi;
  integ["psi"] = psi;
  if (inst.integrals.h) {
    json h = json::array();
    for (const auto& v : *inst.integrals.h) {
      json terms = json::array();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) terms.push_back(json::array({bs.points[k / m], bs.points[k % m], scalar_json(v[k])}));
      h.push_back(terms);
    }
    integ["h"] = h;
  }
  j["integrals"] = integ;
  return j;
}

Instance from_json(const json& j) {
  Instance inst;
  try {
    inst.name = j.value("name", "");
    inst.description = j.value("description", "");
    const json& base = j.at("base");
    BaseSpec& bs = inst.base_spec;
    bs.points = base.at("points").get<std::vector<std::string>>();
    bs.elements = base.at("group").at("elements").get<std::vector<std::string>>();
    bs.table = base.at("group").at("table").get<std::vector<std::vector<int>>>();
    bs.action = base.at("action").get<std::vector<std::vector<int>>>();
    const json& w = base.at("weight");
    for (const auto& p : bs.points) {
      if (!w.contains(p)) throw std::invalid_argument("weight missing for point '" + p + "'");
      GQ z = scalar_from_json(w.at(p));
      if (sgn(z.im) != 0) throw std::invalid_argument("weight must be rational");
      bs.weight.push_back(z.re);
    }
    const std::size_t m = bs.points.size();
    if (base.contains("sqrt_cocycle")) {
      std::vector<std::vector<Q>> sc(bs.elements.size(), std::vector<Q>(m, Q(1)));
      for (auto it = base.at("sqrt_cocycle").begin(); it != base.at("sqrt_cocycle").end(); ++it) {
        std::size_t g = index_of(bs.elements, it.key(), "group element");
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
          sc[g][index_of(bs.points, jt.key(), "point")] = scalar_from_json(jt.value()).re;
      }
      inst.sqrt_cocycle = sc;
    }

    const json& alg = j.at("algebra");
    AlgebraSpec& a = inst.algebra;
    a.basis = alg.at("basis").get<std::vector<std::string>>();
    const std::size_t n = a.basis.size();
    for (const auto& g : alg.at("grading"))
      a.grading.emplace_back(static_cast<int>(index_of(bs.elements, g.at(0).get<std::string>(), "group element")),
                             static_cast<int>(index_of(bs.elements, g.at(1).get<std::string>(), "group element")));
    for (const auto& t : alg.at("mult"))
      a.mult.push_back({checked_index(t.at(0), n, "mult"), checked_index(t.at(1), n, "mult"),
                        checked_index(t.at(2), n, "mult"), scalar_from_json(t.at(3))});
    std::map<std::size_t, Vec> star;
    for (const auto& t : alg.at("star")) {
      std::size_t i = checked_index(t.at(0), n, "star");
      auto [it, fresh] = star.try_emplace(i, Vec(n));
      (void)fresh;
      it->second[checked_index(t.at(1), n, "star")] += scalar_from_json(t.at(2));
    }
    for (auto& [i, v] : star) a.star.emplace_back(i, v);
    for (const auto& p : bs.points) {
      a.r.push_back(vec_from_sparse(alg.at("r").at(p), n, "r"));
      a.s.push_back(vec_from_sparse(alg.at("s").at(p), n, "s"));
    }

    const json& hopf = j.at("hopf");
    for (const auto& terms : hopf.at("delta")) {
      Vec t(n * n);
      for (const auto& e : terms)
        t[checked_index(e.at(0), n, "delta") * n + checked_index(e.at(1), n, "delta")] += scalar_from_json(e.at(2));
      inst.delta.push_back(t);
    }
    for (const auto& terms : hopf.at("counit")) {
      Vec c(m * bs.elements.size());
      for (const auto& e : terms)
        c[index_of(bs.elements, e.at(0).get<std::string>(), "group element") * m +
          index_of(bs.points, e.at(1).get<std::string>(), "point")] += scalar_from_json(e.at(2));
      inst.counit.push_back(c);
    }
    inst.antipode = GMatrix(n, n);
    for (const auto& e : hopf.at("antipode"))
      inst.antipode(checked_index(e.at(1), n, "antipode"), checked_index(e.at(0), n, "antipode")) +=
          scalar_from_json(e.at(2));

    const json& integ = j.at("integrals");
    for (const auto& v : integ.at("phi")) inst.integrals.phi.push_back(vec_from_point_map(v, bs.points));
    for (const auto& v : integ.at("psi")) inst.integrals.psi.push_back(vec_from_point_map(v, bs.points));
    if (integ.contains("h")) {
      std::vector<Vec> h;
      for (const auto& terms : integ.at("h")) {
        Vec v(m * m);
        for (const auto& e : terms)
          v[index_of(bs.points, e.at(0).get<std::string>(), "point") * m +
            index_of(bs.points, e.at(1).get<std::string>(), "point")] += scalar_from_json(e.at(2));
        h.push_back(v);
      }
      inst.integrals.h = h;
    }
  } catch (const json::exception& e) {
    throw ValidationError({std::string("malformed instance: ") + e.what()});
  } catch (const std::invalid_argument& e) {
    throw ValidationError({std::string("malformed instance: ") + e.what()});
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open " + path});
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError({"parse error in " + path + ": " + e.what()});
  }
  return from_json(j);
}

}  // namespace dqg
