#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "dqg/hopf.hpp"

namespace dqg {

// phi, psi: per basis element an element of B. h: per basis element an
// element of B (x) B in coordinates x*m + y.
struct IntegralData {
  std::vector<Vec> phi;
  std::vector<Vec> psi;
  std::optional<std::vector<Vec>> h;
};

using HopfKitPtr = std::shared_ptr<const HopfKit>;

// A measured Hopf algebroid together with everything derived from nu.
// Fields are plain data so that tests can substitute single tables.
struct Measured {
  HopfKitPtr kit;
  IntegralData integ;
  Cocycle coc;

  GMatrix phi_m;  // m x n
  GMatrix psi_m;  // m x n
  GMatrix h_m;    // m^2 x n, empty without h
  Vec nu_row;     // nu(e_i)
  Vec nuinv_row;  // mu(psi(e_i))
  GMatrix nu_gram;  // nu(e_i^* e_j)
  GMatrix nu_pair;  // nu(e_i e_j)
  std::optional<GMatrix> theta;
  std::optional<GMatrix> theta_inv;
  // D, Dbar and their square roots, with inverses.
  GMatrix D, D_inv, Db, Db_inv, Dh, Dh_inv, Dbh, Dbh_inv;

  const Algebroid& A() const { return kit->A(); }
  const Base& B() const { return *kit->A().base; }
  std::size_t n() const { return kit->n(); }
  std::size_t m() const { return B().m(); }
  bool has_h() const { return h_m.rows() > 0; }

  Vec phi(const Vec& x) const { return phi_m.apply(x); }
  Vec psi(const Vec& x) const { return psi_m.apply(x); }
  Vec h(const Vec& x) const { return h_m.apply(x); }
  GQ nu(const Vec& x) const;
  GQ nu_inv(const Vec& x) const;
  const GMatrix& th() const;      // throws when nu is degenerate
  const GMatrix& th_inv() const;  // idem
  GMatrix theta_D() const { return th() * D_inv; }
  GMatrix theta_Db() const { return th() * Db_inv; }
  GMatrix theta_DDb() const { return th() * D_inv * Db_inv; }
};

using MeasuredPtr = std::shared_ptr<const Measured>;

// Solves nu(xy) = nu(y theta(x)) against the pairing matrix.
std::optional<GMatrix> solve_theta(const GMatrix& nu_pair);

Measured build_measured(HopfKitPtr kit, IntegralData integ, Cocycle coc);
// Recomputes every table derived from phi, psi, h and the cocycle.
void refresh_derived(Measured& m);

// The elements a, a' built from (c, d); they satisfy nu(z a) = nu(a' z).
std::pair<Vec, Vec> constructive_pair(const Measured& M, const Vec& c, const Vec& d);

Report check_integrals(const Measured& M, int constructive_samples = 20, unsigned seed = 20240601u);

}  // namespace dqg
