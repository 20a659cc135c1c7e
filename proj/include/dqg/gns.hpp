#pragma once

#include "dqg/integrals.hpp"

namespace dqg {

// The four representations of pi_mu(B) on H:
// alpha = left r(b), beta = left s(b), alpha^ = right s(b), beta^ = right r(b).
enum class Rep { Alpha, Beta, AlphaHat, BetaHat };

std::string rep_name(Rep r);
inline constexpr Rep kReps[] = {Rep::Alpha, Rep::Beta, Rep::AlphaHat, Rep::BetaHat};

// GNS spaces K of mu and H of nu, both on their natural coordinates
// (Lambda_mu and Lambda_nu are the identity on coordinates). Operators
// K -> H are n x m matrices.
class Gns {
 public:
  explicit Gns(const Measured& M);

  const Measured& measured() const { return M_; }
  const GramSpacePtr& K() const { return K_; }
  const GramSpacePtr& H() const { return H_; }

  // Lambda_phi(x): b |-> x r(b); Lambda_psi(x): b |-> x s(b);
  // Lambda_phi^dag(x): b |-> r(b) x; Lambda_psi^dag(x): b |-> s(b) x.
  GMatrix lam_phi(const Vec& x) const;
  GMatrix lam_psi(const Vec& x) const;
  GMatrix lam_phi_dag(const Vec& x) const;
  GMatrix lam_psi_dag(const Vec& x) const;

  GMatrix pi_mu(const Vec& b) const;
  GMatrix pi_nu(const Vec& a) const;
  GMatrix rep(Rep r, const Vec& b) const;
  // R^{rep}_{Lambda_nu(x)}; these operators span the module space of `r`.
  GMatrix R(Rep r, const Vec& x) const;
  // Closed form of <Lambda_nu(x)|Lambda_nu(y)>_{rep} as an element of B and
  // as the operator pi_mu of it.
  Vec inner_b(Rep r, const Vec& x, const Vec& y) const;
  GMatrix inner(Rep r, const Vec& x, const Vec& y) const { return pi_mu(inner_b(r, x, y)); }

  // Adjoints for the fixed Grams; both are nonsingular.
  GMatrix adj_kh(const GMatrix& x) const;  // x: K -> H
  GMatrix adj_hk(const GMatrix& x) const;  // x: H -> K
  GMatrix adj_h(const GMatrix& x) const;   // x: H -> H
  GMatrix adj_k(const GMatrix& x) const;   // x: K -> K
  // Adjoint of x: H -> T for a space T with Gram matrix gram_t.
  GMatrix adj_from_h(const GMatrix& x, const GMatrix& gram_t) const { return h_inv_ * (x.adjoint() * gram_t); }

 private:
  GMatrix lam(const Vec& x, bool use_r, bool left) const;

  const Measured& M_;
  GramSpacePtr K_, H_;
  GMatrix k_inv_, h_inv_;
};

Report check_gns(const Measured& M);

}  // namespace dqg
