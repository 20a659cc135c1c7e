#pragma once

#include <optional>

#include "dqg/fundamental.hpp"
#include "dqg/numeric.hpp"

namespace dqg {

// Tomita data of the Hilbert algebra Lambda_nu(A) on the coordinates of H.
// The antilinear maps S and J act as v |-> M conj(v).
struct Tomita {
  GMatrix S_sharp;  // Lambda_nu(a) |-> Lambda_nu(a^*)
  GMatrix delta;    // Delta_nu, defined by <v|Delta w> = <S w|S v>
  // Orthonormal frame: u = frame v turns the Gram of H into the identity.
  CMat frame;
  CMat frame_inv;
  CMat J;  // in the orthonormal frame
  double sqrt_residual = 0.0;
};

// Throws std::domain_error when a square root misses the tolerance.
Tomita build_tomita(const Measured& M, double tol);

// X in the orthonormal frame.
CMat in_frame(const Tomita& T, const GMatrix& x);
// J X^* J for a linear X on H, in the orthonormal frame.
CMat j_conjugate(const Tomita& T, const GMatrix& x);

// The element a with pi_nu(a) = x, when x lies in pi_nu(A).
std::optional<Vec> pi_nu_preimage(const Measured& M, const GMatrix& x);
// phi~(x) = pi_mu(phi(a)) and psi~(x) = pi_mu(psi(a)) for x = pi_nu(a).
std::optional<GMatrix> phi_tilde(const Measured& M, const GMatrix& x);
std::optional<GMatrix> psi_tilde(const Measured& M, const GMatrix& x);

// The isometry K (x) K -> H, Lambda_mu(b) (x) Lambda_mu(b') |-> Lambda_nu(r(b)s(b')).
GMatrix iota(const Measured& M);

// Tomita data, modular group at integer times, weight invariance, the
// identification of W^* and V with the fundamental unitaries of the weights,
// the operator antipode and the compression by h. `tol` bounds the numeric
// checks involving J_nu.
Report check_modular(const Fundamental& F, double tol = 1e-9);

}  // namespace dqg
