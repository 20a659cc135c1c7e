#pragma once

#include "dqg/integrals.hpp"

namespace dqg {

// Dual elements are represented by their preimages x in A, standing for the
// functional x^ = nu(S(x) -). The Fourier map is a bijection at finite
// dimension, so every operation on the dual is expressed through preimages.

// x^ as a row vector against the basis of A.
Vec fourier(const Measured& M, const Vec& x);
// x-check = nu(- S(x)) as a row vector.
Vec fourier_check(const Measured& M, const Vec& x);

// a * x^ = sum a2 r(psi(S(x) a1))
Vec convolve_right(const Measured& M, const Vec& a, const Vec& x);
// sum r(psi(a1 theta_Dbar(S(x)))) a2
Vec convolve_right_modular(const Measured& M, const Vec& a, const Vec& x);
// sum x1 s(psi(S(x2) a))
Vec convolve_right_strong(const Measured& M, const Vec& a, const Vec& x);
// x-check * a = sum s(phi(a2 S(x))) a1
Vec convolve_left(const Measured& M, const Vec& x, const Vec& a);

// Preimage of x^ y^, which is y * x^.
Vec dual_mul(const Measured& M, const Vec& x, const Vec& y);
// Preimage of (x^)^*, which is S(x)^*.
Vec dual_star(const Measured& M, const Vec& x);
// Preimages of r^(b) x^, x^ r^(b), s^(b) x^, x^ s^(b).
Vec dual_r_left(const Measured& M, const Vec& b, const Vec& x);
Vec dual_r_right(const Measured& M, const Vec& x, const Vec& b);
Vec dual_s_left(const Measured& M, const Vec& b, const Vec& x);
Vec dual_s_right(const Measured& M, const Vec& x, const Vec& b);

// Matrix whose row i is (e_i)^.
GMatrix fourier_matrix(const Measured& M);

Report check_dual(const Measured& M);

}  // namespace dqg
