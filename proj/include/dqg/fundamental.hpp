#pragma once

#include "dqg/dual.hpp"
#include "dqg/gns.hpp"

namespace dqg {

// H (x) H relative to a pair of commuting representations, on ambient
// coordinates x (x) y at index i*n + j. The Gram matrix is
// <x (x) y|x' (x) y'> = <x|left(<y|y'>_right) x'>.
struct RelTensor {
  Rep left;
  Rep right;
  GramSpacePtr space;
  GMatrix gram_other;  // <y|right(<x|x'>_left) y'>, equal when the product is balanced
};

RelTensor rel_tensor(const Gns& G, Rep left, Rep right);

// The fundamental unitaries W: (beta, alpha) -> (alpha, beta^) and
// V: (alpha^, beta) -> (beta, alpha) together with the operators built from
// them. Matrix fields are plain data so that tests can substitute them.
class Fundamental {
 public:
  explicit Fundamental(const Gns& G);

  const Gns& gns() const { return G_; }
  const Measured& measured() const { return G_.measured(); }

  RelTensor ba;   // H beta(x)alpha H
  RelTensor ab;   // H alpha(x)beta^ H
  RelTensor ahb;  // H alpha^(x)beta H

  // Each unitary is built from both of its closed formulas.
  GMatrix W, W_alt, Wstar, Wstar_alt;
  GMatrix V, V_alt, Vstar, Vstar_alt;

  // lambda_x: y |-> x (x) y and rho_y: x |-> x (x) y, as n^2 x n matrices.
  GMatrix lambda(const Vec& x) const;
  GMatrix rho(const Vec& y) const;
  // Adjoint of an operator H -> t.
  GMatrix leg_adjoint(const RelTensor& t, const GMatrix& op) const;

  GMatrix pi_nu(const Vec& a) const { return G_.pi_nu(a); }
  // rho(c^): y |-> y * c^
  GMatrix rho_hat(const Vec& c) const;
  // c-check * -: x |-> sum s(phi(x2 S(c))) x1
  GMatrix conv_left(const Vec& c) const;

  // (Id * omega_{y,y'})(W^*) and (omega_{x,x'} * Id)(W^*) by composing leg maps.
  GMatrix slice_wstar_right(const Vec& y, const Vec& yp) const;
  GMatrix slice_wstar_left(const Vec& x, const Vec& xp) const;
  // Slices of W itself, with the leg maps of the swapped spaces.
  GMatrix slice_w_right(const Vec& y, const Vec& yp) const;
  GMatrix slice_w_left(const Vec& x, const Vec& xp) const;
  // (omega_{x,x'} * Id)(V) and (Id * omega_{y,y'})(V).
  GMatrix slice_v_left(const Vec& x, const Vec& xp) const;
  GMatrix slice_v_right(const Vec& y, const Vec& yp) const;

  // Closed-form elements for the slices above:
  // a = sum Dbar^-1/2(y'1 s(phi(y^* y'2))), c = S^-1(Dbar^1/2(theta^-1(x') x^*)),
  // a_V = sum D^-1/2(x'2 r(psi(x^* x'1))), c_V = S^-1(D^-1/2(y' theta(y^*))).
  Vec slice_element(const Vec& y, const Vec& yp) const;
  Vec slice_dual(const Vec& x, const Vec& xp) const;
  Vec slice_v_element(const Vec& x, const Vec& xp) const;
  Vec slice_v_dual(const Vec& y, const Vec& yp) const;

  // Delta(pi(a)) = W^*(Id (x) pi(a))W on (beta, alpha), and its closed form
  // x (x) y |-> sum a1 x (x) D^1/2(a2) y.
  GMatrix delta_op(const Vec& a) const;
  GMatrix delta_formula(const Vec& a) const;
  // Delta^(rho(c^)) = W(rho(c^) (x) Id)W^* on (alpha, beta^), and its closed
  // form x (x) y |-> sum x2 r(psi(S(c) y1 x1)) (x) y2.
  GMatrix delta_hat_op(const Vec& c) const;
  GMatrix delta_hat_formula(const Vec& c) const;

 private:
  const Gns& G_;
};

// The fundamental-unitary suite: tensor forms, W and V, intertwining,
// pentagon, slices, pi_nu and rho, Delta and Delta^, coassociativity,
// regularity.
Report check_fundamental(const Fundamental& F);

}  // namespace dqg
