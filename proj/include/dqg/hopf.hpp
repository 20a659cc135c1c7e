#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dqg/algebroid.hpp"

namespace dqg {

// Delta is stored as one lift per basis element in the ambient tensor square
// (index a*n + b). The counit of e_i is an element of B x| Gamma in the
// crossed-product coordinates g*m + x.
struct HopfData {
  AlgebroidPtr alg;
  std::vector<Vec> delta;
  std::vector<Vec> counit;
  GMatrix antipode;
};

// Derived objects shared by every check on one Hopf algebroid.
class HopfKit {
 public:
  explicit HopfKit(const HopfData& h);

  const HopfData& data() const { return h_; }
  const Algebroid& A() const { return *h_.alg; }
  std::size_t n() const { return h_.alg->n(); }
  const FiberProduct& fp() const { return fp_; }
  const Algebroid& cp() const { return cp_; }
  const TripleFiber& triple() const;

  Vec delta(const Vec& x) const;
  Vec delta_e(std::size_t i) const { return h_.delta[i]; }
  Vec S(const Vec& x) const { return h_.antipode.apply(x); }
  Vec Sinv(const Vec& x) const;
  bool has_Sinv() const { return sinv_.has_value(); }
  const GMatrix& Sinv_matrix() const { return *sinv_; }

  Vec eps(std::size_t i) const { return h_.counit[i]; }
  Vec eps_sharp(const Vec& x) const;
  Vec eps_flat(const Vec& x) const;

  Vec mul(const Vec& a, const Vec& b) const { return A().mul(a, b); }
  Vec e(std::size_t i) const { return A().e(i); }

  // (D (x) Id) and (Id (x) D) from the tensor square to the triple ambient.
  Vec delta_left(const Vec& t) const;
  Vec delta_right(const Vec& t) const;

  // Checks that t |-> f(t) kills every fiber-product relation modulo `mod`.
  Witness lift_independent(const std::string& what, const std::function<Vec(const Vec&)>& f,
                           const Subspace* mod = nullptr) const;

 private:
  HopfData h_;
  FiberProduct fp_;
  Algebroid cp_;
  std::optional<GMatrix> sinv_;
  mutable std::shared_ptr<TripleFiber> triple_;
};

struct GaloisMap {
  BalancedTensor dom;
  BalancedTensor cod;
  GMatrix t;
  GMatrix t_inv;
};

// k in 1..4; the inverse uses the closed formulas built from S and S^{-1}.
GaloisMap galois(const HopfKit& kit, int k);

Report check_hopf(const HopfKit& kit);

}  // namespace dqg
