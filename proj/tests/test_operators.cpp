#include "doctest.h"
#include "support.hpp"

using namespace dqg;
using dqg::test::Gen;
using dqg::test::Stack;
using dqg::test::stack;

namespace {

// Swaps the last two legs of a threefold tensor power.
GMatrix flip23(std::size_t n) {
  GMatrix f(n * n * n, n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) f((i * n + k) * n + j, (i * n + j) * n + k) = GQ(1);
  return f;
}

}  // namespace

TEST_SUITE("fundamental") {
  TEST_CASE("W on a group algebra is the permutation g (x) h -> h^{-1} g (x) h") {
    for (const char* name : {"Z2", "S3"}) {
      const Stack& s = stack(name);
      // The base is a point; the group is carried by the basis.
      const std::vector<std::vector<int>> table = named_group(name).second;
      auto inv = [&](std::size_t h) {
        std::size_t k = 0;
        while (table[h][k] != 0) ++k;
        return k;
      };
      const std::size_t n = s.A().n();
      GMatrix want(n * n, n * n);
      for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
          want(static_cast<std::size_t>(table[inv(h)][g]) * n + h, g * n + h) = GQ(1);
      CHECK(s.fund->W == want);
      CHECK(s.fund->W_alt == want);
      CHECK(s.fund->Wstar == want.adjoint());
    }
  }

  TEST_CASE("pentagon by Kronecker products on S3") {
    // Over a trivial base the relative tensor products are plain ones.
    const Stack& s = stack("S3");
    const std::size_t n = s.A().n();
    REQUIRE(n * n * n == 216);
    const GMatrix& W = s.fund->W;
    GMatrix I = GMatrix::identity(n), P = flip23(n);
    GMatrix w12 = kron(W, I), w23 = kron(I, W), w13 = P * w12 * P;
    CHECK(w12 * w13 * w23 == w23 * w12);
    CHECK_FALSE(w12 * w23 == w23 * w12);
  }

  TEST_CASE("ambient sizes of the triple spaces") {
    CHECK(stack("T").A().n() * stack("T").A().n() * stack("T").A().n() == 64);
    CHECK(stack("C").A().n() * stack("C").A().n() * stack("C").A().n() == 216);
  }

  TEST_CASE("slices of W^* on S3 are the left regular operators") {
    const Stack& s = stack("S3");
    const std::size_t n = s.A().n();
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k) {
        GMatrix want = h == k ? s.fund->pi_nu(s.A().e(h)) : GMatrix(n, n);
        CHECK(s.fund->slice_wstar_right(s.A().e(h), s.A().e(k)) == want);
      }
  }

  TEST_CASE("slices agree with their closed forms on random vectors") {
    Gen g(41);
    const Fundamental& F = *stack("C").fund;
    const std::size_t n = stack("C").A().n();
    for (int t = 0; t < 5; ++t) {
      Vec y = g.vec(n), yp = g.vec(n);
      CHECK(F.slice_wstar_right(y, yp) == F.pi_nu(F.slice_element(y, yp)));
      CHECK(F.slice_wstar_left(y, yp) == F.rho_hat(F.slice_dual(y, yp)));
      CHECK(F.slice_v_left(y, yp) == F.pi_nu(F.slice_v_element(y, yp)));
      CHECK(F.slice_v_right(y, yp) == F.conv_left(F.slice_v_dual(y, yp)));
    }
  }

  TEST_CASE("comultiplication is multiplicative on random elements") {
    Gen g(42);
    const Fundamental& F = *stack("C").fund;
    const Algebroid& A = stack("C").A();
    for (int t = 0; t < 5; ++t) {
      Vec a = g.vec(A.n()), b = g.vec(A.n());
      CHECK(same_on_quotient(*F.ba.space, F.delta_op(A.mul(a, b)), F.delta_op(a) * F.delta_op(b)));
      CHECK(same_on_quotient(*F.ba.space, F.delta_op(a), F.delta_formula(a)));
    }
  }

  TEST_CASE("fundamental checks pass") {
    for (const char* name : {"T", "C", "Z2", "S3"}) {
      std::string f;
      CHECK_MESSAGE(dqg::test::all_pass(check_fundamental(*stack(name).fund), &f), name, " ", f);
    }
  }
}

TEST_SUITE("modular") {
  TEST_CASE("modular operator on instance C is diagonal in w(x) / w(g^{-1} x)") {
    const Measured& M = stack("C").M();
    const Base& B = M.B();
    Tomita T = build_tomita(M, 1e-9);
    for (int g = 0; g < B.group.size(); ++g)
      for (int x = 0; x < static_cast<int>(B.m()); ++x) {
        std::size_t i = cp_index(B, g, x);
        Q want = B.weight[static_cast<std::size_t>(x)] / B.weight[static_cast<std::size_t>(B.act_point(B.group.inv[g], x))];
        CHECK(T.delta.col(i) == GQ(want) * M.A().e(i));
      }
    CHECK(T.delta == M.th());
  }

  TEST_CASE("modular conjugation is an involution") {
    for (const char* name : {"T", "C", "S3"}) {
      Tomita T = build_tomita(stack(name).M(), 1e-9);
      const long n = T.J.rows();
      CHECK(max_abs(T.J * T.J.conjugate() - CMat::Identity(n, n)) < 1e-9);
      CHECK(max_abs(T.J.adjoint() * T.J - CMat::Identity(n, n)) < 1e-9);
    }
    // A commutative algebra with a trace: J is complex conjugation.
    Tomita T = build_tomita(stack("T").M(), 1e-9);
    CHECK(max_abs(T.J - CMat::Identity(T.J.rows(), T.J.cols())) < 1e-9);
  }

  TEST_CASE("pi_nu preimages") {
    Gen g(43);
    const Measured& M = stack("C").M();
    for (int t = 0; t < 5; ++t) {
      Vec a = g.vec(M.n());
      auto back = pi_nu_preimage(M, stack("C").gns->pi_nu(a));
      REQUIRE(back);
      CHECK(*back == a);
    }
    // A single matrix unit is not a left multiplication operator.
    GMatrix unit00(M.n(), M.n());
    unit00(0, 0) = GQ(1);
    CHECK_FALSE(pi_nu_preimage(M, unit00).has_value());
  }

  TEST_CASE("modular checks pass") {
    for (const char* name : {"T", "C", "Z2", "S3"}) {
      std::string f;
      CHECK_MESSAGE(dqg::test::all_pass(check_modular(*stack(name).fund), &f), name, " ", f);
    }
  }
}
