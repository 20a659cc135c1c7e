#include "doctest.h"
#include "support.hpp"

using namespace dqg;
using dqg::test::Gen;
using dqg::test::Stack;
using dqg::test::stack;

namespace {

// Left regular representation of B x| Gamma on l^2(X x Gamma):
// delta_x g sends |y, h> to [x = g y] |x, gh>.
GMatrix regular_rep(const Base& B, int g, int x) {
  const std::size_t m = B.m(), gs = static_cast<std::size_t>(B.group.size());
  GMatrix out(m * gs, m * gs);
  for (std::size_t y = 0; y < m; ++y)
    for (int h = 0; h < B.group.size(); ++h)
      if (B.act_point(g, static_cast<int>(y)) == x)
        out(static_cast<std::size_t>(B.group.mul(g, h)) * m + static_cast<std::size_t>(x), static_cast<std::size_t>(h) * m + y) =
            GQ(1);
  return out;
}

GMatrix regular_rep(const Base& B, const Vec& a) {
  const std::size_t m = B.m();
  GMatrix out(m * B.group.size(), m * B.group.size());
  for (int g = 0; g < B.group.size(); ++g)
    for (std::size_t x = 0; x < m; ++x) {
      const GQ& c = a[cp_index(B, g, static_cast<int>(x))];
      if (!c.is_zero()) out = out + c * regular_rep(B, g, static_cast<int>(x));
    }
  return out;
}

}  // namespace

TEST_SUITE("base") {
  TEST_CASE("cocycle of instance C from quasi-invariance") {
    const Base& B = stack("C").B();
    const Cocycle& c = *stack("C").b.coc;
    // mu(g(b d_g)) = mu(b) on indicators forces d_g(y) = w(y) / w(g y).
    for (int g = 0; g < B.group.size(); ++g)
      for (std::size_t y = 0; y < B.m(); ++y) {
        Q want = B.weight[y] / B.weight[static_cast<std::size_t>(B.act_point(g, static_cast<int>(y)))];
        CHECK(c.d[g][y] == want);
        CHECK(c.d_half[g][y] * c.d_half[g][y] == want);
        CHECK(sgn(c.d_half[g][y]) > 0);
      }
    // Weight (1, 4, 1) with the swap of 1 and 2 gives ratios 1/4 and 4.
    int swap = B.group.e == 0 ? 1 : 0;
    CHECK(c.d_half[swap][0] == Q(1, 2));
    CHECK(c.d_half[swap][1] == Q(2));
    CHECK(c.d_half[swap][2] == Q(1));
  }

  TEST_CASE("non-square weight ratios are rejected") {
    CHECK_THROWS_AS(example_crossed(instance_c_base({Q(1), Q(2), Q(1)})), CocycleError);
    CHECK(rational_sqrt(Q(9, 4)) == Q(3, 2));
    CHECK_FALSE(rational_sqrt(Q(2)).has_value());
    CHECK_FALSE(rational_sqrt(Q(-1)).has_value());
  }

  TEST_CASE("pi_mu is a *-representation and U_gamma is unitary") {
    const Base& B = stack("C").B();
    const Cocycle& c = *stack("C").b.coc;
    Gen g(21);
    GMatrix K = k_gram(B);
    for (int t = 0; t < 20; ++t) {
      Vec b = g.vec(B.m()), d = g.vec(B.m());
      CHECK(pi_mu(B, b) * pi_mu(B, d) == pi_mu(B, B.mul(b, d)));
      CHECK(B.mu(B.mul(B.star(b), b)).re >= 0);
    }
    for (int h = 0; h < B.group.size(); ++h) {
      GMatrix U = u_gamma(B, c, h);
      CHECK(U.adjoint() * K * U == K);
    }
  }

  TEST_CASE("base checks pass on every shipped instance") {
    for (const char* name : {"T", "C", "Z2", "S3"}) {
      std::string f;
      CHECK_MESSAGE(dqg::test::all_pass(check_base(stack(name).B(), stack(name).b.coc), &f), name, " ", f);
    }
  }
}

TEST_SUITE("algebroid") {
  TEST_CASE("crossed product agrees with its regular representation") {
    const Stack& s = stack("C");
    const Algebroid& A = s.A();
    const Base& B = s.B();
    for (std::size_t i = 0; i < A.n(); ++i) {
      GMatrix ri = regular_rep(B, A.e(i));
      CHECK(regular_rep(B, A.star(A.e(i))) == ri.adjoint());
      for (std::size_t j = 0; j < A.n(); ++j) CHECK(regular_rep(B, A.basis_mul(i, j)) == ri * regular_rep(B, A.e(j)));
    }
  }

  TEST_CASE("associativity and involution on random elements") {
    Gen g(22);
    for (const char* name : {"T", "C", "S3"}) {
      const Algebroid& A = stack(name).A();
      for (int t = 0; t < 10; ++t) {
        Vec a = g.vec(A.n()), b = g.vec(A.n()), c = g.vec(A.n());
        CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
        CHECK(A.star(A.mul(a, b)) == A.mul(A.star(b), A.star(a)));
        CHECK(A.star(A.star(a)) == a);
        CHECK(A.mul(A.one(), a) == a);
      }
    }
  }

  TEST_CASE("fiber product dimensions") {
    // Pair algebra on m points: delta_u (x) delta_v (x) delta_z (x) delta_w survives iff v = z.
    CHECK(stack("T").kit().fp().quotient_dim() == 8);
    // Trivial base: the fiber product is the full tensor square.
    CHECK(stack("Z2").kit().fp().quotient_dim() == 4);
    // Crossed product: graded pairs of equal degree, identified with B x| Gamma.
    CHECK(stack("C").kit().fp().quotient_dim() == 6);
    CHECK(stack("S3").kit().fp().quotient_dim() == 36);
  }

  TEST_CASE("opposite and co-opposite are involutions") {
    const Algebroid& A = stack("C").A();
    CHECK(same_tables(opposite(opposite(A)), A));
    CHECK(same_tables(coopposite(coopposite(A)), A));
  }

  TEST_CASE("algebroid and fiber product checks pass") {
    for (const char* name : {"T", "C", "Z2", "S3"}) {
      std::string f;
      CHECK_MESSAGE(dqg::test::all_pass(check_algebroid(stack(name).A()), &f), name, " ", f);
      CHECK_MESSAGE(dqg::test::all_pass(check_fiber_product(stack(name).A(), stack(name).kit().fp()), &f), name, " ", f);
    }
  }
}

TEST_SUITE("hopf") {
  TEST_CASE("pair comultiplication is (b (x) 1) (x) (1 (x) b')") {
    const Stack& s = stack("T");
    const Algebroid& A = s.A();
    const std::size_t m = s.B().m(), n = A.n();
    for (std::size_t u = 0; u < m; ++u)
      for (std::size_t v = 0; v < m; ++v) {
        Vec left(n), right(n);
        for (std::size_t z = 0; z < m; ++z) {
          left[u * m + z] = GQ(1);
          right[z * m + v] = GQ(1);
        }
        CHECK(s.kit().fp().same(s.kit().delta(A.e(u * m + v)), tensor(left, right)));
      }
  }

  TEST_CASE("group-like comultiplication on group algebras") {
    const Stack& s = stack("S3");
    for (std::size_t g = 0; g < s.A().n(); ++g) CHECK(s.kit().delta(s.A().e(g)) == tensor(s.A().e(g), s.A().e(g)));
  }

  TEST_CASE("coassociativity on random elements") {
    Gen g(23);
    for (const char* name : {"T", "C", "S3"}) {
      const HopfKit& kit = stack(name).kit();
      for (int t = 0; t < 5; ++t) {
        Vec x = g.vec(kit.n());
        Vec d = kit.delta(x);
        CHECK(kit.triple().same(kit.delta_left(d), kit.delta_right(d)));
      }
    }
  }

  TEST_CASE("Galois maps are inverted by their closed formulas") {
    for (const char* name : {"C", "S3"})
      for (int k = 1; k <= 4; ++k) {
        GaloisMap gm = galois(stack(name).kit(), k);
        const std::size_t N = gm.t.rows();
        GMatrix tt = gm.t * gm.t_inv, tt2 = gm.t_inv * gm.t;
        for (std::size_t c = 0; c < N; ++c) {
          Vec u = unit(N, c);
          CHECK(gm.cod.same(tt.apply(u), u));
          CHECK(gm.dom.same(tt2.apply(u), u));
        }
      }
  }

  TEST_CASE("Hopf checks pass, and S = Id breaks the first antipode diagram") {
    for (const char* name : {"T", "C", "Z2", "S3"}) {
      std::string f;
      CHECK_MESSAGE(dqg::test::all_pass(check_hopf(stack(name).kit()), &f), name, " ", f);
    }
    const HopfData& h = stack("C").kit().data();
    HopfKit bad(HopfData{h.alg, h.delta, h.counit, GMatrix::identity(h.alg->n())});
    Report r = check_hopf(bad);
    const CheckResult* c = r.find("hopf.antipode-diagram-1");
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->pass);
    CHECK_FALSE(c->witness.empty());
  }
}
