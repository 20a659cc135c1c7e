#include "doctest.h"
#include "dqg/numeric.hpp"
#include "support.hpp"

using namespace dqg;
using dqg::test::Gen;

TEST_SUITE("exactlin") {
  TEST_CASE("gaussian rationals") {
    GQ a(Q(1), Q(2)), b(Q(3), Q(-1));
    CHECK(a * b == GQ(Q(5), Q(5)));
    CHECK((a / b) * b == a);
    CHECK(a.conj() == GQ(Q(1), Q(-2)));
    CHECK(a.norm2() == Q(5));
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(parse_rational("-7") == Q(-7));
    CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
    CHECK(rational_str(Q(-3, 4)) == "-3/4");
  }

  TEST_CASE("inverse and solve on random matrices") {
    Gen g(11);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t n = 1 + g.index(5);
      GMatrix a = g.mat(n, n);
      auto inv = inverse(a);
      CHECK(inv.has_value() == (rank(a) == n));
      if (inv) {
        CHECK(a * *inv == GMatrix::identity(n));
        CHECK(*inv * a == GMatrix::identity(n));
      }
      GMatrix x = g.mat(n, 2);
      GMatrix rhs = a * x;
      auto sol = solve(a, rhs);
      REQUIRE(sol.has_value());
      CHECK(a * *sol == rhs);
    }
  }

  TEST_CASE("rank-nullity and nullspace vectors") {
    Gen g(12);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + g.index(4), c = 1 + g.index(6);
      // Low-rank products make the kernel nontrivial.
      GMatrix a = g.mat(r, 2) * g.mat(2, c);
      std::vector<Vec> ker = nullspace(a);
      CHECK(rank(a) + ker.size() == c);
      for (const Vec& v : ker) CHECK(is_zero(a.apply(v)));
      CHECK(rank(a) <= 2);
    }
  }

  TEST_CASE("exact PSD test agrees with eigenvalue signs") {
    Gen g(13);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t n = 1 + g.index(5), k = 1 + g.index(n);
      GMatrix b = g.mat(k, n);
      GMatrix psd = b.adjoint() * b;
      CHECK(is_hermitian(psd));
      CHECK(is_psd_hermitian(psd));
      CHECK(min_eigenvalue(psd) >= -1e-9);
      // A Hermitian matrix of either sign.
      GMatrix h = g.mat(n, n);
      h = h + h.adjoint();
      CHECK(is_psd_hermitian(h) == (min_eigenvalue(h) >= -1e-9));
      if (!psd.is_zero()) CHECK_FALSE(is_psd_hermitian(GQ(-1) * psd));
    }
    GMatrix nonherm(2, 2);
    nonherm(0, 1) = GQ(1);
    CHECK_FALSE(is_hermitian(nonherm));
    CHECK_THROWS_AS(is_psd_hermitian(nonherm), std::invalid_argument);
  }

  TEST_CASE("subspace reduction is a canonical form") {
    Gen g(14);
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t n = 2 + g.index(5);
      Subspace s(n);
      std::vector<Vec> gens;
      for (int i = 0; i < 3; ++i) {
        gens.push_back(g.vec(n));
        s.add(gens.back());
      }
      Vec v = g.vec(n), w = v;
      for (const Vec& x : gens) axpy(w, g.scalar(), x);
      CHECK(s.reduce(v) == s.reduce(w));
      CHECK(s.contains(w - v));
      CHECK(s.rank() + s.free_coordinates().size() == n);
      for (const Vec& x : gens) CHECK(s.contains(x));
    }
  }

  TEST_CASE("radical of a Gram matrix is the kernel of its factor") {
    Gen g(15);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 2 + g.index(5);
      GMatrix b = g.mat(2, n);
      GramSpacePtr s = radical_quotient(b.adjoint() * b);
      CHECK(s->radical.rank() == n - rank(b));
      for (const Vec& r : s->radical.basis()) CHECK(is_zero(b.apply(r)));
      CHECK(s->quotient_dim() == rank(b));
    }
    GMatrix neg = GMatrix::identity(2);
    neg(1, 1) = GQ(-1);
    CHECK_THROWS_AS(radical_quotient(neg), std::domain_error);
  }

  TEST_CASE("Gram maps") {
    GramSpacePtr id2 = radical_quotient(GMatrix::identity(2));
    GramMap idm{id2, id2, GMatrix::identity(2)};
    CHECK(well_defined(idm));
    CHECK(preserves_form(idm));
    CHECK(quotient_surjective(idm));
    GramMap twice{id2, id2, GQ(2) * GMatrix::identity(2)};
    CHECK_FALSE(preserves_form(twice));

    // With identity Grams the adjoint is the conjugate transpose.
    Gen g(16);
    GMatrix m = g.mat(2, 2, 1.0);
    CHECK(gram_adjoint(GramMap{id2, id2, m}).m == m.adjoint());

    // Adjoint is an involution on quotient classes, also for degenerate forms.
    for (int trial = 0; trial < 10; ++trial) {
      GMatrix b = g.mat(2, 3);
      GramSpacePtr s = radical_quotient(b.adjoint() * b);
      GramSpacePtr t = radical_quotient(GMatrix::identity(2));
      GramMap f{s, t, b};
      REQUIRE(well_defined(f));
      GramMap ff = gram_adjoint(gram_adjoint(f));
      CHECK(same_on_quotient(f, ff));
    }
  }

  TEST_CASE("span equality") {
    GMatrix e11(2, 2), e22(2, 2);
    e11(0, 0) = GQ(1);
    e22(1, 1) = GQ(1);
    CHECK(span_equal({GMatrix::identity(2)}, {GQ(2) * GMatrix::identity(2)}));
    CHECK_FALSE(span_equal({e11}, {e11, e22}));
    CHECK(span_equal({e11, e22}, {GMatrix::identity(2), e11}));
  }

  TEST_CASE("numeric square root") {
    SqrtResult r = numeric_psd_sqrt(GMatrix::identity(3), 1e-12);
    CHECK(r.ok);
    CHECK(max_abs(r.root - CMat::Identity(3, 3)) < 1e-12);
    GMatrix d = GQ(4) * GMatrix::identity(2);
    r = numeric_psd_sqrt(d, 1e-12);
    CHECK(r.ok);
    CHECK(max_abs(r.root - 2.0 * CMat::Identity(2, 2)) < 1e-12);
  }
}
