#include "fricke/modforms.hpp"

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"

using namespace fricke;

namespace {
const int kGenusZero[] = {2, 3, 5, 7, 13};
}

TEST_CASE("prime classification") {
  CHECK(GenusZeroPrime::admits(13));
  CHECK(!GenusZeroPrime::admits(11));
  CHECK_THROWS_AS(GenusZeroPrime::make(11), std::domain_error);
  CHECK_THROWS_AS(GenusZeroPrime::make(4), std::domain_error);
  const GenusZeroPrime g2 = GenusZeroPrime::make(2);
  CHECK(g2.r == 24);
  CHECK(g2.half_r == 12);
  CHECK(GenusZeroPrime::make(13).r == 2);

  CHECK(SupersingularPrime::list().size() == 15);
  CHECK(SupersingularPrime::admits(71));
  CHECK(!SupersingularPrime::admits(37));
  CHECK_THROWS_AS(SupersingularPrime::make(37), std::domain_error);
}

TEST_CASE("euler product expansion") {
  const LaurentSeries d2 = dedekind_product(2);
  CHECK(d2.coeff(0) == 1);
  CHECK(d2.coeff(1) == -1);
  CHECK(d2.coeff(2) == -1);

  const LaurentSeries d = dedekind_product(240);
  CHECK(d.coeff(5) == 1);  // both off-diagonal exponent families contribute
  const oracle::Dense lit = oracle::euler_product(240);
  for (long n = 0; n <= 240; ++n)
    CHECK(d.coeff(n) == lit[static_cast<std::size_t>(n)]);
}

TEST_CASE("phi expansions match the literal eta quotient") {
  const LaurentSeries phi2 = phi_series(GenusZeroPrime::make(2), 40);
  CHECK(phi2.coeff(1) == 1);
  CHECK(phi2.coeff(2) == 24);
  CHECK(phi2.coeff(3) == 300);

  for (int p : kGenusZero) {
    const GenusZeroPrime gp = GenusZeroPrime::make(p);
    const LaurentSeries phi = phi_series(gp, 50);
    const oracle::Dense lit = oracle::phi_over_q(p, gp.r, 49);
    for (long n = 1; n <= 50; ++n) {
      CHECK(phi.coeff(n) == lit[static_cast<std::size_t>(n - 1)]);
      CHECK(is_integer(phi.coeff(n)));  // integral coefficients throughout
    }
    CHECK(phi.coeff(0) == 0);
  }
}

TEST_CASE("fricke transform: frozen values, inversion route, exact product") {
  const GenusZeroPrime g2 = GenusZeroPrime::make(2);
  const LaurentSeries f2 = phi_fricke_series(g2, 30);
  const Rational s2 = pow_rational(2, -12);
  CHECK(f2.coeff(-1) == s2);
  CHECK(f2.coeff(0) == -24 * s2);
  CHECK(f2.coeff(1) == 276 * s2);

  for (int p : kGenusZero) {
    const GenusZeroPrime gp = GenusZeroPrime::make(p);

    // Same series as p^{-r/2} * invert(phi): the construction the definition
    // names, checked here at a small order where the dense inverse is cheap.
    const LaurentSeries via_invert =
        pow_rational(p, -gp.half_r) * phi_series(gp, 62).invert();
    const LaurentSeries direct = phi_fricke_series(gp, via_invert.order());
    CHECK(direct == via_invert);

    // phi * fricke(phi) = p^{-r/2} exactly, every provable coefficient.
    const LaurentSeries prod =
        phi_series(gp, 80) * phi_fricke_series(gp, 80);
    CHECK(prod.coeff(0) == pow_rational(p, -gp.half_r));
    for (long n = prod.lead(); n <= prod.order(); ++n)
      CHECK(prod.coeff(n) == (n == 0 ? pow_rational(p, -gp.half_r) : Rational(0)));
  }
}

TEST_CASE("normalized invariant function: frozen alphas and oracle") {
  const AlphaTable t2 = g_series(GenusZeroPrime::make(2), 12);
  CHECK(t2.alpha(0) == -24);
  CHECK(t2.alpha(1) == 4372);
  CHECK(t2.alpha(2) == 96256);

  for (int p : kGenusZero) {
    const AlphaTable t = g_series(GenusZeroPrime::make(p), 10);
    const oracle::Dense lit = oracle::alpha_oracle(p, 10);
    for (long n = 0; n <= 10; ++n)
      CHECK(t.alpha(n) == lit[static_cast<std::size_t>(n)]);
    CHECK(t.source == AlphaSource::computed);
  }
}

TEST_CASE("series relations between phi, its transform, and the alphas") {
  for (int p : kGenusZero) {
    const GenusZeroPrime gp = GenusZeroPrime::make(p);
    const long N = 50;
    const LaurentSeries phi = phi_series(gp, N + 1);
    const LaurentSeries fricke = phi_fricke_series(gp, N + 1);
    const AlphaTable t = g_series(gp, N);
    const Rational scale = pow_rational(p, gp.half_r);

    // a_n and b_n streams: phi = sum b_n q^{n+1} (b_0 = 1),
    // p^{r/2} * fricke = q^{-1} + sum a_n q^n.
    auto a = [&](long n) { return scale * fricke.coeff(n); };
    auto b = [&](long n) { return phi.coeff(n + 1); };

    CHECK(t.alpha(0) == a(0));
    CHECK(t.alpha(0) == -b(1));
    CHECK(t.alpha(1) == scale + a(1));
    for (long n = 2; n <= N; ++n) CHECK(t.alpha(n) == scale * b(n - 1) + a(n));
  }
}

TEST_CASE("j expansion: frozen coefficients and full oracle") {
  const LaurentSeries j = j_series(50);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);
  CHECK(j.coeff(2) == 21493760);

  const oracle::Dense lit = oracle::j_over_q(51);
  for (long n = -1; n <= 50; ++n)
    CHECK(j.coeff(n) == lit[static_cast<std::size_t>(n + 1)]);
}

TEST_CASE("alpha table access and the assembled series") {
  const AlphaTable t = g_series(GenusZeroPrime::make(3), 6);
  CHECK(t.max_index() == 6);
  CHECK_THROWS_AS(t.alpha(7), std::out_of_range);
  const LaurentSeries s = t.to_series(6);
  CHECK(s.coeff(-1) == 1);
  CHECK(s.coeff(4) == t.alpha(4));
  CHECK_THROWS_AS(t.to_series(7), std::out_of_range);
}

TEST_CASE("hecke-style sum: structure and frozen expansion") {
  const SupersingularPrime s2 = SupersingularPrime::make(2);
  const AlphaTable t = g_series(GenusZeroPrime::make(2), 8);
  const LaurentSeries P = p_series(s2, t, 4);
  CHECK(P.coeff(-1) == 1);
  CHECK(P.coeff(0) == t.alpha(0) * 3);  // (p+1) * alpha_0 = -72
  CHECK(P.coeff(0) == -72);
  CHECK(P.coeff(1) == 196884);  // j's c_1: the sum collapses onto j
  CHECK(P.coeff(2) == 21493760);
  for (long n = 1; n <= 4; ++n)
    CHECK(P.coeff(n) == t.alpha(n) + 2 * t.alpha(2 * n));

  // Table range is a hard precondition: indices up to p*order are read.
  CHECK_THROWS_AS(p_series(s2, t, 5), std::out_of_range);
  // And a table is bound to its own level.
  CHECK_THROWS_AS(p_series(SupersingularPrime::make(3), t, 2),
                  std::invalid_argument);
}

TEST_CASE("shift constants for every genus-zero level") {
  const long N = 40;
  const LaurentSeries j = j_series(N);
  const Rational expected[] = {Rational(-816), Rational(-792), Rational(-780),
                               Rational(-776), Rational(-772)};
  int i = 0;
  for (int p : kGenusZero) {
    const GenusZeroPrime gp = GenusZeroPrime::make(p);
    const AlphaTable t = g_series(gp, N * p);
    const ShiftConstant c = shift_constant(SupersingularPrime::make(p), t, j);
    CHECK(c.value == expected[i]);
    // The constant is (p+1) * alpha_0 - 744; the (p-1) variant never matches.
    CHECK(c.value == t.alpha(0) * (p + 1) - 744);
    CHECK(c.value != t.alpha(0) * (p - 1) - 744);
    ++i;
  }
}

TEST_CASE("a corrupted table is reported with the failing order") {
  const SupersingularPrime s2 = SupersingularPrime::make(2);
  AlphaTable t = g_series(GenusZeroPrime::make(2), 30);
  t.entries[6] += 1;  // breaks the q^3 and q^6 coefficients of the sum
  try {
    shift_constant(s2, t, j_series(15));
    FAIL("expected IdentityViolation");
  } catch (const IdentityViolation& e) {
    CHECK(e.index() == 3);  // alpha_6 first enters at n = 3 via alpha_{2n}
  }
}

TEST_CASE("coefficient relation c_n = alpha_n + p*alpha_{pn} up to n = 50") {
  const LaurentSeries j = j_series(50);
  for (int p : kGenusZero) {
    const AlphaTable t = g_series(GenusZeroPrime::make(p), 50 * p);
    const RelationCheck r =
        coefficient_relation_check(SupersingularPrime::make(p), t, j, 50);
    CHECK(r.pass);
    CHECK(r.n_max == 50);
  }
  // And the checker actually fires on bad data.
  AlphaTable bad = g_series(GenusZeroPrime::make(5), 50);
  bad.entries[7] += Rational(1, 3);
  const RelationCheck r = coefficient_relation_check(
      SupersingularPrime::make(5), bad, j_series(10), 10);
  CHECK(!r.pass);
  CHECK(r.first_fail == 7);
}
