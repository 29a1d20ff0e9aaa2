#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "fricke/modcurve.hpp"
#include "fricke/modforms.hpp"
#include "fricke/numeric.hpp"

using namespace fricke;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

cd moebius(const Mat22& g, cd z) {
  return (static_cast<double>(g.a) * z + static_cast<double>(g.b)) /
         (static_cast<double>(g.c) * z + static_cast<double>(g.d));
}

cd root_of(const QuadraticForm& f) {
  double disc = 4.0 * f.a * f.c - static_cast<double>(f.b) * f.b;
  return {-f.b / (2.0 * f.a), std::sqrt(disc) / (2.0 * f.a)};
}

// Direct numeric j via finite products/sums in the variable q itself, with
// sigma_3 by trial division. Shares no series code with the library.
cd j_oracle(cd tau) {
  cd q = std::exp(cd(0.0, 2.0 * kPi) * tau);
  const int M = 200;
  cd e4 = 1.0;
  cd delta = q;
  for (int n = 1; n <= M; ++n) {
    long s3 = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s3 += d * d * d;
    e4 += 240.0 * static_cast<double>(s3) * std::pow(q, n);
    delta *= std::pow(1.0 - std::pow(q, n), 24);
  }
  return e4 * e4 * e4 / delta;
}

// Shared large tables: order 200p, as the translate-average evaluations need.
const AlphaTable& big_table(int p) {
  static std::map<int, AlphaTable> cache;
  auto it = cache.find(p);
  if (it == cache.end())
    it = cache.emplace(p, g_series(GenusZeroPrime::make(p), 200L * p)).first;
  return it->second;
}

}  // namespace

TEST_CASE("series evaluation handles scale, phase, and truncation tails") {
  UpperHalfPoint tau{0.3, 0.8};
  auto one = eval_series(LaurentSeries::constant(1, 10), tau);
  CHECK(one.value.real() == doctest::Approx(1.0));
  CHECK(one.value.imag() == doctest::Approx(0.0));
  CHECK(one.tail_bound < 1e-12);
  CHECK(one.peak_term == doctest::Approx(1.0));

  auto qq = eval_series(LaurentSeries::monomial(1, 1, 40), {0.0, 1.0});
  CHECK(qq.value.real() == doctest::Approx(std::exp(-2.0 * kPi)));
  CHECK(qq.value.imag() == 0.0);  // phase is exactly zero on the imaginary axis

  auto qi = eval_series(LaurentSeries::monomial(1, 1, 40), {0.25, 1.0});
  CHECK(std::abs(qi.value - cd(0.0, std::exp(-2.0 * kPi))) < 1e-17);

  CHECK_THROWS_AS(eval_series(LaurentSeries::constant(1, 5), {0.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(eval_series(LaurentSeries::constant(1, 5), {0.1, -1.0}),
                  std::invalid_argument);

  LaurentSeries js = j_series(60);
  auto at_i = eval_series(js, {0.0, 1.0});
  CHECK(at_i.tail_bound < 1e-12);
  CHECK(at_i.peak_term > 1.0);
  // Far down in the strip the coefficient growth beats |q| and the geometric
  // model must refuse to certify anything.
  auto low = eval_series(js, {0.0, 0.01});
  CHECK(std::isinf(low.tail_bound));

  auto at_2i = eval_series(js, {0.0, 2.0});
  CHECK(at_2i.peak_term == doctest::Approx(std::exp(4.0 * kPi)));
}

TEST_CASE("classical j values and an independent product-form cross-check") {
  LaurentSeries js = j_series(100);

  auto ji = eval_series(js, {0.0, 1.0}).value;
  CHECK(std::abs(ji - cd(1728.0, 0.0)) < 1e-6);

  UpperHalfPoint rho{-0.5, std::sqrt(3.0) / 2.0};
  CHECK(std::abs(eval_series(js, rho).value) < 1e-6);

  auto j2i = eval_series(js, {0.0, 2.0}).value;
  CHECK(std::abs(j2i - cd(287496.0, 0.0)) < 1e-5);
  CHECK(j2i.imag() == 0.0);

  for (UpperHalfPoint t : {UpperHalfPoint{0.0, 1.0}, UpperHalfPoint{0.1, 1.3}}) {
    cd mine = eval_series(js, t).value;
    cd ref = j_oracle(t.value());
    CHECK(std::abs(mine - ref) < 1e-6 * (1.0 + std::abs(ref)));
  }
}

TEST_CASE("reduction lands in the half-open fundamental domain") {
  auto r0 = reduce_to_R({0.0, 2.0});
  CHECK(r0.gamma == Mat22{1, 0, 0, 1});
  CHECK(r0.u.re == doctest::Approx(0.0));
  CHECK(r0.u.im == doctest::Approx(2.0));
  CHECK(r0.coset == -1);

  auto r1 = reduce_to_R({0.0, 0.5});
  CHECK(r1.u.im == doctest::Approx(2.0));
  CHECK(r1.gamma == Mat22{0, 1, -1, 0});

  auto r2 = reduce_to_R({0.0, 1.0 / std::sqrt(11.0)}, 11);
  CHECK(r2.u.im == doctest::Approx(std::sqrt(11.0)));
  CHECK(r2.coset == 0);

  auto r3 = reduce_to_R({4.5, std::sqrt(3.0) / 2.0});
  CHECK(r3.u.re == doctest::Approx(-0.5));
  CHECK(r3.u.im == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(r3.gamma == Mat22{1, 5, 0, 1});

  auto r4 = reduce_to_R({0.5, 1.2});
  CHECK(r4.u.re == doctest::Approx(-0.5));
  CHECK(r4.gamma == Mat22{1, 1, 0, 1});

  // Right half of the unit arc flips onto the left half.
  double theta = kPi / 2.0 - 0.3;
  auto r5 = reduce_to_R({std::cos(theta), std::sin(theta)});
  CHECK(r5.u.re == doctest::Approx(-std::cos(theta)));
  CHECK(r5.u.re * r5.u.re + r5.u.im * r5.u.im == doctest::Approx(1.0));

  // The corner with positive real part maps to the corner itself.
  auto r6 = reduce_to_R({std::cos(kPi / 3.0), std::sin(kPi / 3.0)});
  CHECK(r6.u.re == doctest::Approx(-0.5));
  CHECK(r6.u.im == doctest::Approx(std::sqrt(3.0) / 2.0));

  // Identity reduction keeps the trivial coset label (lower-left entry 0).
  auto r7 = reduce_to_R({-0.23, 1.4}, 7);
  CHECK(r7.gamma == Mat22{1, 0, 0, 1});
  CHECK(r7.coset == 7);

  CHECK_THROWS_AS(reduce_to_R({0.3, -1.0}), std::invalid_argument);

  std::mt19937 rng(42);
  std::uniform_real_distribution<double> re_d(-3.0, 3.0);
  std::uniform_real_distribution<double> im_d(0.05, 2.0);
  for (int k = 0; k < 300; ++k) {
    UpperHalfPoint tau{re_d(rng), im_d(rng)};
    auto rp = reduce_to_R(tau);
    CHECK(in_fundamental_domain(rp.u));
    CHECK(rp.gamma.det() == 1);
    CHECK(std::abs(moebius(rp.gamma, rp.u.value()) - tau.value()) < 1e-9);
  }

  // The float reduction must agree with the exact form reduction: send each
  // level-11 fixed point's root through both pipelines.
  for (const auto& pt : enumerate_fixed_points(11)) {
    cd root = root_of(pt.form);
    auto rp = reduce_to_R({root.real(), root.imag()}, 11);
    CHECK(rp.coset == pt.coset.value);
    CHECK(std::abs(rp.u.value() - root_of(pt.reduced)) < 1e-9);
  }
}

TEST_CASE("j is invariant along random unimodular words after reduction") {
  LaurentSeries js = j_series(80);
  const Mat22 T{1, 1, 0, 1};
  const Mat22 Tinv{1, -1, 0, 1};
  const Mat22 S{0, 1, -1, 0};

  auto mul = [](const Mat22& x, const Mat22& y) {
    return Mat22{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                 x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  };

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> len_d(1, 8);
  for (UpperHalfPoint base : {UpperHalfPoint{0.2, 0.9},
                              UpperHalfPoint{-0.37, 0.61},
                              UpperHalfPoint{0.05, 1.3}}) {
    cd jb = eval_series(js, base).value;
    for (int w = 0; w < 60; ++w) {
      Mat22 g;
      int len = len_d(rng);
      for (int i = 0; i < len; ++i)
        g = mul(g, pick(rng) == 0 ? T : (pick(rng) == 0 ? Tinv : S));
      cd z = moebius(g, base.value());
      if (z.imag() < 0.02) continue;  // too squashed for 1e-6 comparisons
      auto rp = reduce_to_R({z.real(), z.imag()});
      CHECK(in_fundamental_domain(rp.u));
      cd jr = eval_series(js, rp.u).value;
      CHECK(std::abs(jr - jb) < 1e-6 * (1.0 + std::abs(jb)));
    }
  }
}

TEST_CASE("inverting j hits the classical points and reports failure") {
  auto at_i = invert_j(1728.0);
  CHECK(std::abs(at_i.point.u.value() - cd(0.0, 1.0)) < 1e-3);
  CHECK(at_i.residual < 1e-8);
  // j - 1728 has a double zero at i, so residual-converged limits may split
  // across the arc boundary; every reported candidate must still be near i.
  CHECK(at_i.candidates.size() <= 2);
  for (const auto& c : at_i.candidates)
    CHECK(std::abs(c.value() - cd(0.0, 1.0)) < 1e-3);

  // The triple zero of j sits at the domain corner, where a limit computed to
  // residual 1e-8 can land on either of the two equivalent corner points.
  auto at_rho = invert_j(0.0);
  const cd corner_l(-0.5, std::sqrt(3.0) / 2.0);
  const cd corner_r(0.5, std::sqrt(3.0) / 2.0);
  for (const auto& c : at_rho.candidates) {
    double d = std::min(std::abs(c.value() - corner_l),
                        std::abs(c.value() - corner_r));
    CHECK(d < 1e-3);
  }
  double d0 = std::min(std::abs(at_rho.point.u.value() - corner_l),
                       std::abs(at_rho.point.u.value() - corner_r));
  CHECK(d0 < 1e-3);
  CHECK(at_rho.residual < 1e-8);

  auto at_2i = invert_j(287496.0);  // big target: the 1/target seed route
  CHECK(std::abs(at_2i.point.u.value() - cd(0.0, 2.0)) < 1e-6);
  CHECK(at_2i.candidates.size() == 1);

  auto arc = invert_j(816.0, 2);
  CHECK(in_fundamental_domain(arc.point.u));
  CHECK(std::abs(arc.point.u.re * arc.point.u.re +
                 arc.point.u.im * arc.point.u.im - 1.0) < 1e-8);
  CHECK(arc.point.u.re >= -0.5);
  CHECK(arc.point.u.re <= 0.0);
  CHECK(arc.point.coset >= 0);
  CHECK(arc.point.coset <= 2);

  CHECK_THROWS_AS(invert_j(1728.0, 0, 1e-8, 0), std::runtime_error);
}

TEST_CASE("shift-inversion points sit on the unit arc in target order") {
  std::vector<double> res;
  for (int p : {2, 3, 5, 7, 13}) {
    auto gp = GenusZeroPrime::make(p);
    auto sp = SupersingularPrime::make(p);
    AlphaTable table = g_series(gp, 50L * p);
    ShiftConstant shift = shift_constant(sp, table, 50);
    CHECK(shift.value == Rational(-24 / (p - 1) * (p + 1) - 744));

    auto inv = find_uhat(sp, shift);
    const auto& u = inv.point.u;
    CHECK(std::abs(u.re * u.re + u.im * u.im - 1.0) < 1e-8);
    CHECK(u.re >= -0.5);
    CHECK(u.re <= 0.0);
    CHECK(inv.residual < 1e-8);
    res.push_back(u.re);
  }
  // Targets 816 > 792 > 780 > 776 > 772 walk from the corner toward i, so the
  // real parts must decrease strictly along the prime list 2, 3, 5, 7, 13.
  REQUIRE(res.size() == 5);
  for (size_t i = 0; i + 1 < res.size(); ++i) CHECK(res[i] > res[i + 1]);
}

TEST_CASE("translate average vanishes exactly at the inversion point") {
  auto sp2 = SupersingularPrime::make(2);
  const AlphaTable& table2 = big_table(2);
  ShiftConstant shift2 = shift_constant(sp2, table2, 50);
  auto uh2 = find_uhat(sp2, shift2);
  CHECK(verify_vanishing_sum(sp2, table2, uh2.point) < 1e-6);

  auto sp13 = SupersingularPrime::make(13);
  const AlphaTable& table13 = big_table(13);
  ShiftConstant shift13 = shift_constant(sp13, table13, 50);
  auto uh13 = find_uhat(sp13, shift13);
  CHECK(verify_vanishing_sum(sp13, table13, uh13.point) < 1e-6);

  // Away from the special point the average is nowhere near zero.
  ReducedPoint off{{0.0, 2.0}, Mat22{1, 0, 0, 1}, -1};
  CHECK(verify_vanishing_sum(sp2, table2, off) > 1000.0);

  AlphaTable short_table = g_series(GenusZeroPrime::make(2), 399);
  CHECK_THROWS_AS(verify_vanishing_sum(sp2, short_table, uh2.point),
                  std::out_of_range);
}

TEST_CASE("symmetrized series is numerically involution-invariant") {
  for (int p : {2, 13}) {
    const AlphaTable& table = big_table(p);
    LaurentSeries G = table.to_series(200L * p);
    for (UpperHalfPoint t : {UpperHalfPoint{0.3, 0.9}, UpperHalfPoint{-0.2, 1.1},
                             UpperHalfPoint{0.05, 0.7}}) {
      cd tau = t.value();
      cd w = -1.0 / (static_cast<double>(p) * tau);
      auto a = eval_series(G, t);
      auto b = eval_series(G, {w.real(), w.imag()});
      CHECK(a.tail_bound < 1e-8);
      CHECK(b.tail_bound < 1e-8);
      CHECK(std::abs(a.value - b.value) < 1e-6 * (1.0 + std::abs(a.value)));
    }
  }
}

TEST_CASE("shifted hecke-style sum matches j pointwise off the arc") {
  LaurentSeries js = j_series(50);
  for (int p : {2, 5}) {
    auto gp = GenusZeroPrime::make(p);
    auto sp = SupersingularPrime::make(p);
    AlphaTable table = g_series(gp, 50L * p);
    ShiftConstant shift = shift_constant(sp, table, 50);
    LaurentSeries ps = p_series(sp, table, 50);
    for (UpperHalfPoint t : {UpperHalfPoint{0.1, 1.0}, UpperHalfPoint{-0.3, 1.2}}) {
      cd lhs = eval_series(ps, t).value;
      cd rhs = eval_series(js, t).value + shift.value.get_d();
      CHECK(std::abs(lhs - rhs) < 1e-6);
    }
  }
}

TEST_CASE("product form takes opposite values of fixed magnitude at the two fixed points") {
  for (int p : {2, 3, 5, 7, 13}) {
    auto rep = phi_fixed_value_check(GenusZeroPrime::make(p));
    CHECK(rep.ok);
    CHECK(rep.mag_err0 < 1e-9);
    CHECK(rep.mag_err1 < 1e-9);
    CHECK(rep.opposition_err < 1e-9);
    if (p == 2) {
      CHECK(rep.magnitude == doctest::Approx(0.015625));  // 2^{-6}
      CHECK(rep.at_tau0.real() > 0.0);
      CHECK(rep.at_tau0.imag() == 0.0);
    }
    if (p == 13) CHECK(rep.magnitude == doctest::Approx(1.0 / std::sqrt(13.0)));
    CHECK(std::abs(rep.at_tau1.imag()) < 1e-9);
  }
}
