#include "fricke/modforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace fricke {

namespace {

// Applies X *= P(q^m)^e where P is the Euler product prod(1-q^n), one sparse
// factor at a time (mul and div both skip the pentagonal zeros, so each step
// is O(order * sqrt(order/m)) regardless of how dense X is).
LaurentSeries apply_euler_power(LaurentSeries x, long m, int e, long order) {
  if (e == 0) return x;
  const LaurentSeries base = dedekind_product(order / m + 1).rescale_q(m);
  for (int i = 0; i < e; ++i) x = x * base;
  for (int i = 0; i > e; --i) x = div(x, base);
  return x;
}

}  // namespace

bool GenusZeroPrime::admits(int p) {
  return p == 2 || p == 3 || p == 5 || p == 7 || p == 13;
}

GenusZeroPrime GenusZeroPrime::make(int p) {
  if (!admits(p))
    throw std::domain_error(
        "no eta-quotient construction at level " + std::to_string(p) +
        " (X_0(p) must have genus zero: p in {2, 3, 5, 7, 13})");
  const int r = 24 / (p - 1);
  return GenusZeroPrime{p, r, r / 2};
}

const std::vector<int>& SupersingularPrime::list() {
  static const std::vector<int> primes{2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 41, 47, 59, 71};
  return primes;
}

bool SupersingularPrime::admits(int p) {
  const auto& l = list();
  return std::find(l.begin(), l.end(), p) != l.end();
}

SupersingularPrime SupersingularPrime::make(int p) {
  if (!admits(p))
    throw std::domain_error(std::to_string(p) +
                            " is not a supersingular prime");
  return SupersingularPrime{p};
}

const Rational& AlphaTable::alpha(long n) const {
  if (n < 0 || n > max_index())
    throw std::out_of_range("alpha table too short: need index " +
                            std::to_string(n) + ", have 0.." +
                            std::to_string(max_index()));
  return entries[static_cast<std::size_t>(n)];
}

LaurentSeries AlphaTable::to_series(long order) const {
  if (order < -1) return LaurentSeries::zero(order);
  if (order > max_index())
    throw std::out_of_range("alpha table too short: need index " +
                            std::to_string(order) + ", have 0.." +
                            std::to_string(max_index()));
  std::vector<Rational> c(static_cast<std::size_t>(order + 2), Rational(0));
  c[0] = 1;  // the q^{-1} term
  for (long n = 0; n <= order; ++n)
    c[static_cast<std::size_t>(n + 1)] = entries[static_cast<std::size_t>(n)];
  return LaurentSeries(-1, std::move(c), order);
}

LaurentSeries dedekind_product(long order) {
  if (order < 0) throw std::invalid_argument("dedekind_product needs order >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(order + 1), Rational(0));
  c[0] = 1;
  for (long k = 1; k * (3 * k - 1) / 2 <= order; ++k) {
    const long g1 = k * (3 * k - 1) / 2;
    const long g2 = k * (3 * k + 1) / 2;
    const int sign = (k & 1) ? -1 : 1;
    c[static_cast<std::size_t>(g1)] += sign;
    if (g2 <= order) c[static_cast<std::size_t>(g2)] += sign;
  }
  return LaurentSeries(0, std::move(c), order);
}

LaurentSeries phi_series(const GenusZeroPrime& gp, long order) {
  if (order < 1) throw std::invalid_argument("phi_series needs order >= 1");
  LaurentSeries x = LaurentSeries::monomial(Rational(1), 1, order);
  x = apply_euler_power(std::move(x), gp.p, gp.r, order);
  x = apply_euler_power(std::move(x), 1, -gp.r, order);
  return x;
}

LaurentSeries phi_fricke_series(const GenusZeroPrime& gp, long order) {
  LaurentSeries x =
      LaurentSeries::monomial(pow_rational(gp.p, -gp.half_r), -1, order);
  x = apply_euler_power(std::move(x), 1, gp.r, order);
  x = apply_euler_power(std::move(x), gp.p, -gp.r, order);
  return x;
}

AlphaTable g_series(const GenusZeroPrime& gp, long order) {
  const Rational scale = pow_rational(gp.p, gp.half_r);
  const LaurentSeries g =
      scale * (phi_series(gp, order) + phi_fricke_series(gp, order));
  if (g.coeff(-1) != 1)
    throw std::logic_error("normalized series must start with q^{-1}");
  AlphaTable t;
  t.p = gp.p;
  t.source = AlphaSource::computed;
  t.entries.reserve(static_cast<std::size_t>(order + 1));
  for (long n = 0; n <= order; ++n) {
    const Rational& a = g.coeff(n);
    if (!is_integer(a))
      throw std::logic_error("alpha coefficients must be integral (q^" +
                             std::to_string(n) + " is " + to_string(a) + ")");
    t.entries.push_back(a);
  }
  return t;
}

LaurentSeries j_series(long order) {
  if (order < 0) throw std::invalid_argument("j_series needs order >= 0");
  const long work = order + 1;  // the final q^{-1} shift costs one order
  std::vector<Rational> e4(static_cast<std::size_t>(work + 1));
  e4[0] = 1;
  {
    // sigma_3 by divisor sieve, exact in Integer.
    std::vector<Integer> sigma3(static_cast<std::size_t>(work + 1), Integer(0));
    for (long d = 1; d <= work; ++d) {
      const Integer cube = Integer(d) * d * d;
      for (long n = d; n <= work; n += d)
        sigma3[static_cast<std::size_t>(n)] += cube;
    }
    for (long n = 1; n <= work; ++n)
      e4[static_cast<std::size_t>(n)] = Rational(240 * sigma3[static_cast<std::size_t>(n)]);
  }
  LaurentSeries x = LaurentSeries(0, std::move(e4), work).pow_int(3);
  x = apply_euler_power(std::move(x), 1, -24, work);  // divide by Delta/q
  x = x.shift_exp(-1);
  if (x.coeff(-1) != 1 || x.coeff(0) != 744)
    throw std::logic_error("j expansion must start q^{-1} + 744");
  return x.truncated(order);
}

LaurentSeries p_series(const SupersingularPrime& sp, const AlphaTable& alphas,
                       long order) {
  if (order < 0) throw std::invalid_argument("p_series needs order >= 0");
  if (alphas.p != sp.p)
    throw std::invalid_argument("alpha table belongs to a different level");
  const LaurentSeries s = alphas.to_series(sp.p * order);
  return s.truncated(order) + Rational(sp.p) * s.u_pick(sp.p);
}

ShiftConstant shift_constant(const SupersingularPrime& sp,
                             const AlphaTable& alphas, long order) {
  return shift_constant(sp, alphas, j_series(order));
}

ShiftConstant shift_constant(const SupersingularPrime& sp,
                             const AlphaTable& alphas, const LaurentSeries& j) {
  const long order = j.order();
  const LaurentSeries diff = p_series(sp, alphas, order) - j;
  for (long n = diff.lead(); n <= order; ++n) {
    if (n == 0) continue;
    if (diff.coeff(n) != 0)
      throw IdentityViolation(
          "difference against j is not constant: first failure at order " +
              std::to_string(n),
          n);
  }
  return ShiftConstant{sp.p, diff.coeff(0)};
}

RelationCheck coefficient_relation_check(const SupersingularPrime& sp,
                                         const AlphaTable& alphas,
                                         const LaurentSeries& j, long n_max) {
  if (n_max > j.order() || sp.p * n_max > alphas.max_index())
    throw std::out_of_range(
        "coefficient relation check exceeds the available range");
  RelationCheck r;
  r.n_max = n_max;
  for (long n = 1; n <= n_max; ++n) {
    if (j.coeff(n) != alphas.alpha(n) + sp.p * alphas.alpha(sp.p * n)) {
      r.pass = false;
      r.first_fail = n;
      break;
    }
  }
  return r;
}

}  // namespace fricke
