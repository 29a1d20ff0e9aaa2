#include "fricke/digits.hpp"

#include <stdexcept>
#include <string>

namespace fricke {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(int p, const char* who) {
  if (!is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p = " +
                                std::to_string(p) + " is not prime");
}

long pow_long(long base, int k) {
  long r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

long DigitVector::value() const {
  long v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * p + *it;
  return v;
}

DigitVector digits_of(long n, int p) {
  require_prime(p, "digits_of");
  if (n < 0) throw std::invalid_argument("digits_of requires n >= 0");
  DigitVector dv{p, {}};
  while (n > 0) {
    dv.digits.push_back(static_cast<int>(n % p));
    n /= p;
  }
  return dv;
}

long f_shift(long n, int p, int k) {
  require_prime(p, "f_shift");
  if (n < 0 || k < 0) throw std::invalid_argument("f_shift requires n, k >= 0");
  return n * pow_long(p, k);
}

long sigma_shift(long n, int p, long l) {
  require_prime(p, "sigma_shift");
  if (n < 0 || l < 0)
    throw std::invalid_argument("sigma_shift requires n, l >= 0");
  long a0 = n % p;
  return n - a0 + (a0 + l) % p;
}

long commutator_h(long n, int p, int k, int l) {
  require_prime(p, "commutator_h");
  if (n < 0) throw std::invalid_argument("commutator_h requires n >= 0");
  if (k < 1) throw std::invalid_argument("commutator_h requires k >= 1");
  if (l < 1 || l >= p)
    throw std::invalid_argument("commutator_h requires 0 < l < p");
  return f_shift(sigma_shift(n, p, l), p, k) - sigma_shift(f_shift(n, p, k), p, l);
}

ChainSides chain_residual(const SupersingularPrime& sp,
                          const AlphaTable& alphas, const LaurentSeries& cs,
                          long n, int k) {
  if (n < 1)
    throw std::invalid_argument(
        "chain_residual requires n >= 1 (index 0 starts no chain)");
  if (k < 1) throw std::invalid_argument("chain_residual requires k >= 1");
  if (alphas.p != sp.p)
    throw std::invalid_argument("alpha table level does not match p");
  const long p = sp.p;

  Rational lhs = pow_rational(p, k) * alphas.alpha(pow_long(p, k) * n);
  lhs += (k % 2 == 1 ? 1 : -1) * alphas.alpha(n);

  Rational rhs = 0;
  for (int j = 1; j <= k; ++j) {
    Rational term =
        pow_rational(p, j - 1) * cs.coeff(pow_long(p, j - 1) * n);
    rhs += ((k - j) % 2 == 0) ? term : -term;
  }
  return {lhs, rhs};
}

Rational f_map(const SupersingularPrime& sp, const AlphaTable& alphas,
               const LaurentSeries& cs, long n) {
  if (n < 1) throw std::invalid_argument("f_map requires n >= 1");
  if (alphas.p != sp.p)
    throw std::invalid_argument("alpha table level does not match p");
  const long p = sp.p;
  return cs.coeff(n) / p + p * alphas.alpha(p * p * n) - alphas.alpha(n) / p;
}

RationalDecomposition decompose(const AlphaTable& alphas, long n) {
  return {n, alphas.alpha(n),
          alphas.source == AlphaSource::computed ? OmegaTag::assumed_zero
                                                 : OmegaTag::symbolic};
}

DenominatorChainReport denominator_chain_check(const SupersingularPrime& sp,
                                               const AlphaTable& alphas,
                                               const LaurentSeries& cs, long n,
                                               int k) {
  if (n < 1 || k < 1)
    throw std::invalid_argument("denominator_chain_check requires n, k >= 1");
  if (alphas.p != sp.p)
    throw std::invalid_argument("alpha table level does not match p");
  const long p = sp.p;

  std::vector<Integer> num(k + 1), den(k + 1);
  for (int j = 0; j <= k; ++j) {
    Rational g = alphas.alpha(pow_long(p, j) * n);
    num[j] = g.get_num();
    den[j] = g.get_den();
  }

  DenominatorChainReport rep;
  rep.n = n;
  rep.k = k;

  rep.step_divisibility = true;
  bool all_constant = true, all_multiplied = true;
  for (int j = 0; j < k; ++j) {
    if (!mpz_divisible_p(den[j + 1].get_mpz_t(), den[j].get_mpz_t()) ||
        !mpz_divisible_p(Integer(p * den[j]).get_mpz_t(),
                         den[j + 1].get_mpz_t()))
      rep.step_divisibility = false;
    if (den[j + 1] != den[j]) all_constant = false;
    if (den[j + 1] != p * den[j]) all_multiplied = false;
  }
  rep.dencase = all_constant    ? DenominatorCase::constant
                : all_multiplied ? DenominatorCase::multiplied
                                 : DenominatorCase::mixed;

  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k));
  rep.k_step_divisibility =
      mpz_divisible_p(den[k].get_mpz_t(), den[0].get_mpz_t()) &&
      mpz_divisible_p(Integer(pk * den[0]).get_mpz_t(), den[k].get_mpz_t());

  Rational a_sum = 0;
  for (int j = 1; j <= k; ++j) {
    Rational term =
        pow_rational(p, j - 1) * cs.coeff(pow_long(p, j - 1) * n);
    a_sum += ((k - j) % 2 == 0) ? term : -term;
  }
  Rational cleared_lhs = Rational(pk * num[k] * den[0]) +
                         (k % 2 == 1 ? 1 : -1) * Rational(num[0] * den[k]);
  rep.cleared_identity = cleared_lhs == Rational(den[0] * den[k]) * a_sum;

  rep.ok = rep.step_divisibility && rep.k_step_divisibility &&
           rep.cleared_identity;
  return rep;
}

Rational omega_scale(int k, int p) {
  if (k < 0) throw std::invalid_argument("omega_scale requires k >= 0");
  if (p < 2) throw std::invalid_argument("omega_scale requires p >= 2");
  Rational s = pow_rational(p, -k);
  return (k % 2 == 0) ? s : -s;
}

}  // namespace fricke
