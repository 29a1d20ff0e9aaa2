#pragma once

// q-expansions on X_0(p): the eta-quotient hauptmodul-style functions for the
// five genus-zero prime levels, their Fricke transforms, the Klein j-function,
// and the Hecke-style sum that ties the two together. All coefficients exact.

#include <stdexcept>
#include <string>
#include <vector>

#include "fricke/laurent.hpp"
#include "fricke/rational.hpp"

namespace fricke {

// A prime p with X_0(p) of genus zero ({2, 3, 5, 7, 13}); r = 24/(p-1) is the
// eta exponent that makes (eta(p*tau)/eta(tau))^r weight-zero, always even.
struct GenusZeroPrime {
  int p;
  int r;
  int half_r;

  static bool admits(int p);
  // Throws std::domain_error for any other p (the construction does not exist).
  static GenusZeroPrime make(int p);
};

// A prime in Ogg's supersingular list {2,3,5,7,11,13,17,19,23,29,31,41,47,59,71}.
struct SupersingularPrime {
  int p;

  static const std::vector<int>& list();
  static bool admits(int p);
  // Throws std::domain_error for any other p.
  static SupersingularPrime make(int p);
};

enum class AlphaSource { computed, ingested };

// Coefficients alpha_0..alpha_N of a level-p Fricke-invariant function
// q^{-1} + sum alpha_n q^n. Computed tables come from g_series (always
// integral); ingested ones come from a coefficient file and may be rational.
struct AlphaTable {
  int p = 0;
  AlphaSource source = AlphaSource::computed;
  std::vector<Rational> entries;

  long max_index() const { return static_cast<long>(entries.size()) - 1; }
  // Throws std::out_of_range ("alpha table too short") beyond max_index().
  const Rational& alpha(long n) const;
  // q^{-1} + sum_{n=0}^{order} alpha_n q^n; requires max_index() >= order.
  LaurentSeries to_series(long order) const;
};

// The exact q^0 value of (Hecke sum - j); fixed by p and the table.
struct ShiftConstant {
  int p;
  Rational value;
};

// Raised when a series identity that must hold coefficient-by-coefficient
// fails; `index` is the first failing exponent.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

// prod_{n>=1} (1 - q^n) through q^order (Euler's pentagonal expansion; the
// tests compare against the literal product).
LaurentSeries dedekind_product(long order);

// phi_p = q * prod((1 - q^{pn}) / (1 - q^n))^r, exact through q^order.
// The q^{1/24} prefactors of the two eta factors cancel; the net q-power is
// exactly 1 and is assembled as an integer exponent, never as a fractional q.
LaurentSeries phi_series(const GenusZeroPrime& gp, long order);

// The Fricke transform phi_p(-1/(p tau)) = p^{-r/2} / phi_p(tau), expanded as
// p^{-r/2} * q^{-1} * prod((1 - q^n) / (1 - q^{pn}))^r. Identical to
// p^{-r/2} * invert(phi_series) but assembled from sparse factors so large
// orders stay cheap; the product identity is pinned by tests.
LaurentSeries phi_fricke_series(const GenusZeroPrime& gp, long order);

// alpha table of G_p = p^{r/2} * (phi_p + Fricke transform), the normalized
// q^{-1} + sum alpha_n q^n. All alpha_n are integers (checked; a failure
// throws std::logic_error since it would mean an arithmetic bug).
AlphaTable g_series(const GenusZeroPrime& gp, long order);

// Klein j-function via E_4^3 / Delta, exact through q^order:
// E_4 = 1 + 240 sum sigma_3(n) q^n, Delta = q * prod(1-q^n)^24.
// Expansion starts q^{-1} + 744 + 196884 q + ... (constant checked).
LaurentSeries j_series(long order);

// The level-p Hecke-style sum of the table's function, expanded through
// q^order: q^{-1} + (p+1) alpha_0 + sum_n (alpha_n + p alpha_{pn}) q^n.
// Requires the table to cover indices 0..p*order.
LaurentSeries p_series(const SupersingularPrime& sp, const AlphaTable& alphas,
                       long order);

// Verifies that (p_series - j_series) is constant through q^order and returns
// that constant. Throws IdentityViolation at the first non-constant exponent.
ShiftConstant shift_constant(const SupersingularPrime& sp,
                             const AlphaTable& alphas, long order);
// Same, against a caller-supplied j expansion (order taken from it).
ShiftConstant shift_constant(const SupersingularPrime& sp,
                             const AlphaTable& alphas, const LaurentSeries& j);

// Per-coefficient check of c_n = alpha_n + p * alpha_{pn} for 1 <= n <= n_max.
struct RelationCheck {
  long n_max = 0;
  bool pass = true;
  long first_fail = -1;
};
RelationCheck coefficient_relation_check(const SupersingularPrime& sp,
                                         const AlphaTable& alphas,
                                         const LaurentSeries& j, long n_max);

}  // namespace fricke
