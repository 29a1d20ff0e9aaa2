#pragma once

// Base-p digit operators (the multiply-by-p shift F, the first-digit rotation
// sigma, their commutator), the exact chain identities they induce on the
// alpha/c coefficient tables, and denominator tracking for rational tables.

#include <vector>

#include "fricke/laurent.hpp"
#include "fricke/modforms.hpp"
#include "fricke/rational.hpp"

namespace fricke {

// Base-p expansion, least significant digit first, trailing zeros trimmed
// (the expansion of 0 is empty).
struct DigitVector {
  int p = 2;
  std::vector<int> digits;

  long value() const;
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

// Pre: n >= 0, p prime.
DigitVector digits_of(long n, int p);

// F_p^k: n -> n p^k, a k-fold left shift of the digits. Pre: k >= 0.
long f_shift(long n, int p, int k);

// sigma_p^l: replaces the digit a_0 by (a_0 + l) mod p. Pre: l >= 0;
// sigma_p^p is the identity.
long sigma_shift(long n, int p, long l);

// H^{k,l}_p(n) = F^k(sigma^l(n)) - sigma^l(F^k(n)), by direct composition.
// Pre: k >= 1, 0 < l < p. Equals -l + (((a_0+l) mod p) - a_0) p^k, so it is
// never divisible by p.
long commutator_h(long n, int p, int k, int l);

// Both sides of the k-step chain identity
//   p^k alpha_{p^k n} + (-1)^{k+1} alpha_n
//     = p^{k-1} c_{p^{k-1} n} - p^{k-2} c_{p^{k-2} n} + ... + (-1)^{k-1} c_n,
// where c are the coefficients of cs (the q-expansion with c_m at q^m).
// Pre: n >= 1, k >= 1; alphas covers p^k n and cs covers p^{k-1} n.
struct ChainSides {
  Rational lhs, rhs;
  bool match() const { return lhs == rhs; }
};
ChainSides chain_residual(const SupersingularPrime& sp, const AlphaTable& alphas,
                          const LaurentSeries& cs, long n, int k);

// The coefficient map c_n -> c_{pn}: returns c_n/p + p alpha_{p^2 n} -
// alpha_n/p, which the chain identity makes equal to c_{pn}.
// Pre: n >= 1; alphas covers p^2 n and cs covers n.
Rational f_map(const SupersingularPrime& sp, const AlphaTable& alphas,
               const LaurentSeries& cs, long n);

// A table entry alpha_n split as a rational part a_n/b_n in lowest terms plus
// a possible non-rational part that is carried symbolically only: zero by
// construction for computed tables, undecided for ingested ones.
enum class OmegaTag { assumed_zero, symbolic };
struct RationalDecomposition {
  long n = 0;
  Rational g;
  OmegaTag omega = OmegaTag::assumed_zero;

  Integer numer() const { return g.get_num(); }
  Integer denom() const { return g.get_den(); }
};
RationalDecomposition decompose(const AlphaTable& alphas, long n);

// How the denominators b_{p^j n} behave along one F_p-chain.
enum class DenominatorCase { constant, multiplied, mixed };

struct DenominatorChainReport {
  long n = 0;
  int k = 0;
  bool step_divisibility = false;  // b_m | b_{pm} and b_{pm} | p b_m each step
  bool k_step_divisibility = false;  // b_n | b_{p^k n} | p^k b_n
  bool cleared_identity = false;     // the chain identity with denominators
                                     // cleared, against the integer c-sum
  DenominatorCase dencase = DenominatorCase::mixed;
  bool ok = false;
};
// Pre as in chain_residual. The cleared identity reads
//   p^k a_{p^k n} b_n + (-1)^{k+1} a_n b_{p^k n} = b_n b_{p^k n} A,
// with A the alternating c-sum (an integer when cs has integer coefficients).
DenominatorChainReport denominator_chain_check(const SupersingularPrime& sp,
                                               const AlphaTable& alphas,
                                               const LaurentSeries& cs, long n,
                                               int k);

// The exact factor (-1)^k / p^k that a non-rational part of alpha_n would be
// scaled by k steps along its F_p-chain. Pre: k >= 0, p >= 2.
Rational omega_scale(int k, int p);

}  // namespace fricke
