#pragma once

// Truncated Laurent series in one variable q with exact rational coefficients.
//
// A series value represents  sum_{n=lead..order} c_n q^n  +  O(q^{order+1}).
// `order` is a proof obligation, not a buffer size: every operation computes
// the largest order to which its result is provably exact given the orders of
// its inputs, and reading a coefficient beyond that order is an error, never a
// silent zero. Coefficients below `lead` are exactly zero.

#include <vector>

#include "fricke/rational.hpp"

namespace fricke {

class LaurentSeries {
 public:
  // The zero series, known exact through q^order.
  static LaurentSeries zero(long order);
  // The constant series c + O(q^{order+1}).
  static LaurentSeries constant(const Rational& c, long order);
  // c * q^exp + O(q^{order+1}); requires exp <= order.
  static LaurentSeries monomial(const Rational& c, long exp, long order);
  // Coefficients c_{lead}, c_{lead+1}, ..., one per entry; the last entry has
  // exponent lead + coeffs.size() - 1, which must equal `order`.
  LaurentSeries(long lead, std::vector<Rational> coeffs, long order);

  long lead() const { return lead_; }
  long order() const { return order_; }
  bool is_zero() const;

  // Coefficient of q^n. Exact zero for n < lead(); throws std::out_of_range
  // for n > order() (the truncated region — the value there is unknown).
  const Rational& coeff(long n) const;

  // Number of nonzero stored coefficients (used to pick iteration order in
  // products; Euler-product factors are very sparse).
  std::size_t nonzero_count() const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t);
  friend LaurentSeries operator-(const LaurentSeries& s, const LaurentSeries& t);
  // Cauchy product; result order = min(s.order + t.lead, t.order + s.lead).
  friend LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& s);

  // Multiplicative inverse; requires a nonzero leading coefficient (throws
  // std::domain_error on the zero series). invert(s) == div(1, s).
  LaurentSeries invert() const;

  // s^k for any integer k (binary powering; k < 0 inverts first). s^0 is the
  // constant 1 carried to the relative precision of s.
  LaurentSeries pow_int(long k) const;

  // Substitutes q -> q^m (m >= 1): exponents and order stretch by m (the gaps
  // created are known zeros, so the result is exact through m*order + m - 1).
  LaurentSeries rescale_q(long m) const;

  // Picks every m-th coefficient: sum_n c_{mn} q^n over mn in [lead, order].
  LaurentSeries u_pick(long m) const;

  // Multiplies by q^k (exponent shift by k, either sign).
  LaurentSeries shift_exp(long k) const;

  // Restricts knowledge to q^new_order (must not exceed order(): truncation
  // can only discard proof, never invent it).
  LaurentSeries truncated(long new_order) const;

  // Same coefficients at every exponent and the same order.
  friend bool operator==(const LaurentSeries& s, const LaurentSeries& t);

 private:
  LaurentSeries() = default;
  void normalize();

  long lead_ = 0;
  long order_ = 0;
  std::vector<Rational> coeffs_;  // index i holds the coefficient of q^{lead_+i}
};

// Long division u / s, exact through min(u.order - s.lead,
// u.lead + s.order - 2*s.lead). Cost O(len(result) * nnz(s)), so dividing by a
// sparse series (an Euler product) is cheap even at large order.
LaurentSeries div(const LaurentSeries& u, const LaurentSeries& s);

}  // namespace fricke
