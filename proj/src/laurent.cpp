#include "fricke/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fricke {

namespace {

const Rational kZero(0);

[[noreturn]] void throw_beyond_order(long n, long order) {
  throw std::out_of_range("coefficient of q^" + std::to_string(n) +
                          " requested beyond truncation order " +
                          std::to_string(order));
}

}  // namespace

LaurentSeries LaurentSeries::zero(long order) {
  LaurentSeries s;
  s.lead_ = order;
  s.order_ = order;
  s.coeffs_.assign(1, kZero);
  return s;
}

LaurentSeries LaurentSeries::constant(const Rational& c, long order) {
  return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, long exp, long order) {
  if (exp > order)
    throw std::invalid_argument("monomial exponent exceeds requested order");
  LaurentSeries s;
  s.lead_ = exp;
  s.order_ = order;
  s.coeffs_.assign(static_cast<std::size_t>(order - exp + 1), kZero);
  s.coeffs_[0] = c;
  s.normalize();
  return s;
}

LaurentSeries::LaurentSeries(long lead, std::vector<Rational> coeffs, long order)
    : lead_(lead), order_(order), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw std::invalid_argument("series needs at least one coefficient");
  if (lead_ + static_cast<long>(coeffs_.size()) - 1 != order_)
    throw std::invalid_argument("coefficient count does not match lead..order");
  normalize();
}

// Trims known-zero leading coefficients: a sharper lead is a sharper exactness
// claim for every product this series enters. The all-zero case collapses to
// the single-entry representation with lead == order.
void LaurentSeries::normalize() {
  std::size_t skip = 0;
  while (skip + 1 < coeffs_.size() && coeffs_[skip] == 0) ++skip;
  if (skip > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(skip));
    lead_ += static_cast<long>(skip);
  }
}

bool LaurentSeries::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == 0;
}

const Rational& LaurentSeries::coeff(long n) const {
  if (n > order_) throw_beyond_order(n, order_);
  if (n < lead_) return kZero;
  return coeffs_[static_cast<std::size_t>(n - lead_)];
}

std::size_t LaurentSeries::nonzero_count() const {
  std::size_t k = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++k;
  return k;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentSeries operator+(const LaurentSeries& s, const LaurentSeries& t) {
  const long order = std::min(s.order_, t.order_);
  const long lead = std::min(s.lead_, t.lead_);  // <= order, since lead_ <= order_
  std::vector<Rational> c(static_cast<std::size_t>(order - lead + 1),
                          Rational(0));
  for (long n = std::max(lead, s.lead_); n <= std::min(order, s.order_); ++n)
    c[static_cast<std::size_t>(n - lead)] = s.coeff(n);
  for (long n = std::max(lead, t.lead_); n <= std::min(order, t.order_); ++n)
    c[static_cast<std::size_t>(n - lead)] += t.coeff(n);
  return LaurentSeries(lead, std::move(c), order);
}

LaurentSeries operator-(const LaurentSeries& s, const LaurentSeries& t) {
  return s + (-t);
}

LaurentSeries operator*(const LaurentSeries& s, const LaurentSeries& t) {
  // Unknown terms of one factor meet the leading exponent of the other, so
  // exactness holds through this order and no further.
  const long order = std::min(s.order_ + t.lead_, t.order_ + s.lead_);
  if (s.is_zero() || t.is_zero()) return LaurentSeries::zero(order);

  const bool s_outer = s.nonzero_count() <= t.nonzero_count();
  const LaurentSeries& a = s_outer ? s : t;  // iterate a's nonzeros
  const LaurentSeries& b = s_outer ? t : s;

  const long lead = s.lead_ + t.lead_;
  std::vector<Rational> c(static_cast<std::size_t>(order - lead + 1),
                          Rational(0));
  Rational prod;
  for (long i = a.lead_; i <= std::min(a.order_, order - b.lead_); ++i) {
    const Rational& ai = a.coeffs_[static_cast<std::size_t>(i - a.lead_)];
    if (ai == 0) continue;
    const long jmax = std::min(b.order_, order - i);
    for (long j = b.lead_; j <= jmax; ++j) {
      const Rational& bj = b.coeffs_[static_cast<std::size_t>(j - b.lead_)];
      if (bj == 0) continue;
      prod = ai * bj;
      c[static_cast<std::size_t>(i + j - lead)] += prod;
    }
  }
  return LaurentSeries(lead, std::move(c), order);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& s) {
  if (c == 0) return LaurentSeries::zero(s.order());
  LaurentSeries r = s;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentSeries div(const LaurentSeries& u, const LaurentSeries& s) {
  if (s.is_zero())
    throw std::domain_error(
        "series not invertible: zero (or unknown) leading coefficient");
  // s = c*q^L * (1 + x) with x known through relative order s.order - s.lead;
  // 1/s is exact to the same relative order, and the product with u caps at
  // u's own absolute order shifted by -L.
  const long order =
      std::min(u.order() - s.lead(), u.lead() + s.order() - 2 * s.lead());
  const long lead = u.lead() - s.lead();  // <= order: relative orders are >= 0

  // Gather the divisor's nonzero offsets once; the recurrence touches them for
  // every output coefficient, so sparse divisors make this O(N * nnz).
  std::vector<long> offs;
  std::vector<Rational> vals;
  for (long k = s.lead() + 1; k <= s.order(); ++k) {
    const Rational& v = s.coeff(k);
    if (v != 0) {
      offs.push_back(k - s.lead());
      vals.push_back(v);
    }
  }
  const Rational& c0 = s.coeff(s.lead());

  std::vector<Rational> t(static_cast<std::size_t>(order - lead + 1),
                          Rational(0));
  Rational acc, prod;
  for (long n = lead; n <= order; ++n) {
    // c0 * t_n = u_{n + s.lead} - sum_k s_{s.lead + k} * t_{n - k}
    acc = (n + s.lead() <= u.order()) ? u.coeff(n + s.lead()) : Rational(0);
    for (std::size_t m = 0; m < offs.size(); ++m) {
      const long j = n - offs[m];
      if (j < lead) break;  // offsets ascend, so earlier terms only get older
      const Rational& tj = t[static_cast<std::size_t>(j - lead)];
      if (tj == 0) continue;
      prod = vals[m] * tj;
      acc -= prod;
    }
    acc /= c0;
    t[static_cast<std::size_t>(n - lead)] = acc;
  }
  return LaurentSeries(lead, std::move(t), order);
}

LaurentSeries LaurentSeries::invert() const {
  return div(constant(Rational(1), order_ - lead_), *this);
}

LaurentSeries LaurentSeries::pow_int(long k) const {
  if (k < 0) return invert().pow_int(-k);
  // Empty product: exactly 1, carried at this series' relative precision.
  LaurentSeries acc = constant(Rational(1), order_ - lead_);
  if (k == 0) return acc;
  LaurentSeries base = *this;
  bool have = false;
  while (k > 0) {
    if (k & 1) {
      acc = have ? acc * base : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

LaurentSeries LaurentSeries::rescale_q(long m) const {
  if (m < 1) throw std::invalid_argument("rescale_q needs m >= 1");
  const long order = order_ * m + (m - 1);
  if (is_zero()) {
    LaurentSeries z = zero(order);
    return z;
  }
  const long lead = lead_ * m;
  std::vector<Rational> c(static_cast<std::size_t>(order - lead + 1),
                          Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    c[i * static_cast<std::size_t>(m)] = coeffs_[i];
  return LaurentSeries(lead, std::move(c), order);
}

LaurentSeries LaurentSeries::u_pick(long m) const {
  if (m < 1) throw std::invalid_argument("u_pick needs m >= 1");
  const long order = (order_ >= 0) ? order_ / m : -((-order_ + m - 1) / m);
  long n0 = (lead_ >= 0) ? (lead_ + m - 1) / m : -((-lead_) / m);
  if (n0 > order) return zero(order);
  std::vector<Rational> c(static_cast<std::size_t>(order - n0 + 1));
  for (long n = n0; n <= order; ++n)
    c[static_cast<std::size_t>(n - n0)] = coeff(m * n);
  return LaurentSeries(n0, std::move(c), order);
}

LaurentSeries LaurentSeries::shift_exp(long k) const {
  LaurentSeries r = *this;
  r.lead_ += k;
  r.order_ += k;
  return r;
}

LaurentSeries LaurentSeries::truncated(long new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("cannot raise a truncation order");
  if (new_order < lead_) return zero(new_order);
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + (new_order - lead_ + 1));
  return LaurentSeries(lead_, std::move(c), new_order);
}

bool operator==(const LaurentSeries& s, const LaurentSeries& t) {
  return s.order_ == t.order_ && s.lead_ == t.lead_ && s.coeffs_ == t.coeffs_;
}

}  // namespace fricke
