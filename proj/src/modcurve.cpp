#include "fricke/modcurve.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fricke/modforms.hpp"

namespace fricke {

namespace {

long floordiv(long x, long y) {  // y > 0
  long q = x / y;
  if (x % y != 0 && x < 0) --q;
  return q;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long mod_inverse(long x, long p) {
  long t = 0, nt = 1, r = p, nr = ((x % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return ((t % p) + p) % p;
}

}  // namespace

long QuadraticForm::content() const {
  return std::gcd(std::gcd(a, b), c);
}

bool QuadraticForm::is_reduced() const {
  if (!(-a < b && b <= a && a <= c)) return false;
  if (a == c && b < 0) return false;
  return true;
}

CosetLabel coset_label(const Mat22& gamma, int p) {
  long c = ((gamma.c % p) + p) % p;
  long d = ((gamma.d % p) + p) % p;
  if (c == 0) return {p};
  return {static_cast<int>(d * mod_inverse(c, p) % p)};
}

std::pair<QuadraticForm, Mat22> reduce_form(QuadraticForm f) {
  if (f.a <= 0 || f.discriminant() >= 0)
    throw std::invalid_argument("reduce_form requires a positive definite form");
  // Invariant: root(input) = gamma . root(f). Each step replaces f by s.f with
  // root(s.f) = s . root(f), so gamma picks up s^{-1} on the right.
  Mat22 g;
  while (true) {
    long k = floordiv(f.a - f.b, 2 * f.a);  // put b into (-a, a]
    if (k != 0) {
      f.c += (f.b + f.a * k) * k;
      f.b += 2 * f.a * k;
      // s = T^{-k}: root -> root - k; gamma <- gamma . T^{k}
      g.b += g.a * k;
      g.d += g.c * k;
    }
    if (f.c < f.a || (f.a == f.c && f.b < 0)) {
      f = {f.c, -f.b, f.a};
      // s = S: root -> -1/root; gamma <- gamma . S^{-1} = gamma . [[0,1],[-1,0]]
      g = {-g.b, g.a, -g.d, g.c};
      continue;
    }
    return {f, g};
  }
}

int genus_x0(int p) {
  if (!is_prime(p))
    throw std::domain_error("genus_x0: " + std::to_string(p) + " is not prime");
  int g = (p + 1) / 12;
  if (p % 12 == 1) --g;
  return g;
}

long class_number(long D) {
  if (D >= 0 || (((D % 4) + 4) % 4) > 1)
    throw std::invalid_argument(
        "class_number requires D < 0 with D = 0 or 1 mod 4");
  long count = 0;
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) == 1) ++count;
    }
  }
  return count;
}

Classification classify_fixed_point(const QuadraticForm& form, int p) {
  long l = form.content();
  if (l != 1 && l != 2)
    throw std::logic_error("fixed-point form content must be 1 or 2, got " +
                           std::to_string(l));
  long disc = form.discriminant() / (l * l);
  long field_disc = (p % 4 == 1) ? -4L * p : -static_cast<long>(p);
  return {l, disc, disc == field_disc ? DiscClass::field : DiscClass::order};
}

std::vector<FixedPoint> enumerate_fixed_points(int p) {
  if (!SupersingularPrime::admits(p))
    throw std::domain_error("enumerate_fixed_points: " + std::to_string(p) +
                            " is not a supersingular prime");
  if (p == 2)
    throw std::domain_error(
        "enumerate_fixed_points handles odd p; level 2 is pinned by "
        "fixed_point_forms_p2");

  std::vector<std::pair<long, long>> cands = {{1, 0}, {2, 1}};
  for (long a = 3; 3 * a * a < 4 * p; ++a)
    for (long b = 1; 2 * b < a; ++b)
      if ((p * b * b + 1) % a == 0) {
        cands.emplace_back(a, b);
        cands.emplace_back(a, -b);
      }

  std::vector<FixedPoint> points;
  std::map<std::pair<std::array<long, 3>, int>, bool> seen;
  for (auto [a, b] : cands) {
    FixedPoint pt;
    pt.a = a;
    pt.b = b;
    pt.form = {a * p, 2 * b * p, (p * b * b + 1) / a};
    auto [red, gamma] = reduce_form(pt.form);
    pt.reduced = red;
    pt.gamma = gamma;
    pt.coset = coset_label(gamma, p);
    pt.cls = classify_fixed_point(pt.form, p);
    auto key = std::make_pair(std::array<long, 3>{red.a, red.b, red.c},
                              pt.coset.value);
    if (seen.emplace(key, true).second) points.push_back(pt);
  }
  return points;
}

std::vector<QuadraticForm> fixed_point_forms_p2() {
  // Classes of (1+i)/2 (discriminant -4) and i/sqrt(2) (discriminant -8).
  return {{2, -2, 1}, {2, 0, 1}};
}

std::optional<bool> reduced_value_formula_check(const FixedPoint& pt, int p) {
  long a = pt.a, b = pt.b;
  if (b == 0 || a <= 2) return std::nullopt;  // seeds: no scanned pair
  long babs = std::labs(b);
  // Predicted reduced value (x + i sqrt(p))/a; x depends on the case.
  long x;
  if (babs == 1) {
    x = (b > 0) ? 1 : -1;
  } else if ((a - 1) % babs == 0) {
    long r = (a - 1) / babs;  // a = br + 1: u_+- = (u_0 -+ r)/a
    x = (b > 0) ? -r : r;
  } else if ((a + 1) % babs == 0) {
    long r = (a + 1) / babs;  // a = br - 1: u_+- = (u_0 +- r)/a
    x = (b > 0) ? r : -r;
  } else {
    return std::nullopt;
  }
  // Is the predicted value in the fundamental domain? |u| >= 1 with the
  // boundary |u| = 1 only on the left half, and -1/2 <= Re < 1/2.
  long norm_num = x * x + p;  // a^2 |u|^2
  bool interior = norm_num > a * a && -a <= 2 * x && 2 * x < a;
  bool arc = norm_num == a * a && -a <= 2 * x && x <= 0;
  if (!interior && !arc) return std::nullopt;
  // Exact comparison with the Gauss-reduced root (-B + i sqrt(4AC-B^2))/(2A).
  const QuadraticForm& r = pt.reduced;
  bool re_match = -r.b * a == 2 * r.a * x;
  bool im_match = (4 * r.a * r.c - r.b * r.b) * a * a == 4 * r.a * r.a * p;
  return re_match && im_match;
}

CountCheck verify_counts(int p) {
  auto points = enumerate_fixed_points(p);
  CountCheck ck;
  ck.p = p;
  ck.genus = genus_x0(p);
  ck.num_points = static_cast<long>(points.size());
  for (const auto& pt : points)
    (pt.cls.cls == DiscClass::field ? ck.field_points : ck.order_points)++;
  ck.field_disc = (p % 4 == 1) ? -4L * p : -static_cast<long>(p);
  ck.h_field = class_number(ck.field_disc);
  ck.h_minus4p = class_number(-4L * p);
  bool weierstrass = ck.num_points == 2L * ck.genus + 2;
  bool field_ok = ck.field_points == ck.h_field;
  bool order_ok =
      (p % 4 == 3) ? ck.order_points == ck.h_minus4p : ck.order_points == 0;
  ck.counts_ok = weierstrass && field_ok && order_ok;
  return ck;
}

}  // namespace fricke
