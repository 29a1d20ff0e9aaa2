#pragma once

// Fixed points of the Fricke involution on X_0(p) as exact CM data: integral
// binary quadratic forms, Gauss reduction with matrix tracking, coset labels
// in P^1(F_p), and class-number counting. Integer arithmetic throughout.

#include <optional>
#include <utility>
#include <vector>

namespace fricke {

// A x^2 + B xy + C y^2 with integer entries (positive definite here).
struct QuadraticForm {
  long a = 0, b = 0, c = 0;

  long discriminant() const { return b * b - 4 * a * c; }
  long content() const;  // gcd(a, |b|, c)
  // -A < B <= A <= C, with B >= 0 when A == C (the half-open convention that
  // puts every root in the standard fundamental domain, left edge included).
  bool is_reduced() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

// Row-major integer matrix [[a, b], [c, d]], determinant 1.
struct Mat22 {
  long a = 1, b = 0, c = 0, d = 1;

  long det() const { return a * d - b * c; }
  friend bool operator==(const Mat22&, const Mat22&) = default;
};

// Right-coset label of gamma in Gamma_0(p)\SL_2(Z): the bottom row of gamma as
// a point of P^1(F_p). Values 0..p-1 mean (1 : value); p means (0 : 1).
struct CosetLabel {
  int value = 0;
  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};
CosetLabel coset_label(const Mat22& gamma, int p);

// Gauss reduction. Returns the reduced equivalent and gamma with
// root(input) = gamma . root(reduced); gamma in SL_2(Z).
std::pair<QuadraticForm, Mat22> reduce_form(QuadraticForm f);

// Genus of X_0(p) for prime p: floor((p+1)/12), minus one when p = 1 mod 12.
// Throws std::domain_error unless p is prime.
int genus_x0(int p);

// Class number h(D) for D < 0, D = 0 or 1 mod 4, by direct enumeration of
// primitive reduced forms. Throws std::invalid_argument otherwise.
long class_number(long D);

// Whether the CM order of a fixed point is the maximal order (field) of
// Q(sqrt(-p)) or the index-2 non-maximal one.
enum class DiscClass { field, order };

struct Classification {
  long content;     // 1 or 2
  long disc;        // discriminant of form/content: -4p or -p
  DiscClass cls;
};
// Classifies a discriminant -4p fixed-point form by its content (2 divides
// exactly when p = 3 mod 4 and the point carries the field order).
// Throws std::logic_error if the content is not 1 or 2.
Classification classify_fixed_point(const QuadraticForm& form, int p);

// One Fricke-fixed point of X_0(p), tau = (tau_0 - b)/a with tau_0 = i/sqrt(p)
// (b = 0: tau_0 itself; (a, b) = (2, 1): the second seed; scanned pairs carry
// both signs of b).
struct FixedPoint {
  long a = 1;
  long b = 0;              // signed
  QuadraticForm form;      // [a p, 2 b p, (p b^2 + 1)/a], discriminant -4p
  QuadraticForm reduced;   // Gauss-reduced equivalent
  Mat22 gamma;             // root(form) = gamma . root(reduced)
  CosetLabel coset;
  Classification cls;
};

// All fixed points for odd supersingular p: the two seeds plus the scan over
// 0 < b < a/2, 2 < a, 3a^2 < 4p, a | p b^2 + 1, deduplicated by exact
// Gamma_0(p)-equivalence (equal reduced form and equal coset label).
// Throws std::domain_error for p = 2 (see fixed_point_forms_p2) and for
// primes outside the supersingular list.
std::vector<FixedPoint> enumerate_fixed_points(int p);

// Level 2 is pinned directly: the classes of (1+i)/2 and i/sqrt(2).
std::vector<QuadraticForm> fixed_point_forms_p2();

// The closed-form prediction for the reduced value of a scanned point:
// (u_0 +- 1)/a for b = 1, (u_0 -+ r)/a when a = br + 1, (u_0 +- r)/a when
// a = br - 1 (u_0 = i sqrt(p)). Returns true/false for an exact match when
// the predicted value lies in the fundamental domain, nullopt when it does
// not (or no case applies) — those are recorded, never asserted.
std::optional<bool> reduced_value_formula_check(const FixedPoint& pt, int p);

// Count identities for odd supersingular p.
struct CountCheck {
  int p = 0;
  int genus = 0;
  long num_points = 0;
  long field_points = 0;
  long order_points = 0;
  long field_disc = 0;
  long h_field = 0;      // class_number(field_disc)
  long h_minus4p = 0;    // class_number(-4p)
  bool counts_ok = false;
};
// Checks num_points == 2g+2, field_points == h_field, and for p = 3 mod 4
// order_points == h(-4p) (else 0), i.e. the Weierstrass-point count.
CountCheck verify_counts(int p);

}  // namespace fricke
