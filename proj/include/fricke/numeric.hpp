#pragma once

// Floating-point complex evaluation of the exact q-series, reduction to the
// fundamental domain, Newton inversion of j, and the numeric identity checks
// that series arithmetic cannot reach (fixed values of phi, the vanishing
// average at u-hat).

#include <complex>
#include <vector>

#include "fricke/laurent.hpp"
#include "fricke/modcurve.hpp"
#include "fricke/modforms.hpp"

namespace fricke {

struct UpperHalfPoint {
  double re = 0.0;
  double im = 1.0;  // > 0

  std::complex<double> value() const { return {re, im}; }
};

// Whether u lies in the half-open fundamental domain
// {|u| >= 1, -1/2 <= Re <= 0} u {|u| > 1, 0 < Re < 1/2}.
bool in_fundamental_domain(const UpperHalfPoint& u, double eps = 1e-9);

struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  double tail_bound = 0.0;  // geometric bound on the dropped tail; +inf when
                            // the coefficient growth beats |q|
  double peak_term = 0.0;   // largest |term| accumulated (cancellation gauge)
};

// Sum c_n q^n at q = e^{2 pi i tau}. Coefficients are scaled per term from
// their exact values (mantissa and binary exponent separately), so entries of
// any size convert without overflow. Throws std::invalid_argument if
// tau.im <= 0.
EvalResult eval_series(const LaurentSeries& s, const UpperHalfPoint& tau);

struct ReducedPoint {
  UpperHalfPoint u;  // in the fundamental domain
  Mat22 gamma;       // input = gamma . u
  int coset = -1;    // P^1(F_p) label of gamma when p was supplied, else -1
};

// Iterated translation/inversion until the point lands in the fundamental
// domain. p >= 2 labels the coset of gamma; p = 0 skips the label.
// Throws std::runtime_error if the iteration cap is exceeded.
ReducedPoint reduce_to_R(const UpperHalfPoint& tau, int p = 0);

struct JInversion {
  ReducedPoint point;
  double residual = 0.0;  // |j(u) - target| at the returned point
  int iterations = 0;
  std::vector<UpperHalfPoint> candidates;  // distinct reduced preimages found
};

// Finds u in the fundamental domain with |j(u) - target| < tol by damped
// Newton iteration on q, seeded with q = 1/target for large |target| and a
// grid over the domain otherwise. Throws std::runtime_error (with the best
// residual reached) when no seed converges within max_iter steps.
JInversion invert_j(std::complex<double> target, int p = 0, double tol = 1e-8,
                    int max_iter = 60);

// The reduced point with j(u) = -shift.value; numerically answers where the
// Hecke-style sum built on G_p vanishes.
JInversion find_uhat(const SupersingularPrime& sp, const ShiftConstant& shift,
                     double tol = 1e-8, int max_iter = 60);

// |G(u) + sum_{k=0}^{p-1} G((u+k)/p)| at u = uhat, with G rebuilt from the
// table at order exactly 200 p (the translates live at Im(u)/p, so the table
// must cover max_index >= 200 p; throws std::out_of_range otherwise, and
// std::runtime_error if a tail bound exceeds 1e-8).
double verify_vanishing_sum(const SupersingularPrime& sp,
                            const AlphaTable& alphas, const ReducedPoint& uhat);

struct PhiFixedValueReport {
  int p = 0;
  std::complex<double> at_tau0, at_tau1;  // tau_0 = i/sqrt(p), tau_1 its
                                          // companion fixed point
  double magnitude = 0.0;                 // p^{-r/4}
  double mag_err0 = 0.0, mag_err1 = 0.0;  // ||phi| - magnitude|
  double opposition_err = 0.0;            // |phi(tau_0) + phi(tau_1)|
  bool ok = false;                        // all three under 1e-6
};
PhiFixedValueReport phi_fixed_value_check(const GenusZeroPrime& gp);

}  // namespace fricke
