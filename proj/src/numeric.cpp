#include "fricke/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fricke {

namespace {

constexpr double kPi = std::numbers::pi;

struct QEval {
  std::complex<double> f{0.0, 0.0};
  std::complex<double> fp{0.0, 0.0};
  double tail = 0.0;
  double peak = 0.0;
};

// Accumulates f = sum c_n q^n (and optionally f') with each exact coefficient
// converted as mantissa * 2^exponent, so the conversion itself can never
// overflow no matter how large the integers are. log2q/phase describe q.
QEval eval_at_q(const LaurentSeries& s, double log2q, double phase,
                bool want_deriv, std::complex<double> q) {
  QEval out;
  // Trailing window of coefficient magnitudes for the geometric tail bound.
  constexpr int kWindow = 8;
  long win_n[kWindow];
  double win_log2[kWindow];
  int win_count = 0;

  for (long n = s.lead(); n <= s.order(); ++n) {
    const Rational& c = s.coeff(n);
    if (c == 0) continue;
    long ne = 0, de = 0;
    double nd = mpz_get_d_2exp(&ne, c.get_num().get_mpz_t());
    double dd = mpz_get_d_2exp(&de, c.get_den().get_mpz_t());
    double mant = nd / dd;
    double mag = mant * std::exp2(static_cast<double>(ne - de) + n * log2q);
    double ang = phase * static_cast<double>(n);
    std::complex<double> term = mag * std::complex<double>(std::cos(ang),
                                                           std::sin(ang));
    out.f += term;
    if (want_deriv) out.fp += term * (static_cast<double>(n) / q);
    out.peak = std::max(out.peak, std::abs(mag));

    double clog2 = std::log2(std::abs(mant)) + static_cast<double>(ne - de);
    if (win_count == kWindow) {
      std::copy(win_n + 1, win_n + kWindow, win_n);
      std::copy(win_log2 + 1, win_log2 + kWindow, win_log2);
      --win_count;
    }
    win_n[win_count] = n;
    win_log2[win_count] = clog2;
    ++win_count;
  }

  if (win_count > 0) {
    double growth = 0.0;  // log2 of per-index coefficient growth, >= 0
    for (int i = 0; i + 1 < win_count; ++i)
      growth = std::max(growth, (win_log2[i + 1] - win_log2[i]) /
                                    static_cast<double>(win_n[i + 1] - win_n[i]));
    double tlog2 = growth + log2q;
    if (tlog2 >= 0.0) {
      out.tail = std::numeric_limits<double>::infinity();
    } else {
      // First unknown term sits at order+1; extrapolate the coefficient trend
      // out to it, then sum the geometric series of ratio t < 1.
      double t = std::exp2(tlog2);
      double steps =
          static_cast<double>(s.order() + 1 - win_n[win_count - 1]);
      double first = std::exp2(win_log2[win_count - 1] + growth * steps +
                               (s.order() + 1) * log2q);
      out.tail = first / (1.0 - t);
    }
  }
  return out;
}

QEval eval_at_tau(const LaurentSeries& s, const UpperHalfPoint& tau,
                  bool want_deriv) {
  if (!(tau.im > 0.0))
    throw std::invalid_argument("eval_series requires Im tau > 0");
  double log2q = -2.0 * kPi * tau.im / std::log(2.0);
  double phase = 2.0 * kPi * tau.re;
  std::complex<double> q =
      std::exp(std::complex<double>(0.0, 2.0 * kPi) * tau.value());
  return eval_at_q(s, log2q, phase, want_deriv, q);
}

UpperHalfPoint tau_from_q(std::complex<double> q) {
  return {std::arg(q) / (2.0 * kPi), -std::log(std::abs(q)) / (2.0 * kPi)};
}

}  // namespace

bool in_fundamental_domain(const UpperHalfPoint& u, double eps) {
  double n2 = u.re * u.re + u.im * u.im;
  if (u.im <= 0.0) return false;
  if (u.re < -0.5 - eps || u.re >= 0.5) return false;
  if (n2 < 1.0 - eps) return false;
  if (n2 <= 1.0 + eps && u.re > eps) return false;  // arc: left half only
  return true;
}

EvalResult eval_series(const LaurentSeries& s, const UpperHalfPoint& tau) {
  QEval e = eval_at_tau(s, tau, false);
  return {e.f, e.tail, e.peak};
}

ReducedPoint reduce_to_R(const UpperHalfPoint& tau, int p) {
  if (!(tau.im > 0.0))
    throw std::invalid_argument("reduce_to_R requires Im tau > 0");
  std::complex<double> u = tau.value();
  Mat22 g;  // input = g . u throughout
  for (int iter = 0; iter < 500; ++iter) {
    // Re into [-1/2, 1/2); the nudge keeps points that belong on the kept
    // left edge from sticking at Re = +1/2 - (rounding error).
    double k = std::floor(u.real() + 0.5 + 1e-12);
    if (k != 0.0) {
      u -= k;
      long kl = static_cast<long>(k);
      g = {g.a, g.b + g.a * kl, g.c, g.d + g.c * kl};
    }
    double n2 = std::norm(u);
    bool inside = n2 < 1.0 - 1e-9;
    bool arc_right = std::abs(n2 - 1.0) <= 1e-9 && u.real() > 1e-12;
    if (inside || arc_right) {
      u = -1.0 / u;
      g = {-g.b, g.a, -g.d, g.c};
      continue;
    }
    ReducedPoint out{{u.real(), u.imag()}, g, -1};
    if (p >= 2) out.coset = coset_label(g, p).value;
    return out;
  }
  throw std::runtime_error(
      "reduce_to_R: iteration cap exceeded (numerically degenerate input)");
}

JInversion invert_j(std::complex<double> target, int p, double tol,
                    int max_iter) {
  const LaurentSeries& js = []() -> const LaurentSeries& {
    static LaurentSeries s = j_series(64);
    return s;
  }();

  std::vector<std::complex<double>> seeds;
  const std::complex<double> two_pi_i(0.0, 2.0 * kPi);
  if (std::abs(target) > 2000.0) {
    seeds.push_back(1.0 / target);
  } else {
    for (int k = 0; k <= 24; ++k) {
      double theta = kPi / 2 + 0.02 + (2.0 * kPi / 3 - kPi / 2 - 0.02) * k / 24.0;
      std::complex<double> tau(std::cos(theta), std::sin(theta));
      seeds.push_back(std::exp(two_pi_i * tau));
    }
    for (double re : {-0.45, -0.3, -0.15, 0.0, 0.15, 0.3, 0.45})
      for (double im : {0.9, 1.05, 1.25})
        seeds.push_back(std::exp(two_pi_i * std::complex<double>(re, im)));
  }

  JInversion out;
  bool found = false;
  double best_res = std::numeric_limits<double>::infinity();
  for (std::complex<double> q : seeds) {
    if (!(std::abs(q) > 0.0) || std::abs(q) >= 0.999) continue;
    UpperHalfPoint t = tau_from_q(q);
    QEval e = eval_at_tau(js, t, true);
    std::complex<double> r = e.f - target;
    double res = std::abs(r);
    int it = 0;
    for (; it < max_iter && res >= tol; ++it) {
      std::complex<double> step = r / e.fp;
      bool moved = false;
      for (double lam = 1.0; lam > 1e-4; lam *= 0.5) {
        std::complex<double> qn = q - lam * step;
        if (std::abs(qn) >= 0.999 || !(std::abs(qn) > 0.0)) continue;
        QEval en = eval_at_tau(js, tau_from_q(qn), true);
        if (std::abs(en.f - target) < res) {
          q = qn;
          e = en;
          r = e.f - target;
          res = std::abs(r);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    best_res = std::min(best_res, res);
    if (res < tol) {
      ReducedPoint rp = reduce_to_R(tau_from_q(q), p);
      bool fresh = true;
      for (const auto& cand : out.candidates)
        if (std::abs(std::complex<double>(cand.re - rp.u.re,
                                          cand.im - rp.u.im)) < 1e-6)
          fresh = false;
      if (fresh) {
        out.candidates.push_back(rp.u);
        if (!found) {
          out.point = rp;
          out.residual = res;
          out.iterations = it;
          found = true;
        }
      }
    }
  }
  if (!found)
    throw std::runtime_error("invert_j: no seed converged; best residual " +
                             std::to_string(best_res));
  return out;
}

JInversion find_uhat(const SupersingularPrime& sp, const ShiftConstant& shift,
                     double tol, int max_iter) {
  if (shift.p != sp.p)
    throw std::invalid_argument("shift constant level does not match p");
  return invert_j(-shift.value.get_d(), sp.p, tol, max_iter);
}

double verify_vanishing_sum(const SupersingularPrime& sp,
                            const AlphaTable& alphas,
                            const ReducedPoint& uhat) {
  const long need = 200L * sp.p;
  if (alphas.max_index() < need)
    throw std::out_of_range(
        "alpha table too short for the vanishing average: the translates "
        "live at Im/p, so max_index >= 200 p = " +
        std::to_string(need) + " is required");
  LaurentSeries G = alphas.to_series(need);

  auto checked_eval = [&](const UpperHalfPoint& t) {
    EvalResult e = eval_series(G, t);
    if (!(e.tail_bound < 1e-8))
      throw std::runtime_error(
          "verify_vanishing_sum: truncation tail bound too large at Im = " +
          std::to_string(t.im));
    return e.value;
  };

  std::complex<double> sum = checked_eval(uhat.u);
  for (int k = 0; k < sp.p; ++k)
    sum += checked_eval({(uhat.u.re + k) / sp.p, uhat.u.im / sp.p});
  return std::abs(sum);
}

PhiFixedValueReport phi_fixed_value_check(const GenusZeroPrime& gp) {
  const long order = 800;
  LaurentSeries phi = phi_series(gp, order);
  double s = 1.0 / std::sqrt(static_cast<double>(gp.p));
  UpperHalfPoint tau0{0.0, s};
  UpperHalfPoint tau1{-0.5, gp.p == 2 ? 0.5 : s / 2.0};

  PhiFixedValueReport rep;
  rep.p = gp.p;
  rep.at_tau0 = eval_series(phi, tau0).value;
  rep.at_tau1 = eval_series(phi, tau1).value;
  rep.magnitude = std::pow(static_cast<double>(gp.p), -gp.r / 4.0);
  rep.mag_err0 = std::abs(std::abs(rep.at_tau0) - rep.magnitude);
  rep.mag_err1 = std::abs(std::abs(rep.at_tau1) - rep.magnitude);
  rep.opposition_err = std::abs(rep.at_tau0 + rep.at_tau1);
  rep.ok = rep.mag_err0 < 1e-6 && rep.mag_err1 < 1e-6 &&
           rep.opposition_err < 1e-6;
  return rep;
}

}  // namespace fricke
