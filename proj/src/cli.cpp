#include "fricke/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fricke/digits.hpp"
#include "fricke/modcurve.hpp"
#include "fricke/modforms.hpp"
#include "fricke/numeric.hpp"
#include "fricke/report.hpp"
#include "fricke/table_io.hpp"

namespace fricke {

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

void dump_series(std::ostream& out, const LaurentSeries& s) {
  for (long n = s.lead(); n <= s.order(); ++n)
    out << n << ' ' << to_string(s.coeff(n)) << '\n';
}

std::string form_text(const QuadraticForm& f) {
  return "[" + std::to_string(f.a) + "," + std::to_string(f.b) + "," +
         std::to_string(f.c) + "]";
}

int finish(RunReport& rep, std::ostream& out) {
  rep.render(out);
  return rep.all_passed() ? kPass : kCheckFailed;
}

int cmd_expand(const std::string& object, std::optional<int> p, long order,
               const std::string& alpha_path, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  std::optional<AlphaTable> table;
  if (!alpha_path.empty()) table = load_alpha_table(alpha_path);

  LaurentSeries s = LaurentSeries::zero(0);
  if (object == "j") {
    s = j_series(order);
  } else {
    if (!p) {
      err << "expand " << object << ": --p is required\n";
      return kUsage;
    }
    if (table && table->p != *p) {
      err << "expand: --alpha-file is a level-" << table->p
          << " table but --p is " << *p << '\n';
      return kUsage;
    }
    if (object == "phi" || object == "phi-fricke") {
      auto gp = GenusZeroPrime::make(*p);  // throws for other levels
      s = object == "phi" ? phi_series(gp, order)
                          : phi_fricke_series(gp, order);
    } else if (object == "g") {
      if (table)
        s = table->to_series(order);
      else
        s = g_series(GenusZeroPrime::make(*p), order).to_series(order);
    } else {  // p-series
      auto sp = SupersingularPrime::make(*p);
      if (!table) table = g_series(GenusZeroPrime::make(*p), *p * order);
      s = p_series(sp, *table, order);
    }
  }

  if (out_path.empty()) {
    dump_series(out, s);
    return kPass;
  }
  std::ofstream f(out_path);
  if (!f) {
    err << "expand: cannot write " << out_path << '\n';
    return kUsage;
  }
  dump_series(f, s);
  RunReport rep("expand");
  rep.kv("OBJECT", object);
  if (p) rep.kv("P", *p);
  rep.kv("ORDER", order);
  rep.kv("OUT", out_path);
  rep.kv("ROWS", s.order() - s.lead() + 1);
  return finish(rep, out);
}

int cmd_verify(int p, long order, const std::string& alpha_path,
               std::ostream& out, std::ostream& err) {
  if (!SupersingularPrime::admits(p)) {
    err << "verify: the level-" << p
        << " involution quotient has positive genus; no identities to check "
           "(supported levels: 2 3 5 7 11 13 17 19 23 29 31 41 47 59 71)\n";
    return kUsage;
  }
  auto sp = SupersingularPrime::make(p);
  const bool genus_zero = GenusZeroPrime::admits(p);

  RunReport rep("verify");
  rep.kv("P", p);

  AlphaTable table;
  long reach = 0;  // largest n with c_n checkable against the table
  if (!alpha_path.empty()) {
    table = load_alpha_table(alpha_path);
    if (table.p != p) {
      err << "verify: --alpha-file is a level-" << table.p
          << " table but --p is " << p << '\n';
      return kUsage;
    }
    reach = table.max_index() / p;
    if (reach < 1) {
      err << "verify: table too short (max index " << table.max_index()
          << ", need at least " << p << ")\n";
      return kUsage;
    }
    rep.kv("SOURCE", "ingested:" + alpha_path);
  } else if (genus_zero) {
    table = g_series(GenusZeroPrime::make(p), p * order);
    reach = order;
    rep.kv("SOURCE", "computed");
  } else {
    err << "verify: no construction at level " << p
        << "; supply a coefficient table via --alpha-file\n";
    return kUsage;
  }
  rep.kv("ORDER", reach);

  LaurentSeries js = j_series(reach);

  // The level sum minus j must be a constant series, and the constant must
  // match alpha_0 (p+1) - 744; the (p-1) variant must not.
  try {
    ShiftConstant sc = shift_constant(sp, table, js);
    rep.check("hecke_image_constant", true);
    rep.kv("CONSTANT", sc.value);
    Rational plus = table.alpha(0) * (p + 1) - 744;
    Rational minus = table.alpha(0) * (p - 1) - 744;
    rep.kv("CONSTANT.plus_variant", plus);
    rep.kv("CONSTANT.minus_variant", minus);
    rep.check("constant_matches_plus_variant", sc.value == plus);
    rep.check("minus_variant_rejected", sc.value != minus,
              "the (p-1) variant matches; adjudication void");
  } catch (const IdentityViolation& e) {
    rep.check("hecke_image_constant", false,
              "first_failing_index=" + std::to_string(e.index()));
  }

  RelationCheck rc = coefficient_relation_check(sp, table, js, reach);
  rep.kv("COEFFICIENT_RELATION.range", rc.n_max);
  rep.check("coefficient_relation", rc.pass,
            "first_failing_index=" + std::to_string(rc.first_fail));

  if (genus_zero) {
    // Construction cross-checks: the table must be the normalized sum of the
    // product form and its involution transform, and their product must be
    // the exact constant p^{-r/2}.
    auto gp = GenusZeroPrime::make(p);
    long n_rel = std::min<long>(reach, 40);
    LaurentSeries phi = phi_series(gp, n_rel + 1);
    LaurentSeries fricke = phi_fricke_series(gp, n_rel + 1);
    Rational scale = pow_rational(p, gp.half_r);
    LaurentSeries combined = scale * (phi + fricke);
    LaurentSeries expected = table.to_series(n_rel);
    bool rel_ok = true;
    long rel_fail = -1;
    for (long n = expected.lead(); n <= n_rel && rel_ok; ++n)
      if (combined.coeff(n) != expected.coeff(n)) {
        rel_ok = false;
        rel_fail = n;
      }
    rep.kv("SERIES_RELATIONS.range", n_rel);
    rep.check("series_relations", rel_ok,
              "first_failing_index=" + std::to_string(rel_fail));

    LaurentSeries prod = phi * fricke;
    Rational target = pow_rational(p, -gp.half_r);
    bool prod_ok = true;
    long prod_fail = -1;
    for (long n = prod.lead(); n <= prod.order() && prod_ok; ++n) {
      Rational want = (n == 0) ? target : Rational(0);
      if (prod.coeff(n) != want) {
        prod_ok = false;
        prod_fail = n;
      }
    }
    rep.kv("INVOLUTION_PRODUCT.constant", target);
    rep.check("involution_product", prod_ok,
              "first_failing_index=" + std::to_string(prod_fail));
  } else {
    rep.kv("SERIES_RELATIONS.range", "skipped: no product construction");
  }

  // Coefficient chains along n -> pn -> p^2 n ... tied to the c-sum, plus the
  // map reproducing c_{pn}, wherever the table range allows.
  long chain_cases = 0;
  bool chain_ok = true;
  std::string chain_fail;
  for (int k = 1; k <= 3 && chain_ok; ++k) {
    for (long n = 1; n <= 20 && chain_ok; ++n) {
      if (n % p == 0) continue;
      Integer pk = 1;
      for (int i = 0; i < k; ++i) pk *= p;
      if (!pk.fits_slong_p()) continue;
      long pkn = pk.get_si() * n;
      if (pkn > table.max_index() || pkn / p > js.order()) continue;
      ChainSides ch = chain_residual(sp, table, js, n, k);
      if (!ch.match()) {
        chain_ok = false;
        chain_fail = "first_failing n=" + std::to_string(n) +
                     " k=" + std::to_string(k);
      }
      ++chain_cases;
    }
  }
  rep.kv("ALPHA_CHAIN.cases", chain_cases);
  rep.check("alpha_chain", chain_ok, chain_fail);

  long map_cases = 0;
  bool map_ok = true;
  long map_fail = -1;
  for (long n = 1; n <= 20; ++n) {
    if (static_cast<long long>(p) * p * n > table.max_index() ||
        p * n > js.order())
      continue;
    if (f_map(sp, table, js, n) != js.coeff(p * n)) {
      map_ok = false;
      map_fail = n;
      break;
    }
    ++map_cases;
  }
  rep.kv("COEFFICIENT_MAP.cases", map_cases);
  rep.check("coefficient_map", map_ok,
            "first_failing_index=" + std::to_string(map_fail));

  // Denominator behaviour along the chains.
  long den_cases = 0, den_constant = 0, den_multiplied = 0, den_mixed = 0;
  bool den_ok = true;
  long den_fail = -1;
  for (long n = 1; n <= std::min<long>(20, table.max_index() / p); ++n) {
    if (n > js.order()) break;
    DenominatorChainReport r = denominator_chain_check(sp, table, js, n, 1);
    if (!r.ok && den_ok) {
      den_ok = false;
      den_fail = n;
    }
    den_constant += r.dencase == DenominatorCase::constant;
    den_multiplied += r.dencase == DenominatorCase::multiplied;
    den_mixed += r.dencase == DenominatorCase::mixed;
    ++den_cases;
  }
  std::ostringstream cases;
  cases << "constant=" << den_constant << " multiplied=" << den_multiplied
        << " mixed=" << den_mixed;
  rep.kv("DENOMINATOR.cases", den_cases);
  rep.kv("DENOMINATOR.classes", cases.str());
  rep.check("denominator_chain", den_ok,
            "first_failing_index=" + std::to_string(den_fail));

  return finish(rep, out);
}

int cmd_curve(int p, std::ostream& out, std::ostream& err) {
  RunReport rep("curve");
  rep.kv("P", p);
  if (p == 2) {
    // Level 2 has no odd-level scan; its two stable points are pinned forms.
    auto forms = fixed_point_forms_p2();
    rep.kv("GENUS", genus_x0(2));
    rep.kv("POINTS", static_cast<long>(forms.size()));
    for (size_t i = 0; i < forms.size(); ++i)
      rep.kv("POINT." + std::to_string(i),
             "form=" + form_text(forms[i]) +
                 " disc=" + std::to_string(forms[i].discriminant()));
    rep.check("branch_count", forms.size() == 2);
    return finish(rep, out);
  }

  CountCheck cc;
  std::vector<FixedPoint> pts;
  try {
    cc = verify_counts(p);
    pts = enumerate_fixed_points(p);
  } catch (const std::exception& e) {
    err << "curve: " << e.what() << '\n';
    return kUsage;
  }

  rep.kv("GENUS", cc.genus);
  rep.kv("POINTS", cc.num_points);
  for (size_t i = 0; i < pts.size(); ++i) {
    const FixedPoint& pt = pts[i];
    std::ostringstream line;
    line << "a=" << pt.a << " b=" << pt.b << " form=" << form_text(pt.form)
         << " reduced=" << form_text(pt.reduced) << " coset=" << pt.coset.value
         << " disc=" << pt.cls.disc << " class="
         << (pt.cls.cls == DiscClass::field ? "field" : "order");
    rep.kv("POINT." + std::to_string(i), line.str());
  }
  rep.kv("FIELD_POINTS", cc.field_points);
  rep.kv("ORDER_POINTS", cc.order_points);
  rep.kv("FIELD_DISC", cc.field_disc);
  rep.kv("H_FIELD", cc.h_field);
  rep.kv("H_MINUS_4P", cc.h_minus4p);
  rep.check("branch_count", cc.num_points == 2 * cc.genus + 2,
            "points=" + std::to_string(cc.num_points));
  rep.check("class_partition", cc.counts_ok);
  return finish(rep, out);
}

int cmd_uhat(int p, double precision, int max_iter,
             const std::string& alpha_path, std::ostream& out,
             std::ostream& err) {
  AlphaTable table;
  std::optional<SupersingularPrime> sp;
  try {
    sp = SupersingularPrime::make(p);
    if (!alpha_path.empty()) {
      table = load_alpha_table(alpha_path);
      if (table.p != p) {
        err << "uhat: --alpha-file is a level-" << table.p
            << " table but --p is " << p << '\n';
        return kUsage;
      }
    } else {
      table = g_series(GenusZeroPrime::make(p), 200L * p);
    }
  } catch (const std::exception& e) {
    err << "uhat: " << e.what() << '\n';
    return kUsage;
  }

  RunReport rep("uhat");
  rep.kv("P", p);
  rep.kv("PRECISION", precision);

  LaurentSeries js = j_series(std::min<long>(50, table.max_index() / p));
  ShiftConstant shift = shift_constant(*sp, table, js);
  rep.kv("P_RHO", shift.value);  // the level sum at the corner: j there is 0

  JInversion inv;
  try {
    inv = find_uhat(*sp, shift, precision, max_iter);
  } catch (const std::runtime_error& e) {
    rep.kv("ERROR", e.what());
    rep.check("inversion_converged", false, e.what());
    return finish(rep, out);
  }
  rep.check("inversion_converged", true);
  rep.kv("UHAT.re", inv.point.u.re);
  rep.kv("UHAT.im", inv.point.u.im);
  rep.kv("UHAT.iterations", static_cast<long>(inv.iterations));
  rep.kv("UHAT.candidates", static_cast<long>(inv.candidates.size()));
  rep.kv("J_RESIDUAL", inv.residual);
  rep.check("j_plus_shift_small", inv.residual < precision);
  rep.check("uhat_in_domain", in_fundamental_domain(inv.point.u));

  try {
    double vres = verify_vanishing_sum(*sp, table, inv.point);
    rep.kv("TRANSLATE_AVERAGE_RESIDUAL", vres);
    rep.check("translate_average_vanishes", vres < 1e-6);
  } catch (const std::exception& e) {
    rep.check("translate_average_vanishes", false, e.what());
  }
  return finish(rep, out);
}

int cmd_digits(int p, long n, int k, int l, std::ostream& out,
               std::ostream& err) {
  if (l <= 0 || l >= p) {
    err << "digits: l must satisfy 0 < l < p (got l=" << l << ", p=" << p
        << ")\n";
    return kUsage;
  }
  if (k < 1) {
    err << "digits: k must be at least 1\n";
    return kUsage;
  }

  RunReport rep("digits");
  rep.kv("P", p);
  rep.kv("N", n);
  rep.kv("K", k);
  rep.kv("L", l);

  DigitVector dv;
  try {
    dv = digits_of(n, p);
  } catch (const std::exception& e) {
    err << "digits: " << e.what() << '\n';
    return kUsage;
  }
  std::ostringstream ds;
  for (size_t i = 0; i < dv.digits.size(); ++i)
    ds << (i ? " " : "") << dv.digits[i];
  rep.kv("DIGITS.low_to_high", ds.str());

  if (n == 0) {
    rep.kv("DISTINGUISHED",
           "index 0 is fixed by the digit shift; it heads no step sequence");
    return finish(rep, out);
  }

  long fk = f_shift(n, p, k);
  long sl = sigma_shift(n, p, l);
  long direct = commutator_h(n, p, k, l);
  rep.kv("F_SHIFT", fk);
  rep.kv("SIGMA_SHIFT", sl);
  rep.kv("COMMUTATOR", direct);

  long a0 = n % p;
  long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  long closed = -l + (((a0 + l) % p) - a0) * pk;
  rep.kv("COMMUTATOR.closed_form", closed);
  rep.check("closed_form_agreement", direct == closed);
  rep.check("image_outside_ideal", direct % p != 0,
            "commutator landed in (p)");

  // The four step-sequence neighbours of n: rotation both ways, shift up,
  // and shift down where the lowest digit allows it.
  rep.kv("STEP.sigma_next", sigma_shift(n, p, 1));
  rep.kv("STEP.sigma_prev", sigma_shift(n, p, p - 1));
  rep.kv("STEP.shift_up", f_shift(n, p, 1));
  if (n % p == 0)
    rep.kv("STEP.shift_down", n / p);
  else
    rep.kv("STEP.shift_down", "none (lowest digit nonzero)");

  return finish(rep, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact q-series workbench: level-p involution-symmetric functions, "
      "their j-function identities, fixed-point censuses, and digit "
      "operators"};
  app.require_subcommand(1);

  std::string object, alpha_path, out_path;
  int p = 0;
  long expand_order = 10;
  long verify_order = 50;
  long n = 0;
  int k = 1, l = 1;
  double precision = 1e-8;
  int max_iter = 60;

  auto* expand =
      app.add_subcommand("expand", "print series coefficients, one per line");
  expand->add_option("object", object, "series to expand")
      ->required()
      ->check(CLI::IsMember({"phi", "phi-fricke", "g", "j", "p-series"}));
  expand->add_option("--p", p, "level (prime)");
  expand->add_option("--order", expand_order, "highest exponent to print")
      ->capture_default_str();
  expand->add_option("--alpha-file", alpha_path,
                     "coefficient table for levels with no construction");
  expand->add_option("--out", out_path, "write rows to a file");

  auto* verify = app.add_subcommand(
      "verify", "run the exact identity suite for one level");
  verify->add_option("--p", p, "level (supersingular prime)")->required();
  verify->add_option("--order", verify_order, "series order for the checks")
      ->capture_default_str();
  verify->add_option("--alpha-file", alpha_path,
                     "externally supplied coefficient table");

  auto* curve = app.add_subcommand(
      "curve", "fixed-point census and class-number checks for one level");
  curve->add_option("--p", p, "level (supersingular prime)")->required();

  auto* uhat = app.add_subcommand(
      "uhat", "locate the unit-arc point where the shifted level sum meets j");
  uhat->add_option("--p", p, "level (prime with a series construction)")
      ->required();
  uhat->add_option("--precision", precision, "inversion residual target")
      ->capture_default_str();
  uhat->add_option("--max-iter", max_iter, "inversion iteration cap")
      ->capture_default_str();
  uhat->add_option("--alpha-file", alpha_path,
                   "coefficient table replacing the built-in construction");

  auto* digits = app.add_subcommand(
      "digits", "digit-shift operators and their commutator at one index");
  digits->add_option("--p", p, "digit base (prime)")->required();
  digits->add_option("--n", n, "index")->required()->check(
      CLI::NonNegativeNumber);
  digits->add_option("--k", k, "shift-up count")->capture_default_str();
  digits->add_option("--l", l, "rotation count")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (app.got_subcommand(expand))
      return cmd_expand(object,
                        expand->count("--p") ? std::optional<int>(p)
                                             : std::nullopt,
                        expand_order, alpha_path, out_path, out, err);
    if (app.got_subcommand(verify))
      return cmd_verify(p, verify_order, alpha_path, out, err);
    if (app.got_subcommand(curve)) return cmd_curve(p, out, err);
    if (app.got_subcommand(uhat))
      return cmd_uhat(p, precision, max_iter, alpha_path, out, err);
    if (app.got_subcommand(digits)) return cmd_digits(p, n, k, l, out, err);
  } catch (const TableFormatError& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace fricke
