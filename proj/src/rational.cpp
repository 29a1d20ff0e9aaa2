#include "fricke/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fricke {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer_token(num))
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (slash == std::string::npos) return Rational(Integer(num));

  const std::string den = text.substr(slash + 1);
  if (!valid_integer_token(den) || den[0] == '-' ||
      den.find_first_not_of('0') == std::string::npos)
    throw std::invalid_argument("not a rational: '" + text + "'");
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational pow_rational(long base, long exp) {
  if (base == 0) throw std::domain_error("pow_rational: zero base");
  Integer n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(std::abs(base)),
                static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (base < 0 && (exp & 1)) n = -n;
  Rational q = (exp < 0) ? Rational(1, n) : Rational(n);
  q.canonicalize();
  return q;
}

}  // namespace fricke
