#include "gysinkit/common.hpp"

#include <cctype>

namespace gysinkit {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw MalformedInput("empty rational");

  auto parse_int = [&](const std::string& part) {
    Integer z;
    if (part.empty() || z.set_str(part, 10) != 0)
      throw MalformedInput("not a rational: '" + text + "'");
    return z;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw MalformedInput("zero denominator in '" + text + "'");
    Rational q(parse_int(s.substr(0, slash)), den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty()) frac = "0";
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(parse_int(whole) * den + parse_int(frac), den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_int(s));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace gysinkit
