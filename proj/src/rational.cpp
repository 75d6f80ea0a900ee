#include "markov/rational.hpp"

#include <cctype>

#include "markov/errors.hpp"

namespace markov {

namespace {

BigInt parse_int(const std::string& s, const std::string& whole) {
  if (s.empty()) throw UsageError("bad rational literal '" + whole + "'");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw UsageError("bad rational literal '" + whole + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw UsageError("bad rational literal '" + whole + "'");
  BigInt v(s.substr(i));
  return s[0] == '-' ? BigInt(-v) : v;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s = trim(raw);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_int(trim(s.substr(0, slash)), raw);
    BigInt den = parse_int(trim(s.substr(slash + 1)), raw);
    if (den == 0) throw UsageError("zero denominator in '" + raw + "'");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip[0] == '-';
    if (ip.empty() || ip == "-" || ip == "+") ip += "0";
    BigInt whole = parse_int(ip, raw);
    if (fp.empty()) return Rational(whole);
    BigInt frac = parse_int(fp, raw);
    BigInt scale = 1;
    for (std::size_t k = 0; k < fp.size(); ++k) scale *= 10;
    Rational r = Rational(whole < 0 ? BigInt(-whole) : whole) + Rational(frac, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_int(s, raw));
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace markov
