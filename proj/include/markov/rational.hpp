#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace markov {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// accepts "p", "p/q", "-p/q" and finite decimals like "0.25"
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

}  // namespace markov
