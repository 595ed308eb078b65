#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <sstream>
#include <string>

namespace bookram {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

inline double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

}  // namespace bookram
