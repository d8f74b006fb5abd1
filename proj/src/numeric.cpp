#include "rootcast/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "rootcast/errors.hpp"

namespace rootcast {

Rat parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(errc::bad_input, "empty number");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rat num = parse_rational(s.substr(0, slash));
    Rat den = parse_rational(s.substr(slash + 1));
    if (den == 0) fail(errc::bad_input, "division by zero in '" + text + "'");
    return num / den;
  }

  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');

  BigInt mantissa = 0;
  long frac_digits = 0;
  long exponent = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (seen_dot) ++frac_digits;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = std::strtol(s.c_str() + i + 1, nullptr, 10);
      break;
    } else {
      fail(errc::bad_input, "malformed number '" + text + "'");
    }
  }
  if (!seen_digit) fail(errc::bad_input, "malformed number '" + text + "'");

  Rat r(mantissa, 1);
  long shift = exponent - frac_digits;
  BigInt pow10 = 1;
  for (long k = 0; k < std::labs(shift); ++k) pow10 *= 10;
  if (shift >= 0)
    r *= Rat(pow10, 1);
  else
    r /= Rat(pow10, 1);
  return neg ? -r : r;
}

std::string rat_to_string(const Rat& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();

  std::string sign = num < 0 ? "-" : "";
  BigInt a = boost::multiprecision::abs(num);
  BigInt whole = a / den, rem = a % den;
  std::string frac;
  while (rem != 0 && static_cast<int>(frac.size()) < digits) {
    rem *= 10;
    frac += static_cast<char>('0' + static_cast<long>(rem / den));
    rem %= den;
  }
  if (rem != 0) {
    // Round the last digit to nearest.
    if (rem * 2 >= den) {
      int k = static_cast<int>(frac.size()) - 1;
      while (k >= 0 && frac[k] == '9') frac[k--] = '0';
      if (k >= 0)
        ++frac[k];
      else
        ++whole;
    }
  }
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = sign + whole.str();
  if (!frac.empty()) out += "." + frac;
  return out;
}

double log2_bigint(const BigInt& v) {
  if (v <= 0) fail(errc::bad_input, "log2 of non-positive value");
  // Pull the top bits into a double and add the discarded bit count.
  unsigned bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 62) return std::log2(v.convert_to<double>());
  BigInt top = v >> (bits - 62);
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rootcast
