#include "proxygames/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace proxygames {

namespace {

using boost::multiprecision::mpz_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// GMP reads a leading 0 as an octal prefix.
mpz_int decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return mpz_int{std::string(digits)};
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
}

mpz_int parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) malformed(whole);
  mpz_int value = decimal(text);
  return negative ? mpz_int(-value) : value;
}

mpz_int pow10(long exponent) {
  mpz_int result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) malformed(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_int num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) malformed(text);
    mpz_int den = decimal(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    return Rational(num, den);
  }

  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc{} || ptr != exp_text.data() + exp_text.size()) malformed(text);
    if (exponent > 4096 || exponent < -4096) malformed(text);
    s = s.substr(0, e);
  }

  std::string digits;
  long fraction_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) malformed(text);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      malformed(text);
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) malformed(text);
    digits = std::string(s);
  }

  mpz_int num = decimal(digits);
  if (negative) num = -num;
  long scale = fraction_digits - exponent;
  if (scale >= 0) return Rational(num, pow10(scale));
  return Rational(num * pow10(-scale));
}

std::string to_string(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace proxygames
