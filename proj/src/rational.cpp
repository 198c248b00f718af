#include "qclique/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace qclique {

namespace {

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

// cpp_int reads a leading zero as an octal prefix, so digits go through here.
BigInt decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt(std::string(digits));
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<Rational> parse_plain_decimal(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view exp_text = text.substr(epos + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) return std::nullopt;
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, epos);
  }
  std::string_view int_part = text;
  std::string_view frac_part;
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) return std::nullopt;
  if (!int_part.empty() && !all_digits(int_part)) return std::nullopt;
  if (!frac_part.empty() && !all_digits(frac_part)) return std::nullopt;

  const BigInt mantissa = decimal_integer(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part));
  exponent -= static_cast<long>(frac_part.size());
  Rational value = exponent >= 0
                       ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                       : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain_decimal(text);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  const BigInt d = decimal_integer(den);
  if (d == 0) return std::nullopt;
  Rational value(decimal_integer(num), d);
  return negative ? Rational(-value) : value;
}

DecimalText format_decimal(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  const BigInt abs_num = negative ? BigInt(-num) : num;

  unsigned twos = 0;
  unsigned fives = 0;
  BigInt rest = den;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }

  DecimalText out;
  BigInt digits_value;
  long point = 0;  // number of digits after the decimal point
  if (rest == 1) {
    unsigned scale = std::max(twos, fives);
    digits_value = abs_num * pow10(scale) / den;
    point = scale;
  } else {
    out.exact = false;
    // Find e with 10^e <= |v| < 10^(e+1), then keep 17 significant digits.
    long e = static_cast<long>(abs_num.str().size()) - static_cast<long>(den.str().size());
    auto scaled_floor = [&](long shift) {
      // floor(|v| * 10^shift)
      if (shift >= 0) return BigInt(abs_num * pow10(static_cast<unsigned>(shift)) / den);
      return BigInt(abs_num / (den * pow10(static_cast<unsigned>(-shift))));
    };
    while (scaled_floor(-e) >= 10) ++e;
    while (scaled_floor(-e) < 1) --e;
    long shift = 16 - e;
    BigInt twice = shift >= 0 ? BigInt(2 * abs_num * pow10(static_cast<unsigned>(shift)))
                              : BigInt(2 * abs_num);
    BigInt divisor = shift >= 0 ? den : BigInt(den * pow10(static_cast<unsigned>(-shift)));
    digits_value = (twice / divisor + 1) / 2;  // round half up
    point = shift;
  }

  std::string digits = digits_value.str();
  if (point <= 0) {
    digits.append(static_cast<std::size_t>(-point), '0');
  } else {
    if (digits.size() <= static_cast<std::size_t>(point)) {
      digits.insert(0, static_cast<std::size_t>(point) - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(point), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  if (negative && digits != "0") digits.insert(0, "-");
  out.text = std::move(digits);
  return out;
}

std::string format_fraction(const Rational& value) {
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace qclique
