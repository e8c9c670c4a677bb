#include "tropenum/rational.hpp"

#include <cctype>
#include <cmath>

#include "tropenum/errors.hpp"

namespace tropenum {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& r) {
  const BigInt num = mp::numerator(r);
  const BigInt den = mp::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text))
    throw SyntaxError("not a rational number: '" + std::string(text) + "'");
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

double log_big(const BigInt& n) {
  if (n <= 0) return -INFINITY;
  const std::size_t bits = mp::msb(n) + 1;
  if (bits <= 960) return std::log(n.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = n >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace tropenum
