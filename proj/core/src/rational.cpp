#include "skelbary/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace skelbary {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool negative = false;
  if (!num.empty() && num.front() == '-') {
    negative = true;
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational literal: '" +
                                std::string(text) + "'");
  // strip leading zeros: mpz would read "015" as octal
  while (num.size() > 1 && num.front() == '0') num.remove_prefix(1);
  while (den.size() > 1 && den.front() == '0') den.remove_prefix(1);
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" +
                                std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n) / Rational(d);
}

std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << q;  // GMP prints canonical "a/b" or "a"
  return out.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace skelbary
