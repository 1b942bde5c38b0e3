#include "tightturan/rational.hpp"

#include "tightturan/error.hpp"

namespace tightturan {

std::string to_fraction_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

Rational parse_rational(const std::string& text) {
  auto is_integer = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
  BigInt d(den);
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
  return Rational(BigInt(num), d);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace tightturan
