#include "markov/rational.hpp"

#include <cctype>

namespace markov {

std::string rational_to_string(const Rational& q) {
  std::string out = std::to_string(q.numerator());
  if (q.denominator() != 1) out += "/" + std::to_string(q.denominator());
  return out;
}

std::optional<Rational> rational_from_string(const std::string& text) {
  auto parse_int = [](const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    try {
      out = std::stoll(s);
    } catch (...) {
      return false;
    }
    return true;
  };

  std::int64_t num = 0, den = 1;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!parse_int(text, num)) return std::nullopt;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

}  // namespace markov
