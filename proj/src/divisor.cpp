#include "agcb/divisor.hpp"

#include <cctype>
#include <stdexcept>

namespace agcb {

std::string TwoPointDivisor::to_string() const {
  if (a == 0 && b == 0) return "0";
  std::string s;
  if (a != 0) s += std::to_string(a) + "P";
  if (b != 0) {
    if (!s.empty() && b > 0) s += "+";
    s += std::to_string(b) + "Q";
  }
  return s;
}

TwoPointDivisor TwoPointDivisor::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s.empty()) throw std::invalid_argument("empty divisor string");
  if (s == "0") return {};

  TwoPointDivisor d;
  bool seen_p = false, seen_q = false;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      if (sign == 1 && i < s.size() && s[i] == '-') {  // "+-3Q"
        sign = -1;
        ++i;
      }
    } else if (i != 0) {
      throw std::invalid_argument("malformed divisor: " + std::string(text));
    }
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    int value = 1;
    if (i > start) value = std::stoi(s.substr(start, i - start));
    if (i >= s.size() || (s[i] != 'P' && s[i] != 'Q')) throw std::invalid_argument("malformed divisor: " + std::string(text));
    if (s[i] == 'P') {
      if (seen_p || seen_q) throw std::invalid_argument("malformed divisor: " + std::string(text));
      seen_p = true;
      d.a = sign * value;
    } else {
      if (seen_q) throw std::invalid_argument("malformed divisor: " + std::string(text));
      seen_q = true;
      d.b = sign * value;
    }
    ++i;
  }
  return d;
}

std::string PointSet::to_string() const {
  if (p && q) return "{P,Q}";
  if (p) return "{P}";
  if (q) return "{Q}";
  return "{}";
}

}  // namespace agcb
