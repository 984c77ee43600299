#include "tropgrass/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropgrass {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(trim(s.substr(0, slash)));
    Integer den = parse_integer(trim(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool negative = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    if (fp.empty() || !is_integer_literal(fp) || fp.front() == '-' || fp.front() == '+' ||
        (!ip.empty() && !is_integer_literal(ip)))
      throw std::invalid_argument("bad decimal literal: '" + std::string(s) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    Integer whole = ip.empty() ? Integer(0) : parse_integer(ip);
    Rational q(whole * scale + parse_integer(fp), scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer lcm_of_denominators(const Rational* begin, const Rational* end) {
  Integer l = 1;
  for (auto* it = begin; it != end; ++it) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), it->get_den_mpz_t());
  return l;
}

const Rational& ExtReal::value() const {
  if (infinite_) throw std::domain_error("value() of +infinity");
  return value_;
}

ExtReal parse_ext_real(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "+inf" || s == "Infinity" || s == "oo") return ExtReal::infinity();
  return ExtReal(parse_rational(s));
}

std::string to_string(const ExtReal& x) { return x.is_infinite() ? "inf" : to_string(x.value()); }

}  // namespace tropgrass
