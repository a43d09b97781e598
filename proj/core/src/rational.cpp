#include "operadkit/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace operadkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty()) throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
    }
  }
  std::string text(digits.front() == '+' ? digits.substr(1) : digits);
  return mpz_class(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, s));
  const mpz_class num = parse_integer(trim(s.substr(0, slash)), s);
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("negative denominator in \"" + std::string(s) + "\"");
  }
  const mpz_class den = parse_integer(den_text, s);
  if (den == 0) throw std::invalid_argument("zero denominator in \"" + std::string(s) + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace operadkit
