#include "cyclolat/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace cyclolat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  auto slash = t.find('/');
  std::string_view num = slash == std::string_view::npos ? t : trim(t.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(t.substr(slash + 1));
  if (!valid_integer_token(num) || !valid_integer_token(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_rational_list(const std::vector<Rational>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += to_string(values[i]);
  }
  return s;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational mod_positive(const Rational& q, const Integer& m) {
  Rational scaled = q / Rational(m);
  return q - Rational(floor(scaled) * m);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::vector<Rational> sorted(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  return values;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Integer scaled;
  Integer num = q.get_num() * scale;
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  bool negative = sgn(q) < 0;
  Integer a = abs(scaled);
  std::string s = a.get_str(10);
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  return (negative ? "-" : "") + s;
}

bool fits_int64(const Integer& z) {
  static const Integer lo(std::to_string(std::numeric_limits<long long>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<long long>::max()));
  return z >= lo && z <= hi;
}

}  // namespace cyclolat
