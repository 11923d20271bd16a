#include "superknap/types.hpp"

#include "superknap/error.hpp"

#include <cctype>

namespace superknap {

const char* sense_name(Sense s) {
  switch (s) {
    case Sense::LE: return "le";
    case Sense::GE: return "ge";
    case Sense::EQ: return "eq";
  }
  return "?";
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ZeroWeight, "division by zero weight");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {
void require_same(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorCode::LengthMismatch, "vector lengths differ");
}
}  // namespace

Integer dot(const IntVector& x, const IntVector& y) {
  require_same(x.size(), y.size());
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational dot(const RatVector& x, const RatVector& y) {
  require_same(x.size(), y.size());
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Rational dot(const IntVector& x, const RatVector& y) {
  require_same(x.size(), y.size());
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) s += Rational(x[i]) * y[i];
  }
  return s;
}

RatVector to_rational(const IntVector& x) {
  RatVector out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v);
  return out;
}

bool is_integral(const RatVector& x) {
  for (const auto& v : x) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

IntVector to_integer(const RatVector& x) {
  IntVector out;
  out.reserve(x.size());
  for (const auto& v : x) {
    if (v.get_den() != 1) throw Error(ErrorCode::Internal, "non-integral entry " + to_string(v));
    out.push_back(v.get_num());
  }
  return out;
}

Integer parse_integer(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw Error(ErrorCode::ParseError, "empty integer");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
    std::string whole = s.substr(0, dot_pos);
    std::string frac = s.substr(dot_pos + 1);
    if (frac.empty()) throw Error(ErrorCode::ParseError, "malformed decimal '" + s + "'");
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    Integer w = parse_integer(whole);
    Integer f = parse_integer(frac);
    if (frac[0] == '-' || frac[0] == '+') throw Error(ErrorCode::ParseError, "malformed decimal '" + s + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = abs(w) * scale + f;
    if (negative) num = -num;
    Rational q(num, scale);
    q.canonicalize();
    return q;
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {
template <class V>
std::string join_vector(const V& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += x[i].get_str();
  }
  return out + ")";
}
}  // namespace

std::string to_string(const IntVector& x) { return join_vector(x); }
std::string to_string(const RatVector& x) { return join_vector(x); }

}  // namespace superknap
