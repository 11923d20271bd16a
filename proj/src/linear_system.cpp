#include "superknap/linear_system.hpp"

#include "superknap/error.hpp"

#include <algorithm>

namespace superknap {

std::string tag_name(const RowTag& tag) {
  const std::string idx = "(" + std::to_string(tag.index + 1) + ")";
  switch (tag.kind) {
    case TagKind::Packing: return "PACKING" + idx;
    case TagKind::BoundUpper: return "BOUND_UPPER" + idx;
    case TagKind::BoundLower: return "BOUND_LOWER" + idx;
    case TagKind::GePacking: return "GE_PACKING" + idx;
    case TagKind::Fixed: return "FIXED" + idx;
    case TagKind::Other: return "OTHER";
  }
  return "OTHER";
}

RowTag parse_tag(const std::string& text) {
  if (text == "OTHER" || text.empty()) return {};
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open + 2) {
    throw Error(ErrorCode::ParseError, "malformed tag '" + text + "'");
  }
  const std::string kind = text.substr(0, open);
  Integer idx = parse_integer(text.substr(open + 1, close - open - 1));
  if (idx < 1) throw Error(ErrorCode::ParseError, "tag index must be at least 1");
  RowTag tag;
  tag.index = idx.get_ui() - 1;
  if (kind == "PACKING") tag.kind = TagKind::Packing;
  else if (kind == "BOUND_UPPER") tag.kind = TagKind::BoundUpper;
  else if (kind == "BOUND_LOWER") tag.kind = TagKind::BoundLower;
  else if (kind == "GE_PACKING") tag.kind = TagKind::GePacking;
  else if (kind == "FIXED") tag.kind = TagKind::Fixed;
  else throw Error(ErrorCode::ParseError, "unknown tag '" + text + "'");
  return tag;
}

Rational LinearInequality::lhs(const RatVector& x) const { return dot(coeffs, x); }

Rational LinearInequality::slack(const RatVector& x) const { return lhs(x) - Rational(rhs); }

bool LinearInequality::satisfied(const RatVector& x) const {
  Rational s = slack(x);
  switch (sense) {
    case Sense::LE: return s <= 0;
    case Sense::GE: return s >= 0;
    case Sense::EQ: return s == 0;
  }
  return false;
}

LinearInequality make_row(const RatVector& coeffs, const Rational& rhs, Sense sense, RowTag tag) {
  Integer lcm_den = rhs.get_den();
  for (const auto& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  LinearInequality row;
  row.sense = sense;
  row.tag = tag;
  row.coeffs.reserve(coeffs.size());
  Integer g = 0;
  for (const auto& c : coeffs) {
    Rational scaled = c * Rational(lcm_den);
    row.coeffs.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.get_num_mpz_t());
  }
  Rational r = rhs * Rational(lcm_den);
  row.rhs = r.get_num();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row.rhs.get_mpz_t());
  if (g > 1) {
    for (auto& c : row.coeffs) c /= g;
    row.rhs /= g;
  }
  return row;
}

bool HPolytope::contains(const RatVector& x) const {
  if (x.size() != dim) throw Error(ErrorCode::LengthMismatch, "point has wrong dimension");
  return std::all_of(ineqs.begin(), ineqs.end(), [&](const auto& r) { return r.satisfied(x); });
}

bool HPolytope::contains(const IntVector& x) const { return contains(to_rational(x)); }

std::vector<LinearInequality> box_rows(const IntVector& u) { return box_rows(IntVector(u.size(), 0), u); }

std::vector<LinearInequality> box_rows(const IntVector& lower, const IntVector& upper) {
  if (lower.size() != upper.size()) throw Error(ErrorCode::LengthMismatch, "bound vectors differ in length");
  const std::size_t n = upper.size();
  std::vector<LinearInequality> rows;
  rows.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    rows.push_back({e, lower[i], Sense::GE, {TagKind::BoundLower, i}});
    rows.push_back({e, upper[i], Sense::LE, {TagKind::BoundUpper, i}});
  }
  return rows;
}

void append_unique(HPolytope& poly, const std::vector<LinearInequality>& rows) {
  for (const auto& r : rows) {
    bool seen = std::any_of(poly.ineqs.begin(), poly.ineqs.end(), [&](const auto& q) {
      return q.coeffs == r.coeffs && q.rhs == r.rhs && q.sense == r.sense;
    });
    if (!seen) poly.ineqs.push_back(r);
  }
}

LinearInequality embed(const LinearInequality& row, std::size_t dim, std::size_t offset) {
  if (offset + row.coeffs.size() > dim) throw Error(ErrorCode::LengthMismatch, "embedding out of range");
  LinearInequality out = row;
  out.coeffs.assign(dim, 0);
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) out.coeffs[offset + i] = row.coeffs[i];
  return out;
}

std::string default_var_name(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string render(const LinearInequality& row, const VarNamer& name) {
  std::string out;
  for (std::size_t i = 0; i < row.coeffs.size(); ++i) {
    const Integer& c = row.coeffs[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (mag != 1) out += mag.get_str();
    out += name(i);
  }
  if (out.empty()) out = "0";
  const char* op = row.sense == Sense::LE ? " <= " : row.sense == Sense::GE ? " >= " : " = ";
  return out + op + row.rhs.get_str();
}

HPolytope disjunctive_hull(const HPolytope& p1, const HPolytope& p2) {
  if (p1.dim != p2.dim) throw Error(ErrorCode::LengthMismatch, "disjuncts differ in dimension");
  const std::size_t d = p1.dim;
  const std::size_t total = 2 * d + 1;
  const std::size_t lam = 2 * d;
  HPolytope out;
  out.dim = total;
  out.relaxation = p1.relaxation || p2.relaxation;
  // A1 z1 - b1 λ (sense) 0
  for (const auto& r : p1.ineqs) {
    LinearInequality row;
    row.coeffs.assign(total, 0);
    for (std::size_t i = 0; i < d; ++i) row.coeffs[d + i] = r.coeffs[i];
    row.coeffs[lam] = -r.rhs;
    row.rhs = 0;
    row.sense = r.sense;
    row.tag = r.tag;
    out.ineqs.push_back(std::move(row));
  }
  // A2 (z - z1) + b2 λ (sense) b2
  for (const auto& r : p2.ineqs) {
    LinearInequality row;
    row.coeffs.assign(total, 0);
    for (std::size_t i = 0; i < d; ++i) {
      row.coeffs[i] = r.coeffs[i];
      row.coeffs[d + i] = -r.coeffs[i];
    }
    row.coeffs[lam] = r.rhs;
    row.rhs = r.rhs;
    row.sense = r.sense;
    row.tag = r.tag;
    out.ineqs.push_back(std::move(row));
  }
  IntVector e(total, 0);
  e[lam] = 1;
  out.ineqs.push_back({e, 0, Sense::GE, {TagKind::Other, lam}});
  out.ineqs.push_back({e, 1, Sense::LE, {TagKind::Other, lam}});
  return out;
}

}  // namespace superknap
