#include "superknap/io.hpp"

#include "superknap/error.hpp"

#include <fstream>
#include <sstream>

namespace superknap {

Json to_json(const Integer& z) { return z.get_str(); }
Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const IntVector& v) {
  Json arr = Json::array();
  for (const auto& z : v) arr.push_back(z.get_str());
  return arr;
}

Json to_json(const RatVector& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

Integer integer_from_json(const Json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return parse_integer(j.dump());
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(parse_integer(j.dump()));
  throw Error(ErrorCode::ParseError, "expected a rational as a string, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(integer_from_json(e));
  return v;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

Sense sense_from(const std::string& s) {
  if (s == "le") return Sense::LE;
  if (s == "ge") return Sense::GE;
  if (s == "eq") return Sense::EQ;
  throw Error(ErrorCode::ParseError, "unknown sense '" + s + "'");
}

}  // namespace

Json instance_to_json(const KnapsackInstance& inst) {
  Json j;
  j["n"] = inst.n();
  j["a"] = to_json(inst.a);
  j["u"] = to_json(inst.u);
  j["b"] = to_json(inst.b);
  j["sense"] = sense_name(inst.sense);
  return j;
}

KnapsackInstance instance_from_json(const Json& j) {
  KnapsackInstance inst;
  inst.a = int_vector_from_json(field(j, "a"));
  inst.u = int_vector_from_json(field(j, "u"));
  inst.b = integer_from_json(field(j, "b"));
  inst.sense = j.contains("sense") ? sense_from(j.at("sense").get<std::string>()) : Sense::LE;
  if (inst.sense == Sense::EQ) throw Error(ErrorCode::ParseError, "instance sense must be le or ge");
  if (j.contains("n")) {
    if (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != inst.a.size() ||
        inst.u.size() != inst.a.size()) {
      throw Error(ErrorCode::LengthMismatch, "field n disagrees with the vectors");
    }
  }
  return inst;
}

Json polytope_to_json(const HPolytope& poly) {
  Json j;
  j["dim"] = poly.dim;
  Json rows = Json::array();
  for (const auto& r : poly.ineqs) {
    Json row;
    row["coeffs"] = to_json(r.coeffs);
    row["rhs"] = to_json(r.rhs);
    row["sense"] = sense_name(r.sense);
    row["tag"] = tag_name(r.tag);
    rows.push_back(std::move(row));
  }
  j["ineqs"] = std::move(rows);
  if (poly.relaxation) j["relaxation"] = true;
  return j;
}

HPolytope polytope_from_json(const Json& j) {
  HPolytope poly;
  poly.dim = field(j, "dim").get<std::size_t>();
  for (const auto& row : field(j, "ineqs")) {
    LinearInequality r;
    r.coeffs = int_vector_from_json(field(row, "coeffs"));
    if (r.coeffs.size() != poly.dim) throw Error(ErrorCode::LengthMismatch, "row length differs from dim");
    r.rhs = integer_from_json(field(row, "rhs"));
    r.sense = sense_from(field(row, "sense").get<std::string>());
    r.tag = row.contains("tag") ? parse_tag(row.at("tag").get<std::string>()) : RowTag{};
    poly.ineqs.push_back(std::move(r));
  }
  poly.relaxation = j.contains("relaxation") && j.at("relaxation").get<bool>();
  return poly;
}

Json profile_to_json(const GreedyProfile& gp) {
  Json j;
  j["theta"] = to_json(gp.theta);
  Json support = Json::array();
  for (auto i : gp.support) support.push_back(i + 1);
  j["support"] = std::move(support);
  return j;
}

Json mixed_to_json(const MixedInstance& mi) {
  Json j;
  j["n"] = mi.a.size();
  j["a"] = to_json(mi.a);
  j["u"] = to_json(mi.u);
  j["ub_cont"] = to_json(mi.ub_cont);
  j["b"] = to_json(mi.b);
  return j;
}

MixedInstance mixed_from_json(const Json& j) {
  MixedInstance mi;
  mi.a = int_vector_from_json(field(j, "a"));
  mi.u = int_vector_from_json(field(j, "u"));
  mi.ub_cont = rational_from_json(field(j, "ub_cont"));
  mi.b = rational_from_json(field(j, "b"));
  if (mi.a.size() != mi.u.size()) throw Error(ErrorCode::LengthMismatch, "a and u differ in length");
  return mi;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

std::string render_polytope(const HPolytope& poly, const VarNamer& name) {
  std::string out;
  auto emit = [&](auto pred) {
    for (const auto& r : poly.ineqs) {
      if (pred(r)) out += render(r, name) + "\n";
    }
  };
  emit([](const LinearInequality& r) { return r.tag.kind == TagKind::Packing; });
  emit([](const LinearInequality& r) { return r.tag.kind == TagKind::GePacking; });
  emit([](const LinearInequality& r) {
    return r.tag.kind != TagKind::Packing && r.tag.kind != TagKind::GePacking;
  });
  return out;
}

}  // namespace superknap
