#include "superknap/apps.hpp"
#include "superknap/core.hpp"
#include "superknap/dpopt.hpp"
#include "superknap/error.hpp"
#include "superknap/facets.hpp"
#include "superknap/greedy.hpp"
#include "superknap/identities.hpp"
#include "superknap/intersect.hpp"
#include "superknap/io.hpp"
#include "superknap/lp.hpp"
#include "superknap/oracle.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#ifndef SUPERKNAP_VERSION
#define SUPERKNAP_VERSION "0.0.0"
#endif

using namespace superknap;

namespace {

// Output of one subcommand: text lines, a JSON body and the manifest fields.
struct RunManifest {
  std::string command;
  std::string input_digest;
  std::string version = SUPERKNAP_VERSION;
  std::optional<std::uint64_t> seed;
  std::string outcome = "ok";

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["input_digest"] = input_digest;
    j["version"] = version;
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["outcome"] = outcome;
    return j;
  }
};

struct Report {
  std::ostringstream text;
  Json body = Json::object();
  RunManifest manifest;
  int status = 0;
};

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 || EVP_DigestFinal_ex(ctx, digest, &len) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error(ErrorCode::Internal, "SHA-256 digest failed");
  }
  EVP_MD_CTX_free(ctx);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

// Digest over the raw bytes of every input, each prefixed by its length.
std::string digest_inputs(const std::vector<std::string>& paths) {
  std::string all;
  for (const auto& p : paths) {
    std::string text = read_text_file(p);
    all += std::to_string(text.size()) + ":" + text;
  }
  return sha256_hex(all);
}

std::string digest_text(const std::string& text) { return sha256_hex(text); }

RatVector parse_objective(const std::string& text) {
  RatVector c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) c.push_back(parse_rational(item));
  return c;
}

IntVector parse_int_list(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_integer(item));
  return v;
}

RatVector random_objective(std::mt19937_64& rng, std::size_t n) {
  RatVector c(n);
  for (auto& ci : c) {
    Integer p = random_integer(rng, -20, 20);
    Integer q = random_integer(rng, 1, 6);
    ci = Rational(p, q);
    ci.canonicalize();
  }
  return c;
}

std::string support_list(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

Json index_list(const std::vector<std::size_t>& s) {
  Json arr = Json::array();
  for (auto i : s) arr.push_back(i + 1);
  return arr;
}

void emit_polytope(Report& r, const HPolytope& poly, const VarNamer& name = default_var_name) {
  std::size_t packing = 0, covering = 0, other = 0;
  for (const auto& row : poly.ineqs) {
    if (row.tag.kind == TagKind::Packing) ++packing;
    else if (row.tag.kind == TagKind::GePacking) ++covering;
    else ++other;
  }
  std::string lines = render_polytope(poly, name);
  std::istringstream in(lines);
  std::string line;
  std::size_t k = 0;
  auto header = [&](std::size_t at) {
    if (at == 0 && packing > 0) r.text << "# packing\n";
    if (at == packing && covering > 0) r.text << "# covering\n";
    if (at == packing + covering && other > 0) r.text << "# bounds and other rows\n";
  };
  while (std::getline(in, line)) {
    header(k);
    r.text << line << "\n";
    ++k;
  }
  if (poly.relaxation) r.text << "relaxation: true\n";
  r.body["polytope"] = polytope_to_json(poly);
}

// ---------------------------------------------------------------- check

void cmd_check(Report& r, const std::string& path) {
  KnapsackInstance inst = instance_from_json(read_json_file(path));
  r.body["instance"] = instance_to_json(inst);
  try {
    ValidatedKnapsack vk = validate(inst);
    r.text << "valid: yes\n"
           << "sense: " << sense_name(inst.sense) << "\n"
           << "superincreasing: yes\n"
           << "nontrivial: " << (vk.nontrivial ? "yes" : "no") << "\n"
           << "tightened: " << (vk.tightened ? "yes" : "no") << "\n"
           << "u: " << to_string(vk.u()) << "\n";
    r.body["valid"] = true;
    r.body["nontrivial"] = vk.nontrivial;
    r.body["tightened"] = vk.tightened;
    r.body["u"] = to_json(vk.u());
    r.manifest.outcome = "valid";
  } catch (const Error& e) {
    if (exit_code(e.code()) != 2) throw;
    std::vector<std::size_t> idx = e.indices();
    r.text << "valid: no\n"
           << "code: " << code_name(e.code()) << "\n"
           << "indices: " << support_list(idx) << "\n"
           << "message: " << e.what() << "\n";
    r.body["valid"] = false;
    r.body["code"] = code_name(e.code());
    r.body["indices"] = index_list(idx);
    r.body["message"] = e.what();
    r.manifest.outcome = std::string("invalid: ") + code_name(e.code());
    r.status = 2;
  }
}

// ---------------------------------------------------------------- greedy

void cmd_greedy(Report& r, const std::string& path) {
  KnapsackInstance inst = instance_from_json(read_json_file(path));
  ValidatedKnapsack vk = validate(inst);
  if (inst.sense == Sense::GE) {
    IntVector gamma = minimal_packing(vk);
    r.text << "gamma: " << to_string(gamma) << "\n"
           << "a^T gamma: " << dot(vk.a(), gamma).get_str() << "\n";
    r.body["gamma"] = to_json(gamma);
    r.body["weight"] = to_json(dot(vk.a(), gamma));
    r.manifest.outcome = "gamma " + to_string(gamma);
    return;
  }
  GreedyProfile gp = greedy_solution(vk);
  PackingReport pr = uniqueness(vk, gp);
  r.text << "theta: " << to_string(gp.theta) << "\n"
         << "support: " << support_list(gp.support) << "\n"
         << "g: " << pr.capacity_used.get_str() << "\n"
         << "unique: " << (pr.unique ? "yes" : "no") << "\n";
  r.body["profile"] = profile_to_json(gp);
  r.body["g"] = to_json(pr.capacity_used);
  r.body["unique"] = pr.unique;
  if (pr.alternate) {
    r.text << "alternate: " << to_string(*pr.alternate) << "\n"
           << "witness: " << (*pr.witness + 1) << "\n";
    r.body["alternate"] = to_json(*pr.alternate);
    r.body["witness"] = *pr.witness + 1;
  }
  r.manifest.outcome = "theta " + to_string(gp.theta);
}

// ---------------------------------------------------------------- facets

void cmd_facets(Report& r, const std::string& path) {
  KnapsackInstance inst = instance_from_json(read_json_file(path));
  ValidatedKnapsack vk = validate(inst);
  HPolytope poly = inst.sense == Sense::LE ? hull_le(vk, greedy_solution(vk)) : hull_ge(vk);
  emit_polytope(r, poly);
  r.manifest.outcome = std::to_string(poly.ineqs.size()) + " rows";
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string path;
  std::string c;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  bool verify = false;
  bool trace = false;
};

void cmd_optimize(Report& r, const OptimizeArgs& args) {
  KnapsackInstance inst = instance_from_json(read_json_file(args.path));
  if (inst.sense != Sense::LE) throw Error(ErrorCode::InvalidArgument, "optimize needs a <= instance");
  ValidatedKnapsack vk = validate(inst);
  GreedyProfile gp = greedy_solution(vk);

  std::vector<RatVector> objectives;
  if (!args.c.empty()) {
    objectives.push_back(parse_objective(args.c));
    if (objectives.back().size() != vk.n()) throw Error(ErrorCode::LengthMismatch, "objective length differs from n");
  }
  if (args.random > 0) {
    r.manifest.seed = args.seed;
    std::mt19937_64 rng(args.seed);
    for (std::size_t k = 0; k < args.random; ++k) objectives.push_back(random_objective(rng, vk.n()));
  }
  if (objectives.empty()) throw Error(ErrorCode::InvalidArgument, "give --c or --random N");

  std::optional<PointCloud> cloud;
  if (args.verify) cloud = enumerate(vk.inst);

  Json runs = Json::array();
  std::size_t mismatches = 0;
  for (const auto& c : objectives) {
    DPResult res = optimize(gp, c);
    Json run;
    run["c"] = to_json(c);
    run["value"] = to_json(res.value);
    run["solution"] = to_json(res.solution);
    run["leaf"] = res.leaf ? Json(*res.leaf + 1) : Json(0);
    r.text << "c: " << to_string(c) << "\n"
           << "  value: " << res.value.get_str() << "\n"
           << "  solution: " << to_string(res.solution) << "\n"
           << "  leaf: " << (res.leaf ? std::to_string(*res.leaf + 1) : std::string("0")) << "\n";
    if (args.trace) {
      Json tr = Json::array();
      for (const auto& t : res.trace) {
        r.text << "  j=" << (t.j + 1) << " f-=" << t.f_minus.get_str() << " f+=" << t.f_plus.get_str()
               << " f*=" << t.f_star.get_str() << "\n";
        tr.push_back({{"j", t.j + 1},
                      {"f_minus", t.f_minus.get_str()},
                      {"f_plus", t.f_plus.get_str()},
                      {"f_star", t.f_star.get_str()}});
      }
      run["trace"] = std::move(tr);
    }
    if (cloud) {
      MaxResult mr = brute_max(*cloud, c);
      bool ok = mr.value == res.value;
      if (!ok) ++mismatches;
      r.text << "  oracle: " << mr.value.get_str() << (ok ? " (match)" : " (MISMATCH)") << "\n";
      run["oracle"] = to_json(mr.value);
      run["match"] = ok;
    }
    runs.push_back(std::move(run));
  }
  r.body["runs"] = std::move(runs);
  if (args.verify) {
    r.text << "verified: " << (objectives.size() - mismatches) << "/" << objectives.size() << "\n";
    r.body["mismatches"] = mismatches;
  }
  r.manifest.outcome = std::to_string(objectives.size()) + " objectives";
  if (mismatches > 0) {
    r.manifest.outcome += ", " + std::to_string(mismatches) + " mismatches";
    r.status = 5;
  }
}

// ---------------------------------------------------------------- intersect

struct IntersectArgs {
  std::vector<std::string> paths;
  std::string two_sided;
  std::string ge_facets;
  bool extend = false;
};

std::pair<KnapsackInstance, KnapsackInstance> load_pair(const IntersectArgs& args) {
  if (!args.two_sided.empty()) {
    Json j = read_json_file(args.two_sided);
    if (!j.contains("le") || !j.contains("ge")) throw Error(ErrorCode::ParseError, "two-sided file needs le and ge");
    return {instance_from_json(j.at("le")), instance_from_json(j.at("ge"))};
  }
  if (args.paths.size() != 2) throw Error(ErrorCode::InvalidArgument, "give LE and GE instance files");
  return {instance_from_json(read_json_file(args.paths[0])), instance_from_json(read_json_file(args.paths[1]))};
}

void emit_vertices(Report& r, const HPolytope& poly) {
  VertexSet vs = vertices(poly);
  std::vector<RatVector> fractional;
  for (const auto& v : vs.vertices) {
    if (!is_integral(v.point)) fractional.push_back(v.point);
  }
  r.text << "vertices: " << vs.vertices.size() << "\n"
         << "fractional vertices: " << fractional.size() << "\n";
  Json arr = Json::array();
  for (const auto& p : fractional) {
    r.text << "  " << to_string(p) << "\n";
    arr.push_back(to_json(p));
  }
  r.body["vertex_count"] = vs.vertices.size();
  r.body["fractional_vertices"] = std::move(arr);
}

void cmd_intersect(Report& r, const IntersectArgs& args) {
  auto [le, ge] = load_pair(args);
  if (!args.ge_facets.empty()) {
    HPolytope ge_hull = polytope_from_json(read_json_file(args.ge_facets));
    HPolytope relax = zero_coefficient_relaxation(le, ge_hull);
    emit_polytope(r, relax);
    r.body["relaxation"] = true;
    emit_vertices(r, relax);
    r.manifest.outcome = "relaxation";
    return;
  }
  TwoSidedInstance ts = build_two_sided(le, ge);
  GapCase gc = case_classify(ts);
  r.text << "theta: " << to_string(ts.theta) << "\n"
         << "gamma: " << to_string(ts.gamma) << "\n"
         << "case: " << gap_case_name(gc) << "\n";
  r.body["theta"] = to_json(ts.theta);
  r.body["gamma"] = to_json(ts.gamma);
  r.body["case"] = gap_case_name(gc);
  r.body["fixed"] = index_list(ts.fixed_suffix);
  if (args.extend) {
    ExtendedFormulation ef = extended_formulation(ts);
    emit_polytope(r, ef.system, [&](std::size_t k) { return ef.var_name(k); });
    r.manifest.outcome = std::string(gap_case_name(gc)) + ", extended";
    return;
  }
  emit_polytope(r, intersection_hull(ts));
  r.manifest.outcome = gap_case_name(gc);
}

// ---------------------------------------------------------------- verify

struct Checks {
  std::size_t passed = 0;
  std::size_t failed = 0;
  void record(Report& r, Json& log, const std::string& name, bool ok, const std::string& detail = "") {
    (ok ? passed : failed) += 1;
    r.text << (ok ? "ok   " : "FAIL ") << name << (detail.empty() ? "" : ": " + detail) << "\n";
    log.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
  }
};

std::string hull_detail(const HullReport& h) {
  std::ostringstream s;
  s << h.cloud_size << " points, rank " << h.cloud_rank << ", " << h.vertex_count << " vertices, "
    << h.rows.size() << " rows";
  if (!h.points_ok()) s << "; violated by " << to_string(h.violating_points.front());
  if (!h.vertices_ok()) s << "; bad vertex " << to_string(h.bad_vertices.front());
  for (const auto& rc : h.rows) {
    if (!rc.facet) s << "; row " << rc.row + 1 << " is not a facet (tight rank " << rc.tight_rank << ")";
  }
  return s.str();
}

void identity_checks(Report& r, Json& log, Checks& checks, const GreedyProfile& gp, const IntVector& gamma,
                     std::mt19937_64& rng) {
  const std::size_t n = gp.n();
  IdentityReport obs = check_phi_observation(gp);
  obs.merge(check_phi_product(gp));
  IdentityReport tele;
  IdentityReport big;
  for (int trial = 0; trial < 5; ++trial) {
    RatVector x(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = Rational(random_integer(rng, 0, 4 * gp.upper[i]), 4);
      z[i] = Rational(random_integer(rng, 0, 4 * gp.upper[i]), 4);
    }
    Rational e(random_integer(rng, 0, 8), 8);
    e.canonicalize();
    for (auto& q : x) q.canonicalize();
    for (auto& q : z) q.canonicalize();
    tele.merge(check_phi_telescoping(gp, x, z, e));
    big.merge(check_big_phi_telescoping(gp.upper, gamma, z, e));
  }
  big.merge(check_h_equals_big_phi(gp.upper, gamma));
  auto rec = [&](const char* name, const IdentityReport& rep) {
    checks.record(r, log, name, rep.ok(),
                  std::to_string(rep.checked) + " instantiations" +
                      (rep.ok() ? "" : ", first failure: " + rep.failures.front()));
  };
  rec("phi recurrence and product", obs);
  rec("phi telescoping", tele);
  rec("Phi telescoping and h_j", big);
}

void verify_instance(Report& r, Json& log, Checks& checks, const KnapsackInstance& inst, std::mt19937_64& rng) {
  ValidatedKnapsack vk = validate(inst);
  PointCloud cloud = enumerate(vk.inst);
  if (inst.sense == Sense::GE) {
    IntVector gamma = minimal_packing(vk);
    HPolytope poly = hull_ge(vk);
    HullReport h = assert_integer_hull(poly, cloud);
    checks.record(r, log, "integer hull", h.passed(), hull_detail(h));
    checks.record(r, log, "closed-form covering rows",
                  hull_lex_ge_direct(vk.u(), gamma).ineqs.size() == poly.ineqs.size());
    IdentityReport big = check_h_equals_big_phi(vk.u(), gamma);
    checks.record(r, log, "h_j identity", big.ok(), std::to_string(big.checked) + " instantiations");
    return;
  }
  GreedyProfile gp = greedy_solution(vk);
  HPolytope poly = hull_le(vk, gp);
  HullReport h = assert_integer_hull(poly, cloud);
  checks.record(r, log, "integer hull", h.passed(), hull_detail(h));
  for (std::size_t j = 0; j < vk.n(); ++j) {
    if (gp.theta[j] == gp.upper[j]) continue;
    std::string name = "facet certificate j=" + std::to_string(j + 1);
    try {
      FacetCertificate fc = facet_certificate(vk, gp, j);
      checks.record(r, log, name, true, std::to_string(fc.points.size()) + " points");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CertificateFailed) throw;
      checks.record(r, log, name, false, e.what());
    }
  }
  identity_checks(r, log, checks, gp, minimal_packing(vk.a(), vk.u(), vk.b()), rng);
}

void verify_two_sided(Report& r, Json& log, Checks& checks, const KnapsackInstance& le, const KnapsackInstance& ge) {
  TwoSidedInstance ts = build_two_sided(le, ge);
  GapCase gc = case_classify(ts);
  r.text << "case: " << gap_case_name(gc) << "\n";
  HPolytope poly = intersection_hull(ts);
  PointCloud cloud = enumerate_two_sided(ts.le.inst, ts.ge.inst);
  HullReport h = assert_integer_hull(poly, cloud);
  checks.record(r, log, "intersection integer hull", h.passed(), hull_detail(h));
  if (gc == GapCase::GapAtLeastTwo) {
    CrossCheckReport cr = gap_two_cross_check(ts);
    checks.record(r, log, "disjunction cross-check", cr.ok(),
                  std::to_string(cr.combined_vertices) + " combined, " + std::to_string(cr.branch_vertices) +
                      " branch vertices");
  } else if (gc == GapCase::GapOne) {
    ExtendedFormulation ef = extended_formulation(ts);
    std::size_t lifted = 0;
    for (const auto& p : cloud.points) {
      if (find_lift(ef, to_rational(p))) ++lifted;
    }
    checks.record(r, log, "extended formulation lifts every point", lifted == cloud.points.size(),
                  std::to_string(lifted) + "/" + std::to_string(cloud.points.size()));
    IdentityReport big = check_h_equals_big_phi(ts.reduced_upper, ts.reduced_gamma);
    checks.record(r, log, "h_j identity", big.ok(), std::to_string(big.checked) + " instantiations");
  }
}

void cmd_verify(Report& r, const std::vector<std::string>& paths, std::uint64_t seed) {
  r.manifest.seed = seed;
  std::mt19937_64 rng(seed);
  Checks checks;
  Json files = Json::array();
  for (const auto& path : paths) {
    Json j = read_json_file(path);
    Json log = Json::array();
    r.text << "== " << path << "\n";
    if (j.contains("le") && j.contains("ge")) {
      verify_two_sided(r, log, checks, instance_from_json(j.at("le")), instance_from_json(j.at("ge")));
    } else {
      verify_instance(r, log, checks, instance_from_json(j), rng);
    }
    files.push_back({{"path", path}, {"checks", std::move(log)}});
  }
  r.text << "passed: " << checks.passed << ", failed: " << checks.failed << "\n";
  r.body["files"] = std::move(files);
  r.body["passed"] = checks.passed;
  r.body["failed"] = checks.failed;
  r.manifest.outcome = std::to_string(checks.passed) + " passed, " + std::to_string(checks.failed) + " failed";
  if (checks.failed > 0) r.status = 5;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string alpha;
  std::string ubound;
  std::string basis;
  std::string last_bound = "1";
  std::string capacity;
  std::size_t random_n = 0;
  std::uint64_t seed = 1;
};

void cmd_gen(Report& r, const GenArgs& args) {
  int modes = int(!args.alpha.empty()) + int(!args.basis.empty()) + int(args.random_n > 0);
  if (modes != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --alpha, --basis, --random-superincreasing");
  KnapsackInstance inst;
  if (!args.alpha.empty()) {
    if (args.ubound.empty()) throw Error(ErrorCode::InvalidArgument, "--alpha needs --ubound");
    inst = alpha_expansion_instance(parse_integer(args.alpha), parse_integer(args.ubound));
  } else if (!args.basis.empty()) {
    if (args.capacity.empty()) throw Error(ErrorCode::InvalidArgument, "--basis needs --capacity");
    BasisInstance bi = integer_basis_instance(parse_int_list(args.basis), parse_integer(args.last_bound));
    inst = KnapsackInstance{bi.a, bi.u, parse_integer(args.capacity), Sense::LE};
  } else {
    r.manifest.seed = args.seed;
    std::mt19937_64 rng(args.seed);
    RandomOptions opts;
    opts.n = args.random_n;
    inst = random_superincreasing(opts, rng);
  }
  r.body["instance"] = instance_to_json(inst);
  r.text << r.body["instance"].dump() << "\n";
  r.manifest.outcome = "n=" + std::to_string(inst.n());
}

// ---------------------------------------------------------------- mixed

void cmd_mixed(Report& r, const std::string& path) {
  MixedInstance mi = mixed_from_json(read_json_file(path));
  MixedHull mh = mixed_hull_extended(mi);
  const std::size_t n = mi.a.size();
  r.text << "theta(floor b): " << to_string(mh.theta_b) << "\n"
         << "theta(floor(b - ub)): " << to_string(mh.theta_low) << "\n"
         << "gamma(ceil(b - ub)): " << (mh.gamma ? to_string(*mh.gamma) : std::string("none")) << "\n";
  r.body["theta_b"] = to_json(mh.theta_b);
  r.body["theta_low"] = to_json(mh.theta_low);
  r.body["gamma"] = mh.gamma ? to_json(*mh.gamma) : Json(nullptr);
  auto name = [n](std::size_t k) {
    const std::size_t block = n + 1;
    if (k == 2 * block) return std::string("lambda");
    std::string base = (k % block == n) ? "y" : "x" + std::to_string(k % block + 1);
    return k >= block ? base + "'" : base;
  };
  emit_polytope(r, mh.system, name);
  r.manifest.outcome = mh.q1 ? "two branches" : "single branch";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superincreasing knapsack hulls: validation, facets, optimization and certificates"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.set_version_flag("--version", SUPERKNAP_VERSION);

  std::string path;
  auto* check = app.add_subcommand("check", "Validate an instance");
  check->add_option("path", path, "Instance JSON")->required();
  auto* greedy = app.add_subcommand("greedy", "Greedy solution, capacity and uniqueness");
  greedy->add_option("path", path, "Instance JSON")->required();
  auto* facets = app.add_subcommand("facets", "Integer hull as an inequality system");
  facets->add_option("path", path, "Instance JSON")->required();

  OptimizeArgs opt;
  auto* optimize_cmd = app.add_subcommand("optimize", "Maximize a linear objective by dynamic programming");
  optimize_cmd->add_option("path", opt.path, "Instance JSON")->required();
  optimize_cmd->add_option("--c", opt.c, "Objective, comma separated rationals");
  optimize_cmd->add_option("--random", opt.random, "Number of random objectives");
  optimize_cmd->add_option("--seed", opt.seed, "Seed for random objectives");
  optimize_cmd->add_flag("--verify", opt.verify, "Compare against brute force");
  optimize_cmd->add_flag("--trace", opt.trace, "Print the DP table");

  IntersectArgs inter;
  auto* intersect = app.add_subcommand("intersect", "Hull of a two-sided superincreasing set");
  intersect->add_option("paths", inter.paths, "LE and GE instance files");
  intersect->add_option("--two-sided", inter.two_sided, "File holding both instances");
  intersect->add_option("--ge-facets", inter.ge_facets, "Inequality system for the GE side");
  intersect->add_flag("--extend", inter.extend, "Emit the (x,y) extended formulation");

  std::vector<std::string> verify_paths;
  std::uint64_t verify_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the certificate suite");
  verify->add_option("paths", verify_paths, "Instance or two-sided files")->required();
  verify->add_option("--seed", verify_seed, "Seed for identity instantiations");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--alpha", gen.alpha, "Base of the digit expansion");
  gen_cmd->add_option("--ubound", gen.ubound, "Capacity for --alpha");
  gen_cmd->add_option("--basis", gen.basis, "Divisor chain 1,a2,...,an");
  gen_cmd->add_option("--last-bound", gen.last_bound, "Upper bound of the last coordinate for --basis");
  gen_cmd->add_option("--capacity", gen.capacity, "Capacity for --basis");
  gen_cmd->add_option("--random-superincreasing", gen.random_n, "Random instance with n variables");
  gen_cmd->add_option("--seed", gen.seed, "Seed for --random-superincreasing");

  auto* mixed = app.add_subcommand("mixed", "Extended formulation of a mixed-integer knapsack");
  mixed->add_option("path", path, "Mixed instance JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : exit_code(ErrorCode::InvalidArgument);
  }

  Report r;
  const bool json = format == "json";
  try {
    if (check->parsed()) {
      r.manifest.command = "check";
      r.manifest.input_digest = digest_inputs({path});
      cmd_check(r, path);
    } else if (greedy->parsed()) {
      r.manifest.command = "greedy";
      r.manifest.input_digest = digest_inputs({path});
      cmd_greedy(r, path);
    } else if (facets->parsed()) {
      r.manifest.command = "facets";
      r.manifest.input_digest = digest_inputs({path});
      cmd_facets(r, path);
    } else if (optimize_cmd->parsed()) {
      r.manifest.command = "optimize";
      r.manifest.input_digest = digest_inputs({opt.path});
      cmd_optimize(r, opt);
    } else if (intersect->parsed()) {
      r.manifest.command = "intersect";
      std::vector<std::string> inputs = inter.paths;
      if (!inter.two_sided.empty()) inputs.push_back(inter.two_sided);
      if (!inter.ge_facets.empty()) inputs.push_back(inter.ge_facets);
      r.manifest.input_digest = digest_inputs(inputs);
      cmd_intersect(r, inter);
    } else if (verify->parsed()) {
      r.manifest.command = "verify";
      r.manifest.input_digest = digest_inputs(verify_paths);
      cmd_verify(r, verify_paths, verify_seed);
    } else if (gen_cmd->parsed()) {
      r.manifest.command = "gen";
      r.manifest.input_digest = digest_text(gen.alpha + "|" + gen.ubound + "|" + gen.basis + "|" + gen.last_bound +
                                            "|" + gen.capacity + "|" + std::to_string(gen.random_n));
      cmd_gen(r, gen);
      // gen always writes instance JSON so its output can be fed back in.
      std::cout << r.body["instance"].dump(2) << "\n";
      return 0;
    } else if (mixed->parsed()) {
      r.manifest.command = "mixed";
      r.manifest.input_digest = digest_inputs({path});
      cmd_mixed(r, path);
    }
  } catch (const Error& e) {
    r.manifest.outcome = std::string("error: ") + code_name(e.code());
    if (json) {
      Json out;
      out["error"] = {{"code", code_name(e.code())}, {"message", e.what()}, {"indices", index_list(e.indices())}};
      out["manifest"] = r.manifest.to_json();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return exit_code(e.code());
  }

  if (json) {
    Json out = r.body;
    out["manifest"] = r.manifest.to_json();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.text.str();
  }
  return r.status;
}
