#include "cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hellinger/barycentre.hpp"
#include "hellinger/distances.hpp"
#include "hellinger/errors.hpp"
#include "hellinger/means.hpp"
#include "hellinger/verify.hpp"

namespace hellinger::cli {

using nlohmann::json;

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t hash) {
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

namespace {

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

RealMatrix parse_square(const json& j, Index n, std::string_view source, const char* field) {
  const std::string where = std::string(source) + ": '" + field + "'";
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw InputError(where + " must be an array of " + std::to_string(n) + " rows");
  }
  RealMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw InputError(where + " row " + std::to_string(i) + " must have " + std::to_string(n) +
                       " entries");
    }
    for (Index k = 0; k < n; ++k) {
      const json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw InputError(where + " entry (" + std::to_string(i) + ", " + std::to_string(k) +
                         ") is not a number");
      }
      m(i, k) = v.get<double>();
      if (!std::isfinite(m(i, k))) throw InputError(where + " has a non-finite entry");
    }
  }
  return m;
}

}  // namespace

HermitianMatrix parse_matrix(const json& j, std::string_view source) {
  const std::string src(source);
  if (!j.is_object()) throw InputError(src + ": expected a JSON object with 'dim' and 'real'");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0) {
    throw InputError(src + ": 'dim' must be a positive integer");
  }
  const auto n = static_cast<Index>(j["dim"].get<long long>());
  if (!j.contains("real")) throw InputError(src + ": missing 'real'");
  Matrix m = parse_square(j["real"], n, source, "real").cast<Complex>();
  if (j.contains("imag")) m += Complex(0.0, 1.0) * parse_square(j["imag"], n, source, "imag").cast<Complex>();
  try {
    return HermitianMatrix(m);
  } catch (const NotHermitianError& e) {
    throw InputError(src + ": " + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  const Index n = m.rows();
  json real = json::array(), imag = json::array();
  bool has_imag = false;
  for (Index i = 0; i < n; ++i) {
    json rr = json::array(), ri = json::array();
    for (Index k = 0; k < n; ++k) {
      rr.push_back(m(i, k).real());
      ri.push_back(m(i, k).imag());
      has_imag = has_imag || m(i, k).imag() != 0.0;
    }
    real.push_back(std::move(rr));
    imag.push_back(std::move(ri));
  }
  json j = {{"dim", n}, {"real", std::move(real)}};
  if (has_imag) j["imag"] = std::move(imag);
  return j;
}

namespace {

// File access for one invocation; every byte read feeds the inputs digest.
class Session {
 public:
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    digest_ = fnv1a64(text, digest_);
    return text;
  }

  json read_json(const std::string& path) {
    const std::string text = read(path);
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw InputError(path + ": invalid JSON (" + e.what() + ")");
    }
  }

  SpdMatrix read_spd(const std::string& path) {
    const HermitianMatrix h = parse_matrix(read_json(path), path);
    try {
      return SpdMatrix(h);
    } catch (const NotPositiveDefiniteError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  std::vector<double> read_numbers(const std::string& path) {
    const json j = read_json(path);
    if (!j.is_array()) throw InputError(path + ": expected a JSON array of numbers");
    std::vector<double> v;
    for (const json& x : j) {
      if (!x.is_number()) throw InputError(path + ": expected a JSON array of numbers");
      v.push_back(x.get<double>());
    }
    return v;
  }

  std::vector<SpdMatrix> read_family(const std::vector<std::string>& paths) {
    std::vector<SpdMatrix> as;
    for (const auto& p : paths) {
      as.push_back(read_spd(p));
      if (as.back().dim() != as.front().dim()) {
        throw InputError(p + ": dimension " + std::to_string(as.back().dim()) + " differs from " +
                         paths.front() + " (" + std::to_string(as.front().dim()) + ")");
      }
    }
    return as;
  }

  WeightVector read_weights(const std::string& path, std::size_t m) {
    if (path.empty()) return WeightVector::uniform(m);
    std::vector<double> w = read_numbers(path);
    if (w.size() != m) {
      throw InputError(path + ": " + std::to_string(w.size()) + " weights for " +
                       std::to_string(m) + " matrices");
    }
    try {
      return WeightVector(std::move(w));
    } catch (const std::exception& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  std::string digest() const { return "fnv1a64:" + hex64(digest_); }

 private:
  std::uint64_t digest_ = 0xcbf29ce484222325ULL;
};

json solver_json(const SolverReport& r) {
  return {{"iterations", r.iterations},
          {"final_residual", round12(r.final_residual)},
          {"converged", r.converged},
          {"alpha", round12(r.alpha)},
          {"beta", round12(r.beta)},
          {"min_iterate_eigenvalue", round12(r.min_iterate_eigenvalue)},
          {"max_iterate_eigenvalue", round12(r.max_iterate_eigenvalue)},
          {"bracket_violations", r.bracket_violations},
          {"final_damping", round12(r.final_damping)}};
}

std::string g12(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

struct DistArgs {
  std::string kind;
  std::string file_a, file_b;
  bool via_unitary = false;
};

struct MeanArgs {
  std::string kind;
  std::vector<std::string> files;
  std::string weights;
  double t = 0.5;
};

struct BaryArgs {
  std::string kind;
  std::vector<std::string> files;
  std::string weights;
  double tol = 1e-12;
  int max_iter = 500;
  double damping = 1.0;
  std::uint64_t seed = 42;
  double t = 0.5;
  int restarts = 0;
};

struct VerifyArgs {
  std::string suite;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
};

int cmd_dist(const DistArgs& a, Session& s, json& out, std::ostream& err) {
  if (a.kind == "hellinger") {
    if (a.via_unitary) throw InputError("--via-unitary applies to d2 only");
    const std::vector<double> p = s.read_numbers(a.file_a);
    const std::vector<double> q = s.read_numbers(a.file_b);
    auto prob = [](std::vector<double> v, const std::string& path) {
      try {
        return ProbabilityVector(std::move(v));
      } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
      }
    };
    const double d = hellinger(prob(p, a.file_a), prob(q, a.file_b));
    out["distance"] = round12(d);
    out["divergence"] = round12(d * d);
    err << "hellinger distance " << g12(d) << "\n";
    return kOk;
  }
  const DistanceKind kind = parse_distance_kind(a.kind);
  if (a.via_unitary && kind != DistanceKind::D2) throw InputError("--via-unitary applies to d2 only");
  const SpdMatrix ma = s.read_spd(a.file_a);
  const SpdMatrix mb = s.read_spd(a.file_b);
  if (ma.dim() != mb.dim()) {
    throw InputError(a.file_b + ": dimension " + std::to_string(mb.dim()) + " differs from " +
                     a.file_a + " (" + std::to_string(ma.dim()) + ")");
  }
  double d = 0.0;
  if (a.via_unitary) {
    const UnitaryMinimum um = d2_unitary(ma, mb);
    d = um.value;
    out["unitary"] = matrix_to_json(um.unitary);
  } else {
    d = distance(kind, ma, mb);
  }
  out["distance"] = round12(d);
  out["divergence"] = round12(a.via_unitary ? d * d : divergence(kind, ma, mb));
  err << a.kind << (a.via_unitary ? " (unitary minimum)" : "") << " distance " << g12(d) << "\n";
  return kOk;
}

int cmd_mean(const MeanArgs& a, Session& s, json& out, std::ostream& err) {
  const std::vector<SpdMatrix> as = s.read_family(a.files);
  auto need_pair = [&] {
    if (as.size() != 2) throw InputError("mean " + a.kind + " takes exactly two matrices");
    if (!a.weights.empty()) throw InputError("mean " + a.kind + " does not take --weights");
  };
  std::optional<SpdMatrix> m;
  if (a.kind == "arith") {
    m = arithmetic_mean(as, s.read_weights(a.weights, as.size()));
  } else if (a.kind == "geo") {
    need_pair();
    m = geometric_mean(as[0], as[1]);
  } else if (a.kind == "geo-t") {
    need_pair();
    m = geometric_mean_t(as[0], as[1], a.t);
  } else if (a.kind == "logeuclid") {
    m = log_euclidean(std::span<const SpdMatrix>(as), s.read_weights(a.weights, as.size()));
  } else {
    m = q_half(as, s.read_weights(a.weights, as.size()));
  }
  out["mean"] = matrix_to_json(m->matrix());
  err << "mean " << a.kind << " of " << as.size() << " matrices, trace " << g12(m->trace())
      << "\n";
  return kOk;
}

int cmd_bary(const BaryArgs& a, Session& s, json& out, std::ostream& err) {
  const std::vector<SpdMatrix> as = s.read_family(a.files);
  const WeightVector w = s.read_weights(a.weights, as.size());
  const MeanKind kind = a.kind == "wasserstein" ? MeanKind::wasserstein()
                        : a.kind == "power-t"   ? MeanKind::power_t(a.t)
                                                : MeanKind::log_euclid_type();
  SolverConfig cfg;
  cfg.tol = a.tol;
  cfg.max_iter = a.max_iter;
  cfg.damping = a.damping;
  cfg.validate();

  const SolveResult r = solve(kind, as, w, cfg);
  out["barycentre"] = matrix_to_json(r.x.matrix());
  out["kind"] = kind.name();
  if (kind.tag() != MeanKind::Tag::PowerT || kind.t() == 0.5) {
    out["objective"] = round12(objective(kind, r.x, as, w));
  }
  json solver = solver_json(r.report);
  if (a.restarts > 0) {
    Rng rng(a.seed);
    const UniquenessReport u = check_uniqueness(kind, as, w, cfg, rng, a.restarts);
    solver["restarts"] = {{"runs", a.restarts},
                          {"all_converged", u.all_converged},
                          {"max_pairwise_distance", round12(u.max_pairwise_distance)},
                          {"agree", u.agree}};
  }
  out["solver"] = std::move(solver);
  err << "bary " << kind.name() << ": " << (r.report.converged ? "converged" : "NOT converged")
      << " after " << r.report.iterations << " iterations, relative residual "
      << g12(r.report.final_residual) << "\n";
  return r.report.converged ? kOk : kNotConverged;
}

int cmd_verify(const VerifyArgs& a, json& out, std::ostream& err) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.samples = a.samples;
  std::vector<SuiteReport> reports;
  if (a.suite == "all") {
    reports = run_all(opt);
  } else {
    reports.push_back(run_suite(a.suite, opt));
  }
  bool all_pass = true;
  json suites = json::array();
  for (const SuiteReport& r : reports) {
    json checks = json::array();
    for (const Check& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"value", round12(c.value)},
                        {"relation", std::string(to_string(c.relation))},
                        {"threshold", c.threshold},
                        {"passed", c.passed},
                        {"detail", c.detail}});
      err << (c.passed ? "PASS " : "FAIL ") << r.suite << " " << c.name << ": " << g12(c.value)
          << " " << to_string(c.relation) << " " << g12(c.threshold);
      if (!c.detail.empty()) err << "  (" << c.detail << ")";
      err << "\n";
    }
    suites.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}});
    all_pass = all_pass && r.passed();
  }
  out["seed"] = a.seed;
  out["samples"] = a.samples;
  out["passed"] = all_pass;
  out["suites"] = std::move(suites);
  err << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
  return all_pass ? kOk : kVerificationFailed;
}

const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kVerificationFailed: return "verification_failed";
    case kNotConverged: return "not_converged";
    default: return "input_error";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matrix Hellinger-type distances, means, barycentres and verification suites",
               "hellinger"};
  app.require_subcommand(1);

  DistArgs dist;
  CLI::App* sub_dist = app.add_subcommand("dist", "distance between two matrices (or probability vectors)");
  sub_dist->add_option("kind", dist.kind, "d1 | d2 | d3 | d4 | hellinger")
      ->required()
      ->check(CLI::IsMember({"d1", "d2", "d3", "d4", "hellinger"}));
  sub_dist->add_option("A", dist.file_a, "first matrix file (hellinger: probability vector)")->required();
  sub_dist->add_option("B", dist.file_b, "second matrix file")->required();
  sub_dist->add_flag("--via-unitary", dist.via_unitary, "d2 as the minimum over unitaries");

  MeanArgs mean;
  CLI::App* sub_mean = app.add_subcommand("mean", "matrix mean");
  sub_mean->add_option("kind", mean.kind, "arith | geo | geo-t | logeuclid | qhalf")
      ->required()
      ->check(CLI::IsMember({"arith", "geo", "geo-t", "logeuclid", "qhalf"}));
  sub_mean->add_option("files", mean.files, "matrix files")->required();
  sub_mean->add_option("--weights", mean.weights, "JSON array of positive weights");
  sub_mean->add_option("--t", mean.t, "parameter of geo-t")->capture_default_str();

  BaryArgs bary;
  CLI::App* sub_bary = app.add_subcommand("bary", "barycentre by fixed-point iteration");
  sub_bary->add_option("kind", bary.kind, "wasserstein | power-t | logeuclid-type")
      ->required()
      ->check(CLI::IsMember({"wasserstein", "power-t", "logeuclid-type"}));
  sub_bary->add_option("files", bary.files, "matrix files")->required();
  sub_bary->add_option("--weights", bary.weights, "JSON array of positive weights");
  sub_bary->add_option("--tol", bary.tol, "relative residual tolerance")->capture_default_str();
  sub_bary->add_option("--max-iter", bary.max_iter, "iteration limit")->capture_default_str();
  sub_bary->add_option("--damping", bary.damping, "initial damping in (0, 1]")->capture_default_str();
  sub_bary->add_option("--seed", bary.seed, "seed for --restarts")->capture_default_str();
  sub_bary->add_option("--t", bary.t, "parameter of power-t")->capture_default_str();
  sub_bary->add_option("--restarts", bary.restarts, "extra solves from random starts")
      ->capture_default_str();

  VerifyArgs verify;
  std::string verify_flag_suite;
  CLI::App* sub_verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  sub_verify->add_option("name", verify.suite, "suite name or all")->check(CLI::IsMember(suite_choices));
  sub_verify->add_option("--suite", verify_flag_suite, "same as the positional suite")
      ->check(CLI::IsMember(suite_choices));
  sub_verify->add_option("--seed", verify.seed, "PRNG seed")->capture_default_str();
  sub_verify->add_option("--samples", verify.samples, "base sample count")->capture_default_str();

  json report;
  {
    json echo = json::array();
    for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
    report["command"] = std::move(echo);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Session session;
  json outputs = json::object();
  int code = kOk;
  try {
    if (sub_dist->parsed()) {
      code = cmd_dist(dist, session, outputs, err);
    } else if (sub_mean->parsed()) {
      code = cmd_mean(mean, session, outputs, err);
    } else if (sub_bary->parsed()) {
      code = cmd_bary(bary, session, outputs, err);
    } else {
      if (!verify_flag_suite.empty()) {
        if (!verify.suite.empty() && verify.suite != verify_flag_suite) {
          throw InputError("conflicting suites '" + verify.suite + "' and '" + verify_flag_suite + "'");
        }
        verify.suite = verify_flag_suite;
      }
      if (verify.suite.empty()) throw InputError("verify: a suite name (or all) is required");
      if (verify.samples == 0) throw InputError("--samples must be positive");
      code = cmd_verify(verify, outputs, err);
    }
  } catch (const InputError& e) {
    code = kInputError;
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
  } catch (const ConvergenceError& e) {
    code = kNotConverged;
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
  } catch (const ConsistencyError& e) {
    code = kNotConverged;
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    // Library precondition failures (dimension, domain, positivity).
    code = kInputError;
    report["error"] = e.what();
    err << "error: " << e.what() << "\n";
  }

  report["inputs_digest"] = session.digest();
  report["status"] = status_name(code);
  if (!outputs.empty()) report["outputs"] = std::move(outputs);
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace hellinger::cli
