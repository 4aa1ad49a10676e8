// Copyright 2025 The qhowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhowe/braided_ext.hpp"
#include "qhowe/braiding.hpp"
#include "qhowe/duality.hpp"
#include "qhowe/embeddings.hpp"
#include "qhowe/qclifford.hpp"
#include "qhowe/qgroup.hpp"

namespace qhowe::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  int m = 2;
  std::vector<std::string> spec_q;
  std::vector<Rational> spec_values;
  int cap = kDefaultMatrixCap;
  bool json = false;
  bool verbose = false;
  std::string out;
  std::uint64_t seed = 1;
  std::string partition;
  std::string map;
  std::string generator;
};

/// One command's output: reports plus optional text-mode preamble.
struct Outcome {
  std::vector<Report> reports;
  std::string text;
};

void append(Outcome& to, Outcome from) {
  for (auto& r : from.reports) to.reports.push_back(std::move(r));
  to.text += from.text;
}

std::vector<int> distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_cap(const RunConfig& cfg, int sites, const std::string& what) {
  if (sites > cfg.cap) {
    throw UsageError(what + " needs " + std::to_string(sites) + " sites, above --cap " +
                     std::to_string(cfg.cap));
  }
}

Outcome verify_clifford(const RunConfig& cfg) {
  const int sites = cfg.n * cfg.m;
  require_cap(cfg, sites, "verify clifford");
  return {{check_clifford_relations(sites, cfg.cap)}, {}};
}

Outcome verify_qgroup(const RunConfig& cfg) {
  Outcome o;
  for (int p : distinct({cfg.n, cfg.m})) {
    require_cap(cfg, p, "verify qgroup");
    const std::string tag = "[p=" + std::to_string(p) + "]";
    const Representation nat = natural_rep(p);
    o.reports.push_back(check_relations(nat, "natural_relations" + tag));
    o.reports.push_back(check_serre(nat, "natural_serre" + tag));
    const Representation phi = phi_q_rep(p, cfg.cap);
    o.reports.push_back(check_relations(phi, "phi_relations" + tag));
    o.reports.push_back(check_serre(phi, "phi_serre" + tag));
    for (auto conv : {Coproduct::Standard, Coproduct::Alternate}) {
      const std::string c = conv == Coproduct::Standard ? "standard" : "alternate";
      o.reports.push_back(
          check_relations(coproduct_rep({nat, nat}, conv), "coproduct_" + c + "_relations" + tag));
      Report assoc = check_coassociativity(nat, nat, nat, conv);
      Report named("coassociativity_" + c + tag);
      named.absorb(assoc);
      o.reports.push_back(std::move(named));
    }
  }
  return o;
}

Outcome verify_embeddings(const RunConfig& cfg) {
  const GridShape shape(cfg.n, cfg.m);
  require_cap(cfg, shape.sites(), "verify embeddings");
  Outcome o;
  const Representation lam = lambda_q_rep(shape, cfg.cap);
  const Representation rho = rho_q_rep(shape, cfg.cap);
  o.reports.push_back(check_relations(lam, "lambda_q_relations"));
  o.reports.push_back(check_serre(lam, "lambda_q_serre"));
  o.reports.push_back(check_relations(rho, "rho_q_relations"));
  o.reports.push_back(check_serre(rho, "rho_q_serre"));
  o.reports.push_back(check_classical_relations(classical_lambda_rep(shape, cfg.cap),
                                                "lambda_classical_relations"));
  o.reports.push_back(
      check_classical_relations(classical_rho_rep(shape, cfg.cap), "rho_classical_relations"));
  o.reports.push_back(check_theta_composition(shape, cfg.cap));
  o.reports.push_back(check_dequantization(shape, cfg.cap));
  o.reports.push_back(check_nested_root_vectors(shape, cfg.cap));
  o.reports.push_back(check_tensor_power(shape, cfg.cap));
  return o;
}

Outcome verify_commutant(const RunConfig& cfg) {
  const GridShape shape(cfg.n, cfg.m);
  require_cap(cfg, shape.sites(), "verify commutant");
  return {{check_commutant(shape, Flavor::Quantum, cfg.cap),
           check_commutant(shape, Flavor::Classical, cfg.cap)},
          {}};
}

Outcome verify_braiding(const RunConfig& cfg) {
  std::vector<int> ranks;
  for (int p : distinct({cfg.n, cfg.m})) {
    if (p >= 2 && p <= 4) ranks.push_back(p);
  }
  if (ranks.empty()) ranks.push_back(2);
  Outcome o;
  for (int p : ranks) o.reports.push_back(braiding_suite(p));
  return o;
}

/// mul is associative on random basis triples; degrees add or the product vanishes.
Report random_associativity(int n, std::uint64_t seed, int samples) {
  Report report("mul_associativity[n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + "]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
  for (int t = 0; t < samples; ++t) {
    const BasisState a(n, pick(rng));
    const BasisState b(n, pick(rng));
    const BasisState c(n, pick(rng));
    const QVector va = QVector::basis(a);
    const QVector vb = QVector::basis(b);
    const QVector vc = QVector::basis(c);
    const QVector left = mul(mul(va, vb), vc);
    const QVector right = mul(va, mul(vb, vc));
    const std::string where = a.to_string() + "*" + b.to_string() + "*" + c.to_string();
    report.add("associative", {t}, left == right,
               left == right ? std::nullopt : std::optional(where));
    const QVector ab = mul(va, vb);
    bool degree_ok = true;
    for (const auto& [bits, coeff] : ab.entries()) {
      degree_ok = degree_ok && BasisState(n, bits).degree() == a.degree() + b.degree();
    }
    report.add("degree_adds", {t}, degree_ok, degree_ok ? std::nullopt : std::optional(where));
  }
  return report;
}

Outcome verify_module_algebra(const RunConfig& cfg) {
  Outcome o;
  for (int p : distinct({cfg.n, cfg.m})) {
    require_cap(cfg, p, "verify module-algebra");
    Report r = check_module_algebra(p);
    Report named("module_algebra[n=" + std::to_string(p) + "]");
    named.absorb(r);
    o.reports.push_back(std::move(named));
    o.reports.push_back(random_associativity(p, cfg.seed, 64));
  }
  return o;
}

std::string decomposition_text(const Report& r, int n, int m) {
  const GridShape shape(n, m);
  std::ostringstream os;
  const auto& j = r.extra;
  os << "decomposition n=" << n << " m=" << m << "  status " << j.at("status").get<std::string>()
     << "\n";
  os << std::left << std::setw(12) << "mu" << std::setw(12) << "mu'" << std::setw(7) << "dim_n"
     << std::setw(7) << "dim_m" << std::setw(6) << "span"
     << "hwv\n";
  for (const auto& row : j.at("partitions")) {
    const Partition mu(row.at("mu").get<std::vector<int>>());
    const Partition conj(row.at("mu_conj").get<std::vector<int>>());
    const std::string state = row.at("hwv_state").get<std::string>();
    os << std::setw(12) << mu.to_string() << std::setw(12) << conj.to_string() << std::setw(7)
       << row.at("dim_n").get<long>() << std::setw(7) << row.at("dim_m").get<long>()
       << std::setw(6) << row.at("span_dim").get<long>() << "v(" << state << ")\n";
    std::istringstream grid(render_grid(shape, BasisState::from_string(state)));
    for (std::string line; std::getline(grid, line);) os << std::string(44, ' ') << line << "\n";
  }
  os << "total " << j.at("total").get<long>() << "  degree profile (";
  bool first = true;
  for (const auto& d : j.at("degree_profile")) {
    os << (first ? "" : ",") << d.get<long>();
    first = false;
  }
  os << ")\n";
  return os.str();
}

Outcome decompose(const RunConfig& cfg) {
  const int sites = cfg.n * cfg.m;
  if (sites > 16) throw UsageError("decompose needs nm <= 16");
  require_cap(cfg, sites, "decompose");
  Outcome o;
  Report dec = cyclic_span_dims(cfg.n, cfg.m, cfg.spec_values, cfg.cap);
  o.text = decomposition_text(dec, cfg.n, cfg.m);
  o.reports.push_back(std::move(dec));
  o.reports.push_back(dimension_identity(cfg.n, cfg.m));
  o.reports.push_back(multiplicity_free_check(cfg.n, cfg.m, cfg.spec_values.front(), cfg.cap));
  o.reports.push_back(hw_bounds_check(cfg.n, cfg.m, cfg.cap));
  for (int p : distinct({cfg.n, cfg.m})) {
    Report f = fundamental_decomp(p);
    Report named("fundamental_decomp[n=" + std::to_string(p) + "]");
    named.absorb(f);
    o.reports.push_back(std::move(named));
  }
  return o;
}

Outcome cauchy(const RunConfig& cfg) {
  if (cfg.n > 4 || cfg.m > 4) throw UsageError("cauchy needs n, m <= 4");
  return {{dual_cauchy_check(cfg.n, cfg.m)}, {}};
}

Outcome hwv_command(const RunConfig& cfg) {
  const GridShape shape(cfg.n, cfg.m);
  Partition mu;
  try {
    mu = Partition::parse(cfg.partition);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!mu.fits_in_box(cfg.n, cfg.m)) {
    throw UsageError("partition " + mu.to_string() + " does not fit in the " +
                     std::to_string(cfg.n) + " x " + std::to_string(cfg.m) + " box");
  }
  const Partition conj = mu.conjugate();
  const BasisState s = young_state(mu, shape);
  Outcome o;
  Report q = verify_hwv(mu, shape, Flavor::Quantum);
  Report c = verify_hwv(mu, shape, Flavor::Classical);
  q.extra["state"] = s.to_string();
  q.extra["mu"] = mu.parts();
  q.extra["mu_conj"] = conj.parts();
  o.text = "v(" + s.to_string() + ")  mu=" + mu.to_string() + "  mu'=" + conj.to_string() + "\n" +
           render_grid(shape, s);
  o.reports.push_back(std::move(q));
  o.reports.push_back(std::move(c));
  return o;
}

/// "E_2", "F_1", "K_1^-1", "L_3"; the rank is that of the map's domain.
QGroupGen parse_generator(const std::string& text, int rank) {
  static const std::vector<std::pair<std::string, QGenKind>> kinds = {
      {"E_", QGenKind::E}, {"F_", QGenKind::F}, {"K_", QGenKind::K}, {"L_", QGenKind::L}};
  for (const auto& [prefix, kind] : kinds) {
    if (text.rfind(prefix, 0) != 0) continue;
    std::string rest = text.substr(prefix.size());
    bool inverse = false;
    if (rest.size() > 3 && rest.compare(rest.size() - 3, 3, "^-1") == 0) {
      inverse = true;
      rest.resize(rest.size() - 3);
    }
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) break;
    if ((kind == QGenKind::E || kind == QGenKind::F) && inverse) break;
    QGenKind k = kind;
    if (inverse) k = kind == QGenKind::K ? QGenKind::KInv : QGenKind::LInv;
    try {
      return QGroupGen(k, std::stoi(rest), rank);
    } catch (const std::exception& e) {
      throw UsageError("generator " + text + ": " + e.what());
    }
  }
  throw UsageError("bad generator: " + text);
}

Outcome explain_command(const RunConfig& cfg) {
  static const std::vector<std::pair<std::string, EmbeddingMap>> maps = {
      {"phi", EmbeddingMap::Phi},
      {"theta", EmbeddingMap::Theta},
      {"lambda", EmbeddingMap::Lambda},
      {"rho", EmbeddingMap::Rho},
      {"lambda-classical", EmbeddingMap::ClassicalLambda},
      {"rho-classical", EmbeddingMap::ClassicalRho}};
  const auto it = std::find_if(maps.begin(), maps.end(), [&](const auto& e) { return e.first == cfg.map; });
  if (it == maps.end()) throw UsageError("unknown map: " + cfg.map);
  const EmbeddingMap map = it->second;
  const bool on_columns = map == EmbeddingMap::Rho || map == EmbeddingMap::ClassicalRho;
  const QGroupGen g = parse_generator(cfg.generator, on_columns ? cfg.m : cfg.n);
  const bool classical = map == EmbeddingMap::ClassicalLambda || map == EmbeddingMap::ClassicalRho;
  if (classical && g.kind != QGenKind::E && g.kind != QGenKind::F && g.kind != QGenKind::L) {
    throw UsageError("classical maps take E_i, F_i or L_i");
  }
  const GridShape shape(cfg.n, cfg.m);
  Outcome o;
  Report r("explain");
  r.extra["map"] = cfg.map;
  r.extra["generator"] = to_string(g);
  r.extra["terms"] = explain(map, shape, g);
  o.text = cfg.map + "(" + to_string(g) + ") =\n";
  for (const auto& line : r.extra["terms"]) o.text += "  " + line.get<std::string>() + "\n";
  o.reports.push_back(std::move(r));
  return o;
}

Outcome all_checks(const RunConfig& cfg) {
  Outcome o;
  append(o, verify_clifford(cfg));
  append(o, verify_qgroup(cfg));
  append(o, verify_embeddings(cfg));
  append(o, verify_commutant(cfg));
  append(o, verify_braiding(cfg));
  append(o, verify_module_algebra(cfg));
  if (cfg.n * cfg.m <= 16) append(o, decompose(cfg));
  if (cfg.n <= 4 && cfg.m <= 4) append(o, cauchy(cfg));
  return o;
}

nlohmann::json config_json(const RunConfig& cfg) {
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& s : cfg.spec_values) qs.push_back(s.get_str());
  return {{"n", cfg.n}, {"m", cfg.m}, {"spec_values", qs}, {"cap", cfg.cap}, {"seed", cfg.seed}};
}

void validate(RunConfig& cfg) {
  if (cfg.n < 1 || cfg.m < 1) throw UsageError("--n and --m must be positive");
  if (cfg.n * cfg.m > kMaxSites) throw UsageError("grid has more than 64 cells");
  if (cfg.cap < 1 || cfg.cap > 24) throw UsageError("--cap must be in 1..24");
  if (cfg.spec_q.empty()) cfg.spec_q = {"2", "3"};
  for (const auto& text : cfg.spec_q) {
    Rational v;
    try {
      v = rational_from_string(text);
    } catch (const std::exception&) {
      throw UsageError("bad --spec-q value: " + text);
    }
    if (is_zero(v) || v == 1 || v == -1) {
      throw UsageError("--spec-q must be nonzero and not +-1: " + text);
    }
    cfg.spec_values.push_back(v);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact checks for the quantum skew Howe duality on an n x m grid", "qhowe"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--n", cfg.n, "Rows of the grid (rank of the first factor)");
  app.add_option("--m", cfg.m, "Columns of the grid (rank of the second factor)");
  app.add_option("--spec-q", cfg.spec_q, "Specialization value for rank computations (repeatable)");
  app.add_option("--cap", cfg.cap, "Largest number of sites turned into matrices");
  app.add_flag("--json", cfg.json, "Emit JSON");
  app.add_flag("--verbose", cfg.verbose, "List passing checks in text mode");
  app.add_option("--out", cfg.out, "Write the report to FILE");
  app.add_option("--seed", cfg.seed, "Seed for randomized property checks");

  auto* verify = app.add_subcommand("verify", "Run one verification suite");
  verify->require_subcommand(1);
  auto* v_clifford = verify->add_subcommand("clifford", "Clifford operator relations on nm sites");
  auto* v_qgroup = verify->add_subcommand("qgroup", "Natural modules, Phi_q, coproducts");
  auto* v_embed = verify->add_subcommand("embeddings", "lambda_q, rho_q, Theta, dequantization");
  auto* v_comm = verify->add_subcommand("commutant", "[lambda(X), rho(Y)] = 0");
  auto* v_braid = verify->add_subcommand("braiding", "R-check on V (x) V");
  auto* v_mod = verify->add_subcommand("module-algebra", "Module-algebra action against Phi_q");
  auto* decompose_cmd = app.add_subcommand("decompose", "Joint highest-weight decomposition");
  auto* cauchy_cmd = app.add_subcommand("cauchy", "Dual Cauchy identity");
  auto* hwv_cmd = app.add_subcommand("hwv", "Highest-weight vector of a partition");
  hwv_cmd->add_option("--partition", cfg.partition, "Parts, e.g. 2,1")->required();
  auto* all_cmd = app.add_subcommand("all", "Every suite");
  auto* explain_cmd = app.add_subcommand("explain", "Terms of the image of one generator");
  explain_cmd->add_option("--map", cfg.map, "phi, theta, lambda, rho, lambda-classical, rho-classical")
      ->required();
  explain_cmd->add_option("--gen", cfg.generator, "Generator, e.g. E_1, F_2, K_1^-1, L_3")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::string command;
  Outcome outcome;
  try {
    validate(cfg);
    if (v_clifford->parsed()) {
      command = "verify clifford";
      outcome = verify_clifford(cfg);
    } else if (v_qgroup->parsed()) {
      command = "verify qgroup";
      outcome = verify_qgroup(cfg);
    } else if (v_embed->parsed()) {
      command = "verify embeddings";
      outcome = verify_embeddings(cfg);
    } else if (v_comm->parsed()) {
      command = "verify commutant";
      outcome = verify_commutant(cfg);
    } else if (v_braid->parsed()) {
      command = "verify braiding";
      outcome = verify_braiding(cfg);
    } else if (v_mod->parsed()) {
      command = "verify module-algebra";
      outcome = verify_module_algebra(cfg);
    } else if (decompose_cmd->parsed()) {
      command = "decompose";
      outcome = decompose(cfg);
    } else if (cauchy_cmd->parsed()) {
      command = "cauchy";
      outcome = cauchy(cfg);
    } else if (hwv_cmd->parsed()) {
      command = "hwv";
      outcome = hwv_command(cfg);
    } else if (all_cmd->parsed()) {
      command = "all";
      outcome = all_checks(cfg);
    } else if (explain_cmd->parsed()) {
      command = "explain";
      outcome = explain_command(cfg);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool pass = true;
  for (const auto& r : outcome.reports) pass = pass && r.passed();

  std::string text;
  if (cfg.json) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : outcome.reports) reports.push_back(r.to_json());
    const nlohmann::json doc = {{"command", command},
                                {"config", config_json(cfg)},
                                {"status", pass ? "pass" : "fail"},
                                {"reports", reports}};
    text = doc.dump(2) + "\n";
  } else {
    text = outcome.text;
    for (const auto& r : outcome.reports) {
      if (!r.checks().empty()) text += r.to_text(cfg.verbose);
    }
    text += pass ? "PASS\n" : "FAIL\n";
  }

  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out);
    if (!file) {
      err << "usage error: cannot open " << cfg.out << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return pass ? kExitPass : kExitCheckFailure;
}

}  // namespace qhowe::cli
