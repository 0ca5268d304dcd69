#include "conehankel/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <Eigen/Core>

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "conehankel/io.hpp"
#include "conehankel/nehari.hpp"
#include "conehankel/operators.hpp"
#include "conehankel/random.hpp"
#include "conehankel/spectral.hpp"

namespace conehankel::cli {

using io::json;

std::string RunConfig::canonical() const {
  std::ostringstream os;
  os << "command=" << static_cast<int>(command) << ";order=" << order_path.string()
     << ";symbol=" << symbol_path.string() << ";radius=" << radius << ";radii=";
  for (int r : radii) os << r << ",";
  os << ";kind=" << kind << ";k=" << k << ";D=" << free_degree << ";budget=" << budget
     << ";margin=" << margin << ";seed=" << seed << ";threshold=" << sigma_min_threshold
     << ";tol=" << tolerance << ";formats=";
  for (const auto& f : formats) os << f << ",";
  return os.str();
}

namespace {

std::vector<int> parse_radii(const std::string& csv) {
  std::vector<int> radii;
  std::istringstream is(csv);
  std::string cell;
  while (std::getline(is, cell, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(cell, &pos);
      if (pos != cell.size()) throw std::invalid_argument(cell);
      radii.push_back(v);
    } catch (const std::exception&) {
      throw CliError{"radii: '" + cell + "' is not an integer"};
    }
  }
  if (radii.empty()) throw CliError{"radii: at least one radius required"};
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (radii[i] >= radii[i + 1]) throw CliError{"radii: must be strictly increasing"};
  if (radii.front() < 1) throw CliError{"radii: must be >= 1"};
  return radii;
}

void require_file(const std::filesystem::path& p, const std::string& field) {
  if (p.empty()) throw CliError{field + ": required"};
  if (!std::filesystem::exists(p)) throw CliError{field + ": file not found"};
}

struct ParsedArgs {
  std::string order, symbol, radii, kind = "hphi", out = ".", formats = "json,csv";
  int radius = 8, k = 5, degree = 12, budget = 400, margin = 2;
  std::uint64_t seed = 42;
  double threshold = 0.1, tolerance = 1e-10;
};

void add_common(CLI::App* cmd, ParsedArgs& args) {
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--format", args.formats, "comma list of json,csv,gnuplot");
}

}  // namespace

RunConfig parse_inputs(int argc, const char* const* argv) {
  ParsedArgs args;
  std::optional<Command> command;

  CLI::App app{"finite sections of Hankel and Toeplitz operators over ordered Z^d"};
  app.require_subcommand(1);

  auto* order = app.add_subcommand("order", "order-spec utilities");
  auto* order_check = order->add_subcommand("check", "validate the cone axioms on a box");
  order_check->add_option("--order", args.order, "order spec JSON")->required();
  order_check->add_option("--radius", args.radius, "box radius");
  add_common(order_check, args);
  order_check->callback([&] { command = Command::OrderCheck; });

  auto* op = app.add_subcommand("op", "operator sections");
  auto* op_build = op->add_subcommand("build", "assemble one section and export it");
  op_build->add_option("--order", args.order)->required();
  op_build->add_option("--symbol", args.symbol)->required();
  op_build->add_option("--kind", args.kind, "hankel|hphi|toeplitz|gamma_psi");
  op_build->add_option("--radius", args.radius);
  add_common(op_build, args);
  op_build->callback([&] { command = Command::OpBuild; });

  auto* op_norms = op->add_subcommand("norms", "sigma_1 across section radii");
  op_norms->add_option("--order", args.order)->required();
  op_norms->add_option("--symbol", args.symbol)->required();
  op_norms->add_option("--kind", args.kind);
  op_norms->add_option("--radii", args.radii)->required();
  op_norms->add_option("--k", args.k);
  add_common(op_norms, args);
  op_norms->callback([&] { command = Command::OpNorms; });

  auto* study = app.add_subcommand("study", "spectral studies");
  auto* compact = study->add_subcommand("compactness", "K1 predicate vs decay evidence");
  compact->add_option("--order", args.order)->required();
  compact->add_option("--symbol", args.symbol)->required();
  compact->add_option("--radii", args.radii)->required();
  compact->add_option("--k", args.k);
  add_common(compact, args);
  compact->callback([&] { command = Command::StudyCompactness; });

  auto* fredholm = study->add_subcommand("fredholm", "sigma_min and tail-norm trends");
  fredholm->add_option("--order", args.order)->required();
  fredholm->add_option("--symbol", args.symbol)->required();
  fredholm->add_option("--radii", args.radii)->required();
  fredholm->add_option("--threshold", args.threshold, "sigma_min verdict threshold");
  add_common(fredholm, args);
  fredholm->callback([&] { command = Command::StudyFredholm; });

  auto* nehari_cmd = app.add_subcommand("nehari", "bounded extension search");
  auto* gap = nehari_cmd->add_subcommand("gap", "bracket the norm via an extension");
  gap->add_option("--order", args.order)->required();
  gap->add_option("--symbol", args.symbol)->required();
  gap->add_option("--radius", args.radius, "Hankel section radius for the lower bound");
  gap->add_option("--degree", args.degree, "free-coefficient degree bound D");
  gap->add_option("--budget", args.budget, "sweep budget");
  add_common(gap, args);
  gap->callback([&] { command = Command::NehariGap; });

  auto* verify = app.add_subcommand("verify", "verification suites");
  auto* identities = verify->add_subcommand("identities", "run the identity suite");
  identities->add_option("--order", args.order)->required();
  identities->add_option("--seed", args.seed);
  identities->add_option("--margin", args.margin);
  identities->add_option("--tolerance", args.tolerance);
  add_common(identities, args);
  identities->callback([&] { command = Command::VerifyIdentities; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    throw CliError{app.help(), kOk};
  } catch (const CLI::ParseError& e) {
    throw CliError{std::string("arguments: ") + e.what()};
  }
  if (!command) throw CliError{"command: none selected"};

  RunConfig config;
  config.command = *command;
  config.order_path = args.order;
  config.symbol_path = args.symbol;
  config.out_dir = args.out;
  config.radius = args.radius;
  config.kind = args.kind;
  config.k = args.k;
  config.free_degree = args.degree;
  config.budget = args.budget;
  config.margin = args.margin;
  config.seed = args.seed;
  config.sigma_min_threshold = args.threshold;
  config.tolerance = args.tolerance;

  config.formats.clear();
  std::istringstream fs(args.formats);
  std::string fmt;
  while (std::getline(fs, fmt, ',')) {
    if (fmt != "json" && fmt != "csv" && fmt != "gnuplot")
      throw CliError{"format: unknown format '" + fmt + "'"};
    config.formats.push_back(fmt);
  }

  require_file(config.order_path, "order");
  if (config.command != Command::OrderCheck && config.command != Command::VerifyIdentities)
    require_file(config.symbol_path, "symbol");
  if (!args.radii.empty()) config.radii = parse_radii(args.radii);

  if (config.radius < 1) throw CliError{"radius: must be >= 1"};
  if (config.k < 1) throw CliError{"k: must be >= 1"};
  if (config.free_degree < 0) throw CliError{"degree: must be >= 0"};
  if (config.budget < 1) throw CliError{"budget: must be >= 1"};
  if (config.tolerance <= 0) throw CliError{"tolerance: must be positive"};
  if (config.sigma_min_threshold <= 0) throw CliError{"threshold: must be positive"};
  return config;
}

namespace {

bool wants(const RunConfig& c, const std::string& fmt) {
  return std::find(c.formats.begin(), c.formats.end(), fmt) != c.formats.end();
}

void stamp(json& j, const RunConfig& config) {
  j["tool_version"] = io::kToolVersion;
  j["config_hash"] = io::config_hash(config.canonical());
}

void write_study(const RunConfig& config, const StudyReport& report,
                 const std::string& base_name) {
  std::filesystem::create_directories(config.out_dir);
  if (wants(config, "json")) {
    json j = io::study_report_to_json(report);
    stamp(j, config);
    io::atomic_write(config.out_dir / (base_name + ".json"), j.dump(2) + "\n");
  }
  if (wants(config, "csv")) {
    std::string csv = "# config_hash=" + io::config_hash(config.canonical()) + "\n" +
                      io::study_report_to_csv(report);
    io::atomic_write(config.out_dir / (base_name + ".csv"), csv);
  }
  if (wants(config, "gnuplot")) {
    io::atomic_write(config.out_dir / (base_name + ".gp"),
                     io::study_plot_script(report, base_name + ".csv"));
  }
}

int exec_order_check(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  ValidationReport report = validate_order(spec, config.radius);
  std::filesystem::create_directories(config.out_dir);
  json j = io::validation_report_to_json(spec, report);
  stamp(j, config);
  if (wants(config, "json"))
    io::atomic_write(config.out_dir / "order_check.json", j.dump(2) + "\n");
  std::cout << "order check: " << (report.passed() ? "PASS" : "FAIL") << " ("
            << report.violations.size() << " violations, radius " << config.radius << ")\n";
  return kOk;
}

int exec_op_build(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  FourierCoeffs symbol = io::load_symbol(config.symbol_path);
  SectionKind kind = section_kind_from_string(config.kind);
  OperatorMatrix M = build_section(symbol, kind, spec, config.radius);
  std::filesystem::create_directories(config.out_dir);
  std::string base = "op_" + config.kind + "_r" + std::to_string(config.radius);
  io::save_matrix(M, config.out_dir / base);
  std::cout << "op build: " << config.kind << " section " << M.data.rows() << "x"
            << M.data.cols() << " at radius " << config.radius << " -> " << base << ".csv\n";
  return kOk;
}

int exec_op_norms(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  FourierCoeffs symbol = io::load_symbol(config.symbol_path);
  SectionKind kind = section_kind_from_string(config.kind);
  StudyReport report = norm_convergence_study(symbol, kind, spec, config.radii, config.k);
  write_study(config, report, "norms");
  std::cout << "op norms: sigma_1 =";
  for (const auto& row : report.rows)
    std::cout << " " << io::format_double(row.sigma.empty() ? 0.0 : row.sigma[0]);
  std::cout << " (l1 ceiling " << io::format_double(report.l1_bound) << ")\n";
  for (const auto& row : report.rows)
    if (!row.converged) return kNonConvergence;
  return kOk;
}

int exec_study_compactness(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  FourierCoeffs symbol = io::load_symbol(config.symbol_path);
  StudyReport report = compactness_verdict(symbol, spec, config.radii, config.k);
  write_study(config, report, "compactness");
  std::cout << "study compactness: predicted_compact="
            << (report.predicted_compact.value_or(false) ? "true" : "false") << " evidence="
            << (report.compactness_evidence == CompactnessEvidence::Decaying ? "decaying"
                                                                             : "non-decaying")
            << "\n";
  for (const auto& row : report.rows)
    if (!row.converged) return kNonConvergence;
  return kOk;
}

int exec_study_fredholm(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  FourierCoeffs symbol = io::load_symbol(config.symbol_path);
  StudyOptions options;
  options.sigma_min_threshold = config.sigma_min_threshold;
  StudyReport report = fredholm_evidence(symbol, spec, config.radii, options);
  write_study(config, report, "fredholm");
  std::cout << "study fredholm: sigma_min(last)="
            << io::format_double(report.rows.back().sigma_min.value_or(0.0)) << " verdict="
            << (report.fredholm_evidence == FredholmEvidence::SigmaMinVanishing
                    ? "sigma_min_vanishing"
                    : "inconclusive")
            << "\n";
  for (const auto& row : report.rows)
    if (!row.converged) return kNonConvergence;
  return kOk;
}

int exec_nehari_gap(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  FourierCoeffs a = io::load_symbol(config.symbol_path);
  ExtensionResult result = nehari_gap(a, spec, config.radius, config.free_degree, config.budget);
  std::filesystem::create_directories(config.out_dir);
  json j = io::extension_result_to_json(result, spec);
  stamp(j, config);
  if (wants(config, "json"))
    io::atomic_write(config.out_dir / "nehari_gap.json", j.dump(2) + "\n");
  std::cout << "nehari gap: lower=" << io::format_double(result.lower)
            << " upper=" << io::format_double(result.upper)
            << " gap=" << io::format_double(result.gap())
            << (result.converged ? "" : " (non-converged)") << "\n";
  return result.converged ? kOk : kNonConvergence;
}

// ---- the identity suite -------------------------------------------------

struct IdentityResult {
  std::string name;
  double max_residual = 0;
  double tolerance = 0;
  long cases = 0;
  bool pass() const { return max_residual <= tolerance; }
};

double coeff_distance(const FourierCoeffs& a, const FourierCoeffs& b) {
  double r = 0;
  FourierCoeffs diff = a + (-b);
  for (const auto& [n, c] : diff.entries()) r = std::max(r, std::abs(c));
  return r;
}

VectorXc embed(const ConeSlab& slab, const FourierCoeffs& f) {
  VectorXc v = VectorXc::Zero(slab.size());
  for (const auto& [n, c] : f.entries()) {
    if (auto i = slab.find(n)) v(*i) = c;
  }
  return v;
}

std::vector<IdentityResult> run_identity_suite(const OrderSpec& spec, Rng& rng, int margin,
                                               double tol) {
  std::vector<IdentityResult> results;
  const int dim = spec.dim();

  {  // Hankel sections satisfy the shift commutation relations
    IdentityResult r{"lemma1_hankel_commutes", 0, tol, 0};
    for (int trial = 0; trial < 10; ++trial) {
      FourierCoeffs a = rng.sparse_symbol(spec, 4, 5, ConeSign::Positive);
      auto check = shift_commutation_check(hankel_matrix(a, cone_slab(spec, ConeSign::Positive, 4)),
                                           margin, tol);
      r.max_residual = std::max(r.max_residual, check.max_residual);
      r.cases += check.checked;
    }
    results.push_back(r);
  }
  {  // and perturbed sections do not
    IdentityResult r{"lemma1_perturbed_fails", 0, tol, 0};
    double min_residual = 1e300;
    for (int trial = 0; trial < 10; ++trial) {
      FourierCoeffs a = rng.sparse_symbol(spec, 4, 5, ConeSign::Positive);
      OperatorMatrix M = hankel_matrix(a, cone_slab(spec, ConeSign::Positive, 4));
      ConeSlab interior = cone_slab(spec, ConeSign::Positive, 4 - margin);
      ConeSlab shifts = cone_slab(spec, ConeSign::Positive, margin);
      GroupElement eta = interior[rng.integer(0, interior.size() - 1)];
      GroupElement xi = interior[rng.integer(0, interior.size() - 1)];
      GroupElement chi;
      do {
        chi = shifts[rng.integer(0, shifts.size() - 1)];
      } while (chi.isZero());
      M.data(*M.rows.find(eta + chi), *M.cols.find(xi)) += 1e-3;
      auto check = shift_commutation_check(M, margin, tol);
      min_residual = std::min(min_residual, check.max_residual);
      r.cases += check.checked;
      if (check.commutes || !check.witness) min_residual = 0;  // should not happen
    }
    // here the residual must be LARGE; record distance from the required floor
    IdentityResult out{"lemma1_perturbed_fails", 0, tol, r.cases};
    out.max_residual = min_residual > 5e-4 ? 0.0 : 1.0;  // 0 means every case failed loudly
    results.push_back(out);
  }
  {  // Theorem 5: G_nu agrees with the H_phi section applied to vectors
    IdentityResult r{"theorem5_gnu_matches_hphi", 0, 1e-12, 0};
    for (int trial = 0; trial < 20; ++trial) {
      FourierCoeffs nu = rng.sparse_symbol(spec, 2, 4);
      FourierCoeffs fc = rng.sparse_symbol(spec, 2, 3, ConeSign::Positive);
      int R = 4;
      OperatorMatrix M = hphi_matrix(nu, spec, R);
      VectorXc f = embed(M.cols, fc);
      VectorXc via_matrix = M.data * f;
      ConeSlab domain = cone_slab(spec, ConeSign::Positive, 2);
      VectorXc via_conv = gnu_apply(nu, domain, embed(domain, fc), M.rows);
      r.max_residual = std::max(r.max_residual, (via_matrix - via_conv).cwiseAbs().maxCoeff());
      r.cases += M.rows.size();
    }
    results.push_back(r);
  }
  {  // Lemma 2: re-indexed H_phi sections are Hankel sections of the shifted symbol
    IdentityResult r{"lemma2_reindex_exact", 0, 0.0, 0};
    for (int trial = 0; trial < 20; ++trial) {
      FourierCoeffs phi = rng.sparse_symbol(spec, 3, 5);
      OperatorMatrix H = hphi_matrix(phi, spec, 5);
      OperatorMatrix square = reindex_rows(H, spec);
      OperatorMatrix expected = hankel_matrix(reindexed_symbol(phi, spec), square.rows);
      r.max_residual =
          std::max(r.max_residual, (square.data - expected.data).cwiseAbs().maxCoeff());
      r.cases += square.data.size();
    }
    results.push_back(r);
  }
  {  // Lemma 3: Gamma_{J psi} sections equal Hankel sections with a = psi^|X+
    IdentityResult r{"lemma3_gamma_psi_hankel", 0, 0.0, 0};
    for (int trial = 0; trial < 20; ++trial) {
      FourierCoeffs psi = rng.sparse_symbol(spec, 3, 5);
      ConeSlab slab = cone_slab(spec, ConeSign::Positive, 4);
      OperatorMatrix lhs = gamma_psi_matrix(flip(psi), slab);
      OperatorMatrix rhs = hankel_matrix(project(psi, spec, HalfSpace::Plus), slab);
      r.max_residual = std::max(r.max_residual, (lhs.data - rhs.data).cwiseAbs().maxCoeff());
      r.cases += lhs.data.size();
    }
    results.push_back(r);
  }
  {  // semicommutator identity on interior vectors
    IdentityResult r{"identity6_semicommutator", 0, tol, 0};
    const int S = 2, Rv = 2, R = Rv + 2 * S;
    for (int trial = 0; trial < 10; ++trial) {
      FourierCoeffs phi = rng.sparse_symbol(spec, S, 4);
      FourierCoeffs psi = rng.sparse_symbol(spec, S, 4);
      ConeSlab slab = cone_slab(spec, ConeSign::Positive, R);
      FourierCoeffs vc = rng.sparse_symbol(spec, Rv, 3, ConeSign::Positive);
      VectorXc v = embed(slab, vc);
      MatrixXc Tphi = toeplitz_matrix(phi, slab).data;
      MatrixXc Tpsi = toeplitz_matrix(psi, slab).data;
      MatrixXc Tprod = toeplitz_matrix(convolve(phi, psi), slab).data;
      MatrixXc Hpsi = hphi_matrix(psi, spec, R).data;
      MatrixXc Hphibar = hphi_matrix(conj_symbol(phi), spec, R).data;
      VectorXc resid = Tphi * (Tpsi * v) - Tprod * v + Hphibar.adjoint() * (Hpsi * v);
      r.max_residual = std::max(r.max_residual, resid.norm() / (1.0 + v.norm()));
      r.cases += 1;
    }
    results.push_back(r);
  }
  {  // conjugate-function identity and both decomposition targets
    IdentityResult r{"conjugate_and_bmo", 0, 1e-12, 0};
    for (int trial = 0; trial < 20; ++trial) {
      FourierCoeffs psi = rng.sparse_symbol(spec, 4, 6);
      FourierCoeffs tilde = conjugate_function(psi, spec);
      FourierCoeffs lhs = Complex(0, 1) * tilde;
      FourierCoeffs rhs = Complex(2.0) * project(psi, spec, HalfSpace::Plus) + (-psi);
      rhs.add(GroupElement::Zero(dim), -psi.at(GroupElement::Zero(dim)));
      r.max_residual = std::max(r.max_residual, coeff_distance(lhs, rhs));
      r.max_residual =
          std::max(r.max_residual, bmo_decomposition(psi, spec, HalfSpace::Plus).residual);
      r.max_residual =
          std::max(r.max_residual, bmo_decomposition(psi, spec, HalfSpace::Minus).residual);
      r.cases += 3;
    }
    results.push_back(r);
  }
  if (dim >= 2) {  // K1 support predicate vs decay evidence, both polarities
    IdentityResult r{"corollary8_predicate_vs_decay", 0, 0.0, 2};
    FourierCoeffs on_axis(dim);
    for (int k = 1; k <= 6; ++k) {
      GroupElement n = GroupElement::Zero(dim);
      n(dim - 1) = -k;
      on_axis.set(n, 1.0 / double(k * k));
    }
    StudyReport compact = compactness_verdict(on_axis, spec, {6, 10}, 5);
    bool ok1 = compact.predicted_compact.value_or(false) &&
               compact.compactness_evidence == CompactnessEvidence::Decaying;
    GroupElement off = GroupElement::Zero(dim);
    off(0) = -1;
    off(dim - 1) = 5;
    StudyReport plateau = compactness_verdict(FourierCoeffs::delta(off), spec, {6, 10}, 5);
    bool ok2 = !plateau.predicted_compact.value_or(true) &&
               plateau.compactness_evidence == CompactnessEvidence::NonDecaying;
    r.max_residual = (ok1 && ok2) ? 0.0 : 1.0;
    results.push_back(r);
  }
  if (dim == 1) {  // sigma_min trend of the re-indexed sections
    IdentityResult r{"theorem3_sigma_min_trend", 0, 0.0, 3};
    FourierCoeffs nu(1);
    for (int j = 1; j <= 65; ++j) nu.set(group_element({-j}), 1.0 / double(j));
    StudyReport report = fredholm_evidence(nu, spec, {8, 16, 32});
    bool decreasing = true;
    for (size_t i = 1; i < report.rows.size(); ++i) {
      if (report.rows[i].sigma_min.value_or(1) >= report.rows[i - 1].sigma_min.value_or(1))
        decreasing = false;
    }
    bool verdict = report.fredholm_evidence == FredholmEvidence::SigmaMinVanishing;
    bool tails = true;
    for (size_t i = 1; i < report.tail_norms.size(); ++i)
      if (report.tail_norms[i].value >= report.tail_norms[i - 1].value) tails = false;
    r.max_residual = (decreasing && verdict && tails) ? 0.0 : 1.0;
    results.push_back(r);
  }
  return results;
}

int exec_verify_identities(const RunConfig& config) {
  OrderSpec spec = io::load_order_spec(config.order_path);
  Rng rng(config.seed);
  auto results = run_identity_suite(spec, rng, config.margin, config.tolerance);

  bool all_pass = true;
  json items = json::array();
  std::ostringstream csv;
  csv << "identity,max_residual,tolerance,cases,pass\n";
  for (const auto& r : results) {
    all_pass = all_pass && r.pass();
    items.push_back({{"name", r.name},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"cases", r.cases},
                     {"pass", r.pass()}});
    csv << r.name << "," << io::format_double(r.max_residual) << ","
        << io::format_double(r.tolerance) << "," << r.cases << ","
        << (r.pass() ? "true" : "false") << "\n";
    std::cout << "identity " << r.name << ": max residual "
              << io::format_double(r.max_residual) << " " << (r.pass() ? "PASS" : "FAIL")
              << "\n";
  }
  json j;
  j["identities"] = items;
  j["seed"] = config.seed;
  j["all_pass"] = all_pass;
  stamp(j, config);
  std::filesystem::create_directories(config.out_dir);
  if (wants(config, "json"))
    io::atomic_write(config.out_dir / "verify_identities.json", j.dump(2) + "\n");
  if (wants(config, "csv"))
    io::atomic_write(config.out_dir / "verify_identities.csv", csv.str());
  std::cout << "verify identities: " << (all_pass ? "PASS" : "FAIL") << " ("
            << results.size() << " identities)\n";
  return all_pass ? kOk : kInternalError;
}

}  // namespace

int execute(const RunConfig& config) {
  switch (config.command) {
    case Command::OrderCheck: return exec_order_check(config);
    case Command::OpBuild: return exec_op_build(config);
    case Command::OpNorms: return exec_op_norms(config);
    case Command::StudyCompactness: return exec_study_compactness(config);
    case Command::StudyFredholm: return exec_study_fredholm(config);
    case Command::NehariGap: return exec_nehari_gap(config);
    case Command::VerifyIdentities: return exec_verify_identities(config);
  }
  throw InternalError("unreachable command");
}

int run_main(int argc, const char* const* argv) {
  if (const char* threads = std::getenv("CONE_HANKEL_THREADS")) {
    int n = std::atoi(threads);
    if (n > 0) Eigen::setNbThreads(n);
  }
  try {
    RunConfig config = parse_inputs(argc, argv);
    return execute(config);
  } catch (const CliError& e) {
    if (e.exit_code == kOk) {
      std::cout << e.diagnostic << "\n";
      return kOk;
    }
    std::cerr << e.diagnostic << "\n";
    return e.exit_code;
  } catch (const InvalidInput& e) {
    std::cerr << e.what() << "\n";
    return kValidationError;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace conehankel::cli
