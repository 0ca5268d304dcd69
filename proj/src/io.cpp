#include "conehankel/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace conehankel::io {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string config_hash(const std::string& canonical) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.good()) throw InvalidInput("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed,
                  const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw InvalidInput(where + ": unknown key '" + key + "'");
  }
}

json group_element_to_json(const GroupElement& n) {
  json a = json::array();
  for (Index i = 0; i < n.size(); ++i) a.push_back(n(i));
  return a;
}

GroupElement group_element_from_json(const json& a, const std::string& where) {
  if (!a.is_array() || a.empty()) throw InvalidInput(where + ": expected a nonempty array");
  GroupElement n(static_cast<Index>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number_integer()) throw InvalidInput(where + ": coordinates must be integers");
    n(static_cast<Index>(i)) = a[i].get<Coord>();
  }
  return n;
}

json load_json_file(const std::filesystem::path& path, const std::string& field) {
  if (!std::filesystem::exists(path)) throw InvalidInput(field + ": file not found");
  std::ifstream in(path);
  if (!in) throw InvalidInput(field + ": cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidInput(field + ": invalid JSON (" + e.what() + ")");
  }
  return j;
}

}  // namespace

json order_spec_to_json(const OrderSpec& spec) {
  json j;
  j["dim"] = spec.dim();
  switch (spec.kind()) {
    case OrderKind::Lex:
      j["kind"] = "lex";
      break;
    case OrderKind::Quadratic:
      j["kind"] = "quadratic";
      j["m"] = spec.quadratic_weight();
      break;
    case OrderKind::BrokenHalfPlane:
      j["kind"] = "broken_halfplane";
      break;
  }
  return j;
}

OrderSpec order_spec_from_json(const json& j) {
  require_keys(j, {"dim", "kind", "m"}, "order");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("order: 'dim' must be an integer");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw InvalidInput("order: 'kind' must be a string");
  const int dim = j["dim"].get<int>();
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "lex") {
    if (j.contains("m")) throw InvalidInput("order: 'm' is only valid for quadratic kind");
    return OrderSpec::lex(dim);
  }
  if (kind == "quadratic") {
    if (dim != 2) throw InvalidInput("order: quadratic kind requires dim 2");
    if (!j.contains("m") || !j["m"].is_number_integer())
      throw InvalidInput("order: quadratic kind requires integer 'm'");
    return OrderSpec::quadratic(j["m"].get<Coord>());
  }
  if (kind == "broken_halfplane") {
    if (j.contains("m")) throw InvalidInput("order: 'm' is only valid for quadratic kind");
    return OrderSpec::broken_half_plane(dim);
  }
  throw InvalidInput("order: unknown kind '" + kind + "'");
}

OrderSpec load_order_spec(const std::filesystem::path& path) {
  return order_spec_from_json(load_json_file(path, "order"));
}

json validation_report_to_json(const OrderSpec& spec, const ValidationReport& report) {
  json j;
  j["tool_version"] = kToolVersion;
  j["spec"] = order_spec_to_json(spec);
  j["radius"] = report.radius;
  j["passed"] = report.passed();
  j["checked_pairs"] = report.checked_pairs;
  json v = json::array();
  for (const auto& viol : report.violations) {
    json w = json::array();
    for (const auto& n : viol.witness) w.push_back(group_element_to_json(n));
    v.push_back({{"axiom", viol.axiom}, {"witness", w}, {"detail", viol.detail}});
  }
  j["violations"] = v;
  return j;
}

json symbol_to_json(const FourierCoeffs& f) {
  json j;
  j["dim"] = f.dim();
  json coeffs = json::array();
  for (const auto& [n, c] : f.entries()) {
    coeffs.push_back(
        {{"n", group_element_to_json(n)}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["coeffs"] = coeffs;
  return j;
}

FourierCoeffs symbol_from_json(const json& j) {
  require_keys(j, {"dim", "coeffs"}, "symbol");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw InvalidInput("symbol: 'dim' must be an integer");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw InvalidInput("symbol: 'coeffs' must be an array");
  FourierCoeffs f(j["dim"].get<int>());
  std::set<std::vector<Coord>> seen;
  for (const auto& entry : j["coeffs"]) {
    require_keys(entry, {"n", "re", "im"}, "symbol coefficient");
    if (!entry.contains("n")) throw InvalidInput("symbol coefficient: missing 'n'");
    GroupElement n = group_element_from_json(entry["n"], "symbol coefficient");
    if (n.size() != f.dim())
      throw InvalidInput("symbol coefficient: frequency dimension mismatch");
    std::vector<Coord> key(n.data(), n.data() + n.size());
    if (!seen.insert(key).second)
      throw InvalidInput("symbol: duplicate frequency " + to_string(n));
    double re = entry.value("re", 0.0);
    double im = entry.value("im", 0.0);
    f.set(n, Complex(re, im));
  }
  return f;
}

FourierCoeffs load_symbol(const std::filesystem::path& path) {
  return symbol_from_json(load_json_file(path, "symbol"));
}

void save_matrix(const OperatorMatrix& M, const std::filesystem::path& base) {
  json meta;
  meta["tool_version"] = kToolVersion;
  meta["label"] = M.label;
  meta["spec"] = order_spec_to_json(M.rows.spec);
  meta["rows_sign"] = M.rows.sign == ConeSign::Positive ? "positive" : "negative";
  meta["cols_sign"] = M.cols.sign == ConeSign::Positive ? "positive" : "negative";
  json rows = json::array(), cols = json::array();
  for (const auto& n : M.rows.elements) rows.push_back(group_element_to_json(n));
  for (const auto& n : M.cols.elements) cols.push_back(group_element_to_json(n));
  meta["rows"] = rows;
  meta["cols"] = cols;
  std::filesystem::path meta_path = base;
  meta_path += ".meta.json";
  atomic_write(meta_path, meta.dump(2) + "\n");

  std::ostringstream csv;
  csv << "row,col,re,im\n";
  for (Index i = 0; i < M.data.rows(); ++i) {
    for (Index j = 0; j < M.data.cols(); ++j) {
      Complex v = M.data(i, j);
      if (v == Complex(0.0)) continue;
      csv << i << "," << j << "," << format_double(v.real()) << ","
          << format_double(v.imag()) << "\n";
    }
  }
  std::filesystem::path csv_path = base;
  csv_path += ".csv";
  atomic_write(csv_path, csv.str());
}

OperatorMatrix load_matrix(const std::filesystem::path& base) {
  std::filesystem::path meta_path = base;
  meta_path += ".meta.json";
  json meta = load_json_file(meta_path, "matrix");
  OrderSpec spec = order_spec_from_json(meta.at("spec"));
  auto parse_slab = [&](const json& arr, const std::string& sign_str) {
    std::vector<GroupElement> elems;
    for (const auto& e : arr) elems.push_back(group_element_from_json(e, "matrix slab"));
    ConeSign sign = sign_str == "positive" ? ConeSign::Positive : ConeSign::Negative;
    return ConeSlab::from_elements(spec, sign, std::move(elems));
  };
  OperatorMatrix M{parse_slab(meta.at("rows"), meta.at("rows_sign").get<std::string>()),
                   parse_slab(meta.at("cols"), meta.at("cols_sign").get<std::string>()),
                   MatrixXc::Zero(static_cast<Index>(meta.at("rows").size()),
                                  static_cast<Index>(meta.at("cols").size())),
                   meta.value("label", "")};

  std::filesystem::path csv_path = base;
  csv_path += ".csv";
  std::ifstream in(csv_path);
  if (!in) throw InvalidInput("matrix: cannot open " + csv_path.string());
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    std::getline(ls, cell, ',');
    Index i = std::stoll(cell);
    std::getline(ls, cell, ',');
    Index j = std::stoll(cell);
    std::getline(ls, cell, ',');
    double re = std::stod(cell);
    std::getline(ls, cell, ',');
    double im = std::stod(cell);
    if (i < 0 || i >= M.data.rows() || j < 0 || j >= M.data.cols())
      throw InvalidInput("matrix: entry index out of range");
    M.data(i, j) = Complex(re, im);
  }
  return M;
}

json study_report_to_json(const StudyReport& report) {
  json j;
  j["tool_version"] = kToolVersion;
  j["kind"] = report.kind;
  j["radii"] = report.radii;
  j["k"] = report.k;
  j["l1_bound"] = report.l1_bound;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["radius"] = row.radius;
    r["rows"] = row.n_rows;
    r["cols"] = row.n_cols;
    r["sigma"] = row.sigma;
    if (row.sigma_min) r["sigma_min"] = *row.sigma_min;
    r["converged"] = row.converged;
    r["method"] = row.method;
    rows.push_back(r);
  }
  j["table"] = rows;
  json verdicts;
  if (report.predicted_compact) verdicts["predicted_compact"] = *report.predicted_compact;
  if (report.compactness_evidence) {
    verdicts["compactness_evidence"] =
        *report.compactness_evidence == CompactnessEvidence::Decaying ? "decaying"
                                                                      : "non-decaying";
  }
  if (report.fredholm_evidence) {
    verdicts["fredholm_evidence"] =
        *report.fredholm_evidence == FredholmEvidence::SigmaMinVanishing
            ? "sigma_min_vanishing"
            : "inconclusive";
  }
  j["verdicts"] = verdicts;
  if (!report.tail_norms.empty()) {
    json tails = json::array();
    for (const auto& t : report.tail_norms)
      tails.push_back({{"chi", group_element_to_json(t.chi)}, {"value", t.value}});
    j["tail_norms"] = tails;
  }
  if (!report.notes.empty()) j["notes"] = report.notes;
  return j;
}

std::string study_report_to_csv(const StudyReport& report) {
  std::ostringstream csv;
  csv << "radius";
  for (int i = 1; i <= report.k; ++i) csv << ",sigma" << i;
  csv << ",sigma_min\n";
  for (const auto& row : report.rows) {
    csv << row.radius;
    for (int i = 0; i < report.k; ++i) {
      csv << ",";
      if (i < static_cast<int>(row.sigma.size())) csv << format_double(row.sigma[size_t(i)]);
    }
    csv << ",";
    if (row.sigma_min) csv << format_double(*row.sigma_min);
    csv << "\n";
  }
  return csv.str();
}

std::string study_plot_script(const StudyReport& report, const std::string& csv_name) {
  std::ostringstream gp;
  gp << "set datafile separator ','\n";
  gp << "set key autotitle columnhead\n";
  gp << "set logscale y\n";
  gp << "set xlabel 'box radius'\n";
  gp << "set ylabel 'singular value'\n";
  gp << "plot ";
  for (int i = 1; i <= report.k; ++i) {
    if (i > 1) gp << ", ";
    gp << "'" << csv_name << "' using 1:" << (i + 1) << " with linespoints";
  }
  gp << "\n";
  return gp.str();
}

json extension_result_to_json(const ExtensionResult& result, const OrderSpec& spec) {
  json j;
  j["tool_version"] = kToolVersion;
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["gap"] = result.gap();
  j["grid_sup"] = result.grid_sup;
  j["l1"] = result.l1;
  j["converged"] = result.converged;
  j["sweeps"] = result.sweeps;
  j["slab_radius"] = result.slab_radius;
  j["free_degree"] = result.free_degree;
  j["objective_history"] = result.objective_history;
  json free = json::array();
  for (const auto& [n, c] : result.psi.entries()) {
    if (spec.sign(n) < 0)
      free.push_back({{"n", group_element_to_json(n)}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["free_coefficients"] = free;
  j["psi"] = symbol_to_json(result.psi);
  return j;
}

}  // namespace conehankel::io
