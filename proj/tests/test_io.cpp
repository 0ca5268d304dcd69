#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>

#include "conehankel/io.hpp"
#include "conehankel/random.hpp"

using namespace conehankel;
using io::json;

namespace {

std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "conehankel_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("order specs round-trip and reject junk") {
  for (OrderSpec spec :
       {OrderSpec::lex(1), OrderSpec::lex(3), OrderSpec::quadratic(5), OrderSpec::broken_half_plane(2)}) {
    OrderSpec back = io::order_spec_from_json(io::order_spec_to_json(spec));
    CHECK(back == spec);
  }
  CHECK_THROWS_AS(io::order_spec_from_json(json::parse(R"({"dim":2})")), InvalidInput);
  CHECK_THROWS_AS(io::order_spec_from_json(json::parse(R"({"dim":2,"kind":"zigzag"})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      io::order_spec_from_json(json::parse(R"({"dim":2,"kind":"lex","extra":1})")),
      InvalidInput);
  CHECK_THROWS_AS(io::order_spec_from_json(json::parse(R"({"dim":2,"kind":"lex","m":2})")),
                  InvalidInput);
  CHECK_THROWS_AS(
      io::order_spec_from_json(json::parse(R"({"dim":3,"kind":"quadratic","m":2})")),
      InvalidInput);
}

TEST_CASE("symbols round-trip; duplicates and unknown keys are rejected") {
  Rng rng(41);
  FourierCoeffs f = rng.sparse_symbol(OrderSpec::lex(2), 5, 8);
  FourierCoeffs back = io::symbol_from_json(io::symbol_to_json(f));
  CHECK(back.almost_equal(f, 0.0));

  auto dup = json::parse(
      R"({"dim":1,"coeffs":[{"n":[2],"re":1.0,"im":0.0},{"n":[2],"re":0.5,"im":0.0}]})");
  CHECK_THROWS_AS(io::symbol_from_json(dup), InvalidInput);
  auto unknown = json::parse(R"({"dim":1,"coeffs":[],"comment":"hi"})");
  CHECK_THROWS_AS(io::symbol_from_json(unknown), InvalidInput);
  auto mismatched = json::parse(R"({"dim":2,"coeffs":[{"n":[1],"re":1.0,"im":0.0}]})");
  CHECK_THROWS_AS(io::symbol_from_json(mismatched), InvalidInput);
}

TEST_CASE("matrices survive the JSON/CSV round trip bit for bit") {
  Rng rng(42);
  OrderSpec lex2 = OrderSpec::lex(2);
  FourierCoeffs nu = rng.sparse_symbol(lex2, 3, 6);
  OperatorMatrix M = hphi_matrix(nu, lex2, 3);

  auto base = temp_dir() / "matrix_roundtrip";
  io::save_matrix(M, base);
  OperatorMatrix back = io::load_matrix(base);
  REQUIRE(back.data.rows() == M.data.rows());
  REQUIRE(back.data.cols() == M.data.cols());
  CHECK((back.data - M.data).cwiseAbs().maxCoeff() == 0.0);
  CHECK(back.rows.elements == M.rows.elements);
  CHECK(back.cols.elements == M.cols.elements);
  CHECK(back.label == M.label);
}

TEST_CASE("validation reports expose a violations array") {
  auto spec = OrderSpec::broken_half_plane(2);
  auto report = validate_order(spec, 2);
  json j = io::validation_report_to_json(spec, report);
  CHECK(j.contains("violations"));
  CHECK(j["violations"].is_array());
  CHECK_FALSE(j["passed"].get<bool>());
  CHECK(j["violations"].size() > 0);
  CHECK(j["violations"][0].contains("witness"));
}

TEST_CASE("study reports: csv layout and deterministic json") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs nu(1);
  for (int j = 1; j <= 9; ++j) nu.set(group_element({-j}), 1.0 / double(j * j));
  StudyReport report = compactness_verdict(nu, lex1, {4, 8}, 3);

  std::string csv = io::study_report_to_csv(report);
  CHECK(csv.rfind("radius,sigma1,sigma2,sigma3,sigma_min\n", 0) == 0);
  CHECK(csv.find("\n4,") != std::string::npos);
  CHECK(csv.find("\n8,") != std::string::npos);

  json j1 = io::study_report_to_json(report);
  json j2 = io::study_report_to_json(compactness_verdict(nu, lex1, {4, 8}, 3));
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["verdicts"]["predicted_compact"].get<bool>());

  std::string gp = io::study_plot_script(report, "x.csv");
  CHECK(gp.find("plot ") != std::string::npos);
}

TEST_CASE("extension results serialize the free coefficients") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs a(1);
  a.set(group_element({0}), 1.0);
  a.set(group_element({1}), 1.0);
  auto result = nehari_gap(a, lex1, 16, 4, 40);
  json j = io::extension_result_to_json(result, lex1);
  CHECK(j["lower"].get<double>() == result.lower);
  CHECK(j["upper"].get<double>() == result.upper);
  CHECK(j["free_coefficients"].is_array());
  CHECK(j["free_coefficients"].size() > 0);
}

TEST_CASE("atomic writes land complete files and 17-digit formatting round-trips") {
  auto path = temp_dir() / "atomic.txt";
  io::atomic_write(path, "payload");
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(content == "payload");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));

  double values[] = {1.0 / 3.0, 2.303808995424576, 1e-300, -0.0, 3.141592653589793};
  for (double v : values) {
    std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
  }

  CHECK(io::config_hash("abc") != io::config_hash("abd"));
  CHECK(io::config_hash("abc") == io::config_hash("abc"));
}
