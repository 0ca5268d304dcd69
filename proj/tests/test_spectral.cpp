#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "conehankel/random.hpp"
#include "conehankel/spectral.hpp"

using namespace conehankel;
using doctest::Approx;

TEST_CASE("identity sections have flat spectrum") {
  MatrixXc I = MatrixXc::Identity(5, 5);
  auto sv = singular_values(I, 5, true);
  for (double s : sv.top) CHECK(s == Approx(1.0));
  CHECK(*sv.sigma_min == Approx(1.0));
  CHECK(sv.method == "jacobi");
  CHECK(sv.converged);
}

TEST_CASE("rank-one H_phi sections: sigma_1 = 1, sigma_2 = 0") {
  OrderSpec lex1 = OrderSpec::lex(1);
  for (int radius : {2, 5, 9}) {
    auto M = hphi_matrix(FourierCoeffs::delta(group_element({-1})), lex1, radius);
    auto sv = singular_values(M, 2, true);
    CHECK(sv.top[0] == Approx(1.0));
    CHECK(sv.top[1] < 1e-12);
    CHECK(*sv.sigma_min < 1e-12);
  }
}

TEST_CASE("the Hilbert-kernel hankel section at radius 255 hits its known norm") {
  // dense-decomposition oracle value for entries 1/(i+j+1), i,j in [0,255]
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs a(1);
  for (int k = 0; k <= 510; ++k) a.set(group_element({k}), 1.0 / double(k + 1));
  auto M = hankel_matrix(a, cone_slab(lex1, ConeSign::Positive, 255));
  auto sv = singular_values(M, 1, false);
  CHECK(sv.top[0] == Approx(2.303808995424576).epsilon(1e-9));
}

TEST_CASE("subspace iteration agrees with the dense path") {
  Rng rng(3);
  MatrixXc A(40, 50);
  for (Index i = 0; i < 40; ++i)
    for (Index j = 0; j < 50; ++j) A(i, j) = rng.complex_in_disk();

  auto dense = singular_values(A, 6, true);
  SvdOptions opts;
  opts.dense_cutoff = 8;  // force the iterative path
  auto iter = singular_values(A, 6, true, opts);
  CHECK(iter.method == "subspace");
  CHECK(iter.converged);
  for (int i = 0; i < 6; ++i)
    CHECK(iter.top[size_t(i)] == Approx(dense.top[size_t(i)]).epsilon(1e-7));
  CHECK(*iter.sigma_min == Approx(*dense.sigma_min).epsilon(1e-5));

  // determinism: bitwise identical reruns
  auto iter2 = singular_values(A, 6, true, opts);
  for (int i = 0; i < 6; ++i) CHECK(iter.top[size_t(i)] == iter2.top[size_t(i)]);
  CHECK(*iter.sigma_min == *iter2.sigma_min);
}

TEST_CASE("iteration starvation is reported, not silently returned") {
  Rng rng(4);
  MatrixXc A(30, 30);
  for (Index i = 0; i < 30; ++i)
    for (Index j = 0; j < 30; ++j) A(i, j) = rng.complex_in_disk();
  SvdOptions opts;
  opts.dense_cutoff = 8;
  opts.max_iterations = 1;
  auto sv = singular_values(A, 4, false, opts);
  CHECK_FALSE(sv.converged);
}

TEST_CASE("argument validation") {
  MatrixXc A = MatrixXc::Identity(3, 3);
  CHECK_THROWS_AS(singular_values(A, 0, false), InvalidInput);
  CHECK_THROWS_AS(singular_values(A, 4, false), InvalidInput);
  CHECK_THROWS_AS(singular_values(MatrixXc(0, 0), 1, false), InvalidInput);
}

TEST_CASE("norm convergence study: rank-one plateau and the l1 ceiling") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs numinus = FourierCoeffs::delta(group_element({-1}));
  auto report = norm_convergence_study(numinus, SectionKind::Hphi, lex1, {1, 2, 4});
  for (const auto& row : report.rows) CHECK(row.sigma[0] == Approx(1.0));
  CHECK(report.l1_bound == Approx(1.0));

  FourierCoeffs small(1);
  small.set(group_element({-1}), 0.3);
  small.set(group_element({-4}), Complex(0, 0.4));
  auto r2 = norm_convergence_study(small, SectionKind::Hphi, lex1, {2, 5, 8});
  CHECK(r2.l1_bound == Approx(0.7));
  for (const auto& row : r2.rows) CHECK(row.sigma[0] <= 0.7 + 1e-10);
}

TEST_CASE("hilbert-kernel sigma_1 grows with the section radius") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs a(1);
  for (int k = 0; k <= 130; ++k) a.set(group_element({k}), 1.0 / double(k + 1));
  auto report = norm_convergence_study(a, SectionKind::Hankel, lex1, {15, 31, 63});
  CHECK(report.rows[0].sigma[0] < report.rows[1].sigma[0]);
  CHECK(report.rows[1].sigma[0] < report.rows[2].sigma[0]);
}

TEST_CASE("nesting monotonicity of sigma_1 for random symbols") {
  Rng rng(14);
  OrderSpec lex2 = OrderSpec::lex(2);
  for (int trial = 0; trial < 3; ++trial) {
    FourierCoeffs nu = rng.sparse_symbol(lex2, 3, 6);
    auto report = norm_convergence_study(nu, SectionKind::Hphi, lex2, {2, 3, 5});
    for (size_t i = 1; i < report.rows.size(); ++i)
      CHECK(report.rows[i].sigma[0] + 1e-10 >= report.rows[i - 1].sigma[0]);
  }
}

TEST_CASE("compactness verdicts: the K1 predicate beside the decay evidence") {
  OrderSpec lex2 = OrderSpec::lex(2);

  // rank one on the axis: compact, sigma_2 identically zero
  FourierCoeffs axis1 = FourierCoeffs::delta(group_element({0, -1}));
  auto r1 = compactness_verdict(axis1, lex2, {4, 8}, 3);
  CHECK(r1.predicted_compact == true);
  CHECK(r1.compactness_evidence == CompactnessEvidence::Decaying);
  for (const auto& row : r1.rows) {
    CHECK(row.sigma[0] == Approx(1.0));
    CHECK(row.sigma[1] < 1e-12);
  }

  // off-axis unit coefficient: not compact, growing plateau of ones
  FourierCoeffs off = FourierCoeffs::delta(group_element({-1, 5}));
  auto r2 = compactness_verdict(off, lex2, {8, 16}, 6);
  CHECK(r2.predicted_compact == false);
  CHECK(r2.compactness_evidence == CompactnessEvidence::NonDecaying);
  int ones_8 = 0, ones_16 = 0;
  for (double s : r2.at_radius(8).sigma)
    if (std::abs(s - 1.0) < 1e-10) ++ones_8;
  for (double s : r2.at_radius(16).sigma)
    if (std::abs(s - 1.0) < 1e-10) ++ones_16;
  CHECK(ones_8 >= 1);
  CHECK(ones_16 == 6);  // multiplicity grows past k

  // summable axis symbol on Z: compact with fast decay
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs sq(1);
  for (int k = 1; k <= 20; ++k) sq.set(group_element({-k}), 1.0 / double(k * k));
  auto r3 = compactness_verdict(sq, lex1, {24, 30}, 6);
  CHECK(r3.predicted_compact == true);
  CHECK(r3.compactness_evidence == CompactnessEvidence::Decaying);
  CHECK(r3.at_radius(30).sigma[5] < 0.1 * r3.at_radius(30).sigma[0]);

  // quadratic order: no smallest positive element, nothing nonzero is compact
  OrderSpec quad = OrderSpec::quadratic(2);
  FourierCoeffs qsym = FourierCoeffs::delta(group_element({-1, 0}));
  auto r4 = compactness_verdict(qsym, quad, {2, 4}, 2);
  CHECK(r4.predicted_compact == false);
  auto r5 = compactness_verdict(FourierCoeffs(2), quad, {2, 4}, 2);
  CHECK(r5.predicted_compact == true);
}

TEST_CASE("fredholm evidence: sigma_min trends and geometric tail norms") {
  OrderSpec lex1 = OrderSpec::lex(1);

  // rank-one re-indexed symbol: sigma_min 0 from the second radius on
  FourierCoeffs rank1 = FourierCoeffs::delta(group_element({-1}));
  auto r1 = fredholm_evidence(rank1, lex1, {1, 3});
  CHECK(*r1.rows[1].sigma_min == 0.0);
  CHECK(r1.fredholm_evidence == FredholmEvidence::SigmaMinVanishing);

  // hilbert-kernel symbol: strictly decreasing sigma_min
  FourierCoeffs nu(1);
  for (int j = 1; j <= 65; ++j) nu.set(group_element({-j}), 1.0 / double(j));
  auto r2 = fredholm_evidence(nu, lex1, {7, 15, 31});
  CHECK(*r2.rows[0].sigma_min > *r2.rows[1].sigma_min);
  CHECK(*r2.rows[1].sigma_min > *r2.rows[2].sigma_min);
  CHECK(r2.fredholm_evidence == FredholmEvidence::SigmaMinVanishing);

  // geometric symbol: tail norms match the closed-form tail sum
  FourierCoeffs geom(1);
  for (int j = 1; j <= 13; ++j) geom.set(group_element({-j}), std::pow(2.0, -(j - 1)));
  StudyOptions opts;
  opts.tail_count = 4;
  auto r3 = fredholm_evidence(geom, lex1, {4, 8}, opts);
  REQUIRE(r3.tail_norms.size() == 4);
  const int R = 8;
  for (int c = 1; c <= 4; ++c) {
    double expected =
        std::pow(2.0, -c) * std::sqrt((1.0 - std::pow(0.25, R + 1)) / (1.0 - 0.25));
    CHECK(r3.tail_norms[size_t(c - 1)].value == Approx(expected).epsilon(1e-12));
    if (c > 1)
      CHECK(r3.tail_norms[size_t(c - 1)].value < r3.tail_norms[size_t(c - 2)].value);
  }

  CHECK_THROWS_AS(fredholm_evidence(FourierCoeffs(1), lex1, {4}), InvalidInput);
}

TEST_CASE("study radii validation") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs a = FourierCoeffs::delta(group_element({-1}));
  CHECK_THROWS_AS(norm_convergence_study(a, SectionKind::Hphi, lex1, {8, 4}), InvalidInput);
  CHECK_THROWS_AS(norm_convergence_study(a, SectionKind::Hphi, lex1, {}), InvalidInput);
}
