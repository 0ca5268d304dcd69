#include "conehankel/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace conehankel {

namespace {

// Deterministic standard normals: raw mt19937_64 words mapped to (0,1]
// doubles, then Box-Muller. Avoids distribution implementations that differ
// across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Complex complex_normal() { return Complex(normal(), normal()) / std::sqrt(2.0); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0;
  bool have_spare_ = false;
};

std::vector<double> ritz_sigmas(const MatrixXc& projected) {
  MatrixXc H = (projected + projected.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<MatrixXc> es(H, Eigen::EigenvaluesOnly);
  std::vector<double> s(static_cast<size_t>(H.rows()));
  for (Index i = 0; i < H.rows(); ++i) {
    double lam = es.eigenvalues()(H.rows() - 1 - i);  // descending
    s[static_cast<size_t>(i)] = std::sqrt(std::max(lam, 0.0));
  }
  return s;
}

SingularValues subspace_iteration(const MatrixXc& M, int k, bool include_min,
                                  const SvdOptions& opt) {
  SingularValues result;
  result.method = "subspace";

  // Gram matrix on the smaller side
  const bool rows_smaller = M.rows() <= M.cols();
  const Index p = rows_smaller ? M.rows() : M.cols();
  MatrixXc B = rows_smaller ? MatrixXc(M * M.adjoint()) : MatrixXc(M.adjoint() * M);

  const Index block = std::min<Index>(p, k + 8);
  GaussianSource rng(opt.seed);
  MatrixXc X(p, block);
  for (Index j = 0; j < block; ++j)
    for (Index i = 0; i < p; ++i) X(i, j) = rng.complex_normal();
  X = Eigen::HouseholderQR<MatrixXc>(X).householderQ() * MatrixXc::Identity(p, block);

  std::vector<double> prev;
  int it = 0;
  bool converged = false;
  std::vector<double> sigmas;
  for (it = 1; it <= opt.max_iterations; ++it) {
    MatrixXc Y = B * X;
    sigmas = ritz_sigmas(X.adjoint() * Y);
    if (!prev.empty()) {
      double scale = std::max(sigmas[0], 1e-300);
      double delta = 0;
      for (int i = 0; i < k; ++i) delta = std::max(delta, std::abs(sigmas[size_t(i)] - prev[size_t(i)]));
      if (delta <= opt.rel_tol * scale) {
        converged = true;
        break;
      }
    }
    prev = sigmas;
    X = Eigen::HouseholderQR<MatrixXc>(Y).householderQ() * MatrixXc::Identity(p, block);
  }
  result.iterations = std::min(it, opt.max_iterations);
  result.converged = converged;
  result.top.assign(sigmas.begin(), sigmas.begin() + k);

  if (include_min) {
    // Shifted power iteration: top eigenvalue of sigma_1^2 I - B gives
    // sigma_1^2 - sigma_min^2. Cancellation limits accuracy to about
    // rel_tol * sigma_1 in absolute terms; good enough for trend evidence.
    const double shift = result.top[0] * result.top[0] * (1.0 + 1e-12) + 1e-300;
    VectorXc x(p);
    for (Index i = 0; i < p; ++i) x(i) = rng.complex_normal();
    x.normalize();
    double mu = 0, mu_prev = -1;
    bool min_converged = false;
    for (int i = 1; i <= opt.max_iterations; ++i) {
      VectorXc y = shift * x - B * x;
      mu = y.norm();
      if (mu < 1e-300) break;  // B is a multiple of the identity on x
      x = y / mu;
      if (std::abs(mu - mu_prev) <= opt.rel_tol * std::max(mu, 1e-300)) {
        min_converged = true;
        break;
      }
      mu_prev = mu;
    }
    result.sigma_min = std::sqrt(std::max(shift - mu, 0.0));
    result.converged = result.converged && min_converged;
  }
  return result;
}

}  // namespace

SingularValues singular_values(const MatrixXc& M, int k, bool include_min,
                               const SvdOptions& options) {
  if (M.size() == 0) throw InvalidInput("singular_values: empty matrix");
  const Index min_dim = std::min(M.rows(), M.cols());
  if (k < 1 || k > min_dim)
    throw InvalidInput("singular_values: k must lie in [1, min dimension]");
  if (!M.allFinite()) throw InvalidInput("singular_values: matrix has non-finite entries");

  if (min_dim <= options.dense_cutoff) {
    SingularValues result;
    result.method = "jacobi";
    Eigen::JacobiSVD<MatrixXc> svd(M);
    const auto& sv = svd.singularValues();
    result.top.assign(sv.data(), sv.data() + k);
    if (include_min) result.sigma_min = sv(min_dim - 1);
    return result;
  }
  return subspace_iteration(M, k, include_min, options);
}

SectionKind section_kind_from_string(const std::string& s) {
  if (s == "hankel") return SectionKind::Hankel;
  if (s == "hphi") return SectionKind::Hphi;
  if (s == "toeplitz") return SectionKind::Toeplitz;
  if (s == "gamma_psi" || s == "gamma-psi") return SectionKind::GammaPsi;
  throw InvalidInput("kind: unknown operator kind '" + s + "'");
}

std::string to_string(SectionKind kind) {
  switch (kind) {
    case SectionKind::Hankel: return "hankel";
    case SectionKind::Hphi: return "hphi";
    case SectionKind::Toeplitz: return "toeplitz";
    case SectionKind::GammaPsi: return "gamma_psi";
  }
  throw InternalError("unreachable section kind");
}

OperatorMatrix build_section(const FourierCoeffs& symbol, SectionKind kind,
                             const OrderSpec& spec, int radius) {
  switch (kind) {
    case SectionKind::Hankel:
      return hankel_matrix(symbol, cone_slab(spec, ConeSign::Positive, radius));
    case SectionKind::Hphi:
      return hphi_matrix(symbol, spec, radius);
    case SectionKind::Toeplitz:
      return toeplitz_matrix(symbol, cone_slab(spec, ConeSign::Positive, radius));
    case SectionKind::GammaPsi:
      return gamma_psi_matrix(symbol, cone_slab(spec, ConeSign::Positive, radius));
  }
  throw InternalError("unreachable section kind");
}

const StudyRow& StudyReport::at_radius(int radius) const {
  for (const auto& row : rows)
    if (row.radius == radius) return row;
  throw InvalidInput("study has no row for radius " + std::to_string(radius));
}

double StudyReport::sigma1_last() const {
  if (rows.empty() || rows.back().sigma.empty())
    throw InternalError("study report has no singular values");
  return rows.back().sigma.front();
}

namespace {

void require_increasing(const std::vector<int>& radii) {
  if (radii.empty()) throw InvalidInput("radii: at least one radius required");
  for (size_t i = 0; i + 1 < radii.size(); ++i)
    if (radii[i] >= radii[i + 1])
      throw InvalidInput("radii: must be strictly increasing");
  if (radii.front() < 1) throw InvalidInput("radii: must be >= 1");
}

StudyRow run_section(const FourierCoeffs& symbol, SectionKind kind, const OrderSpec& spec,
                     int radius, int k, bool include_min, const SvdOptions& svd) {
  OperatorMatrix M = build_section(symbol, kind, spec, radius);
  StudyRow row;
  row.radius = radius;
  row.n_rows = M.data.rows();
  row.n_cols = M.data.cols();
  int kk = static_cast<int>(std::min<Index>(k, std::min(M.data.rows(), M.data.cols())));
  SingularValues sv = singular_values(M, kk, include_min, svd);
  row.sigma = sv.top;
  row.sigma_min = sv.sigma_min;
  row.converged = sv.converged;
  row.method = sv.method;
  return row;
}

}  // namespace

StudyReport norm_convergence_study(const FourierCoeffs& symbol, SectionKind kind,
                                   const OrderSpec& spec, const std::vector<int>& radii,
                                   int k, const StudyOptions& options) {
  require_increasing(radii);
  StudyReport report;
  report.kind = to_string(kind);
  report.radii = radii;
  report.k = k;
  report.l1_bound = symbol.l1_norm();
  for (int r : radii)
    report.rows.push_back(run_section(symbol, kind, spec, r, k, false, options.svd));

  // Every row and column of a section hits each symbol coefficient at most
  // once, so the l1 value dominates each sigma_1 (Schur test); nesting makes
  // the sigma_1 column non-decreasing.
  constexpr double slack = 1e-10;
  for (size_t i = 0; i < report.rows.size(); ++i) {
    double s1 = report.rows[i].sigma.empty() ? 0.0 : report.rows[i].sigma[0];
    if (s1 > report.l1_bound + slack)
      throw InternalError("sigma_1 exceeded the l1 ceiling: " + std::to_string(s1) + " > " +
                          std::to_string(report.l1_bound));
    if (i > 0) {
      double prev = report.rows[i - 1].sigma.empty() ? 0.0 : report.rows[i - 1].sigma[0];
      if (s1 < prev - slack)
        throw InternalError("sigma_1 dropped between nested sections");
    }
  }
  return report;
}

StudyReport compactness_verdict(const FourierCoeffs& nu, const OrderSpec& spec,
                                const std::vector<int>& radii, int k,
                                const StudyOptions& options) {
  require_increasing(radii);
  if (k < 2) throw InvalidInput("compactness_verdict: k must be >= 2");
  StudyReport report;
  report.kind = to_string(SectionKind::Hphi);
  report.radii = radii;
  report.k = k;
  report.l1_bound = nu.l1_norm();

  FourierCoeffs minus_part = project(nu, spec, HalfSpace::Minus);
  auto sp = smallest_positive(spec, 1);
  if (sp.element) {
    report.predicted_compact = algebra_membership(minus_part, spec, SymbolAlgebra::K1).member;
  } else {
    // No smallest positive element: only the zero operator is compact.
    report.predicted_compact = minus_part.support_size() == 0;
    report.notes = "no smallest positive element; nonzero sections cannot be compact";
  }

  for (int r : radii)
    report.rows.push_back(run_section(nu, SectionKind::Hphi, spec, r, k, false, options.svd));

  const StudyRow& last = report.rows.back();
  double sigma1 = last.sigma.empty() ? 0.0 : last.sigma[0];
  bool stabilized = true;
  if (report.rows.size() >= 2) {
    const StudyRow& prev = report.rows[report.rows.size() - 2];
    double tol = options.stability_tol > 0 ? options.stability_tol : 1e-4 * (1.0 + sigma1);
    for (size_t j = 1; j < last.sigma.size() && j < prev.sigma.size(); ++j) {
      if (std::abs(last.sigma[j] - prev.sigma[j]) > tol) stabilized = false;
    }
  }
  bool decayed = !last.sigma.empty() &&
                 last.sigma.back() <= options.decay_ratio * std::max(sigma1, 1e-300);
  report.compactness_evidence = (stabilized && decayed) ? CompactnessEvidence::Decaying
                                                        : CompactnessEvidence::NonDecaying;
  return report;
}

StudyReport fredholm_evidence(const FourierCoeffs& nu, const OrderSpec& spec,
                              const std::vector<int>& radii, const StudyOptions& options) {
  require_increasing(radii);
  if (nu.l1_norm() == 0) throw InvalidInput("fredholm_evidence: symbol must be non-zero");
  FourierCoeffs a = reindexed_symbol(nu, spec);

  StudyReport report;
  report.kind = to_string(SectionKind::Hankel);
  report.radii = radii;
  report.k = 1;
  report.l1_bound = a.l1_norm();
  for (int r : radii)
    report.rows.push_back(run_section(a, SectionKind::Hankel, spec, r, 1, true, options.svd));

  // Tail norms t(chi) = || a(chi + .) ||_2 over the largest slab, along the
  // first ascending nonzero positive elements.
  ConeSlab slab = cone_slab(spec, ConeSign::Positive, radii.back());
  int emitted = 0;
  for (const auto& chi : slab.elements) {
    if (chi.isZero()) continue;
    if (emitted >= options.tail_count) break;
    double sq = 0;
    for (const auto& xi : slab.elements) {
      double v = std::abs(a.at(chi + xi));
      sq += v * v;
    }
    report.tail_norms.push_back({chi, std::sqrt(sq)});
    ++emitted;
  }

  double sigma1 = report.sigma1_last();
  double smin = report.rows.back().sigma_min.value_or(
      std::numeric_limits<double>::quiet_NaN());
  report.fredholm_evidence = (smin < options.sigma_min_threshold * sigma1)
                                 ? FredholmEvidence::SigmaMinVanishing
                                 : FredholmEvidence::Inconclusive;
  return report;
}

}  // namespace conehankel
