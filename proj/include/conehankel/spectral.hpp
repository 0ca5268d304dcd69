#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conehankel/operators.hpp"

namespace conehankel {

struct SvdOptions {
  /// Sections with min dimension at or below this use a dense decomposition;
  /// larger ones use seeded block subspace iteration on the Gram matrix.
  Index dense_cutoff = 1024;
  double rel_tol = 1e-10;
  int max_iterations = 10000;
  std::uint64_t seed = 42;
};

struct SingularValues {
  std::vector<double> top;  // descending
  std::optional<double> sigma_min;
  bool converged = true;    // dense decompositions always converge
  int iterations = 0;
  std::string method;       // "jacobi" or "subspace"
};

/// Top-k singular values (descending), plus sigma_min on request.
/// Deterministic given the matrix and options. Iterative non-convergence is
/// reported in the status, never as a silent value. In the iterative regime
/// sigma_min comes from a shifted power iteration and is evidence-grade
/// (absolute error ~ rel_tol * sigma_1), which the studies document.
SingularValues singular_values(const MatrixXc& M, int k, bool include_min,
                               const SvdOptions& options = {});

inline SingularValues singular_values(const OperatorMatrix& M, int k, bool include_min,
                                      const SvdOptions& options = {}) {
  return singular_values(M.data, k, include_min, options);
}

enum class SectionKind { Hankel, Hphi, Toeplitz, GammaPsi };

SectionKind section_kind_from_string(const std::string& s);
std::string to_string(SectionKind kind);

/// Builds the truncation of the requested operator at the given box radius.
OperatorMatrix build_section(const FourierCoeffs& symbol, SectionKind kind,
                             const OrderSpec& spec, int radius);

enum class CompactnessEvidence { Decaying, NonDecaying };
enum class FredholmEvidence { SigmaMinVanishing, Inconclusive };

struct StudyRow {
  int radius = 0;
  Index n_rows = 0, n_cols = 0;
  std::vector<double> sigma;       // sigma_1..sigma_k (or fewer on tiny sections)
  std::optional<double> sigma_min;
  bool converged = true;
  std::string method;
};

struct TailNorm {
  GroupElement chi;
  double value;
};

struct StudyReport {
  std::string kind;
  std::vector<int> radii;
  int k = 1;
  double l1_bound = 0;
  std::vector<StudyRow> rows;

  std::optional<bool> predicted_compact;
  std::optional<CompactnessEvidence> compactness_evidence;
  std::optional<FredholmEvidence> fredholm_evidence;
  std::vector<TailNorm> tail_norms;
  std::string notes;

  const StudyRow& at_radius(int radius) const;
  double sigma1_last() const;
};

struct StudyOptions {
  SvdOptions svd;
  /// compactness: |sigma_j(last) - sigma_j(prev)| threshold (absolute, on top
  /// of 1e-4 * (1 + sigma_1)) under which the profile counts as stabilized.
  double stability_tol = 0;
  /// compactness: sigma_k(last) <= decay_ratio * sigma_1(last) counts as decay.
  double decay_ratio = 0.5;
  /// fredholm: verdict threshold, sigma_min < threshold * sigma_1.
  double sigma_min_threshold = 0.1;
  int tail_count = 8;
};

/// sigma_1 across radii with the l1 ceiling. Nesting makes the column
/// monotone non-decreasing; a violation beyond 1e-10 slack (or an l1-ceiling
/// breach) throws InternalError.
StudyReport norm_convergence_study(const FourierCoeffs& symbol, SectionKind kind,
                                   const OrderSpec& spec, const std::vector<int>& radii,
                                   int k = 1, const StudyOptions& options = {});

/// Side-by-side compactness verdicts for G_nu ~ H_phi with phi^ = nu: the
/// exact K1 support predicate of the symbol next to the singular-value decay
/// evidence of the sections. Evidence is evidence, not proof.
StudyReport compactness_verdict(const FourierCoeffs& nu, const OrderSpec& spec,
                                const std::vector<int>& radii, int k,
                                const StudyOptions& options = {});

/// Non-Fredholmness evidence: sigma_min of the square re-indexed Hankel
/// sections across radii, plus the tail norms t(chi) = l2 norm of the symbol
/// row at shift chi, both of which must trend to zero for bounded symbols.
StudyReport fredholm_evidence(const FourierCoeffs& nu, const OrderSpec& spec,
                              const std::vector<int>& radii,
                              const StudyOptions& options = {});

}  // namespace conehankel
