#pragma once

#include <vector>

#include "conehankel/fourier.hpp"
#include "conehankel/ordered_group.hpp"
#include "conehankel/spectral.hpp"

namespace conehankel {

struct NehariOptions {
  int oversample = 8;          // grid density inside the descent
  int golden_iterations = 80;  // fixed-count golden-section line searches
  double sweep_tol = 1e-8;     // sweep-to-sweep improvement stop
  /// Smoothing ladder: the descent minimizes grid p-norms for these p before
  /// the final sup-norm stage. Plain sup-norm coordinate descent stalls on
  /// the nonsmooth max; the ladder is still cyclic golden-section descent.
  std::vector<double> p_ladder = {16.0, 64.0, 256.0};
  SvdOptions svd;
};

/// A bounded-extension candidate: psi agrees with the prescribed Hankel data
/// on X+ and carries free coefficients on X- up to a degree bound. lower and
/// upper bracket the operator norm; both sides are rigorous (sigma_1 of a
/// finite section from below, a certified sup-norm bound from above).
struct ExtensionResult {
  FourierCoeffs psi{1};
  double lower = 0;     // sigma_1 of the Hankel section
  double upper = 0;     // min(l1, Ehlich-Zeller-corrected grid max) of psi
  double grid_sup = 0;  // raw grid maximum (a lower estimate of ||psi||_inf)
  double l1 = 0;
  bool converged = true;
  int sweeps = 0;
  std::vector<double> objective_history;  // best sup after each sweep; non-increasing
  int slab_radius = 0;
  int free_degree = 0;

  double gap() const { return upper - lower; }
};

/// Minimizes the grid sup-norm of psi = a-part + free X- part over the free
/// coefficients by deterministic cyclic coordinate descent (golden-section
/// line search per complex coordinate, two real passes, start at zero),
/// smoothed through the p-norm ladder. Budget is the total sweep count;
/// exhausting it flags the result non-converged (still a valid upper bound).
/// slab_radius < 0 picks a default (64 in one dimension, 8 otherwise).
ExtensionResult extension_upper_bound(const FourierCoeffs& a, const OrderSpec& spec,
                                      int free_degree, int budget_sweeps,
                                      int slab_radius = -1,
                                      const NehariOptions& options = {});

/// Convenience wrapper with the section radius explicit.
ExtensionResult nehari_gap(const FourierCoeffs& a, const OrderSpec& spec, int slab_radius,
                           int free_degree, int budget_sweeps,
                           const NehariOptions& options = {});

/// The constructive bounded-mean-oscillation decomposition P±psi = f + ~g
/// with f, g trigonometric polynomials built from psi. The residual is the
/// largest coefficient of P±psi - f - ~g; it certifies the decomposition.
struct BmoDecomposition {
  FourierCoeffs f;
  FourierCoeffs g;
  HalfSpace target;
  double residual = 0;
  double norm_bound = 0;  // certified sup bracket of f plus that of g
};

BmoDecomposition bmo_decomposition(const FourierCoeffs& psi, const OrderSpec& spec,
                                   HalfSpace target);

}  // namespace conehankel
