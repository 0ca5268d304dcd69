#include "conehankel/nehari.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conehankel {

namespace {

// Measures |values| in the grid p-norm (normalized mean) or the sup norm
// when p <= 0. Rescaled so large p cannot overflow.
double grid_measure(const VectorXc& values, double p) {
  double vmax = values.cwiseAbs().maxCoeff();
  if (p <= 0 || vmax == 0.0) return vmax;
  double acc = 0;
  for (Index i = 0; i < values.size(); ++i) {
    double r = std::abs(values(i)) / vmax;
    acc += std::pow(r, p);
  }
  return vmax * std::pow(acc / double(values.size()), 1.0 / p);
}

// Golden-section minimization of a unimodal slice, fixed iteration count.
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, int iterations) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double x = (a + b) / 2;
  return {x, f(x)};
}

int descent_grid_size(Coord degree, int oversample) {
  int N = 2;
  while (N < oversample * (2 * static_cast<int>(degree) + 1)) N *= 2;
  return N;
}

}  // namespace

ExtensionResult extension_upper_bound(const FourierCoeffs& a, const OrderSpec& spec,
                                      int free_degree, int budget_sweeps, int slab_radius,
                                      const NehariOptions& options) {
  if (a.dim() != spec.dim()) throw InvalidInput("extension data/spec dimension mismatch");
  if (free_degree < 0) throw InvalidInput("free_degree must be >= 0");
  if (budget_sweeps < 1) throw InvalidInput("budget must be >= 1");
  for (const auto& [n, c] : a.entries()) {
    if (spec.sign(n) < 0)
      throw InvalidInput("extension data has mass at negative frequency " + to_string(n));
  }
  if (slab_radius < 0) slab_radius = spec.dim() == 1 ? 64 : 8;

  ExtensionResult result;
  result.slab_radius = slab_radius;
  result.free_degree = free_degree;

  {
    OperatorMatrix section = hankel_matrix(a, cone_slab(spec, ConeSign::Positive, slab_radius));
    result.lower =
        section.data.size() == 0 ? 0.0 : singular_values(section, 1, false, options.svd).top[0];
  }

  // Free coordinates: X- within the degree box, in ascending cone order.
  std::vector<GroupElement> free_indices;
  if (free_degree >= 1) {
    for (const auto& n : cone_slab(spec, ConeSign::Negative, free_degree).elements)
      free_indices.push_back(n);
  }

  const Coord degree = std::max<Coord>(a.max_degree(), free_degree);
  const int N = descent_grid_size(degree, options.oversample);
  const int dim = spec.dim();
  Index total = 1;
  for (int ax = 0; ax < dim; ++ax) total *= N;

  VectorXc current = a.support_size() ? eval_grid(a, N).samples : VectorXc::Zero(total);

  // exp(i<n,t>) on the grid for each free index
  std::vector<VectorXc> waves;
  waves.reserve(free_indices.size());
  for (const auto& n : free_indices) waves.push_back(eval_grid(FourierCoeffs::delta(n), N).samples);

  GroupElementMap<Complex> free_coeffs;
  for (const auto& n : free_indices) free_coeffs[n] = 0.0;

  double best_sup = grid_measure(current, 0);
  GroupElementMap<Complex> best_coeffs = free_coeffs;
  result.objective_history.push_back(best_sup);

  std::vector<double> stages = options.p_ladder;
  stages.push_back(0);  // final stage: the sup norm itself
  int sweeps_used = 0;
  bool final_stage_converged = free_indices.empty();

  for (size_t stage = 0; stage < stages.size(); ++stage) {
    const double p = stages[stage];
    const bool is_final = stage + 1 == stages.size();
    if (free_indices.empty()) break;
    double F = grid_measure(current, p);
    while (sweeps_used < budget_sweeps) {
      const double F_before = F;
      for (size_t ci = 0; ci < free_indices.size(); ++ci) {
        const GroupElement& n = free_indices[ci];
        const VectorXc& wave = waves[ci];
        Complex c = free_coeffs[n];
        VectorXc rest = current - c * wave;
        // any optimal coordinate stays within the current objective level
        const double bracket = grid_measure(current, 0) + 1.0;

        auto slice_re = [&](double x) {
          return grid_measure(rest + Complex(x, c.imag()) * wave, p);
        };
        auto [xr, fr] = golden_min(slice_re, -bracket, bracket, options.golden_iterations);
        if (fr < F) {
          c = Complex(xr, c.imag());
          F = fr;
        }
        rest = current - free_coeffs[n] * wave;  // unchanged; c not yet committed
        auto slice_im = [&](double y) {
          return grid_measure(rest + Complex(c.real(), y) * wave, p);
        };
        auto [yi, fi] = golden_min(slice_im, -bracket, bracket, options.golden_iterations);
        if (fi < F) {
          c = Complex(c.real(), yi);
          F = fi;
        }
        if (c != free_coeffs[n]) {
          current = rest + c * wave;
          free_coeffs[n] = c;
          F = grid_measure(current, p);
        }
      }
      ++sweeps_used;
      double sup_now = grid_measure(current, 0);
      if (sup_now < best_sup) {
        best_sup = sup_now;
        best_coeffs = free_coeffs;
      }
      result.objective_history.push_back(best_sup);
      if (F_before - F < options.sweep_tol) {
        if (is_final) final_stage_converged = true;
        break;
      }
    }
  }
  result.sweeps = sweeps_used;
  result.converged = final_stage_converged || free_indices.empty();

  FourierCoeffs psi = a;
  for (const auto& [n, c] : best_coeffs) psi.add(n, c);
  result.psi = psi;

  SupNormBracket bracket = sup_norm_estimate(psi, options.oversample);
  result.grid_sup = bracket.grid_max;
  result.l1 = bracket.l1_bound;
  result.upper = bracket.certified_sup;
  if (result.lower > result.upper + 1e-8)
    throw InternalError("extension bracket inverted: lower exceeds certified upper");
  return result;
}

ExtensionResult nehari_gap(const FourierCoeffs& a, const OrderSpec& spec, int slab_radius,
                           int free_degree, int budget_sweeps, const NehariOptions& options) {
  if (slab_radius < 1) throw InvalidInput("nehari_gap: slab_radius must be >= 1");
  return extension_upper_bound(a, spec, free_degree, budget_sweeps, slab_radius, options);
}

BmoDecomposition bmo_decomposition(const FourierCoeffs& psi, const OrderSpec& spec,
                                   HalfSpace target) {
  if (psi.dim() != spec.dim()) throw InvalidInput("decomposition data/spec dimension mismatch");
  const Complex mean = psi.at(GroupElement::Zero(spec.dim()));

  BmoDecomposition out{FourierCoeffs(psi.dim()), FourierCoeffs(psi.dim()), target, 0, 0};
  out.f = Complex(0.5) * FourierCoeffs(psi);
  // The conjugate multiplier makes f + ~g reproduce P+psi with g = i psi / 2
  // and P-psi with g = -i psi / 2 (coefficient check: -i sgn(n) (±i/2) = ±sgn(n)/2).
  if (target == HalfSpace::Plus) {
    out.f.add(GroupElement::Zero(spec.dim()), mean / 2.0);
    out.g = Complex(0, 0.5) * FourierCoeffs(psi);
  } else {
    out.f.add(GroupElement::Zero(spec.dim()), -mean / 2.0);
    out.g = Complex(0, -0.5) * FourierCoeffs(psi);
  }

  FourierCoeffs reconstructed = out.f + conjugate_function(out.g, spec);
  FourierCoeffs target_part = project(psi, spec, target);
  FourierCoeffs diff = reconstructed + (-target_part);
  double residual = 0;
  for (const auto& [n, c] : diff.entries()) residual = std::max(residual, std::abs(c));
  out.residual = residual;
  out.norm_bound = sup_norm_estimate(out.f).certified_sup + sup_norm_estimate(out.g).certified_sup;
  return out;
}

}  // namespace conehankel
