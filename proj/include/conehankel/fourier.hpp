#pragma once

#include <vector>

#include "conehankel/ordered_group.hpp"
#include "conehankel/types.hpp"

namespace conehankel {

/// Entries with magnitude below this are dropped after every arithmetic
/// operation, so stored support is always genuine.
inline constexpr double kCoeffPrune = 1e-14;

/// Finitely supported map Z^d -> C: the Fourier coefficients of a
/// trigonometric polynomial on the d-torus. Absent keys are zero.
class FourierCoeffs {
 public:
  explicit FourierCoeffs(int dim) : dim_(dim) {
    if (dim < 1) throw InvalidInput("fourier coeffs: dim must be >= 1");
  }

  int dim() const { return dim_; }
  const GroupElementMap<Complex>& entries() const { return entries_; }
  Index support_size() const { return static_cast<Index>(entries_.size()); }

  Complex at(const GroupElement& n) const;
  void set(const GroupElement& n, Complex value);  // pruned if tiny
  void add(const GroupElement& n, Complex value);

  FourierCoeffs& operator+=(const FourierCoeffs& other);
  FourierCoeffs& operator*=(Complex scale);
  friend FourierCoeffs operator+(FourierCoeffs a, const FourierCoeffs& b) { return a += b; }
  friend FourierCoeffs operator*(Complex s, FourierCoeffs f) { return f *= s; }
  FourierCoeffs operator-() const;

  /// Largest sup-norm degree per axis: max |n_i| over the support.
  Coord max_degree() const;

  double l1_norm() const;

  bool almost_equal(const FourierCoeffs& other, double tol) const;

  static FourierCoeffs delta(const GroupElement& n, Complex value = 1.0);
  static FourierCoeffs zero(int dim) { return FourierCoeffs(dim); }

 private:
  int dim_;
  GroupElementMap<Complex> entries_;
};

/// Samples of a function on the uniform N^d grid of the torus,
/// t_k = 2*pi*k/N per axis. Row-major flattening, last axis fastest.
struct GridFunction {
  int dim = 1;
  int grid_size = 0;  // per-axis N, a power of two
  VectorXc samples;

  Index flat_size() const { return samples.size(); }
  Complex& at_flat(Index i) { return samples(i); }
};

/// Synthesizes f on the N^d grid: samples(t) = sum_n f(n) exp(i<n,t>).
/// N must be a power of two with N > 2*max_degree (alias-free).
GridFunction eval_grid(const FourierCoeffs& f, int grid_size);

/// Recovers coefficients from an alias-free grid (frequencies folded into
/// [-N/2, N/2)). Inverse of eval_grid up to rounding.
FourierCoeffs extract_coeffs(const GridFunction& g);

enum class HalfSpace { Plus, Minus };

/// Orthogonal projections P+ (support in X+, 0 included) and P- (support in X-).
FourierCoeffs project(const FourierCoeffs& f, const OrderSpec& spec, HalfSpace half);

/// Harmonic conjugate: coefficient multiplier -i*sgn(n), zero mean.
/// For real u this is the unique function with u + i*conj(u) analytic.
FourierCoeffs conjugate_function(const FourierCoeffs& u, const OrderSpec& spec);

/// (Jf)(x) = f(-x); coefficients n -> f(-n).
FourierCoeffs flip(const FourierCoeffs& f);

/// Coefficientwise conjugate symbol: n -> conj(f(-n)), the coefficients of
/// the pointwise complex conjugate of the function.
FourierCoeffs conj_symbol(const FourierCoeffs& f);

/// Exact sparse convolution on Z^d: (nu * f)(xi) = sum_chi nu(xi - chi) f(chi).
FourierCoeffs convolve(const FourierCoeffs& nu, const FourierCoeffs& f);

struct SupNormBracket {
  double grid_max = 0;   // max |f| over the oversampled grid; lower estimate
  double l1_bound = 0;   // sum |f^(n)|; certified upper bound
  /// grid_max / cos(pi*M/N): a certified upper bound on the true sup-norm
  /// for a degree-M polynomial sampled on N > 2M points per axis.
  double certified_sup = 0;
  int grid_size = 0;
};

/// Brackets the sup-norm of a trigonometric polynomial between the maximum
/// over an oversampled grid and the l1 coefficient bound.
SupNormBracket sup_norm_estimate(const FourierCoeffs& f, int oversample = 8);

enum class SymbolAlgebra { Hinf, Ce, K1 };

struct MembershipResult {
  bool member = true;
  std::optional<GroupElement> witness;  // first offending frequency
};

/// Support tests for the closed algebras that govern boundedness and
/// compactness: Hinf (support in X+), Ce (nonpositive multiples of the
/// smallest positive element), K1 (strictly negative multiples).
MembershipResult algebra_membership(const FourierCoeffs& f, const OrderSpec& spec,
                                    SymbolAlgebra algebra, double tol = kCoeffPrune);

}  // namespace conehankel
