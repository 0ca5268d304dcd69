#pragma once

#include <cstdint>
#include <random>

#include "conehankel/fourier.hpp"
#include "conehankel/ordered_group.hpp"

namespace conehankel {

/// Seeded generator with implementation-independent double mapping, used for
/// reproducible study inputs and property checks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {  // inclusive
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex unit_modulus() {
    double a = 2.0 * 3.14159265358979323846 * uniform();
    return Complex(std::cos(a), std::sin(a));
  }
  Complex complex_in_disk(double radius = 1.0) {
    return radius * uniform() * unit_modulus();
  }

  GroupElement element_in_box(int dim, int radius) {
    GroupElement n(dim);
    for (int i = 0; i < dim; ++i) n(i) = integer(-radius, radius);
    return n;
  }

  /// Sparse symbol with `terms` distinct frequencies in the box, optionally
  /// restricted to one side of the cone. Coefficients in the unit disk,
  /// bounded away from the prune threshold.
  FourierCoeffs sparse_symbol(const OrderSpec& spec, int radius, int terms,
                              std::optional<ConeSign> side = std::nullopt) {
    FourierCoeffs f(spec.dim());
    int placed = 0;
    int guard = 0;
    while (placed < terms && ++guard < 10000) {
      GroupElement n = element_in_box(spec.dim(), radius);
      if (side) {
        int s = spec.sign(n);
        if (*side == ConeSign::Positive ? s < 0 : s >= 0) continue;
      }
      if (f.at(n) != Complex(0.0)) continue;
      f.set(n, (0.1 + 0.9 * uniform()) * unit_modulus());
      ++placed;
    }
    return f;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace conehankel
