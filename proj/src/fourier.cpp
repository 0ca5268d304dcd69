#include "conehankel/fourier.hpp"

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace conehankel {

Complex FourierCoeffs::at(const GroupElement& n) const {
  if (n.size() != dim_) throw InvalidInput("coefficient lookup with wrong dimension");
  auto it = entries_.find(n);
  return it == entries_.end() ? Complex(0.0) : it->second;
}

void FourierCoeffs::set(const GroupElement& n, Complex value) {
  if (n.size() != dim_) throw InvalidInput("coefficient set with wrong dimension");
  if (std::abs(value) < kCoeffPrune) {
    entries_.erase(n);
  } else {
    entries_[n] = value;
  }
}

void FourierCoeffs::add(const GroupElement& n, Complex value) { set(n, at(n) + value); }

FourierCoeffs& FourierCoeffs::operator+=(const FourierCoeffs& other) {
  if (other.dim_ != dim_) throw InvalidInput("coefficient sum with mismatched dimensions");
  for (const auto& [n, c] : other.entries_) add(n, c);
  return *this;
}

FourierCoeffs& FourierCoeffs::operator*=(Complex scale) {
  GroupElementMap<Complex> scaled;
  for (const auto& [n, c] : entries_) {
    Complex v = c * scale;
    if (std::abs(v) >= kCoeffPrune) scaled.emplace(n, v);
  }
  entries_ = std::move(scaled);
  return *this;
}

FourierCoeffs FourierCoeffs::operator-() const {
  FourierCoeffs out(*this);
  out *= Complex(-1.0);
  return out;
}

Coord FourierCoeffs::max_degree() const {
  Coord deg = 0;
  for (const auto& [n, c] : entries_) deg = std::max(deg, n.cwiseAbs().maxCoeff());
  return deg;
}

double FourierCoeffs::l1_norm() const {
  double s = 0;
  for (const auto& [n, c] : entries_) s += std::abs(c);
  return s;
}

bool FourierCoeffs::almost_equal(const FourierCoeffs& other, double tol) const {
  if (other.dim_ != dim_) return false;
  auto check = [tol](const FourierCoeffs& a, const FourierCoeffs& b) {
    for (const auto& [n, c] : a.entries_) {
      if (std::abs(c - b.at(n)) > tol) return false;
    }
    return true;
  };
  return check(*this, other) && check(other, *this);
}

FourierCoeffs FourierCoeffs::delta(const GroupElement& n, Complex value) {
  FourierCoeffs f(static_cast<int>(n.size()));
  f.set(n, value);
  return f;
}

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Index flat_index(const GroupElement& idx, int dim, int N) {
  Index flat = 0;
  for (int ax = 0; ax < dim; ++ax) flat = flat * N + idx(ax);
  return flat;
}

// FFT along one axis of the row-major d-cube, in place.
void fft_axis(VectorXc& data, int dim, int N, int axis, bool inverse) {
  Eigen::FFT<double> fft;
  Index stride = 1;
  for (int ax = dim - 1; ax > axis; --ax) stride *= N;
  Index block = stride * N;
  std::vector<Complex> line(static_cast<size_t>(N)), out(static_cast<size_t>(N));
  for (Index base = 0; base < data.size(); base += block) {
    for (Index off = 0; off < stride; ++off) {
      for (int k = 0; k < N; ++k) line[static_cast<size_t>(k)] = data(base + off + k * stride);
      if (inverse) {
        fft.inv(out, line);  // includes 1/N
        for (int k = 0; k < N; ++k) data(base + off + k * stride) = out[static_cast<size_t>(k)] * double(N);
      } else {
        fft.fwd(out, line);
        for (int k = 0; k < N; ++k) data(base + off + k * stride) = out[static_cast<size_t>(k)];
      }
    }
  }
}

}  // namespace

GridFunction eval_grid(const FourierCoeffs& f, int grid_size) {
  const int N = grid_size;
  if (!is_power_of_two(N)) throw InvalidInput("grid size must be a power of two");
  if (N <= 2 * f.max_degree())
    throw InvalidInput("grid size " + std::to_string(N) + " aliases support of degree " +
                       std::to_string(f.max_degree()));
  const int dim = f.dim();
  Index total = 1;
  for (int ax = 0; ax < dim; ++ax) total *= N;
  GridFunction g;
  g.dim = dim;
  g.grid_size = N;
  g.samples = VectorXc::Zero(total);

  GroupElement folded(dim);
  for (const auto& [n, c] : f.entries()) {
    for (int ax = 0; ax < dim; ++ax) folded(ax) = ((n(ax) % N) + N) % N;
    g.samples(flat_index(folded, dim, N)) += c;
  }
  // synthesis = unnormalized inverse DFT per axis
  for (int ax = 0; ax < dim; ++ax) fft_axis(g.samples, dim, N, ax, /*inverse=*/true);
  return g;
}

FourierCoeffs extract_coeffs(const GridFunction& g) {
  const int N = g.grid_size;
  if (!is_power_of_two(N)) throw InvalidInput("grid size must be a power of two");
  VectorXc data = g.samples;
  for (int ax = 0; ax < g.dim; ++ax) fft_axis(data, g.dim, N, ax, /*inverse=*/false);
  data /= std::pow(double(N), g.dim);

  FourierCoeffs f(g.dim);
  GroupElement n(g.dim);
  GroupElement idx = GroupElement::Zero(g.dim);
  for (Index flat = 0; flat < data.size(); ++flat) {
    if (std::abs(data(flat)) >= kCoeffPrune) {
      for (int ax = 0; ax < g.dim; ++ax) n(ax) = idx(ax) < N / 2 ? idx(ax) : idx(ax) - N;
      f.set(n, data(flat));
    }
    int ax = g.dim - 1;
    while (ax >= 0 && idx(ax) == N - 1) idx(ax--) = 0;
    if (ax >= 0) ++idx(ax);
  }
  return f;
}

FourierCoeffs project(const FourierCoeffs& f, const OrderSpec& spec, HalfSpace half) {
  if (spec.dim() != f.dim()) throw InvalidInput("projection with mismatched dimensions");
  FourierCoeffs out(f.dim());
  for (const auto& [n, c] : f.entries()) {
    int s = spec.sign(n);
    if (half == HalfSpace::Plus ? s >= 0 : s < 0) out.set(n, c);
  }
  return out;
}

FourierCoeffs conjugate_function(const FourierCoeffs& u, const OrderSpec& spec) {
  if (spec.dim() != u.dim()) throw InvalidInput("conjugate with mismatched dimensions");
  FourierCoeffs out(u.dim());
  const Complex minus_i(0.0, -1.0);
  for (const auto& [n, c] : u.entries()) {
    int s = spec.sign(n);
    if (s != 0) out.set(n, minus_i * double(s) * c);
  }
  return out;
}

FourierCoeffs flip(const FourierCoeffs& f) {
  FourierCoeffs out(f.dim());
  for (const auto& [n, c] : f.entries()) out.set(-n, c);
  return out;
}

FourierCoeffs conj_symbol(const FourierCoeffs& f) {
  FourierCoeffs out(f.dim());
  for (const auto& [n, c] : f.entries()) out.set(-n, std::conj(c));
  return out;
}

FourierCoeffs convolve(const FourierCoeffs& nu, const FourierCoeffs& f) {
  if (nu.dim() != f.dim()) throw InvalidInput("convolution with mismatched dimensions");
  FourierCoeffs out(f.dim());
  for (const auto& [m, a] : nu.entries()) {
    for (const auto& [n, b] : f.entries()) out.add(m + n, a * b);
  }
  return out;
}

SupNormBracket sup_norm_estimate(const FourierCoeffs& f, int oversample) {
  if (oversample < 4) throw InvalidInput("sup_norm_estimate: oversample must be >= 4");
  SupNormBracket bracket;
  bracket.l1_bound = f.l1_norm();
  const Coord deg = f.max_degree();
  int N = 2;
  while (N < oversample * (2 * deg + 1)) N *= 2;
  bracket.grid_size = N;
  if (f.support_size() == 0) {
    bracket.certified_sup = 0;
    return bracket;
  }
  GridFunction g = eval_grid(f, N);
  bracket.grid_max = g.samples.cwiseAbs().maxCoeff();
  // Ehlich-Zeller style correction certifies the grid maximum as an upper
  // bound; the l1 bound stays as the coarser certificate.
  const double c = std::cos(std::numbers::pi * double(deg) / double(N));
  bracket.certified_sup = std::min(bracket.grid_max / c, bracket.l1_bound);
  return bracket;
}

MembershipResult algebra_membership(const FourierCoeffs& f, const OrderSpec& spec,
                                    SymbolAlgebra algebra, double tol) {
  if (spec.dim() != f.dim()) throw InvalidInput("membership with mismatched dimensions");
  MembershipResult result;

  GroupElement chi1;
  if (algebra == SymbolAlgebra::Ce || algebra == SymbolAlgebra::K1) {
    auto sp = smallest_positive(spec, 1);
    if (!sp.element)
      throw InvalidInput("algebra membership requires a smallest positive element");
    chi1 = *sp.element;
  }

  for (const auto& [n, c] : f.entries()) {
    if (std::abs(c) <= tol) continue;
    bool ok = false;
    switch (algebra) {
      case SymbolAlgebra::Hinf:
        ok = spec.sign(n) >= 0;
        break;
      case SymbolAlgebra::Ce:
      case SymbolAlgebra::K1: {
        // n must be -k*chi1 with k >= 0 (Ce) or k >= 1 (K1)
        Coord k = -1;
        for (Index i = 0; i < n.size(); ++i) {
          if (chi1(i) != 0) {
            k = -n(i) / chi1(i);
            break;
          }
        }
        ok = k >= (algebra == SymbolAlgebra::K1 ? 1 : 0) && (n == -k * chi1);
        break;
      }
    }
    if (!ok) {
      result.member = false;
      result.witness = n;
      return result;
    }
  }
  return result;
}

}  // namespace conehankel
