#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conehankel/fourier.hpp"
#include "conehankel/random.hpp"

using namespace conehankel;
using doctest::Approx;

namespace {

// Independent synthesis oracle: direct summation at each grid point.
VectorXc direct_eval(const FourierCoeffs& f, int N) {
  Index total = 1;
  for (int ax = 0; ax < f.dim(); ++ax) total *= N;
  VectorXc out = VectorXc::Zero(total);
  for (Index flat = 0; flat < total; ++flat) {
    Index rem = flat;
    std::vector<double> t(static_cast<size_t>(f.dim()));
    for (int ax = f.dim() - 1; ax >= 0; --ax) {
      t[static_cast<size_t>(ax)] = 2.0 * std::numbers::pi * double(rem % N) / double(N);
      rem /= N;
    }
    Complex s = 0;
    for (const auto& [n, c] : f.entries()) {
      double phase = 0;
      for (int ax = 0; ax < f.dim(); ++ax) phase += double(n(ax)) * t[static_cast<size_t>(ax)];
      s += c * Complex(std::cos(phase), std::sin(phase));
    }
    out(flat) = s;
  }
  return out;
}

FourierCoeffs random_poly(Rng& rng, int dim, int radius, int terms) {
  OrderSpec spec = OrderSpec::lex(dim);
  return rng.sparse_symbol(spec, radius, terms);
}

}  // namespace

TEST_CASE("grid synthesis matches the direct-summation oracle") {
  FourierCoeffs constant = FourierCoeffs::delta(group_element({0}), 1.0);
  GridFunction g = eval_grid(constant, 8);
  for (Index i = 0; i < g.samples.size(); ++i)
    CHECK(std::abs(g.samples(i) - Complex(1.0)) < 1e-14);

  FourierCoeffs wave = FourierCoeffs::delta(group_element({1}), 1.0);
  g = eval_grid(wave, 8);
  for (int k = 0; k < 8; ++k) {
    double theta = 2.0 * std::numbers::pi * k / 8.0;
    CHECK(std::abs(g.samples(k) - Complex(std::cos(theta), std::sin(theta))) < 1e-12);
  }

  FourierCoeffs cosx(2);
  cosx.set(group_element({1, 0}), 1.0);
  cosx.set(group_element({-1, 0}), 1.0);
  g = eval_grid(cosx, 8);
  VectorXc oracle = direct_eval(cosx, 8);
  CHECK((g.samples - oracle).cwiseAbs().maxCoeff() < 1e-12);
  // 2cos(t1): the value at grid index (1,0) is 2cos(2*pi/8)
  CHECK(g.samples(8).real() == Approx(2.0 * std::cos(2.0 * std::numbers::pi / 8.0)));

  Rng rng(11);
  for (int dim : {1, 2, 3}) {
    FourierCoeffs f = random_poly(rng, dim, 3, 5);
    GridFunction grid = eval_grid(f, 16);
    CHECK((grid.samples - direct_eval(f, 16)).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("aliasing grids are rejected") {
  FourierCoeffs f = FourierCoeffs::delta(group_element({5}), 1.0);
  CHECK_THROWS_AS(eval_grid(f, 8), InvalidInput);   // 8 <= 2*5
  CHECK_THROWS_AS(eval_grid(f, 12), InvalidInput);  // not a power of two
  CHECK_NOTHROW(eval_grid(f, 16));
}

TEST_CASE("coefficients round-trip through the grid") {
  Rng rng(22);
  for (int dim : {1, 2}) {
    for (int trial = 0; trial < 5; ++trial) {
      FourierCoeffs f = random_poly(rng, dim, 4, 6);
      FourierCoeffs back = extract_coeffs(eval_grid(f, 16));
      CHECK(f.almost_equal(back, 1e-10));
    }
  }
}

TEST_CASE("Parseval holds on alias-free grids") {
  Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    FourierCoeffs f = random_poly(rng, 2, 3, 6);
    double coeff_energy = 0;
    for (const auto& [n, c] : f.entries()) coeff_energy += std::norm(c);
    GridFunction g = eval_grid(f, 16);
    double grid_energy = g.samples.cwiseAbs2().mean();
    CHECK(grid_energy == Approx(coeff_energy).epsilon(1e-10));
  }
}

TEST_CASE("projections split the spectrum by cone sign") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs f(1);
  f.set(group_element({-2}), 2.0);
  f.set(group_element({0}), 1.0);
  f.set(group_element({3}), Complex(0, 1));
  FourierCoeffs plus = project(f, lex1, HalfSpace::Plus);
  FourierCoeffs minus = project(f, lex1, HalfSpace::Minus);
  CHECK(plus.support_size() == 2);
  CHECK(plus.at(group_element({0})) == Complex(1.0));
  CHECK(plus.at(group_element({3})) == Complex(0, 1));
  CHECK(minus.support_size() == 1);
  CHECK(minus.at(group_element({-2})) == Complex(2.0));

  // idempotence and P+ + P- = id
  CHECK(project(plus, lex1, HalfSpace::Plus).almost_equal(plus, 0.0));
  CHECK((plus + minus).almost_equal(f, 0.0));

  OrderSpec lex2 = OrderSpec::lex(2);
  FourierCoeffs h(2);
  h.set(group_element({-1, 5}), 1.0);
  h.set(group_element({0, 2}), 1.0);
  FourierCoeffs hminus = project(h, lex2, HalfSpace::Minus);
  CHECK(hminus.support_size() == 1);
  CHECK(hminus.at(group_element({-1, 5})) == Complex(1.0));

  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    FourierCoeffs r = random_poly(rng, 2, 4, 6);
    CHECK((project(r, lex2, HalfSpace::Plus) + project(r, lex2, HalfSpace::Minus))
              .almost_equal(r, 0.0));
  }
}

TEST_CASE("conjugate function: cos goes to sin, constants vanish") {
  OrderSpec lex1 = OrderSpec::lex(1);
  FourierCoeffs cosf(1);
  cosf.set(group_element({1}), 0.5);
  cosf.set(group_element({-1}), 0.5);
  FourierCoeffs sinf = conjugate_function(cosf, lex1);
  // sin = (e^{i t} - e^{-i t}) / 2i
  CHECK(std::abs(sinf.at(group_element({1})) - Complex(0, -0.5)) < 1e-15);
  CHECK(std::abs(sinf.at(group_element({-1})) - Complex(0, 0.5)) < 1e-15);

  FourierCoeffs constant = FourierCoeffs::delta(group_element({0}), 3.0);
  CHECK(conjugate_function(constant, lex1).support_size() == 0);
}

TEST_CASE("conjugate-function identities hold coefficientwise") {
  Rng rng(55);
  for (int dim : {1, 2}) {
    OrderSpec spec = OrderSpec::lex(dim);
    GroupElement zero = GroupElement::Zero(dim);
    for (int trial = 0; trial < 10; ++trial) {
      FourierCoeffs psi = random_poly(rng, dim, 4, 7);
      FourierCoeffs tilde = conjugate_function(psi, spec);
      // i*tilde = 2 P+ psi - psi - psi^(0)
      FourierCoeffs lhs = Complex(0, 1) * tilde;
      FourierCoeffs rhs = Complex(2.0) * project(psi, spec, HalfSpace::Plus) + (-psi);
      rhs.add(zero, -psi.at(zero));
      CHECK(lhs.almost_equal(rhs, 1e-12));
      // P+ psi = (psi + i*tilde + psi^(0)) / 2
      FourierCoeffs sum = psi + lhs;
      sum.add(zero, psi.at(zero));
      CHECK((Complex(0.5) * sum).almost_equal(project(psi, spec, HalfSpace::Plus), 1e-12));
      // real u: u + i*conj(u) is analytic
      FourierCoeffs u(dim);
      for (const auto& [n, c] : psi.entries()) {
        u.add(n, c / 2.0);
        u.add(-n, std::conj(c) / 2.0);
      }
      FourierCoeffs analytic = u + Complex(0, 1) * conjugate_function(u, spec);
      CHECK(project(analytic, spec, HalfSpace::Minus).support_size() == 0);
    }
  }
}

TEST_CASE("flip is the coefficient involution") {
  FourierCoeffs f(2);
  f.set(group_element({-1, 3}), Complex(2, -1));
  FourierCoeffs jf = flip(f);
  CHECK(jf.at(group_element({1, -3})) == Complex(2, -1));
  CHECK(flip(jf).almost_equal(f, 0.0));

  FourierCoeffs one = FourierCoeffs::delta(group_element({1}), 1.0);
  CHECK(flip(one).at(group_element({-1})) == Complex(1.0));
}

TEST_CASE("convolution is the coefficient product and matches the grid") {
  FourierCoeffs delta0 = FourierCoeffs::delta(group_element({0}), 1.0);
  FourierCoeffs dm1 = FourierCoeffs::delta(group_element({-1}), 1.0);
  CHECK(convolve(delta0, dm1).almost_equal(dm1, 0.0));
  CHECK(convolve(dm1, delta0).at(group_element({-1})) == Complex(1.0));

  Rng rng(66);
  for (int trial = 0; trial < 5; ++trial) {
    FourierCoeffs nu = random_poly(rng, 2, 3, 5);
    FourierCoeffs f = random_poly(rng, 2, 3, 5);
    FourierCoeffs conv = convolve(nu, f);
    // Fourier exchange: synthesis of the convolution = pointwise product
    GridFunction left = eval_grid(conv, 32);
    VectorXc right = eval_grid(nu, 32).samples.cwiseProduct(eval_grid(f, 32).samples);
    CHECK((left.samples - right).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(convolve(f, nu).almost_equal(conv, 1e-13));
  }
}

TEST_CASE("sup-norm brackets: grid max below l1, certified bound above truth") {
  FourierCoeffs three = FourierCoeffs::delta(group_element({0}), 3.0);
  SupNormBracket b = sup_norm_estimate(three);
  CHECK(b.grid_max == Approx(3.0));
  CHECK(b.l1_bound == Approx(3.0));

  FourierCoeffs twocos(1);
  twocos.set(group_element({1}), 1.0);
  twocos.set(group_element({-1}), 1.0);
  b = sup_norm_estimate(twocos);
  CHECK(b.grid_max == Approx(2.0));
  CHECK(b.l1_bound == Approx(2.0));

  // |e^{it} - e^{2it}| = 2|sin(t/2)| peaks at 2
  FourierCoeffs diff(1);
  diff.set(group_element({1}), 1.0);
  diff.set(group_element({2}), -1.0);
  b = sup_norm_estimate(diff, 16);
  CHECK(b.grid_max == Approx(2.0).epsilon(1e-3));
  CHECK(b.grid_max <= 2.0 + 1e-12);
  CHECK(b.l1_bound == Approx(2.0));

  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    FourierCoeffs f = random_poly(rng, 1, 6, 5);
    SupNormBracket est = sup_norm_estimate(f, 8);
    SupNormBracket fine = sup_norm_estimate(f, 64);
    CHECK(est.grid_max <= est.l1_bound + 1e-12);
    CHECK(est.grid_max <= fine.grid_max + 1e-12);       // coarse grid underestimates
    CHECK(fine.grid_max <= est.certified_sup + 1e-12);  // certified bound holds
  }
}

TEST_CASE("algebra membership reads the support pattern") {
  OrderSpec lex2 = OrderSpec::lex(2);
  FourierCoeffs onaxis(2);
  onaxis.set(group_element({0, -1}), 1.0);
  onaxis.set(group_element({0, -3}), 0.5);
  CHECK(algebra_membership(onaxis, lex2, SymbolAlgebra::K1).member);
  CHECK(algebra_membership(onaxis, lex2, SymbolAlgebra::Ce).member);
  CHECK_FALSE(algebra_membership(onaxis, lex2, SymbolAlgebra::Hinf).member);

  FourierCoeffs off = FourierCoeffs::delta(group_element({-1, 5}), 1.0);
  auto res = algebra_membership(off, lex2, SymbolAlgebra::K1);
  CHECK_FALSE(res.member);
  REQUIRE(res.witness.has_value());
  CHECK(*res.witness == group_element({-1, 5}));

  FourierCoeffs constant = FourierCoeffs::delta(group_element({0, 0}), 1.0);
  CHECK(algebra_membership(constant, lex2, SymbolAlgebra::Ce).member);
  CHECK_FALSE(algebra_membership(constant, lex2, SymbolAlgebra::K1).member);
  CHECK(algebra_membership(constant, lex2, SymbolAlgebra::Hinf).member);

  // positive multiples of chi1 are not in Ce
  FourierCoeffs pos = FourierCoeffs::delta(group_element({0, 2}), 1.0);
  CHECK_FALSE(algebra_membership(pos, lex2, SymbolAlgebra::Ce).member);

  // no smallest positive element: Ce/K1 undefined
  OrderSpec quad = OrderSpec::quadratic(2);
  FourierCoeffs c2 = FourierCoeffs::delta(group_element({0, 0}), 1.0);
  CHECK_THROWS_AS(algebra_membership(c2, quad, SymbolAlgebra::K1), InvalidInput);
}

TEST_CASE("tiny coefficients are pruned by arithmetic") {
  FourierCoeffs f(1);
  f.set(group_element({2}), 1e-15);
  CHECK(f.support_size() == 0);
  f.set(group_element({2}), 1.0);
  f.add(group_element({2}), -1.0 + 1e-16);
  CHECK(f.support_size() == 0);
}
