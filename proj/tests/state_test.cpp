#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "qam/error.hpp"
#include "qam/random.hpp"
#include "qam/state.hpp"
#include "test_support.hpp"

namespace qam {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const Complex kI(0.0, 1.0);

TEST(InnerProductTest, OrthogonalBasisVectors) {
  EXPECT_EQ(inner_product({1.0, 0.0}, {0.0, 1.0}), Complex(0.0));
  EXPECT_EQ(inner_product({1.0, 0.0}, {1.0, 0.0}), Complex(1.0));
}

TEST(InnerProductTest, ConjugatesSecondArgument) {
  const Complex got = inner_product({kInvSqrt2, kI * kInvSqrt2}, {0.0, 1.0});
  EXPECT_NEAR(got.real(), 0.0, 1e-15);
  EXPECT_NEAR(got.imag(), kInvSqrt2, 1e-15);
  // Swapping the arguments conjugates the result.
  const Complex swapped = inner_product({0.0, 1.0}, {kInvSqrt2, kI * kInvSqrt2});
  EXPECT_NEAR(swapped.imag(), -kInvSqrt2, 1e-15);
}

TEST(InnerProductTest, DimensionMismatchThrows) {
  EXPECT_THROW(inner_product({1.0, 0.0}, {1.0, 0.0, 0.0}), DimensionError);
}

TEST(StateVectorTest, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(StateVector(std::vector<Complex>{}), DimensionError);
  EXPECT_THROW((StateVector{1.0, std::numeric_limits<double>::quiet_NaN()}), PreconditionError);
  EXPECT_THROW((StateVector{Complex(0.0, std::numeric_limits<double>::infinity())}),
               PreconditionError);
}

TEST(NormTest, Examples) {
  EXPECT_DOUBLE_EQ(norm({3.0, 4.0}), 5.0);
  EXPECT_EQ(norm({0.0, 0.0}), 0.0);
  EXPECT_NEAR(norm({kInvSqrt2, kI * kInvSqrt2}), 1.0, 1e-15);
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(normalize({2.0, 0.0}).vector(), (StateVector{1.0, 0.0}));
  const UnitState s = normalize({1.0, 1.0});
  EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
  EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-15);
  EXPECT_THROW(normalize({0.0, 0.0}), ZeroVectorError);
  EXPECT_THROW(normalize({1e-13, 0.0}), ZeroVectorError);
}

TEST(UnitStateTest, AdmissionTolerance) {
  EXPECT_NO_THROW(UnitState(StateVector{1.0 + 5e-10, 0.0}));
  EXPECT_THROW(UnitState(StateVector{1.0 + 5e-9, 0.0}), NormError);
  EXPECT_THROW(UnitState(StateVector{0.5, 0.5}), NormError);
}

TEST(TransitionProbabilityTest, SameRayIsOne) {
  const UnitState psi = normalize({0.3, Complex(0.2, -0.5), 0.7});
  const UnitState phi = normalize(Complex(2.0, 3.0) * psi.vector());
  EXPECT_NEAR(transition_probability(phi, psi), 1.0, 1e-12);
}

TEST(TransitionProbabilityTest, OrthogonalIsZero) {
  EXPECT_EQ(transition_probability({1.0, 0.0}, {0.0, 1.0}), 0.0);
}

TEST(TransitionProbabilityTest, DirectSubstitution) {
  EXPECT_NEAR(transition_probability({0.6, 0.8}, {1.0, 0.0}), 0.36, 1e-15);
}

TEST(TransitionProbabilityTest, GeneralDenominatorForUnnormalizedInputs) {
  // |<psi|phi>|^2 / (<psi|psi><phi|phi>) with phi = (3, 4), psi = (2, 0).
  EXPECT_NEAR(transition_probability({3.0, 4.0}, {2.0, 0.0}), 36.0 / (4.0 * 25.0), 1e-15);
  EXPECT_THROW(transition_probability({0.0, 0.0}, {1.0, 0.0}), ZeroVectorError);
  EXPECT_THROW(transition_probability({1.0, 0.0}, {1.0, 0.0, 0.0}), DimensionError);
}

TEST(ProjectorTest, Examples) {
  const UnitState e0(StateVector{1.0, 0.0});
  EXPECT_EQ(apply_projector(e0, {0.6, 0.8}), (StateVector{0.6, 0.0}));
  EXPECT_EQ(apply_projector(e0, {0.0, 1.0}), (StateVector{0.0, 0.0}));
  const StateVector half = apply_projector(normalize({1.0, 1.0}), {1.0, 0.0});
  EXPECT_NEAR(half[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(half[1].real(), 0.5, 1e-15);
}

TEST(RayEqualTest, Examples) {
  EXPECT_TRUE(ray_equal({1.0, 0.0}, {5.0 * kI, 0.0}, 1e-9));
  EXPECT_FALSE(ray_equal({1.0, 0.0}, {0.0, 1.0}, 1e-9));
  EXPECT_TRUE(ray_equal({1.0, 1e-12}, {1.0, 0.0}, 1e-9));
  EXPECT_THROW(ray_equal({0.0, 0.0}, {1.0, 0.0}, 1e-9), ZeroVectorError);
}

TEST(CanonicalRayTest, FirstSignificantAmplitudeRealPositive) {
  const StateVector v{0.0, Complex(0.0, -2.0), Complex(1.0, 1.0)};
  const StateVector c = canonical_ray(v);
  EXPECT_EQ(c[1], Complex(2.0, 0.0));
  EXPECT_TRUE(ray_equal(c, v, 1e-15));
  EXPECT_EQ(canonical_ray(c), c);
  EXPECT_EQ(canonical_ray({-0.6, 0.8}), (StateVector{0.6, -0.8}));
}

TEST(FieldTest, ParseAndFormat) {
  EXPECT_EQ(parse_field("real"), Field::kReal);
  EXPECT_EQ(parse_field("COMPLEX"), Field::kComplex);
  EXPECT_EQ(to_string(Field::kReal), "REAL");
  EXPECT_THROW(parse_field("quaternion"), FormatError);
}

// Property checks over random inputs.

class HilbertPropertyTest : public ::testing::TestWithParam<std::size_t> {};

TEST_P(HilbertPropertyTest, ConjugateSymmetryAndSesquilinearity) {
  const std::size_t dim = GetParam();
  Rng rng = make_stream(11, dim);
  testing::OracleGaussian g(dim);
  for (int trial = 0; trial < 50; ++trial) {
    const StateVector a = testing::oracle_vector(dim, true, g);
    const StateVector b = testing::oracle_vector(dim, true, g);
    const StateVector c = testing::oracle_vector(dim, true, g);
    const Complex alpha(g.gaussian(), g.gaussian());
    const Complex beta(g.gaussian(), g.gaussian());
    const double scale = norm(a) * norm(b) + norm(c) * (norm(a) + norm(b));
    EXPECT_LE(std::abs(inner_product(a, b) - std::conj(inner_product(b, a))), 1e-12 * scale);
    const Complex lhs = inner_product(alpha * a + beta * b, c);
    const Complex rhs = alpha * inner_product(a, c) + beta * inner_product(b, c);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * scale * (std::abs(alpha) + std::abs(beta)));
    EXPECT_NEAR(inner_product(a, a).imag(), 0.0, 1e-12 * norm(a) * norm(a));
  }
}

TEST_P(HilbertPropertyTest, UnitaryInvariance) {
  const std::size_t dim = GetParam();
  testing::OracleGaussian g(100 + dim);
  for (int trial = 0; trial < 20; ++trial) {
    const testing::RandomUnitary u(dim, 1000 + trial);
    const StateVector a = testing::oracle_vector(dim, true, g);
    const StateVector b = testing::oracle_vector(dim, true, g);
    EXPECT_LE(std::abs(inner_product(u.apply(a), u.apply(b)) - inner_product(a, b)),
              1e-10 * norm(a) * norm(b));
  }
}

TEST_P(HilbertPropertyTest, ProjectorIdempotentAndRayInvariant) {
  const std::size_t dim = GetParam();
  Rng rng = make_stream(5, dim);
  for (int trial = 0; trial < 50; ++trial) {
    const UnitState psi = random_unit_vector(dim, Field::kComplex, rng);
    const UnitState phi = random_unit_vector(dim, Field::kComplex, rng);
    const StateVector once = apply_projector(psi, phi);
    EXPECT_LE(testing::max_abs_diff(apply_projector(psi, once), once), 1e-12);

    const Complex lambda(uniform01(rng) - 0.5, 3.0 * uniform01(rng) + 0.1);
    const double p = transition_probability(phi, psi);
    EXPECT_NEAR(transition_probability(normalize(lambda * phi.vector()), psi), p, 1e-12);
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, HilbertPropertyTest, ::testing::Values(1, 2, 3, 8, 32));

}  // namespace
}  // namespace qam
