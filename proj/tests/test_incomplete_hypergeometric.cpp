#include <cmath>
#include <numbers>

#include "inchyp/hypergeometric.hpp"
#include "inchyp/incomplete_beta.hpp"
#include "inchyp/incomplete_hypergeometric.hpp"
#include "support.hpp"

using namespace inchyp;
using testing_support::Gen;

namespace {

double f21(Hyp2F1Params p, Method m = Method::automatic) { return ihyp_2f1(p, m).value; }
double f11(Hyp1F1Params p, Method m = Method::automatic) { return ihyp_1f1(p, m).value; }

}  // namespace

TEST(Incomplete2F1, Examples) {
  EXPECT_NEAR(f21({1.0, 1.0, 2.0, 0.5, 0.5, Variant::lower}), -std::log(0.75) / 0.5, 1e-13);
  EXPECT_NEAR(f21({0.9, 1.4, 3.3, 0.6, 0.0, Variant::lower}), regularized_incomplete_beta(0.6, 1.4, 1.9), 1e-15);
  EXPECT_EQ(f21({0.9, 1.4, 3.3, 0.0, 0.4, Variant::lower}), 0.0);
  EXPECT_REL(f21({0.9, 1.4, 3.3, 0.0, 0.4, Variant::upper}), complete_2f1(0.9, 1.4, 3.3, 0.4).value, 1e-14);
  const Hyp2F1Params p{0.7, 1.3, 3.1, 0.4, 0.6, Variant::lower};
  EXPECT_REL(f21(p, Method::series), f21(p, Method::integral), 1e-9);
}

TEST(Incomplete2F1, MatchesHighPrecisionQuadrature) {
  // mpmath quad of the Euler integral at 30 digits
  EXPECT_REL(f21({0.7, 1.3, 3.1, 0.4, 0.6, Variant::lower}), 0.55208904405696853958, 1e-12);
  EXPECT_REL(f21({0.7, 1.3, 3.1, 0.4, 0.6, Variant::upper}), 0.70425917260934128375, 1e-12);
  EXPECT_REL(f21({2.5, 0.6, 1.9, 0.7, -0.8, Variant::upper}), 0.035344110846652229149, 1e-11);
  EXPECT_REL(f21({1.2, 2.2, 4.0, 0.9, 0.95, Variant::lower}), 2.8816060854445863783, 1e-11);
}

TEST(Incomplete2F1, DomainErrors) {
  EXPECT_THROW(f21({1.0, 2.0, 1.5, 0.5, 0.5, Variant::lower}), domain_error);
  EXPECT_THROW(f21({1.0, 1.0, 2.0, 0.5, 2.5, Variant::lower}), domain_error);
  EXPECT_THROW(f21({1.0, 1.0, 2.0, 0.5, 1.0, Variant::upper}), domain_error);
}

TEST(Incomplete2F1, LowerAllowsArgumentsBeyondOneWhenCutoffIsSmall) {
  // x y < 1 suffices for the lower function
  const Hyp2F1Params p{1.0, 1.0, 2.0, 0.25, 3.0, Variant::lower};
  EXPECT_REL(f21(p), -std::log1p(-0.75) / 3.0, 1e-12);
}

TEST(Incomplete1F1, Examples) {
  EXPECT_NEAR(f11({1.0, 2.0, 0.5, 1.0, Variant::lower}), std::exp(0.5) - 1.0, 1e-14);
  EXPECT_NEAR(f11({1.0, 2.0, 0.5, 1.0, Variant::upper}), std::numbers::e - std::exp(0.5), 1e-13);
  EXPECT_NEAR(f11({1.3, 2.9, 0.35, 0.0, Variant::lower}), regularized_incomplete_beta(0.35, 1.3, 1.6), 1e-15);
}

TEST(Incomplete1F1, MatchesHighPrecisionQuadrature) {
  EXPECT_REL(f11({0.8, 2.1, 0.35, -4.0, Variant::lower}), 0.30339171064860023724, 1e-12);
  EXPECT_REL(f11({0.8, 2.1, 0.35, -4.0, Variant::upper}), 0.050564155022319392352, 1e-11);
  EXPECT_REL(f11({1.5, 1.9, 0.6, 3.0, Variant::upper}), 12.229600900630839421, 1e-12);
}

TEST(IncompleteProperty, DecompositionsAndDualPaths) {
  Gen g(201);
  for (int i = 0; i < 150; ++i) {
    const double a = g.uniform(0.1, 3.0), b = g.uniform(0.1, 4.0), c = b + g.uniform(0.1, 4.0);
    const double x = g.uniform(-0.9, 0.9), y = g.uniform(0.05, 0.95);
    const double lo = f21({a, b, c, y, x, Variant::lower});
    const double up = f21({a, b, c, y, x, Variant::upper});
    EXPECT_REL(lo + up, complete_2f1(a, b, c, x).value, 1e-10);
    for (Variant v : {Variant::lower, Variant::upper}) {
      const Hyp2F1Params p{a, b, c, y, x, v};
      EXPECT_REL(f21(p, Method::series), f21(p, Method::integral), 1e-9);
    }
  }
  for (int i = 0; i < 150; ++i) {
    const double a = g.uniform(0.1, 5.0), b = a + g.uniform(0.1, 5.0);
    const double x = g.uniform(-5.0, 5.0), y = g.uniform(0.05, 0.95);
    const double lo = f11({a, b, y, x, Variant::lower});
    const double up = f11({a, b, y, x, Variant::upper});
    EXPECT_REL(lo + up, complete_1f1(a, b, x).value, 1e-10);
    for (Variant v : {Variant::lower, Variant::upper}) {
      const Hyp1F1Params p{a, b, y, x, v};
      EXPECT_REL(f11(p, Method::series), f11(p, Method::integral), 1e-9);
    }
  }
}

TEST(IncompleteProperty, PositiveArgumentsGivePositiveValuesAndGrowWithCutoff) {
  Gen g(202);
  for (int i = 0; i < 40; ++i) {
    const double a = g.uniform(0.1, 2.0), b = g.uniform(0.1, 3.0), c = b + g.uniform(0.1, 3.0);
    const double x = g.uniform(0.0, 0.9);
    double prev = 0.0;
    for (int k = 1; k < 10; ++k) {
      const double v = f21({a, b, c, 0.1 * k, x, Variant::lower});
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(AtOne, Examples) {
  EXPECT_REL(ihyp_2f1_at_one(Variant::lower, 1.0, 1.0, 3.0, 0.3).value, 0.6, 1e-11);
  EXPECT_REL(ihyp_2f1_at_one(Variant::upper, 1.0, 1.0, 3.0, 0.3).value, 1.4, 1e-11);
  // the truncated series at x = 1 itself, summed term by term
  double s = 0.0;
  for (int n = 0; n < 4000; ++n) s += ratio({1.0, 3.0, static_cast<std::uint64_t>(n), 0.3, Variant::lower}).value;
  EXPECT_NEAR(s, 0.6, 1e-12);
}

TEST(AtOne, ApproachesGaussSummationNearOne) {
  const double a = 0.5, b = 0.7, c = 2.9;
  EXPECT_REL(ihyp_2f1_at_one(Variant::lower, a, b, c, 1.0 - 1e-9).value, 1.2131922680225804115, 1e-5);
  EXPECT_REL(gauss_summation(a, b, c), 1.2131922680225804115, 1e-13);
}

TEST(AtOne, AgreesWithEulerQuadrature) {
  Gen g(203);
  for (int i = 0; i < 60; ++i) {
    const double a = g.uniform(-1.0, 2.0), b = g.uniform(0.2, 3.0);
    const double s = std::max(g.uniform(0.2, 3.0), 0.2 - a);
    const double c = a + b + s, y = g.uniform(0.05, 0.95);
    const double lb = log_beta(b, c - b);
    EXPECT_REL(ihyp_2f1_at_one(Variant::lower, a, b, c, y).value,
               incomplete_beta_quadrature(y, b, s).value * std::exp(-lb), 1e-8);
    EXPECT_REL(ihyp_2f1_at_one(Variant::upper, a, b, c, y).value,
               incomplete_beta_quadrature(1.0 - y, s, b).value * std::exp(-lb), 1e-8);
  }
}

TEST(AtOne, RequiresConvergentCase) {
  EXPECT_THROW(ihyp_2f1_at_one(Variant::lower, 1.0, 1.0, 2.0, 0.5), domain_error);
}

TEST(DerivativeShift, Examples) {
  const auto s = derivative_shift(Hyp2F1Params{1.0, 1.0, 2.0, 0.5, 0.2, Variant::lower}, 1);
  EXPECT_DOUBLE_EQ(s.coefficient, 0.5);
  EXPECT_EQ(s.shifted_2f1.a, 2.0);
  EXPECT_EQ(s.shifted_2f1.b, 2.0);
  EXPECT_EQ(s.shifted_2f1.c, 3.0);
  const auto k = derivative_shift(Hyp1F1Params{1.0, 2.0, 0.5, 0.2, Variant::lower}, 2);
  EXPECT_DOUBLE_EQ(k.coefficient, 1.0 / 3.0);
  EXPECT_EQ(k.shifted_1f1.a, 3.0);
  EXPECT_EQ(k.shifted_1f1.b, 4.0);
}

TEST(DerivativeShift, ClosedFormFiniteDifference) {
  // d/dx[-ln(1 - x/2)/x] at 0.2 vs 0.5·2F1(2,[2,3;0.5];0.2)
  auto g = [](double x) { return -std::log1p(-0.5 * x) / x; };
  const double h = 1e-4;
  const double fd = (g(0.2 + h) - g(0.2 - h)) / (2.0 * h);
  EXPECT_NEAR(fd, 0.5 * f21({2.0, 2.0, 3.0, 0.5, 0.2, Variant::lower}), 1e-6);
}

TEST(DerivativeShift, PropertyOverGrid) {
  Gen g(204);
  for (int i = 0; i < 30; ++i) {
    const double a = g.uniform(0.1, 2.0), b = g.uniform(0.1, 3.0), c = b + g.uniform(0.1, 3.0);
    const double x = g.uniform(-0.5, 0.5), y = g.uniform(0.1, 0.9);
    const Variant v = i % 2 == 0 ? Variant::lower : Variant::upper;
    EXPECT_LE(std::abs(derivative_shift_residual(Hyp2F1Params{a, b, c, y, x, v}, 1, 1e-3)), 1e-6);
    EXPECT_LE(std::abs(derivative_shift_residual(Hyp2F1Params{a, b, c, y, x, v}, 2, 1e-2)), 1e-6);
    const double bb = a + g.uniform(0.1, 3.0), xx = g.uniform(-2.0, 2.0);
    EXPECT_LE(std::abs(derivative_shift_residual(Hyp1F1Params{a, bb, y, xx, v}, 1, 1e-3)), 1e-6);
    EXPECT_LE(std::abs(derivative_shift_residual(Hyp1F1Params{a, bb, y, xx, v}, 2, 1e-2)), 1e-6);
  }
}

TEST(Transform, Examples) {
  const TransformParams pf{1.0, 1.0, 2.0, 0.5, 0.4};
  const double expect = -std::log1p(-0.2) / 0.4;
  EXPECT_NEAR(transform_lhs(TransformKind::pf_lower, pf).value, expect, 1e-13);
  EXPECT_NEAR(transform(TransformKind::pf_lower, pf).value, expect, 1e-12);
  const TransformParams k{1.0, 2.0, 0.0, 0.5, 1.0};
  EXPECT_NEAR(transform(TransformKind::kummer_lower, k).value, std::exp(0.5) - 1.0, 1e-13);
}

TEST(Transform, ZeroArgumentGivesRegularizedBeta) {
  const TransformParams p{1.3, 0.8, 2.6, 0.35, 0.0};
  for (TransformKind kind : {TransformKind::pf_lower, TransformKind::pf_upper}) {
    EXPECT_REL(transform(kind, p).value, transform_lhs(kind, p).value, 1e-13);
  }
  EXPECT_NEAR(transform(TransformKind::pf_lower, p).value, regularized_incomplete_beta(0.35, 0.8, 1.8), 1e-14);
  const TransformParams q{0.8, 2.6, 0.0, 0.35, 0.0};
  EXPECT_NEAR(transform(TransformKind::kummer_lower, q).value, regularized_incomplete_beta(0.35, 0.8, 1.8), 1e-14);
}

TEST(Transform, PropertyBothSidesAgree) {
  Gen g(205);
  for (TransformKind kind : {TransformKind::pf_lower, TransformKind::pf_upper, TransformKind::kummer_upper,
                             TransformKind::kummer_lower}) {
    const bool pf = kind == TransformKind::pf_lower || kind == TransformKind::pf_upper;
    for (int i = 0; i < 40; ++i) {
      TransformParams p;
      p.alpha = g.uniform(0.1, 3.0);
      p.beta = pf ? g.uniform(0.1, 4.0) : p.alpha + g.uniform(0.1, 4.0);
      p.gamma = p.beta + g.uniform(0.1, 4.0);
      p.y = g.uniform(0.05, 0.95);
      p.z = pf ? g.uniform(-3.0, 0.9) : g.uniform(-5.0, 5.0);
      EXPECT_REL(transform_lhs(kind, p).value, transform(kind, p).value, 1e-9) << to_string(kind);
    }
  }
}

TEST(Transform, ParseKinds) {
  EXPECT_EQ(parse_transform_kind("kummer_upper"), TransformKind::kummer_upper);
  EXPECT_THROW(parse_transform_kind("euler"), std::invalid_argument);
}

TEST(DifferenceRelation, ReportsFiniteResiduals) {
  // The relation is checked, not asserted: the residual is large for x != 0.
  const double r1 = difference_relation_residual(1.0, 2.0, 2.0, 0.5, 0.3);
  const double r2 = difference_relation_residual(0.5, 3.0, 1.5, 0.25, 0.5);
  EXPECT_TRUE(std::isfinite(r1));
  EXPECT_TRUE(std::isfinite(r2));
  EXPECT_GT(std::abs(r1), 1e-3);
  EXPECT_EQ(r1, difference_relation_residual(1.0, 2.0, 2.0, 0.5, 0.3));
  EXPECT_THROW(difference_relation_residual(1.0, 0.5, 2.0, 0.5, 0.3), domain_error);
}

TEST(YMoment, AnalyticCase) {
  // ∫₀¹ -ln(1 - xy)/x dy = [(1-x)ln(1-x) + x]/x² at x = 1/2
  const double x = 0.5;
  const double exact = ((1.0 - x) * std::log1p(-x) + x) / (x * x);
  EXPECT_NEAR(exact, 0.6137056388801094, 1e-15);
  const auto m = y_moment_residual(MomentKind::raised_c, 1, 1.0, 1.0, 2.0, 0.5);
  EXPECT_NEAR(m.lhs, exact, 1e-10);
  EXPECT_NEAR(m.rhs, exact, 1e-12);
  const auto c = y_moment_residual(MomentKind::raised_c_unit, 1, 1.0, 1.0, 2.0, 0.5);
  EXPECT_NEAR(c.rhs, 1.2274112777602189, 1e-12);
  EXPECT_NEAR(c.residual, 0.0, 1e-9);
}

TEST(YMoment, RelationsThatHold) {
  for (std::uint64_t k : {1u, 2u, 3u}) {
    EXPECT_NEAR(y_moment_residual(MomentKind::lowered_c, k, 0.7, 1.3, 5.1, 0.4).residual, 0.0, 1e-9);
    EXPECT_NEAR(y_moment_residual(MomentKind::lowered_c, k, 1.5, 0.6, 4.2, -0.5).residual, 0.0, 1e-9);
  }
  EXPECT_NEAR(y_moment_residual(MomentKind::lowered_c_unit, 1, 0.7, 1.3, 5.1, 0.4).residual, 0.0, 1e-9);
  EXPECT_NEAR(y_moment_residual(MomentKind::raised_c, 1, 0.7, 1.3, 3.1, 0.4).residual, 0.0, 1e-9);
  EXPECT_NEAR(y_moment_residual(MomentKind::raised_c_unit, 1, 0.7, 1.3, 3.1, 0.4).residual, 0.0, 1e-9);
}

TEST(YMoment, HigherMomentsFollowIntegrationByParts) {
  // For k >= 2 the moment equals (1/k)[2F1(a,b;c;x) - (b)_k/(c)_k 2F1(a,b+k;c+k;x)],
  // not the single-term closed form.
  const auto m = y_moment_residual(MomentKind::raised_c, 2, 0.7, 1.3, 3.1, 0.4);
  EXPECT_NEAR(m.lhs, m.rhs_integration_by_parts, 1e-10);
  EXPECT_NEAR(m.lhs, 0.427485, 1e-6);
  EXPECT_NEAR(m.rhs, 0.214615, 1e-6);
}

TEST(YMoment, BetaMomentsAtZeroArgument) {
  // ∫₀¹ y^{k-1} I_y(b, c-b) dy by a second, independent quadrature
  const double b = 1.5, c = 4.0;
  for (std::uint64_t k : {1u, 2u, 3u}) {
    const double kk = static_cast<double>(k);
    const double direct =
        adaptive_integrate([&](double y) { return std::pow(y, kk - 1.0) * regularized_incomplete_beta(y, b, c - b); },
                           0.0, 1.0)
            .value;
    const auto m = y_moment_residual(MomentKind::raised_c, k, 1.0, b, c, 0.0);
    EXPECT_NEAR(m.lhs, direct, 1e-9);
    EXPECT_NEAR(m.rhs_integration_by_parts, direct, 1e-9);
  }
}
