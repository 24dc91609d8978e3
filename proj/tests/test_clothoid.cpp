#include "spiralkit/clothoid.hpp"
#include "spiralkit/selftest.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>

using namespace spiralkit;

TEST(Fresnel, Origin)
{
    const FresnelValue f = fresnel(0.0);
    EXPECT_EQ(f.C, 0.0);
    EXPECT_EQ(f.S, 0.0);
}

TEST(Fresnel, KnownValues)
{
    const FresnelValue f = fresnel(1.0);
    EXPECT_NEAR(f.C, 0.7798934003768228, 1e-12);
    EXPECT_NEAR(f.S, 0.4382591473903548, 1e-12);

    const double t = 20.0;
    const FresnelValue g = fresnel(t);
    EXPECT_NEAR(g.C, 0.5 + std::sin(kPi * t * t / 2) / (kPi * t), 1e-4);
    EXPECT_NEAR(g.S, 0.5 - std::cos(kPi * t * t / 2) / (kPi * t), 1e-4);
}

TEST(Fresnel, OddSymmetry)
{
    for (double t : {0.3, 1.2, 2.7, 9.0})
    {
        const FresnelValue a = fresnel(t), b = fresnel(-t);
        EXPECT_EQ(a.C, -b.C);
        EXPECT_EQ(a.S, -b.S);
    }
}

TEST(Fresnel, MatchesQuadrature)
{
    for (int i = 0; i <= 200; ++i)
    {
        const double t = -20.0 + 40.0 * i / 200.0;
        const FresnelValue f = fresnel(t);
        const auto [c, s] = selftest::oracle::fresnel_quadrature(t);
        EXPECT_NEAR(f.C, c, 1e-10) << t;
        EXPECT_NEAR(f.S, s, 1e-10) << t;
    }
}

TEST(Fresnel, BranchesAgreeNearSwitch)
{
    for (double t : {1.4, 1.5, 1.6, 1.7, 1.8})
    {
        const FresnelValue a = fresnel_series(t), b = fresnel_auxiliary(t);
        EXPECT_NEAR(a.C, b.C, 1e-12) << t;
        EXPECT_NEAR(a.S, b.S, 1e-12) << t;
    }
}

TEST(ClothoidElement, CurvatureAndTangent)
{
    const CurvatureElement e = clothoid_element(2.0, 3.0);
    EXPECT_NEAR(e.k, 3.0 / 4.0, 1e-15);
    EXPECT_NEAR(e.tau, 9.0 / 8.0, 1e-15);
    const CurvatureElement o = clothoid_element(2.0, 0.0);
    EXPECT_EQ(o.x, 0.0);
    EXPECT_EQ(o.y, 0.0);
}

TEST(ClothoidElement, TangentMatchesDerivative)
{
    const double a = 1.3, h = 1e-5;
    for (double s : {-2.0, -0.4, 0.7, 3.1})
    {
        const Point d = (clothoid_element(a, s + h).point() - clothoid_element(a, s - h).point()) * (0.5 / h);
        const double tau = clothoid_element(a, s).tau;
        EXPECT_NEAR(d.x, std::cos(tau), 1e-8);
        EXPECT_NEAR(d.y, std::sin(tau), 1e-8);
    }
}

TEST(SampleClothoid, Errors)
{
    auto kind = [](const ClothoidSpec& spec) -> std::optional<ErrorKind> {
        try
        {
            sample_clothoid(spec);
        }
        catch (const Error& e)
        {
            return e.kind();
        }
        return std::nullopt;
    };
    EXPECT_EQ(kind({1, 0, 1, 8}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind({0, 0, 1, 100}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind({-1, 0, 1, 100}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind({1, 1, 1, 100}), ErrorKind::InvalidInput);
    EXPECT_EQ(kind({1, 0, 20, 20}), ErrorKind::ResolutionTooCoarse);
}

TEST(SampleClothoid, Layout)
{
    const SampledSpiral c = sample_clothoid({1.0, 0.5, 2.0, 100});
    ASSERT_EQ(c.size(), 100u);
    EXPECT_EQ(c[0].s, 0.0);
    EXPECT_NEAR(c[c.last()].s, 1.5, 1e-14);
    EXPECT_EQ(c.monotonicity(), Monotonicity::Increasing);
    for (std::size_t i = 0; i < c.size(); ++i)
    {
        const CurvatureElement e = clothoid_element(1.0, 0.5 + c[i].s);
        EXPECT_NEAR(c[i].x, e.x, 1e-14);
        EXPECT_NEAR(c[i].y, e.y, 1e-14);
        EXPECT_NEAR(c[i].k_left, e.k, 1e-14);
    }
}

TEST(SampleClothoid, ChordLengthsApproachArclength)
{
    const SampledSpiral c = sample_clothoid({1.0, -1.0, 2.0, 3000});
    double chords = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i)
        chords += distance(c[i - 1].point(), c[i].point());
    EXPECT_NEAR(chords, 3.0, 1e-6);
}

TEST(SampleClothoid, SymmetricSpan)
{
    const CumulativeAngles ca = cumulative_angles(sample_clothoid({1.0, -2.0, 2.0, 400}));
    EXPECT_NEAR(ca.alpha_tilde, ca.beta_tilde, 1e-9);
}

TEST(SampleClothoid, TurningMatchesAnalytic)
{
    const double a = 1.4, s0 = -1.0, s1 = 5.0;
    const CumulativeAngles ca = cumulative_angles(sample_clothoid({a, s0, s1, 3000}));
    EXPECT_NEAR(ca.rho, (s1 * s1 - s0 * s0) / (2 * a * a), 1e-9);
}

TEST(SampleClothoid, ShortAndLong)
{
    EXPECT_TRUE(is_short(sample_clothoid({1.0, 0.0, 1.5, 200})));
    EXPECT_FALSE(is_short(sample_clothoid({1.0, 0.0, 6.5, 2000})));
}

TEST(SampleClothoid, PairwiseQNonPositive)
{
    const double a = 1.0;
    for (int i = 0; i <= 20; ++i)
        for (int j = i + 1; j <= 20; ++j)
        {
            const double si = -3.0 + 6.0 * i / 20.0, sj = -3.0 + 6.0 * j / 20.0;
            EXPECT_LT(q_invariant(clothoid_element(a, si), clothoid_element(a, sj)), 1e-9) << si << " " << sj;
        }
}
