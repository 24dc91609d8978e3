#include "spiralkit/biarc.hpp"
#include "spiralkit/clothoid.hpp"
#include "spiralkit/selftest.hpp"
#include "spiralkit/vogt.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace spiralkit;

namespace
{

SampledSpiral sampled_arc(double xi, std::size_t n)
{
    const CurvatureElement a = boundary_arc(xi);
    const double len = arc_length_to(a, {1.0, 0.0});
    std::vector<Sample> out;
    for (std::size_t i = 0; i < n; ++i)
    {
        const double s = len * static_cast<double>(i) / static_cast<double>(n - 1);
        const CurvatureElement e = evaluate_arc(a, s);
        out.push_back({s, e.x, e.y, e.tau, a.k, a.k});
    }
    return SampledSpiral(std::move(out), true);
}

SampledSpiral clothoid(double s0, double s1, std::size_t n, double a = 1.0)
{
    return sample_clothoid({a, s0, s1, n});
}

// Brute-force crossings of the chord-line complements on a dense analytic sampling.
std::pair<int, int> complement_crossings(double a, double s0, double s1, int n)
{
    const Point p0 = clothoid_element(a, s0).point(), p1 = clothoid_element(a, s1).point();
    const double mu = std::atan2(p1.y - p0.y, p1.x - p0.x);
    const Point mid = 0.5 * (p0 + p1);
    const double c = 0.5 * distance(p0, p1);
    int left = 0, right = 0;
    Point prev = rotate(p0 - mid, -mu);
    for (int i = 1; i < n; ++i)
    {
        const Point q = rotate(clothoid_element(a, s0 + (s1 - s0) * i / n).point() - mid, -mu);
        if (i > 1 && prev.y * q.y < 0.0)
        {
            const double x = prev.x + (q.x - prev.x) * prev.y / (prev.y - q.y);
            if (x > c)
                ++right;
            else if (x < -c)
                ++left;
        }
        prev = q;
    }
    return {left, right};
}

} // namespace

TEST(SampledSpiral, Validation)
{
    EXPECT_THROW(SampledSpiral({{0, 0, 0, 0, 1, 1}}), Error);
    std::vector<Sample> ok{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1}};
    EXPECT_NO_THROW(SampledSpiral{ok});

    auto bad = ok;
    bad[0].s = 0.5;
    EXPECT_THROW(SampledSpiral{bad}, Error);

    bad = ok;
    bad[1].tau = 2.0;
    try
    {
        SampledSpiral{bad};
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.kind(), ErrorKind::ResolutionTooCoarse);
    }

    std::vector<Sample> zigzag{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1}, {2, 2, 0, 0, 0.5, 0.5}};
    EXPECT_THROW(SampledSpiral{zigzag}, Error);

    std::vector<Sample> flat{{0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0}};
    EXPECT_THROW(SampledSpiral{flat}, Error);
    EXPECT_NO_THROW(SampledSpiral(flat, true));
}

TEST(SampledSpiral, ReferenceIndex)
{
    const SampledSpiral c = clothoid(-2, 2, 401);
    EXPECT_EQ(c.reference_index(), 200u);
    EXPECT_TRUE(c.has_inflection());
    EXPECT_EQ(clothoid(0.5, 2, 100).reference_index(), 0u);
    EXPECT_EQ(clothoid(-2, -0.5, 100).reference_index(), 99u);
}

TEST(VogtSign, Examples)
{
    EXPECT_EQ(vogt_sign(0.3, 0.1, 0, 1), VogtSign::Consistent);
    EXPECT_EQ(vogt_sign(0.3, -0.3, 1, 1), VogtSign::Circular);
    EXPECT_EQ(vogt_sign(-0.5, 0.2, 0, 1), VogtSign::Inconsistent);
}

TEST(ShortBoundsCheck, Examples)
{
    EXPECT_TRUE(short_bounds_check({kPi, 0.1, -2, 0}));
    EXPECT_FALSE(short_bounds_check({-kPi, 0.1, -2, 0}));
    EXPECT_TRUE(short_bounds_check({0.4, -0.4, -std::sin(0.4), -std::sin(0.4)}));
}

TEST(CumulativeAngles, CircularArc)
{
    const CumulativeAngles ca = cumulative_angles(sampled_arc(0.7, 200));
    EXPECT_NEAR(ca.omega_tilde, 0.0, 1e-6);
    EXPECT_NEAR(ca.alpha_tilde, 0.7, 1e-6);
    EXPECT_NEAR(ca.beta_tilde, -0.7, 1e-6);
    EXPECT_EQ(ca.N1, 0);
    EXPECT_EQ(ca.N2, 0);
}

TEST(CumulativeAngles, SymmetricClothoid)
{
    const CumulativeAngles ca = cumulative_angles(clothoid(-2, 2, 400));
    EXPECT_NEAR(ca.alpha_tilde, ca.beta_tilde, 1e-6);
    EXPECT_GT(ca.omega_tilde, 0.0);
    EXPECT_NEAR(ca.omega_tilde, selftest::oracle::clothoid_angles(1, -2, 2).omega_tilde(), 1e-7);
}

TEST(CumulativeAngles, MatchesQuadratureOracle)
{
    struct Span
    {
        double a, s0, s1;
    };
    for (const Span sp : {Span{1, 0, 6.5}, Span{0.8, -3, 2}, Span{1.5, -1, 7}})
    {
        const CumulativeAngles ca = cumulative_angles(clothoid(sp.s0, sp.s1, 4000, sp.a));
        const auto oracle = selftest::oracle::clothoid_angles(sp.a, sp.s0, sp.s1);
        EXPECT_NEAR(ca.alpha_tilde, oracle.alpha_tilde, 1e-7);
        EXPECT_NEAR(ca.beta_tilde, oracle.beta_tilde, 1e-7);
        EXPECT_NEAR(ca.beta_tilde - ca.alpha_tilde, ca.rho, 1e-9);
    }
}

TEST(CumulativeAngles, SingleSampleSpan)
{
    const CumulativeAngles ca = cumulative_angles(clothoid(0, 1, 50), 7, 7);
    EXPECT_EQ(ca.alpha_tilde, 0.0);
    EXPECT_EQ(ca.beta_tilde, 0.0);
}

TEST(ChordCounters, ShortClothoid)
{
    const ChordCounters cc = chord_counters(clothoid(0, 1.5, 200));
    EXPECT_EQ(cc.N1, 0);
    EXPECT_EQ(cc.N2, 0);
    EXPECT_EQ(cc.M1, 0);
    EXPECT_EQ(cc.M2, 0);
}

TEST(ChordCounters, LongClothoidAgainstBruteForce)
{
    const ChordCounters cc = chord_counters(clothoid(0, 6.5, 2000));
    const auto [left, right] = complement_crossings(1.0, 0.0, 6.5, 200000);
    EXPECT_EQ(cc.N1, left);
    EXPECT_EQ(cc.N2, right);
    EXPECT_EQ(cc.N1, 0);
    EXPECT_EQ(cc.N2, 3);
    EXPECT_TRUE(cc.consistent());

    const CumulativeAngles ca = cumulative_angles(clothoid(0, 6.5, 2000));
    EXPECT_EQ(ca.N2, cc.N2);
}

TEST(ChordCounters, InflectedLongClothoid)
{
    const ChordCounters cc = chord_counters(clothoid(-5, 4.5, 4000));
    const auto [left, right] = complement_crossings(1.0, -5.0, 4.5, 200000);
    EXPECT_EQ(cc.N1, left);
    EXPECT_EQ(cc.N2, right);
    EXPECT_GT(cc.N1, 0);
    EXPECT_TRUE(cc.consistent());
}

TEST(ChordCounters, MirroredCurve)
{
    const SampledSpiral c = clothoid(0, 6.5, 2000);
    const ChordCounters a = chord_counters(c);
    const ChordCounters b = chord_counters(c.mirrored());
    EXPECT_EQ(c.mirrored().monotonicity(), Monotonicity::Decreasing);
    EXPECT_EQ(a.N1, b.N1);
    EXPECT_EQ(a.N2, b.N2);
    EXPECT_TRUE(b.consistent());
    const CumulativeAngles ca = cumulative_angles(c.mirrored());
    EXPECT_EQ(ca.N2, b.N2);
    EXPECT_LT(ca.omega_tilde, 0.0);
}

TEST(DeltaProfile, CircularArcIsConstant)
{
    for (const auto& [s, d] : delta_profile(sampled_arc(0.7, 200)))
        EXPECT_NEAR(d, -0.7, 1e-9) << "at s = " << s;
}

TEST(DeltaProfile, ClothoidIncreasing)
{
    const SampledSpiral c = clothoid(0, 2, 4000);
    const auto prof = delta_profile(c);
    for (std::size_t i = 1; i < prof.size(); ++i)
        EXPECT_GT(prof[i].second, prof[i - 1].second);

    const NormalizedEnds e = end_data(c);
    const double h = prof[1].first;
    const double slope = (-3 * prof[0].second + 4 * prof[1].second - prof[2].second) / (2 * h);
    const double half_chord = 0.5 * distance(c[0].point(), c[c.last()].point());
    const double expect = -(c.k_start() * half_chord + std::sin(e.alpha)) / (2 * half_chord);
    EXPECT_GT(expect, 0.0);
    EXPECT_NEAR(slope, expect, 1e-4);
}

TEST(IsShort, Examples)
{
    EXPECT_TRUE(is_short(clothoid(0, 1.5, 200)));
    EXPECT_TRUE(selftest::oracle::clothoid_short(1, 0, 1.5));
    EXPECT_FALSE(is_short(clothoid(0, 6.5, 2000)));
    EXPECT_FALSE(selftest::oracle::clothoid_short(1, 0, 6.5));
    EXPECT_TRUE(is_short(sampled_arc(2.5, 200)));
    EXPECT_TRUE(is_short(sampled_arc(-3.0, 400)));
}

TEST(IsShort, AgreesWithTangentRangeOracle)
{
    selftest::Rng rng(21);
    for (int i = 0; i < 60; ++i)
    {
        const double a = rng.uniform(0.5, 2), s0 = a * rng.uniform(-3, 3), s1 = s0 + a * rng.uniform(0.3, 4);
        EXPECT_EQ(is_short(clothoid(s0, s1, 2000, a)), selftest::oracle::clothoid_short(a, s0, s1))
            << a << " " << s0 << " " << s1;
    }
}

TEST(WindingBounds, Examples)
{
    CumulativeAngles ca;
    ca.omega_tilde = 0.2;
    ca.rho = 0.5;
    EXPECT_TRUE(winding_bounds_check(ca, false));
    ca.rho = 0.3;
    EXPECT_FALSE(winding_bounds_check(ca, false));
    ca.rho = 7.0;
    EXPECT_FALSE(winding_bounds_check(ca, false));
    EXPECT_FALSE(winding_bounds_check(ca, true));
}

TEST(EndData, HalfOpenConventions)
{
    const SampledSpiral c = clothoid(0.2, 1.4, 200);
    const NormalizedEnds e = end_data(c);
    EXPECT_GT(e.alpha + e.beta, 0.0);
    EXPECT_LT(e.kappa1, e.kappa2);
    const NormalizedEnds m = end_data(c.mirrored());
    EXPECT_NEAR(m.alpha, -e.alpha, 1e-12);
    EXPECT_NEAR(m.beta, -e.beta, 1e-12);
}
