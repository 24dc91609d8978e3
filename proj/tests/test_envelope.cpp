#include "spiralkit/clothoid.hpp"
#include "spiralkit/envelope.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <optional>

using namespace spiralkit;

namespace
{

InterpolationData clothoid_points(double s0, double s1, int n)
{
    InterpolationData d;
    for (int i = 0; i < n; ++i)
        d.points.push_back(clothoid_element(1.0, s0 + (s1 - s0) * i / (n - 1)).point());
    d.tau_start = clothoid_element(1.0, s0).tau;
    d.tau_end = clothoid_element(1.0, s1).tau;
    return d;
}

std::optional<ErrorKind> error_of(const InterpolationData& d)
{
    try
    {
        build_lense_chain(d);
    }
    catch (const Error& e)
    {
        return e.kind();
    }
    return std::nullopt;
}

} // namespace

TEST(ArcsThroughPoints, CollinearGivesLines)
{
    InterpolationData d{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 0.0, 0.0};
    for (const CurvatureElement& a : arcs_through_points(d))
    {
        EXPECT_NEAR(a.k, 0.0, 1e-15);
        EXPECT_NEAR(canonical_angle(a.tau), 0.0, 1e-15);
    }
}

TEST(ArcsThroughPoints, CocircularGivesUnitCurvature)
{
    InterpolationData d;
    for (int i = 0; i < 6; ++i)
    {
        const double t = -0.5 * kPi + 0.4 * i;
        d.points.push_back({std::cos(t), std::sin(t)});
    }
    d.tau_start = -0.5 * kPi + 0.5 * kPi;
    d.tau_end = -0.5 * kPi + 0.4 * 5 + 0.5 * kPi;
    const LenseChain c = build_lense_chain(d);
    for (double k : c.curvatures())
        EXPECT_NEAR(k, 1.0, 1e-12);
    for (std::size_t i = 0; i < c.arcs.size(); ++i)
        EXPECT_NEAR(c.arcs[i].tau, d.tau_start + 0.4 * i, 1e-12);
    for (const ChordLense& l : c.chords)
    {
        EXPECT_TRUE(l.degenerate);
        EXPECT_NEAR(l.width, 0.0, 1e-12);
    }
    EXPECT_TRUE(c.monotone());
}

TEST(ArcsThroughPoints, EndArcsMatchTangents)
{
    const InterpolationData d = clothoid_points(0.0, 3.0, 11);
    const auto arcs = arcs_through_points(d);
    ASSERT_EQ(arcs.size(), d.points.size());
    EXPECT_NEAR(arcs.front().tau, d.tau_start, 1e-15);
    EXPECT_NEAR(arcs.back().tau, d.tau_end, 1e-15);
    // The first arc leaves P1 with the given tangent and passes through P2.
    const CurvatureElement a = arcs.front();
    const double len = arc_length_to(a, d.points[1]);
    const Point q = evaluate_arc(a, len).point();
    EXPECT_NEAR(q.x, d.points[1].x, 1e-12);
    EXPECT_NEAR(q.y, d.points[1].y, 1e-12);
}

TEST(LenseChain, ClothoidSamplesAreMonotone)
{
    const LenseChain c = build_lense_chain(clothoid_points(0.0, 3.0, 11));
    EXPECT_EQ(c.chords.size(), 10u);
    EXPECT_TRUE(c.monotone());
    const auto k = c.curvatures();
    for (std::size_t i = 1; i < k.size(); ++i)
        EXPECT_GT(k[i], k[i - 1]);
}

TEST(LenseChain, ThreePoints)
{
    const LenseChain c = build_lense_chain(clothoid_points(0.5, 1.5, 3));
    EXPECT_EQ(c.arcs.size(), 3u);
    EXPECT_EQ(c.chords.size(), 2u);
}

TEST(LenseChain, WidthShrinksCubically)
{
    double prev = 0.0;
    for (int n : {9, 17, 33, 65})
    {
        const double w = build_lense_chain(clothoid_points(0.5, 2.0, n)).max_width();
        if (prev > 0.0)
        {
            const double order = std::log2(prev / w);
            EXPECT_GT(order, 2.7);
            EXPECT_LT(order, 3.3);
        }
        prev = w;
    }
}

TEST(LenseChain, CoversClothoid)
{
    const double s0 = 0.5, s1 = 2.0;
    const LenseChain c = build_lense_chain(clothoid_points(s0, s1, 17));
    for (int i = 0; i <= 2000; ++i)
        EXPECT_TRUE(in_envelope(c, clothoid_element(1.0, s0 + (s1 - s0) * i / 2000.0).point())) << i;
}

TEST(LenseChain, Membership)
{
    const InterpolationData d = clothoid_points(0.5, 2.0, 9);
    const LenseChain c = build_lense_chain(d);
    for (const Point& p : d.points)
        EXPECT_TRUE(in_envelope(c, p));
    EXPECT_FALSE(in_envelope(c, {10.0, 10.0}));
    EXPECT_FALSE(in_envelope(c, {0.0, 1.0}));
}

TEST(LenseChain, NonMonotoneDataIsReported)
{
    InterpolationData d;
    for (int i = 0; i <= 20; ++i)
    {
        const double x = 0.5 * i;
        d.points.push_back({x, std::sin(x)});
    }
    d.tau_start = std::atan(1.0);
    d.tau_end = std::atan(std::cos(10.0));
    const LenseChain c = build_lense_chain(d);
    EXPECT_FALSE(c.monotone());
}

TEST(LenseChain, Errors)
{
    EXPECT_EQ(error_of({{{0, 0}, {1, 0}}, 0, 0}), ErrorKind::InvalidInput);
    EXPECT_EQ(error_of({{{0, 0}, {1, 0}, {1, 0}, {2, 0}}, 0, 0}), ErrorKind::DegenerateTriple);
}
