#include "spiralkit/construct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace spiralkit
{

const char* to_string(ExistenceStatus status)
{
    switch (status)
    {
    case ExistenceStatus::UniqueBiarc: return "unique_biarc";
    case ExistenceStatus::SpiralFamily: return "spiral_family";
    case ExistenceStatus::None: return "none";
    }
    return "none";
}

const char* to_string(ExistenceReason reason)
{
    switch (reason)
    {
    case ExistenceReason::Satisfied: return "satisfied";
    case ExistenceReason::QPositive: return "q_positive";
    case ExistenceReason::TangentCircles: return "tangent_circles";
    case ExistenceReason::VogtViolation: return "vogt_violation";
    case ExistenceReason::CircularCoincidence: return "circular_coincidence";
    }
    return "unknown";
}

// ============================================================================
// Existence
// ============================================================================

ExistenceVerdict exists_short(const NormalizedEnds& ends, double fence_scale)
{
    ExistenceVerdict v;
    v.q_value = q_normalized(ends);
    const double fence = tangency_fence(ends.kappa1, ends.kappa2, fence_scale);
    const double ktol = 1e-12 * (1.0 + std::abs(ends.kappa1) + std::abs(ends.kappa2));

    if (std::abs(ends.kappa1 - ends.kappa2) <= ktol)
        v.reason = ExistenceReason::CircularCoincidence;
    else if (!short_bounds_check(ends))
        v.reason = ExistenceReason::VogtViolation;
    else if (v.q_value < -fence)
        v.status = ExistenceStatus::SpiralFamily;
    else if (v.q_value <= fence)
        v.status = ExistenceStatus::UniqueBiarc;
    else
        v.reason = ExistenceReason::QPositive;
    return v;
}

ExistenceVerdict exists_any(const CurvatureElement& K1, const CurvatureElement& K2, double fence_scale)
{
    const NormalizedEnds ends = normalize_pair(K1, K2).first;
    ExistenceVerdict v;
    v.q_value = q_invariant(K1, K2);
    const double fence = tangency_fence(ends.kappa1, ends.kappa2, fence_scale);
    if (v.q_value < -fence)
        v.status = ExistenceStatus::SpiralFamily;
    else if (v.q_value <= fence)
        v.reason = ExistenceReason::TangentCircles;
    else
        v.reason = ExistenceReason::QPositive;
    return v;
}

// ============================================================================
// Chain utilities
// ============================================================================

double distance_to_segment(const ArcSegment& seg, Point p)
{
    const CurvatureElement& e = seg.start;
    const Point a = e.point();
    const Point b = seg.end().point();
    const double ends = std::min(distance(p, a), distance(p, b));
    if (std::abs(e.k) * seg.length < 1e-6)
    {
        const Point d = b - a;
        const double len2 = dot(d, d);
        if (len2 == 0.0)
            return ends;
        const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
        return distance(p, a + t * d);
    }
    const Point c = e.center();
    const double r = 1.0 / std::abs(e.k);
    const double psi0 = std::atan2(a.y - c.y, a.x - c.x);
    const double psip = std::atan2(p.y - c.y, p.x - c.x);
    double rel = (e.k > 0.0) ? psip - psi0 : psi0 - psip;
    rel = rel - kTwoPi * std::floor(rel / kTwoPi);
    if (rel <= std::abs(e.k) * seg.length)
        return std::abs(distance(p, c) - r);
    return ends;
}

namespace
{

template <class ElementMap, class PointMap>
MultiArcCurve map_chain(const MultiArcCurve& curve, ElementMap map_element, PointMap map_point)
{
    MultiArcCurve out;
    for (const ArcSegment& seg : curve.segments)
    {
        const CurvatureElement start = map_element(seg.start);
        const Point end = map_point(seg.end().point());
        out.segments.push_back({start, seg.length == 0.0 ? 0.0 : arc_length_to(start, end)});
    }
    return out;
}

void require_clear_of(const MultiArcCurve& curve, Point center, double radius)
{
    for (const ArcSegment& seg : curve.segments)
        if (distance_to_segment(seg, center) <= 1e-9 * radius)
            throw Error(ErrorKind::InversionCenterHit, "segment passes through the inversion center");
}

} // namespace

MultiArcCurve invert_chain(const MultiArcCurve& curve, const CurvatureElement& K0)
{
    const Point c0 = K0.center();
    const double r0 = 1.0 / std::abs(K0.k);
    require_clear_of(curve, c0, r0);
    return map_chain(
        curve, [&](const CurvatureElement& e) { return invert_element(e, K0); },
        [&](Point p) { return invert_point(p, c0, r0); });
}

MultiArcCurve transform_chain(const MultiArcCurve& curve, const Similarity& sim)
{
    MultiArcCurve out;
    for (const ArcSegment& seg : curve.segments)
        out.segments.push_back({sim.apply(seg.start), seg.length * sim.scale});
    return out;
}

// ============================================================================
// Inversion in the circle of A(ξ)
// ============================================================================

Point invert_point_in_arc_circle(Point p, double xi)
{
    const double s = std::sin(xi), c = std::cos(xi);
    const Point w{p.x * s, p.y * s + c};
    const double d = dot(w, w);
    if (d == 0.0)
        throw Error(ErrorKind::InversionCenterHit, "point coincides with the inversion center");
    const double side = s * (1.0 - p.x * p.x - p.y * p.y) - 2.0 * p.y * c;
    return p + (side / d) * w;
}

CurvatureElement invert_in_arc_circle(const CurvatureElement& K, double xi)
{
    const double s = std::sin(xi), c = std::cos(xi);
    const Point w{K.x * s, K.y * s + c};
    const Point p = invert_point_in_arc_circle(K.point(), xi);
    const double q = q_invariant(boundary_arc(xi), K);
    return {p.x, p.y, kPi - K.tau + 2.0 * std::atan2(w.y, w.x), -2.0 * s * (1.0 - 2.0 * q) - K.k};
}

NormalizedEnds symmetrized_ends(const NormalizedEnds& e)
{
    const double so = std::sin(e.omega());
    NormalizedEnds out;
    out.alpha = -e.omega();
    out.beta = -e.omega();
    out.kappa1 = -e.kappa1 - std::sin(e.alpha) + so;
    out.kappa2 = -(e.kappa2 - std::sin(e.beta)) - so;
    out.c = e.c;
    return out;
}

// ============================================================================
// Short spirals
// ============================================================================

namespace
{

MultiArcCurve symmetric_frame_chain(const CurvatureElement& k1, const CurvatureElement& k2, bool biarc)
{
    const Point b{1.0, 0.0};
    const Point c1 = k1.center(), c2 = k2.center();
    const double r1 = 1.0 / k1.k, r2 = 1.0 / k2.k; // r1 > 0 > r2

    if (biarc)
    {
        const double w = r1 / (r1 - r2);
        const Point t = c1 + w * (c2 - c1);
        MultiArcCurve out;
        const double l1 = arc_length_to(k1, t);
        const CurvatureElement second{t.x, t.y, evaluate_arc(k1, l1).tau, k2.k};
        out.segments.push_back({k1, l1});
        out.segments.push_back({second, arc_length_to(second, b)});
        return out;
    }

    const Point delta = c1 - c2;
    const double ratio = std::clamp((r2 - r1) / norm(delta), -1.0, 1.0);
    const double phi = std::atan2(delta.y, delta.x);
    const double lambdas[2] = {phi + std::asin(ratio), phi + kPi - std::asin(ratio)};

    std::optional<MultiArcCurve> best;
    double best_length = std::numeric_limits<double>::infinity();
    for (double lambda : lambdas)
    {
        const Point n{std::sin(lambda), -std::cos(lambda)};
        const Point t1 = c1 + r1 * n;
        const Point t2 = c2 + r2 * n;
        const double line = dot(t2 - t1, unit(lambda));
        if (line < 0.0)
            continue;
        const double l1 = arc_length_to(k1, t1);
        const double tau1 = evaluate_arc(k1, l1).tau;
        if (std::abs(canonical_angle(tau1 - lambda)) > 1e-6)
            continue;
        const CurvatureElement mid{t1.x, t1.y, tau1, 0.0};
        const CurvatureElement last{t2.x, t2.y, tau1, k2.k};
        MultiArcCurve chain;
        chain.segments.push_back({k1, l1});
        chain.segments.push_back({mid, line});
        chain.segments.push_back({last, arc_length_to(last, b)});
        const double total = chain.total_length();
        if (total < best_length)
        {
            best_length = total;
            best = chain;
        }
    }
    if (!best)
        throw Error(ErrorKind::NoSpiralExists, "no joining line in the symmetric frame");
    return *best;
}

MultiArcCurve construct_increasing(const NormalizedEnds& ends, bool biarc)
{
    if (std::sin(ends.omega()) <= 1e-12)
        throw Error(ErrorKind::DegenerateLense, "lense of the end data is degenerate");
    const double xi = 0.25 * (ends.alpha - ends.beta);
    const CurvatureElement k1 = invert_in_arc_circle(ends.start(), xi);
    const CurvatureElement k2 = invert_in_arc_circle(ends.end(), xi);
    if (!(k1.k > 0.0 && k2.k < 0.0))
        throw Error(ErrorKind::NoSpiralExists, "symmetrized end curvatures have the wrong signs");

    const MultiArcCurve sym = symmetric_frame_chain(k1, k2, biarc);
    if (std::abs(std::sin(xi)) > 0.0)
    {
        const Point center{0.0, -std::cos(xi) / std::sin(xi)};
        require_clear_of(sym, center, 1.0 / std::abs(std::sin(xi)));
    }
    MultiArcCurve out = map_chain(
        sym, [&](const CurvatureElement& e) { return invert_in_arc_circle(e, xi); },
        [&](Point p) { return invert_point_in_arc_circle(p, xi); });
    return out;
}

} // namespace

MultiArcCurve construct_short(const NormalizedEnds& ends)
{
    const ExistenceVerdict v = exists_short(ends);
    if (v.status == ExistenceStatus::None)
        throw Error(ErrorKind::NoSpiralExists,
                    std::string("no short spiral joins the end data: ") + to_string(v.reason));
    const bool biarc = v.status == ExistenceStatus::UniqueBiarc;
    if (ends.kappa1 < ends.kappa2)
        return construct_increasing(ends, biarc);

    NormalizedEnds m = ends;
    m.alpha = -ends.alpha;
    m.beta = -ends.beta;
    m.kappa1 = -ends.kappa1;
    m.kappa2 = -ends.kappa2;
    Similarity mirror;
    mirror.reflect = true;
    return transform_chain(construct_increasing(m, biarc), mirror);
}

// ============================================================================
// Arbitrary pairs
// ============================================================================

CurvatureElement concentricizing_inversion(const CurvatureElement& K1, const CurvatureElement& K2, int which)
{
    const NormalizedEnds ends = normalize_pair(K1, K2).first;
    if (q_invariant(K1, K2) >= -tangency_fence(ends.kappa1, ends.kappa2))
        throw Error(ErrorKind::NotDisjoint, "circles are not disjoint (Q >= 0)");
    if (K1.k == 0.0 && K2.k == 0.0)
        throw Error(ErrorKind::NotDisjoint, "two lines are never disjoint");

    Point limit;
    if (K1.k != 0.0 && K2.k != 0.0)
    {
        const Point c1 = K1.center(), c2 = K2.center();
        const double r1 = 1.0 / std::abs(K1.k), r2 = 1.0 / std::abs(K2.k);
        const double d = distance(c1, c2);
        if (d <= 1e-12 * (r1 + r2))
            return circle_element(c1, 1.0);
        const Point e = (1.0 / d) * (c2 - c1);
        const double sum = (r1 * r1 - r2 * r2 + d * d) / d;
        const double disc = std::max(sum * sum - 4.0 * r1 * r1, 0.0);
        const double far = 0.5 * (sum + std::copysign(std::sqrt(disc), sum));
        const double near = r1 * r1 / far;
        limit = c1 + ((which == 0) ? near : far) * e;
    }
    else
    {
        const CurvatureElement& line = (K1.k == 0.0) ? K1 : K2;
        const CurvatureElement& circle = (K1.k == 0.0) ? K2 : K1;
        const Point c = circle.center();
        const double r = 1.0 / std::abs(circle.k);
        const Point dir = unit(line.tau);
        const Point foot = line.point() + dot(c - line.point(), dir) * dir;
        const double dd = distance(c, foot);
        const Point n = (1.0 / dd) * (c - foot);
        const double off = std::sqrt(std::max(dd * dd - r * r, 0.0));
        limit = foot + ((which == 0) ? off : -off) * n;
    }
    const double radius = std::max(distance(limit, K1.point()), distance(limit, K2.point()));
    return circle_element(limit, radius);
}

namespace
{

double sweep(double sigma, double from, double to)
{
    const double t = sigma * (to - from);
    return t - kTwoPi * std::floor(t / kTwoPi);
}

// Spiral between two concentric directed circles of equal orientation. The
// first arc turns by split of the admissible range; arcs of either circle
// stop short of the point avoid when it lies on that circle.
MultiArcCurve concentric_chain(const CurvatureElement& k1, const CurvatureElement& k2, double split,
                               const Point* avoid = nullptr)
{
    const double sigma = (k1.k > 0.0) ? 1.0 : -1.0;
    const Point o = 0.5 * (k1.center() + k2.center());
    const double r1 = 1.0 / std::abs(k1.k), r2 = 1.0 / std::abs(k2.k);
    const double phiA = std::atan2(k1.y - o.y, k1.x - o.x);
    const double phiB = std::atan2(k2.y - o.y, k2.x - o.x);

    double total = sigma * (phiB - phiA) - kPi;
    total -= kTwoPi * std::floor(total / kTwoPi);
    double lo = 0.0, hi = total;
    if (avoid != nullptr)
    {
        const double d = distance(*avoid, o);
        const double phiL = std::atan2(avoid->y - o.y, avoid->x - o.x);
        if (std::abs(d - r1) <= 1e-9 * r1)
            hi = std::min(hi, sweep(sigma, phiA, phiL));
        if (std::abs(d - r2) <= 1e-9 * r2)
            lo = std::max(lo, total - sweep(sigma, phiL, phiB));
        if (!(lo < hi))
            throw Error(ErrorKind::InversionCenterHit, "no admissible split avoids the inversion center");
    }
    const double phiT1 = phiA + sigma * (lo + split * (hi - lo));
    const Point u = -unit(phiT1);
    const Point t1 = o - r1 * u;

    const double r0 = 0.5 * (r1 + r2);
    const double k0 = 2.0 * k1.k * k2.k / (k1.k + k2.k);

    MultiArcCurve out;
    const double l1 = arc_length_to(k1, t1);
    const CurvatureElement mid{t1.x, t1.y, evaluate_arc(k1, l1).tau, k0};
    const CurvatureElement mid_end = evaluate_arc(mid, kPi * r0);
    const CurvatureElement last{mid_end.x, mid_end.y, mid_end.tau, k2.k};
    out.segments.push_back({k1, l1});
    out.segments.push_back({mid, kPi * r0});
    out.segments.push_back({last, arc_length_to(last, k2.point())});
    return out;
}

} // namespace

MultiArcCurve construct_any(const CurvatureElement& K1, const CurvatureElement& K2)
{
    const ExistenceVerdict v = exists_any(K1, K2);
    if (v.status != ExistenceStatus::SpiralFamily)
        throw Error(ErrorKind::NoSpiralExists, std::string("no spiral joins the elements: ") + to_string(v.reason));

    if (K1.k != 0.0 && K2.k != 0.0)
    {
        const double r1 = 1.0 / std::abs(K1.k), r2 = 1.0 / std::abs(K2.k);
        if (distance(K1.center(), K2.center()) <= 1e-12 * (r1 + r2))
            return concentric_chain(K1, K2, 0.5);
    }

    const double splits[3] = {0.5, 0.25, 0.75};
    for (int which = 0; which < 2; ++which)
    {
        const CurvatureElement inv = concentricizing_inversion(K1, K2, which);
        const CurvatureElement i1 = invert_element(K1, inv);
        const CurvatureElement i2 = invert_element(K2, inv);
        const Point center = inv.center();
        for (double split : splits)
        {
            try
            {
                MultiArcCurve out = invert_chain(concentric_chain(i1, i2, split, &center), inv);
                return out;
            }
            catch (const Error& e)
            {
                if (e.kind() != ErrorKind::InversionCenterHit)
                    throw;
            }
        }
    }
    throw Error(ErrorKind::InversionCenterHit, "every candidate chain meets an inversion center");
}

} // namespace spiralkit
