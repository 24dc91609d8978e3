#include "spiralkit/biarc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spiralkit
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPoleRadius = 1e-9;
constexpr double kGammaBand = 1e-9;

void require_lense(const LenseSpec& lense)
{
    if (std::abs(std::sin(lense.omega())) < 1e-14)
        throw Error(ErrorKind::DegenerateLense, "sin ω = 0: the lense is empty");
}

double delta_of(double b, double gamma)
{
    return b * b + 2.0 * b * std::cos(gamma) + 1.0;
}

// Length of the arc A(ξ).
double boundary_arc_length(double xi)
{
    if (std::abs(xi) < 1e-8)
        return 2.0 * (1.0 + xi * xi / 6.0);
    if (std::abs(std::sin(xi)) < 1e-15)
        return kInf;
    return 2.0 * xi / std::sin(xi);
}

ArcSegment limit_arc(double xi)
{
    const CurvatureElement a = boundary_arc(xi);
    if (!std::isfinite(boundary_arc_length(xi)))
        throw Error(ErrorKind::ContactAtInfinity, "boundary arc runs through infinity");
    return {a, arc_length_to(a, {1.0, 0.0})};
}

} // namespace

// ============================================================================
// MultiArcCurve
// ============================================================================

double MultiArcCurve::total_length() const
{
    double total = 0.0;
    for (const ArcSegment& seg : segments)
        total += seg.length;
    return total;
}

double MultiArcCurve::g1_defect() const
{
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    {
        const CurvatureElement e = segments[i].end();
        const CurvatureElement& s = segments[i + 1].start;
        worst = std::max(worst, distance(e.point(), s.point()));
        worst = std::max(worst, std::abs(canonical_angle(e.tau - s.tau)));
    }
    return worst;
}

bool MultiArcCurve::monotone_curvature() const
{
    bool up = false, down = false;
    for (std::size_t i = 0; i + 1 < segments.size(); ++i)
    {
        const double d = segments[i + 1].start.k - segments[i].start.k;
        up = up || d > 0.0;
        down = down || d < 0.0;
    }
    return !(up && down);
}

// ============================================================================
// The family
// ============================================================================

CurvatureElement boundary_arc(double xi)
{
    return {-1.0, 0.0, xi, -std::sin(xi)};
}

CurvatureElement gamma_circle(const LenseSpec& lense)
{
    return boundary_arc(lense.gamma());
}

BiarcCurvatures biarc_curvatures(const BiarcSpec& spec)
{
    require_lense(spec.lense);
    const double so = std::sin(spec.lense.omega());
    const double sa = std::sin(spec.lense.alpha);
    const double sb = std::sin(spec.lense.beta);
    BiarcCurvatures out;
    if (std::isinf(spec.b))
    {
        out.kappa1 = -sa;
        out.kappa2 = kInf;
        out.kappa2_infinite = true;
    }
    else if (spec.b == 0.0)
    {
        out.kappa1 = -kInf;
        out.kappa1_infinite = true;
        out.kappa2 = sb;
    }
    else
    {
        out.kappa1 = -sa - so / spec.b;
        out.kappa2 = sb + spec.b * so;
    }
    return out;
}

Point contact_point(const BiarcSpec& spec)
{
    const double b = spec.b;
    const double g = spec.lense.gamma();
    if (std::isinf(b))
        return {1.0, 0.0};
    const double d = delta_of(b, g);
    if (std::abs(d) < 1e-14)
        throw Error(ErrorKind::ContactAtInfinity, "contact point at infinity");
    return {(b * b - 1.0) / d, 2.0 * b * std::sin(g) / d};
}

double junction_tangent(const BiarcSpec& spec)
{
    const LenseSpec& l = spec.lense;
    const double b = spec.b;
    if (std::isinf(b))
        return canonical_angle(-l.alpha);
    const double d = delta_of(b, l.gamma());
    if (std::abs(d) < 1e-14)
        throw Error(ErrorKind::ContactAtInfinity, "contact point at infinity");
    const double s = -(b * b * std::sin(l.alpha) + 2.0 * b * std::sin(l.omega()) + std::sin(l.beta));
    const double c = b * b * std::cos(l.alpha) + 2.0 * b * std::cos(l.omega()) + std::cos(l.beta);
    return std::atan2(s, c);
}

double b_through_point(const LenseSpec& lense, Point p)
{
    if (distance(p, {-1.0, 0.0}) < kPoleRadius || distance(p, {1.0, 0.0}) < kPoleRadius)
        throw Error(ErrorKind::PolePoint, "point coincides with a chord endpoint");
    require_lense(lense);

    const double so = std::sin(lense.omega());
    const double r2 = p.x * p.x + p.y * p.y;
    const double cg = circle_side(p, gamma_circle(lense));

    auto first = [&] {
        const double den = (1.0 - r2) * std::sin(lense.alpha) - 2.0 * p.y * std::cos(lense.alpha);
        const double num = so * ((p.x + 1.0) * (p.x + 1.0) + p.y * p.y);
        return den == 0.0 ? kInf : num / den;
    };
    auto second = [&] {
        const double num = (1.0 - r2) * std::sin(lense.beta) + 2.0 * p.y * std::cos(lense.beta);
        const double den = so * ((p.x - 1.0) * (p.x - 1.0) + p.y * p.y);
        return num / den;
    };

    if (std::abs(cg) < kGammaBand)
    {
        const double b1 = first(), b2 = second();
        if (std::isinf(b1))
            return b2;
        if (std::isinf(b2))
            return b1;
        return 0.5 * (b1 + b2);
    }
    return (cg * so <= 0.0) ? first() : second();
}

double b_star(const LenseSpec& lense)
{
    require_lense(lense);
    const double so = std::sin(lense.omega());
    if (std::abs(lense.alpha) >= std::abs(lense.beta))
        return -so / std::sin(lense.alpha);
    return -std::sin(lense.beta) / so;
}

MultiArcCurve build_biarc(const BiarcSpec& spec)
{
    const BiarcCurvatures k = biarc_curvatures(spec);
    MultiArcCurve out;
    if (k.kappa2_infinite)
    {
        out.segments.push_back(limit_arc(spec.lense.alpha));
        return out;
    }
    if (k.kappa1_infinite)
    {
        out.segments.push_back(limit_arc(-spec.lense.beta));
        return out;
    }

    const Point t = contact_point(spec);
    const CurvatureElement first{-1.0, 0.0, spec.lense.alpha, k.kappa1};
    const double l1 = arc_length_to(first, t);
    if (!(l1 >= 0.0))
        throw Error(ErrorKind::ContactAtInfinity, "first arc runs through infinity");
    const double tau0 = evaluate_arc(first, l1).tau;
    const CurvatureElement second{t.x, t.y, tau0, k.kappa2};
    const double l2 = arc_length_to(second, {1.0, 0.0});
    if (!(l2 >= 0.0))
        throw Error(ErrorKind::ContactAtInfinity, "second arc runs through infinity");
    out.segments.push_back({first, l1});
    out.segments.push_back({second, l2});
    return out;
}

double biarc_length(const BiarcSpec& spec)
{
    require_lense(spec.lense);
    if (std::isinf(spec.b))
        return boundary_arc_length(spec.lense.alpha);
    if (spec.b == 0.0)
        return boundary_arc_length(-spec.lense.beta);
    return build_biarc(spec).total_length();
}

// ============================================================================
// Lense and bilense
// ============================================================================

double lense_parameter(Point p)
{
    return std::atan2(2.0 * p.y, 1.0 - p.x * p.x - p.y * p.y);
}

bool in_lense(const LenseSpec& lense, Point p)
{
    if (std::abs(std::sin(lense.omega())) < 1e-15)
        return false;
    if (p.y == 0.0 && std::abs(p.x) == 1.0)
        return false;
    const double xi = lense_parameter(p);
    const double lo = std::min(lense.alpha, -lense.beta);
    const double hi = std::max(lense.alpha, -lense.beta);
    return lo < xi && xi < hi;
}

bool in_closed_lense(const LenseSpec& lense, Point p, double slack)
{
    if (distance(p, {-1.0, 0.0}) <= 1e-12 || distance(p, {1.0, 0.0}) <= 1e-12)
        return true;
    double xi = lense_parameter(p);
    const double lo = std::min(lense.alpha, -lense.beta) - slack;
    const double hi = std::max(lense.alpha, -lense.beta) + slack;
    if (xi == -kPi)
        xi = kPi;
    return (lo <= xi && xi <= hi) || (lo <= xi - kTwoPi && xi - kTwoPi <= hi);
}

std::pair<double, double> bilense_bounds(const NormalizedEnds& ends)
{
    const LenseSpec lense{ends.alpha, ends.beta};
    require_lense(lense);
    const double q = q_normalized(ends);
    if (q > -tangency_fence(ends.kappa1, ends.kappa2))
        throw Error(ErrorKind::NotASpiralPair, "bilense needs Q < 0");
    const double so = std::sin(lense.omega());
    const double b1 = -so / (ends.kappa1 + std::sin(ends.alpha));
    const double b2 = (ends.kappa2 - std::sin(ends.beta)) / so;
    if (!(b1 >= 0.0) || !(b1 < b2))
        throw Error(ErrorKind::NotASpiralPair, "end data do not bound a short spiral");
    return {b1, b2};
}

bool in_bilense(const NormalizedEnds& ends, Point p)
{
    const auto [b1, b2] = bilense_bounds(ends);
    const LenseSpec lense{ends.alpha, ends.beta};
    if (!in_lense(lense, p))
        return false;
    const double b = b_through_point(lense, p);
    return std::isfinite(b) && b1 < b && b < b2;
}

// ============================================================================
// Sampling
// ============================================================================

SampledSpiral sample_chain(const MultiArcCurve& curve, double max_turn, std::size_t min_steps)
{
    std::vector<Sample> out;
    double s_offset = 0.0;
    double tau_prev = 0.0;
    bool constant = true;
    const double k0 = curve.segments.front().start.k;

    for (const ArcSegment& seg : curve.segments)
    {
        if (seg.length <= 0.0)
            continue;
        constant = constant && seg.start.k == k0;
        CurvatureElement start = seg.start;
        if (!out.empty())
            start.tau = tau_prev + std::remainder(start.tau - tau_prev, kTwoPi);
        const double turn = std::abs(start.k) * seg.length;
        const std::size_t steps = std::max<std::size_t>(min_steps, static_cast<std::size_t>(std::ceil(turn / max_turn)));

        for (std::size_t j = 0; j <= steps; ++j)
        {
            const double s = seg.length * static_cast<double>(j) / static_cast<double>(steps);
            const CurvatureElement e = (j == 0) ? start : evaluate_arc(start, s);
            if (j == 0 && !out.empty())
            {
                out.back().k_right = start.k;
                continue;
            }
            out.push_back({s_offset + s, e.x, e.y, e.tau, start.k, start.k});
        }
        s_offset += seg.length;
        tau_prev = out.back().tau;
    }
    if (out.empty())
        throw Error(ErrorKind::InvalidInput, "chain has no extent");
    out.front().s = 0.0;
    return SampledSpiral(std::move(out), constant);
}

} // namespace spiralkit
