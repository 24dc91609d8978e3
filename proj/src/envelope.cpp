#include "spiralkit/envelope.hpp"

#include <algorithm>
#include <cmath>

namespace spiralkit
{

namespace
{

double direction(Point a, Point b)
{
    return std::atan2(b.y - a.y, b.x - a.x);
}

// Curvature of the circle tangent to tau at p and passing through q.
double tangent_circle_curvature(Point p, double tau, Point q)
{
    const Point d = q - p;
    const Point t = unit(tau);
    const double X = dot(d, t);
    const double Y = cross(t, d);
    return 2.0 * Y / (X * X + Y * Y);
}

void require_distinct(Point a, Point b, std::size_t i)
{
    if (distance(a, b) == 0.0)
        throw Error(ErrorKind::DegenerateTriple, "points " + std::to_string(i) + " and " +
                                                     std::to_string(i + 1) + " coincide");
}

} // namespace

std::vector<double> LenseChain::curvatures() const
{
    std::vector<double> out;
    for (const CurvatureElement& a : arcs)
        out.push_back(a.k);
    return out;
}

bool LenseChain::monotone() const
{
    bool up = false, down = false;
    for (std::size_t i = 0; i + 1 < arcs.size(); ++i)
    {
        const double d = arcs[i + 1].k - arcs[i].k;
        const double tol = 1e-12 * (1.0 + std::abs(arcs[i].k) + std::abs(arcs[i + 1].k));
        up = up || d > tol;
        down = down || d < -tol;
    }
    return !(up && down);
}

double LenseChain::max_width() const
{
    double w = 0.0;
    for (const ChordLense& c : chords)
        w = std::max(w, c.width);
    return w;
}

std::vector<CurvatureElement> arcs_through_points(const InterpolationData& data)
{
    const std::vector<Point>& p = data.points;
    const std::size_t n = p.size();
    if (n < 3)
        throw Error(ErrorKind::InvalidInput, "interpolation needs at least 3 points");
    for (std::size_t i = 0; i + 1 < n; ++i)
        require_distinct(p[i], p[i + 1], i);

    std::vector<CurvatureElement> arcs(n);
    arcs[0] = {p[0].x, p[0].y, data.tau_start, tangent_circle_curvature(p[0], data.tau_start, p[1])};
    for (std::size_t i = 1; i + 1 < n; ++i)
    {
        const Point a = p[i - 1], b = p[i], c = p[i + 1];
        const double ab = distance(a, b), bc = distance(b, c), ac = distance(a, c);
        if (ac == 0.0)
            throw Error(ErrorKind::DegenerateTriple, "points " + std::to_string(i - 1) + " and " +
                                                         std::to_string(i + 1) + " coincide");
        const double k = 2.0 * cross(b - a, c - a) / (ab * bc * ac);
        const double tau = direction(a, b) + std::remainder(direction(b, c) - direction(a, c), kTwoPi);
        arcs[i] = {b.x, b.y, tau, k};
    }
    arcs[n - 1] = {p[n - 1].x, p[n - 1].y, data.tau_end,
                   tangent_circle_curvature(p[n - 1], data.tau_end, p[n - 2])};
    return arcs;
}

LenseChain build_lense_chain(const InterpolationData& data)
{
    LenseChain chain;
    chain.arcs = arcs_through_points(data);
    const std::vector<Point>& p = data.points;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
    {
        const double mu = direction(p[i], p[i + 1]);
        const double c = 0.5 * distance(p[i], p[i + 1]);
        const Point mid = 0.5 * (p[i] + p[i + 1]);

        ChordLense cl;
        cl.lense.alpha = canonical_angle(chain.arcs[i].tau - mu);
        cl.lense.beta = canonical_angle(chain.arcs[i + 1].tau - mu);
        cl.half_chord = c;
        cl.to_normalized.rotation = -mu;
        cl.to_normalized.scale = 1.0 / c;
        cl.to_normalized.translation = -(1.0 / c) * rotate(mid, -mu);
        cl.width = c * std::abs(std::tan(0.5 * cl.lense.alpha) + std::tan(0.5 * cl.lense.beta));
        cl.very_short_violation =
            std::abs(cl.lense.alpha) >= 0.5 * kPi || std::abs(cl.lense.beta) >= 0.5 * kPi;
        cl.degenerate = std::abs(std::sin(cl.lense.omega())) < 1e-12;
        chain.chords.push_back(cl);
    }
    return chain;
}

bool in_envelope(const LenseChain& chain, Point p, double slack)
{
    for (const ChordLense& c : chain.chords)
        if (in_closed_lense(c.lense, c.to_normalized.apply(p), slack))
            return true;
    return false;
}

} // namespace spiralkit
