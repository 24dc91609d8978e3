#include "spiralkit/core.hpp"

#include <complex>

namespace spiralkit
{

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InversionCenterHit: return "InversionCenterHit";
    case ErrorKind::CoincidentEndpoints: return "CoincidentEndpoints";
    case ErrorKind::ResolutionTooCoarse: return "ResolutionTooCoarse";
    case ErrorKind::DegenerateLense: return "DegenerateLense";
    case ErrorKind::ContactAtInfinity: return "ContactAtInfinity";
    case ErrorKind::PolePoint: return "PolePoint";
    case ErrorKind::NotASpiralPair: return "NotASpiralPair";
    case ErrorKind::NoSpiralExists: return "NoSpiralExists";
    case ErrorKind::DegenerateGamma: return "DegenerateGamma";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::DegenerateTriple: return "DegenerateTriple";
    }
    return "Unknown";
}

double canonical_angle(double angle)
{
    double a = std::remainder(angle, kTwoPi);
    if (a <= -kPi)
        a += kTwoPi;
    return a;
}

double canonical_angle_lower(double angle)
{
    double a = std::remainder(angle, kTwoPi);
    if (a >= kPi)
        a -= kTwoPi;
    return a;
}

// ============================================================================
// Similarity
// ============================================================================

Point Similarity::apply(Point p) const
{
    if (reflect)
        p.y = -p.y;
    return scale * rotate(p, rotation) + translation;
}

double Similarity::apply_angle(double tau) const
{
    return (reflect ? -tau : tau) + rotation;
}

double Similarity::apply_curvature(double k) const
{
    return (reflect ? -k : k) / scale;
}

CurvatureElement Similarity::apply(const CurvatureElement& e) const
{
    const Point p = apply(e.point());
    return {p.x, p.y, apply_angle(e.tau), apply_curvature(e.k)};
}

Similarity Similarity::inverse() const
{
    Similarity inv;
    inv.scale = 1.0 / scale;
    inv.reflect = reflect;
    if (!reflect)
    {
        inv.rotation = -rotation;
        inv.translation = -(inv.scale * rotate(translation, -rotation));
    }
    else
    {
        inv.rotation = rotation;
        const Point t{translation.x, -translation.y};
        inv.translation = -(inv.scale * rotate(t, rotation));
    }
    return inv;
}

// ============================================================================
// Circle equation and invariant
// ============================================================================

double circle_side(Point p, const CurvatureElement& K)
{
    const double dx = p.x - K.x;
    const double dy = p.y - K.y;
    return K.k * (dx * dx + dy * dy) + 2.0 * dx * std::sin(K.tau) - 2.0 * dy * std::cos(K.tau);
}

bool in_material(Point p, const CurvatureElement& K)
{
    return circle_side(p, K) <= 0.0;
}

double q_invariant(const CurvatureElement& K1, const CurvatureElement& K2)
{
    const double dx = K2.x - K1.x;
    const double dy = K2.y - K1.y;
    const double h = std::sin(0.5 * (K2.tau - K1.tau));
    return 0.25 * K1.k * K2.k * (dx * dx + dy * dy) + h * h
         + 0.5 * K2.k * (dx * std::sin(K1.tau) - dy * std::cos(K1.tau))
         - 0.5 * K1.k * (dx * std::sin(K2.tau) - dy * std::cos(K2.tau));
}

double q_normalized(const NormalizedEnds& e)
{
    const double so = std::sin(e.omega());
    return (e.kappa1 + std::sin(e.alpha)) * (e.kappa2 - std::sin(e.beta)) + so * so;
}

double tangency_fence(double kappa1, double kappa2, double scale)
{
    return scale * (1.0 + std::abs(kappa1)) * (1.0 + std::abs(kappa2));
}

// ============================================================================
// Inversion
// ============================================================================

Point invert_point(Point p, Point center, double radius)
{
    const Point d = p - center;
    const double r2 = dot(d, d);
    if (r2 == 0.0)
        throw Error(ErrorKind::InversionCenterHit, "point coincides with the inversion center");
    return center + (radius * radius / r2) * d;
}

CurvatureElement invert_element(const CurvatureElement& K, const CurvatureElement& K0)
{
    if (K0.k == 0.0)
        throw Error(ErrorKind::InvalidInput, "inversion circle must have nonzero curvature");
    const Point c0 = K0.center();
    const double r0 = 1.0 / std::abs(K0.k);
    const Point d = K.point() - c0;
    if (norm(d) <= 1e-14 * r0)
        throw Error(ErrorKind::InversionCenterHit, "element point coincides with the inversion center");

    const Point p = invert_point(K.point(), c0, r0);
    const double phi = std::atan2(d.y, d.x);
    const double q01 = q_invariant(K0, K);
    return {p.x, p.y, kPi - K.tau + 2.0 * phi, 2.0 * K0.k * (1.0 - 2.0 * q01) - K.k};
}

CurvatureElement circle_element(Point center, double radius)
{
    return {center.x + radius, center.y, 0.5 * kPi, 1.0 / radius};
}

// ============================================================================
// Normalization and arcs
// ============================================================================

std::pair<NormalizedEnds, Similarity> normalize_pair(const CurvatureElement& K1,
                                                     const CurvatureElement& K2)
{
    const Point d = K2.point() - K1.point();
    const double chord = norm(d);
    if (chord == 0.0 || !std::isfinite(chord))
        throw Error(ErrorKind::CoincidentEndpoints, "endpoints coincide");

    const double c = 0.5 * chord;
    const double mu = std::atan2(d.y, d.x);
    const Point mid = 0.5 * (K1.point() + K2.point());

    Similarity sim;
    sim.rotation = -mu;
    sim.scale = 1.0 / c;
    sim.translation = -(sim.scale * rotate(mid, -mu));

    NormalizedEnds ends;
    ends.alpha = canonical_angle(K1.tau - mu);
    ends.beta = canonical_angle(K2.tau - mu);
    ends.kappa1 = c * K1.k;
    ends.kappa2 = c * K2.k;
    ends.c = c;
    return {ends, sim};
}

CurvatureElement evaluate_arc(const CurvatureElement& K, double s)
{
    const double ks = K.k * s;
    Point step;
    if (std::abs(ks) < 1e-6)
    {
        // s * (e^{iks} - 1) / (iks), four terms
        const std::complex<double> x(0.0, ks);
        const std::complex<double> f = s * (1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0);
        const std::complex<double> z = std::polar(1.0, K.tau) * f;
        step = {z.real(), z.imag()};
    }
    else
    {
        const double chord = 2.0 * std::sin(0.5 * ks) / K.k;
        step = chord * unit(K.tau + 0.5 * ks);
    }
    return {K.x + step.x, K.y + step.y, K.tau + ks, K.k};
}

double arc_length_to(const CurvatureElement& K, Point target)
{
    const Point rel = rotate(target - K.point(), -K.tau);
    if (K.k == 0.0)
        return rel.x;
    double theta = std::atan2(K.k * rel.x, 1.0 - K.k * rel.y);
    if (K.k > 0.0 && theta < 0.0)
        theta = theta > -1e-13 ? 0.0 : theta + kTwoPi;
    else if (K.k < 0.0 && theta > 0.0)
        theta = theta < 1e-13 ? 0.0 : theta - kTwoPi;
    return theta / K.k;
}

} // namespace spiralkit
