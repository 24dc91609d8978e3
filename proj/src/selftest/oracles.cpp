#include "spiralkit/selftest.hpp"

#include <array>
#include <cmath>

namespace spiralkit::selftest::oracle
{

namespace
{

constexpr int kNodes = 16;

struct GaussLegendre
{
    std::array<long double, kNodes> x{};
    std::array<long double, kNodes> w{};

    GaussLegendre()
    {
        const long double pi = 3.141592653589793238462643383279502884L;
        for (int i = 0; i < kNodes; ++i)
        {
            long double z = std::cos(pi * (i + 0.75L) / (kNodes + 0.5L));
            long double dp = 0.0L;
            for (int it = 0; it < 100; ++it)
            {
                long double p0 = 1.0L, p1 = 0.0L;
                for (int j = 1; j <= kNodes; ++j)
                {
                    const long double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0L * j - 1.0L) * z * p1 - (j - 1.0L) * p2) / j;
                }
                dp = kNodes * (z * p0 - p1) / (z * z - 1.0L);
                const long double dz = p0 / dp;
                z -= dz;
                if (std::fabs(dz) < 1e-19L)
                    break;
            }
            x[i] = z;
            w[i] = 2.0L / ((1.0L - z * z) * dp * dp);
        }
    }
};

const GaussLegendre& rule()
{
    static const GaussLegendre gl;
    return gl;
}

// ∫ (cos τ(u), sin τ(u)) du over [u0, u1] with τ = u²/(2a²).
std::array<long double, 2> clothoid_displacement(long double a, long double u0, long double u1)
{
    const GaussLegendre& gl = rule();
    const int pieces = static_cast<int>(std::ceil(std::fabs(u1 - u0) / 0.05L)) + 1;
    const long double h = (u1 - u0) / pieces;
    long double cx = 0.0L, cy = 0.0L;
    for (int p = 0; p < pieces; ++p)
    {
        const long double m = u0 + (p + 0.5L) * h;
        for (int i = 0; i < kNodes; ++i)
        {
            const long double u = m + 0.5L * h * gl.x[i];
            const long double tau = u * u / (2.0L * a * a);
            cx += 0.5L * h * gl.w[i] * std::cos(tau);
            cy += 0.5L * h * gl.w[i] * std::sin(tau);
        }
    }
    return {cx, cy};
}

Point circle_center(const CurvatureElement& K)
{
    return {K.x - std::sin(K.tau) / K.k, K.y + std::cos(K.tau) / K.k};
}

} // namespace

double q_two_circles(const CurvatureElement& K1, const CurvatureElement& K2)
{
    const Point c1 = circle_center(K1), c2 = circle_center(K2);
    const double D = std::hypot(c1.x - c2.x, c1.y - c2.y);
    const double kkD = K1.k * K2.k * D;
    return (kkD * kkD - (K2.k - K1.k) * (K2.k - K1.k)) / (4.0 * K1.k * K2.k);
}

double q_line_circle(const CurvatureElement& line, const CurvatureElement& circle)
{
    const Point c = circle_center(circle);
    // Signed distance of the center to the right of the directed line.
    const double right = (c.x - line.x) * std::sin(line.tau) - (c.y - line.y) * std::cos(line.tau);
    return 0.5 * (1.0 + circle.k * right);
}

bool q_intersecting(const CurvatureElement& K1, const CurvatureElement& K2, double& q)
{
    const Point c1 = circle_center(K1), c2 = circle_center(K2);
    const double r1 = 1.0 / std::abs(K1.k), r2 = 1.0 / std::abs(K2.k);
    const double d = std::hypot(c2.x - c1.x, c2.y - c1.y);
    if (!(d > std::abs(r1 - r2) && d < r1 + r2))
        return false;
    const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h = std::sqrt(std::max(r1 * r1 - along * along, 0.0));
    const Point e{(c2.x - c1.x) / d, (c2.y - c1.y) / d};
    const Point p{c1.x + along * e.x - h * e.y, c1.y + along * e.y + h * e.x};

    auto tangent = [&](const CurvatureElement& K, Point c) {
        const double radial = std::atan2(p.y - c.y, p.x - c.x);
        return radial + (K.k > 0.0 ? 0.5 : -0.5) * kPi;
    };
    const double s = std::sin(0.5 * (tangent(K2, c2) - tangent(K1, c1)));
    q = s * s;
    return true;
}

FresnelValue fresnel_quadrature(double t)
{
    const GaussLegendre& gl = rule();
    const long double pi = 3.141592653589793238462643383279502884L;
    const int pieces = static_cast<int>(std::ceil(std::fabs(t) / 0.02)) + 1;
    const long double h = static_cast<long double>(t) / pieces;
    long double c = 0.0L, s = 0.0L;
    for (int p = 0; p < pieces; ++p)
    {
        const long double m = (p + 0.5L) * h;
        for (int i = 0; i < kNodes; ++i)
        {
            const long double u = m + 0.5L * h * gl.x[i];
            const long double arg = 0.5L * pi * u * u;
            c += 0.5L * h * gl.w[i] * std::cos(arg);
            s += 0.5L * h * gl.w[i] * std::sin(arg);
        }
    }
    return {static_cast<double>(c), static_cast<double>(s)};
}

ClothoidAngles clothoid_angles(double a, double s0, double s1, int steps)
{
    const long double A = a;
    const long double h = (static_cast<long double>(s1) - s0) / steps;
    auto tau = [&](long double s) { return s * s / (2.0L * A * A); };

    // Chord from Z(s0) to Z(v) and its turning rate
    // dμ/dv = (Z(v) − Z(s0)) × Z'(v) / |Z(v) − Z(s0)|², which tends to k(s0)/2.
    long double zx = 0.0L, zy = 0.0L;
    long double rate_prev = 0.5L * s0 / (A * A);
    long double mu = tau(s0);
    for (int j = 1; j <= steps; ++j)
    {
        const long double v0 = s0 + (j - 1) * h, v1 = s0 + j * h;
        const auto d = clothoid_displacement(A, v0, v1);
        zx += d[0];
        zy += d[1];
        const long double t = tau(v1);
        const long double rate = (zx * std::sin(t) - zy * std::cos(t)) / (zx * zx + zy * zy);
        mu += 0.5L * h * (rate_prev + rate);
        rate_prev = rate;
    }
    return {static_cast<double>(tau(s0) - mu), static_cast<double>(tau(s1) - mu)};
}

bool clothoid_short(double a, double s0, double s1, int steps)
{
    const auto d = clothoid_displacement(a, s0, s1);
    const double mu = std::atan2(static_cast<double>(d[1]), static_cast<double>(d[0]));
    auto tau = [&](double s) { return s * s / (2.0 * a * a); };
    const double base = tau(s0) - canonical_angle(tau(s0) - mu);
    for (int j = 1; j < steps; ++j)
    {
        const double rel = tau(s0 + (s1 - s0) * j / steps) - base;
        if (rel >= kPi || rel <= -kPi)
            return false;
    }
    return true;
}

} // namespace spiralkit::selftest::oracle
