#include "spiralkit/clothoid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace spiralkit
{

namespace
{

constexpr double kSeriesLimit = 1.6;

FresnelValue odd_extend(FresnelValue v, double t)
{
    return t < 0.0 ? FresnelValue{-v.C, -v.S} : v;
}

} // namespace

FresnelValue fresnel_series(double t)
{
    const double x = std::abs(t);
    const double f = 0.5 * kPi * x * x;
    double term = x; // f^m x / m!
    double c = 0.0, s = 0.0;
    for (int m = 0; m < 200; ++m)
    {
        if (m > 0)
            term *= f / m;
        const double contrib = term / (2 * m + 1);
        const double sign = ((m / 2) % 2 == 0) ? 1.0 : -1.0;
        if (m % 2 == 0)
            c += sign * contrib;
        else
            s += sign * contrib;
        if (m > 2 && contrib < 1e-18 * (std::abs(c) + std::abs(s)))
            break;
    }
    return odd_extend({c, s}, t);
}

FresnelValue fresnel_auxiliary(double t)
{
    using cplx = std::complex<double>;
    const double x = std::abs(t);
    if (x == 0.0)
        return {0.0, 0.0};
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    const double pix2 = kPi * x * x;

    // Modified Lentz evaluation of the continued fraction for erfc.
    cplx b(1.0, -pix2);
    cplx cc(1.0 / tiny, 0.0);
    cplx d = 1.0 / b;
    cplx h = d;
    double n = -1.0;
    for (int k = 2; k < 10000; ++k)
    {
        n += 2.0;
        const double a = -n * (n + 1.0);
        b += 4.0;
        d = 1.0 / (a * d + b);
        cc = b + a / cc;
        const cplx del = cc * d;
        h *= del;
        if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < 1e-16)
            break;
    }
    h *= cplx(x, -x);
    const cplx cs = cplx(0.5, 0.5) * (1.0 - std::polar(1.0, 0.5 * pix2) * h);
    return odd_extend({cs.real(), cs.imag()}, t);
}

FresnelValue fresnel(double t)
{
    return std::abs(t) <= kSeriesLimit ? fresnel_series(t) : fresnel_auxiliary(t);
}

CurvatureElement clothoid_element(double a, double s)
{
    const double scale = a * std::sqrt(kPi);
    const FresnelValue f = fresnel(s / scale);
    return {scale * f.C, scale * f.S, s * s / (2.0 * a * a), s / (a * a)};
}

SampledSpiral sample_clothoid(const ClothoidSpec& spec)
{
    if (!(spec.a > 0.0) || !std::isfinite(spec.a))
        throw Error(ErrorKind::InvalidInput, "clothoid rate must be positive");
    if (!(spec.s_min < spec.s_max))
        throw Error(ErrorKind::InvalidInput, "clothoid span must satisfy s_min < s_max");
    if (spec.n < 16)
        throw Error(ErrorKind::InvalidInput, "clothoid sampling needs n >= 16");
    if (std::max(std::abs(spec.s_min), std::abs(spec.s_max)) / (spec.a * std::sqrt(kPi)) > 20.0)
        throw Error(ErrorKind::InvalidInput, "clothoid span exceeds the Fresnel range");

    const double h = (spec.s_max - spec.s_min) / static_cast<double>(spec.n - 1);
    const double kmax = std::max(std::abs(spec.s_min), std::abs(spec.s_max)) / (spec.a * spec.a);
    if (kmax * h >= 0.5 * kPi)
        throw Error(ErrorKind::ResolutionTooCoarse, "tangent step reaches π/2; increase n");

    std::vector<Sample> samples(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i)
    {
        const double s = (i + 1 == spec.n) ? spec.s_max : spec.s_min + h * static_cast<double>(i);
        const CurvatureElement e = clothoid_element(spec.a, s);
        samples[i] = {s - spec.s_min, e.x, e.y, e.tau, e.k, e.k};
    }
    samples.front().s = 0.0;
    return SampledSpiral(std::move(samples));
}

} // namespace spiralkit
