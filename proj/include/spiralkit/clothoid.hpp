#pragma once
/**
 * @file   clothoid.hpp
 * @brief  Fresnel integrals and sampled Cornu spirals k(s) = s / a².
 */

#include "spiralkit/core.hpp"
#include "spiralkit/vogt.hpp"

#include <cstddef>

namespace spiralkit
{

struct FresnelValue
{
    double C = 0.0;
    double S = 0.0;
};

/// C(t) = ∫₀ᵗ cos(πu²/2) du, S(t) = ∫₀ᵗ sin(πu²/2) du for |t| <= 20.
FresnelValue fresnel(double t);

/// Power series branch, used for |t| <= 1.6.
FresnelValue fresnel_series(double t);

/// Continued-fraction branch of the complementary error function, used beyond 1.6.
FresnelValue fresnel_auxiliary(double t);

struct ClothoidSpec
{
    double a = 1.0;
    double s_min = 0.0;
    double s_max = 1.0;
    std::size_t n = 200;
};

/// Curvature element of the clothoid through the origin with τ(0) = 0.
CurvatureElement clothoid_element(double a, double s);

/**
 * @brief n uniform samples on [s_min, s_max]; arclength is rebased to 0.
 * @throws Error InvalidInput, ResolutionTooCoarse.
 */
SampledSpiral sample_clothoid(const ClothoidSpec& spec);

} // namespace spiralkit
