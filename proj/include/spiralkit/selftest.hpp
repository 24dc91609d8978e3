#pragma once
/**
 * @file   selftest.hpp
 * @brief  Property suites for the acceptance criteria and the independent
 *         reference computations they compare against.
 */

#include "spiralkit/clothoid.hpp"
#include "spiralkit/core.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace spiralkit::selftest
{

inline constexpr std::uint64_t kDefaultSeed = 0x56474F54;

/// SPIRALKIT_SEED when set (decimal or 0x-prefixed hex), else the default.
std::uint64_t seed_from_env();

class Rng
{
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    double log_uniform(double lo, double hi);
    int integer(int lo, int hi);
    bool coin(double p = 0.5);

    CurvatureElement element(double extent, double kmax);
    Similarity similarity();

private:
    std::mt19937_64 engine_;
};

// ----------------------------------------------------------------------------
// Reference computations
// ----------------------------------------------------------------------------

namespace oracle
{

/// Q of two circles from their centers and signed curvatures.
double q_two_circles(const CurvatureElement& K1, const CurvatureElement& K2);

/// Q of a line K1 and a circle K2 from the signed distance of its center.
double q_line_circle(const CurvatureElement& line, const CurvatureElement& circle);

/// Q of two intersecting circles from the angle at an intersection point.
/// Returns false when the circles do not intersect.
bool q_intersecting(const CurvatureElement& K1, const CurvatureElement& K2, double& q);

/// Fresnel integrals by Gauss-Legendre quadrature in extended precision.
FresnelValue fresnel_quadrature(double t);

/// Cumulative boundary angles of the clothoid k = s/a² on [s0, s1],
/// by integrating the turning rate of the chord from Z(s0).
struct ClothoidAngles
{
    double alpha_tilde = 0.0;
    double beta_tilde = 0.0;
    double omega_tilde() const { return 0.5 * (alpha_tilde + beta_tilde); }
};
ClothoidAngles clothoid_angles(double a, double s0, double s1, int steps = 20000);

/// Shortness of the clothoid arc from the range of its tangent directions.
bool clothoid_short(double a, double s0, double s1, int steps = 20000);

} // namespace oracle

// ----------------------------------------------------------------------------
// Acceptance criteria
// ----------------------------------------------------------------------------

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 9;

CriterionResult run_criterion(int id, std::uint64_t seed);

/// All criteria in order; parallel runs each criterion on its own thread.
std::vector<CriterionResult> run_all(std::uint64_t seed, bool parallel = true);

} // namespace spiralkit::selftest
