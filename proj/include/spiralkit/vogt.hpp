#pragma once
/**
 * @file   vogt.hpp
 * @brief  Sampled curves of monotone curvature, cumulative boundary angles,
 *         chord crossing counters and shortness classification.
 */

#include "spiralkit/core.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace spiralkit
{

struct Sample
{
    double s = 0.0;
    double x = 0.0;
    double y = 0.0;
    double tau = 0.0;
    double k_left = 0.0;
    double k_right = 0.0;

    Point point() const { return {x, y}; }
};

enum class Monotonicity
{
    Increasing,
    Decreasing,
    Constant,
};

/**
 * @brief Arclength-ordered samples of a curve with monotone curvature.
 *
 * Validated on construction: s starts at 0 and increases, per-step tangent
 * change stays below π/2, each step moves forward along the local tangent
 * and the merged curvature sequence is monotone.
 */
class SampledSpiral
{
public:
    explicit SampledSpiral(std::vector<Sample> samples, bool circular = false);

    const std::vector<Sample>& samples() const { return samples_; }
    const Sample& operator[](std::size_t i) const { return samples_[i]; }
    std::size_t size() const { return samples_.size(); }
    std::size_t last() const { return samples_.size() - 1; }
    double length() const { return samples_.back().s; }
    bool circular() const { return circular_; }
    Monotonicity monotonicity() const { return monotonicity_; }

    /// Curvature at the start (right limit) and at the end (left limit).
    double k_start() const { return samples_.front().k_right; }
    double k_end() const { return samples_.back().k_left; }

    /// Samples i0..i1 with arclength rebased to 0.
    SampledSpiral subspan(std::size_t i0, std::size_t i1) const;
    /// Mirror image about the X axis.
    SampledSpiral mirrored() const;
    SampledSpiral transformed(const Similarity& sim) const;
    /// Rigid motion putting the endpoints at (−c, 0) and (c, 0).
    SampledSpiral chord_frame() const;

    /// Sample of minimal |k|; the inflection when curvature changes sign.
    std::size_t reference_index() const;
    bool has_inflection() const;

private:
    std::vector<Sample> samples_;
    bool circular_ = false;
    Monotonicity monotonicity_ = Monotonicity::Constant;
};

struct CumulativeAngles
{
    double alpha_tilde = 0.0;
    double beta_tilde = 0.0;
    double omega_tilde = 0.0;
    double rho = 0.0;
    /// Multiples of 2π separating the cumulative angles from their
    /// canonical values; non-negative for a valid spiral.
    int N1 = 0;
    int N2 = 0;
};

enum class VogtSign
{
    Consistent,
    Inconsistent,
    Circular,
};

struct ChordCounters
{
    int N1 = 0;
    int N2 = 0;
    int M1 = 0;
    int M2 = 0;
    int chord_crossings = 0;

    bool consistent() const { return N1 == M1 && N2 == M2; }
};

/// Unwrapped chord directions μ(0, s_i) and μ(s_i, S) along the curve.
struct ChordAngleProfile
{
    std::vector<double> mu_start;
    std::vector<double> mu_end;
};

VogtSign vogt_sign(double alpha, double beta, double k1, double k2, double tol = 1e-12);

bool short_bounds_check(const NormalizedEnds& ends);

/// @throws Error ResolutionTooCoarse.
CumulativeAngles cumulative_angles(const SampledSpiral& curve);

/// Same for the sub-span between samples i0 and i1.
CumulativeAngles cumulative_angles(const SampledSpiral& curve, std::size_t i0, std::size_t i1);

/// @throws Error ResolutionTooCoarse.
ChordAngleProfile chord_angle_profile(const SampledSpiral& curve);

/// @throws Error ResolutionTooCoarse.
ChordCounters chord_counters(const SampledSpiral& curve);

/// @throws Error ResolutionTooCoarse.
std::vector<std::pair<double, double>> delta_profile(const SampledSpiral& curve);

bool is_short(const SampledSpiral& curve);

bool winding_bounds_check(const CumulativeAngles& ca, bool has_inflection);

/// Normalized end data with angles in the half-open range of the
/// curve's monotonicity class.
NormalizedEnds end_data(const SampledSpiral& curve);

} // namespace spiralkit
