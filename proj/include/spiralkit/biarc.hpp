#pragma once
/**
 * @file   biarc.hpp
 * @brief  The normalized biarc family B(b; α, β), lenses and bilenses.
 *
 * All quantities live in the chord-normalized frame: the chord runs from
 * A = (−1, 0) to B = (1, 0). The family parameter b is an extended real;
 * b = 0 names the arc A(−β) and b = ±∞ the arc A(α).
 */

#include "spiralkit/core.hpp"
#include "spiralkit/vogt.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace spiralkit
{

struct LenseSpec
{
    double alpha = 0.0;
    double beta = 0.0;

    double omega() const { return 0.5 * (alpha + beta); }
    double gamma() const { return 0.5 * (alpha - beta); }
};

struct BiarcSpec
{
    LenseSpec lense;
    double b = 1.0;
};

struct BiarcCurvatures
{
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    bool kappa1_infinite = false;
    bool kappa2_infinite = false;
};

struct ArcSegment
{
    CurvatureElement start;
    double length = 0.0;

    CurvatureElement end() const { return evaluate_arc(start, length); }
};

/// G¹ chain of circular arcs and line segments.
struct MultiArcCurve
{
    std::vector<ArcSegment> segments;

    CurvatureElement start_element() const { return segments.front().start; }
    CurvatureElement end_element() const { return segments.back().end(); }
    double total_length() const;
    /// Largest point or tangent mismatch between consecutive segments.
    double g1_defect() const;
    /// Curvatures of consecutive segments never decrease (or never increase).
    bool monotone_curvature() const;
};

/// Boundary arc A(ξ) from A to B with tangent ξ at A.
CurvatureElement boundary_arc(double xi);

/// Circle Γ carrying the contact points of the family.
CurvatureElement gamma_circle(const LenseSpec& lense);

/// @throws Error DegenerateLense.
BiarcCurvatures biarc_curvatures(const BiarcSpec& spec);

/// @throws Error ContactAtInfinity.
Point contact_point(const BiarcSpec& spec);

/// Direction of the common tangent at the contact point, in (−π, π].
double junction_tangent(const BiarcSpec& spec);

/// @throws Error PolePoint, DegenerateLense.
double b_through_point(const LenseSpec& lense, Point p);

/// @throws Error DegenerateLense.
double b_star(const LenseSpec& lense);

/// @throws Error DegenerateLense, ContactAtInfinity.
double biarc_length(const BiarcSpec& spec);

/// @throws Error DegenerateLense, ContactAtInfinity.
MultiArcCurve build_biarc(const BiarcSpec& spec);

/// Which arc A(ξ), ξ ∈ (−π, π], passes through p.
double lense_parameter(Point p);

/// Open lense between A(α) and A(−β).
bool in_lense(const LenseSpec& lense, Point p);

/// Closed lense widened by slack radians in ξ; the poles are included.
bool in_closed_lense(const LenseSpec& lense, Point p, double slack = 0.0);

/// @throws Error NotASpiralPair, DegenerateLense.
std::pair<double, double> bilense_bounds(const NormalizedEnds& ends);

/// @throws Error NotASpiralPair, DegenerateLense, PolePoint.
bool in_bilense(const NormalizedEnds& ends, Point p);

/**
 * @brief Dense sampling of a chain, at most max_turn radians of tangent
 *        change per step and at least min_steps steps per segment.
 */
SampledSpiral sample_chain(const MultiArcCurve& curve, double max_turn = kPi / 32.0, std::size_t min_steps = 8);

} // namespace spiralkit
