#pragma once
/**
 * @file   construct.hpp
 * @brief  Existence tests and three-arc synthesis of spirals joining two
 *         curvature elements.
 */

#include "spiralkit/biarc.hpp"
#include "spiralkit/core.hpp"

namespace spiralkit
{

enum class ExistenceStatus
{
    UniqueBiarc,
    SpiralFamily,
    None,
};

enum class ExistenceReason
{
    Satisfied,
    QPositive,
    TangentCircles,
    VogtViolation,
    CircularCoincidence,
};

struct ExistenceVerdict
{
    ExistenceStatus status = ExistenceStatus::None;
    double q_value = 0.0;
    ExistenceReason reason = ExistenceReason::Satisfied;
};

const char* to_string(ExistenceStatus status);
const char* to_string(ExistenceReason reason);

/// Short spiral between the normalized end data.
ExistenceVerdict exists_short(const NormalizedEnds& ends, double fence_scale = kDefaultTangencyScale);

/// Spiral of any winding between two elements; never a unique biarc.
/// @throws Error CoincidentEndpoints.
ExistenceVerdict exists_any(const CurvatureElement& K1, const CurvatureElement& K2,
                            double fence_scale = kDefaultTangencyScale);

/// Inversion in the circle carrying the boundary arc A(ξ); a reflection
/// about the X axis when ξ = 0.
CurvatureElement invert_in_arc_circle(const CurvatureElement& K, double xi);
Point invert_point_in_arc_circle(Point p, double xi);

/// Boundary data after inversion in the circle of A(γ/2).
NormalizedEnds symmetrized_ends(const NormalizedEnds& ends);

/**
 * @brief Short spiral of three arcs (two when Q = 0) in the normalized frame.
 * @throws Error NoSpiralExists, DegenerateLense.
 */
MultiArcCurve construct_short(const NormalizedEnds& ends);

/**
 * @brief Inversion circle mapping the circles of K1 and K2 to concentric
 *        ones. which = 0 or 1 selects the limiting point.
 * @throws Error NotDisjoint.
 */
CurvatureElement concentricizing_inversion(const CurvatureElement& K1, const CurvatureElement& K2,
                                           int which = 0);

/**
 * @brief Three-arc spiral from K1 to K2.
 * @throws Error NoSpiralExists, InversionCenterHit.
 */
MultiArcCurve construct_any(const CurvatureElement& K1, const CurvatureElement& K2);

/// Shortest distance from p to the points of a segment.
double distance_to_segment(const ArcSegment& seg, Point p);

/// Image of a chain under inversion in the circle of K0.
/// @throws Error InversionCenterHit if a segment passes near the center.
MultiArcCurve invert_chain(const MultiArcCurve& curve, const CurvatureElement& K0);

MultiArcCurve transform_chain(const MultiArcCurve& curve, const Similarity& sim);

} // namespace spiralkit
