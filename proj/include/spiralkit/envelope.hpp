#pragma once
/**
 * @file   envelope.hpp
 * @brief  Circular arcs through interpolation points and the chain of
 *         chord lenses they bound.
 */

#include "spiralkit/biarc.hpp"
#include "spiralkit/core.hpp"

#include <vector>

namespace spiralkit
{

struct InterpolationData
{
    std::vector<Point> points;
    double tau_start = 0.0;
    double tau_end = 0.0;
};

/// Lense over one chord PᵢPᵢ₊₁.
struct ChordLense
{
    LenseSpec lense;
    /// World frame to the chord-normalized frame.
    Similarity to_normalized;
    double half_chord = 0.0;
    /// Separation of the two boundary arcs at the chord midpoint.
    double width = 0.0;
    /// Some boundary angle reaches π/2.
    bool very_short_violation = false;
    /// sin ω vanishes; the lense is a single arc.
    bool degenerate = false;
};

struct LenseChain
{
    /// Arcs A₁..Aₙ; Aᵢ is anchored at Pᵢ.
    std::vector<CurvatureElement> arcs;
    std::vector<ChordLense> chords;

    std::vector<double> curvatures() const;
    /// Curvatures k₁..kₙ never decrease or never increase, up to rounding.
    bool monotone() const;
    double max_width() const;
};

/// @throws Error InvalidInput (fewer than 3 points), DegenerateTriple.
std::vector<CurvatureElement> arcs_through_points(const InterpolationData& data);

/// @throws Error InvalidInput, DegenerateTriple.
LenseChain build_lense_chain(const InterpolationData& data);

/// Union of the closed chord lenses.
bool in_envelope(const LenseChain& chain, Point p, double slack = 1e-12);

} // namespace spiralkit
