#pragma once
/**
 * @file   core.hpp
 * @brief  Curvature elements, the implicit circle equation, the inversive
 *         invariant Q and circle inversion of elements.
 */

#include "spiralkit/error.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace spiralkit
{

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator-(Point a) { return {-a.x, -a.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point unit(double angle) { return {std::cos(angle), std::sin(angle)}; }
inline Point rotate(Point a, double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

/// Wrap to (−π, π].
double canonical_angle(double angle);
/// Wrap to [−π, π).
double canonical_angle_lower(double angle);

/**
 * @brief Point, tangent direction and signed curvature. Names the directed
 *        circle (or line when k = 0) through the point.
 */
struct CurvatureElement
{
    double x = 0.0;
    double y = 0.0;
    double tau = 0.0;
    double k = 0.0;

    Point point() const { return {x, y}; }
    /// Center of the circle; only meaningful for k != 0.
    Point center() const { return {x - std::sin(tau) / k, y + std::cos(tau) / k}; }
    /// Same circle traversed the other way.
    CurvatureElement reversed() const { return {x, y, tau + kPi, -k}; }
};

/**
 * @brief End data of an arc in the frame where the chord is [−1, 1] on the
 *        X axis. Curvatures are scaled by the half-chord c.
 */
struct NormalizedEnds
{
    double alpha = 0.0;
    double beta = 0.0;
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double c = 1.0;

    double omega() const { return 0.5 * (alpha + beta); }
    double gamma() const { return 0.5 * (alpha - beta); }
    CurvatureElement start() const { return {-1.0, 0.0, alpha, kappa1}; }
    CurvatureElement end() const { return {1.0, 0.0, beta, kappa2}; }
};

/**
 * @brief p -> scale * R(rotation) * F(p) + translation, where F mirrors
 *        about the X axis when reflect is set.
 */
struct Similarity
{
    double rotation = 0.0;
    double scale = 1.0;
    Point translation{};
    bool reflect = false;

    Point apply(Point p) const;
    double apply_angle(double tau) const;
    double apply_curvature(double k) const;
    CurvatureElement apply(const CurvatureElement& e) const;
    Similarity inverse() const;
};

/// Implicit circle equation; negative on the left of the directed circle.
double circle_side(Point p, const CurvatureElement& K);

/// Closed region of material, circle_side <= 0.
bool in_material(Point p, const CurvatureElement& K);

/// Inversive invariant of the two circles named by K1 and K2.
double q_invariant(const CurvatureElement& K1, const CurvatureElement& K2);

/// Invariant of the boundary circles K(−1,0,α,κ1) and K(1,0,β,κ2).
double q_normalized(const NormalizedEnds& ends);

inline constexpr double kDefaultTangencyScale = 1e-10;

/// |Q| below this counts as tangency for normalized curvatures κ1, κ2.
double tangency_fence(double kappa1, double kappa2, double scale = kDefaultTangencyScale);

/// Image of p under inversion in the circle (center, radius).
Point invert_point(Point p, Point center, double radius);

/**
 * @brief Image of K under inversion in the circle of K0.
 * @throws Error InversionCenterHit if K sits on the center of K0;
 *         InvalidInput if K0 is a line.
 */
CurvatureElement invert_element(const CurvatureElement& K, const CurvatureElement& K0);

/// Element naming the circle with given center and radius, counter-clockwise.
CurvatureElement circle_element(Point center, double radius);

/**
 * @brief Chord-normalized end data of the pair and the similarity taking
 *        the original frame to the normalized one.
 * @throws Error CoincidentEndpoints.
 */
std::pair<NormalizedEnds, Similarity> normalize_pair(const CurvatureElement& K1,
                                                     const CurvatureElement& K2);

/// Element reached after arclength s along the circle of K.
CurvatureElement evaluate_arc(const CurvatureElement& K, double s);

/**
 * @brief Arclength from K to a target point on its circle, travelling in
 *        the direction of K. Result lies in [0, 2π/|k|).
 */
double arc_length_to(const CurvatureElement& K, Point target);

} // namespace spiralkit
