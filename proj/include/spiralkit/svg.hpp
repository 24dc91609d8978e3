#pragma once
/**
 * @file   svg.hpp
 * @brief  Deterministic SVG 1.1 output. Coordinates are Y-up and flipped
 *         on emission.
 */

#include "spiralkit/biarc.hpp"

#include <string>
#include <vector>

namespace spiralkit
{

class SvgDocument
{
public:
    void add_polyline(const std::vector<Point>& points, const std::string& cls);
    /// Arc of the given length along the circle (or line) of e.
    void add_arc(const CurvatureElement& e, double length, const std::string& cls);
    void add_chain(const MultiArcCurve& curve, const std::string& cls);
    /// Whole circle of e; a line is drawn across the current extent.
    void add_full_circle(const CurvatureElement& e, const std::string& cls);
    void add_marker(Point p, const std::string& cls);

    std::string str() const;
    /// @throws Error InvalidInput when the file cannot be written.
    void save(const std::string& path) const;

private:
    struct Shape
    {
        std::vector<Point> points;
        std::string cls;
        bool marker = false;
    };
    std::vector<Shape> shapes_;
};

} // namespace spiralkit
