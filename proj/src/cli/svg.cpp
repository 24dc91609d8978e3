#include "spiralkit/svg.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace spiralkit
{

namespace
{

constexpr int kStepsPerArc = 96;

const char* kStyle = R"(  <style>
    .arc { fill: none; stroke: #1f77b4; stroke-width: 1; vector-effect: non-scaling-stroke; }
    .lense { fill: none; stroke: #7f7f7f; stroke-width: 1; stroke-dasharray: 4 3; vector-effect: non-scaling-stroke; }
    .bilense { fill: none; stroke: #2ca02c; stroke-width: 1.5; vector-effect: non-scaling-stroke; }
    .spiral { fill: none; stroke: #d62728; stroke-width: 2; vector-effect: non-scaling-stroke; }
    .gamma-circle { fill: none; stroke: #9467bd; stroke-width: 1; stroke-dasharray: 2 2; vector-effect: non-scaling-stroke; }
    .point { fill: #000000; }
  </style>
)";

} // namespace

void SvgDocument::add_polyline(const std::vector<Point>& points, const std::string& cls)
{
    shapes_.push_back({points, cls, false});
}

void SvgDocument::add_arc(const CurvatureElement& e, double length, const std::string& cls)
{
    std::vector<Point> pts;
    for (int i = 0; i <= kStepsPerArc; ++i)
        pts.push_back(evaluate_arc(e, length * i / kStepsPerArc).point());
    add_polyline(pts, cls);
}

void SvgDocument::add_chain(const MultiArcCurve& curve, const std::string& cls)
{
    std::vector<Point> pts;
    for (const ArcSegment& seg : curve.segments)
        for (int i = pts.empty() ? 0 : 1; i <= kStepsPerArc; ++i)
            pts.push_back(evaluate_arc(seg.start, seg.length * i / kStepsPerArc).point());
    add_polyline(pts, cls);
}

void SvgDocument::add_full_circle(const CurvatureElement& e, const std::string& cls)
{
    if (e.k == 0.0)
    {
        add_arc(evaluate_arc(e, -4.0), 8.0, cls);
        return;
    }
    add_arc(e, kTwoPi / std::abs(e.k), cls);
}

void SvgDocument::add_marker(Point p, const std::string& cls)
{
    shapes_.push_back({{p}, cls, true});
}

std::string SvgDocument::str() const
{
    double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
    double x1 = -x0, y1 = -x0;
    for (const Shape& s : shapes_)
        for (Point p : s.points)
        {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    if (shapes_.empty())
        x0 = y0 = -1.0, x1 = y1 = 1.0;
    const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-6});
    x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
    const double radius = 0.006 * std::max(x1 - x0, y1 - y0);

    std::ostringstream out;
    out << std::fixed << std::setprecision(6);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
        << std::lround(800.0 * (y1 - y0) / (x1 - x0)) << "\" viewBox=\"" << x0 << ' ' << -y1 << ' ' << (x1 - x0)
        << ' ' << (y1 - y0) << "\">\n"
        << kStyle;
    for (const Shape& s : shapes_)
    {
        if (s.marker)
        {
            out << "  <circle class=\"" << s.cls << "\" cx=\"" << s.points[0].x << "\" cy=\"" << -s.points[0].y
                << "\" r=\"" << radius << "\"/>\n";
            continue;
        }
        out << "  <path class=\"" << s.cls << "\" d=\"";
        for (std::size_t i = 0; i < s.points.size(); ++i)
            out << (i == 0 ? "M" : " L") << s.points[i].x << ' ' << -s.points[i].y;
        out << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void SvgDocument::save(const std::string& path) const
{
    std::ofstream f(path);
    if (!f)
        throw Error(ErrorKind::InvalidInput, "cannot write " + path);
    f << str();
}

} // namespace spiralkit
