#include "spiralkit/json_io.hpp"

#include <fstream>

namespace spiralkit::json_io
{

namespace
{

double number_at(const json& row, std::size_t i)
{
    if (!row[i].is_number())
        throw Error(ErrorKind::InvalidInput, "expected a number");
    return row[i].get<double>();
}

} // namespace

json to_json(Point p)
{
    return json::array({p.x, p.y});
}

json to_json(const CurvatureElement& e)
{
    return {{"x", e.x}, {"y", e.y}, {"tau", e.tau}, {"k", e.k}};
}

json to_json(const MultiArcCurve& curve)
{
    json segs = json::array();
    for (const ArcSegment& s : curve.segments)
    {
        json j = to_json(s.start);
        j["length"] = s.length;
        segs.push_back(j);
    }
    return {{"segments", segs},
            {"total_length", curve.total_length()},
            {"g1_defect", curve.g1_defect()},
            {"end", to_json(curve.end_element())}};
}

json to_json(const SampledSpiral& curve)
{
    json rows = json::array();
    for (const Sample& s : curve.samples())
        rows.push_back({s.s, s.x, s.y, s.tau, s.k_left, s.k_right});
    return {{"S", curve.length()}, {"samples", rows}};
}

SampledSpiral read_spiral(const json& j, bool circular)
{
    if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array())
        throw Error(ErrorKind::InvalidInput, "sampled curve needs a \"samples\" array");
    std::vector<Sample> out;
    for (const json& row : j["samples"])
    {
        if (!row.is_array() || row.size() < 5 || row.size() > 6)
            throw Error(ErrorKind::InvalidInput, "each sample is [s, x, y, tau, k_left, k_right?]");
        Sample s{number_at(row, 0), number_at(row, 1), number_at(row, 2), number_at(row, 3), number_at(row, 4), 0.0};
        s.k_right = (row.size() == 6) ? number_at(row, 5) : s.k_left;
        out.push_back(s);
    }
    return SampledSpiral(std::move(out), circular);
}

InterpolationData read_interpolation(const json& j)
{
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw Error(ErrorKind::InvalidInput, "interpolation data needs a \"points\" array");
    InterpolationData d;
    for (const json& row : j["points"])
    {
        if (!row.is_array() || row.size() != 2)
            throw Error(ErrorKind::InvalidInput, "each point is [x, y]");
        d.points.push_back({number_at(row, 0), number_at(row, 1)});
    }
    if (!j.contains("tau_start") || !j["tau_start"].is_number() || !j.contains("tau_end") || !j["tau_end"].is_number())
        throw Error(ErrorKind::InvalidInput, "interpolation data needs tau_start and tau_end");
    d.tau_start = j["tau_start"].get<double>();
    d.tau_end = j["tau_end"].get<double>();
    return d;
}

json load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try
    {
        return json::parse(in);
    }
    catch (const json::exception& e)
    {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

} // namespace spiralkit::json_io
