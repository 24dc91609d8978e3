#pragma once
/**
 * @file   json_io.hpp
 * @brief  JSON encoding of elements, arc chains, sampled curves and
 *         interpolation data.
 */

#include "spiralkit/biarc.hpp"
#include "spiralkit/envelope.hpp"
#include "spiralkit/vogt.hpp"

#include <json.hpp>

#include <string>

namespace spiralkit::json_io
{

using json = nlohmann::json;

json to_json(Point p);
json to_json(const CurvatureElement& e);
json to_json(const MultiArcCurve& curve);

/// {"S": length, "samples": [[s, x, y, tau, k_left, k_right], ...]}
json to_json(const SampledSpiral& curve);

/// Reads the sampled-curve format; k_right defaults to k_left.
/// @throws Error InvalidInput and the SampledSpiral validation errors.
SampledSpiral read_spiral(const json& j, bool circular = false);

/// {"points": [[x, y], ...], "tau_start": t1, "tau_end": tn}
/// @throws Error InvalidInput.
InterpolationData read_interpolation(const json& j);

/// @throws Error InvalidInput.
json load_file(const std::string& path);

} // namespace spiralkit::json_io
