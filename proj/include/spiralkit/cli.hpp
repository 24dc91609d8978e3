#pragma once
/**
 * @file   cli.hpp
 * @brief  Command-line front end: JSON in and out, SVG figures.
 */

#include "spiralkit/core.hpp"

#include <string>

namespace spiralkit::cli
{

/// 2 for validation errors, 3 for infeasible geometry, 4 for resolution.
int exit_code(ErrorKind kind);

/// Parses "(x,y,tau,k)"; the parentheses are optional.
/// @throws Error InvalidInput.
CurvatureElement parse_element(const std::string& text);

/// Parses "(x,y)".
/// @throws Error InvalidInput.
Point parse_point(const std::string& text);

/// Real number that may also be "inf" or "-inf".
/// @throws Error InvalidInput.
double parse_extended(const std::string& text);

int run(int argc, char** argv);

} // namespace spiralkit::cli
