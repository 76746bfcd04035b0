#pragma once

// Text formats.
//
// Grid descriptor (JSON):
//   {"origin":[x0,y0], "cell":[dx,dy], "dims":[cols,rows], "data":[...]}
// with data in row-major order: data[j*cols + i] is cell (i, j), row j = 0
// being the bottom row. Sets use 0/1 data.
//
// CSV: a plain matrix, line j holding row j, unit cells, origin (0,0).
//
// Staircase: {"kind":"staircase", "cell":[dx,dy], "heights":[...]}
// Step function: {"kind":"step1d", "cell":dt, "data":[...]}
// Weight: {"kind":"constant", "value":c}
//         {"kind":"power", "a":a, "b":b, "scale":c}
//         {"kind":"vertical", "cell":dt, "data":[...]}
//         {"kind":"grid", <grid descriptor fields>}

#include <string>
#include <string_view>

#include "mdr/grid.hpp"
#include "mdr/weight.hpp"

namespace mdr {

enum class Format { Json, Csv };

// ".csv" (any case) selects CSV; everything else is JSON.
Format format_for_path(const std::string& path);

GridFunction2D parse_grid_function(std::string_view text, Format format);
GridSet2D parse_grid_set(std::string_view text, Format format);
StaircaseSet parse_staircase(std::string_view text);
StepFunction1D parse_step_function(std::string_view text);

std::string format_grid_function(const GridFunction2D& f, Format format);
std::string format_decreasing(const Decreasing2DGridFunction& f, Format format);
std::string format_grid_set(const GridSet2D& set, Format format);
std::string format_staircase(const StaircaseSet& s, Format format);
std::string format_step_function(const StepFunction1D& f, Format format);

Weight2D parse_weight(std::string_view json_text);
std::string format_weight(const Weight2D& w);
// Inline forms "constant", "constant:c", "power:a,b" or "power:a,b,c"; text
// starting with '{' is parsed as weight JSON.
Weight2D parse_weight_argument(std::string_view arg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace mdr
