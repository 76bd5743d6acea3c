#pragma once

#include <string>

#include "lpk/grid.hpp"

namespace lpk {

enum class FileFormat { json, binary };

// JSON: {"dims": d, "log_sizes": [...], "re": [...], "im": [...]}.
std::string to_json_text(const GridFunction& f);
GridFunction from_json_text(const std::string& text);

// Binary: "LPKG", u32 dims, u32 log size per axis, then (re, im) little-endian doubles.
std::string to_binary(const GridFunction& f);
GridFunction from_binary(const std::string& bytes);

// Format from the extension: .json is JSON, anything else binary.
FileFormat format_of(const std::string& path);
GridFunction read_grid_function(const std::string& path);
void write_grid_function(const GridFunction& f, const std::string& path);

}  // namespace lpk
