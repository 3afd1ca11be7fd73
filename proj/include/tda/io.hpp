#pragma once

#include <filesystem>
#include <string>

namespace tda {

// Shortest decimal string that round-trips back to the same double.
// Keeps rerun CSV output byte-identical.
std::string format_double(double v);

// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

} // namespace tda
