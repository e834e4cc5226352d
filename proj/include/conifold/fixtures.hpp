#pragma once

#include <string>

namespace conifold {

// Writes every versioned fixture (conifold dimer, vanishing-cycle dg model,
// the four reference paths) into the directory; returns a short summary.
std::string write_fixtures(const std::string& directory);

std::string read_text_file(const std::string& path);

}  // namespace conifold
