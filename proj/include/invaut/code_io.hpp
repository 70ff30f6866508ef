#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "invaut/linear_code.hpp"

namespace invaut {

// Code files are UTF-8 text with one generator row per line written as a 0/1
// string; character i of a row is coordinate i + 1. Lines starting with '#'
// are comments and blank lines are skipped. All rows must have equal length.

/// Throws InvalidInput on malformed text, including a file with no rows
/// (its length would be unknown).
LinearCode parse_code(std::string_view text);
LinearCode read_code_file(const std::filesystem::path& path);

/// Writes the RREF rows, optionally preceded by a comment line.
void write_code(std::ostream& out, const LinearCode& code, const std::string& comment = {});

}  // namespace invaut
