#pragma once

#include "amdesign/code.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace amdesign {

/// Plain-text generator matrix:
///
///   q n k
///   <k rows of n digits>
///
/// Blank lines and lines starting with '#' are ignored. Digits above 9 are
/// written A, B, C. Errors carry 1-based line/column positions.
LinearCode parse_code_file(std::string_view text, std::string name = {});

/// {"q": 3, "n": 4, "k": 1, "rows": ["1111"]}; numbers may also be strings.
LinearCode parse_code_json(std::string_view text, std::string name = {});

/// Dispatches on the first non-blank character ('{' selects JSON).
LinearCode parse_code(std::string_view text, std::string name = {});

LinearCode load_code(const std::filesystem::path& path);

std::string format_code_file(const LinearCode& code);

}  // namespace amdesign
