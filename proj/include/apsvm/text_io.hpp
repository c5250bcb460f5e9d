#pragma once

#include <string>

namespace apsvm {

/// Whole-file read; InputError when the file cannot be opened.
std::string read_text(const std::string& path);

/// Writes `text` to `path`, creating missing parent directories. InputError on failure.
void write_text(const std::string& path, const std::string& text);

} // namespace apsvm
