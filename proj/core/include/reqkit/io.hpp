// io.hpp - small file helpers
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#pragma once

#include <filesystem>
#include <string>

#include "reqkit/errors.hpp"

namespace reqkit {

/// Reads a whole UTF-8 text file; throws IoError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

/// Writes text, overwriting; throws IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace reqkit
