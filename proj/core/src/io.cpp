// io.cpp
// Copyright 2026 the reqkit authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "reqkit/io.hpp"

#include <fstream>
#include <sstream>

namespace reqkit {

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read file: " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write file: " + path.string());
    out << text;
    if (!out)
        throw IoError("write failed: " + path.string());
}

} // namespace reqkit
