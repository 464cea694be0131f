//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/io_util.cpp
//---------------------------------------------------------------------------//
#include "io_util.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace mcrt
{
char const* to_string(ErrorKind kind) noexcept
{
    switch (kind)
    {
        case ErrorKind::domain: return "domain";
        case ErrorKind::structural: return "structural";
        case ErrorKind::solver: return "solver";
        case ErrorKind::timeout: return "timeout";
        case ErrorKind::overflow: return "overflow";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

namespace detail
{
std::string fmt_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fnv1a_hex(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string read_text_file(std::string const& filename)
{
    std::ifstream is(filename, std::ios::binary);
    if (!is)
        throw IoError("cannot open " + filename);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string file_hash(std::string const& filename)
{
    return fnv1a_hex(read_text_file(filename));
}

void write_text_file(std::string const& filename, std::string_view text)
{
    std::ofstream os(filename, std::ios::binary);
    if (!os)
        throw IoError("cannot open " + filename + " for writing");
    os.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!os)
        throw IoError("failed writing " + filename);
}

}  // namespace detail
}  // namespace mcrt
