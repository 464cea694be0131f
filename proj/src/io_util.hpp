//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file src/io_util.hpp
//! Little-endian stream helpers and small formatting utilities.
//---------------------------------------------------------------------------//
#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "mcrt/error.hpp"

namespace mcrt::detail
{
static_assert(std::endian::native == std::endian::little,
              "binary formats assume a little-endian host");

template<class T>
void write_le(std::ostream& os, T value)
{
    char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    os.write(buf, sizeof(T));
}

template<class T>
T read_le(std::istream& is)
{
    char buf[sizeof(T)];
    is.read(buf, sizeof(T));
    if (is.gcount() != static_cast<std::streamsize>(sizeof(T)))
        throw IoError("unexpected end of file");
    T value;
    std::memcpy(&value, buf, sizeof(T));
    return value;
}

//! Shortest round-trip representation ("%.17g").
std::string fmt_double(double x);

//! FNV-1a 64-bit hash, hex encoded.
std::string fnv1a_hex(std::string_view bytes);
std::string file_hash(std::string const& filename);

std::string read_text_file(std::string const& filename);
void write_text_file(std::string const& filename, std::string_view text);

}  // namespace mcrt::detail
