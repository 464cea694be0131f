//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/version.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace mcrt
{
inline constexpr char const version_string[] = "0.1.0";
}  // namespace mcrt
