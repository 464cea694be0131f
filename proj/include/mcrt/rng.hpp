//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/rng.hpp
//! Counter-based SplitMix64 streams.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <limits>

namespace mcrt
{
//---------------------------------------------------------------------------//
//! SplitMix64 finalizer (Steele, Lea & Flood; constants from Vigna).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

//! Derive an independent stream key from a base seed and a stream index.
constexpr std::uint64_t derive_key(std::uint64_t base_seed,
                                   std::uint64_t index) noexcept
{
    return mix64(mix64(base_seed ^ 0x6a09e667f3bcc909ULL)
                 + mix64(index + golden_gamma));
}

//---------------------------------------------------------------------------//
/*!
 * SplitMix64 in counter mode.
 *
 * The k-th output is a pure function of (key, k), so a stream can be
 * positioned anywhere without replaying it. Satisfies
 * UniformRandomBitGenerator.
 */
class CounterRng
{
  public:
    using result_type = std::uint64_t;

    constexpr explicit CounterRng(std::uint64_t key,
                                  std::uint64_t counter = 0) noexcept
        : key_(key), counter_(counter)
    {
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept
    {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() noexcept
    {
        ++counter_;
        return mix64(key_ + counter_ * golden_gamma);
    }

    //! Uniform integer in [0, n) by multiply-shift (bias below 2^-64 * n).
    std::uint32_t below(std::uint32_t n) noexcept
    {
        __extension__ using u128 = unsigned __int128;
        auto prod = static_cast<u128>((*this)()) * n;
        return static_cast<std::uint32_t>(prod >> 64);
    }

    //! Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    constexpr std::uint64_t key() const noexcept { return key_; }
    constexpr std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_;
};

//---------------------------------------------------------------------------//
/*!
 * Random stream owned by one walker.
 *
 * The sequence depends only on (base seed, walker index), never on which
 * thread or in what order walkers are run.
 */
struct WalkerStream
{
    std::uint64_t base_seed{0};
    std::uint64_t walker{0};
    CounterRng rng{derive_key(0, 0)};

    WalkerStream() = default;
    WalkerStream(std::uint64_t seed, std::uint64_t index)
        : base_seed(seed), walker(index), rng(derive_key(seed, index))
    {
    }

    std::uint64_t step_counter() const noexcept { return rng.counter(); }
};

//---------------------------------------------------------------------------//
}  // namespace mcrt
