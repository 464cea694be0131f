//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file mcrt/stats.hpp
//! Small statistics helpers for the Monte Carlo diagnostics.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mcrt
{
double median(std::vector<double> values);

struct MeanError
{
    double mean{0};
    double std_error{0};
};

MeanError mean_and_error(std::span<double const> values);

struct Band
{
    double median{0};
    double lo{0};
    double hi{0};
};

//! Percentile bootstrap band for the median.
Band bootstrap_median(std::span<double const> values,
                      std::size_t replicates,
                      std::uint64_t seed,
                      double level = 0.95);

struct ChiSquare
{
    double statistic{0};
    std::size_t dof{0};
    double p_value{1};
    std::size_t bins{0};  //!< After pooling
};

/*!
 * Two-sample chi-square homogeneity test on histograms over the same bins.
 *
 * Adjacent bins are pooled from the top down until every pooled bin holds at
 * least min_count observations in total.
 */
ChiSquare chi_square_two_sample(std::span<std::uint64_t const> a,
                                std::span<std::uint64_t const> b,
                                std::uint64_t min_count = 10);

}  // namespace mcrt
