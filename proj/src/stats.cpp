//---------------------------------------------------------------------------//
// Copyright 2026 mcrt developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file stats.cpp
//---------------------------------------------------------------------------//
#include "mcrt/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "mcrt/error.hpp"
#include "mcrt/rng.hpp"

namespace mcrt
{
double median(std::vector<double> values)
{
    if (values.empty())
        throw DomainError("median of an empty sample");
    auto mid = values.begin() + values.size() / 2;
    std::nth_element(values.begin(), mid, values.end());
    double hi = *mid;
    if (values.size() % 2 == 1)
        return hi;
    double lo = *std::max_element(values.begin(), mid);
    return 0.5 * (lo + hi);
}

MeanError mean_and_error(std::span<double const> values)
{
    if (values.size() < 2)
        throw DomainError("standard error needs at least two values");
    double mean = 0;
    for (double v : values)
        mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    double var = ss / static_cast<double>(values.size() - 1);
    return {mean, std::sqrt(var / static_cast<double>(values.size()))};
}

Band bootstrap_median(std::span<double const> values,
                      std::size_t replicates,
                      std::uint64_t seed,
                      double level)
{
    if (values.empty() || replicates == 0)
        throw DomainError("bootstrap needs values and replicates");
    Band band;
    band.median = median({values.begin(), values.end()});
    CounterRng rng(derive_key(seed, 0x626f6f74));
    std::vector<double> meds(replicates);
    std::vector<double> sample(values.size());
    auto const m = static_cast<std::uint32_t>(values.size());
    for (auto& med : meds)
    {
        for (auto& s : sample)
            s = values[rng.below(m)];
        med = median(sample);
    }
    std::sort(meds.begin(), meds.end());
    double const alpha = 0.5 * (1 - level);
    auto at = [&](double q) {
        auto i = static_cast<std::size_t>(std::floor(q * (replicates - 1) + 0.5));
        return meds[std::min(i, replicates - 1)];
    };
    band.lo = at(alpha);
    band.hi = at(1 - alpha);
    return band;
}

ChiSquare chi_square_two_sample(std::span<std::uint64_t const> a,
                                std::span<std::uint64_t const> b,
                                std::uint64_t min_count)
{
    std::size_t const k = std::max(a.size(), b.size());
    auto get = [k](std::span<std::uint64_t const> h, std::size_t i) {
        return i < h.size() ? h[i] : 0;
    };
    std::vector<std::pair<double, double>> pooled;
    double pa = 0, pb = 0;
    for (std::size_t i = k; i-- > 0;)
    {
        pa += static_cast<double>(get(a, i));
        pb += static_cast<double>(get(b, i));
        if (pa + pb >= static_cast<double>(min_count))
        {
            pooled.emplace_back(pa, pb);
            pa = pb = 0;
        }
    }
    if (pa + pb > 0)
    {
        if (pooled.empty())
            pooled.emplace_back(pa, pb);
        else
        {
            pooled.back().first += pa;
            pooled.back().second += pb;
        }
    }
    double na = 0, nb = 0;
    for (auto const& [x, y] : pooled)
    {
        na += x;
        nb += y;
    }
    if (na == 0 || nb == 0)
        throw DomainError("chi-square test needs two nonempty samples");

    ChiSquare out;
    out.bins = pooled.size();
    if (pooled.size() < 2)
        return out;
    double const ka = std::sqrt(nb / na), kb = std::sqrt(na / nb);
    for (auto const& [x, y] : pooled)
    {
        double const d = ka * x - kb * y;
        out.statistic += d * d / (x + y);
    }
    out.dof = pooled.size() - 1;
    boost::math::chi_squared dist(static_cast<double>(out.dof));
    out.p_value = boost::math::cdf(complement(dist, out.statistic));
    return out;
}

}  // namespace mcrt
