#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace mira::stats {

// Percentile with linear interpolation between order statistics
// (rank = pct/100 * (n-1) over the sorted values).
inline double percentile(std::vector<double> values, double pct) {
    if (values.empty()) throw std::invalid_argument("percentile of empty set");
    std::sort(values.begin(), values.end());
    if (values.size() == 1) return values[0];
    double rank = pct / 100.0 * static_cast<double>(values.size() - 1);
    rank = std::clamp(rank, 0.0, static_cast<double>(values.size() - 1));
    auto lo = static_cast<std::size_t>(rank);
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = rank - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

inline double mean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Fractional (average) ranks, 1-based; ties share the mean of their rank run.
inline std::vector<double> fractional_ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size(), 0.0);
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

inline std::optional<double> pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) return std::nullopt;
    double ma = mean(a), mb = mean(b);
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma, db = b[i] - mb;
        sab += da * db;
        saa += da * da;
        sbb += db * db;
    }
    if (saa == 0.0 || sbb == 0.0) return std::nullopt;  // constant sequence: undefined
    return sab / std::sqrt(saa * sbb);
}

// Spearman rank correlation with average-rank tie handling. nullopt when
// either side is constant (undefined, reported distinctly by callers).
inline std::optional<double> spearman(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) return std::nullopt;
    auto ra = fractional_ranks(a);
    auto rb = fractional_ranks(b);
    return pearson(ra, rb);
}

}  // namespace mira::stats
