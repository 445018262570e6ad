#pragma once

// Independent reference computations shared by the tests.

#include "motivic/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <vector>

namespace oracle {

// Counts plane partitions of every size up to `max` by building rows that
// are partitions dominated componentwise by the previous row.
inline std::vector<long> plane_partition_counts(int max)
{
    std::vector<long> counts(static_cast<std::size_t>(max) + 1, 0);
    std::function<void(const std::vector<int> &, int)> rows = [&](const std::vector<int> &prev, int used) {
        ++counts[static_cast<std::size_t>(used)];
        std::vector<int> row;
        std::function<void(int)> extend = [&](int budget) {
            std::size_t i = row.size();
            if (i >= prev.size()) {
                return;
            }
            int cap = std::min(prev[i], i == 0 ? prev[0] : row.back());
            for (int part = 1; part <= std::min(cap, budget); ++part) {
                row.push_back(part);
                rows(row, max - budget + part);
                extend(budget - part);
                row.pop_back();
            }
        };
        extend(max - used);
    };
    // the first row is bounded only by the total size
    rows(std::vector<int>(static_cast<std::size_t>(max), max), 0);
    return counts;
}

// Truncated series with rational coefficients raised to an integer power.
inline std::vector<motivic::Rational> power_series_pow(const std::vector<motivic::Rational> &f, long c)
{
    const std::size_t n = f.size();
    auto mul = [n](const std::vector<motivic::Rational> &a, const std::vector<motivic::Rational> &b) {
        std::vector<motivic::Rational> out(n, motivic::Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; i + j < n; ++j) {
                out[i + j] += a[i] * b[j];
            }
        }
        return out;
    };
    std::vector<motivic::Rational> base = f;
    if (c < 0) {
        // 1 / f with f[0] = 1
        std::vector<motivic::Rational> inv(n, motivic::Rational(0));
        inv[0] = 1;
        for (std::size_t k = 1; k < n; ++k) {
            for (std::size_t j = 1; j <= k; ++j) {
                inv[k] -= f[j] * inv[k - j];
            }
        }
        base = inv;
        c = -c;
    }
    std::vector<motivic::Rational> out(n, motivic::Rational(0));
    out[0] = 1;
    for (long i = 0; i < c; ++i) {
        out = mul(out, base);
    }
    return out;
}

} // namespace oracle
