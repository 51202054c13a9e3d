#pragma once

// Capped representation counting. counts[b] = min(cap, #{z >= 0 : <coins, z> = b}).
// True denumerants grow polynomially; every consumer only ever compares the
// count against a small threshold s, so counting saturates at cap = s and
// stays in machine range.

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "frobgeom/core.hpp"

namespace frobgeom {

// Table memory budget in entries, process-wide. Exceeding it is a hard error,
// never a silent truncation.
inline std::atomic<std::uint64_t>& table_budget_ref() {
    static std::atomic<std::uint64_t> budget{std::uint64_t(1) << 31};
    return budget;
}
inline std::uint64_t table_budget() { return table_budget_ref().load(); }
inline void set_table_budget(std::uint64_t entries) { table_budget_ref().store(entries); }

struct capped_count {
    std::int64_t value;  // in [0, cap]; value == cap means "at least cap"
    std::int64_t cap;
    bool saturated() const { return value == cap; }
};

struct denumerant_table {
    std::vector<std::int64_t> coins;
    std::int64_t cap = 1;
    std::vector<std::uint32_t> counts;  // index b = 0..limit

    std::int64_t limit() const { return (std::int64_t)counts.size() - 1; }
    capped_count at(std::int64_t b) const { return {(std::int64_t)counts[(std::size_t)b], cap}; }
};

// Standard coin-counting DP, one coin at a time, additions saturating at cap.
// Space O(limit), time O(#coins * limit).
inline denumerant_table build_table(std::span<const std::int64_t> coins, std::int64_t limit,
                                    std::int64_t cap, std::uint64_t budget = table_budget()) {
    if (coins.empty()) throw input_error(errc::empty_input, "no coins");
    for (std::int64_t c : coins)
        if (c <= 0) throw input_error(errc::non_positive, "coin " + std::to_string(c) + " is not positive");
    if (limit < 0) throw input_error(errc::bad_argument, "negative table limit");
    if (cap < 1) throw input_error(errc::invalid_multiplicity, "cap must be >= 1");
    if (cap > UINT32_MAX)
        throw resource_error(errc::resource_limit, "cap " + std::to_string(cap) + " exceeds table cell range");
    if ((std::uint64_t)limit + 1 > budget)
        throw resource_error(errc::resource_limit,
                             "table of " + std::to_string(limit + 1) + " entries exceeds budget of " +
                                 std::to_string(budget));

    denumerant_table t;
    t.coins.assign(coins.begin(), coins.end());
    t.cap = cap;
    t.counts.assign((std::size_t)limit + 1, 0);
    t.counts[0] = 1;  // the empty representation; 1 <= cap always
    const std::uint32_t cap32 = (std::uint32_t)cap;
    for (std::int64_t coin : coins) {
        if (coin > limit) continue;  // contributes nothing below the limit
        for (std::int64_t b = coin; b <= limit; ++b) {
            std::uint64_t v = (std::uint64_t)t.counts[b] + t.counts[b - coin];
            t.counts[b] = v >= cap32 ? cap32 : (std::uint32_t)v;
        }
    }
    return t;
}

inline denumerant_table build_table(const std::vector<std::int64_t>& coins, std::int64_t limit,
                                    std::int64_t cap, std::uint64_t budget = table_budget()) {
    return build_table(std::span<const std::int64_t>(coins), limit, cap, budget);
}

// min(cap, #{z in Z^n_{>=0} : <a, z> = b}).
inline capped_count denumerant(std::int64_t b, const input_vector& a, const multiplicity& cap) {
    if (b < 0) throw input_error(errc::bad_argument, "denumerant of a negative target");
    return build_table(a.entries(), b, cap.value()).at(b);
}

}  // namespace frobgeom
