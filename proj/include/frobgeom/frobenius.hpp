#pragma once

// The s-Frobenius number F_s(a): the largest integer with fewer than s
// representations as a non-negative integer combination of the entries of a.
// Three routes that must agree:
//   - the n = 2 closed form  s*a_1*a_2 - (a_1 + a_2),
//   - an Apery-style sweep over residue classes modulo the smallest entry,
//   - a naive downward scan from a proven search bound.
// Convention: F_s = -1 when every non-negative integer already has >= s
// representations (possible only when some entry equals 1); this keeps the
// closed form total.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "frobgeom/core.hpp"
#include "frobgeom/denumerant.hpp"

namespace frobgeom {

enum class frobenius_method { closed_form_2, apery, naive_scan };

inline const char* method_name(frobenius_method m) {
    switch (m) {
        case frobenius_method::closed_form_2: return "closed_form_2";
        case frobenius_method::apery: return "apery";
        case frobenius_method::naive_scan: return "naive_scan";
    }
    return "?";
}

struct frobenius_result {
    std::int64_t value;  // >= -1
    frobenius_method method;
    std::int64_t search_bound_used;  // 0 for the closed form
};

inline frobenius_result frobenius_two_closed(const input_vector& a, const multiplicity& s) {
    if (a.dimension() != 2)
        throw input_error(errc::bad_argument, "closed form requires exactly 2 entries");
    i128 v = checked_sub(checked_mul((i128)s.value(), checked_mul((i128)a[0], (i128)a[1])),
                         checked_add((i128)a[0], (i128)a[1]));
    return {narrow_i64(v, "F_s"), frobenius_method::closed_form_2, 0};
}

// Smallest integer t >= 0 with t^d >= x (x >= 0). Seeded in floating point,
// then adjusted by exact integer comparison.
inline i128 ceil_root(i128 x, unsigned d) {
    if (x <= 0) return 0;
    if (d == 1) return x;
    i128 t = (i128)std::llround(std::pow((double)x, 1.0 / (double)d));
    while (t > 0 && checked_pow(t - 1, d) >= x) --t;
    while (checked_pow(t, d) < x) ++t;
    return t;
}

// A rigorous upper bound U_1 >= F_1(a).
//  n = 2: the closed form itself.
//  n >= 3: max of the classical 2*a_max*floor(a_min/n) - a_min (trusted only
//  when floor(a_min/n) >= 1) and a fallback: a_min*a_max when some coprime
//  pair exists among the entries, else the full product as a last resort.
inline i128 frobenius_one_upper(const input_vector& a) {
    const unsigned n = (unsigned)a.dimension();
    if (n == 2)
        return checked_sub(checked_mul((i128)a[0], (i128)a[1]), checked_add((i128)a[0], (i128)a[1]));
    const i128 a_min = a.min_entry(), a_max = a.max_entry();
    bool has_coprime_pair = false;
    for (std::size_t i = 0; i < n && !has_coprime_pair; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::gcd(a[i], a[j]) == 1) {
                has_coprime_pair = true;
                break;
            }
    i128 fallback = has_coprime_pair ? checked_mul(a_min, a_max) : a.product();
    i128 best = fallback;
    if (a_min / n >= 1) {
        i128 eg = checked_sub(checked_mul(2, checked_mul(a_max, a_min / n)), a_min);
        best = std::max(best, eg);
    }
    return best;
}

// Returns B with B >= F_s(a) + max_i a_i:
//   B = U_1 + ceil(((s-1) * (n-1)! * a_1*...*a_n)^(1/(n-1))) + max_i a_i.
// The middle term dominates F_s - F_1, so U_1 + term >= F_s.
inline std::int64_t search_bound(const input_vector& a, const multiplicity& s) {
    const unsigned d = (unsigned)a.dimension() - 1;
    i128 x = checked_mul((i128)(s.value() - 1), checked_mul(checked_factorial(d), a.product()));
    i128 b = checked_add(frobenius_one_upper(a), checked_add(ceil_root(x, d), (i128)a.max_entry()));
    return narrow_i64(b < 0 ? 0 : b, "search bound");
}

// Let q = min_i a_i. For each residue r mod q, the smallest t = r (mod q)
// with at least s representations marks where the class saturates: counts
// only grow along steps of q (append a copy of the q-coin). F_s is then the
// largest class maximum below its saturation point, max_r m_s(r) - q.
inline frobenius_result frobenius_apery(const input_vector& a, const multiplicity& s) {
    const std::int64_t q = a.min_entry();
    const std::int64_t bound = search_bound(a, s);
    denumerant_table table = build_table(a.entries(), bound, s.value());
    std::int64_t worst = -1;
    for (std::int64_t r = 0; r < q; ++r) {
        std::int64_t found = -1;
        for (std::int64_t t = r; t <= bound; t += q)
            if ((std::int64_t)table.counts[t] >= s.value()) {
                found = t;
                break;
            }
        if (found < 0)
            throw internal_error(errc::internal_bound_violation,
                                 "residue " + std::to_string(r) + " not saturated below " +
                                     std::to_string(bound));
        worst = std::max(worst, found);
    }
    return {worst - q, frobenius_method::apery, bound};
}

// Scan b downward from the search bound; the first b with fewer than s
// representations is F_s. Returns -1 if no such b >= 0 exists.
inline frobenius_result frobenius_naive(const input_vector& a, const multiplicity& s) {
    const std::int64_t bound = search_bound(a, s);
    denumerant_table table = build_table(a.entries(), bound, s.value());
    for (std::int64_t b = bound; b >= 0; --b)
        if ((std::int64_t)table.counts[b] < s.value())
            return {b, frobenius_method::naive_scan, bound};
    return {-1, frobenius_method::naive_scan, bound};
}

inline frobenius_result frobenius_number(const input_vector& a, const multiplicity& s,
                                         std::optional<frobenius_method> method = std::nullopt) {
    frobenius_method m = method.value_or(a.dimension() == 2 ? frobenius_method::closed_form_2
                                                            : frobenius_method::apery);
    switch (m) {
        case frobenius_method::closed_form_2: return frobenius_two_closed(a, s);
        case frobenius_method::apery: return frobenius_apery(a, s);
        case frobenius_method::naive_scan: return frobenius_naive(a, s);
    }
    throw input_error(errc::bad_argument, "unknown method");
}

}  // namespace frobgeom
