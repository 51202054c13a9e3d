#pragma once

// Geometry behind the Frobenius problem. For a = (a_1,...,a_n) write
// atilde = (a_1,...,a_{n-1}) and m = a_n (the last entry as given; callers
// wanting another distinguished entry rotate the instance first).
//
//   S_a = { x >= 0 : <atilde, x> <= 1 },  the (n-1)-simplex with vertices
//         0 and e_i / a_i;
//   L_a = { z in Z^{n-1} : <atilde, z> = 0 (mod m) },  an index-m sublattice.
//
// The integral s-covering radius of S_a with respect to L_a (anchors on
// Z^{n-1}) equals F_s(a) + a_n, and the continuous one exceeds it by
// a_1 + ... + a_{n-1}. integral_covering_radius computes the former by
// direct counting, independent of the frobenius module, so the two routes
// cross-check each other. The continuous radius is only ever evaluated
// through the identity; no general covering-radius solver is built.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "frobgeom/core.hpp"
#include "frobgeom/denumerant.hpp"
#include "frobgeom/frobenius.hpp"
#include "frobgeom/rational.hpp"

namespace frobgeom {

// ---------------------------------------------------------------------------
// Simplex

struct frobenius_simplex {
    std::vector<std::int64_t> prefix;  // atilde; vertices are 0 and e_i / prefix[i]
    std::size_t dimension() const { return prefix.size(); }
    rational volume() const {
        i128 den = checked_factorial((unsigned)prefix.size());
        for (std::int64_t e : prefix) den = checked_mul(den, (i128)e);
        return rational(1, den);
    }
};

inline frobenius_simplex make_simplex(const input_vector& a) { return {a.prefix()}; }

// vol(S_a) = 1 / ((n-1)! * a_1*...*a_{n-1}).
inline rational simplex_volume(const input_vector& a) { return make_simplex(a).volume(); }

// det(L_a) / vol(S_a) = (n-1)! * a_1*...*a_n.
inline i128 det_vol_ratio(const input_vector& a) {
    return checked_mul(checked_factorial((unsigned)a.dimension() - 1), a.product());
}

// ---------------------------------------------------------------------------
// Lattice

struct frobenius_lattice {
    std::vector<std::int64_t> a;  // the instance, last entry distinguished
    std::int64_t modulus;         // a_n
    // basis[j] is the j-th basis column, length n-1; triangular with
    // basis[j][j] on the diagonal and zeros below row j.
    std::vector<std::vector<std::int64_t>> basis;
    std::size_t rank() const { return basis.size(); }
};

namespace detail {

struct egcd_result {
    i128 g, x, y;  // g = x*a + y*b, g >= 0
};

inline egcd_result egcd(i128 a, i128 b) {
    i128 old_r = a, r = b;
    i128 old_x = 1, x = 0;
    i128 old_y = 0, y = 1;
    while (r != 0) {
        i128 q = old_r / r;
        i128 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_x - checked_mul(q, x);
        old_x = x;
        x = t;
        t = old_y - checked_mul(q, y);
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_r, old_x, old_y};
}

inline i128 floor_div(i128 a, i128 b) {  // b > 0
    i128 q = a / b;
    if (a % b < 0) --q;
    return q;
}

}  // namespace detail

// Column-style Hermite construction of a triangular basis for L_a.
// With g_k = gcd(m, a_1,...,a_{k-1}) the k-th diagonal is c_k = g_k / g_{k+1};
// the product of the diagonals telescopes to m / gcd(a) = m.
inline frobenius_lattice build_lattice(const input_vector& a) {
    const std::vector<std::int64_t> prefix = a.prefix();
    const std::int64_t m = a.last();
    const std::size_t d = prefix.size();

    // Running Bezout expansion g = um*m + sum_{i<k} u[i]*prefix[i].
    i128 g = m, um = 1;
    std::vector<i128> u;
    std::vector<i128> diag;
    std::vector<std::vector<i128>> cols;

    for (std::size_t k = 0; k < d; ++k) {
        i128 gnext = gcd_i128(g, prefix[k]);
        i128 ck = g / gnext;
        i128 w = -((i128)prefix[k] / gnext);  // so that w*g = -prefix[k]*ck
        std::vector<i128> col(d, 0);
        for (std::size_t i = 0; i < k; ++i) col[i] = checked_mul(u[i], w);
        col[k] = ck;
        // Reduce rows above the diagonal against the earlier columns.
        for (std::size_t i = k; i-- > 0;) {
            i128 q = detail::floor_div(col[i], diag[i]);
            if (q != 0)
                for (std::size_t r = 0; r <= i; ++r)
                    col[r] = checked_sub(col[r], checked_mul(q, cols[i][r]));
        }
        cols.push_back(col);
        diag.push_back(ck);
        // Fold prefix[k] into the Bezout expansion.
        detail::egcd_result e = detail::egcd(g, prefix[k]);
        um = checked_mul(e.x, um);
        for (i128& ui : u) ui = checked_mul(e.x, ui);
        u.push_back(e.y);
        g = e.g;
    }

    frobenius_lattice lat;
    lat.a = a.entries();
    lat.modulus = m;
    lat.basis.resize(d);
    for (std::size_t j = 0; j < d; ++j) {
        lat.basis[j].resize(d);
        for (std::size_t r = 0; r < d; ++r) lat.basis[j][r] = narrow_i64(cols[j][r], "basis entry");
    }
    return lat;
}

// Cofactor expansion; fine at these dimensions.
inline i128 lattice_determinant(const std::vector<std::vector<std::int64_t>>& cols) {
    const std::size_t d = cols.size();
    std::vector<std::vector<i128>> mat(d, std::vector<i128>(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t r = 0; r < d; ++r) mat[j][r] = cols[j][r];
    std::vector<std::size_t> rows(d);
    for (std::size_t r = 0; r < d; ++r) rows[r] = r;
    // recursive lambda over active rows and leading column
    auto det = [&](auto&& self, std::vector<std::size_t> active, std::size_t col) -> i128 {
        if (active.size() == 1) return mat[col][active[0]];
        i128 acc = 0;
        for (std::size_t k = 0; k < active.size(); ++k) {
            i128 pivot = mat[col][active[k]];
            if (pivot == 0) continue;
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != k) rest.push_back(active[j]);
            i128 minor = self(self, rest, col + 1);
            i128 term = checked_mul(pivot, minor);
            acc = (k % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
        }
        return acc;
    };
    return det(det, rows, 0);
}

// <atilde, z> mod m, normalized into [0, m).
inline std::int64_t residue_of(const frobenius_lattice& lat, std::span<const std::int64_t> z) {
    if (z.size() != lat.rank())
        throw input_error(errc::bad_argument, "vector length does not match lattice rank");
    i128 acc = 0;
    for (std::size_t i = 0; i < z.size(); ++i)
        acc = checked_add(acc, checked_mul((i128)lat.a[i], (i128)z[i]));
    i128 r = acc % lat.modulus;
    if (r < 0) r += lat.modulus;
    return (std::int64_t)r;
}

// ---------------------------------------------------------------------------
// Integral s-covering radius

struct covering_radius_result {
    std::int64_t value;
    // per_residue_threshold[c] = smallest rho with at least s points
    // <atilde, w> <= rho, w >= 0, <atilde, w> = c (mod a_n).
    std::vector<std::int64_t> per_residue_threshold;
};

// Direct counting oracle for the integral covering radius: lattice points of
// L_a inside z + rho*S_a biject with w = b - z in Z^{n-1}_{>=0} subject to
// <atilde, w> <= rho and <atilde, w> = -<atilde, z> (mod a_n), so coverage of
// every integer anchor z reduces to a cumulative capped count per residue
// class. Does not consult the frobenius module for any value; only the scan
// horizon comes from search_bound.
inline covering_radius_result integral_covering_radius(const input_vector& a, const multiplicity& s) {
    const std::int64_t m = a.last();
    const std::vector<std::int64_t> prefix = a.prefix();
    const std::int64_t horizon =
        narrow_i64(checked_add((i128)search_bound(a, s), (i128)m), "covering scan horizon");
    denumerant_table table = build_table(prefix, horizon, s.value());

    std::vector<std::int64_t> threshold((std::size_t)m, -1);
    std::vector<std::int64_t> cum((std::size_t)m, 0);
    std::int64_t remaining = m;
    for (std::int64_t t = 0; t <= horizon && remaining > 0; ++t) {
        std::size_t c = (std::size_t)(t % m);
        if (threshold[c] >= 0) continue;
        cum[c] = std::min<std::int64_t>(s.value(), cum[c] + (std::int64_t)table.counts[t]);
        if (cum[c] >= s.value()) {
            threshold[c] = t;
            --remaining;
        }
    }
    if (remaining > 0)
        throw internal_error(errc::internal_bound_violation,
                             "some residue class not covered below the scan horizon");
    std::int64_t worst = 0;
    for (std::int64_t t : threshold) worst = std::max(worst, t);
    return {worst, std::move(threshold)};
}

// Continuous s-covering radius via the identity F_s(a) + a_1 + ... + a_n.
// For n = 2 this equals s*a_1*a_2.
inline std::int64_t covering_radius_identity(const input_vector& a, const multiplicity& s) {
    frobenius_result f = frobenius_number(a, s);
    return narrow_i64(checked_add((i128)f.value, a.sum()), "covering radius");
}

// ---------------------------------------------------------------------------
// Difference-body gauge and successive minima

// Gauge of the difference body S_a - S_a: the least lambda with
// v in lambda*(S_a - S_a), which splits as max(<atilde, v+>, <atilde, v->)
// over the componentwise positive parts. Zero only at the origin.
inline std::int64_t difference_gauge(std::span<const std::int64_t> v, const input_vector& a) {
    if (v.size() != a.dimension() - 1)
        throw input_error(errc::bad_argument, "vector length must be n-1");
    i128 pos = 0, neg = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > 0) pos = checked_add(pos, checked_mul((i128)a[i], (i128)v[i]));
        if (v[i] < 0) neg = checked_add(neg, checked_mul((i128)a[i], -(i128)v[i]));
    }
    return narrow_i64(pos > neg ? pos : neg, "gauge");
}

namespace detail {

inline bool is_independent(const std::vector<std::vector<std::int64_t>>& chosen,
                           const std::vector<std::int64_t>& candidate) {
    // Fraction-free elimination on (chosen + candidate) rows.
    std::vector<std::vector<i128>> rows;
    for (const auto& v : chosen) rows.emplace_back(v.begin(), v.end());
    rows.emplace_back(candidate.begin(), candidate.end());
    const std::size_t nr = rows.size(), nc = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t p = rank;
        while (p < nr && rows[p][c] == 0) ++p;
        if (p == nr) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = rank + 1; r < nr; ++r) {
            if (rows[r][c] == 0) continue;
            i128 f1 = rows[rank][c], f2 = rows[r][c];
            for (std::size_t cc = 0; cc < nc; ++cc)
                rows[r][cc] = checked_sub(checked_mul(f1, rows[r][cc]), checked_mul(f2, rows[rank][cc]));
        }
        ++rank;
    }
    return rank == nr;
}

}  // namespace detail

// Successive minima of S_a with respect to L_a under the difference-body
// gauge: enumerate lattice vectors with gauge <= R inside the coefficient box
// |v_i| <= R / a_i, greedily pick gauge-sorted independent vectors, and double
// R until n-1 of them are found. R = m * max(atilde) always suffices because
// the axis vectors m*e_i lie in L_a, so the doubling terminates. The budget
// caps the total number of enumerated cells.
inline std::vector<std::int64_t> successive_minima(const input_vector& a,
                                                   std::int64_t cell_budget = (std::int64_t)1 << 27) {
    const frobenius_lattice lat = build_lattice(a);
    const std::vector<std::int64_t> prefix = a.prefix();
    const std::size_t d = prefix.size();
    const std::int64_t m = lat.modulus;

    const i128 r_done = checked_mul((i128)m, (i128)*std::max_element(prefix.begin(), prefix.end()));
    i128 r = checked_mul((i128)m, (i128)*std::min_element(prefix.begin(), prefix.end()));
    std::int64_t cells_used = 0;

    while (true) {
        const std::int64_t radius = narrow_i64(r, "enumeration radius");
        // Gather lattice vectors with gauge <= radius.
        std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> found;
        std::vector<std::int64_t> v(d, 0);
        bool over_budget = false;
        auto walk = [&](auto&& self, std::size_t dim, i128 pos, i128 neg) -> void {
            if (over_budget) return;
            if (dim == d) {
                ++cells_used;
                if (cells_used > cell_budget) {
                    over_budget = true;
                    return;
                }
                bool zero = true;
                for (std::int64_t x : v)
                    if (x != 0) zero = false;
                if (zero) return;
                if (residue_of(lat, v) != 0) return;
                found.emplace_back((std::int64_t)(pos > neg ? pos : neg), v);
                return;
            }
            const std::int64_t span = radius / prefix[dim];
            for (std::int64_t x = -span; x <= span; ++x) {
                i128 p = pos, ng = neg;
                if (x > 0) p = checked_add(p, checked_mul((i128)prefix[dim], (i128)x));
                if (x < 0) ng = checked_add(ng, checked_mul((i128)prefix[dim], -(i128)x));
                if (p > radius || ng > radius) continue;
                v[dim] = x;
                self(self, dim + 1, p, ng);
                if (over_budget) return;
            }
            v[dim] = 0;
        };
        walk(walk, 0, 0, 0);
        if (over_budget)
            throw resource_error(errc::resource_limit,
                                 "minima enumeration exceeded " + std::to_string(cell_budget) + " cells");

        std::stable_sort(found.begin(), found.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::vector<std::int64_t>> chosen;
        std::vector<std::int64_t> minima;
        for (const auto& [gauge, vec] : found) {
            if (chosen.size() == d) break;
            if (detail::is_independent(chosen, vec)) {
                chosen.push_back(vec);
                minima.push_back(gauge);
            }
        }
        if (minima.size() == d) return minima;
        if (r >= r_done)
            throw internal_error(errc::internal_bound_violation,
                                 "guaranteed enumeration radius failed to produce a full rank set");
        r = std::min(checked_mul(r, 2), r_done);
    }
}

}  // namespace frobgeom
