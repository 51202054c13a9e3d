#pragma once

// Every bound evaluated as an exact predicate over integers, with fractional
// exponents cleared by raising both sides to the (n-1)-th power. Reports
// carry the cleared quantities so a verdict can be audited. A report with
// applicable = false makes no claim.
//
// Names and cleared forms, with d = n-1, P = (n-1)! * a_1*...*a_n and
// mu_s = F_s + a_1 + ... + a_n:
//   volume_lower            s * P <= (F_s + sum a)^d
//   incremental_upper       (F_s - F_1)^d <= (s-1) * P
//   classical_volume_lower  P < (F_1 + sum a)^d          (n >= 3, strict)
//   erdos_graham_upper      F_1 <= 2*e_{k-1}*floor(e_k/k) - e_k over the
//                           sorted distinct entries e_1 < ... < e_k
//                           (applicable only when floor(e_1/k) >= 1)
//   covering_volume_lower   s * P <= mu_s^d
//   covering_incremental    (mu_s - mu_1)^d <= (s-1) * P
//   minima_sum_upper        (d * max(mu_s - sum lambda_i, 0))^d
//                             <= d! * (s-1) * (sum lambda_i)^d

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "frobgeom/core.hpp"
#include "frobgeom/frobenius.hpp"
#include "frobgeom/lattice_geom.hpp"

namespace frobgeom {

enum class bound_verdict { holds, violated, inconclusive };

inline const char* verdict_name(bound_verdict v) {
    switch (v) {
        case bound_verdict::holds: return "holds";
        case bound_verdict::violated: return "violated";
        case bound_verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct bound_report {
    std::string bound_name;
    std::vector<std::int64_t> a;
    std::int64_t s = 1;
    bool applicable = true;
    bound_verdict verdict = bound_verdict::holds;
    bool equality = false;  // the cleared comparison is tight
    std::string lhs, rhs;   // exact cleared quantities, decimal
    std::string relation;   // "<=" or "<"
    std::string note;

    bool holds() const { return applicable && verdict == bound_verdict::holds; }
};

namespace detail {

inline bound_report make_report(std::string name, const input_vector& a, std::int64_t s, i128 lhs,
                                i128 rhs, bool strict) {
    bound_report r;
    r.bound_name = std::move(name);
    r.a = a.entries();
    r.s = s;
    r.lhs = frobgeom::to_string(lhs);
    r.rhs = frobgeom::to_string(rhs);
    r.relation = strict ? "<" : "<=";
    bool ok = strict ? lhs < rhs : lhs <= rhs;
    r.verdict = ok ? bound_verdict::holds : bound_verdict::violated;
    r.equality = lhs == rhs;
    return r;
}

inline i128 scaled_product(const input_vector& a) {
    return checked_mul(checked_factorial((unsigned)a.dimension() - 1), a.product());
}

}  // namespace detail

// s^(1/d) * ((n-1)! * prod a)^(1/d) - sum a <= F_s, cleared to
// s*(n-1)!*prod a <= (F_s + sum a)^d. Tight for every n = 2 instance.
inline bound_report frobenius_volume_lower(const input_vector& a, const multiplicity& s, std::int64_t f_s) {
    const unsigned d = (unsigned)a.dimension() - 1;
    i128 lhs = checked_mul((i128)s.value(), detail::scaled_product(a));
    i128 rhs = checked_pow(checked_add((i128)f_s, a.sum()), d);
    return detail::make_report("volume_lower", a, s.value(), lhs, rhs, false);
}

inline bound_report frobenius_volume_lower(const input_vector& a, const multiplicity& s) {
    return frobenius_volume_lower(a, s, frobenius_number(a, s).value);
}

// F_s <= F_1 + ((s-1) * (n-1)! * prod a)^(1/d), cleared to
// (F_s - F_1)^d <= (s-1)*(n-1)!*prod a. F_s >= F_1 always (monotone in s).
inline bound_report frobenius_incremental_upper(const input_vector& a, const multiplicity& s, std::int64_t f_s,
                                       std::int64_t f_1) {
    const unsigned d = (unsigned)a.dimension() - 1;
    i128 diff = checked_sub((i128)f_s, (i128)f_1);
    i128 lhs = checked_pow(diff < 0 ? 0 : diff, d);
    i128 rhs = checked_mul((i128)(s.value() - 1), detail::scaled_product(a));
    bound_report r = detail::make_report("incremental_upper", a, s.value(), lhs, rhs, false);
    if (diff < 0) r.note = "F_s below F_1; bound trivially true";
    return r;
}

inline bound_report frobenius_incremental_upper(const input_vector& a, const multiplicity& s) {
    std::int64_t f_s = frobenius_number(a, s).value;
    std::int64_t f_1 = s.value() == 1 ? f_s : frobenius_number(a, multiplicity::validate(1)).value;
    return frobenius_incremental_upper(a, s, f_s, f_1);
}

// The classical n >= 3 bracket for F_1: strict volume lower bound and the
// Erdos-Graham upper bound 2 * e_{k-1} * floor(e_k / k) - e_k over the sorted
// distinct entries e_1 < ... < e_k (duplicates add no representation and must
// not inflate the coin count). Marked applicable only when floor(e_1/k) >= 1;
// below that regime the formula degenerates.
inline std::vector<bound_report> classical_bounds(const input_vector& a, std::int64_t f_1) {
    if (a.dimension() < 3)
        throw input_error(errc::bad_argument, "classical bounds require n >= 3");
    const unsigned d = (unsigned)a.dimension() - 1;
    std::vector<bound_report> out;

    i128 lhs = detail::scaled_product(a);
    i128 rhs = checked_pow(checked_add((i128)f_1, a.sum()), d);
    out.push_back(detail::make_report("classical_volume_lower", a, 1, lhs, rhs, true));

    std::vector<std::int64_t> distinct = a.entries();
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const std::size_t k = distinct.size();
    bound_report upper;
    if (k >= 2 && distinct[0] / (std::int64_t)k >= 1) {
        i128 second = distinct[k - 2], largest = distinct[k - 1];
        i128 cap = checked_sub(checked_mul(2, checked_mul(second, largest / (i128)k)), largest);
        upper = detail::make_report("erdos_graham_upper", a, 1, (i128)f_1, cap, false);
    } else {
        upper.bound_name = "erdos_graham_upper";
        upper.a = a.entries();
        upper.s = 1;
        upper.applicable = false;
        upper.verdict = bound_verdict::inconclusive;
        upper.note = "not applicable: floor(min_entry / #distinct) = 0";
    }
    out.push_back(std::move(upper));
    return out;
}

inline std::vector<bound_report> classical_bounds(const input_vector& a) {
    return classical_bounds(a, frobenius_number(a, multiplicity::validate(1)).value);
}

// The s-covering sandwich for mu_s = F_s + sum a with d = n-1:
//   s*(n-1)!*prod a <= mu_s^d   and   (mu_s - mu_1)^d <= (s-1)*(n-1)!*prod a.
// Both are equalities for every n = 2 instance.
inline std::vector<bound_report> covering_sandwich(const input_vector& a, const multiplicity& s,
                                                   std::int64_t f_s, std::int64_t f_1) {
    const unsigned d = (unsigned)a.dimension() - 1;
    i128 mu_s = checked_add((i128)f_s, a.sum());
    i128 mu_1 = checked_add((i128)f_1, a.sum());
    std::vector<bound_report> out;
    out.push_back(detail::make_report("covering_volume_lower", a, s.value(),
                                      checked_mul((i128)s.value(), detail::scaled_product(a)),
                                      checked_pow(mu_s, d), false));
    i128 diff = checked_sub(mu_s, mu_1);
    out.push_back(detail::make_report("covering_incremental_upper", a, s.value(),
                                      checked_pow(diff < 0 ? 0 : diff, d),
                                      checked_mul((i128)(s.value() - 1), detail::scaled_product(a)),
                                      false));
    return out;
}

inline std::vector<bound_report> covering_sandwich(const input_vector& a, const multiplicity& s) {
    std::int64_t f_s = frobenius_number(a, s).value;
    std::int64_t f_1 = s.value() == 1 ? f_s : frobenius_number(a, multiplicity::validate(1)).value;
    return covering_sandwich(a, s, f_s, f_1);
}

// mu_s <= (1 + (d!^(1/d)/d) * (s-1)^(1/d)) * sum lambda_i with d = n-1.
// The single root clears exactly: with L = d*(mu_s - sum lambda) the bound is
// L <= 0 or L^d <= d!*(s-1)*(sum lambda)^d, so the verdict is exact;
// inconclusive only appears when the minima enumeration blows its budget.
inline bound_report minima_sum_bound(const input_vector& a, const multiplicity& s,
                                             std::int64_t f_s) {
    const unsigned d = (unsigned)a.dimension() - 1;
    bound_report r;
    r.bound_name = "minima_sum_upper";
    r.a = a.entries();
    r.s = s.value();
    std::vector<std::int64_t> minima;
    try {
        minima = successive_minima(a);
    } catch (const resource_error& e) {
        r.verdict = bound_verdict::inconclusive;
        r.note = std::string("successive minima not computed: ") + e.what();
        return r;
    }
    i128 lambda_sum = 0;
    for (std::int64_t l : minima) lambda_sum = checked_add(lambda_sum, (i128)l);
    i128 mu_s = checked_add((i128)f_s, a.sum());
    i128 left = checked_mul((i128)d, checked_sub(mu_s, lambda_sum));
    i128 lhs = checked_pow(left < 0 ? 0 : left, d);
    i128 rhs = checked_mul(checked_mul(checked_factorial(d), (i128)(s.value() - 1)),
                           checked_pow(lambda_sum, d));
    bound_report cmp = detail::make_report("minima_sum_upper", a, s.value(), lhs, rhs, false);
    return cmp;
}

inline bound_report minima_sum_bound(const input_vector& a, const multiplicity& s) {
    return minima_sum_bound(a, s, frobenius_number(a, s).value);
}

// Runs the full roster for one instance. For n = 2 the classical bracket is
// reported as a single not-applicable entry.
inline std::vector<bound_report> verify_instance(const input_vector& a, const multiplicity& s) {
    std::int64_t f_s = frobenius_number(a, s).value;
    std::int64_t f_1 = s.value() == 1 ? f_s : frobenius_number(a, multiplicity::validate(1)).value;
    std::vector<bound_report> out;
    out.push_back(frobenius_volume_lower(a, s, f_s));
    out.push_back(frobenius_incremental_upper(a, s, f_s, f_1));
    if (a.dimension() >= 3) {
        for (bound_report& r : classical_bounds(a, f_1)) out.push_back(std::move(r));
    } else {
        bound_report stub;
        stub.bound_name = "classical_bounds";
        stub.a = a.entries();
        stub.s = s.value();
        stub.applicable = false;
        stub.verdict = bound_verdict::inconclusive;
        stub.note = "not applicable: requires n >= 3";
        out.push_back(std::move(stub));
    }
    out.push_back(minima_sum_bound(a, s, f_s));
    return out;
}

}  // namespace frobgeom
