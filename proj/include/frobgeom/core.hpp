#pragma once

// Shared vocabulary for the frobgeom library: checked 128-bit integer
// arithmetic, the error taxonomy, and validated problem instances.
//
// An instance is a positive integer vector a = (a_1,...,a_n) with
// gcd(a) = 1 and n >= 2, together with a multiplicity s >= 1. Entries
// are kept exactly as given: unsorted and possibly repeated. Operations
// that need a distinguished smallest/largest/last entry select it
// internally without mutating the input.

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frobgeom {

inline constexpr std::string_view k_version = "0.1.0";

using i128 = __int128;

// ---------------------------------------------------------------------------
// Errors

enum class errc {
    empty_input,
    non_positive,
    non_primitive,
    dimension_too_small,
    invalid_multiplicity,
    bad_argument,
    arithmetic_overflow,
    resource_limit,
    sampler_stuck,
    internal_bound_violation,
    io_failure,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::non_positive: return "NonPositive";
        case errc::non_primitive: return "NonPrimitive";
        case errc::dimension_too_small: return "DimensionTooSmall";
        case errc::invalid_multiplicity: return "InvalidMultiplicity";
        case errc::bad_argument: return "BadArgument";
        case errc::arithmetic_overflow: return "ArithmeticOverflow";
        case errc::resource_limit: return "ResourceLimit";
        case errc::sampler_stuck: return "SamplerStuck";
        case errc::internal_bound_violation: return "InternalBoundViolation";
        case errc::io_failure: return "IoFailure";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

// Rejected input (exit code 2 in the CLI).
class input_error : public error {
  public:
    using error::error;
};

// Arithmetic left the checked 128-bit range (exit code 3).
class overflow_error : public error {
  public:
    explicit overflow_error(const std::string& what) : error(errc::arithmetic_overflow, what) {}
};

// A configured budget (table entries, enumeration cells, retries) was hit (exit code 3).
class resource_error : public error {
  public:
    using error::error;
};

// A "must never fire" internal consistency check fired; indicates a bug.
class internal_error : public error {
  public:
    using error::error;
};

// ---------------------------------------------------------------------------
// Checked 128-bit arithmetic. Overflow raises instead of wrapping: products
// like (n-1)! * a_1*...*a_n feed exact inequality checks and must be exact.

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("128-bit addition overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("128-bit subtraction overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("128-bit multiplication overflow");
    return r;
}

inline i128 checked_pow(i128 base, unsigned exp) {
    i128 r = 1;
    for (unsigned k = 0; k < exp; ++k) r = checked_mul(r, base);
    return r;
}

inline i128 checked_factorial(unsigned n) {
    i128 r = 1;
    for (unsigned k = 2; k <= n; ++k) r = checked_mul(r, (i128)k);
    return r;
}

inline std::int64_t narrow_i64(i128 v, const char* what = "value") {
    if (v > (i128)INT64_MAX || v < (i128)INT64_MIN)
        throw overflow_error(std::string(what) + " does not fit in 64 bits");
    return (std::int64_t)v;
}

inline i128 abs_i128(i128 v) { return v < 0 ? -v : v; }

inline i128 gcd_i128(i128 a, i128 b) {
    a = abs_i128(a);
    b = abs_i128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline std::string to_string(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Two's-complement minimum negates fine through unsigned.
    unsigned __int128 u = neg ? (unsigned __int128)0 - (unsigned __int128)v : (unsigned __int128)v;
    std::string digits;
    while (u != 0) {
        digits += char('0' + (int)(u % 10));
        u /= 10;
    }
    if (neg) digits += '-';
    return std::string(digits.rbegin(), digits.rend());
}

// ---------------------------------------------------------------------------
// gcd over a whole vector.

inline std::int64_t gcd_vector(std::span<const std::int64_t> entries) {
    if (entries.empty()) throw input_error(errc::empty_input, "gcd of an empty list");
    std::int64_t g = 0;
    for (std::int64_t e : entries) {
        if (e <= 0) throw input_error(errc::non_positive, "gcd_vector requires positive entries, got " + std::to_string(e));
        g = std::gcd(g, e);
        if (g == 1) break;
    }
    return g;
}

inline std::int64_t gcd_vector(const std::vector<std::int64_t>& entries) {
    return gcd_vector(std::span<const std::int64_t>(entries));
}

// ---------------------------------------------------------------------------
// Validated domain types.

class input_vector {
  public:
    // Checks, in order: positivity, n >= 2, primitivity. Never reorders or
    // deduplicates the entries.
    static input_vector validate(std::vector<std::int64_t> entries) {
        for (std::int64_t e : entries)
            if (e <= 0)
                throw input_error(errc::non_positive, "entry " + std::to_string(e) + " is not positive");
        if (entries.size() < 2)
            throw input_error(errc::dimension_too_small,
                              "need n >= 2 entries, got " + std::to_string(entries.size()));
        if (gcd_vector(entries) != 1)
            throw input_error(errc::non_primitive,
                              "entries have gcd " + std::to_string(gcd_vector(entries)));
        return input_vector(std::move(entries));
    }

    std::size_t dimension() const { return entries_.size(); }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::int64_t operator[](std::size_t i) const { return entries_[i]; }

    std::int64_t min_entry() const {
        std::int64_t m = entries_[0];
        for (std::int64_t e : entries_) m = std::min(m, e);
        return m;
    }
    std::int64_t max_entry() const {
        std::int64_t m = entries_[0];
        for (std::int64_t e : entries_) m = std::max(m, e);
        return m;
    }
    // The entry playing the distinguished role a_n is the last one as given.
    std::int64_t last() const { return entries_.back(); }
    std::vector<std::int64_t> prefix() const {
        return std::vector<std::int64_t>(entries_.begin(), entries_.end() - 1);
    }

    i128 product() const {
        i128 p = 1;
        for (std::int64_t e : entries_) p = checked_mul(p, (i128)e);
        return p;
    }
    i128 sum() const {
        i128 t = 0;
        for (std::int64_t e : entries_) t = checked_add(t, (i128)e);
        return t;
    }

    // Left-rotation by k; used to let each entry serve as the distinguished one.
    input_vector rotated(std::size_t k) const {
        std::vector<std::int64_t> r(entries_.size());
        for (std::size_t i = 0; i < entries_.size(); ++i) r[i] = entries_[(i + k) % entries_.size()];
        return input_vector(std::move(r));
    }

  private:
    explicit input_vector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
    std::vector<std::int64_t> entries_;
};

class multiplicity {
  public:
    static multiplicity validate(std::int64_t s) {
        if (s < 1)
            throw input_error(errc::invalid_multiplicity, "multiplicity must be >= 1, got " + std::to_string(s));
        return multiplicity(s);
    }
    std::int64_t value() const { return s_; }

  private:
    explicit multiplicity(std::int64_t s) : s_(s) {}
    std::int64_t s_;
};

struct validated_instance {
    input_vector a;
    multiplicity s;
};

inline validated_instance validate_instance(std::vector<std::int64_t> entries, std::int64_t s) {
    return validated_instance{input_vector::validate(std::move(entries)), multiplicity::validate(s)};
}

}  // namespace frobgeom
