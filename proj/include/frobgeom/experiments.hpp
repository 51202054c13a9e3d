#pragma once

// Monte-Carlo probing of the normalized statistic
//   X_s(a) = F_s(a) / (s * a_1*...*a_n)^(1/(n-1))
// over uniform samples from G(T) = { a > 0 : gcd(a) = 1, |a|_inf <= T }.
//
// Reproducibility contract: each sample's randomness derives only from
// (master_seed, sample_index), so any sample can be recomputed in isolation
// and the report is bit-identical for identical configs regardless of how
// many workers ran it. Reduction always walks records in index order.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

#include "frobgeom/core.hpp"
#include "frobgeom/frobenius.hpp"

namespace frobgeom {

struct sample_config {
    int n = 3;
    std::int64_t t_max = 100;         // |a|_inf <= T
    std::int64_t s = 1;
    std::int64_t sample_count = 100;  // N
    std::uint64_t master_seed = 0;
    std::vector<double> d_grid = {1.0, 2.0, 4.0, 8.0};
    int jobs = 1;

    static sample_config validate(sample_config c) {
        if (c.n < 3)
            throw input_error(errc::bad_argument,
                              "average-behavior statistics require n >= 3, got n = " + std::to_string(c.n));
        if (c.t_max < 1) throw input_error(errc::bad_argument, "T must be >= 1");
        if (c.sample_count < 1) throw input_error(errc::bad_argument, "sample count must be >= 1");
        multiplicity::validate(c.s);
        if (c.d_grid.empty()) throw input_error(errc::bad_argument, "D grid must be nonempty");
        for (std::size_t i = 0; i < c.d_grid.size(); ++i) {
            if (c.d_grid[i] <= 0) throw input_error(errc::bad_argument, "D grid values must be positive");
            if (i > 0 && c.d_grid[i] <= c.d_grid[i - 1])
                throw input_error(errc::bad_argument, "D grid must be strictly increasing");
        }
        if (c.jobs < 1) throw input_error(errc::bad_argument, "jobs must be >= 1");
        return c;
    }
};

struct sample_record {
    std::vector<std::int64_t> a;
    std::int64_t f_s = 0;
    double x_s = 0;
    double sum_term = 0;  // (a_1+...+a_n) / (a_1*...*a_n)^(1/(n-1))
    bool unit_entry = false;
};

struct experiment_report {
    sample_config config;
    std::vector<sample_record> samples;
    double mean_x = 0;
    std::vector<std::pair<double, double>> tail;  // (D, empirical P(X_s >= D))
    double sum_term_mean = 0;
    std::int64_t unit_entry_count = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unbiased draw from [0, k); engine output is standardized, so streams are
// identical across platforms and runs.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
    std::uint64_t threshold = (0 - k) % k;  // 2^64 mod k
    std::uint64_t x;
    do {
        x = rng();
    } while (x < threshold);
    return x % k;
}

inline constexpr std::int64_t k_sampler_retry_cap = 1000000;

}  // namespace detail

// The (index)-th uniform sample from G(T): coordinates uniform in {1..T},
// rejected until gcd = 1.
inline std::vector<std::int64_t> sample_vector(int n, std::int64_t t_max, std::uint64_t master_seed,
                                               std::int64_t index) {
    if (n < 2) throw input_error(errc::dimension_too_small, "sampler needs n >= 2");
    if (t_max < 1) throw input_error(errc::bad_argument, "T must be >= 1");
    std::mt19937_64 rng(detail::splitmix64(master_seed + 0x9E3779B97F4A7C15ULL * (std::uint64_t)(index + 1)));
    std::vector<std::int64_t> a((std::size_t)n);
    for (std::int64_t attempt = 0; attempt < detail::k_sampler_retry_cap; ++attempt) {
        for (auto& e : a) e = 1 + (std::int64_t)detail::uniform_below(rng, (std::uint64_t)t_max);
        if (gcd_vector(a) == 1) return a;
    }
    throw resource_error(errc::sampler_stuck, "rejection sampler exceeded retry cap");
}

// X_s(a); floating point on purpose — the average-behavior statements are
// asymptotic, exactness lives in the bounds module.
inline double x_statistic(const input_vector& a, const multiplicity& s) {
    frobenius_result f = frobenius_number(a, s);
    double scale = std::pow((double)checked_mul((i128)s.value(), a.product()),
                            1.0 / (double)(a.dimension() - 1));
    return (double)f.value / scale;
}

namespace detail {

inline sample_record evaluate_sample(const sample_config& c, std::int64_t index) {
    try {
        sample_record rec;
        rec.a = sample_vector(c.n, c.t_max, c.master_seed, index);
        input_vector a = input_vector::validate(rec.a);
        multiplicity s = multiplicity::validate(c.s);
        rec.f_s = frobenius_number(a, s).value;
        double root = std::pow((double)a.product(), 1.0 / (double)(c.n - 1));
        rec.x_s = (double)rec.f_s / (std::pow((double)c.s, 1.0 / (double)(c.n - 1)) * root);
        rec.sum_term = (double)(std::int64_t)a.sum() / root;
        rec.unit_entry = a.min_entry() == 1;
        return rec;
    } catch (const error& e) {
        // abort the experiment pointing at the failing sample
        throw error(e.code(), "sample " + std::to_string(index) + ": " + e.what());
    }
}

}  // namespace detail

inline experiment_report run_experiment(const sample_config& config) {
    sample_config c = sample_config::validate(config);
    experiment_report rep;
    rep.config = c;
    rep.samples.resize((std::size_t)c.sample_count);

    const int workers = (int)std::min<std::int64_t>(c.jobs, c.sample_count);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < c.sample_count; ++i)
            rep.samples[(std::size_t)i] = detail::evaluate_sample(c, i);
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::exception_ptr> failures((std::size_t)workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::int64_t i; (i = next.fetch_add(1)) < c.sample_count;)
                        rep.samples[(std::size_t)i] = detail::evaluate_sample(c, i);
                } catch (...) {
                    failures[(std::size_t)w] = std::current_exception();
                    next.store(c.sample_count);  // drain remaining work
                }
            });
        for (auto& th : pool) th.join();
        for (auto& f : failures)
            if (f) std::rethrow_exception(f);
    }

    // Deterministic reduction in index order.
    double sum_x = 0, sum_term = 0;
    for (const sample_record& r : rep.samples) {
        sum_x += r.x_s;
        sum_term += r.sum_term;
        if (r.unit_entry) ++rep.unit_entry_count;
    }
    rep.mean_x = sum_x / (double)c.sample_count;
    rep.sum_term_mean = sum_term / (double)c.sample_count;
    for (double d : c.d_grid) {
        std::int64_t hits = 0;
        for (const sample_record& r : rep.samples)
            if (r.x_s >= d) ++hits;
        rep.tail.emplace_back(d, (double)hits / (double)c.sample_count);
    }
    return rep;
}

}  // namespace frobgeom
