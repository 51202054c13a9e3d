// frobgeom command-line front end.
//
//   frobgeom frobenius  --a 3,5,7 --s 2 [--method auto|closed|apery|naive]
//   frobgeom covering   --a 3,5 --s 1 [--check-identity]
//   frobgeom bounds     --a 3,5 --s 3
//   frobgeom experiment --n 3 --T 100 --s 2 --N 1000 --seed 42
//                       [--d-grid 1,2,4,8] [--jobs K] [--out report.json]
//
// --format json (default) prints a full envelope; --format csv prints a
// header-carrying table. Exit codes: 0 success, 2 invalid input or usage,
// 3 overflow/resource/internal compute errors, 4 I/O failures.
// FROBGEOM_MEM_BUDGET overrides the denumerant table budget (entries).

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "frobgeom/report_io.hpp"

namespace {

using namespace frobgeom;

std::vector<std::int64_t> parse_entries(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string token = csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::int64_t value = 0;
        auto res = std::from_chars(token.data(), token.data() + token.size(), value);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size())
            throw input_error(errc::bad_argument, "cannot parse entry '" + token + "' in --a");
        out.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::optional<frobenius_method> parse_method(const std::string& name) {
    if (name == "auto") return std::nullopt;
    if (name == "closed") return frobenius_method::closed_form_2;
    if (name == "apery") return frobenius_method::apery;
    if (name == "naive") return frobenius_method::naive_scan;
    throw input_error(errc::bad_argument, "unknown method '" + name + "'");
}

ordered_json envelope(const std::string& command, ordered_json input, ordered_json result,
                      double timing_ms) {
    return ordered_json{{"command", command},
                        {"input", std::move(input)},
                        {"result", std::move(result)},
                        {"timing_ms", timing_ms},
                        {"version", std::string(k_version)}};
}

int exit_code_for(errc code) {
    switch (code) {
        case errc::empty_input:
        case errc::non_positive:
        case errc::non_primitive:
        case errc::dimension_too_small:
        case errc::invalid_multiplicity:
        case errc::bad_argument:
            return 2;
        case errc::io_failure:
            return 4;
        default:
            return 3;
    }
}

struct timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

std::string strip_extension(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

int run(int argc, char** argv) {
    CLI::App app{"exact s-Frobenius numbers, lattice covering radii, bound checks, and sampling experiments"};
    app.require_subcommand(1);

    std::string a_csv, method_arg = "auto", format = "json", d_grid_csv = "1,2,4,8", out_path;
    std::int64_t s = 1, t_max = 100, sample_count = 1000;
    std::uint64_t seed = 0;
    int n = 3, jobs = 1;
    bool check_identity = false;

    CLI::App* cmd_f = app.add_subcommand("frobenius", "compute F_s(a)");
    cmd_f->add_option("--a", a_csv, "comma-separated positive entries")->required();
    cmd_f->add_option("--s", s, "multiplicity (default 1)");
    cmd_f->add_option("--method", method_arg, "auto|closed|apery|naive");
    cmd_f->add_option("--format", format, "json|csv");

    CLI::App* cmd_c = app.add_subcommand("covering", "integral and continuous s-covering radii");
    cmd_c->add_option("--a", a_csv, "comma-separated positive entries")->required();
    cmd_c->add_option("--s", s, "multiplicity (default 1)");
    cmd_c->add_flag("--check-identity", check_identity, "cross-check the two routes");
    cmd_c->add_option("--format", format, "json|csv");

    CLI::App* cmd_b = app.add_subcommand("bounds", "evaluate every bound report");
    cmd_b->add_option("--a", a_csv, "comma-separated positive entries")->required();
    cmd_b->add_option("--s", s, "multiplicity (default 1)");
    cmd_b->add_option("--format", format, "json|csv");

    CLI::App* cmd_e = app.add_subcommand("experiment", "sample G(T) and report X_s statistics");
    cmd_e->add_option("--n", n, "vector dimension (>= 3)")->required();
    cmd_e->add_option("--T", t_max, "max-norm bound")->required();
    cmd_e->add_option("--s", s, "multiplicity (default 1)");
    cmd_e->add_option("--N", sample_count, "sample count")->required();
    cmd_e->add_option("--seed", seed, "master seed (default 0)");
    cmd_e->add_option("--d-grid", d_grid_csv, "tail thresholds, comma-separated");
    cmd_e->add_option("--jobs", jobs, "parallel workers; output independent of this");
    cmd_e->add_option("--out", out_path, "report path; also writes <stem>.samples.csv and <stem>.tail.dat");
    cmd_e->add_option("--format", format, "json|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* budget = std::getenv("FROBGEOM_MEM_BUDGET")) {
        std::uint64_t entries = 0;
        auto res = std::from_chars(budget, budget + std::string(budget).size(), entries);
        if (res.ec != std::errc() || entries == 0)
            throw input_error(errc::bad_argument, "FROBGEOM_MEM_BUDGET must be a positive integer");
        set_table_budget(entries);
    }
    if (format != "json" && format != "csv")
        throw input_error(errc::bad_argument, "unknown format '" + format + "'");

    if (cmd_f->parsed()) {
        validated_instance inst = validate_instance(parse_entries(a_csv), s);
        std::optional<frobenius_method> method = parse_method(method_arg);
        timer clock;
        frobenius_result r = frobenius_number(inst.a, inst.s, method);
        if (format == "csv") {
            std::cout << "value,method,search_bound_used\n"
                      << r.value << "," << method_name(r.method) << "," << r.search_bound_used
                      << "\n";
        } else {
            ordered_json input{{"a", inst.a.entries()}, {"s", s}, {"method", method_arg}};
            std::cout << envelope("frobenius", input, to_json(r), clock.ms()).dump(2) << "\n";
        }
        return 0;
    }

    if (cmd_c->parsed()) {
        validated_instance inst = validate_instance(parse_entries(a_csv), s);
        timer clock;
        covering_radius_result integral = integral_covering_radius(inst.a, inst.s);
        frobenius_result f = frobenius_number(inst.a, inst.s);
        std::int64_t continuous = narrow_i64(checked_add((i128)f.value, inst.a.sum()));
        i128 prefix_sum = 0;
        for (std::int64_t e : inst.a.prefix()) prefix_sum = checked_add(prefix_sum, (i128)e);
        bool consistent = integral.value == f.value + inst.a.last() &&
                          (i128)(continuous - integral.value) == prefix_sum;
        ordered_json result{{"integral", integral.value},
                            {"continuous", continuous},
                            {"f_s", f.value},
                            {"per_residue_threshold", integral.per_residue_threshold}};
        if (check_identity) result["consistent"] = consistent;
        if (format == "csv") {
            std::cout << "integral,continuous,f_s" << (check_identity ? ",consistent" : "") << "\n"
                      << integral.value << "," << continuous << "," << f.value;
            if (check_identity) std::cout << "," << (consistent ? "true" : "false");
            std::cout << "\n";
        } else {
            ordered_json input{{"a", inst.a.entries()}, {"s", s}};
            std::cout << envelope("covering", input, result, clock.ms()).dump(2) << "\n";
        }
        return 0;
    }

    if (cmd_b->parsed()) {
        validated_instance inst = validate_instance(parse_entries(a_csv), s);
        timer clock;
        std::vector<bound_report> reports = verify_instance(inst.a, inst.s);
        for (bound_report& r : covering_sandwich(inst.a, inst.s)) reports.push_back(std::move(r));
        if (format == "csv") {
            std::cout << "bound,applicable,verdict,equality,lhs,rhs,relation,note\n";
            for (const bound_report& r : reports)
                std::cout << r.bound_name << "," << (r.applicable ? "true" : "false") << ","
                          << verdict_name(r.verdict) << "," << (r.equality ? "true" : "false") << ","
                          << r.lhs << "," << r.rhs << "," << csv_quote(r.relation) << ","
                          << csv_quote(r.note) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const bound_report& r : reports) arr.push_back(to_json(r));
            ordered_json input{{"a", inst.a.entries()}, {"s", s}};
            std::cout << envelope("bounds", input, ordered_json{{"reports", arr}}, clock.ms()).dump(2)
                      << "\n";
        }
        return 0;
    }

    if (cmd_e->parsed()) {
        sample_config config;
        config.n = n;
        config.t_max = t_max;
        config.s = s;
        config.sample_count = sample_count;
        config.master_seed = seed;
        config.jobs = jobs;
        config.d_grid.clear();
        for (std::int64_t v : parse_entries(d_grid_csv)) config.d_grid.push_back((double)v);
        timer clock;
        experiment_report rep = run_experiment(config);

        ordered_json files = ordered_json::object();
        if (!out_path.empty()) {
            std::string stem = strip_extension(out_path);
            write_file(out_path, to_json(rep).dump(2) + "\n");
            write_file(stem + ".samples.csv", samples_csv(rep));
            write_file(stem + ".tail.dat", tail_data(rep));
            files = ordered_json{{"report", out_path},
                                 {"samples", stem + ".samples.csv"},
                                 {"tail", stem + ".tail.dat"}};
        }

        if (format == "csv") {
            std::cout << "key,value\nmean_x," << format_double(rep.mean_x) << "\nsum_term_mean,"
                      << format_double(rep.sum_term_mean) << "\nunit_entry_count,"
                      << rep.unit_entry_count << "\n";
            for (const auto& [d, p] : rep.tail)
                std::cout << "tail_p_at_" << format_double(d) << "," << format_double(p) << "\n";
        } else {
            ordered_json input{{"n", n},           {"T", t_max}, {"s", s},
                               {"N", sample_count}, {"seed", seed}, {"d_grid", config.d_grid},
                               {"jobs", jobs}};
            ordered_json summary{{"mean_x", rep.mean_x},
                                 {"sum_term_mean", rep.sum_term_mean},
                                 {"unit_entry_count", rep.unit_entry_count}};
            ordered_json tail = ordered_json::array();
            for (const auto& [d, p] : rep.tail) tail.push_back(ordered_json{{"d", d}, {"p", p}});
            summary["tail"] = tail;
            ordered_json result{{"summary", summary}, {"files", files}};
            std::cout << envelope("experiment", input, result, clock.ms()).dump(2) << "\n";
        }
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const frobgeom::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
