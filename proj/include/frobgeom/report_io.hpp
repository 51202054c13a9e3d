#pragma once

// Emission of results as machine-readable JSON, CSV and plot data. JSON uses
// insertion-ordered keys and CSV uses RFC-4180-style quoting, so byte
// identity across runs is meaningful and tested. Doubles are printed with
// the shortest round-tripping representation.

#include <charconv>
#include <fstream>
#include <string>

#include "json.hpp"

#include "frobgeom/bounds.hpp"
#include "frobgeom/experiments.hpp"
#include "frobgeom/frobenius.hpp"
#include "frobgeom/lattice_geom.hpp"

namespace frobgeom {

using ordered_json = nlohmann::ordered_json;

inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        out += ch;
        if (ch == '"') out += '"';
    }
    out += '"';
    return out;
}

inline ordered_json to_json(const frobenius_result& r) {
    return ordered_json{{"value", r.value},
                        {"method", method_name(r.method)},
                        {"search_bound_used", r.search_bound_used}};
}

inline ordered_json to_json(const bound_report& r) {
    return ordered_json{{"bound", r.bound_name},
                        {"a", r.a},
                        {"s", r.s},
                        {"applicable", r.applicable},
                        {"verdict", verdict_name(r.verdict)},
                        {"equality", r.equality},
                        {"lhs", r.lhs},
                        {"rhs", r.rhs},
                        {"relation", r.relation},
                        {"note", r.note}};
}

inline ordered_json to_json(const covering_radius_result& r) {
    return ordered_json{{"value", r.value}, {"per_residue_threshold", r.per_residue_threshold}};
}

inline ordered_json to_json(const experiment_report& rep) {
    ordered_json tail = ordered_json::array();
    for (const auto& [d, p] : rep.tail) tail.push_back(ordered_json{{"d", d}, {"p", p}});
    ordered_json samples = ordered_json::array();
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const sample_record& r = rep.samples[i];
        samples.push_back(ordered_json{{"index", (std::int64_t)i},
                                       {"a", r.a},
                                       {"f_s", r.f_s},
                                       {"x_s", r.x_s},
                                       {"sum_term", r.sum_term},
                                       {"unit_entry", r.unit_entry}});
    }
    return ordered_json{
        {"config",
         ordered_json{{"n", rep.config.n},
                      {"t_max", rep.config.t_max},
                      {"s", rep.config.s},
                      {"sample_count", rep.config.sample_count},
                      {"master_seed", rep.config.master_seed},
                      {"d_grid", rep.config.d_grid}}},
        {"summary",
         ordered_json{{"mean_x", rep.mean_x},
                      {"sum_term_mean", rep.sum_term_mean},
                      {"unit_entry_count", rep.unit_entry_count},
                      {"tail", tail}}},
        {"samples", samples}};
}

inline std::string samples_csv(const experiment_report& rep) {
    std::string out = "record,index,a,f_s,x_s,sum_term,unit_entry\n";
    for (std::size_t i = 0; i < rep.samples.size(); ++i) {
        const sample_record& r = rep.samples[i];
        std::string a_field;
        for (std::size_t k = 0; k < r.a.size(); ++k) {
            if (k) a_field += ',';
            a_field += std::to_string(r.a[k]);
        }
        out += "sample," + std::to_string(i) + "," + csv_quote(a_field) + "," + std::to_string(r.f_s) +
               "," + format_double(r.x_s) + "," + format_double(r.sum_term) + "," +
               (r.unit_entry ? "1" : "0") + "\n";
    }
    out += "summary,mean_x," + format_double(rep.mean_x) + ",,,,\n";
    out += "summary,sum_term_mean," + format_double(rep.sum_term_mean) + ",,,,\n";
    out += "summary,unit_entry_count," + std::to_string(rep.unit_entry_count) + ",,,,\n";
    for (const auto& [d, p] : rep.tail)
        out += "summary,tail_p_at_" + format_double(d) + "," + format_double(p) + ",,,,\n";
    return out;
}

// Two columns (D, empirical tail probability), ready for plotting.
inline std::string tail_data(const experiment_report& rep) {
    std::string out = "# D p_hat\n";
    for (const auto& [d, p] : rep.tail) out += format_double(d) + " " + format_double(p) + "\n";
    return out;
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw error(errc::io_failure, "cannot open " + path + " for writing");
    f << contents;
    f.flush();
    if (!f) throw error(errc::io_failure, "failed writing " + path);
}

}  // namespace frobgeom
