#pragma once

// Grid sampling and deterministic export. Row order is t-outer / x-inner,
// reals print with 17 significant digits (value-preserving round trip).

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ngss/soliton_engine.hpp"

namespace ngss {

struct GridSpec {
    double x_min = 0.0, x_max = 0.0;
    double t_min = 0.0, t_max = 0.0;
    int nx = 0, nt = 0;
};

inline void validate_grid(const GridSpec& g) {
    if (!(g.x_min < g.x_max) || !(g.t_min < g.t_max))
        throw error("SchemaViolation", "grid ranges must satisfy x_min < x_max, t_min < t_max");
    if (g.nx < 2 || g.nt < 2) throw error("SchemaViolation", "grid needs nx, nt >= 2");
}

struct GridSample {
    GridSpec grid;
    std::vector<FieldSample> values;  // nt * nx, t-outer / x-inner
    std::string config_digest;
};

inline int worker_count() {
    if (const char* env = std::getenv("NGSS_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

inline GridSample sample_grid(const ValidatedConfiguration& cfg, const GridSpec& grid,
                              std::string config_digest = {}) {
    validate_grid(grid);
    GridSample out;
    out.grid = grid;
    out.config_digest = std::move(config_digest);
    out.values.resize(static_cast<std::size_t>(grid.nx) * grid.nt);

    const int threads = std::min(worker_count(), grid.nt);
    std::atomic<int> next_row{0};
    auto work = [&]() {
        for (;;) {
            const int it = next_row.fetch_add(1);
            if (it >= grid.nt) return;
            const double t = grid.t_min + (grid.t_max - grid.t_min) * it / (grid.nt - 1);
            for (int ix = 0; ix < grid.nx; ++ix) {
                const double x = grid.x_min + (grid.x_max - grid.x_min) * ix / (grid.nx - 1);
                out.values[static_cast<std::size_t>(it) * grid.nx + ix] = evaluate_field(cfg, x, t);
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return out;
}

namespace detail {

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

inline void export_csv(std::ostream& os, const GridSample& s) {
    os << "x,t,re_q,im_q,abs_q,singular\n";
    for (const FieldSample& v : s.values)
        os << detail::fmt17(v.x) << ',' << detail::fmt17(v.t) << ',' << detail::fmt17(v.q.real())
           << ',' << detail::fmt17(v.q.imag()) << ',' << detail::fmt17(std::abs(v.q)) << ','
           << (v.singular_flag ? 1 : 0) << '\n';
    if (!os) throw error("IoFailure", "CSV write failed");
}

inline nlohmann::json grid_to_json(const GridSample& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const FieldSample& v : s.values)
        rows.push_back({v.x, v.t, v.q.real(), v.q.imag(), std::abs(v.q), v.singular_flag ? 1 : 0});
    return {{"grid",
             {{"x_min", s.grid.x_min},
              {"x_max", s.grid.x_max},
              {"t_min", s.grid.t_min},
              {"t_max", s.grid.t_max},
              {"nx", s.grid.nx},
              {"nt", s.grid.nt}}},
            {"config_digest", s.config_digest},
            {"columns", {"x", "t", "re_q", "im_q", "abs_q", "singular"}},
            {"values", rows}};
}

inline void export_json(std::ostream& os, const GridSample& s) {
    os << grid_to_json(s).dump() << '\n';
    if (!os) throw error("IoFailure", "JSON write failed");
}

inline GridSample grid_from_json(const nlohmann::json& j) {
    GridSample s;
    const auto& g = j.at("grid");
    s.grid = {g.at("x_min").get<double>(), g.at("x_max").get<double>(),
              g.at("t_min").get<double>(), g.at("t_max").get<double>(),
              g.at("nx").get<int>(),       g.at("nt").get<int>()};
    s.config_digest = j.at("config_digest").get<std::string>();
    for (const auto& row : j.at("values")) {
        FieldSample v;
        v.x = row[0].get<double>();
        v.t = row[1].get<double>();
        v.q = cx(row[2].get<double>(), row[3].get<double>());
        v.singular_flag = row[5].get<int>() != 0;
        s.values.push_back(v);
    }
    return s;
}

// FNV-1a 64-bit over the raw spec-file bytes.
inline std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("IoFailure", "cannot open file for digest: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return digest_bytes(ss.str());
}

// Minimal |q| heatmap as an SVG rect grid with a fixed 5-stop colormap.
inline void export_svg(std::ostream& os, const GridSample& s) {
    const int nx = s.grid.nx, nt = s.grid.nt;
    double vmax = 0.0;
    for (const auto& v : s.values)
        if (!v.singular_flag) vmax = std::max(vmax, std::abs(v.q));
    if (vmax <= 0.0) vmax = 1.0;
    static const int stops[5][3] = {
        {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}};
    auto color = [&](double v) {
        const double u = std::min(std::max(v / vmax, 0.0), 1.0) * 4.0;
        const int i = std::min(static_cast<int>(u), 3);
        const double f = u - i;
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                      static_cast<int>(stops[i][0] + f * (stops[i + 1][0] - stops[i][0])),
                      static_cast<int>(stops[i][1] + f * (stops[i + 1][1] - stops[i][1])),
                      static_cast<int>(stops[i][2] + f * (stops[i + 1][2] - stops[i][2])));
        return std::string(buf);
    };
    const int cell = 4;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * cell << "\" height=\""
       << nt * cell << "\">\n";
    for (int it = 0; it < nt; ++it)
        for (int ix = 0; ix < nx; ++ix) {
            const auto& v = s.values[static_cast<std::size_t>(it) * nx + ix];
            os << "<rect x=\"" << ix * cell << "\" y=\"" << (nt - 1 - it) * cell << "\" width=\""
               << cell << "\" height=\"" << cell << "\" fill=\""
               << (v.singular_flag ? std::string("#ffffff") : color(std::abs(v.q))) << "\"/>\n";
        }
    os << "</svg>\n";
    if (!os) throw error("IoFailure", "SVG write failed");
}

}  // namespace ngss
