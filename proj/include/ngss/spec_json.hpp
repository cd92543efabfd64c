#pragma once

// JSON spec-file schema:
//   {"sigma":1, "raw_amplitudes":bool,
//    "poles":[{"k":[re,im], "order":n, "a":[[re,im],...], "b":..., "c":..., "d":...}]}
// Unknown keys are rejected.

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "ngss/spectral_config.hpp"

namespace ngss {

namespace detail {

inline cx json_complex(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw error("SchemaViolation", where + ": expected [re, im]");
    return cx(j[0].get<double>(), j[1].get<double>());
}

inline std::vector<cx> json_complex_list(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array())
        throw error("SchemaViolation", where + ": expected an array of [re, im] pairs");
    std::vector<cx> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(json_complex(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline void reject_unknown_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            if (it.key() == key) { ok = true; break; }
        if (!ok) throw error("SchemaViolation", where + ": unknown key '" + it.key() + "'");
    }
}

}  // namespace detail

inline SpectralConfiguration config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw error("SchemaViolation", "spec: expected a JSON object");
    detail::reject_unknown_keys(j, {"sigma", "raw_amplitudes", "poles"}, "spec");
    for (const char* key : {"sigma", "raw_amplitudes", "poles"})
        if (!j.contains(key)) throw error("SchemaViolation", std::string("spec: missing key '") + key + "'");

    SpectralConfiguration cfg;
    if (!j["sigma"].is_number_integer())
        throw error("SchemaViolation", "spec.sigma: expected an integer");
    cfg.sigma = j["sigma"].get<int>();
    if (!j["raw_amplitudes"].is_boolean())
        throw error("SchemaViolation", "spec.raw_amplitudes: expected a boolean");
    cfg.raw_amplitudes = j["raw_amplitudes"].get<bool>();
    if (!j["poles"].is_array())
        throw error("SchemaViolation", "spec.poles: expected an array");

    for (std::size_t i = 0; i < j["poles"].size(); ++i) {
        const auto& jp = j["poles"][i];
        const std::string where = "spec.poles[" + std::to_string(i) + "]";
        if (!jp.is_object()) throw error("SchemaViolation", where + ": expected an object");
        detail::reject_unknown_keys(jp, {"k", "order", "a", "b", "c", "d"}, where);
        for (const char* key : {"k", "order", "a", "b", "c", "d"})
            if (!jp.contains(key))
                throw error("SchemaViolation", where + ": missing key '" + key + "'");
        PoleDatum p;
        p.k = detail::json_complex(jp["k"], where + ".k");
        if (!jp["order"].is_number_integer())
            throw error("SchemaViolation", where + ".order: expected an integer");
        p.order = jp["order"].get<int>();
        p.a = detail::json_complex_list(jp["a"], where + ".a");
        p.b = detail::json_complex_list(jp["b"], where + ".b");
        p.c = detail::json_complex_list(jp["c"], where + ".c");
        p.d = detail::json_complex_list(jp["d"], where + ".d");
        cfg.poles.push_back(std::move(p));
    }
    return cfg;
}

inline nlohmann::json config_to_json(const SpectralConfiguration& cfg) {
    auto clist = [](const std::vector<cx>& v) {
        nlohmann::json out = nlohmann::json::array();
        for (cx z : v) out.push_back({z.real(), z.imag()});
        return out;
    };
    nlohmann::json jp = nlohmann::json::array();
    for (const auto& p : cfg.poles)
        jp.push_back({{"k", {p.k.real(), p.k.imag()}},
                      {"order", p.order},
                      {"a", clist(p.a)},
                      {"b", clist(p.b)},
                      {"c", clist(p.c)},
                      {"d", clist(p.d)}});
    return {{"sigma", cfg.sigma}, {"raw_amplitudes", cfg.raw_amplitudes}, {"poles", jp}};
}

inline SpectralConfiguration load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("IoFailure", "cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw error("SchemaViolation", path + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace ngss
