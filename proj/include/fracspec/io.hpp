#pragma once

// CSV and JSON serialization of curves and models. Floats use the shortest
// representation that round-trips, so repeated runs are byte-identical.

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracspec/models.hpp"

namespace fracspec {

inline std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

/// Header row then one row per index; all columns must have equal length.
inline void write_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns) {
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << format_double(columns[c][r]);
        out << '\n';
    }
}

/// Flat key-value form: family, mu, beta, sigma2 and whichever of alpha, n,
/// kappa the family uses.
inline nlohmann::ordered_json model_to_json(const ModelSpec& m) {
    nlohmann::ordered_json j;
    j["family"] = family_name(m.family());
    j["mu"] = m.mu();
    j["beta"] = m.beta();
    j["sigma2"] = m.sigma2();
    if (m.alpha()) j["alpha"] = *m.alpha();
    if (m.n()) j["n"] = *m.n();
    if (m.kappa()) j["kappa"] = *m.kappa();
    return j;
}

inline RawModel model_from_json(const nlohmann::json& j) {
    RawModel r;
    auto number = [&](const char* key) -> std::optional<double> {
        if (!j.contains(key)) return std::nullopt;
        if (!j[key].is_number()) throw ValidationError(std::vector<Violation>{{key, "must be a number"}});
        return j[key].get<double>();
    };
    if (j.contains("family")) {
        if (!j["family"].is_string()) throw ValidationError(std::vector<Violation>{{"family", "must be a string"}});
        r.family = j["family"].get<std::string>();
    }
    r.mu = number("mu");
    r.beta = number("beta");
    r.sigma2 = number("sigma2");
    r.alpha = number("alpha");
    r.n = number("n");
    r.kappa = number("kappa");
    return r;
}

/// {model, quantity, method, grid: {start, step, count}, values, values_imag when complex}.
inline nlohmann::ordered_json curve_json(nlohmann::ordered_json model, const std::string& quantity,
                                         const std::string& method, double start, double step, int count,
                                         const std::vector<double>& values,
                                         const std::vector<double>& values_imag = {}) {
    nlohmann::ordered_json j;
    j["model"] = std::move(model);
    j["quantity"] = quantity;
    j["method"] = method;
    j["grid"] = {{"start", start}, {"step", step}, {"count", count}};
    j["values"] = values;
    if (!values_imag.empty()) j["values_imag"] = values_imag;
    return j;
}

inline nlohmann::ordered_json curve_to_json(const Curve& c) {
    return curve_json(c.model ? model_to_json(*c.model) : nlohmann::ordered_json::object(),
                      quantity_name(c.quantity), c.method, c.grid.start, c.grid.step, c.grid.count, c.values,
                      c.values_imag);
}

}  // namespace fracspec
