#ifndef WICKLAB_IO_HPP
#define WICKLAB_IO_HPP

#include <json.hpp>

#include "wicklab/chaos.hpp"
#include "wicklab/grid.hpp"

namespace wicklab {

using json = nlohmann::json;

/// {dim, max_degree, entries: [[degrees...], re, im]}
inline json to_json(const ChaosExpansion& e) {
    json entries = json::array();
    for (const auto& [alpha, c] : e.coeffs())
        entries.push_back({alpha.degrees(), c.real(), c.imag()});
    return json{{"dim", e.dim()}, {"max_degree", e.max_degree()}, {"entries", entries}};
}

inline ChaosExpansion chaos_from_json(const json& j) {
    ChaosExpansion e(j.at("dim").get<int>(), j.at("max_degree").get<int>());
    for (const auto& entry : j.at("entries")) {
        MultiIndex alpha(entry.at(0).get<std::vector<int>>());
        e.set(alpha, Complex(entry.at(1).get<double>(), entry.at(2).get<double>()));
    }
    return e;
}

/// {dim, extent, step, samples: [[re, im], ...]}
inline json to_json(const GridFunction& f) {
    json samples = json::array();
    for (const auto& s : f.samples()) samples.push_back({s.real(), s.imag()});
    return json{{"dim", f.spec().dim},
                {"extent", f.spec().extent},
                {"step", f.spec().step},
                {"samples", samples}};
}

inline GridFunction grid_from_json(const json& j) {
    GridSpec spec(j.at("dim").get<int>(), j.at("extent").get<double>(),
                  j.at("step").get<double>());
    std::vector<Complex> samples;
    samples.reserve(spec.node_count());
    for (const auto& s : j.at("samples"))
        samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
    return GridFunction(spec, std::move(samples));
}

/// (node, weight) table for audit.
inline std::string rule_table(const QuadratureRule& rule) {
    std::string out = "# node weight\n";
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%.16g %.16g\n", rule.nodes[i], rule.weights[i]);
        out += buf;
    }
    return out;
}

} // namespace wicklab

#endif
