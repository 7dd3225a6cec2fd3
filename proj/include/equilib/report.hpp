#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equilib/construct.hpp"
#include "equilib/dynamics.hpp"
#include "equilib/equilibria.hpp"
#include "equilib/metrics.hpp"
#include "equilib/polyhedron.hpp"

namespace equilib {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

// Full analysis of one mesh: mass properties, equilibrium census, metrics and
// the optional roll traces, with the parameters echoed back.
struct AnalysisDocument {
    std::string input;  // mesh path or descriptor
    int vertex_count = 0, edge_count = 0, face_count = 0;
    MassProperties mass;
    Vec3 reference;  // reference point the census was taken at
    bool reference_is_centroid = true;
    EquilibriumReport report;
    MetricsReport metrics;
    std::optional<std::vector<RollTrace>> traces;  // one per start face
};

nlohmann::json to_json(const Vec3& v);
nlohmann::json to_json(const MassProperties& mp);
nlohmann::json to_json(const EquilibriumPoint& p);
nlohmann::json to_json(const EquilibriumReport& rep);
nlohmann::json to_json(const MetricsReport& rep);
nlohmann::json to_json(const RollTrace& trace);
nlohmann::json to_json(const AnalysisDocument& doc);
nlohmann::json to_json(const GeneratorResult& res, const GeneratorParams& params);
nlohmann::json chain_to_json(const ChainSpec& spec, const std::vector<Vec2>& points);

// Strict reader: the schema is versioned and unknown fields are rejected.
AnalysisDocument analysis_from_json(const nlohmann::json& j);

}  // namespace equilib
