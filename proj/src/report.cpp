#include "equilib/report.hpp"

#include <set>

#include "equilib/errors.hpp"

namespace equilib {

using nlohmann::json;

namespace {

const char* kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::Face: return "face";
        case FeatureKind::Edge: return "edge";
        case FeatureKind::Vertex: return "vertex";
    }
    return "?";
}

const char* class_name(EquilibriumClass c) {
    switch (c) {
        case EquilibriumClass::Stable: return "stable";
        case EquilibriumClass::Saddle: return "saddle";
        case EquilibriumClass::Unstable: return "unstable";
    }
    return "?";
}

FeatureKind kind_from(const std::string& s) {
    if (s == "face") return FeatureKind::Face;
    if (s == "edge") return FeatureKind::Edge;
    if (s == "vertex") return FeatureKind::Vertex;
    throw SchemaError("unknown feature kind '" + s + "'");
}

EquilibriumClass class_from(const std::string& s) {
    if (s == "stable") return EquilibriumClass::Stable;
    if (s == "saddle") return EquilibriumClass::Saddle;
    if (s == "unstable") return EquilibriumClass::Unstable;
    throw SchemaError("unknown equilibrium class '" + s + "'");
}

void expect_keys(const json& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional = {}) {
    if (!j.is_object()) throw SchemaError("expected a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw SchemaError("unknown field '" + it.key() + "'");
    }
    for (const std::string& k : required)
        if (!j.contains(k)) throw SchemaError("missing field '" + k + "'");
}

Vec3 vec3_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw SchemaError("expected a 3-vector");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

json to_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json to_json(const MassProperties& mp) {
    return {{"volume", mp.volume},
            {"first_moment", to_json(mp.first_moment)},
            {"centroid", to_json(mp.centroid)}};
}

json to_json(const EquilibriumPoint& p) {
    return {{"location", to_json(p.location)},
            {"feature_kind", kind_name(p.kind)},
            {"feature", p.feature},
            {"class", class_name(p.cls)},
            {"degenerate", p.degenerate},
            {"clearance", p.clearance}};
}

json to_json(const EquilibriumReport& rep) {
    json pts = json::array();
    for (const EquilibriumPoint& p : rep.points) pts.push_back(to_json(p));
    return {{"S", rep.S},
            {"H", rep.H},
            {"U", rep.U},
            {"any_degenerate", rep.any_degenerate},
            {"euler_residual", rep.euler_residual},
            {"points", pts}};
}

json to_json(const MetricsReport& rep) {
    json j = {{"diameter", rep.diameter},
              {"girth", rep.girth},
              {"ratio", rep.ratio},
              {"girth_direction", to_json(rep.girth_direction)},
              {"hausdorff_to_ball", rep.hausdorff_to_ball},
              {"hausdorff_error_bound", rep.hausdorff_error_bound}};
    if (rep.symmetry_residual) {
        j["symmetry_residual"] = *rep.symmetry_residual;
        j["symmetry_order"] = rep.symmetry_order;
        j["symmetry_axis"] = to_json(rep.symmetry_axis);
    }
    return j;
}

json to_json(const RollTrace& trace) {
    return {{"faces", trace.faces},
            {"potentials", trace.potentials},
            {"tipped_edges", trace.tipped_edges},
            {"arc_length", trace.arc_length}};
}

json to_json(const AnalysisDocument& doc) {
    json j = {{"schema_version", kSchemaVersion},
              {"tool_version", kToolVersion},
              {"input", doc.input},
              {"vertex_count", doc.vertex_count},
              {"edge_count", doc.edge_count},
              {"face_count", doc.face_count},
              {"mass_properties", to_json(doc.mass)},
              {"reference", to_json(doc.reference)},
              {"reference_is_centroid", doc.reference_is_centroid},
              {"equilibria", to_json(doc.report)},
              {"metrics", to_json(doc.metrics)}};
    if (doc.traces) {
        json arr = json::array();
        for (const RollTrace& t : *doc.traces) arr.push_back(to_json(t));
        j["roll_traces"] = arr;
    }
    return j;
}

json to_json(const GeneratorResult& res, const GeneratorParams& params) {
    return {{"schema_version", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"n", params.n},
            {"mode", params.mode == GeneratorMode::AxisApex ? "axis_apex" : "n_spikes"},
            {"eps", params.eps},
            {"seed", params.seed},
            {"attempts", res.attempts},
            {"k", res.k},
            {"s", res.s},
            {"vertex_count", res.polyhedron.vertex_count()},
            {"edge_count", res.polyhedron.edge_count()},
            {"face_count", res.polyhedron.face_count()},
            {"hausdorff", res.hausdorff},
            {"symmetry_residual", res.symmetry_residual},
            {"equilibria", to_json(res.report)}};
}

json chain_to_json(const ChainSpec& spec, const std::vector<Vec2>& points) {
    json pts = json::array();
    json radii = json::array();
    for (const Vec2& p : points) {
        pts.push_back(json::array({p.x, p.y}));
        radii.push_back(norm(p));
    }
    return {{"schema_version", kSchemaVersion},
            {"tool_version", kToolVersion},
            {"beta", spec.beta},
            {"target_radius", spec.target_radius},
            {"k", spec.k},
            {"points", pts},
            {"radii", radii}};
}

AnalysisDocument analysis_from_json(const json& j) {
    expect_keys(j,
                {"schema_version", "tool_version", "input", "vertex_count",
                 "edge_count", "face_count", "mass_properties", "reference",
                 "reference_is_centroid", "equilibria", "metrics"},
                {"roll_traces"});
    if (j["schema_version"].get<int>() != kSchemaVersion)
        throw SchemaError("unsupported schema version");

    AnalysisDocument doc;
    doc.input = j["input"].get<std::string>();
    doc.vertex_count = j["vertex_count"].get<int>();
    doc.edge_count = j["edge_count"].get<int>();
    doc.face_count = j["face_count"].get<int>();

    const json& mp = j["mass_properties"];
    expect_keys(mp, {"volume", "first_moment", "centroid"});
    doc.mass.volume = mp["volume"].get<double>();
    doc.mass.first_moment = vec3_from(mp["first_moment"]);
    doc.mass.centroid = vec3_from(mp["centroid"]);

    doc.reference = vec3_from(j["reference"]);
    doc.reference_is_centroid = j["reference_is_centroid"].get<bool>();

    const json& rep = j["equilibria"];
    expect_keys(rep, {"S", "H", "U", "any_degenerate", "euler_residual", "points"});
    doc.report.S = rep["S"].get<int>();
    doc.report.H = rep["H"].get<int>();
    doc.report.U = rep["U"].get<int>();
    doc.report.any_degenerate = rep["any_degenerate"].get<bool>();
    doc.report.euler_residual = rep["euler_residual"].get<int>();
    for (const json& pj : rep["points"]) {
        expect_keys(pj, {"location", "feature_kind", "feature", "class", "degenerate",
                         "clearance"});
        EquilibriumPoint p;
        p.location = vec3_from(pj["location"]);
        p.kind = kind_from(pj["feature_kind"].get<std::string>());
        p.feature = pj["feature"].get<int>();
        p.cls = class_from(pj["class"].get<std::string>());
        p.degenerate = pj["degenerate"].get<bool>();
        p.clearance = pj["clearance"].get<double>();
        doc.report.points.push_back(p);
    }

    const json& m = j["metrics"];
    expect_keys(m,
                {"diameter", "girth", "ratio", "girth_direction", "hausdorff_to_ball",
                 "hausdorff_error_bound"},
                {"symmetry_residual", "symmetry_order", "symmetry_axis"});
    doc.metrics.diameter = m["diameter"].get<double>();
    doc.metrics.girth = m["girth"].get<double>();
    doc.metrics.ratio = m["ratio"].get<double>();
    doc.metrics.girth_direction = vec3_from(m["girth_direction"]);
    doc.metrics.hausdorff_to_ball = m["hausdorff_to_ball"].get<double>();
    doc.metrics.hausdorff_error_bound = m["hausdorff_error_bound"].get<double>();
    if (m.contains("symmetry_residual")) {
        doc.metrics.symmetry_residual = m["symmetry_residual"].get<double>();
        doc.metrics.symmetry_order = m["symmetry_order"].get<int>();
        doc.metrics.symmetry_axis = vec3_from(m["symmetry_axis"]);
    }

    if (j.contains("roll_traces")) {
        std::vector<RollTrace> traces;
        for (const json& tj : j["roll_traces"]) {
            expect_keys(tj, {"faces", "potentials", "tipped_edges", "arc_length"});
            RollTrace t;
            t.faces = tj["faces"].get<std::vector<int>>();
            t.potentials = tj["potentials"].get<std::vector<double>>();
            t.tipped_edges = tj["tipped_edges"].get<std::vector<int>>();
            t.arc_length = tj["arc_length"].get<double>();
            traces.push_back(std::move(t));
        }
        doc.traces = std::move(traces);
    }
    return doc;
}

}  // namespace equilib
