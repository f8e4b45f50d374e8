#include "isk4/json_out.hpp"

#include "isk4/graph_io.hpp"

namespace isk4 {

json to_json(const Graph& g) {
    json j{{"n", g.n}, {"graph6", emit_graph6(g)}};
    j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back(json::array({u, v}));
    return j;
}

json to_json(const Triangle& t) { return json{{"triangle", t.v}}; }

json to_json(const K33Witness& w) { return json{{"a", w.a}, {"b", w.b}}; }

json to_json(const Isk4Witness& w) {
    return json{{"vertices", w.vertex_set}, {"branch", w.branch}, {"paths", w.paths}};
}

json to_json(const LinkageWitness& w) {
    return json{{"v", w.v}, {"hole", w.hole}, {"paths", w.paths}};
}

json to_json(const K4MinorCertificate& c) {
    json j;
    j["branch_sets"] = c.branch_sets;
    j["edges"] = json::array();
    for (const auto& [u, v] : c.edges) j["edges"].push_back(json::array({u, v}));
    return j;
}

json to_json(const SpResult& r) {
    json j{{"series_parallel", r.series_parallel}};
    if (r.series_parallel) {
        j["reduction"] = json::array();
        for (const auto& op : r.reduction) {
            const char* kind = nullptr;
            switch (op.kind) {
                case SpReductionOp::Kind::delete_isolated: kind = "delete_isolated"; break;
                case SpReductionOp::Kind::delete_leaf: kind = "delete_leaf"; break;
                case SpReductionOp::Kind::suppress: kind = "suppress"; break;
                case SpReductionOp::Kind::suppress_merge: kind = "suppress_merge"; break;
            }
            json o{{"op", kind}, {"v", op.v}};
            if (op.u >= 0) o["u"] = op.u;
            if (op.w >= 0) o["w"] = op.w;
            j["reduction"].push_back(o);
        }
    } else if (r.certificate) {
        j["k4_minor"] = to_json(*r.certificate);
    }
    return j;
}

json to_json(const Wheel& w) {
    return json{{"rim", w.rim},
                {"center", w.center},
                {"spokes", w.spokes},
                {"sectors", w.sectors}};
}

json to_json(const ProperWheelReport& r) {
    json j{{"proper", r.proper}};
    if (!r.proper) {
        j["violator"] = r.violator;
        j["bullet"] = r.bullet;
    }
    return j;
}

json to_json(const CliqueCutset& c) {
    return json{{"cutset", c.cutset}, {"sides", json::array({c.side_a, c.side_b})}};
}

json to_json(const DecompositionStep& s) {
    json j;
    switch (s.kind) {
        case DecompositionStep::Kind::low_degree_vertex:
            j["kind"] = "low_degree_vertex";
            j["vertex"] = s.vertex;
            break;
        case DecompositionStep::Kind::complete_bipartite:
            j["kind"] = "complete_bipartite";
            j["parts"] = json::array({s.part_a, s.part_b});
            break;
        case DecompositionStep::Kind::clique_cutset:
            j["kind"] = "clique_cutset";
            j["cutset"] = s.cut->cutset;
            j["sides"] = json::array({s.cut->side_a, s.cut->side_b});
            break;
        case DecompositionStep::Kind::not_in_class:
            j["kind"] = "not_in_class";
            if (s.triangle) j["triangle"] = s.triangle->v;
            if (s.isk4) j["isk4"] = to_json(*s.isk4);
            break;
        case DecompositionStep::Kind::inconclusive:
            j["kind"] = "inconclusive";
            break;
    }
    return j;
}

json to_json(const ColorResult& r) {
    json j;
    switch (r.status) {
        case ColorResult::Status::success:
            j["status"] = "success";
            j["colors"] = r.coloring;
            break;
        case ColorResult::Status::refused:
            j["status"] = "refused";
            if (r.triangle) j["triangle"] = r.triangle->v;
            if (r.isk4) j["isk4"] = to_json(*r.isk4);
            break;
        case ColorResult::Status::inconclusive:
            j["status"] = "inconclusive";
            break;
    }
    return j;
}

json to_json(const SparseCycleOutcome& o) {
    json j;
    switch (o.kind) {
        case SparseCycleOutcome::Kind::all_neighborhood:
            j["kind"] = "all_neighborhood";
            break;
        case SparseCycleOutcome::Kind::low_degree_far_vertex:
            j["kind"] = "low_degree_far_vertex";
            j["vertex"] = o.vertex;
            break;
        case SparseCycleOutcome::Kind::cycle_through_xy:
            j["kind"] = "cycle_through_xy";
            j["cycle"] = o.cycle;
            break;
        case SparseCycleOutcome::Kind::cycle_with_apex:
            j["kind"] = "cycle_with_apex";
            j["cycle"] = o.cycle;
            if (o.apex >= 0) j["apex"] = o.apex;
            break;
    }
    if (o.exceptional) j["exceptional"] = *o.exceptional;
    return j;
}

json to_json(const MinimalK13Result& r) {
    json j{{"kind", r.is_claw ? "claw" : "triangle"}, {"vertices", r.subgraph}};
    if (r.is_claw) j["center"] = r.claw_center;
    else j["witness_triangle"] = r.triangle;
    return j;
}

json to_json(const ClassReport& r) {
    json j;
    switch (r.verdict) {
        case ClassReport::Verdict::in_class: j["verdict"] = "in_class"; break;
        case ClassReport::Verdict::out_of_class: j["verdict"] = "out_of_class"; break;
        case ClassReport::Verdict::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    j["exact"] = r.exact;
    if (r.triangle) j["triangle"] = r.triangle->v;
    if (r.isk4) j["isk4"] = to_json(*r.isk4);
    return j;
}

}  // namespace isk4
