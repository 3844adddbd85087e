#include "mvlab/json.hpp"

namespace mvlab {

json mask_to_json(std::uint64_t bits) {
    json out = json::array();
    for (auto b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

json to_json(const KSubset& s) { return mask_to_json(s.bits()); }

json to_json(const Interval& v) {
    if (v.is_exact()) return v.lo;
    return json::array({v.lo, v.hi});
}

json to_json(const VertexSet& s) {
    json out = json::array();
    for (const auto& m : s.members()) out.push_back(to_json(m));
    return out;
}

json to_json(const Hypergraph& h) {
    json edges = json::array();
    for (auto e : h.edges()) edges.push_back(mask_to_json(e));
    return {{"n", h.n()}, {"k", h.k()}, {"edge_count", h.edge_count()}, {"edges", std::move(edges)}};
}

json to_json(const VisibilityCertificate& c) {
    json out = {
        {"family", c.witness.graph().spec()},
        {"param", std::string(to_string(c.variant))},
        {"value", c.value},
        {"status", c.status == SearchStatus::exact ? "exact" : "incomplete"},
        {"witness", to_json(c.witness)},
        {"nodes", c.nodes_expanded},
    };
    if (c.blocking) {
        json b = json::array();
        for (auto v : c.blocking->vertices) b.push_back(to_json(c.witness.graph().vertex(v)));
        out["blocking"] = std::move(b);
    }
    return out;
}

json to_json(const TransversalCertificate& c) {
    return {{"tau", c.tau}, {"transversal", to_json(c.transversal)}, {"optimal", c.optimal}, {"nodes", c.nodes}};
}

json to_json(const CoveringInstance& c) {
    json blocks = json::array();
    for (auto b : c.blocks) blocks.push_back(mask_to_json(b));
    return {{"n", c.n},         {"k", c.k},
            {"t", c.t},         {"value", to_json(c.value)},
            {"exact", c.exact()}, {"side", std::string(to_string(c.side))},
            {"blocks", std::move(blocks)}, {"nodes", c.nodes}};
}

json to_json(const MinTransversalEdges& c) {
    return {{"n", c.n},
            {"r", c.r},
            {"s", c.s},
            {"value", to_json(c.value)},
            {"exact", c.value.is_exact()},
            {"witness", to_json(c.witness)},
            {"nodes", c.nodes}};
}

json to_json(const Pattern& p) {
    json edges = json::array();
    for (auto e : p.template_edges) edges.push_back(mask_to_json(e));
    return {{"pattern", p.spec()}, {"vertices", p.vertex_count()}, {"template_edges", std::move(edges)}};
}

json to_json(const TuranResult& r) {
    json out = {{"n", r.n},
                {"k", r.k},
                {"pattern", r.pattern.spec()},
                {"value", to_json(r.value)},
                {"status", r.status == TuranStatus::exact ? "exact" : "interval"},
                {"witness", to_json(r.extremal_witness)},
                {"nodes", r.nodes}};
    if (r.mubayi_guide) out["mubayi_guide_nonbinding"] = *r.mubayi_guide;
    return out;
}

json to_json(const Certificate& c) { return {{"kind", c.kind}, {"valid", c.valid}, {"detail", c.detail}}; }

json to_json(const VerificationReport& r) {
    json params = {{"n", r.params.n}, {"k", r.params.k}};
    if (r.formula == FormulaId::sandwich_dual_outer) params["family"] = std::string(to_string(r.params.family));
    if (r.formula == FormulaId::lemma_transversal_equiv) {
        params["seed"] = r.params.seed;
        params["samples"] = r.params.samples;
    }
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    json out = {{"formula", std::string(to_string(r.formula))},
                {"params", std::move(params)},
                {"formula_value", r.formula_value ? to_json(*r.formula_value) : json(nullptr)},
                {"oracle_value", r.oracle_value ? to_json(*r.oracle_value) : json(nullptr)},
                {"verdict", std::string(to_string(r.verdict))},
                {"certificates", std::move(certs)},
                {"nodes", r.nodes}};
    if (!r.reason.empty()) out["reason"] = r.reason;
    return out;
}

} // namespace mvlab
