#include "twisted/smoothness.hpp"

#include <algorithm>

#include "json.hpp"
#include "twisted/errors.hpp"

namespace twisted {

namespace {

// Smooth points are exactly those with no "bad" vertex above them.
std::vector<int> upward_clean(const TwistedPoset& poset, const std::vector<int>& vertices,
                              const std::vector<int>& bad) {
    std::vector<int> out;
    for (int u : vertices) {
        bool clean = true;
        for (int v : bad)
            if (poset.leq(u, v)) {
                clean = false;
                break;
            }
        if (clean) out.push_back(u);
    }
    return out;
}

}  // namespace

std::vector<int> locus_via_p(PolyTable& table, int w) {
    const auto& poset = table.poset();
    std::vector<int> vertices, bad;
    for (int v = 0; v < poset.size(); ++v) {
        if (!poset.leq(v, w)) continue;
        vertices.push_back(v);
        if (table.p_poly(v, w) != IntPolynomial{1}) bad.push_back(v);
    }
    return upward_clean(poset, vertices, bad);
}

std::vector<int> locus_via_degree(const TwistedPoset& poset, const BruhatGraph& graph) {
    std::vector<int> bad;
    for (int v : graph.vertices())
        if (graph.degree(v) != poset.rank(graph.w())) bad.push_back(v);
    return upward_clean(poset, graph.vertices(), bad);
}

std::vector<int> interval_rank_vector(const TwistedPoset& poset, int w) {
    std::vector<int> n(static_cast<size_t>(poset.rank(w)) + 1, 0);
    for (int v = 0; v < poset.size(); ++v)
        if (poset.leq(v, w)) ++n[static_cast<size_t>(poset.rank(v))];
    return n;
}

bool rank_symmetric(const TwistedPoset& poset, int w) {
    auto n = interval_rank_vector(poset, w);
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] != n[n.size() - 1 - i]) return false;
    return true;
}

bool bottom_vertex_check(const TwistedPoset& poset, const BruhatGraph& graph, int u) {
    if (poset.context().kind() != ModelKind::symmetric_flip)
        throw unsupported_model_error(
            "the single-vertex degree criterion is specific to the flip model");
    if (!graph.has_vertex(u)) throw std::invalid_argument("u is not below w");
    return graph.degree(u) == poset.rank(graph.w());
}

LocusReport full_report(const TwistedPoset& poset, PolyTable& table, int w) {
    if (&table.poset() != &poset) throw std::invalid_argument("table is bound to another poset");
    auto graph = BruhatGraph::build(poset.context(), poset, w);

    auto by_p = locus_via_p(table, w);
    auto by_degree = locus_via_degree(poset, graph);
    if (by_p != by_degree)
        throw invariant_error("polynomial and degree criteria disagree");

    LocusReport report;
    report.w = w;
    report.vertices = graph.vertices();
    for (int v : report.vertices) {
        report.degrees.push_back(graph.degree(v));
        bool s = std::binary_search(by_p.begin(), by_p.end(), v);
        report.smooth.push_back(s ? 1 : 0);
        (s ? report.smooth_points : report.singular_points).push_back(v);
    }
    report.rank_vector = interval_rank_vector(poset, w);
    report.globally_smooth = report.singular_points.empty();
    report.rank_symmetric = rank_symmetric(poset, w);
    report.regular = std::all_of(report.degrees.begin(), report.degrees.end(),
                                 [&](int d) { return d == poset.rank(w); });
    report.all_p_one = true;
    for (int v : report.vertices)
        report.all_p_one = report.all_p_one && table.p_poly(v, w) == IntPolynomial{1};

    // global smoothness has three more characterizations; all must coincide
    if (report.rank_symmetric != report.globally_smooth ||
        report.regular != report.globally_smooth || report.all_p_one != report.globally_smooth)
        throw invariant_error("global smoothness criteria disagree");

    if (poset.context().kind() == ModelKind::symmetric_flip)
        for (size_t i = 0; i < report.vertices.size(); ++i)
            if (bottom_vertex_check(poset, graph, report.vertices[i]) != (report.smooth[i] != 0))
                throw invariant_error("bottom-vertex criterion disagrees");

    return report;
}

std::string locus_report_json(const LocusReport& report, const TwistedPoset& poset) {
    nlohmann::ordered_json j;
    j["model"] = poset.context().name();
    j["w"] = poset.element(report.w).to_string();
    j["rank"] = poset.rank(report.w);
    j["rank_vector"] = report.rank_vector;
    j["globally_smooth"] = report.globally_smooth;
    j["criteria"] = {{"rank_symmetric", report.rank_symmetric},
                     {"regular", report.regular},
                     {"all_p_one", report.all_p_one}};
    auto points = nlohmann::ordered_json::array();
    for (size_t i = 0; i < report.vertices.size(); ++i) {
        int v = report.vertices[i];
        points.push_back({{"element", poset.element(v).to_string()},
                          {"rank", poset.rank(v)},
                          {"degree", report.degrees[i]},
                          {"smooth", report.smooth[i] != 0}});
    }
    j["points"] = points;
    auto singular = nlohmann::ordered_json::array();
    for (int v : report.singular_points) singular.push_back(poset.element(v).to_string());
    j["singular"] = singular;
    return j.dump(2) + "\n";
}

}  // namespace twisted
