#include "twisted/bruhat_graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twisted/errors.hpp"

namespace twisted {

namespace {

struct EdgeHit {
    int u;
    int v;
    int reflection;
};

}  // namespace

BruhatGraph BruhatGraph::build(const GroupContext& ctx, const TwistedPoset& poset, int w,
                               bool parallel) {
    if (w < 0 || w >= poset.size()) throw not_found_error("vertex index out of range");
    BruhatGraph g;
    g.w_ = w;
    for (int u = 0; u < poset.size(); ++u)
        if (poset.leq(u, w)) g.vertices_.push_back(u);

    const int reflection_count = static_cast<int>(ctx.reflections().size());
    const int nv = static_cast<int>(g.vertices_.size());

    // u*t = v implies v*t = u, so every edge is discovered from both ends with
    // the same reflections; keeping only hits with v > u records each
    // (edge, reflection) exactly once, and rows stay independent for the
    // parallel scan.
    std::vector<std::vector<EdgeHit>> rows(static_cast<size_t>(nv));
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < nv; ++i) {
            for (int t = 0; t < reflection_count; ++t) {
                int u = g.vertices_[static_cast<size_t>(i)];
                int v = poset.star_reflection(u, t);
                if (v > u && poset.leq(v, w)) rows[static_cast<size_t>(i)].push_back({u, v, t});
            }
        }
    } else {
        for (int i = 0; i < nv; ++i) {
            int u = g.vertices_[static_cast<size_t>(i)];
            for (int t = 0; t < reflection_count; ++t) {
                int v = poset.star_reflection(u, t);
                if (v > u && poset.leq(v, w)) rows[static_cast<size_t>(i)].push_back({u, v, t});
            }
        }
    }

    std::map<std::pair<int, int>, std::vector<int>> found;
    for (const auto& row : rows)
        for (const auto& hit : row) found[{hit.u, hit.v}].push_back(hit.reflection);

    g.local_.assign(static_cast<size_t>(poset.size()), -1);
    for (int i = 0; i < nv; ++i) g.local_[static_cast<size_t>(g.vertices_[static_cast<size_t>(i)])] = i;
    g.incident_.resize(static_cast<size_t>(nv));
    g.down_degree_.assign(static_cast<size_t>(nv), 0);

    for (auto& [ends, refls] : found) {
        auto [u, v] = ends;
        if (refls.size() != 2)
            throw invariant_error("edge does not carry exactly two reflections");
        if (!poset.leq(u, v) && !poset.leq(v, u))
            throw invariant_error("edge endpoints are not comparable");
        std::sort(refls.begin(), refls.end());
        int id = static_cast<int>(g.edges_.size());
        g.edges_.push_back({u, v, {refls[0], refls[1]}});
        g.incident_[static_cast<size_t>(g.local_[static_cast<size_t>(u)])].push_back(id);
        g.incident_[static_cast<size_t>(g.local_[static_cast<size_t>(v)])].push_back(id);
        // comparable distinct elements have distinct ranks, and the canonical
        // order is rank-monotone, so u is the strictly lower endpoint
        ++g.down_degree_[static_cast<size_t>(g.local_[static_cast<size_t>(v)])];
    }
    return g;
}

bool BruhatGraph::has_vertex(int poset_index) const {
    return poset_index >= 0 && poset_index < static_cast<int>(local_.size()) &&
           local_[static_cast<size_t>(poset_index)] >= 0;
}

int BruhatGraph::degree(int poset_index) const {
    return static_cast<int>(incident(poset_index).size());
}

int BruhatGraph::down_degree(int poset_index) const {
    if (!has_vertex(poset_index)) throw not_found_error("vertex not in this graph");
    return down_degree_[static_cast<size_t>(local_[static_cast<size_t>(poset_index)])];
}

const std::vector<int>& BruhatGraph::incident(int poset_index) const {
    if (!has_vertex(poset_index)) throw not_found_error("vertex not in this graph");
    return incident_[static_cast<size_t>(local_[static_cast<size_t>(poset_index)])];
}

int BruhatGraph::other_endpoint(int edge_id, int poset_index) const {
    const auto& e = edges_.at(static_cast<size_t>(edge_id));
    if (e.u == poset_index) return e.v;
    if (e.v == poset_index) return e.u;
    throw not_found_error("vertex is not an endpoint of this edge");
}

std::string BruhatGraph::to_dot(const GroupContext& ctx, const TwistedPoset& poset) const {
    auto words = minimal_star_words(poset);
    std::ostringstream out;
    out << "graph \"BG(" << poset.element(w_).to_string() << ") in " << ctx.name() << "\" {\n";
    out << "  rankdir=BT;\n  node [shape=ellipse];\n";
    int max_rank = 0;
    for (int v : vertices_) max_rank = std::max(max_rank, poset.rank(v));
    for (int r = 0; r <= max_rank; ++r) {
        std::string layer;
        for (int v : vertices_)
            if (poset.rank(v) == r) layer += " v" + std::to_string(v) + ";";
        if (layer.empty()) continue;
        out << "  { rank=same;" << layer << " }\n";
    }
    for (int v : vertices_)
        out << "  v" << v << " [label=\"" << word_label(words[static_cast<size_t>(v)])
            << "\", tooltip=\"" << poset.element(v).to_string() << "\"];\n";
    for (const auto& e : edges_) {
        auto uppers = poset.upper_covers(e.u);
        bool cover = std::find(uppers.begin(), uppers.end(), e.v) != uppers.end();
        out << "  v" << e.u << " -- v" << e.v << (cover ? ";\n" : " [style=dashed];\n");
    }
    out << "}\n";
    return out.str();
}

std::pair<GroupElement, GroupElement> edge_reflections(const GroupContext& ctx,
                                                       const GroupElement& u,
                                                       const GroupElement& v) {
    std::vector<GroupElement> hits;
    for (const auto& t : ctx.reflections())
        if (twist(ctx, u, t) == v) hits.push_back(t);
    if (hits.empty()) throw not_found_error("no reflection carries u to v: not an edge");
    if (hits.size() != 2) throw invariant_error("edge does not carry exactly two reflections");
    return {hits[0], hits[1]};
}

std::vector<std::vector<int>> minimal_star_words(const TwistedPoset& poset) {
    int gens = poset.context().generator_count();
    std::vector<std::vector<int>> best(static_cast<size_t>(poset.size()));
    std::vector<bool> settled(static_cast<size_t>(poset.size()), false);
    settled[static_cast<size_t>(poset.bottom())] = true;
    // A shortest word has one rank-raising step per letter, so relaxing layer
    // by layer is exhaustive; within a layer the lexicographic minimum wins.
    for (int r = 0; r < poset.max_rank(); ++r) {
        for (int u = 0; u < poset.size(); ++u) {
            if (poset.rank(u) != r || !settled[static_cast<size_t>(u)]) continue;
            for (int s = 1; s <= gens; ++s) {
                int v = poset.star_generator(u, s);
                if (poset.rank(v) != r + 1) continue;
                auto candidate = best[static_cast<size_t>(u)];
                candidate.push_back(s);
                auto& slot = best[static_cast<size_t>(v)];
                if (!settled[static_cast<size_t>(v)] || candidate < slot) {
                    slot = std::move(candidate);
                    settled[static_cast<size_t>(v)] = true;
                }
            }
        }
    }
    for (bool b : settled)
        if (!b) throw invariant_error("poset element unreachable by rank-raising star walks");
    return best;
}

std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (int i : word) s += "s" + std::to_string(i);
    return s;
}

}  // namespace twisted
