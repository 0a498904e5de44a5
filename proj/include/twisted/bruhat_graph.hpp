#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "twisted/group_model.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

// Undirected edge {u,v} of a Bruhat graph. Endpoints are poset indices with
// u < v; `reflections` are the two indices into ctx.reflections() whose star
// action carries one endpoint to the other (there are always exactly two).
struct GraphEdge {
    int u;
    int v;
    std::array<int, 2> reflections;
};

// The graph BG(w) on I_w = {u in iota(theta) : u <= w}, with an edge {u,v}
// whenever v = u*t != u for some reflection t. Vertices are poset indices so
// graph and poset queries compose directly. Immutable after build.
class BruhatGraph {
  public:
    static BruhatGraph build(const GroupContext& ctx, const TwistedPoset& poset, int w,
                             bool parallel = true);

    int w() const { return w_; }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    bool has_vertex(int poset_index) const;

    int degree(int poset_index) const;
    int down_degree(int poset_index) const;
    // Edge ids (into edges()) incident to the given vertex.
    const std::vector<int>& incident(int poset_index) const;
    int other_endpoint(int edge_id, int poset_index) const;

    // Rank-layered DOT rendering: covers of Br(iota(theta)) solid, remaining
    // edges dashed, vertices labelled by minimal star words.
    std::string to_dot(const GroupContext& ctx, const TwistedPoset& poset) const;

  private:
    BruhatGraph() = default;

    int w_ = -1;
    std::vector<int> vertices_;            // ascending poset indices
    std::vector<GraphEdge> edges_;         // sorted by (u, v)
    std::vector<int> local_;               // poset index -> position in vertices_, or -1
    std::vector<std::vector<int>> incident_;  // per local vertex, edge ids
    std::vector<int> down_degree_;            // per local vertex
};

// The exactly-two reflections t with u*t = v, in the order of
// ctx.reflections(). Throws not_found_error when {u,v} is not an edge (no
// such reflection); a count of one would contradict the pairing t <-> theta(t)
// and raises invariant_error.
std::pair<GroupElement, GroupElement> edge_reflections(const GroupContext& ctx,
                                                       const GroupElement& u,
                                                       const GroupElement& v);

// For every poset element, the lexicographically least among the shortest
// generator words i1..ik with u = id*s_{i1}*...*s_{ik}; such a word always has
// length rho(u) and its product x satisfies u = theta(x^-1) x.
std::vector<std::vector<int>> minimal_star_words(const TwistedPoset& poset);

// "e" for the empty word, otherwise "s2s4"-style concatenation.
std::string word_label(const std::vector<int>& word);

}  // namespace twisted
