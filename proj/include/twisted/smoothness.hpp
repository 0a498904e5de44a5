#pragma once

#include <string>
#include <vector>

#include "twisted/bruhat_graph.hpp"
#include "twisted/klv.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

// Where the orbit closure of w is rationally smooth, together with the
// verdict of every criterion that was run. Points are poset indices; the
// parallel arrays vertices/degrees/smooth follow the canonical order of I_w.
struct LocusReport {
    int w = -1;
    std::vector<int> vertices;
    std::vector<int> degrees;
    std::vector<char> smooth;
    std::vector<int> smooth_points;
    std::vector<int> singular_points;
    std::vector<int> rank_vector;  // n(i) of [id, w], i = 0..rho(w)
    bool globally_smooth = false;
    bool rank_symmetric = false;
    bool regular = false;    // every vertex degree equals rho(w)
    bool all_p_one = false;  // P_{u,w} = 1 for every u <= w
};

// {u in I_w : P_{v,w} = 1 for every v in [u,w]}, ascending.
std::vector<int> locus_via_p(PolyTable& table, int w);

// {u in I_w : degree(v) = rho(w) for every v in [u,w]}, ascending.
std::vector<int> locus_via_degree(const TwistedPoset& poset, const BruhatGraph& graph);

std::vector<int> interval_rank_vector(const TwistedPoset& poset, int w);

// n(i) = n(rho(w) - i) for the interval [id, w].
bool rank_symmetric(const TwistedPoset& poset, int w);

// degree(u) = rho(w), which in the flip model alone decides smoothness at u
// by itself; the diagonal model has no such shortcut (unsupported_model_error).
bool bottom_vertex_check(const TwistedPoset& poset, const BruhatGraph& graph, int u);

// Runs every criterion applicable to the model and fails loudly
// (invariant_error) if any two disagree; they are provably equivalent, so a
// disagreement is an implementation bug, never data.
LocusReport full_report(const TwistedPoset& poset, PolyTable& table, int w);

// Canonical JSON rendering (byte-deterministic for fixed inputs).
std::string locus_report_json(const LocusReport& report, const TwistedPoset& poset);

}  // namespace twisted
