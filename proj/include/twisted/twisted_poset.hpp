#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twisted/group_model.hpp"

namespace twisted {

// The twisted conjugation action u * w = theta(w^-1) u w.
GroupElement twist(const GroupContext& ctx, const GroupElement& u, const GroupElement& w);

bool is_twisted_involution(const GroupContext& ctx, const GroupElement& u);

// Membership in iota(theta) = { theta(x^-1) x : x in W }, decided by a
// greedy descent walk: a twisted involution lies in the orbit of the
// identity under u -> u * s exactly when the walk terminates at e.
bool is_twisted_identity(const GroupContext& ctx, const GroupElement& u);

// Element of iota(theta) with its rank (half the Coxeter length).
struct TwistedIdentity {
    GroupElement element;
    int rank;
};

// Validates membership and the even-length property.
TwistedIdentity make_twisted_identity(const GroupContext& ctx, const GroupElement& u);

// All twisted involutions of W, by filtering the full group.
std::vector<GroupElement> twisted_involutions(const GroupContext& ctx);

// Bruhat order on iota(theta), graded by rank.  Enumeration walks the
// orbit of the identity under the * action of the simple generators; the
// order matrix, cover lists and *-action tables are precomputed here and
// immutable afterwards, so all queries are safe to share across threads.
//
// Canonical element order: by rank, then by serialized string.
class TwistedPoset {
public:
    // parallel selects the OpenMP order-matrix kernel; the serial kernel
    // is kept as an independent reference (identical output, compared in
    // tests and in the benchmark tool).
    static TwistedPoset enumerate(const GroupContext& ctx, bool parallel = true);

    const GroupContext& context() const { return ctx_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const GroupElement& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    int rank(int i) const { return ranks_[static_cast<size_t>(i)]; }
    int max_rank() const { return max_rank_; }
    std::optional<int> index_of(const GroupElement& u) const;

    bool leq(int u, int w) const { return leq_[static_cast<size_t>(u) * size() + w] != 0; }
    const std::vector<int>& upper_covers(int i) const { return up_covers_[static_cast<size_t>(i)]; }
    const std::vector<int>& lower_covers(int i) const { return down_covers_[static_cast<size_t>(i)]; }

    // Index of element(i) * s for the 1-based generator index s.
    int star_generator(int i, int s) const {
        return star_gen_[static_cast<size_t>(i)][static_cast<size_t>(s) - 1];
    }
    // Index of element(i) * t for the 0-based index into ctx.reflections().
    int star_reflection(int i, int t) const {
        return star_refl_[static_cast<size_t>(i)][static_cast<size_t>(t)];
    }

    // Number of elements of each rank, indices 0..max_rank.
    const std::vector<int>& rank_counts() const { return rank_counts_; }

    // Right descent set of element(i) as 1-based generator indices.  Both
    // characterizations (length drop of w*s in W, rank drop of w * s) are
    // computed and must agree.
    std::vector<int> descents(int i) const;

    // Elements z with u <= z <= w, ascending canonical order (empty when
    // u and w are incomparable).
    std::vector<int> interval(int u, int w) const;

    // True iff every twisted involution of W inside the W-interval [u, w]
    // is a twisted identity.
    bool is_full_interval(int u, int w) const;

    // Moebius function, closed form: (-1)^(rank gap) on full intervals,
    // 0 otherwise; 0 on incomparable pairs.
    long long mobius_closed(int u, int w) const;
    // Moebius function by the defining recursion over the interval.
    long long mobius_recursive(int u, int w) const;

    // Index of the identity / the unique maximum.
    int bottom() const;
    int top() const;

    // "rank<TAB>element" per line in canonical order, a blank line, then
    // one "i j" cover pair per line (indices into the listing).
    std::string export_text() const;

private:
    TwistedPoset(GroupContext ctx);

    GroupContext ctx_;
    std::vector<GroupElement> elements_;
    std::vector<int> ranks_;
    std::vector<int> rank_counts_;
    int max_rank_ = 0;
    std::vector<char> leq_;
    std::vector<std::vector<int>> up_covers_;
    std::vector<std::vector<int>> down_covers_;
    std::vector<std::vector<int>> star_gen_;
    std::vector<std::vector<int>> star_refl_;
    std::map<GroupElement, int> index_;
    std::vector<GroupElement> twisted_involutions_;
    std::vector<std::vector<int>> involution_dots_;
    std::vector<std::vector<int>> element_dots_;
};

// Order-matrix kernels (exposed for the reference/parallel comparison in
// tests and the benchmark).  Entry u*N+w is 1 iff u <= w.
std::vector<char> order_matrix_serial(const GroupContext& ctx, const std::vector<GroupElement>& elems);
std::vector<char> order_matrix_parallel(const GroupContext& ctx, const std::vector<GroupElement>& elems);

// Desk-scale ground-set cap for the model (8 for flip, 5 for diagonal),
// overridable through the TWISTED_MAX_N environment variable.
int capacity_limit(ModelKind kind);

}  // namespace twisted
