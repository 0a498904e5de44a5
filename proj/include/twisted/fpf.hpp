#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twisted/group_model.hpp"
#include "twisted/permutation.hpp"

namespace twisted {

// Value pair (a, b), normalized a < b at construction.
struct Transposition {
    int a;
    int b;
    Transposition(int x, int y);
    bool moves(int k) const { return k == a || k == b; }
    int apply(int k) const { return k == a ? b : k == b ? a : k; }
    friend bool operator==(const Transposition&, const Transposition&) = default;
    friend std::strong_ordering operator<=>(const Transposition&, const Transposition&) = default;
};

// Involution of {1..2n} without fixed points.
class FpfInvolution {
  public:
    explicit FpfInvolution(Permutation p);  // invalid_argument unless fpf involution

    const Permutation& permutation() const { return p_; }
    int size() const { return p_.size(); }
    int operator()(int k) const { return p_(k); }
    std::string to_string() const { return p_.to_string(); }
    // "(1 4)(2 3)": cycles by smallest member, ascending.
    std::string cycle_form() const;
    static std::optional<FpfInvolution> parse_cycles(const std::string& text, int two_n);

    friend bool operator==(const FpfInvolution&, const FpfInvolution&) = default;
    friend std::strong_ordering operator<=>(const FpfInvolution&, const FpfInvolution&) = default;

  private:
    Permutation p_;
};

// sigma * pi = pi^-1 sigma pi for pi a transposition; fixes u iff t is one of
// its 2-cycles.
FpfInvolution fpf_star(const FpfInvolution& u, const Transposition& t);

// u precedes w in the dual order: u_(i,j) >= w_(i,j) for all dots. The
// minimum is the reversal w0.
bool fpf_preceq(const FpfInvolution& u, const FpfInvolution& w);

std::vector<FpfInvolution> all_fpf(int two_n);

// x -> w0 x, a poset and graph isomorphism between (F_2n, preceq) and the
// twisted identities of the flip model.
FpfInvolution to_fpf(const GroupContext& ctx, const GroupElement& u);
GroupElement to_iota(const GroupContext& ctx, const FpfInvolution& x);

// The unique second transposition carrying u to u*t, namely (u(a), u(b)).
// Requires u*t != u.
Transposition edge_partner(const FpfInvolution& u, const Transposition& t);

// Neighbours of u in the graph on {v : v preceq w}: all u*t != u staying
// under w, deduplicated, ascending.
std::vector<FpfInvolution> fpf_neighbours(const FpfInvolution& u, const FpfInvolution& w);

// With r = (i,j), a = u(i), b = u(j) and u*r strictly preceq-below u:
// t qualifies iff supp(t) and {a,b,i,j} are disjoint, or supp(t) meets {i,j}.
bool is_compatible(const FpfInvolution& u, const Transposition& r, const Transposition& t);

struct EdgeChoice {
    std::pair<FpfInvolution, FpfInvolution> edge;
    Transposition t_e;
    Transposition tau_e;
    std::pair<FpfInvolution, FpfInvolution> image_edge;
};

// The edge injection out(u) -> out(u*r): picks the lexicographically least
// compatible transposition t_e of the edge {u, v}; tau_e is r t_e r when
// (u*t_e)*r stays under w and t_e otherwise; the image is {u*r, (u*r)*tau_e}.
// When both edge transpositions are compatible the two images are computed
// and must agree; the image is verified to be an edge under w.
EdgeChoice epsilon(const FpfInvolution& u, const Transposition& r, const FpfInvolution& w,
                   const FpfInvolution& v);

// For a six-element star orbit of u under <t1, t2>: true unless exactly five
// of the six lie under w (the forbidden configuration).
bool orbit6_check(const FpfInvolution& u, const Transposition& t1, const Transposition& t2,
                  const FpfInvolution& w);

}  // namespace twisted
