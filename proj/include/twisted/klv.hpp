#pragma once

#include <map>
#include <utility>

#include "twisted/polynomial.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

// Which right descent of w drives each recursion step. Results are provably
// independent of the choice; seeded_random exists so tests can exercise that.
enum class DescentPolicy { lowest_index, seeded_random };

// Memoized Q-, R- and P-polynomials over one poset. Single-writer: queries
// fill the memo, so share across threads only behind external serialization.
class PolyTable {
  public:
    explicit PolyTable(const TwistedPoset& poset,
                       DescentPolicy policy = DescentPolicy::lowest_index, unsigned seed = 0);

    const TwistedPoset& poset() const { return poset_; }

    // Three-branch recursion on u*s against u (below / above / fixed);
    // 1 on the diagonal, 0 off the order.
    const IntPolynomial& q_poly(int u, int w);

    // (-1)^(rank gap) * reversed Q, cross-checked against the independent
    // three-branch R recursion (mismatch raises invariant_error).
    IntPolynomial r_poly(int u, int w);

    // Solves q^d P(1/q) - P(q) = sum_{u<v<=w} Q_{u,v} P_{v,w} under the
    // degree bound deg P <= (d-1)/2; the solved P is substituted back and
    // every coefficient of the identity is re-verified.
    const IntPolynomial& p_poly(int u, int w);

    // One recursion step with the root descent forced to s (a descent of w),
    // recursing into the memoized table: exercises descent independence.
    IntPolynomial q_poly_via_descent(int u, int w, int s);

  private:
    int pick_descent(int w) const;
    const IntPolynomial& r_poly_recursive(int u, int w);

    const TwistedPoset& poset_;
    DescentPolicy policy_;
    unsigned seed_;
    std::map<std::pair<int, int>, IntPolynomial> q_memo_;
    std::map<std::pair<int, int>, IntPolynomial> r_memo_;
    std::map<std::pair<int, int>, IntPolynomial> p_memo_;
};

}  // namespace twisted
