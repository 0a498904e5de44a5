#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twisted/permutation.hpp"
#include "twisted/polynomial.hpp"

namespace twisted {

// Classical Kazhdan-Lusztig R- and P-polynomials for S_m, m <= 5, by the
// textbook two-branch recursion and the reciprocal triangular solve. This is
// deliberately a separate code path from PolyTable (no shared recursion or
// solver), so agreement between the two on the diagonal-product model is an
// honest cross-check rather than a tautology.
class ClassicalKLTable {
  public:
    explicit ClassicalKLTable(int m);  // capacity_error beyond S_5

    int size() const { return static_cast<int>(elements_.size()); }
    const Permutation& element(int i) const { return elements_[static_cast<size_t>(i)]; }
    int index_of(const Permutation& p) const;  // not_found_error when absent

    bool leq(int u, int w) const { return leq_[static_cast<size_t>(u) * elements_.size() + static_cast<size_t>(w)] != 0; }

    IntPolynomial r_poly(int u, int w);
    IntPolynomial p_poly(int u, int w);

    // Carrell-Peterson: the Schubert variety of w is rationally smooth at u
    // iff P_{v,w} = 1 for every v in [u,w].
    bool rationally_smooth_at(int u, int w);

  private:
    std::vector<Permutation> elements_;
    std::vector<int> lengths_;
    std::vector<char> leq_;
    std::map<std::pair<int, int>, IntPolynomial> r_memo_;
    std::map<std::pair<int, int>, IntPolynomial> p_memo_;
};

}  // namespace twisted
