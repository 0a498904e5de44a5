#include "twisted/klv.hpp"

#include <random>

#include "twisted/errors.hpp"

namespace twisted {

namespace {

const IntPolynomial kZero{};
const IntPolynomial kOne{1};

}  // namespace

PolyTable::PolyTable(const TwistedPoset& poset, DescentPolicy policy, unsigned seed)
    : poset_(poset), policy_(policy), seed_(seed) {}

int PolyTable::pick_descent(int w) const {
    auto ds = poset_.descents(w);
    if (ds.empty()) throw invariant_error("descent requested for the minimum");
    if (policy_ == DescentPolicy::lowest_index) return ds.front();
    // stateless per (seed, w): the choice must not depend on query order
    std::mt19937 rng(seed_ * 1000003u + static_cast<unsigned>(w));
    return ds[rng() % ds.size()];
}

const IntPolynomial& PolyTable::q_poly(int u, int w) {
    if (u == w) return kOne;
    if (!poset_.leq(u, w)) return kZero;
    auto key = std::make_pair(u, w);
    if (auto it = q_memo_.find(key); it != q_memo_.end()) return it->second;
    auto q = q_poly_via_descent(u, w, pick_descent(w));
    return q_memo_.emplace(key, std::move(q)).first->second;
}

IntPolynomial PolyTable::q_poly_via_descent(int u, int w, int s) {
    int ws = poset_.star_generator(w, s);
    if (poset_.rank(ws) >= poset_.rank(w)) throw std::invalid_argument("s is not a descent of w");
    int us = poset_.star_generator(u, s);
    if (poset_.rank(us) < poset_.rank(u)) return q_poly(us, ws);
    if (us == u) return IntPolynomial::q() * q_poly(u, ws);
    return IntPolynomial::q() * q_poly(us, ws) + IntPolynomial{-1, 1} * q_poly(u, ws);
}

const IntPolynomial& PolyTable::r_poly_recursive(int u, int w) {
    if (u == w) return kOne;
    if (!poset_.leq(u, w)) return kZero;
    auto key = std::make_pair(u, w);
    if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;
    int s = pick_descent(w);
    int ws = poset_.star_generator(w, s);
    int us = poset_.star_generator(u, s);
    IntPolynomial r;
    if (poset_.rank(us) < poset_.rank(u))
        r = r_poly_recursive(us, ws);
    else if (us == u)
        r = -r_poly_recursive(u, ws);
    else
        r = IntPolynomial::q() * r_poly_recursive(us, ws) + IntPolynomial{-1, 1} * r_poly_recursive(u, ws);
    return r_memo_.emplace(key, std::move(r)).first->second;
}

IntPolynomial PolyTable::r_poly(int u, int w) {
    const auto& q = q_poly(u, w);
    IntPolynomial converted;
    if (!q.is_zero()) {
        int d = poset_.rank(w) - poset_.rank(u);
        converted = q.reciprocal(d);
        if (d % 2) converted = -converted;
    }
    if (converted != r_poly_recursive(u, w))
        throw invariant_error("R-polynomial routes disagree");
    return converted;
}

const IntPolynomial& PolyTable::p_poly(int u, int w) {
    if (u == w) return kOne;
    if (!poset_.leq(u, w)) return kZero;
    auto key = std::make_pair(u, w);
    if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;

    int d = poset_.rank(w) - poset_.rank(u);
    IntPolynomial s;
    for (int v : poset_.interval(u, w)) {
        if (v == u) continue;
        s = s + q_poly(u, v) * p_poly(v, w);
    }
    // s = q^d P(1/q) - P(q); exponents above (d-1)/2 belong to the reversed
    // copy alone, which pins every unknown coefficient
    std::vector<long long> low((d + 1) / 2, 0);
    for (int i = 0; i < (d + 1) / 2; ++i) low[static_cast<size_t>(i)] = s.coeff(d - i);
    IntPolynomial p(std::move(low));
    if (s != p.reciprocal(d) - p) throw invariant_error("triangular inversion is inconsistent");
    return p_memo_.emplace(key, std::move(p)).first->second;
}

}  // namespace twisted
