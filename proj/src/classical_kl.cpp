#include "twisted/classical_kl.hpp"

#include <algorithm>
#include <numeric>

#include "twisted/errors.hpp"

namespace twisted {

ClassicalKLTable::ClassicalKLTable(int m) {
    if (m < 1) throw std::invalid_argument("ground set must be positive");
    if (m > 5) throw capacity_error("classical oracle is capped at S_5");
    std::vector<int> images(static_cast<size_t>(m));
    std::iota(images.begin(), images.end(), 1);
    do {
        elements_.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    std::sort(elements_.begin(), elements_.end(), [](const Permutation& a, const Permutation& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    for (const auto& e : elements_) lengths_.push_back(e.length());
    leq_.assign(elements_.size() * elements_.size(), 0);
    for (size_t u = 0; u < elements_.size(); ++u)
        for (size_t w = 0; w < elements_.size(); ++w)
            leq_[u * elements_.size() + w] = bruhat_leq(elements_[u], elements_[w]) ? 1 : 0;
}

int ClassicalKLTable::index_of(const Permutation& p) const {
    for (size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i] == p) return static_cast<int>(i);
    throw not_found_error("permutation is not in this table");
}

IntPolynomial ClassicalKLTable::r_poly(int u, int w) {
    if (u == w) return IntPolynomial{1};
    if (!leq(u, w)) return {};
    auto key = std::make_pair(u, w);
    if (auto it = r_memo_.find(key); it != r_memo_.end()) return it->second;

    const auto& pw = element(w);
    int m = pw.size();
    int s = -1;
    for (int i = 1; i < m; ++i)
        if (pw(i) > pw(i + 1)) {
            s = i;
            break;
        }
    auto right = [&](const Permutation& p) {
        return p.compose(Permutation::transposition(m, s, s + 1));
    };
    int ws = index_of(right(pw));
    const auto& pu = element(u);
    int us = index_of(right(pu));
    IntPolynomial r;
    if (lengths_[static_cast<size_t>(us)] < lengths_[static_cast<size_t>(u)])
        r = r_poly(us, ws);
    else
        r = IntPolynomial::q() * r_poly(us, ws) + IntPolynomial{-1, 1} * r_poly(u, ws);
    r_memo_.emplace(key, r);
    return r;
}

IntPolynomial ClassicalKLTable::p_poly(int u, int w) {
    if (u == w) return IntPolynomial{1};
    if (!leq(u, w)) return {};
    auto key = std::make_pair(u, w);
    if (auto it = p_memo_.find(key); it != p_memo_.end()) return it->second;

    int d = lengths_[static_cast<size_t>(w)] - lengths_[static_cast<size_t>(u)];
    IntPolynomial s;
    for (int v = 0; v < size(); ++v) {
        if (v == u || !leq(u, v) || !leq(v, w)) continue;
        s = s + r_poly(u, v) * p_poly(v, w);
    }
    std::vector<long long> low((d + 1) / 2, 0);
    for (int i = 0; i < (d + 1) / 2; ++i) low[static_cast<size_t>(i)] = s.coeff(d - i);
    IntPolynomial p(std::move(low));
    if (s != p.reciprocal(d) - p)
        throw invariant_error("classical triangular inversion is inconsistent");
    p_memo_.emplace(key, p);
    return p;
}

bool ClassicalKLTable::rationally_smooth_at(int u, int w) {
    if (!leq(u, w)) throw std::invalid_argument("u is not below w");
    for (int v = 0; v < size(); ++v)
        if (leq(u, v) && leq(v, w) && p_poly(v, w) != IntPolynomial{1}) return false;
    return true;
}

}  // namespace twisted
