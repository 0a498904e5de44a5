#pragma once

// Brute-force oracles for test use only.  They deliberately avoid the dot
// count machinery of the library: Bruhat order is decided through reduced
// words and the subword property, so agreement with the library is a real
// cross-check and not a tautology.

#include <map>
#include <set>
#include <vector>

#include "twisted/permutation.hpp"

namespace oracle {

using twisted::Permutation;

// Right-to-left evaluation of a word over generator indices.
inline Permutation evaluate_word(const std::vector<int>& word, int m) {
    Permutation p = Permutation::identity(m);
    for (int letter : word) p = p.compose(Permutation::transposition(m, letter, letter + 1));
    return p;
}

// All reduced words of u, generated by stripping right descents.
inline std::vector<std::vector<int>> all_reduced_words(const Permutation& u) {
    static std::map<Permutation, std::vector<std::vector<int>>> memo;
    auto hit = memo.find(u);
    if (hit != memo.end()) return hit->second;
    std::vector<std::vector<int>> words;
    if (u.length() == 0) {
        words.push_back({});
    } else {
        for (int s = 1; s < u.size(); ++s) {
            Permutation us = u.compose(Permutation::transposition(u.size(), s, s + 1));
            if (us.length() < u.length())
                for (auto w : all_reduced_words(us)) {
                    w.push_back(s);
                    words.push_back(std::move(w));
                }
        }
    }
    memo[u] = words;
    return words;
}

// One reduced word of u (greedy descent stripping).
inline std::vector<int> some_reduced_word(const Permutation& u) {
    std::vector<int> word;
    Permutation cur = u;
    while (cur.length() > 0)
        for (int s = 1; s < cur.size(); ++s) {
            Permutation cs = cur.compose(Permutation::transposition(cur.size(), s, s + 1));
            if (cs.length() < cur.length()) {
                word.push_back(s);
                cur = cs;
                break;
            }
        }
    std::reverse(word.begin(), word.end());
    return word;
}

// Every element reachable as a subword product of one reduced word of v.
// By the subword property this set is exactly {u : u <= v}.
inline std::set<Permutation> subword_elements(const Permutation& v) {
    const std::vector<int> word = some_reduced_word(v);
    const int k = static_cast<int>(word.size());
    std::set<Permutation> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) sub.push_back(word[static_cast<size_t>(i)]);
        out.insert(evaluate_word(sub, v.size()));
    }
    return out;
}

inline bool subword_leq(const Permutation& u, const Permutation& v) {
    return subword_elements(v).count(u) > 0;
}

// Literal reading of the subword criterion: some reduced word of v contains
// some reduced word of u as a subsequence.  Exponential; callers keep
// lengths <= 7.
inline bool allwords_leq(const Permutation& u, const Permutation& v) {
    auto is_subsequence = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0;
        for (size_t j = 0; j < b.size() && i < a.size(); ++j)
            if (a[i] == b[j]) ++i;
        return i == a.size();
    };
    for (const auto& wv : all_reduced_words(v))
        for (const auto& wu : all_reduced_words(u))
            if (is_subsequence(wu, wv)) return true;
    return false;
}

}  // namespace oracle
