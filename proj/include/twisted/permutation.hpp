#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace twisted {

// A permutation of {1, ..., m} in one-line notation.  Immutable after
// construction.  Composition is (u * v)(k) = u(v(k)): in a product the
// right factor acts first.
class Permutation {
public:
    // One-line notation; images must be a rearrangement of 1..m.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int m);
    // The transposition (a b); a and b need not be ordered.
    static Permutation transposition(int m, int a, int b);
    // The order-reversing permutation k -> m+1-k (longest element).
    static Permutation reversal(int m);

    int size() const { return static_cast<int>(images_.size()); }
    // 1-based application.
    int operator()(int k) const { return images_[static_cast<size_t>(k) - 1]; }

    Permutation compose(const Permutation& v) const;  // this after v
    Permutation inverse() const;

    // Coxeter length = number of inversions.
    int length() const;
    bool is_involution() const;
    bool has_fixed_point() const;

    // |{x <= i : u(x) >= j}| for 1 <= i, j <= m.
    int dot_count(int i, int j) const;
    // All dot counts as a flat m*m table, entry (i, j) at (i-1)*m + (j-1).
    std::vector<int> dot_table() const;

    // Compact digits for m <= 9 ("2143"), bracketed comma form otherwise.
    std::string to_string() const;
    // Accepts both serialization formats; empty optional on malformed input.
    static std::optional<Permutation> parse(const std::string& text);

    const std::vector<int>& images() const { return images_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

// Bruhat order on S_m via the dot-count criterion:
// u <= v iff every dot count of u is <= the matching dot count of v.
bool bruhat_leq(const Permutation& u, const Permutation& v);

}  // namespace twisted
