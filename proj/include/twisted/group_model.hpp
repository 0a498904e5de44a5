#pragma once

#include <compare>
#include <string>
#include <vector>

#include "twisted/permutation.hpp"

namespace twisted {

enum class ModelKind {
    // W = S_2n with the automorphism x -> w0 x w0 (w0 = order reversal).
    symmetric_flip,
    // W = S_m x S_m with the automorphism (x, y) -> (y, x).
    diagonal_product,
};

// Element of the ambient group: one permutation for symmetric_flip,
// an ordered pair for diagonal_product.  Immutable value type.
class GroupElement {
public:
    explicit GroupElement(Permutation p);
    GroupElement(Permutation a, Permutation b);

    int arity() const { return static_cast<int>(parts_.size()); }
    const Permutation& part(int i) const { return parts_[static_cast<size_t>(i)]; }

    GroupElement compose(const GroupElement& v) const;  // this after v
    GroupElement inverse() const;
    int length() const;  // Coxeter length (sum over components)
    bool is_identity() const;

    // Single component serialized as the permutation; pairs joined by '|'.
    std::string to_string() const;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<Permutation> parts_;
};

// A group model: the ambient Weyl group W together with its involutive
// automorphism theta, simple generators, reflections and longest element.
// All derived lists are built eagerly at construction and never change.
class GroupContext {
public:
    static GroupContext symmetric_flip(int two_n);   // two_n even, >= 2
    static GroupContext diagonal_product(int m);     // m >= 2
    // Parses "flip:2n" / "diagonal:m".
    static GroupContext from_name(const std::string& name);

    ModelKind kind() const { return kind_; }
    // Ground-set size of one symmetric-group component (2n resp. m).
    int ground() const { return ground_; }
    std::string name() const;

    const GroupElement& identity() const { return identity_; }
    const GroupElement& longest() const { return longest_; }

    int generator_count() const { return static_cast<int>(generators_.size()); }
    // 1-based generator index.
    const GroupElement& generator(int i) const;
    const std::vector<GroupElement>& reflections() const { return reflections_; }

    GroupElement theta(const GroupElement& u) const;
    // True iff u has the right shape (arity and component sizes) for W.
    bool contains(const GroupElement& u) const;
    // Bruhat order of W; the product order on components for pairs.
    bool bruhat_leq(const GroupElement& u, const GroupElement& v) const;

    // Every element of W, in lexicographic order.  Intended for the
    // desk-scale models only; cost grows factorially.
    std::vector<GroupElement> all_elements() const;

private:
    GroupContext(ModelKind kind, int ground);

    ModelKind kind_;
    int ground_;
    GroupElement identity_;
    GroupElement longest_;
    std::vector<GroupElement> generators_;
    std::vector<GroupElement> reflections_;
};

}  // namespace twisted
