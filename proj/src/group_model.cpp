#include "twisted/group_model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "twisted/errors.hpp"

namespace twisted {

GroupElement::GroupElement(Permutation p) { parts_.push_back(std::move(p)); }

GroupElement::GroupElement(Permutation a, Permutation b) {
    if (a.size() != b.size()) throw std::invalid_argument("pair components must have equal size");
    parts_.push_back(std::move(a));
    parts_.push_back(std::move(b));
}

GroupElement GroupElement::compose(const GroupElement& v) const {
    if (arity() != v.arity()) throw std::invalid_argument("composition arity mismatch");
    if (arity() == 1) return GroupElement(part(0).compose(v.part(0)));
    return GroupElement(part(0).compose(v.part(0)), part(1).compose(v.part(1)));
}

GroupElement GroupElement::inverse() const {
    if (arity() == 1) return GroupElement(part(0).inverse());
    return GroupElement(part(0).inverse(), part(1).inverse());
}

int GroupElement::length() const {
    int len = 0;
    for (int i = 0; i < arity(); ++i) len += part(i).length();
    return len;
}

bool GroupElement::is_identity() const { return length() == 0; }

std::string GroupElement::to_string() const {
    if (arity() == 1) return part(0).to_string();
    return part(0).to_string() + "|" + part(1).to_string();
}

GroupContext::GroupContext(ModelKind kind, int ground)
    : kind_(kind),
      ground_(ground),
      identity_(kind == ModelKind::symmetric_flip
                    ? GroupElement(Permutation::identity(ground))
                    : GroupElement(Permutation::identity(ground), Permutation::identity(ground))),
      longest_(kind == ModelKind::symmetric_flip
                   ? GroupElement(Permutation::reversal(ground))
                   : GroupElement(Permutation::reversal(ground), Permutation::reversal(ground))) {
    const int m = ground_;
    if (kind_ == ModelKind::symmetric_flip) {
        for (int i = 1; i < m; ++i)
            generators_.push_back(GroupElement(Permutation::transposition(m, i, i + 1)));
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                reflections_.push_back(GroupElement(Permutation::transposition(m, a, b)));
    } else {
        const Permutation e = Permutation::identity(m);
        for (int i = 1; i < m; ++i)
            generators_.push_back(GroupElement(Permutation::transposition(m, i, i + 1), e));
        for (int i = 1; i < m; ++i)
            generators_.push_back(GroupElement(e, Permutation::transposition(m, i, i + 1)));
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                reflections_.push_back(GroupElement(Permutation::transposition(m, a, b), e));
        for (int a = 1; a <= m; ++a)
            for (int b = a + 1; b <= m; ++b)
                reflections_.push_back(GroupElement(e, Permutation::transposition(m, a, b)));
    }
}

GroupContext GroupContext::symmetric_flip(int two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("symmetric_flip needs an even ground size >= 2");
    return GroupContext(ModelKind::symmetric_flip, two_n);
}

GroupContext GroupContext::diagonal_product(int m) {
    if (m < 2) throw std::invalid_argument("diagonal_product needs ground size >= 2");
    return GroupContext(ModelKind::diagonal_product, m);
}

GroupContext GroupContext::from_name(const std::string& name) {
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string head = name.substr(0, colon);
        const std::string tail = name.substr(colon + 1);
        try {
            size_t used = 0;
            int n = std::stoi(tail, &used);
            if (used == tail.size()) {
                if (head == "flip") return symmetric_flip(n);
                if (head == "diagonal") return diagonal_product(n);
            }
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("bad model name '" + name + "' (expected flip:2n or diagonal:m)");
}

std::string GroupContext::name() const {
    return (kind_ == ModelKind::symmetric_flip ? "flip:" : "diagonal:") + std::to_string(ground_);
}

const GroupElement& GroupContext::generator(int i) const {
    if (i < 1 || i > generator_count()) throw std::invalid_argument("generator index out of range");
    return generators_[static_cast<size_t>(i) - 1];
}

GroupElement GroupContext::theta(const GroupElement& u) const {
    if (!contains(u)) throw std::invalid_argument("element does not belong to this group");
    if (kind_ == ModelKind::symmetric_flip) {
        const Permutation& w0 = longest_.part(0);
        return GroupElement(w0.compose(u.part(0)).compose(w0));
    }
    return GroupElement(u.part(1), u.part(0));
}

bool GroupContext::contains(const GroupElement& u) const {
    const int want = kind_ == ModelKind::symmetric_flip ? 1 : 2;
    if (u.arity() != want) return false;
    for (int i = 0; i < u.arity(); ++i)
        if (u.part(i).size() != ground_) return false;
    return true;
}

bool GroupContext::bruhat_leq(const GroupElement& u, const GroupElement& v) const {
    if (!contains(u) || !contains(v)) throw std::invalid_argument("Bruhat comparison outside the group");
    for (int i = 0; i < u.arity(); ++i)
        if (!twisted::bruhat_leq(u.part(i), v.part(i))) return false;
    return true;
}

std::vector<GroupElement> GroupContext::all_elements() const {
    std::vector<int> base(static_cast<size_t>(ground_));
    std::iota(base.begin(), base.end(), 1);
    std::vector<Permutation> perms;
    std::vector<int> im = base;
    do {
        perms.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));

    std::vector<GroupElement> out;
    if (kind_ == ModelKind::symmetric_flip) {
        out.reserve(perms.size());
        for (const auto& p : perms) out.push_back(GroupElement(p));
    } else {
        out.reserve(perms.size() * perms.size());
        for (const auto& a : perms)
            for (const auto& b : perms) out.push_back(GroupElement(a, b));
    }
    return out;
}

}  // namespace twisted
