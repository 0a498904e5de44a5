#include "twisted/fpf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twisted/errors.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

Transposition::Transposition(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y || a < 1) throw std::invalid_argument("transposition needs two distinct points >= 1");
}

FpfInvolution::FpfInvolution(Permutation p) : p_(std::move(p)) {
    for (int k = 1; k <= p_.size(); ++k) {
        if (p_(k) == k) throw std::invalid_argument("fixed point at " + std::to_string(k));
        if (p_(p_(k)) != k) throw std::invalid_argument("not an involution");
    }
}

std::string FpfInvolution::cycle_form() const {
    std::string out;
    for (int k = 1; k <= size(); ++k)
        if (k < p_(k)) out += "(" + std::to_string(k) + " " + std::to_string(p_(k)) + ")";
    return out;
}

std::optional<FpfInvolution> FpfInvolution::parse_cycles(const std::string& text, int two_n) {
    if (two_n < 2 || two_n % 2) return std::nullopt;
    std::vector<int> images(static_cast<size_t>(two_n), 0);
    std::istringstream in(text);
    char c;
    int pairs = 0;
    while (in >> c) {
        int x, y;
        if (c != '(' || !(in >> x >> y >> c) || c != ')') return std::nullopt;
        if (x < 1 || y < 1 || x > two_n || y > two_n || x == y) return std::nullopt;
        if (images[static_cast<size_t>(x) - 1] || images[static_cast<size_t>(y) - 1]) return std::nullopt;
        images[static_cast<size_t>(x) - 1] = y;
        images[static_cast<size_t>(y) - 1] = x;
        ++pairs;
    }
    if (pairs * 2 != two_n) return std::nullopt;
    return FpfInvolution(Permutation(images));
}

FpfInvolution fpf_star(const FpfInvolution& u, const Transposition& t) {
    if (t.b > u.size()) throw std::invalid_argument("transposition leaves the ground set");
    std::vector<int> images(static_cast<size_t>(u.size()));
    for (int k = 1; k <= u.size(); ++k)
        images[static_cast<size_t>(k) - 1] = t.apply(u(t.apply(k)));
    return FpfInvolution(Permutation(images));
}

bool fpf_preceq(const FpfInvolution& u, const FpfInvolution& w) {
    if (u.size() != w.size()) throw std::invalid_argument("size mismatch");
    auto du = u.permutation().dot_table();
    auto dw = w.permutation().dot_table();
    for (size_t i = 0; i < du.size(); ++i)
        if (du[i] < dw[i]) return false;
    return true;
}

std::vector<FpfInvolution> all_fpf(int two_n) {
    if (two_n < 2 || two_n % 2) throw std::invalid_argument("ground set must be even and positive");
    std::vector<FpfInvolution> out;
    std::vector<int> images(static_cast<size_t>(two_n), 0);
    // pair the smallest unmatched point with every larger free point
    auto rec = [&](auto&& self) -> void {
        int k = 1;
        while (k <= two_n && images[static_cast<size_t>(k) - 1]) ++k;
        if (k > two_n) {
            out.emplace_back(Permutation(images));
            return;
        }
        for (int j = k + 1; j <= two_n; ++j) {
            if (images[static_cast<size_t>(j) - 1]) continue;
            images[static_cast<size_t>(k) - 1] = j;
            images[static_cast<size_t>(j) - 1] = k;
            self(self);
            images[static_cast<size_t>(k) - 1] = 0;
            images[static_cast<size_t>(j) - 1] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

FpfInvolution to_fpf(const GroupContext& ctx, const GroupElement& u) {
    if (ctx.kind() != ModelKind::symmetric_flip)
        throw unsupported_model_error("the involution model belongs to the flip case");
    if (!is_twisted_identity(ctx, u))
        throw std::invalid_argument("element is not a twisted identity");
    return FpfInvolution(Permutation::reversal(ctx.ground()).compose(u.part(0)));
}

GroupElement to_iota(const GroupContext& ctx, const FpfInvolution& x) {
    if (ctx.kind() != ModelKind::symmetric_flip)
        throw unsupported_model_error("the involution model belongs to the flip case");
    if (x.size() != ctx.ground()) throw std::invalid_argument("size mismatch");
    GroupElement u(Permutation::reversal(ctx.ground()).compose(x.permutation()));
    if (!is_twisted_identity(ctx, u)) throw invariant_error("bridge image left iota(theta)");
    return u;
}

Transposition edge_partner(const FpfInvolution& u, const Transposition& t) {
    if (u(t.a) == t.b) throw std::invalid_argument("t is a 2-cycle of u: no partner");
    if (t.b > u.size()) throw std::invalid_argument("transposition leaves the ground set");
    return Transposition(u(t.a), u(t.b));
}

std::vector<FpfInvolution> fpf_neighbours(const FpfInvolution& u, const FpfInvolution& w) {
    std::set<FpfInvolution> seen;
    for (int a = 1; a <= u.size(); ++a)
        for (int b = a + 1; b <= u.size(); ++b) {
            auto v = fpf_star(u, Transposition(a, b));
            if (!(v == u) && fpf_preceq(v, w)) seen.insert(v);
        }
    return {seen.begin(), seen.end()};
}

bool is_compatible(const FpfInvolution& u, const Transposition& r, const Transposition& t) {
    auto ur = fpf_star(u, r);
    if (ur == u || !fpf_preceq(ur, u))
        throw std::invalid_argument("r must move u strictly down");
    int a = u(r.a), b = u(r.b);
    bool meets_r = t.moves(r.a) || t.moves(r.b);
    bool meets_any = meets_r || t.moves(a) || t.moves(b);
    return !meets_any || meets_r;
}

namespace {

std::pair<FpfInvolution, FpfInvolution> ordered_edge(FpfInvolution x, FpfInvolution y) {
    if (y < x) std::swap(x, y);
    return {std::move(x), std::move(y)};
}

// tau and the image edge for one admissible choice of t_e.
std::pair<Transposition, std::pair<FpfInvolution, FpfInvolution>> image_for(
    const FpfInvolution& u, const Transposition& r, const FpfInvolution& w,
    const Transposition& t_e) {
    auto ur = fpf_star(u, r);
    Transposition tau = fpf_preceq(fpf_star(fpf_star(u, t_e), r), w)
                            ? Transposition(r.apply(t_e.a), r.apply(t_e.b))
                            : t_e;
    auto target = fpf_star(ur, tau);
    if (target == ur || !fpf_preceq(target, w))
        throw invariant_error("epsilon image is not an edge under w");
    return {tau, ordered_edge(ur, target)};
}

}  // namespace

EdgeChoice epsilon(const FpfInvolution& u, const Transposition& r, const FpfInvolution& w,
                   const FpfInvolution& v) {
    if (!fpf_preceq(u, w)) throw std::invalid_argument("u is not under w");
    auto ur = fpf_star(u, r);
    if (ur == u || !fpf_preceq(ur, u)) throw std::invalid_argument("r must move u strictly down");
    if (v == u || !fpf_preceq(v, w)) throw std::invalid_argument("{u,v} is not an edge under w");

    // the two transpositions realizing the edge
    std::optional<Transposition> first;
    for (int a = 1; a <= u.size() && !first; ++a)
        for (int b = a + 1; b <= u.size(); ++b)
            if (fpf_star(u, Transposition(a, b)) == v) {
                first = Transposition(a, b);
                break;
            }
    if (!first) throw std::invalid_argument("{u,v} is not an edge under w");
    Transposition other = edge_partner(u, *first);

    std::vector<Transposition> compatible;
    for (const auto& t : {std::min(*first, other), std::max(*first, other)})
        if (is_compatible(u, r, t)) compatible.push_back(t);
    if (compatible.empty()) throw invariant_error("no compatible transposition on an edge");

    auto [tau, image] = image_for(u, r, w, compatible.front());
    if (compatible.size() == 2) {
        auto second = image_for(u, r, w, compatible.back());
        if (second.second != image)
            throw invariant_error("epsilon depends on the compatible choice");
    }
    return {ordered_edge(u, v), compatible.front(), tau, image};
}

bool orbit6_check(const FpfInvolution& u, const Transposition& t1, const Transposition& t2,
                  const FpfInvolution& w) {
    std::set<FpfInvolution> orbit{u};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& x : std::vector<FpfInvolution>(orbit.begin(), orbit.end()))
            for (const auto& t : {t1, t2})
                if (orbit.insert(fpf_star(x, t)).second) grew = true;
    }
    if (orbit.size() != 6) throw std::invalid_argument("star orbit does not have six elements");
    int inside = 0;
    for (const auto& x : orbit)
        if (fpf_preceq(x, w)) ++inside;
    return inside != 5;
}

}  // namespace twisted
