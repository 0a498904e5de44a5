#include "twisted/twisted_poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "twisted/errors.hpp"

namespace twisted {

GroupElement twist(const GroupContext& ctx, const GroupElement& u, const GroupElement& w) {
    return ctx.theta(w.inverse()).compose(u).compose(w);
}

bool is_twisted_involution(const GroupContext& ctx, const GroupElement& u) {
    return ctx.contains(u) && ctx.theta(u) == u.inverse();
}

bool is_twisted_identity(const GroupContext& ctx, const GroupElement& u) {
    if (!is_twisted_involution(ctx, u)) return false;
    GroupElement cur = u;
    int len = cur.length();
    while (len > 0) {
        bool moved = false;
        for (int s = 1; s <= ctx.generator_count(); ++s) {
            GroupElement next = twist(ctx, cur, ctx.generator(s));
            int nlen = next.length();
            if (nlen < len) {
                cur = std::move(next);
                len = nlen;
                moved = true;
                break;
            }
        }
        if (!moved) return false;  // stuck at a minimum that is not e
    }
    return true;
}

TwistedIdentity make_twisted_identity(const GroupContext& ctx, const GroupElement& u) {
    if (!is_twisted_identity(ctx, u))
        throw std::invalid_argument("element " + u.to_string() + " is not a twisted identity");
    const int len = u.length();
    if (len % 2 != 0) throw invariant_error("twisted identity with odd length");
    return TwistedIdentity{u, len / 2};
}

std::vector<GroupElement> twisted_involutions(const GroupContext& ctx) {
    std::vector<GroupElement> out;
    if (ctx.kind() == ModelKind::symmetric_flip) {
        for (const auto& x : ctx.all_elements())
            if (is_twisted_involution(ctx, x)) out.push_back(x);
    } else {
        // theta(x, y) = (x, y)^-1 forces y = x^-1, so I(theta) = iota(theta).
        std::vector<int> im(static_cast<size_t>(ctx.ground()));
        std::iota(im.begin(), im.end(), 1);
        do {
            Permutation p(im);
            out.push_back(GroupElement(p, p.inverse()));
        } while (std::next_permutation(im.begin(), im.end()));
    }
    return out;
}

int capacity_limit(ModelKind kind) {
    if (const char* env = std::getenv("TWISTED_MAX_N")) {
        try {
            size_t used = 0;
            int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 2) return v;
        } catch (const std::exception&) {
        }
    }
    return kind == ModelKind::symmetric_flip ? 8 : 5;
}

namespace {

std::vector<int> concatenated_dots(const GroupElement& u) {
    std::vector<int> out;
    for (int i = 0; i < u.arity(); ++i) {
        auto t = u.part(i).dot_table();
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

bool dots_leq(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

}  // namespace

std::vector<char> order_matrix_serial(const GroupContext& ctx, const std::vector<GroupElement>& elems) {
    const int n = static_cast<int>(elems.size());
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) {
                leq[static_cast<size_t>(u) * n + w] = 1;
                continue;
            }
            if (elems[static_cast<size_t>(u)].length() >= elems[static_cast<size_t>(w)].length()) continue;
            leq[static_cast<size_t>(u) * n + w] =
                ctx.bruhat_leq(elems[static_cast<size_t>(u)], elems[static_cast<size_t>(w)]) ? 1 : 0;
        }
    return leq;
}

std::vector<char> order_matrix_parallel(const GroupContext& ctx, const std::vector<GroupElement>& elems) {
    (void)ctx;
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> dots(static_cast<size_t>(n));
    std::vector<int> lens(static_cast<size_t>(n));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        dots[static_cast<size_t>(i)] = concatenated_dots(elems[static_cast<size_t>(i)]);
        lens[static_cast<size_t>(i)] = elems[static_cast<size_t>(i)].length();
    }
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic)
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w)
                leq[static_cast<size_t>(u) * n + w] = 1;
            else if (lens[static_cast<size_t>(u)] < lens[static_cast<size_t>(w)])
                leq[static_cast<size_t>(u) * n + w] =
                    dots_leq(dots[static_cast<size_t>(u)], dots[static_cast<size_t>(w)]) ? 1 : 0;
        }
    return leq;
}

TwistedPoset::TwistedPoset(GroupContext ctx) : ctx_(std::move(ctx)) {}

TwistedPoset TwistedPoset::enumerate(const GroupContext& ctx, bool parallel) {
    const int cap = capacity_limit(ctx.kind());
    if (ctx.ground() > cap)
        throw capacity_error(ctx.name() + " exceeds the ground-set cap " + std::to_string(cap) +
                             " (set TWISTED_MAX_N to raise it)");

    TwistedPoset poset(ctx);

    // Orbit of the identity under u -> u * s.
    std::map<GroupElement, int> seen;
    std::vector<GroupElement> found;
    found.push_back(ctx.identity());
    seen.emplace(ctx.identity(), 0);
    for (size_t head = 0; head < found.size(); ++head) {
        GroupElement cur = found[head];
        for (int s = 1; s <= ctx.generator_count(); ++s) {
            GroupElement next = twist(ctx, cur, ctx.generator(s));
            if (seen.emplace(next, static_cast<int>(found.size())).second) found.push_back(std::move(next));
        }
    }

    std::vector<int> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> lens(found.size());
    std::vector<std::string> keys(found.size());
    for (size_t i = 0; i < found.size(); ++i) {
        lens[i] = found[i].length();
        if (lens[i] % 2 != 0) throw invariant_error("odd length in iota(theta): " + found[i].to_string());
        keys[i] = found[i].to_string();
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (lens[static_cast<size_t>(a)] != lens[static_cast<size_t>(b)])
            return lens[static_cast<size_t>(a)] < lens[static_cast<size_t>(b)];
        return keys[static_cast<size_t>(a)] < keys[static_cast<size_t>(b)];
    });
    for (int idx : order) {
        poset.elements_.push_back(found[static_cast<size_t>(idx)]);
        poset.ranks_.push_back(lens[static_cast<size_t>(idx)] / 2);
    }
    const int n = poset.size();
    for (int i = 0; i < n; ++i) poset.index_.emplace(poset.elements_[static_cast<size_t>(i)], i);

    poset.max_rank_ = poset.ranks_.back();
    poset.rank_counts_.assign(static_cast<size_t>(poset.max_rank_) + 1, 0);
    for (int r : poset.ranks_) ++poset.rank_counts_[static_cast<size_t>(r)];
    if (!poset.elements_[0].is_identity() || poset.rank_counts_[0] != 1)
        throw invariant_error("iota(theta) does not have the identity as unique minimum");

    poset.element_dots_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        poset.element_dots_[static_cast<size_t>(i)] = concatenated_dots(poset.elements_[static_cast<size_t>(i)]);

    poset.leq_ = parallel ? order_matrix_parallel(ctx, poset.elements_)
                          : order_matrix_serial(ctx, poset.elements_);

    // Partial-order sanity: rank compatibility and transitivity.
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (poset.leq(u, w) && u != w && poset.rank(u) >= poset.rank(w))
                throw invariant_error("order relation does not respect rank");
    for (int u = 0; u < n; ++u)
        for (int z = 0; z < n; ++z) {
            if (!poset.leq(u, z)) continue;
            for (int w = 0; w < n; ++w)
                if (poset.leq(z, w) && !poset.leq(u, w)) throw invariant_error("order relation not transitive");
        }

    // Covers by betweenness; gradedness demands a rank gap of exactly 1.
    poset.up_covers_.assign(static_cast<size_t>(n), {});
    poset.down_covers_.assign(static_cast<size_t>(n), {});
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w || !poset.leq(u, w)) continue;
            bool has_between = false;
            for (int z = 0; z < n && !has_between; ++z)
                if (z != u && z != w && poset.leq(u, z) && poset.leq(z, w)) has_between = true;
            if (!has_between) {
                if (poset.rank(w) != poset.rank(u) + 1)
                    throw invariant_error("cover with rank gap != 1; poset not graded");
                poset.up_covers_[static_cast<size_t>(u)].push_back(w);
                poset.down_covers_[static_cast<size_t>(w)].push_back(u);
            }
        }

    // *-action tables over generators and reflections.
    poset.star_gen_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(ctx.generator_count())));
    const auto& refl = ctx.reflections();
    poset.star_refl_.assign(static_cast<size_t>(n), std::vector<int>(refl.size()));
    for (int i = 0; i < n; ++i) {
        for (int s = 1; s <= ctx.generator_count(); ++s) {
            auto it = poset.index_.find(twist(ctx, poset.elements_[static_cast<size_t>(i)], ctx.generator(s)));
            if (it == poset.index_.end()) throw invariant_error("orbit not closed under * by a generator");
            poset.star_gen_[static_cast<size_t>(i)][static_cast<size_t>(s) - 1] = it->second;
        }
        for (size_t t = 0; t < refl.size(); ++t) {
            auto it = poset.index_.find(twist(ctx, poset.elements_[static_cast<size_t>(i)], refl[t]));
            if (it == poset.index_.end()) throw invariant_error("orbit not closed under * by a reflection");
            poset.star_refl_[static_cast<size_t>(i)][t] = it->second;
        }
    }

    poset.twisted_involutions_ = twisted_involutions(ctx);
    poset.involution_dots_.resize(poset.twisted_involutions_.size());
    for (size_t k = 0; k < poset.twisted_involutions_.size(); ++k)
        poset.involution_dots_[k] = concatenated_dots(poset.twisted_involutions_[k]);

    return poset;
}

std::optional<int> TwistedPoset::index_of(const GroupElement& u) const {
    auto it = index_.find(u);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> TwistedPoset::descents(int i) const {
    std::vector<int> by_rank, by_length;
    const GroupElement& w = element(i);
    const int len = w.length();
    for (int s = 1; s <= ctx_.generator_count(); ++s) {
        if (rank(star_generator(i, s)) < rank(i)) by_rank.push_back(s);
        if (w.compose(ctx_.generator(s)).length() < len) by_length.push_back(s);
    }
    if (by_rank != by_length)
        throw invariant_error("descent characterizations disagree at " + w.to_string());
    return by_rank;
}

std::vector<int> TwistedPoset::interval(int u, int w) const {
    std::vector<int> out;
    if (!leq(u, w)) return out;
    for (int z = 0; z < size(); ++z)
        if (leq(u, z) && leq(z, w)) out.push_back(z);
    return out;
}

bool TwistedPoset::is_full_interval(int u, int w) const {
    if (!leq(u, w)) throw std::invalid_argument("is_full_interval needs a comparable pair");
    const auto& du = element_dots_[static_cast<size_t>(u)];
    const auto& dw = element_dots_[static_cast<size_t>(w)];
    for (size_t k = 0; k < twisted_involutions_.size(); ++k) {
        const auto& dx = involution_dots_[k];
        if (!dots_leq(du, dx) || !dots_leq(dx, dw)) continue;
        if (!index_.count(twisted_involutions_[k])) return false;
    }
    return true;
}

long long TwistedPoset::mobius_closed(int u, int w) const {
    if (!leq(u, w)) return 0;
    if (!is_full_interval(u, w)) return 0;
    return (rank(w) - rank(u)) % 2 == 0 ? 1 : -1;
}

long long TwistedPoset::mobius_recursive(int u, int w) const {
    if (!leq(u, w)) return 0;
    std::vector<int> zs = interval(u, w);
    std::vector<long long> mu(zs.size(), 0);
    for (size_t zi = 0; zi < zs.size(); ++zi) {
        if (zs[zi] == u) {
            mu[zi] = 1;
            continue;
        }
        long long acc = 0;
        for (size_t yi = 0; yi < zi; ++yi)
            if (leq(zs[yi], zs[zi])) acc += mu[yi];
        mu[zi] = -acc;
    }
    return mu.back();
}

int TwistedPoset::bottom() const { return 0; }

int TwistedPoset::top() const {
    int found = -1;
    for (int i = 0; i < size(); ++i)
        if (rank(i) == max_rank_) {
            if (found >= 0) throw invariant_error("maximum of iota(theta) is not unique");
            found = i;
        }
    return found;
}

std::string TwistedPoset::export_text() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) os << rank(i) << '\t' << element(i).to_string() << '\n';
    os << '\n';
    for (int i = 0; i < size(); ++i)
        for (int j : upper_covers(i)) os << i << ' ' << j << '\n';
    return os.str();
}

}  // namespace twisted
