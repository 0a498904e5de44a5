#include "twisted/check_suites.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "twisted/bruhat_graph.hpp"
#include "twisted/classical_kl.hpp"
#include "twisted/errors.hpp"
#include "twisted/fpf.hpp"
#include "twisted/klv.hpp"
#include "twisted/smoothness.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

namespace {

class Recorder {
  public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    template <typename MessageFn>
    void check(bool ok, MessageFn&& message) {
        ++result_.checks;
        if (ok) return;
        result_.passed = false;
        ++result_.failed;
        if (static_cast<int>(result_.failures.size()) < kMaxReportedFailures)
            result_.failures.push_back(message());
    }

    SuiteResult take() { return std::move(result_); }

  private:
    SuiteResult result_;
};

// fast keeps the low ranks plus the unique maximum; exhaustive keeps all.
std::vector<int> selected_w(const TwistedPoset& poset, CheckLevel level) {
    std::vector<int> out;
    for (int w = 0; w < poset.size(); ++w)
        if (level == CheckLevel::exhaustive || poset.rank(w) <= 2 || w == poset.top())
            out.push_back(w);
    return out;
}

std::string elem(const TwistedPoset& poset, int i) { return poset.element(i).to_string(); }

long long double_factorial_odd(int two_n) {
    long long out = 1;
    for (int k = 1; k < two_n; k += 2) out *= k;
    return out;
}

long long factorial(int m) {
    long long out = 1;
    for (int k = 2; k <= m; ++k) out *= k;
    return out;
}

// Structural graph properties plus the first-derivative edge indicator.
SuiteResult edges_suite(const GroupContext& ctx, const TwistedPoset& poset, CheckLevel level) {
    Recorder rec("edges");
    auto ws = selected_w(poset, level);

    std::set<std::pair<int, int>> adjacency;
    {
        auto top = BruhatGraph::build(ctx, poset, poset.top());
        for (const auto& e : top.edges()) adjacency.emplace(e.u, e.v);
    }

    for (int w : ws) {
        auto graph = BruhatGraph::build(ctx, poset, w);
        for (int v : graph.vertices()) {
            rec.check(graph.degree(v) >= poset.rank(w), [&] {
                return "w=" + elem(poset, w) + " v=" + elem(poset, v) + ": degree " +
                       std::to_string(graph.degree(v)) + " below rank " +
                       std::to_string(poset.rank(w));
            });
            rec.check(graph.down_degree(v) == poset.rank(v), [&] {
                return "w=" + elem(poset, w) + " v=" + elem(poset, v) + ": down-degree " +
                       std::to_string(graph.down_degree(v)) + " != rank " +
                       std::to_string(poset.rank(v));
            });
        }
        for (const auto& e : graph.edges()) {
            rec.check(poset.leq(e.u, e.v), [&] {
                return "w=" + elem(poset, w) + ": edge endpoints " + elem(poset, e.u) + ", " +
                       elem(poset, e.v) + " are incomparable";
            });
            for (int t : e.reflections)
                rec.check(poset.star_reflection(e.u, t) == e.v, [&] {
                    return "w=" + elem(poset, w) + ": recorded reflection does not carry " +
                           elem(poset, e.u) + " to " + elem(poset, e.v);
                });
        }
    }

    PolyTable table(poset);
    for (int w : ws)
        for (int u = 0; u < poset.size(); ++u) {
            if (u == w || !poset.leq(u, w)) continue;
            bool edge = adjacency.count({u, w}) != 0;
            long long slope = table.q_poly(u, w).derivative_at_one();
            rec.check(slope == (edge ? 1 : 0), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": Q'(1) = " +
                       std::to_string(slope) + " but edge = " + (edge ? "yes" : "no");
            });
        }
    return rec.take();
}

// Moebius by closed form, by recursion, and as the constant term of Q.
SuiteResult mobius_suite(const TwistedPoset& poset, CheckLevel level) {
    Recorder rec("mobius");
    PolyTable table(poset);
    for (int w : selected_w(poset, level))
        for (int u = 0; u < poset.size(); ++u) {
            if (!poset.leq(u, w)) continue;
            long long closed = poset.mobius_closed(u, w);
            rec.check(closed == poset.mobius_recursive(u, w), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) +
                       ": closed form vs recursion";
            });
            rec.check(table.q_poly(u, w).constant_term() == closed, [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) +
                       ": Q(0) != Moebius value";
            });
        }
    return rec.take();
}

// Pointwise polynomial identities: the rank-power sum rule together with the
// degree, evaluation and positivity constraints on Q and P.
SuiteResult qsum_suite(const TwistedPoset& poset, CheckLevel level) {
    Recorder rec("qsum");
    PolyTable table(poset);
    for (int w : selected_w(poset, level)) {
        IntPolynomial sum;
        for (int u = 0; u < poset.size(); ++u) {
            if (!poset.leq(u, w)) continue;
            int gap = poset.rank(w) - poset.rank(u);
            const auto& q = table.q_poly(u, w);
            sum = sum + q;
            rec.check(q.degree() == gap, [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": deg Q = " +
                       std::to_string(q.degree()) + " != " + std::to_string(gap);
            });
            rec.check(q.at_one() == (u == w ? 1 : 0), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": Q(1) = " +
                       std::to_string(q.at_one());
            });
            const auto& p = table.p_poly(u, w);
            rec.check(p.constant_term() == 1, [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": P(0) = " +
                       std::to_string(p.constant_term());
            });
            rec.check(2 * p.degree() <= std::max(gap - 1, 0), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": deg P = " +
                       std::to_string(p.degree()) + " breaks the half-gap bound";
            });
            bool nonneg = true;
            for (int k = 0; k <= p.degree(); ++k) nonneg = nonneg && p.coeff(k) >= 0;
            rec.check(nonneg, [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) + ": P = " +
                       p.to_string() + " has a negative coefficient";
            });
        }
        rec.check(sum == IntPolynomial::monomial(1, poset.rank(w)), [&] {
            return "w=" + elem(poset, w) + ": interval Q-sum is " + sum.to_string() +
                   ", not q^" + std::to_string(poset.rank(w));
        });
    }
    return rec.take();
}

// The polynomial and degree smoothness criteria, pointwise and globally,
// plus the bottom-vertex shortcut where the model admits one.
SuiteResult equivalences_suite(const GroupContext& ctx, const TwistedPoset& poset,
                               CheckLevel level) {
    Recorder rec("equivalences");
    PolyTable table(poset);
    for (int w : selected_w(poset, level)) {
        auto graph = BruhatGraph::build(ctx, poset, w);
        auto by_p = locus_via_p(table, w);
        auto by_degree = locus_via_degree(poset, graph);
        rec.check(by_p == by_degree, [&] {
            return "w=" + elem(poset, w) + ": polynomial locus has " +
                   std::to_string(by_p.size()) + " points, degree locus " +
                   std::to_string(by_degree.size());
        });

        bool regular = true;
        for (int v : graph.vertices()) regular = regular && graph.degree(v) == poset.rank(w);
        bool symmetric = rank_symmetric(poset, w);
        bool trivial_p = static_cast<int>(by_p.size()) == static_cast<int>(graph.vertices().size());
        rec.check(symmetric == regular, [&] {
            return "w=" + elem(poset, w) + ": rank symmetry vs regularity";
        });
        rec.check(regular == trivial_p, [&] {
            return "w=" + elem(poset, w) + ": regularity vs all-P-trivial";
        });

        if (ctx.kind() == ModelKind::symmetric_flip)
            for (int v : graph.vertices())
                rec.check(bottom_vertex_check(poset, graph, v) ==
                              std::binary_search(by_degree.begin(), by_degree.end(), v),
                          [&] {
                              return "w=" + elem(poset, w) + " u=" + elem(poset, v) +
                                     ": bottom-vertex degree test disagrees with the interval test";
                          });
    }
    return rec.take();
}

// The edge injection out(u) -> out(u*r) in the involution model, its degree
// consequence, and the six-element orbit obstruction.
SuiteResult epsilon_suite(const GroupContext& ctx, const TwistedPoset& poset, CheckLevel level) {
    if (ctx.kind() != ModelKind::symmetric_flip)
        throw unsupported_model_error("the epsilon suite runs on the involution model (flip)");
    if (ctx.ground() > 6)
        throw capacity_error("the epsilon suite is capped at flip:6");
    Recorder rec("epsilon");

    int two_n = ctx.ground();
    std::vector<FpfInvolution> bridged;
    bridged.reserve(static_cast<size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i) bridged.push_back(to_fpf(ctx, poset.element(i)));

    std::vector<Transposition> transpositions;
    for (int a = 1; a <= two_n; ++a)
        for (int b = a + 1; b <= two_n; ++b) transpositions.emplace_back(a, b);

    // distinct six-element star orbits under a transposition pair sharing a point
    std::set<std::vector<FpfInvolution>> six_orbits;
    for (const auto& u : all_fpf(two_n))
        for (const auto& t1 : transpositions)
            for (const auto& t2 : transpositions) {
                if (!(t1 < t2) || t1.moves(t2.a) == t1.moves(t2.b)) continue;
                std::set<FpfInvolution> orbit{u};
                for (bool grew = true; grew;) {
                    grew = false;
                    for (const auto& x : std::vector<FpfInvolution>(orbit.begin(), orbit.end()))
                        for (const auto& t : {t1, t2})
                            if (orbit.insert(fpf_star(x, t)).second) grew = true;
                }
                if (orbit.size() == 6) six_orbits.emplace(orbit.begin(), orbit.end());
            }

    for (int w : selected_w(poset, level)) {
        const auto& fw = bridged[static_cast<size_t>(w)];
        for (int ui = 0; ui < poset.size(); ++ui) {
            if (!poset.leq(ui, w)) continue;
            const auto& fu = bridged[static_cast<size_t>(ui)];
            auto out_u = fpf_neighbours(fu, fw);
            for (const auto& r : transpositions) {
                auto ur = fpf_star(fu, r);
                if (ur == fu || !fpf_preceq(ur, fu)) continue;
                auto out_ur = fpf_neighbours(ur, fw);
                std::set<std::pair<FpfInvolution, FpfInvolution>> images;
                for (const auto& v : out_u) {
                    bool ok = true;
                    std::string why;
                    try {
                        auto choice = epsilon(fu, r, fw, v);
                        const auto& target = choice.image_edge.first == ur
                                                 ? choice.image_edge.second
                                                 : choice.image_edge.first;
                        ok = (choice.image_edge.first == ur || choice.image_edge.second == ur) &&
                             std::binary_search(out_ur.begin(), out_ur.end(), target);
                        if (!ok) why = "image is not an edge at u*r";
                        images.insert(choice.image_edge);
                    } catch (const invariant_error& e) {
                        ok = false;
                        why = e.what();
                    }
                    rec.check(ok, [&] {
                        return "w=" + fw.to_string() + " u=" + fu.to_string() + " r=(" +
                               std::to_string(r.a) + "," + std::to_string(r.b) + ") v=" +
                               v.to_string() + ": " + why;
                    });
                }
                rec.check(images.size() == out_u.size(), [&] {
                    return "w=" + fw.to_string() + " u=" + fu.to_string() + " r=(" +
                           std::to_string(r.a) + "," + std::to_string(r.b) +
                           "): images collide";
                });
                rec.check(out_ur.size() >= out_u.size(), [&] {
                    return "w=" + fw.to_string() + " u=" + fu.to_string() + " r=(" +
                           std::to_string(r.a) + "," + std::to_string(r.b) +
                           "): degree drops going down";
                });
            }
        }

        for (const auto& orbit : six_orbits) {
            int inside = 0;
            for (const auto& x : orbit)
                if (fpf_preceq(x, fw)) ++inside;
            rec.check(inside != 5, [&] {
                return "w=" + fw.to_string() + ": a six-element star orbit has exactly five "
                       "members under w";
            });
        }
    }
    return rec.take();
}

// Cross-checks against independent machinery: the fixed-point-free involution
// model for flip, the classical Kazhdan-Lusztig theory for diagonal.
SuiteResult oracle_suite(const GroupContext& ctx, const TwistedPoset& poset, CheckLevel level) {
    Recorder rec("oracle");
    auto ws = selected_w(poset, level);

    if (ctx.kind() == ModelKind::symmetric_flip) {
        rec.check(static_cast<long long>(poset.size()) == double_factorial_odd(ctx.ground()),
                  [&] {
                      return "count " + std::to_string(poset.size()) + " != (2n-1)!! for 2n=" +
                             std::to_string(ctx.ground());
                  });

        std::vector<FpfInvolution> bridged;
        bridged.reserve(static_cast<size_t>(poset.size()));
        for (int i = 0; i < poset.size(); ++i) bridged.push_back(to_fpf(ctx, poset.element(i)));

        for (int u = 0; u < poset.size(); ++u)
            for (int v = 0; v < poset.size(); ++v)
                rec.check(poset.leq(u, v) == fpf_preceq(bridged[static_cast<size_t>(u)],
                                                        bridged[static_cast<size_t>(v)]),
                          [&] {
                              return "u=" + elem(poset, u) + " v=" + elem(poset, v) +
                                     ": order disagrees with the involution model";
                          });

        for (int w : ws) {
            auto graph = BruhatGraph::build(ctx, poset, w);
            for (int u : graph.vertices()) {
                std::set<FpfInvolution> through_bridge;
                for (int e : graph.incident(u))
                    through_bridge.insert(
                        bridged[static_cast<size_t>(graph.other_endpoint(e, u))]);
                auto native =
                    fpf_neighbours(bridged[static_cast<size_t>(u)], bridged[static_cast<size_t>(w)]);
                rec.check(std::set<FpfInvolution>(native.begin(), native.end()) == through_bridge,
                          [&] {
                              return "w=" + elem(poset, w) + " u=" + elem(poset, u) +
                                     ": neighbourhood disagrees with the involution model";
                          });
            }
        }
        return rec.take();
    }

    // diagonal: iota(theta) = {(z, z^-1)} realizes the classical theory
    int m = ctx.ground();
    rec.check(static_cast<long long>(poset.size()) == factorial(m), [&] {
        return "count " + std::to_string(poset.size()) + " != m! for m=" + std::to_string(m);
    });

    ClassicalKLTable classical(m);
    PolyTable table(poset);
    std::vector<int> to_classical(static_cast<size_t>(poset.size()));
    for (int i = 0; i < poset.size(); ++i) {
        const auto& e = poset.element(i);
        rec.check(e.part(1) == e.part(0).inverse(), [&] {
            return "element " + elem(poset, i) + " is not of the form (z, z^-1)";
        });
        to_classical[static_cast<size_t>(i)] = classical.index_of(e.part(0));
    }

    for (int w : ws) {
        int cw = to_classical[static_cast<size_t>(w)];
        auto smooth_at = locus_via_p(table, w);
        for (int u = 0; u < poset.size(); ++u) {
            if (!poset.leq(u, w)) continue;
            int cu = to_classical[static_cast<size_t>(u)];
            rec.check(table.q_poly(u, w) == classical.r_poly(cu, cw), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) +
                       ": Q != classical R";
            });
            rec.check(table.p_poly(u, w) == classical.p_poly(cu, cw), [&] {
                return "u=" + elem(poset, u) + " w=" + elem(poset, w) +
                       ": P != classical P";
            });
            rec.check(std::binary_search(smooth_at.begin(), smooth_at.end(), u) ==
                          classical.rationally_smooth_at(cu, cw),
                      [&] {
                          return "u=" + elem(poset, u) + " w=" + elem(poset, w) +
                                 ": locus disagrees with the classical criterion";
                      });
        }
    }
    return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"edges",        "mobius",  "qsum",
                                                "equivalences", "epsilon", "oracle"};
    return names;
}

SuiteResult run_suite(const GroupContext& ctx, const std::string& name, CheckLevel level) {
    auto poset = TwistedPoset::enumerate(ctx);
    if (name == "edges") return edges_suite(ctx, poset, level);
    if (name == "mobius") return mobius_suite(poset, level);
    if (name == "qsum") return qsum_suite(poset, level);
    if (name == "equivalences") return equivalences_suite(ctx, poset, level);
    if (name == "epsilon") return epsilon_suite(ctx, poset, level);
    if (name == "oracle") return oracle_suite(ctx, poset, level);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(const GroupContext& ctx, CheckLevel level) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) {
        try {
            out.push_back(run_suite(ctx, name, level));
        } catch (const unsupported_model_error& e) {
            out.push_back({name, true, true, 0, 0, {}, e.what()});
        } catch (const capacity_error& e) {
            out.push_back({name, true, true, 0, 0, {}, e.what()});
        }
    }
    return out;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const SuiteResult& r) { return r.passed; });
}

std::string format_results(const std::vector<SuiteResult>& results) {
    std::ostringstream out;
    int failed_suites = 0;
    for (const auto& r : results) {
        if (r.skipped) {
            out << "suite " << r.name << ": SKIP (" << r.note << ")\n";
            continue;
        }
        if (r.passed) {
            out << "suite " << r.name << ": PASS (" << r.checks << " checks)\n";
            continue;
        }
        ++failed_suites;
        out << "suite " << r.name << ": FAIL (" << r.failed << " of " << r.checks
            << " checks)\n";
        for (const auto& f : r.failures) out << "  counterexample: " << f << "\n";
        if (r.failed > static_cast<long long>(r.failures.size()))
            out << "  ... first " << r.failures.size() << " shown\n";
    }
    if (failed_suites == 0)
        out << "all suites passed\n";
    else
        out << failed_suites << " suite(s) failed\n";
    return out.str();
}

}  // namespace twisted
