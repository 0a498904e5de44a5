#include "twisted/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "twisted/bruhat_graph.hpp"
#include "twisted/check_suites.hpp"
#include "twisted/errors.hpp"
#include "twisted/fpf.hpp"
#include "twisted/klv.hpp"
#include "twisted/smoothness.hpp"
#include "twisted/twisted_poset.hpp"

namespace twisted {

namespace {

using ordered_json = nlohmann::ordered_json;

struct selector_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int> parse_word(const std::string& text) {
    std::vector<int> word;
    for (size_t i = 0; i < text.size();) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t end = i;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
            word.push_back(std::stoi(text.substr(i, end - i)));
            i = end;
        } else if (c == 's' || c == 'S' || c == ',' || c == ' ' || c == '.') {
            ++i;
        } else {
            throw selector_error(std::string("unexpected character '") + c + "' in word");
        }
    }
    return word;
}

GroupElement word_element(const GroupContext& ctx, const std::vector<int>& word) {
    auto u = ctx.identity();
    for (int i : word) {
        if (i < 1 || i > ctx.generator_count())
            throw selector_error("generator index " + std::to_string(i) + " out of range (1.." +
                                 std::to_string(ctx.generator_count()) + ")");
        u = u.compose(ctx.generator(i));
    }
    return u;
}

// id | top | word:... | (a b)(c d)... | a|b | one-line permutation.
int resolve_selector(const GroupContext& ctx, const TwistedPoset& poset, const std::string& sel,
                     std::ostream& err) {
    if (sel.empty()) throw selector_error("empty selector");
    if (sel == "id") return poset.bottom();
    if (sel == "top") return poset.top();

    if (sel.rfind("word:", 0) == 0) {
        auto word = parse_word(sel.substr(5));
        auto forward = word_element(ctx, word);
        if (auto i = poset.index_of(forward)) return *i;
        auto reversed_word = word;
        std::reverse(reversed_word.begin(), reversed_word.end());
        auto reversed = word_element(ctx, reversed_word);
        if (auto i = poset.index_of(reversed)) {
            err << "note: reading the word right-to-left gives " << forward.to_string()
                << ", which is not a twisted identity; using the left-to-right reading "
                << reversed.to_string() << "\n";
            return *i;
        }
        throw selector_error("word gives " + forward.to_string() + " (reversed: " +
                             reversed.to_string() + "); neither is a twisted identity");
    }

    if (sel.front() == '(') {
        if (ctx.kind() != ModelKind::symmetric_flip)
            throw selector_error("cycle-form selectors belong to the flip model");
        auto x = FpfInvolution::parse_cycles(sel, ctx.ground());
        if (!x) throw selector_error("malformed fixed-point-free cycle form: " + sel);
        if (auto i = poset.index_of(to_iota(ctx, *x))) return *i;
        throw selector_error(sel + " does not name a twisted identity");
    }

    if (auto bar = sel.find('|'); bar != std::string::npos) {
        if (ctx.kind() != ModelKind::diagonal_product)
            throw selector_error("paired selectors belong to the diagonal model");
        auto a = Permutation::parse(sel.substr(0, bar));
        auto b = Permutation::parse(sel.substr(bar + 1));
        if (!a || !b || a->size() != ctx.ground() || b->size() != ctx.ground())
            throw selector_error("cannot read pair selector '" + sel + "'");
        if (auto i = poset.index_of(GroupElement(*a, *b))) return *i;
        throw selector_error(sel + " is not a twisted identity (needs the form z|z^-1)");
    }

    auto p = Permutation::parse(sel);
    if (!p || p->size() != ctx.ground())
        throw selector_error("cannot read selector '" + sel + "' for " + ctx.name());
    GroupElement u = ctx.kind() == ModelKind::symmetric_flip ? GroupElement(*p)
                                                             : GroupElement(*p, p->inverse());
    if (auto i = poset.index_of(u)) return *i;
    throw selector_error(u.to_string() + " is not a twisted identity");
}

int emit(const std::string& payload, const std::string& path, std::ostream& out,
         std::ostream& err) {
    if (path.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file " << path << "\n";
        return 2;
    }
    file << payload;
    return 0;
}

std::string enumerate_text(const TwistedPoset& poset) {
    std::ostringstream out;
    for (int i = 0; i < poset.size(); ++i) {
        out << poset.rank(i) << "\t" << poset.element(i).to_string() << "\t";
        const auto& covers = poset.lower_covers(i);
        if (covers.empty()) out << "-";
        for (size_t k = 0; k < covers.size(); ++k)
            out << (k ? "," : "") << poset.element(covers[k]).to_string();
        out << "\n";
    }
    return out.str();
}

std::string enumerate_json(const TwistedPoset& poset) {
    ordered_json records = ordered_json::array();
    for (int i = 0; i < poset.size(); ++i) {
        ordered_json rec;
        rec["element"] = poset.element(i).to_string();
        rec["rank"] = poset.rank(i);
        ordered_json covers = ordered_json::array();
        for (int c : poset.lower_covers(i)) covers.push_back(poset.element(c).to_string());
        rec["covers"] = std::move(covers);
        records.push_back(std::move(rec));
    }
    return records.dump(2) + "\n";
}

std::string graph_json(const GroupContext& ctx, const TwistedPoset& poset,
                       const BruhatGraph& graph) {
    ordered_json doc;
    doc["model"] = ctx.name();
    doc["w"] = poset.element(graph.w()).to_string();
    ordered_json vertices = ordered_json::array();
    for (int v : graph.vertices()) {
        ordered_json rec;
        rec["element"] = poset.element(v).to_string();
        rec["rank"] = poset.rank(v);
        rec["degree"] = graph.degree(v);
        vertices.push_back(std::move(rec));
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const auto& e : graph.edges()) {
        ordered_json rec;
        rec["u"] = poset.element(e.u).to_string();
        rec["v"] = poset.element(e.v).to_string();
        ordered_json refl = ordered_json::array();
        for (int t : e.reflections) refl.push_back(ctx.reflections()[static_cast<size_t>(t)].to_string());
        rec["reflections"] = std::move(refl);
        edges.push_back(std::move(rec));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

std::string locus_text(const TwistedPoset& poset, const LocusReport& report) {
    std::ostringstream out;
    out << "w " << poset.element(report.w).to_string() << " (rank " << poset.rank(report.w)
        << ")\n";
    out << "rank vector:";
    for (int n : report.rank_vector) out << " " << n;
    out << "\n";
    out << "globally smooth: " << (report.globally_smooth ? "yes" : "no")
        << " (rank-symmetric " << (report.rank_symmetric ? "yes" : "no") << ", regular "
        << (report.regular ? "yes" : "no") << ", all P trivial "
        << (report.all_p_one ? "yes" : "no") << ")\n";
    out << "smooth points (" << report.smooth_points.size() << "):";
    for (int u : report.smooth_points) out << " " << poset.element(u).to_string();
    out << "\n";
    out << "singular points (" << report.singular_points.size() << "):";
    for (int u : report.singular_points) out << " " << poset.element(u).to_string();
    out << "\n";
    return out.str();
}

ordered_json suites_json(const std::vector<SuiteResult>& results) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
        ordered_json rec;
        rec["name"] = r.name;
        rec["passed"] = r.passed;
        rec["skipped"] = r.skipped;
        rec["checks"] = r.checks;
        rec["failed"] = r.failed;
        rec["failures"] = r.failures;
        rec["note"] = r.note;
        arr.push_back(std::move(rec));
    }
    return arr;
}

// The smallest flip model with a singular orbit closure: the unique rank-4
// element of flip:6 whose graph has exactly two vertices of degree five.
int run_first_singular(const std::string& format, const std::string& output, std::ostream& out,
                       std::ostream& err) {
    auto ctx = GroupContext::symmetric_flip(6);
    auto poset = TwistedPoset::enumerate(ctx);

    std::vector<int> hits;
    for (int w = 0; w < poset.size(); ++w) {
        if (poset.rank(w) != 4) continue;
        auto graph = BruhatGraph::build(ctx, poset, w);
        int fives = 0;
        bool rest_four = true;
        for (int v : graph.vertices()) {
            if (graph.degree(v) == 5)
                ++fives;
            else if (graph.degree(v) != 4)
                rest_four = false;
        }
        if (fives == 2 && rest_four) hits.push_back(w);
    }
    if (hits.size() != 1) {
        err << "error: degree fingerprint matched " << hits.size()
            << " elements instead of exactly one\n";
        return 1;
    }

    int w = hits.front();
    auto graph = BruhatGraph::build(ctx, poset, w);
    PolyTable table(poset);
    auto report = full_report(poset, table, w);

    if (format == "json") return emit(locus_report_json(report, poset), output, out, err);

    std::ostringstream text;
    text << "model flip:6\n";
    text << "w " << poset.element(w).to_string() << " (rank " << poset.rank(w) << ", "
         << graph.vertices().size() << " vertices, " << graph.edges().size() << " edges)\n";
    text << "degree-5 vertices:";
    for (int v : graph.vertices())
        if (graph.degree(v) == 5) text << " " << poset.element(v).to_string();
    text << "\n";
    text << locus_text(poset, report);
    return emit(text.str(), output, out, err);
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Twisted identities under the Bruhat order: enumeration, Bruhat graphs, "
                 "KLV polynomials, and rational smoothness reports."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string model_spec;
    app.add_option("--model", model_spec, "group model, flip:<2n> or diagonal:<m>");

    std::string w_sel, u_sel, kind = "Q", format, output, suite = "all", level = "fast";

    auto* enumerate = app.add_subcommand("enumerate", "list the twisted identities with ranks and covers");
    enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--output", output, "write to a file instead of stdout");

    auto* graph = app.add_subcommand("graph", "Bruhat graph of the interval below w");
    graph->add_option("--w", w_sel, "interval top")->required();
    graph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("--output", output, "write to a file instead of stdout");

    auto* locus = app.add_subcommand("locus", "rational smoothness report for the closure of w");
    locus->add_option("--w", w_sel, "interval top")->required();
    locus->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    locus->add_option("--output", output, "write to a file instead of stdout");

    auto* poly = app.add_subcommand("poly", "Q, R or P polynomial of a pair u <= w");
    poly->add_option("--kind", kind)->check(CLI::IsMember({"Q", "R", "P"}));
    poly->add_option("--u", u_sel, "lower element")->required();
    poly->add_option("--w", w_sel, "upper element")->required();
    poly->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    poly->add_option("--output", output, "write to a file instead of stdout");

    auto* check = app.add_subcommand("check", "run verification suites against the model");
    check->add_option("--suite", suite)
        ->check(CLI::IsMember({"edges", "mobius", "qsum", "equivalences", "epsilon", "oracle",
                               "all"}));
    check->add_option("--check-level", level)->check(CLI::IsMember({"fast", "exhaustive"}));
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    check->add_option("--output", output, "write to a file instead of stdout");

    auto* first_singular = app.add_subcommand(
        "first-singular", "locate and report the smallest singular example (flip:6)");
    first_singular->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    first_singular->add_option("--output", output, "write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (first_singular->parsed())
        return run_first_singular(format.empty() ? "text" : format, output, out, err);

    if (model_spec.empty()) {
        err << "error: a --model is required (flip:<2n> or diagonal:<m>)\n";
        return 2;
    }
    auto ctx = GroupContext::from_name(model_spec);
    auto poset = TwistedPoset::enumerate(ctx);

    if (enumerate->parsed()) {
        if (format.empty()) format = "text";
        return emit(format == "json" ? enumerate_json(poset) : enumerate_text(poset), output,
                    out, err);
    }

    if (graph->parsed()) {
        if (format.empty()) format = "dot";
        int w = resolve_selector(ctx, poset, w_sel, err);
        auto bg = BruhatGraph::build(ctx, poset, w);
        return emit(format == "json" ? graph_json(ctx, poset, bg) : bg.to_dot(ctx, poset),
                    output, out, err);
    }

    if (locus->parsed()) {
        if (format.empty()) format = "json";
        int w = resolve_selector(ctx, poset, w_sel, err);
        PolyTable table(poset);
        auto report = full_report(poset, table, w);
        return emit(format == "json" ? locus_report_json(report, poset)
                                     : locus_text(poset, report),
                    output, out, err);
    }

    if (poly->parsed()) {
        if (format.empty()) format = "text";
        int u = resolve_selector(ctx, poset, u_sel, err);
        int w = resolve_selector(ctx, poset, w_sel, err);
        PolyTable table(poset);
        IntPolynomial value = kind == "Q"   ? table.q_poly(u, w)
                              : kind == "R" ? table.r_poly(u, w)
                                            : table.p_poly(u, w);
        if (format == "text") return emit(value.to_string() + "\n", output, out, err);
        ordered_json doc;
        doc["kind"] = kind;
        doc["u"] = poset.element(u).to_string();
        doc["w"] = poset.element(w).to_string();
        doc["text"] = value.to_string();
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= value.degree(); ++k) coeffs.push_back(value.coeff(k));
        doc["coefficients"] = std::move(coeffs);
        return emit(doc.dump(2) + "\n", output, out, err);
    }

    // check
    if (format.empty()) format = "text";
    auto check_level = level == "exhaustive" ? CheckLevel::exhaustive : CheckLevel::fast;
    std::vector<SuiteResult> results;
    if (suite == "all")
        results = run_all_suites(ctx, check_level);
    else
        results.push_back(run_suite(ctx, suite, check_level));
    int code = all_passed(results) ? 0 : 1;
    std::string payload = format == "json" ? suites_json(results).dump(2) + "\n"
                                           : format_results(results);
    int emit_code = emit(payload, output, out, err);
    return emit_code ? emit_code : code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const selector_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_model_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace twisted
