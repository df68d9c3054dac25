#include "asph/classifier.hpp"
#include "asph/coefficient_oracle.hpp"
#include "asph/lifted.hpp"
#include "asph/parser.hpp"
#include "asph/picture_io.hpp"
#include "asph/pictures.hpp"
#include "asph/star_graph.hpp"
#include "asph/table1.hpp"
#include "asph/weight_test.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace asph;
using nlohmann::json;

// Usage and input errors.
constexpr int kUsageError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct InstanceArgs {
    std::string file;
    long long cyclic = 0;
    int l = 0;
    int k = 0;
    long long g = 0;
    long long h = 0;

    void add(CLI::App* cmd)
    {
        cmd->add_option("file", file, "presentation file");
        auto* c = cmd->add_option("--cyclic", cyclic, "coefficient group Z_n with generator t");
        cmd->add_option("--l", l, "first x exponent")->needs(c);
        cmd->add_option("--k", k, "second x exponent")->needs(c);
        cmd->add_option("--g", g, "g = t^a")->needs(c);
        cmd->add_option("--h", h, "h = t^b")->needs(c);
    }

    bool shorthand() const { return cyclic > 0; }

    RelativePresentation presentation() const
    {
        if (shorthand()) return instance().presentation();
        if (file.empty()) throw InputError("give a presentation file or --cyclic n --l L --k K --g A --h B");
        return parse_presentation(read_file(file));
    }

    LengthFourInstance instance() const
    {
        if (shorthand()) {
            if (l == 0 || k == 0) throw InputError("--l and --k must be nonzero");
            return LengthFourInstance::cyclic(cyclic, g, h, l, k);
        }
        RelativePresentation p = presentation();
        CoefficientOracle oracle(p.coeff);
        try {
            return length_four_instance(p, &oracle);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
};

json verdict_json(const CaseVerdict& v)
{
    json j;
    j["dr"] = to_string(v.dr);
    j["aspherical"] = to_string(v.aspherical);
    j["tag"] = v.tag;
    j["citation"] = v.citation;
    j["conjectural"] = v.conjectural;
    if (v.claimed_order) j["claimed_order"] = *v.claimed_order;
    if (!v.blocking.empty()) j["blocking"] = v.blocking;
    j["notes"] = v.notes;
    return j;
}

int cmd_classify(const InstanceArgs& in, bool verify, bool as_json, long long cap, long long lift_cap, bool weights,
                 int bound, int denominator)
{
    LengthFourInstance inst = in.instance();
    ClassifyOptions opt;
    opt.cap = cap;
    opt.lift_cap = lift_cap;
    CaseVerdict v = classify(inst, opt);
    std::optional<VerificationReport> rep;
    if (verify) rep = verify_verdict(inst, v, cap);

    std::optional<SearchResult> search;
    if (weights && v.open()) {
        CoefficientOracle oracle(inst.G, cap);
        StarGraph sg = build_star_graph(inst.presentation(), &oracle);
        search = search_weight_function(sg, oracle, denominator, bound);
        if (search->found) {
            v.aspherical = TriState::Yes;
            v.dr = TriState::Yes;
            v.tag = "weight test";
            v.citation = "aspherical weight function";
            v.conjectural = false;
        }
    }

    const CoefficientOracle oracle(inst.G, cap);
    if (as_json) {
        json j = verdict_json(v);
        j["relator"] = inst.presentation().format(inst.presentation().relators[0]);
        j["flags"] = case_flags(canonical(inst), oracle).holding();
        if (rep) {
            j["verify"] = {{"status", to_string(rep->status)}, {"message", rep->message}};
            if (rep->order.is_finite()) j["verify"]["order"] = rep->order.value;
        }
        if (search) j["weight_search"] = {{"found", bool(search->found)}, {"nodes", search->nodes}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::string line = v.headline();
        if (rep && rep->order.is_finite()) line += "; |G(Q)|=" + std::to_string(rep->order.value);
        std::cout << line << "\n";
        std::cout << "  dr: " << to_string(v.dr) << "  aspherical: " << to_string(v.aspherical)
                  << (v.conjectural ? "  (conjectural)" : "") << "\n";
        std::vector<std::string> flags = case_flags(canonical(inst), oracle).holding();
        if (!flags.empty()) {
            std::cout << "  cases:";
            for (const std::string& f : flags) std::cout << " " << f;
            std::cout << "\n";
        }
        for (const std::string& n : v.notes) std::cout << "  note: " << n << "\n";
        if (rep) std::cout << "  verify: " << to_string(rep->status) << ": " << rep->message << "\n";
        if (search && !search->found)
            std::cout << "  weight search: nothing found after " << search->nodes << " nodes\n";
    }
    return rep && rep->fatal() ? 1 : 0;
}

int cmd_table1(bool extended, const std::string& only, long long cap)
{
    int checks = 0, failures = 0;
    for (const Table1Fixture& f : table1_fixtures()) {
        if (f.extended && !extended) continue;
        if (!only.empty() && f.column != only) continue;
        auto start = std::chrono::steady_clock::now();
        ClassifyOptions opt;
        opt.cap = cap;
        CaseVerdict v = classify(f.instance, opt);
        bool ok = f.open ? v.open() : is_no(v.aspherical) || (f.order && is_yes(v.aspherical));
        std::string computed = "-";
        if (f.order) {
            CoefficientOracle oracle(f.instance.G, cap);
            EnumerationOptions eo;
            eo.cap = cap;
            LiftedOrder lo = lifted_group_order(f.instance.presentation(), oracle, eo);
            computed = lo.order.to_string();
            ok = ok && lo.order.is_finite() && lo.order.value == *f.order;
            ++checks;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string expected = f.order ? std::to_string(*f.order) : f.open ? "?" : "infinite";
        std::cout << (ok ? "ok   " : "FAIL ") << f.id << "  expected " << expected << "  computed " << computed
                  << "  " << v.headline() << "  [" << std::fixed << std::setprecision(2) << secs << "s]\n";
        if (!ok) ++failures;
    }
    std::cout << checks << " order checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int cmd_order(const InstanceArgs& in, long long cap, bool coefficient)
{
    RelativePresentation p = in.presentation();
    CoefficientOracle oracle(p.coeff, cap);
    EnumerationOptions eo;
    eo.cap = cap;
    if (coefficient) {
        std::cout << group_order(as_presentation(p.coeff), eo).to_string() << "\n";
        return 0;
    }
    LiftedOrder lo = lifted_group_order(p, oracle, eo);
    std::cout << lo.order.to_string() << "\n";
    return 0;
}

int cmd_stargraph(const InstanceArgs& in, bool dot)
{
    RelativePresentation p = in.presentation();
    CoefficientOracle oracle(p.coeff);
    StarGraph sg = build_star_graph(p, &oracle);
    if (dot) {
        std::cout << to_dot(sg);
        return 0;
    }
    std::cout << sg.vertex_count() << " vertices, " << sg.pair_count() << " edges\n";
    for (int q = 0; q < sg.pair_count(); ++q) {
        const StarEdge& e = sg.edges[2 * q];
        std::cout << "  " << q << ": " << sg.vertex_names[e.source] << " -- " << sg.vertex_names[e.target]
                  << "  label " << format_word(e.label, p.coeff.generators) << "  relator " << e.relator
                  << " position " << e.position << "\n";
    }
    return 0;
}

int cmd_weighttest(const std::string& graph, const std::string& weights, bool full, bool as_json, int bound,
                   bool search, int denominator, long long cap)
{
    StarGraph sg = star_graph_from_dot(read_file(graph));
    CoefficientOracle oracle(sg.presentation.coeff, cap);
    sg = build_star_graph(sg.presentation, &oracle);
    WeightMode mode = full ? WeightMode::Full : WeightMode::Weak;
    WeightFunction theta;
    if (!weights.empty()) {
        theta = parse_weights(read_file(weights), sg.pair_count());
    } else if (search) {
        SearchResult r = search_weight_function(sg, oracle, denominator, bound, mode);
        if (!r.found) {
            std::cout << "no weight function found (" << r.nodes << " nodes" << (r.capped ? ", capped" : "")
                      << ")\n";
            return 0;
        }
        theta = *r.found;
    } else {
        throw InputError("give a weights file or --search");
    }
    WeightReport rep = check_weight_function(sg, theta, mode, oracle, bound);
    std::cout << (as_json ? report_json(sg, rep) : report_text(sg, rep));
    return 0;
}

int cmd_picture(const std::string& path, bool reduce, bool show_curvature, bool as_json, long long cap)
{
    PictureDocument doc = read_picture_json(read_file(path));
    CoefficientOracle oracle(doc.presentation.coeff, cap);
    Picture pic = doc.picture;
    PictureReport rep = validate_picture(pic, doc.presentation, oracle);

    json j;
    auto summary = [&](const PictureReport& r) {
        std::ostringstream s;
        s << "valid " << to_string(r.valid) << ", planar " << (r.planar ? "yes" : "no") << ", spherical "
          << (r.spherical ? "yes" : "no") << ", discs " << pic.discs.size() << ", arcs " << pic.arcs.size()
          << ", regions " << r.map.regions.size();
        return s.str();
    };
    if (!as_json) std::cout << summary(rep) << "\n";
    for (const std::string& pr : rep.problems)
        if (!as_json) std::cout << "  problem: " << pr << "\n";
    j["valid"] = to_string(rep.valid);
    j["planar"] = rep.planar;
    j["spherical"] = rep.spherical;
    j["problems"] = rep.problems;

    if (show_curvature && rep.planar) {
        CurvatureReport c = curvature(pic, standard_angles(pic));
        if (!as_json) std::cout << "curvature (standard angles): total " << to_string(c.total) << " pi\n";
        j["curvature"] = to_string(c.total);
    }
    if (reduce) {
        std::vector<json> trace;
        while (auto d = find_dipole(pic, oracle)) {
            std::ostringstream s;
            s << "dipole: disc " << d->first.disc << " corner " << d->first.corner << " / disc " << d->second.disc
              << " corner " << d->second.corner << " via arc " << d->arc;
            if (!as_json) std::cout << s.str() << "\n";
            trace.push_back(s.str());
            pic = cancel_dipole(pic, *d);
            PictureReport after = validate_picture(pic, doc.presentation, oracle);
            if (!as_json) std::cout << "  after cancellation: " << summary(after) << "\n";
            if (!is_yes(after.valid)) {
                if (!as_json) std::cout << "  cancellation produced an invalid picture\n";
                return 1;
            }
        }
        if (!as_json) std::cout << "reduced: no dipole found\n";
        j["trace"] = trace;
        j["reduced"] = true;
    } else if (auto d = find_dipole(pic, oracle)) {
        if (!as_json)
            std::cout << "dipole: disc " << d->first.disc << " corner " << d->first.corner << " / disc "
                      << d->second.disc << " corner " << d->second.corner << " via arc " << d->arc << "\n";
        j["dipole"] = {{"first", {d->first.disc, d->first.corner}}, {"second", {d->second.disc, d->second.corner}}};
    } else if (!as_json) {
        std::cout << "no dipole\n";
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return is_no(rep.valid) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Asphericity of length-four relative presentations"};
    // -h is taken by the --h shorthand
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    long long cap = default_coset_cap();
    app.add_option("--cap", cap, "coset enumeration cap (default from ASPH_COSET_CAP or 10^7)")
        ->check(CLI::PositiveNumber);

    InstanceArgs cls_in, ord_in, sg_in;
    bool verify = false, as_json = false, weights = false, extended = false, dot = false, full = false,
         search = false, reduce = false, show_curvature = false, coefficient = false;
    long long lift_cap = 0;
    int bound = 8, denominator = 3;
    std::string only, graph, weights_file, picture_file;

    auto* cls = app.add_subcommand("classify", "classify <G, x | x^l g x^k h>");
    cls_in.add(cls);
    cls->add_flag("--verify", verify, "cross-check the verdict by coset enumeration");
    cls->add_flag("--json", as_json, "JSON output");
    cls->add_option("--lift-cap", lift_cap, "enumerate G(Q) for open cases with finite G");
    cls->add_flag("--weight-test", weights, "search for an aspherical weight function when open");
    cls->add_option("--bound", bound, "cycle length bound for the weight test");
    cls->add_option("--denominator", denominator, "denominator bound for the weight search");

    auto* tab = app.add_subcommand("table1", "run the table battery");
    tab->add_flag("--extended", extended, "include the long-running order check");
    tab->add_option("--only", only, "restrict to one column (K5, K6+, K6-, L6)");

    auto* ord = app.add_subcommand("order", "order of G(P) by coset enumeration");
    ord_in.add(ord);
    ord->add_flag("--coefficient", coefficient, "order of the coefficient group instead");

    auto* sgc = app.add_subcommand("stargraph", "star graph of a presentation");
    sg_in.add(sgc);
    sgc->add_flag("--dot", dot, "DOT output");

    auto* wt = app.add_subcommand("weighttest", "check a weight function on a star graph");
    wt->add_option("graph", graph, "DOT file written by stargraph --dot")->required();
    wt->add_option("weights", weights_file, "lines 'pair-id p/q'");
    wt->add_flag("--full", full, "also require non-negative weight on every cyclically reduced cycle");
    wt->add_flag("--json", as_json, "JSON output");
    wt->add_flag("--search", search, "search for a weight function");
    wt->add_option("--bound", bound, "cycle length bound for infinite G");
    wt->add_option("--denominator", denominator, "denominator bound for --search");

    auto* pc = app.add_subcommand("picture", "validate and reduce a picture");
    pc->add_option("file", picture_file, "picture JSON")->required();
    pc->add_flag("--reduce", reduce, "cancel dipoles until none remain");
    pc->add_flag("--curvature", show_curvature, "total curvature under standard angles");
    pc->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*cls) return cmd_classify(cls_in, verify, as_json, cap, lift_cap, weights, bound, denominator);
        if (*tab) return cmd_table1(extended, only, cap);
        if (*ord) return cmd_order(ord_in, cap, coefficient);
        if (*sgc) return cmd_stargraph(sg_in, dot);
        if (*wt) return cmd_weighttest(graph, weights_file, full, as_json, bound, search, denominator, cap);
        if (*pc) return cmd_picture(picture_file, reduce, show_curvature, as_json, cap);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsageError;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return 0;
}
