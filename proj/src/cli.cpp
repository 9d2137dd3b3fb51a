#include "coherence/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "coherence/dyerlashof.hpp"
#include "coherence/kochman.hpp"
#include "coherence/lie.hpp"
#include "coherence/stagescan.hpp"
#include "coherence/trees.hpp"

namespace coherence::cli {

namespace {

using ojson = nlohmann::ordered_json;
using stagescan::SpectrumPresentation;

struct Options {
    std::string spectrum;
    std::string input;
    long long prime = 0;
    unsigned index = 1;
    unsigned n = 0;
    long long max_degree = -1;
    long long stage = 0;
    long long class_degree = -1;
    std::string format = "text";
    bool exploratory = false;
};

// Command-line misuse that the parser cannot catch itself; maps to exit 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

Int parse_prime(long long p) {
    if (!degrees::is_prime(Int(p))) throw SchemaError("--prime must be prime, got " + std::to_string(p));
    return Int(p);
}

SpectrumPresentation make_presentation(const Options& opt) {
    if (!opt.input.empty()) return stagescan::spectrum_from_json_file(opt.input);
    if (opt.spectrum.empty()) throw UsageError("need --spectrum or --input");
    Int p = parse_prime(opt.prime);
    if (opt.spectrum == "bp") return stagescan::presets::bp(p);
    if (opt.spectrum == "e") return stagescan::presets::e(opt.index, p);
    if (opt.spectrum == "e-localized") return stagescan::presets::e_localized(opt.index, p);
    if (opt.spectrum == "kn") return stagescan::presets::kn(opt.index, p);
    if (opt.spectrum == "pn") return stagescan::presets::pn(opt.index, p);
    if (opt.spectrum == "thh-bp")
        throw WrongClass("the thh-bp preset supports only the dl subcommand: its stage is known "
                         "but no refined window analysis is available");
    throw SchemaError("unknown spectrum '" + opt.spectrum +
                      "' (use bp, e, e-localized, kn, pn, thh-bp)");
}

long long small(const Int& v, const char* what) { return to_int64(v, what); }

ojson witness_json(const stagescan::Witness& w) {
    ojson j;
    j["window_degree"] = small(w.window_degree, "window degree");
    j["raising_degree"] = small(w.raising_degree, "raising degree");
    ojson rep = ojson::array();
    for (const auto& t : w.monoid_representation) {
        ojson term;
        term["generator"] = small(t.generator, "generator");
        term["coefficient"] = small(t.coefficient, "coefficient");
        if (t.invertible) term["invertible"] = true;
        rep.push_back(term);
    }
    j["monoid_representation"] = rep;
    if (w.kochman_generator) j["kochman_generator"] = *w.kochman_generator;
    j["equation"] = w.equation;
    return j;
}

int cmd_report(const Options& opt, std::ostream& out) {
    SpectrumPresentation spec = make_presentation(opt);
    auto r = stagescan::report(spec, opt.exploratory);
    if (opt.format == "json") {
        ojson j;
        j["spectrum"] = r.name;
        j["prime"] = small(r.prime, "prime");
        j["coop_class"] = stagescan::coop_class_name(spec.coop_class);
        j["degree_count_bound"] = small(r.degree_count_bound, "degree count bound");
        if (r.refined_bound) j["refined_bound"] = small(*r.refined_bound, "refined bound");
        j["uniqueness_bound"] = small(r.uniqueness_bound, "uniqueness bound");
        j["witness"] = witness_json(r.witness);
        j["notes"] = r.notes;
        if (opt.exploratory) {
            ojson ex = ojson::array();
            for (const auto& c : r.exploratory) {
                ojson e;
                e["n"] = small(c.n, "candidate stage");
                e["kochman_generator"] = c.kochman_generator;
                e["shift"] = small(c.shift, "shift");
                ex.push_back(e);
            }
            j["exploratory_candidates"] = ex;
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "coherence report: " << r.name << " at p = " << r.prime.str() << "\n";
    out << "  cooperations: " << spec.coop_degrees.text() << "\n";
    out << "  coop class: " << stagescan::coop_class_name(spec.coop_class) << "\n";
    out << "  degree count: at least a " << r.degree_count_bound.str() << "-stage structure\n";
    if (r.refined_bound)
        out << "  refined bound: at least a " << r.refined_bound->str() << "-stage structure\n";
    out << "  uniqueness: unique up to the " << r.uniqueness_bound.str() << "-stage\n";
    out << "  witness: " << r.witness.equation << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
    for (const auto& c : r.exploratory)
        out << "  exploratory candidate: n = " << c.n.str() << " via " << c.kochman_generator
            << " shifted by " << c.shift.str() << "\n";
    return 0;
}

int cmd_kochman(const Options& opt, std::ostream& out) {
    Int p = parse_prime(opt.prime);
    Int d_max = opt.max_degree >= 0 ? Int(opt.max_degree) : Int(2 * opt.prime * opt.prime + 2 * opt.prime);
    auto table = kochman::enumerate_by_degree(p, d_max);
    Int min_odd = kochman::min_odd_degree(p);
    if (opt.format == "json") {
        ojson j;
        j["prime"] = small(p, "prime");
        j["max_degree"] = small(d_max, "max degree");
        j["min_odd_degree"] = small(min_odd, "min odd degree");
        ojson by_degree = ojson::object();
        for (const auto& [d, gens] : table) {
            ojson list = ojson::array();
            for (const auto& g : gens) list.push_back(g.text());
            by_degree[d.str()] = list;
        }
        j["by_degree"] = by_degree;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "torsion basis of the integral dual through degree " << d_max.str() << " at p = "
        << p.str() << "\n";
    for (const auto& [d, gens] : table) {
        out << "  degree " << d.str() << ":";
        for (const auto& g : gens) out << " " << g.text();
        out << "\n";
    }
    out << "  least odd generator degree: " << min_odd.str() << "\n";
    return 0;
}

int cmd_trees(const Options& opt, std::ostream& out) {
    auto shapes = lietree::enumerate_tree_shapes(opt.n);
    if (opt.format == "json") {
        ojson j;
        j["n"] = opt.n;
        ojson by_edges = ojson::object();
        for (const auto& [k, list] : shapes) {
            ojson arr = ojson::array();
            for (const auto& s : list) arr.push_back(s.text());
            by_edges[std::to_string(k)] = arr;
        }
        j["by_internal_edges"] = by_edges;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "tree shapes on " << opt.n + 1 << " leaves (n = " << opt.n << ")\n";
    for (const auto& [k, list] : shapes) {
        out << "  " << k << " internal edge" << (k == 1 ? "" : "s") << ": " << list.size()
            << " shape" << (list.size() == 1 ? "" : "s") << "\n";
        for (const auto& s : list) out << "    " << s.text() << "\n";
    }
    return 0;
}

int cmd_lie(const Options& opt, std::ostream& out) {
    auto basis = lietree::lie_basis(opt.n);
    if (opt.format == "json") {
        ojson j;
        j["n"] = opt.n;
        j["rank"] = basis.size();
        ojson arr = ojson::array();
        for (const auto& m : basis) arr.push_back(m.text());
        j["basis"] = arr;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "Lie(" << opt.n << ") left-normed basis, rank " << basis.size() << "\n";
    for (const auto& m : basis) out << "  " << m.text() << "\n";
    return 0;
}

int cmd_dl(const Options& opt, std::ostream& out) {
    Int p = parse_prime(opt.prime);
    Int stage;
    std::string source;
    if (opt.stage > 0) {
        stage = Int(opt.stage);
        source = "explicit";
    } else if (!opt.spectrum.empty()) {
        stage = stagescan::presets::guaranteed_stage(opt.spectrum, opt.index, p);
        source = opt.spectrum + " preset";
    } else {
        throw UsageError("dl needs --stage or --spectrum to fix the available n-stage");
    }
    Int max_lower = dl::max_lower_index(p, stage);

    std::optional<Int> class_degree;
    if (opt.class_degree >= 0) class_degree = Int(opt.class_degree);
    std::optional<dl::UpperOpsWindow> window;
    if (class_degree) window = dl::available_upper_ops(p, stage, *class_degree);

    if (opt.format == "json") {
        ojson j;
        j["prime"] = small(p, "prime");
        j["n_stage"] = small(stage, "stage");
        j["stage_source"] = source;
        j["max_lower_index"] = small(max_lower, "max lower index");
        // The window constraint is independent of the class degree; report it
        // for |x| = 0 when none was given.
        auto w = window ? *window : dl::available_upper_ops(p, stage, 0);
        j["constraint"] = w.constraint;
        if (class_degree) {
            j["class_degree"] = small(*class_degree, "class degree");
            if (w.max_upper_index) {
                j["max_upper_index"] = small(*w.max_upper_index, "max upper index");
                j["target_degree"] = small(dl::target_degree(p, *w.max_upper_index, *class_degree),
                                           "target degree");
            } else {
                j["max_upper_index"] = nullptr;
            }
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "operations provided by a " << stage.str() << "-stage structure at p = " << p.str()
        << " (" << source << ")\n";
    out << "  lower-indexed operations available for index <= " << max_lower.str() << "\n";
    auto w = window ? *window : dl::available_upper_ops(p, stage, 0);
    out << "  upper-index window: " << w.constraint << "\n";
    if (class_degree) {
        out << "  class degree |x| = " << class_degree->str() << ":";
        if (w.max_upper_index) {
            Int i = *w.max_upper_index;
            out << " highest operation Q^" << i.str() << ", target degree "
                << dl::target_degree(p, i, *class_degree).str() << "\n";
        } else {
            out << " no nonzero operation in the window\n";
        }
    }
    return 0;
}

int cmd_degrees(const Options& opt, std::ostream& out) {
    SpectrumPresentation spec = make_presentation(opt);
    const auto& set = spec.coop_degrees;
    Int bound = opt.max_degree >= 0 ? Int(opt.max_degree) : Int(4 * spec.prime * spec.prime);
    Int min_pos = set.min_positive();
    auto members = set.enumerate_up_to(bound);
    if (opt.format == "json") {
        ojson j;
        j["spectrum"] = spec.name;
        j["prime"] = small(spec.prime, "prime");
        j["generators"] = set.text();
        j["min_positive"] = small(min_pos, "min positive");
        j["max_degree"] = small(bound, "max degree");
        ojson arr = ojson::array();
        for (const Int& d : members) arr.push_back(small(d, "member"));
        j["members"] = arr;
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "degree support of " << spec.name << " cooperations at p = " << spec.prime.str() << "\n";
    out << "  generators: " << set.text() << "\n";
    out << "  least positive degree: " << min_pos.str() << "\n";
    out << "  members up to " << bound.str() << ":";
    for (const Int& d : members) out << " " << d.str();
    out << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"degree-counting coherence bounds for structured ring spectra"};
    app.require_subcommand(1);
    Options opt;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    const std::vector<std::string> preset_names{"bp", "e", "e-localized", "kn", "pn", "thh-bp"};

    auto* report = app.add_subcommand("report", "coherence bounds for a spectrum");
    auto* r_spectrum = report->add_option("--spectrum", opt.spectrum, "preset spectrum")
                           ->check(CLI::IsMember(preset_names));
    auto* r_prime = report->add_option("--prime", opt.prime, "the prime p");
    report->add_option("--index", opt.index, "family index for e/e-localized/kn/pn");
    auto* r_input = report->add_option("--input", opt.input, "spectrum JSON file");
    report->add_flag("--exploratory", opt.exploratory, "surface shifted candidate windows");
    add_format(report);
    r_spectrum->excludes(r_input);
    r_spectrum->needs(r_prime);

    auto* koch = app.add_subcommand("kochman", "torsion basis by degree");
    koch->add_option("--prime", opt.prime, "the prime p")->required();
    koch->add_option("--max-degree", opt.max_degree, "largest degree listed");
    add_format(koch);

    auto* trees = app.add_subcommand("trees", "tree shapes by internal edge count");
    trees->add_option("--n", opt.n, "number of inputs (leaves 0..n)")->required();
    add_format(trees);

    auto* lie = app.add_subcommand("lie", "left-normed Lie basis");
    lie->add_option("--n", opt.n, "arity")->required();
    add_format(lie);

    auto* dl_cmd = app.add_subcommand("dl", "operation availability from an n-stage");
    dl_cmd->add_option("--prime", opt.prime, "the prime p")->required();
    dl_cmd->add_option("--stage", opt.stage, "available n-stage");
    dl_cmd->add_option("--spectrum", opt.spectrum, "preset supplying the stage")
        ->check(CLI::IsMember(preset_names));
    dl_cmd->add_option("--index", opt.index, "preset family index");
    dl_cmd->add_option("--class-degree", opt.class_degree, "degree |x| of the class");
    add_format(dl_cmd);

    auto* deg = app.add_subcommand("degrees", "degree support of a cooperation algebra");
    auto* d_spectrum = deg->add_option("--spectrum", opt.spectrum, "preset spectrum")
                           ->check(CLI::IsMember(preset_names));
    auto* d_prime = deg->add_option("--prime", opt.prime, "the prime p");
    deg->add_option("--index", opt.index, "family index");
    auto* d_input = deg->add_option("--input", opt.input, "spectrum JSON file");
    deg->add_option("--max-degree", opt.max_degree, "largest degree listed");
    add_format(deg);
    d_spectrum->excludes(d_input);
    d_spectrum->needs(d_prime);

    std::vector<const char*> argv;
    argv.push_back("coherence");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (report->parsed()) return cmd_report(opt, out);
        if (koch->parsed()) return cmd_kochman(opt, out);
        if (trees->parsed()) return cmd_trees(opt, out);
        if (lie->parsed()) return cmd_lie(opt, out);
        if (dl_cmd->parsed()) return cmd_dl(opt, out);
        if (deg->parsed()) return cmd_degrees(opt, out);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace coherence::cli
