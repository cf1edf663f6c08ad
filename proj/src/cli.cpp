#include "fdes/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fdes/errors.hpp"
#include "fdes/model_io.hpp"
#include "fdes/render.hpp"

namespace fdes {

namespace {

constexpr std::size_t kDefaultHorizon = 8;

struct Options {
    std::string format = "text";
    std::string out_path;
    long depth = -1;
    long n = -1;
    std::string attrs_path;
    std::string supervisor_path;
    std::string class_string;
    bool first_failure = false;
    bool verbose = false;
    std::vector<std::string> files;
    std::string eval_string;
};

struct Spec {
    std::optional<ModelDocument> model;
    std::optional<FuzzyLanguage> language;
};

class Runner {
public:
    Runner(const Options& opt, std::ostream& out, std::ostream& err) : opt_(opt), out_(out), err_(err) {}

    int reach();
    int tree();
    int pairs();
    int check(bool bounded);
    int synthesize();
    int eval();
    int nonblock();
    int lattice(bool supremal);
    int compose();

private:
    ReachOptions reach_options() const
    {
        ReachOptions r;
        if (opt_.depth >= 0)
            r.max_depth = static_cast<std::size_t>(opt_.depth);
        return r;
    }

    std::size_t horizon() const { return opt_.depth >= 0 ? static_cast<std::size_t>(opt_.depth) : kDefaultHorizon; }

    void require_format(std::initializer_list<const char*> allowed) const
    {
        for (const char* f : allowed)
            if (opt_.format == f)
                return;
        throw CLI::ValidationError("--format", "'" + opt_.format + "' is not available for this command");
    }

    void emit(const std::string& text)
    {
        if (opt_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream f(opt_.out_path);
        if (!f)
            throw Error("cannot write '" + opt_.out_path + "'");
        f << text;
    }

    void emit(const Json& j) { emit(j.dump(2) + "\n"); }

    Spec load_spec(const std::string& path) const
    {
        const Json j = load_json(path);
        Spec spec;
        try {
            if (classify(j) == DocumentKind::Language)
                spec.language = language_from_json(j);
            else
                spec.model = model_from_json(j);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), path);
        }
        return spec;
    }

    FuzzyLanguage load_language_or_model(const std::string& path, std::optional<EventAttributes>* attrs) const
    {
        Spec spec = load_spec(path);
        if (spec.language)
            return *spec.language;
        if (attrs && !*attrs)
            *attrs = spec.model->attributes;
        return generated_language(spec.model->automaton, horizon());
    }

    EventAttributes attributes(std::initializer_list<const std::optional<EventAttributes>*> inline_sources) const
    {
        if (!opt_.attrs_path.empty()) {
            const Json j = load_json(opt_.attrs_path);
            try {
                return attributes_from_json(j);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), opt_.attrs_path);
            }
        }
        for (const auto* src : inline_sources)
            if (src && *src)
                return **src;
        throw CLI::ValidationError("--attrs", "no uncontrollability degrees given (use --attrs or an inline "
                                               "\"uncontrollability\" field)");
    }

    const Options& opt_;
    std::ostream& out_;
    std::ostream& err_;
};

int Runner::reach()
{
    require_format({"text", "json", "dot"});
    const auto doc = load_model(opt_.files.at(0));
    const auto graph = enumerate_states(doc.automaton, reach_options());
    if (opt_.class_string.empty()) {
        if (opt_.format == "json")
            emit(graph_to_json(graph));
        else if (opt_.format == "dot")
            emit(graph_to_dot(graph));
        else
            emit(render_states(graph));
        return kExitPass;
    }

    const EventString s = split_string(opt_.class_string);
    const auto cls = class_automaton(graph, doc.automaton.run(s));
    if (opt_.format == "json") {
        Json j = graph_to_json(graph);
        j["accepting"] = cls.accepting;
        emit(j);
    } else if (opt_.format == "dot") {
        std::string dot = graph_to_dot(graph);
        const std::string node = "  n" + std::to_string(cls.accepting) + " [label=";
        const auto pos = dot.find(node);
        const auto end = dot.find("];", pos);
        dot.insert(end, ", peripheries=2");
        emit(dot);
    } else {
        std::vector<std::string> header{"#", "q0⊙s"};
        for (const auto& e : graph.events)
            header.push_back("→ " + e);
        TextTable t(header);
        for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
            std::vector<std::string> row{std::to_string(i) + (i == cls.accepting ? " *" : ""),
                                         format_label(graph.nodes[i])};
            for (std::size_t e = 0; e < graph.events.size(); ++e)
                row.push_back(std::to_string(graph.edges[i][e]));
            t.add(std::move(row));
        }
        emit("class of " + format_label(graph.nodes[cls.accepting]) + ": strings driving node 0 to node "
             + std::to_string(cls.accepting) + " (marked *)\n" + t.str());
    }
    return kExitPass;
}

int Runner::tree()
{
    require_format({"text", "json", "dot"});
    const auto g = load_model(opt_.files.at(0));
    ComputingTreeNode root;
    if (opt_.files.size() > 1) {
        const auto h = load_model(opt_.files.at(1));
        root = build_pair_tree(g.automaton, h.automaton, reach_options());
    } else {
        root = build_computing_tree(g.automaton, reach_options());
    }
    if (opt_.format == "json")
        emit(tree_to_json(root));
    else if (opt_.format == "dot")
        emit(tree_to_dot(root));
    else
        emit(render_tree(root));
    return kExitPass;
}

int Runner::pairs()
{
    require_format({"text", "json", "dot"});
    const auto g = load_model(opt_.files.at(0));
    const auto h = load_model(opt_.files.at(1));
    const auto graph = enumerate_pairs(g.automaton, h.automaton, reach_options());
    if (opt_.format == "json")
        emit(graph_to_json(graph));
    else if (opt_.format == "dot")
        emit(graph_to_dot(graph));
    else
        emit(render_states(graph));
    return kExitPass;
}

int Runner::check(bool bounded)
{
    require_format({"text", "json"});
    const auto g = load_model(opt_.files.at(0));
    const Spec spec = load_spec(opt_.files.at(1));
    const std::optional<EventAttributes>* spec_attrs = spec.model ? &spec.model->attributes : nullptr;
    const EventAttributes attrs = attributes({&g.attributes, spec_attrs});

    CheckOptions options;
    options.first_failure = opt_.first_failure;
    options.reach = reach_options();
    if (opt_.verbose)
        options.progress = [this](std::size_t rows) { err_ << "rows checked: " << rows << '\n'; };

    ControllabilityReport report;
    if (bounded) {
        long n = opt_.n >= 0 ? opt_.n : opt_.depth;
        if (n < 0)
            throw CLI::ValidationError("--n", "check-n needs --n N (or --depth N)");
        if (spec.model)
            report = check_n_controllability(g.automaton, spec.model->automaton, attrs, static_cast<std::size_t>(n),
                                             options);
        else
            report = check_n_controllability(g.automaton, *spec.language, attrs, static_cast<std::size_t>(n), options);
    } else if (spec.model) {
        report = check_controllability(g.automaton, spec.model->automaton, attrs, options);
    } else {
        report = check_controllability(g.automaton, *spec.language, attrs, options);
    }
    if (opt_.format == "json")
        emit(report_to_json(report));
    else
        emit(render_report(report));
    return report.overall ? kExitPass : kExitFail;
}

int Runner::synthesize()
{
    require_format({"text", "json"});
    const auto g = load_model(opt_.files.at(0));
    const Spec spec = load_spec(opt_.files.at(1));
    const std::optional<EventAttributes>* spec_attrs = spec.model ? &spec.model->attributes : nullptr;
    const EventAttributes attrs = attributes({&g.attributes, spec_attrs});
    CheckOptions options;
    options.reach = reach_options();
    const Supervisor sup = spec.model ? Supervisor::synthesize(g.automaton, spec.model->automaton, attrs, options)
                                      : Supervisor::synthesize(g.automaton, *spec.language, attrs, options);
    if (opt_.format == "json")
        emit(supervisor_to_json(sup));
    else
        emit(render_supervisor(sup));
    if (sup.warning())
        err_ << "warning: the controllability condition fails for this specification\n";
    return kExitPass;
}

int Runner::eval()
{
    require_format({"text", "json"});
    const auto g = load_model(opt_.files.at(0));
    const Json j = load_json(opt_.files.at(1));
    std::optional<Supervisor> sup;
    if (classify(j) == DocumentKind::Supervisor) {
        sup = supervisor_from_json(j);
    } else {
        const Spec spec = load_spec(opt_.files.at(1));
        const std::optional<EventAttributes>* spec_attrs = spec.model ? &spec.model->attributes : nullptr;
        const EventAttributes attrs = attributes({&g.attributes, spec_attrs});
        CheckOptions options;
        options.reach = reach_options();
        sup = spec.model ? Supervisor::synthesize(g.automaton, spec.model->automaton, attrs, options)
                         : Supervisor::synthesize(g.automaton, *spec.language, attrs, options);
    }
    const EventString s = split_string(opt_.eval_string);
    const Degree gen = controlled_generated_degree(*sup, g.automaton, s);
    const Degree mark = controlled_marked_degree(*sup, g.automaton, s);
    if (opt_.format == "json") {
        emit(Json{{"schema_version", kSchemaVersion},
                  {"string", join_string(s)},
                  {"generated", gen.to_string()},
                  {"marked", mark.to_string()}});
    } else {
        emit("L_S/G(" + display_string(s) + ") = " + gen.to_string() + "\nL_S/G,m(" + display_string(s)
             + ") = " + mark.to_string() + "\n");
    }
    return kExitPass;
}

int Runner::nonblock()
{
    require_format({"text", "json"});
    const auto g = load_model(opt_.files.at(0));
    const Spec spec = load_spec(opt_.files.at(1));
    if (!spec.language)
        throw CLI::ValidationError("K", "nonblock needs K as a language file");
    const EventAttributes attrs = attributes({&g.attributes});
    const Supervisor sup = opt_.supervisor_path.empty()
                               ? Supervisor::synthesize(g.automaton, *spec.language, attrs)
                               : supervisor_from_json(load_json(opt_.supervisor_path));
    const auto report = check_nonblocking(sup, g.automaton, *spec.language, attrs, horizon());
    if (opt_.format == "json")
        emit(nonblocking_to_json(report));
    else
        emit(render_nonblocking(report));
    return report.direct == BlockingVerdict::Nonblocking ? kExitPass : kExitFail;
}

int Runner::lattice(bool supremal)
{
    require_format({"text", "json"});
    std::optional<EventAttributes> inline_attrs;
    const FuzzyLanguage k = load_language_or_model(opt_.files.at(0), nullptr);
    const FuzzyLanguage m = load_language_or_model(opt_.files.at(1), &inline_attrs);
    const EventAttributes attrs = attributes({&inline_attrs});
    const FuzzyLanguage result = supremal ? supremal_controllable_sublanguage(k, m, attrs)
                                          : infimal_prefix_closed_superlanguage(k, m, attrs);
    if (opt_.format == "json")
        emit(language_to_json(result));
    else
        emit(render_language(result));
    return kExitPass;
}

int Runner::compose()
{
    require_format({"text", "json"});
    const auto a = load_model(opt_.files.at(0));
    const auto b = load_model(opt_.files.at(1));
    emit(model_to_json(parallel_compose(a.automaton, b.automaton)));
    return kExitPass;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Verification and synthesis for supervisory control of fuzzy discrete-event systems", "fdes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto common = [&](CLI::App* sub, bool verification) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
        sub->add_option("--out", opt.out_path, "Write output to a file");
        sub->add_option("--depth", opt.depth, "Depth cap (max-product enumeration) or horizon")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("-v,--verbose", opt.verbose, "Progress messages on stderr");
        if (verification)
            sub->add_option("--attrs", opt.attrs_path, "Uncontrollability degrees (JSON)");
    };

    auto* reach = app.add_subcommand("reach", "List the distinct reachable fuzzy states");
    reach->add_option("model", opt.files, "Model file")->required()->expected(1);
    reach->add_option("--class", opt.class_string, "Show the class automaton of the state reached by this string");
    common(reach, false);

    auto* tree = app.add_subcommand("tree", "Build the computing tree (of a plant, or a plant/spec pair)");
    tree->add_option("models", opt.files, "Model file(s)")->required()->expected(1, 2);
    common(tree, false);

    auto* pairs = app.add_subcommand("pairs", "List the distinct reachable (plant, spec) state pairs");
    pairs->add_option("models", opt.files, "Plant and spec model files")->required()->expected(2);
    common(pairs, false);

    auto* check = app.add_subcommand("check", "Check the fuzzy controllability condition");
    check->add_option("files", opt.files, "Plant model and spec (model or language)")->required()->expected(2);
    check->add_flag("--first-failure", opt.first_failure, "Stop after the representative with the first F row");
    common(check, true);

    auto* check_n = app.add_subcommand("check-n", "Check the condition on all strings up to length n");
    check_n->add_option("files", opt.files, "Plant model and spec (model or language)")->required()->expected(2);
    check_n->add_option("--n", opt.n, "String length bound")->check(CLI::NonNegativeNumber);
    check_n->add_flag("--first-failure", opt.first_failure, "Stop after the representative with the first F row");
    common(check_n, true);

    auto* synth = app.add_subcommand("synthesize", "Synthesize the supervisor");
    synth->add_option("files", opt.files, "Plant model and spec (model or language)")->required()->expected(2);
    common(synth, true);

    auto* eval = app.add_subcommand("eval", "Evaluate the controlled languages on one string");
    std::string eval_plant;
    std::string eval_supervisor;
    eval->add_option("plant", eval_plant, "Plant model")->required();
    eval->add_option("supervisor", eval_supervisor, "Explicit supervisor, or a spec to synthesize from")->required();
    eval->add_option("string", opt.eval_string, "Space-separated events; empty or ε for the empty string")
        ->required();
    common(eval, true);

    auto* nonblock = app.add_subcommand("nonblock", "Verify the nonblocking conditions");
    nonblock->add_option("files", opt.files, "Plant model and K (language)")->required()->expected(2);
    nonblock->add_option("--supervisor", opt.supervisor_path, "Explicit supervisor (default: synthesized)");
    common(nonblock, true);

    auto* suplang = app.add_subcommand("suplang", "Supremal controllable sublanguage of K w.r.t. M");
    suplang->add_option("files", opt.files, "K and M (language or model)")->required()->expected(2);
    common(suplang, true);

    auto* inflang = app.add_subcommand("inflang", "Infimal prefix-closed controllable superlanguage of K in M");
    inflang->add_option("files", opt.files, "K and M (language or model)")->required()->expected(2);
    common(inflang, true);

    auto* compose = app.add_subcommand("compose", "Parallel composition of two models");
    compose->add_option("models", opt.files, "Two model files")->required()->expected(2);
    common(compose, false);

    std::vector<std::string> argv_storage{"fdes"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "fdes: " << e.what() << '\n';
        return kExitUsage;
    }

    Runner runner(opt, out, err);
    try {
        if (reach->parsed())
            return runner.reach();
        if (tree->parsed())
            return runner.tree();
        if (pairs->parsed())
            return runner.pairs();
        if (check->parsed())
            return runner.check(false);
        if (check_n->parsed())
            return runner.check(true);
        if (synth->parsed())
            return runner.synthesize();
        if (eval->parsed()) {
            opt.files = {eval_plant, eval_supervisor};
            return runner.eval();
        }
        if (nonblock->parsed())
            return runner.nonblock();
        if (suplang->parsed())
            return runner.lattice(true);
        if (inflang->parsed())
            return runner.lattice(false);
        if (compose->parsed())
            return runner.compose();
    } catch (const CLI::ParseError& e) {
        err << "fdes: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "fdes: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const RangeError& e) {
        err << "fdes: range error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ShapeError& e) {
        err << "fdes: shape error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DepthExceeded& e) {
        err << "fdes: " << e.what() << '\n';
        for (const auto& label : e.frontier())
            err << "  frontier: " << format_label(label) << '\n';
        return kExitError;
    } catch (const Error& e) {
        err << "fdes: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "fdes: internal error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitUsage;
}

} // namespace fdes
