#include "mvp/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mvp/bench.hpp"
#include "mvp/csv.hpp"
#include "mvp/discovery.hpp"
#include "mvp/generator.hpp"
#include "mvp/model_io.hpp"
#include "mvp/render.hpp"

namespace mvp::cli {

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

struct Options {
    std::string input, model, output;
    std::vector<std::string> classes;
    std::vector<std::string> events;
    std::string kind = "dfg";
    std::string graph = "mvp";
    std::string decoration = "frequency";
    double threshold = 0.0;
    bool show_isolated = false;
    int palette_seed = 0;
    bool transitive_closure = false;
    GeneratorParams gen;
    std::string sweep = "events";
    std::vector<std::uint64_t> points;
};

SweepKind parse_sweep(const std::string& name) {
    if (name == "events") return SweepKind::events;
    if (name == "activities") return SweepKind::activities;
    if (name == "classes") return SweepKind::classes;
    if (name == "objects") return SweepKind::objects;
    throw ValidationError("unknown sweep '" + name + "'");
}

void cmd_discover(const Options& opt) {
    save_model(discover(load_csv(opt.input)), opt.output);
}

void cmd_project(const Options& opt) {
    const MvpModel model = load_model(opt.model);
    const Viewpoint view(opt.classes);
    if (opt.kind == "dfg") {
        write_text(opt.output, dfg_to_json(project_dfg(model, view)));
    } else if (opt.kind == "log") {
        export_classical_csv(project_log(model, view, opt.transitive_closure), opt.output);
    } else {
        throw ValidationError("unknown projection kind '" + opt.kind + "'");
    }
}

void cmd_generate(const Options& opt) {
    export_csv(generate(opt.gen), opt.output);
}

void cmd_render(const Options& opt) {
    const MvpModel model = load_model(opt.model);
    if (opt.graph == "mvp") {
        RenderOptions render_opts;
        render_opts.decoration = opt.decoration == "performance" ? Decoration::performance
                                                                 : Decoration::frequency;
        render_opts.threshold = opt.threshold;
        render_opts.show_isolated = opt.show_isolated;
        render_opts.palette_seed = opt.palette_seed;
        write_text(opt.output, render_mvp(model, render_opts));
    } else if (opt.graph == "e2o") {
        write_text(opt.output, render_e2o(model.e2o));
    } else if (opt.graph == "e2e") {
        std::optional<std::vector<std::string>> subset;
        if (!opt.events.empty()) subset = opt.events;
        write_text(opt.output, render_e2e(model.e2e, subset));
    } else if (opt.graph == "dfg") {
        // default viewpoint: every class of the model's log
        std::vector<std::string> classes = opt.classes;
        if (classes.empty())
            for (std::size_t c = 0; c < model.log->num_classes(); ++c)
                classes.push_back(model.log->class_name(c));
        write_text(opt.output, render_dfg(project_dfg(model, Viewpoint(classes))));
    } else {
        throw ValidationError("unknown graph kind '" + opt.graph + "'");
    }
}

void cmd_bench(const Options& opt, const GeneratorParams& fixed) {
    const SweepKind kind = parse_sweep(opt.sweep);
    const std::vector<std::uint64_t> points =
        opt.points.empty() ? bench_default_points(kind) : opt.points;
    BenchReport report;
    report.sweeps.push_back(run_sweep(kind, points, fixed));
    const std::string text = report_to_json(report);
    write_text(opt.output, text);
    std::cout << text;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"MVP process mining: discover multi-viewpoint models from "
                 "database event logs, project viewpoints, render graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* discover_cmd =
        app.add_subcommand("discover", "Discover an MVP model from a database log CSV");
    discover_cmd->add_option("--input", opt.input, "database log CSV")->required();
    discover_cmd->add_option("--output", opt.output, "model JSON dump")->required();

    auto* project_cmd =
        app.add_subcommand("project", "Project a model onto a viewpoint (DFG or log)");
    project_cmd->add_option("--model", opt.model, "model JSON dump")->required();
    project_cmd->add_option("--classes", opt.classes, "viewpoint classes")
        ->required()
        ->delimiter(',');
    project_cmd->add_option("--kind", opt.kind, "dfg | log")
        ->check(CLI::IsMember({"dfg", "log"}));
    project_cmd->add_flag("--transitive-closure", opt.transitive_closure,
                          "merge cases into connected components (extension)");
    project_cmd->add_option("--output", opt.output, "output file")->required();

    auto* generate_cmd =
        app.add_subcommand("generate", "Generate a synthetic database log CSV");
    generate_cmd->add_option("--events", opt.gen.n_events, "number of events");
    generate_cmd->add_option("--activities", opt.gen.n_activities, "number of activities");
    generate_cmd->add_option("--classes", opt.gen.n_classes, "number of classes");
    generate_cmd->add_option("--objects-per-class", opt.gen.n_objects_per_class,
                             "objects per class");
    generate_cmd->add_option("--links-per-event", opt.gen.links_per_event,
                             "object links per event");
    generate_cmd->add_option("--seed", opt.gen.seed, "random seed");
    generate_cmd->add_option("--output", opt.output, "output CSV")->required();

    auto* render_cmd = app.add_subcommand("render", "Render a model graph as DOT text");
    render_cmd->add_option("--model", opt.model, "model JSON dump")->required();
    render_cmd->add_option("--graph", opt.graph, "mvp | e2o | e2e | dfg")
        ->check(CLI::IsMember({"mvp", "e2o", "e2e", "dfg"}));
    render_cmd->add_option("--decoration", opt.decoration, "frequency | performance")
        ->check(CLI::IsMember({"frequency", "performance"}));
    render_cmd->add_option("--threshold", opt.threshold, "dependency threshold in [-1,1]");
    render_cmd->add_flag("--show-isolated", opt.show_isolated, "keep isolated activities");
    render_cmd->add_option("--palette-seed", opt.palette_seed, "rotate class colors");
    render_cmd->add_option("--classes", opt.classes, "viewpoint for --graph dfg")
        ->delimiter(',');
    render_cmd->add_option("--events", opt.events, "event subset for --graph e2e")
        ->delimiter(',');
    render_cmd->add_option("--output", opt.output, "output DOT file")->required();

    auto* bench_cmd =
        app.add_subcommand("bench", "Time discovery across a generator parameter sweep");
    bench_cmd->add_option("--sweep", opt.sweep, "events | activities | classes | objects")
        ->check(CLI::IsMember({"events", "activities", "classes", "objects"}));
    bench_cmd->add_option("--points", opt.points, "swept parameter values (>= 3)")
        ->delimiter(',');
    bench_cmd->add_option("--events", opt.gen.n_events, "fixed events");
    bench_cmd->add_option("--activities", opt.gen.n_activities, "fixed activities");
    bench_cmd->add_option("--classes", opt.gen.n_classes, "fixed classes");
    bench_cmd->add_option("--objects-per-class", opt.gen.n_objects_per_class,
                          "fixed objects per class");
    bench_cmd->add_option("--links-per-event", opt.gen.links_per_event,
                          "fixed links per event");
    bench_cmd->add_option("--seed", opt.gen.seed, "generator seed");
    bench_cmd->add_option("--output", opt.output, "report JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (discover_cmd->parsed()) {
            cmd_discover(opt);
        } else if (project_cmd->parsed()) {
            cmd_project(opt);
        } else if (generate_cmd->parsed()) {
            cmd_generate(opt);
        } else if (render_cmd->parsed()) {
            cmd_render(opt);
        } else if (bench_cmd->parsed()) {
            // per-sweep defaults, overridden only by flags the user passed
            GeneratorParams fixed = bench_fixed_params(parse_sweep(opt.sweep));
            if (bench_cmd->count("--events")) fixed.n_events = opt.gen.n_events;
            if (bench_cmd->count("--activities")) fixed.n_activities = opt.gen.n_activities;
            if (bench_cmd->count("--classes")) fixed.n_classes = opt.gen.n_classes;
            if (bench_cmd->count("--objects-per-class"))
                fixed.n_objects_per_class = opt.gen.n_objects_per_class;
            if (bench_cmd->count("--links-per-event"))
                fixed.links_per_event = opt.gen.links_per_event;
            if (bench_cmd->count("--seed")) fixed.seed = opt.gen.seed;
            cmd_bench(opt, fixed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace mvp::cli
