#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kgraph/analysis.hpp"
#include "kgraph/fixtures.hpp"
#include "kgraph/json_io.hpp"

namespace kgraph::cli {

namespace {

struct Settings {
    std::string file;
    std::optional<std::uint32_t> bound;
    std::string set;
    std::string fixture;
    bool text = false;
    unsigned jobs = 1;
};

std::string read_input(const std::string& file, std::istream& in) {
    if (file == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(file, std::ios::binary);
    if (!f) throw InputError("cannot read '" + file + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

GraphInput load_document(const Settings& s, std::istream& in) {
    const std::string fallback = s.file == "-" ? "stdin" : std::filesystem::path(s.file).stem().string();
    return parse_graph_document(read_input(s.file, in), fallback);
}

class Runner {
public:
    Runner(const Settings& s, std::istream& in, std::ostream& out) : s_(s), in_(in), out_(out) {}

    int validate() {
        GraphInput input = load_document(s_, in_);
        Json doc = header(input.name, "validate");
        ValidationReport report;
        try {
            KGraph::build(input);
        } catch (const ValidationError& e) {
            report = e.report();
        }
        doc["valid"] = report.ok();
        doc["violations"] = violations_json(report);
        return finish(doc, report.ok() ? holds : fails);
    }

    int aperiodic() {
        KGraph g = load();
        ScanResult r = scan_aperiodicity(g, scan_options(g));
        Json doc = header(g.name(), "aperiodic");
        doc["bound"] = r.bound;
        doc["aperiodicity"] = scan_json(g, r, true);
        return finish(doc, scan_code(r.verdict));
    }

    int cofinal() {
        KGraph g = load();
        CofinalityResult r = is_cofinal(g);
        Json doc = header(g.name(), "cofinal");
        doc["cofinality"] = cofinality_json(g, r);
        return finish(doc, r.cofinal ? holds : fails);
    }

    int simple() {
        KGraph g = load();
        SimplicityResult r = is_simple(g, scan_options(g));
        Json doc = header(g.name(), "simple");
        doc["bound"] = r.bound;
        doc["simplicity"] = simplicity_json(r);
        doc["cofinality"] = cofinality_json(g, r.cofinality);
        doc["aperiodicity"] = scan_json(g, r.scan, true);
        int code = holds;
        if (r.verdict == SimpleVerdict::inconclusive_at_bound) code = inconclusive;
        if (r.verdict == SimpleVerdict::not_simple_not_cofinal ||
            r.verdict == SimpleVerdict::not_simple_locally_periodic) {
            code = fails;
        }
        return finish(doc, code);
    }

    int ideals() {
        KGraph g = load();
        GaugeResult r = all_ideals_gauge_invariant(g, scan_options(g));
        Json doc = header(g.name(), "ideals");
        doc["bound"] = r.bound;
        doc["ideals"] = gauge_json(g, r);
        int code = holds;
        if (r.verdict == GaugeVerdict::not_all_gauge_invariant) code = fails;
        if (r.verdict == GaugeVerdict::inconclusive_at_bound) code = inconclusive;
        return finish(doc, code);
    }

    int quotient_cmd() {
        KGraph g = load();
        std::vector<std::string> ids;
        std::stringstream ss(s_.set);
        for (std::string id; std::getline(ss, id, ',');) {
            if (!id.empty()) ids.push_back(id);
        }
        KGraph q = quotient(g, VertexSet::from_ids(g, ids));
        return emit_document(graph_document(q.to_input()));
    }

    int fixture_cmd() { return emit_document(graph_document(fixture(s_.fixture))); }

private:
    KGraph load() { return KGraph::build(load_document(s_, in_)); }

    ScanOptions scan_options(const KGraph& g) const {
        ScanOptions o;
        o.bound = s_.bound.value_or(default_bound(g));
        o.jobs = s_.jobs;
        return o;
    }

    static int scan_code(ScanVerdict v) {
        switch (v) {
            case ScanVerdict::periodic:
                return fails;
            case ScanVerdict::aperiodic_up_to_bound:
                return holds;
            case ScanVerdict::inconclusive:
                return inconclusive;
        }
        return inconclusive;
    }

    Json header(const std::string& name, const char* command) const {
        Json doc;
        doc["graph"] = name;
        doc["command"] = command;
        return doc;
    }

    int finish(Json& doc, int code) {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        doc["timing"] = {{"elapsed_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
        out_ << (s_.text ? render_text(doc) : doc.dump(2) + "\n");
        return code;
    }

    int emit_document(const Json& doc) {
        out_ << (s_.text ? render_text(doc) : dump_document(doc));
        return holds;
    }

    const Settings& s_;
    std::istream& in_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Structural analysis of finite k-graphs", "kgraph"};
    app.require_subcommand(1);
    app.add_flag("--text", s.text, "plain-text summary instead of JSON");
    app.add_option("--jobs", s.jobs, "worker threads for scans")->check(CLI::PositiveNumber);

    auto file_arg = [&](CLI::App* sub) {
        sub->add_option("file", s.file, "graph document, or - for standard input")->required();
        sub->fallthrough();
        return sub;
    };
    auto bound_opt = [&](CLI::App* sub) {
        sub->add_option("--bound", s.bound, "scan |p_i| <= B (default |V| + max edges per colour)")
            ->check(CLI::PositiveNumber);
        return sub;
    };
    auto* validate = file_arg(app.add_subcommand("validate", "check a graph document"));
    auto* aperiodic = bound_opt(file_arg(app.add_subcommand("aperiodic", "bounded local periodicity scan")));
    auto* cofinal = file_arg(app.add_subcommand("cofinal", "cofinality with certificate"));
    auto* simple = bound_opt(file_arg(app.add_subcommand("simple", "simplicity up to a bound")));
    auto* ideals = bound_opt(file_arg(app.add_subcommand("ideals", "gauge invariance of all ideals")));
    auto* quotient = file_arg(app.add_subcommand("quotient", "quotient by a saturated hereditary set"));
    quotient->add_option("--set", s.set, "comma-separated vertex ids")->required();
    auto* fixture = app.add_subcommand("fixture", "print a built-in graph document");
    fixture->add_option("name", s.fixture, "T2, F, D or D2")->required();
    fixture->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return holds;
    } catch (const CLI::ParseError& e) {
        err << "kgraph: " << e.what() << "\n";
        return invalid_input;
    }

    Runner runner(s, in, out);
    try {
        if (validate->parsed()) return runner.validate();
        if (aperiodic->parsed()) return runner.aperiodic();
        if (cofinal->parsed()) return runner.cofinal();
        if (simple->parsed()) return runner.simple();
        if (ideals->parsed()) return runner.ideals();
        if (quotient->parsed()) return runner.quotient_cmd();
        return runner.fixture_cmd();
    } catch (const LimitError& e) {
        err << "kgraph: " << e.what() << "\n";
        return inconclusive;
    } catch (const Error& e) {
        err << "kgraph: " << e.what() << "\n";
        return invalid_input;
    }
}

}  // namespace kgraph::cli
