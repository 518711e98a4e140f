#include "operadlab/pipelines.hpp"
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace operadlab;

namespace {

struct Options {
    std::string pipeline = "all";
    std::string format = "text";
    std::string out;
    std::string delta;
    std::string q0;
    std::string membership = "field";
    bool unicode = false;
};

PipelineOptions pipeline_options(const Options& o) {
    PipelineOptions p;
    if (!o.delta.empty()) {
        Rational d = parse_rational(o.delta);
        if (d <= make_rational(1, 4) || d > 1)
            throw CLI::ValidationError("--delta", "delta must lie in (1/4, 1]");
        p.delta = d;
        p.delta_set = true;
    }
    if (o.membership == "ring") p.membership = Membership::RING;
    else if (o.membership == "field") p.membership = Membership::FIELD;
    else throw CLI::ValidationError("--membership", "expected 'ring' or 'field'");
    return p;
}

std::string render_reports(const std::vector<PipelineReport>& reports, const Options& o) {
    if (o.format == "json") {
        if (reports.size() == 1) return reports.front().to_json().dump(2) + "\n";
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) arr.push_back(r.to_json());
        return arr.dump(2) + "\n";
    }
    if (o.format == "csv") {
        std::string out;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::string csv = reports[i].to_csv();
            if (i) csv.erase(0, csv.find('\n') + 1);  // keep a single header row
            out += csv;
        }
        return out;
    }
    std::string out;
    for (const auto& r : reports) out += r.to_text(o.unicode);
    return out;
}

int emit(const std::string& text, const Options& o) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out);
    if (!f) {
        std::cerr << "error: cannot write " << o.out << "\n";
        return 2;
    }
    f << text;
    return 0;
}

std::vector<PipelineReport> collect(const Options& o, bool with_specialization) {
    PipelineOptions popts = pipeline_options(o);
    std::vector<PipelineReport> reports;
    if (o.pipeline == "all") {
        reports = run_all(popts);
    } else {
        reports.push_back(run_pipeline(o.pipeline, popts));
    }
    if (with_specialization && !o.q0.empty())
        reports.push_back(verify_specialization(parse_rational(o.q0), popts));
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation computations for dendriform and diassociative relations"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--out", o.out, "write output to this file");
        cmd->add_option("--delta", o.delta, "LLL parameter in (1/4, 1]");
        cmd->add_option("--membership", o.membership, "extraction membership test")
            ->check(CLI::IsMember({"ring", "field"}));
        cmd->add_flag("--unicode", o.unicode, "render operations with unicode glyphs");
    };

    CLI::App* run = app.add_subcommand("run", "run a pipeline and write its report");
    run->add_option("pipeline", o.pipeline, "pipeline name or 'all'")
        ->required()
        ->check(CLI::IsMember({"dias-from-dend", "polarize-assoc", "deform-hnf", "dend-deform",
                               "dias-deform", "all"}));
    add_common(run);
    run->add_option("--q", o.q0, "also verify specialization at this rational q");

    CLI::App* verify = app.add_subcommand("verify", "run verification checks; exit 0 iff all pass");
    verify->add_option("--pipeline", o.pipeline, "pipeline name or 'all'")
        ->check(CLI::IsMember({"dias-from-dend", "polarize-assoc", "deform-hnf", "dend-deform",
                               "dias-deform", "all"}));
    add_common(verify);
    verify->add_option("--q", o.q0, "also verify specialization at this rational q");

    std::string input;
    CLI::App* render = app.add_subcommand("render", "pretty-print a relation JSON file");
    render->add_option("--input", input, "relation JSON file")->required();
    add_common(render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (render->parsed()) {
            std::ifstream f(input);
            if (!f) {
                std::cerr << "error: cannot read " << input << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << f.rdbuf();
            Relation r = Relation::from_json(nlohmann::ordered_json::parse(buf.str()));
            return emit(render_relation(r, o.unicode) + "\n", o);
        }
        std::vector<PipelineReport> reports = collect(o, true);
        int rc = emit(render_reports(reports, o), o);
        if (rc != 0) return rc;
        if (verify->parsed() || run->parsed()) {
            for (const auto& r : reports)
                if (!r.all_pass()) return 1;
        }
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
