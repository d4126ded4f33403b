// Command-line front end: report, build, compare, refine, validate and fuzz.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lcabs/fuzz.hpp"
#include "lcabs/io.hpp"
#include "lcabs/qba.hpp"
#include "lcabs/report.hpp"
#include "lcabs/salca.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Common {
    std::string machine_path;
    std::string external;  // empty: take the file's "external" key
    std::string out;
    std::string format = "text";
    bool strict = false;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
    } else {
        lcabs::write_text_file(c.out, text);
    }
}

lcabs::MachineFile load(const Common& c) {
    auto file = lcabs::load_machine_file(c.machine_path);
    if (!c.external.empty()) file.mode = lcabs::parse_external_mode(c.external);
    lcabs::require_accepted(file.machine);
    return file;
}

int negative(const Common& c, bool finding) { return c.strict && finding ? kNegative : kOk; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Window and quotient abstractions of finite state machines"};
    app.require_subcommand(1);

    auto add_common = [](CLI::App* cmd, Common& c, bool needs_machine) {
        if (needs_machine) cmd->add_option("machine", c.machine_path, "machine JSON file")->required();
        cmd->add_option("--external", c.external, "external alphabet")
            ->check(CLI::IsMember({"y", "uy"}));
        cmd->add_option("--out", c.out, "output path (default: stdout)");
        cmd->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"json", "text", "dot"}));
        cmd->add_flag("--strict", c.strict, "exit with 1 on a negative finding");
    };

    Common report_opts;
    std::size_t report_l = 2;
    auto* report = app.add_subcommand("report", "property table for l = 1..L");
    add_common(report, report_opts, true);
    report->add_option("--l", report_l, "largest l")->check(CLI::PositiveNumber);

    Common build_opts;
    std::string kind = "salca";
    std::size_t build_l = 1, build_m = 0;
    auto* build = app.add_subcommand("build", "construct an abstraction");
    add_common(build, build_opts, true);
    build->add_option("kind", kind, "salca or qba")->check(CLI::IsMember({"salca", "qba"}));
    build->add_option("--l", build_l, "window length")->check(CLI::PositiveNumber);
    build->add_option("--m", build_m, "future part of the window (salca only)");

    Common compare_opts;
    std::size_t compare_l = 2;
    auto* compare = app.add_subcommand("compare", "order the abstractions at one l");
    add_common(compare, compare_opts, true);
    compare->add_option("--l", compare_l, "window length")->check(CLI::PositiveNumber);

    Common validate_opts;
    auto* validate_cmd = app.add_subcommand("validate", "check the standing assumptions");
    add_common(validate_cmd, validate_opts, true);

    Common refine_opts;
    std::optional<std::size_t> max_steps;
    auto* refine_cmd = app.add_subcommand("refine", "iterate the partition refinement");
    add_common(refine_cmd, refine_opts, true);
    refine_cmd->add_option("--max-steps", max_steps, "partition budget (default: state count)");

    Common fuzz_opts;
    lcabs::FuzzConfig config;
    auto* fuzz = app.add_subcommand("fuzz", "check the theorem laws on random machines");
    add_common(fuzz, fuzz_opts, false);
    fuzz->add_option("--seed", config.seed, "random seed");
    fuzz->add_option("--count", config.count, "number of machines");
    fuzz->add_option("--max-states", config.max_states, "at most 8")->check(CLI::Range(1, 8));
    fuzz->add_option("--max-inputs", config.max_inputs, "at most 4")->check(CLI::Range(1, 4));
    fuzz->add_option("--max-outputs", config.max_outputs, "at most 4")->check(CLI::Range(1, 4));
    fuzz->add_option("--max-l", config.max_l, "largest l checked")->check(CLI::PositiveNumber);
    std::string machines_dir;
    fuzz->add_option("--machines", machines_dir, "directory for the generated machine files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*report) {
            auto file = load(report_opts);
            auto r = lcabs::make_report(file.machine, file.mode, report_l);
            emit(report_opts, report_opts.format == "json" ? lcabs::to_json(r) : lcabs::to_text(r));
            return negative(report_opts, !r.all_hold());
        }
        if (*build) {
            auto file = load(build_opts);
            lcabs::AbstractMachine a;
            if (kind == "qba") {
                a = lcabs::build_quotient_machine(file.machine, build_l);
            } else {
                lcabs::ExternalAlphabet w(file.machine, file.mode);
                a = lcabs::build_abstract_machine(file.machine, w,
                                                  lcabs::IntervalSpec::make(build_l, build_m));
            }
            auto json = lcabs::machine_to_json(a.machine, a.provenance.mode);
            auto dot = lcabs::machine_to_dot(a.machine, kind);
            if (!build_opts.out.empty()) {
                // A path gives the machine file; its DOT rendering goes next to it.
                lcabs::write_text_file(build_opts.out, json);
                auto dot_path = std::filesystem::path(build_opts.out).replace_extension(".dot");
                lcabs::write_text_file(dot_path.string(), dot);
            } else {
                std::cout << (build_opts.format == "dot" ? dot : json);
            }
            return kOk;
        }
        if (*compare) {
            auto file = load(compare_opts);
            auto o = lcabs::compare_abstractions(file.machine, compare_l);
            emit(compare_opts, compare_opts.format == "json" ? lcabs::to_json(o) : lcabs::to_text(o));
            bool any = o.bisimilar_to_source[0] || o.bisimilar_to_source[1] || o.bisimilar_to_source[2];
            return negative(compare_opts, !any);
        }
        if (*validate_cmd) {
            auto file = lcabs::load_machine_file(validate_opts.machine_path);
            auto v = lcabs::validate(file.machine);
            std::ostringstream out;
            out << "output_deterministic " << std::boolalpha << v.output_deterministic << '\n'
                << "separable " << v.separable << '\n'
                << "reachable " << v.reachable << '\n'
                << "live " << v.live << '\n'
                << "accepted " << v.accepted << '\n';
            for (const auto& f : v.findings) out << "  " << f << '\n';
            emit(validate_opts, out.str());
            return negative(validate_opts, !v.accepted);
        }
        if (*refine_cmd) {
            auto file = load(refine_opts);
            auto result = lcabs::refinement_fixpoint(file.machine, max_steps);
            std::ostringstream out;
            out << "steps " << result.steps << "\nfixed_point " << std::boolalpha << result.reached
                << '\n' << lcabs::serialize(result.partition, file.machine);
            emit(refine_opts, out.str());
            return negative(refine_opts, !result.reached);
        }
        if (*fuzz) {
            auto summary = lcabs::run_fuzz(config);
            if (!machines_dir.empty()) {
                std::filesystem::create_directories(machines_dir);
                for (std::size_t i = 0; i < summary.machines.size(); ++i) {
                    std::ostringstream name;
                    name << "machine_" << std::setw(4) << std::setfill('0') << i << ".json";
                    lcabs::write_text_file((std::filesystem::path(machines_dir) / name.str()).string(),
                                           lcabs::machine_to_json(summary.machines[i],
                                                                  lcabs::ExternalMode::OutputsOnly));
                }
            }
            emit(fuzz_opts, lcabs::render_summary(summary));
            return negative(fuzz_opts, !summary.all_passed());
        }
    } catch (const lcabs::Error& e) {
        std::cerr << e.what() << '\n';
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
