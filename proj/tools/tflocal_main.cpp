// tflocal - run time-frequency localization scenarios, emit CSV reports and
// drive the invariant suites.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfl/diagnostics.hpp"
#include "tfl/scenarios.hpp"
#include "tfl/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 ok, 1 invariant violation, 2 schema error, 3 not a frame,
// 4 solver failure
enum ExitCode : int {
    kOk = 0,
    kInvariantViolation = 1,
    kSchemaError = 2,
    kNotAFrame = 3,
    kSolverFailure = 4,
};

std::string iso_utc_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

struct RunOutputs {
    std::vector<std::pair<std::string, std::string>> files; // name -> content
    std::vector<std::string> flags;                         // e.g. degenerate-spectrum notes
};

// All analysis products are assembled in memory first; files only appear on
// disk once everything succeeded (plus the manifest, which is always written).
RunOutputs run_analyses(const tfl::BuiltScenario& built) {
    using namespace tfl;
    RunOutputs out;
    const ScenarioSpec& spec = built.spec;
    const bool want_decay =
        std::find(spec.analysis.begin(), spec.analysis.end(), "decay") != spec.analysis.end();
    const bool want_weighted =
        std::find(spec.analysis.begin(), spec.analysis.end(), "weighted") != spec.analysis.end();

    std::vector<NormRow> norm_rows;
    if (want_decay || want_weighted) {
        const EigenDecayStudy study =
            eigen_decay_study(built.op, built.phi1, built.lat, 10000, 1e-8, spec.seed);
        if (study.noncompact_flag) out.flags.push_back("non-compact-like spectrum");
        out.files.emplace_back("spectrum.csv", spectrum_csv(study.spectrum));
        for (std::size_t i = 0; i < study.reports.size(); ++i)
            out.files.emplace_back("decay_" + std::to_string(i) + ".csv",
                                   decay_csv(study.reports[i]));
        out.files.emplace_back("baseline.csv", decay_csv(study.baseline));
        for (std::size_t i = 0; i < study.modnorms.size(); ++i)
            for (std::size_t j = 0; j < kStudyExponents.size(); ++j)
                norm_rows.push_back(
                    {kStudyExponents[j], kStudyExponents[j], 0.0, study.modnorms[i][j]});
        for (std::size_t j = 0; j < kStudyExponents.size(); ++j)
            norm_rows.push_back(
                {kStudyExponents[j], kStudyExponents[j], 0.0, study.baseline_modnorms[j]});
        // hard invariants of the run
        for (const DecayReport& r : study.reports)
            for (std::size_t n = 1; n < r.sigma.size(); ++n)
                if (r.sigma[n] > r.sigma[n - 1] + 1e-12)
                    throw std::runtime_error("invariant violation: sigma profile not monotone");
        const double tol = eig_residual_tolerance(built.op);
        for (double r : study.spectrum.residuals)
            if (!(r <= tol)) throw std::runtime_error("invariant violation: eigen residual");
    }
    if (want_weighted) {
        const WeightedDecayStudy wstudy = weighted_decay_study(built.op, built.phi1, built.lat,
                                                               {1.0, 2.0}, 1.0, 1e-8, spec.seed);
        for (std::size_t i = 0; i < wstudy.ratio.size(); ++i)
            for (std::size_t j = 0; j < wstudy.s_list.size(); ++j)
                norm_rows.push_back({wstudy.p, wstudy.p, wstudy.s_list[j], wstudy.ratio[i][j]});
        for (std::size_t j = 0; j < wstudy.s_list.size(); ++j)
            norm_rows.push_back({wstudy.p, wstudy.p, wstudy.s_list[j], wstudy.baseline_ratio[j]});
    }
    out.files.emplace_back("norms.csv", tfl::norms_csv(norm_rows));
    return out;
}

void write_manifest(const std::string& out_dir, const tfl::ScenarioSpec& spec, int status,
                    const std::string& error, const std::vector<std::string>& files,
                    std::uint64_t seed, const std::vector<std::string>& flags = {}) {
    nlohmann::json j;
    j["scenario"] = {{"name", spec.name},
                     {"L", spec.L},
                     {"symbol", spec.symbol.kind},
                     {"windows", spec.windows.kind2.empty()
                                     ? spec.windows.kind
                                     : spec.windows.kind + "/" + spec.windows.kind2},
                     {"lattice", {{"alpha", spec.alpha}, {"beta", spec.beta}}},
                     {"analysis", spec.analysis}};
    j["version"] = kVersion;
    j["created_utc"] = iso_utc_now();
    j["seed"] = seed;
    j["status"] = status;
    if (!error.empty()) j["error"] = error;
    if (!flags.empty()) j["flags"] = flags;
    j["outputs"] = files;
    tfl::write_text_atomic(out_dir + "/manifest.json", j.dump(2) + "\n");
}

int cmd_run(const std::string& scenario_arg, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override) {
    tfl::ScenarioSpec spec;
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    try {
        spec = tfl::load_scenario(scenario_arg);
        if (seed_override) spec.seed = *seed_override;
        const tfl::BuiltScenario built = tfl::build_scenario(spec);
        const RunOutputs outputs = run_analyses(built);
        std::vector<std::string> names;
        for (const auto& [name, content] : outputs.files) {
            tfl::write_text_atomic(out_dir + "/" + name, content);
            names.push_back(name);
        }
        names.push_back("manifest.json");
        write_manifest(out_dir, spec, kOk, "", names, spec.seed, outputs.flags);
        std::cout << "wrote " << names.size() << " files to " << out_dir << "\n";
        return kOk;
    } catch (const tfl::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        write_manifest(out_dir, spec, kSchemaError, e.what(), {"manifest.json"}, spec.seed);
        return kSchemaError;
    } catch (const tfl::NotAFrameError& e) {
        std::cerr << "not a frame: " << e.what() << "\n";
        write_manifest(out_dir, spec, kNotAFrame, e.what(), {"manifest.json"}, spec.seed);
        return kNotAFrame;
    } catch (const tfl::SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        write_manifest(out_dir, spec, kSolverFailure, e.what(), {"manifest.json"}, spec.seed);
        return kSolverFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        write_manifest(out_dir, spec, kInvariantViolation, e.what(), {"manifest.json"}, spec.seed);
        return kInvariantViolation;
    }
}

int cmd_verify(const std::string& level) {
    if (level != "fast" && level != "full") {
        std::cerr << "verify: level must be fast or full\n";
        return kSchemaError;
    }
    const std::vector<tfl::SuiteResult> results = tfl::run_verify_suites(level == "full");
    int failed_total = 0;
    for (const tfl::SuiteResult& r : results) {
        if (r.failed == 0) {
            std::printf("suite %-28s %3d checks passed\n", r.name.c_str(), r.passed);
        } else {
            std::printf("suite %-28s %3d passed, %d FAILED; first: %s\n", r.name.c_str(), r.passed,
                        r.failed, r.first_failure.c_str());
        }
        failed_total += r.failed;
    }
    std::printf("%zu suites, %s\n", results.size(), failed_total == 0 ? "all passed" : "FAILURES");
    return failed_total == 0 ? kOk : kInvariantViolation;
}

int cmd_info(const std::string& scenario_arg) {
    try {
        const tfl::ScenarioSpec spec = tfl::load_scenario(scenario_arg);
        const tfl::BuiltScenario built = tfl::build_scenario(spec);
        const tfl::Operator s = tfl::frame_operator(built.phi1, built.lat);
        const auto [a, b] = tfl::frame_bounds(s);
        std::cout << "scenario: " << spec.name << "\n"
                  << "L: " << spec.L << ", lattice: alpha=" << spec.alpha << " beta=" << spec.beta
                  << " (" << built.lat.size() << " atoms)\n"
                  << "symbol: " << spec.symbol.kind << ", windows: " << spec.windows.kind
                  << (spec.windows.kind2.empty() ? "" : (" / " + spec.windows.kind2)) << "\n"
                  << "operator: " << tfl::provenance_name(built.op.prov)
                  << (built.op.hermitian ? " (Hermitian)" : " (non-Hermitian)") << "\n"
                  << "frame bounds of analysis window on lattice: A=" << tfl::format_sig17(a)
                  << " B=" << tfl::format_sig17(b) << "\n"
                  << "analyses: ";
        for (const std::string& an : spec.analysis) std::cout << an << " ";
        std::cout << "\nseed: " << spec.seed << "\n";
        return kOk;
    } catch (const tfl::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << "\n";
        return kSchemaError;
    } catch (const tfl::NotAFrameError& e) {
        std::cerr << "not a frame: " << e.what() << "\n";
        return kNotAFrame;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvariantViolation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite time-frequency localization toolkit"};
    app.set_version_flag("--version", kVersion);

    std::optional<std::uint64_t> seed_override;
    app.add_option("--seed", seed_override, "override the scenario seed");

    std::string scenario_arg, out_dir = "out", level = "fast", info_arg;
    CLI::App* run = app.add_subcommand("run", "run a scenario (file path or preset name)");
    run->add_option("scenario", scenario_arg, "scenario JSON file or preset name")->required();
    run->add_option("--out", out_dir, "output directory");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--level", level, "fast|full");

    CLI::App* info = app.add_subcommand("info", "print a scenario summary, no heavy analysis");
    info->add_option("scenario", info_arg, "scenario JSON file or preset name")->required();

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kSchemaError;
    }

    if (run->parsed()) return cmd_run(scenario_arg, out_dir, seed_override);
    if (verify->parsed()) return cmd_verify(level);
    if (info->parsed()) return cmd_info(info_arg);
    return kSchemaError;
}
