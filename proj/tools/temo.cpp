// temo: run EMO algorithms on DTLZ problems and the scaling experiments.

#include "temo/harness.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitTimeout = 3;

struct Flags {
    std::map<std::string, std::string> values;
    bool time_selection_only = false;
    bool unnormalized_pbi = false;
    std::string config_path;
};

void add_run_options(CLI::App& app, Flags& flags)
{
    const std::pair<const char*, const char*> options[] = {
        {"algorithm", "nsga3 | moead | hype | rvea"},
        {"problem", "dtlz1 .. dtlz7"},
        {"pop-size", "population size (moead and rvea use the largest lattice not above it)"},
        {"dim", "decision dimension (default: canonical for the problem)"},
        {"objectives", "number of objectives"},
        {"generations", "number of generations"},
        {"seed", "64-bit seed"},
        {"repeats", "independent repeats"},
        {"out", "output file, or directory for one file per repeat"},
        {"divisions", "lattice divisions H for reference directions / weights"},
        {"neighborhood", "MOEA/D neighbourhood size T"},
        {"eta-c", "SBX distribution index"},
        {"eta-m", "mutation distribution index"},
        {"pm", "per-gene mutation probability (default 1/d)"},
        {"sbx-mixing", "on | off: per-gene skip/swap masks in SBX (default on)"},
        {"theta", "PBI penalty"},
        {"alpha", "RVEA penalty exponent"},
        {"hv-samples", "HypE samples per selection (default 10n)"},
        {"hv-ref", "HypE reference point: auto or x,y,..."},
        {"indicator", "comma list of igd, hv, eu"},
        {"ref-front-size", "reference front sample size"},
        {"indicator-every", "indicator cadence in generations (0 disables)"},
        {"format", "csv | json"},
        {"timeout", "wall-clock budget per run in seconds"},
    };
    for (const auto& [name, help] : options) {
        app.add_option_function<std::string>(
            std::string("--") + name, [&flags, key = std::string(name)](const std::string& v) { flags.values[key] = v; },
            help);
    }
    app.add_flag("--time-selection-only", flags.time_selection_only, "time only the survivor selection");
    app.add_flag("--unnormalized-pbi", flags.unnormalized_pbi, "use d2 without normalising the weight direction");
    app.add_option("--config", flags.config_path, "key=value or JSON config file; flags override it");
}

temo::RunConfig build_config(const Flags& flags)
{
    temo::RunConfig config;
    if (!flags.config_path.empty()) {
        std::ifstream is(flags.config_path);
        if (!is) throw std::invalid_argument("cannot read config file '" + flags.config_path + "'");
        std::stringstream ss;
        ss << is.rdbuf();
        temo::apply_config_text(config, ss.str());
    }
    for (const auto& [key, value] : flags.values) temo::apply_config_value(config, key, value);
    if (flags.time_selection_only) config.time_selection_only = true;
    if (flags.unnormalized_pbi) config.pbi_normalized = false;
    config.validate();
    return config;
}

std::string record_path(const temo::RunConfig& config, const temo::RunRecord& rec)
{
    namespace fs = std::filesystem;
    const fs::path out(config.out);
    const bool as_dir = config.repeats > 1 || fs::is_directory(out) || config.out.back() == '/';
    if (!as_dir) return config.out;
    fs::create_directories(out);
    const char* ext = config.format == temo::OutputFormat::csv ? ".csv" : ".json";
    return (out / (temo::to_string(config.algorithm) + "_" + temo::to_string(config.problem) + "_seed" +
                   std::to_string(config.seed) + "_r" + std::to_string(rec.repeat) + ext))
        .string();
}

int do_run(const Flags& flags)
{
    const temo::RunConfig config = build_config(flags);
    bool timed_out = false;
    for (temo::Index r = 0; r < config.repeats; ++r) {
        const temo::RunRecord rec = temo::run(config, r);
        timed_out = timed_out || rec.timed_out;
        if (config.out.empty()) {
            if (config.format == temo::OutputFormat::csv) temo::write_csv(std::cout, rec);
            else temo::write_json(std::cout, rec);
        } else {
            const std::string path = record_path(config, rec);
            temo::emit(rec, path, config.format);
            std::cerr << "repeat " << r << ": final igd " << temo::format_double(rec.final_igd()) << ", mean "
                      << temo::format_double(rec.mean_time()) << " s/gen -> " << path << '\n';
        }
    }
    return timed_out ? kExitTimeout : kExitOk;
}

int do_scale(const Flags& flags, const std::string& kind_text, temo::Index from, temo::Index steps)
{
    temo::RunConfig config = build_config(flags);
    // Scaling measures time; indicators stay off unless requested.
    if (!flags.values.contains("indicator-every") && !flags.values.contains("indicator")) config.indicator_every = 0;
    const temo::ScaleKind kind = temo::parse_scale_kind(kind_text);
    const auto cells = temo::scaling_experiment(kind, config, from, steps);

    if (config.out.empty()) {
        temo::write_scale_csv(std::cout, kind, config, cells);
    } else {
        std::ofstream os(config.out);
        if (!os) throw std::runtime_error("cannot open '" + config.out + "' for writing");
        temo::write_scale_csv(os, kind, config, cells);
        if (!os) throw std::runtime_error("failed writing '" + config.out + "'");
    }
    for (const auto& c : cells) {
        if (c.missing) return kExitTimeout;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Data-parallel evolutionary multiobjective optimisation"};
    app.require_subcommand(1);

    Flags run_flags;
    auto* run = app.add_subcommand("run", "run an algorithm and record per-generation indicators");
    add_run_options(*run, run_flags);

    Flags scale_flags;
    std::string kind = "population";
    temo::Index from = 0;
    temo::Index steps = 6;
    auto* scale = app.add_subcommand("scale", "doubling experiment over population size or dimension");
    add_run_options(*scale, scale_flags);
    scale->add_option("--kind", kind, "population | dimension")->check(CLI::IsMember({"population", "dimension"}));
    scale->add_option("--from", from, "starting population size or dimension")->required();
    scale->add_option("--steps", steps, "number of doublings, including the start");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (run->parsed()) return do_run(run_flags);
        return do_scale(scale_flags, kind, from, steps);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
}
