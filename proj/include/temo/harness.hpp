#pragma once

#include "temo/problems.hpp"
#include "temo/tensor.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace temo {

inline constexpr const char* kVersion = "0.1.0";

enum class Algorithm { nsga3, moead, hype, rvea };
enum class OutputFormat { csv, json };
enum class ScaleKind { population, dimension };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& s);
std::string to_string(ScaleKind k);
ScaleKind parse_scale_kind(const std::string& s);

struct IndicatorChoice {
    bool igd = true;
    bool hv = true;
    bool eu = false;
};

struct RunConfig {
    Algorithm algorithm = Algorithm::nsga3;
    ProblemName problem = ProblemName::dtlz1;
    /// 0 selects the problem's canonical dimension.
    Index dim = 0;
    Index objectives = 3;
    Index pop_size = 100;
    Index generations = 100;
    std::uint64_t seed = 1;
    Index repeats = 1;

    std::optional<Index> divisions;
    std::optional<Index> neighborhood;
    double eta_c = 20.0;
    double eta_m = 20.0;
    /// Negative means 1/d.
    double pm = -1.0;
    /// Per-gene skip/swap masks on SBX as in common tensorised implementations.
    bool sbx_mixing = true;
    double theta = 5.0;
    bool pbi_normalized = true;
    double alpha = 2.0;
    /// 0 means 10 * n.
    Index hv_samples = 0;
    /// Empty means derived from the merged population each generation.
    RowVector hv_ref;

    IndicatorChoice indicators;
    Index ref_front_size = 5000;
    /// Compute indicators every k generations (the last generation always); 0 disables them.
    Index indicator_every = 1;
    bool time_selection_only = false;
    /// Wall-clock budget per run in seconds; 0 disables it.
    double timeout_s = 0.0;

    std::string out;
    OutputFormat format = OutputFormat::csv;

    [[nodiscard]] ProblemSpec problem_spec() const;
    /// Throws std::invalid_argument on non-positive sizes or an unsupported combination.
    void validate() const;
};

/// Applies a key=value or JSON config document. Keys use the CLI long-flag
/// names without dashes (pop-size, eta-c, ...). Throws std::invalid_argument.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_value(RunConfig& config, const std::string& key, const std::string& value);

struct GenerationRow {
    Index generation = 0;
    double time_s = 0.0;
    /// NaN when not computed this generation.
    double igd = 0.0;
    double hv = 0.0;
    double eu = 0.0;
    RowVector ideal;
};

struct RunRecord {
    RunConfig config;
    std::uint64_t seed = 0;
    Index repeat = 0;
    /// Population size actually used (lattice-derived for moead and rvea).
    Index pop_size = 0;
    Index dim = 0;
    double initial_igd = 0.0;
    double initial_hv = 0.0;
    double initial_eu = 0.0;
    std::vector<GenerationRow> rows;
    bool timed_out = false;
    std::string version = kVersion;
    std::string platform;

    [[nodiscard]] double mean_time() const;
    /// Last computed value of each indicator (initial value when no generation ran).
    [[nodiscard]] double final_igd() const;
    [[nodiscard]] double final_hv() const;
    [[nodiscard]] double final_eu() const;
};

std::string platform_string();

/// One run of `config` using repeat index `repeat` (stream seed.split(repeat)).
RunRecord run(const RunConfig& config, Index repeat = 0);
/// config.repeats runs in repeat order.
std::vector<RunRecord> run_repeats(const RunConfig& config);

void write_csv(std::ostream& os, const RunRecord& record);
void write_json(std::ostream& os, const RunRecord& record);
/// Writes to `path` in the given format. Throws std::runtime_error on I/O failure.
void emit(const RunRecord& record, const std::string& path, OutputFormat format);

/// Parses a CSV produced by write_csv (metadata lines are read for the
/// initial indicators and seed; the rest is ignored).
RunRecord parse_csv(std::istream& is);

struct ScaleCell {
    Index pop_size = 0;
    Index dim = 0;
    /// Mean per-generation time over all repeats; NaN when missing.
    double mean_time_s = 0.0;
    bool missing = false;
};

/// Doubles n (population) or d (dimension) from `from` for `steps` cells.
/// config.timeout_s applies per run; a run that exceeds it marks its cell missing.
std::vector<ScaleCell> scaling_experiment(ScaleKind kind, const RunConfig& base, Index from, Index steps);

void write_scale_csv(std::ostream& os, ScaleKind kind, const RunConfig& base, const std::vector<ScaleCell>& cells);

/// Shortest decimal that round-trips (17 significant digits at most); "nan" for NaN.
std::string format_double(double v);
double parse_double(const std::string& s);

} // namespace temo
