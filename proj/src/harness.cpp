#include "temo/harness.hpp"

#include "temo/hype.hpp"
#include "temo/indicators.hpp"
#include "temo/moead.hpp"
#include "temo/nsga3.hpp"
#include "temo/population.hpp"
#include "temo/reference.hpp"
#include "temo/rng.hpp"
#include "temo/rvea.hpp"
#include "temo/variation.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace temo {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string lower_case(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Index parse_index(const std::string& key, const std::string& v)
{
    Index out = 0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + v + "'");
    return out;
}

bool parse_bool(const std::string& key, const std::string& v)
{
    const std::string s = lower_case(v);
    if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
    if (s == "0" || s == "false" || s == "no" || s == "off") return false;
    throw std::invalid_argument("config: '" + key + "' expects a boolean, got '" + v + "'");
}

RowVector parse_vector(const std::string& v)
{
    std::vector<double> xs;
    std::stringstream ss(v);
    std::string part;
    while (std::getline(ss, part, ',')) xs.push_back(parse_double(trim(part)));
    RowVector out(static_cast<Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) out(static_cast<Index>(i)) = xs[i];
    return out;
}

/// Indicator context: reference front plus the normalisation used for HV and EU.
struct IndicatorContext {
    Matrix front;
    RowVector lo;
    RowVector span;
    Matrix eu_weights;
    IndicatorChoice choice;

    IndicatorContext(const RunConfig& config, const ProblemSpec& spec)
        : front(true_front(spec, config.ref_front_size)), choice(config.indicators)
    {
        lo = front.colwise().minCoeff();
        span = front.colwise().maxCoeff() - lo;
        span = (span.array() > 0.0).select(span, 1.0);
        eu_weights = das_dennis(spec.objectives, divisions_for_count(spec.objectives, 100)).weights;
    }

    [[nodiscard]] Matrix normalized(const Matrix& f) const { return (f.rowwise() - lo).array().rowwise() / span.array(); }

    void measure(const Matrix& f, double& igd_out, double& hv_out, double& eu_out) const
    {
        igd_out = choice.igd ? igd(f, front) : kNaN;
        if (choice.hv || choice.eu) {
            const Matrix g = normalized(f);
            hv_out = choice.hv ? hv_indicator(g, RowVector::Ones(f.cols())).value : kNaN;
            eu_out = choice.eu ? eu(g, eu_weights) : kNaN;
        } else {
            hv_out = kNaN;
            eu_out = kNaN;
        }
    }
};

/// Per-algorithm generation step. `selection_time` accumulates only the
/// survivor-index computation.
class Engine {
public:
    Engine(const RunConfig& config, const ProblemSpec& spec) : config_(config), spec_(spec)
    {
        params_ = VariationParams::for_bounds(spec.lower(), spec.upper());
        params_.eta_c = config.eta_c;
        params_.eta_m = config.eta_m;
        params_.p_m = config.pm;
        params_.per_gene_mixing = config.sbx_mixing;
        params_.validate();

        const Index m = spec.objectives;
        switch (config.algorithm) {
        case Algorithm::nsga3:
        case Algorithm::hype:
            n_ = config.pop_size;
            if (config.algorithm == Algorithm::nsga3) {
                directions_ = das_dennis(m, config.divisions.value_or(divisions_for_count(m, n_))).weights;
            }
            break;
        case Algorithm::moead:
        case Algorithm::rvea: {
            directions_ = das_dennis(m, config.divisions.value_or(divisions_for_count(m, config.pop_size))).weights;
            n_ = directions_.rows();
            if (n_ < 2) throw std::invalid_argument("run: direction lattice has fewer than two rows");
            break;
        }
        }
    }

    [[nodiscard]] Index population_size() const { return n_; }

    void init(RngStream rng)
    {
        Matrix x = rng.uniform_matrix(n_, spec_.dim);
        x = (x.array().rowwise() * (params_.upper - params_.lower).array()).rowwise() + params_.lower.array();
        Matrix f = evaluate(spec_, x);
        pop_ = Population{std::move(x), std::move(f)};
        if (config_.algorithm == Algorithm::moead) {
            const Index t = config_.neighborhood.value_or(moead::default_neighborhood(n_));
            moead_ = moead::MoeadState::init(pop_, directions_, t,
                                             moead::PbiOptions{config_.theta, config_.pbi_normalized});
        }
    }

    double step(RngStream rng, Index generation)
    {
        RngStream vary = rng.split(0);
        RngStream select = rng.split(1);
        if (config_.algorithm == Algorithm::moead) return step_moead(vary);

        Matrix ox;
        if (config_.algorithm == Algorithm::rvea) {
            const IndexVector pool = random_mating_pool(vary, pop_.size(), 2 * ((n_ + 1) / 2));
            const auto half = static_cast<std::ptrdiff_t>(pool.size() / 2);
            const IndexVector a(pool.begin(), pool.begin() + half);
            const IndexVector b(pool.begin() + half, pool.end());
            ox = sbx(vary, gather_rows(pop_.x, a), gather_rows(pop_.x, b), params_);
            ox = polynomial_mutation(vary, ox.topRows(n_), params_);
        } else {
            ox = reproduce(vary, pop_.x, params_);
        }
        Matrix of = evaluate(spec_, ox);
        const Population merged = merge(pop_, Population{std::move(ox), std::move(of)});

        const auto t0 = Clock::now();
        IndexVector keep;
        switch (config_.algorithm) {
        case Algorithm::nsga3:
            keep = nsga3::environmental_selection_indices(merged.f, directions_, n_, select);
            break;
        case Algorithm::hype: {
            const RowVector ref = config_.hv_ref.size() > 0 ? config_.hv_ref : hype::default_reference(merged.f);
            const Index s = config_.hv_samples > 0 ? config_.hv_samples : 10 * n_;
            keep = hype::environmental_selection_indices(merged.f, ref, n_, s, select);
            break;
        }
        case Algorithm::rvea:
            keep = rvea::apd_select_indices(
                merged.f, directions_,
                rvea::ApdParams{config_.alpha, static_cast<double>(generation), static_cast<double>(config_.generations)});
            break;
        case Algorithm::moead:
            break;
        }
        const double selection = seconds_since(t0);
        pop_ = merged.take(keep);
        return selection;
    }

    [[nodiscard]] const Population& population() const
    {
        return config_.algorithm == Algorithm::moead ? moead_.pop : pop_;
    }

private:
    double step_moead(RngStream& vary)
    {
        const Population kids = moead::offspring(moead_, vary, spec_, params_);
        const auto t0 = Clock::now();
        const moead::CompareUpdate cu = moead::compare_update(moead_, kids.f);
        Population next = moead::elite_select(moead_, kids, cu.update, cu.ideal);
        const double selection = seconds_since(t0);
        moead_.pop = std::move(next);
        moead_.ideal = cu.ideal;
        return selection;
    }

    const RunConfig& config_;
    ProblemSpec spec_;
    VariationParams params_;
    Matrix directions_;
    Index n_ = 0;
    Population pop_;
    moead::MoeadState moead_;
};

} // namespace

std::string to_string(Algorithm a)
{
    switch (a) {
    case Algorithm::nsga3: return "nsga3";
    case Algorithm::moead: return "moead";
    case Algorithm::hype: return "hype";
    case Algorithm::rvea: return "rvea";
    }
    return "?";
}

Algorithm parse_algorithm(const std::string& s)
{
    const std::string t = lower_case(s);
    if (t == "nsga3" || t == "nsga-iii") return Algorithm::nsga3;
    if (t == "moead" || t == "moea/d") return Algorithm::moead;
    if (t == "hype") return Algorithm::hype;
    if (t == "rvea") return Algorithm::rvea;
    throw std::invalid_argument("unknown algorithm '" + s + "'");
}

std::string to_string(ScaleKind k) { return k == ScaleKind::population ? "population" : "dimension"; }

ScaleKind parse_scale_kind(const std::string& s)
{
    const std::string t = lower_case(s);
    if (t == "population") return ScaleKind::population;
    if (t == "dimension") return ScaleKind::dimension;
    throw std::invalid_argument("unknown scale kind '" + s + "'");
}

ProblemSpec RunConfig::problem_spec() const
{
    return ProblemSpec::make(problem, objectives, dim > 0 ? std::optional<Index>(dim) : std::nullopt);
}

void RunConfig::validate() const
{
    problem_spec().validate();
    if (pop_size < 2) throw std::invalid_argument("config: pop-size must be at least 2");
    if (generations < 0) throw std::invalid_argument("config: generations must be non-negative");
    if (repeats < 1) throw std::invalid_argument("config: repeats must be positive");
    if (ref_front_size < 1) throw std::invalid_argument("config: ref-front-size must be positive");
    if (indicator_every < 0) throw std::invalid_argument("config: indicator-every must be non-negative");
    if (hv_samples < 0) throw std::invalid_argument("config: hv-samples must be non-negative");
    if (timeout_s < 0.0) throw std::invalid_argument("config: timeout must be non-negative");
    if (divisions && *divisions < 1) throw std::invalid_argument("config: divisions must be positive");
    if (neighborhood && *neighborhood < 2) throw std::invalid_argument("config: neighborhood must be at least 2");
    if (!(theta >= 0.0)) throw std::invalid_argument("config: theta must be non-negative");
    if (!(alpha > 0.0)) throw std::invalid_argument("config: alpha must be positive");
    if (hv_ref.size() > 0 && hv_ref.size() != objectives) throw std::invalid_argument("config: hv-ref needs one value per objective");
    if (algorithm == Algorithm::moead && neighborhood) {
        const Index n = simplex_lattice_size(objectives, divisions.value_or(divisions_for_count(objectives, pop_size)));
        if (*neighborhood > n) throw std::invalid_argument("config: neighborhood exceeds the number of weight vectors");
    }
}

void apply_config_value(RunConfig& c, const std::string& raw_key, const std::string& raw_value)
{
    std::string key = lower_case(trim(raw_key));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string v = trim(raw_value);
    if (key == "algorithm") c.algorithm = parse_algorithm(v);
    else if (key == "problem") c.problem = parse_problem_name(v);
    else if (key == "dim") c.dim = parse_index(key, v);
    else if (key == "objectives") c.objectives = parse_index(key, v);
    else if (key == "pop-size") c.pop_size = parse_index(key, v);
    else if (key == "generations") c.generations = parse_index(key, v);
    else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_index(key, v));
    else if (key == "repeats") c.repeats = parse_index(key, v);
    else if (key == "divisions") c.divisions = parse_index(key, v);
    else if (key == "neighborhood") c.neighborhood = parse_index(key, v);
    else if (key == "eta-c") c.eta_c = parse_double(v);
    else if (key == "eta-m") c.eta_m = parse_double(v);
    else if (key == "pm") c.pm = parse_double(v);
    else if (key == "sbx-mixing") c.sbx_mixing = parse_bool(key, v);
    else if (key == "theta") c.theta = parse_double(v);
    else if (key == "pbi-normalized") c.pbi_normalized = parse_bool(key, v);
    else if (key == "alpha") c.alpha = parse_double(v);
    else if (key == "hv-samples") c.hv_samples = parse_index(key, v);
    else if (key == "hv-ref") c.hv_ref = lower_case(v) == "auto" ? RowVector() : parse_vector(v);
    else if (key == "indicator") {
        c.indicators = IndicatorChoice{false, false, false};
        std::stringstream ss(v);
        std::string part;
        while (std::getline(ss, part, ',')) {
            const std::string p = lower_case(trim(part));
            if (p == "igd") c.indicators.igd = true;
            else if (p == "hv") c.indicators.hv = true;
            else if (p == "eu") c.indicators.eu = true;
            else throw std::invalid_argument("config: unknown indicator '" + p + "'");
        }
    }
    else if (key == "ref-front-size") c.ref_front_size = parse_index(key, v);
    else if (key == "indicator-every") c.indicator_every = parse_index(key, v);
    else if (key == "time-selection-only") c.time_selection_only = parse_bool(key, v);
    else if (key == "timeout") c.timeout_s = parse_double(v);
    else if (key == "out") c.out = v;
    else if (key == "format") {
        const std::string f = lower_case(v);
        if (f == "csv") c.format = OutputFormat::csv;
        else if (f == "json") c.format = OutputFormat::json;
        else throw std::invalid_argument("config: unknown format '" + v + "'");
    }
    else throw std::invalid_argument("config: unknown key '" + raw_key + "'");
}

void apply_config_text(RunConfig& config, const std::string& text)
{
    const std::string body = trim(text);
    if (!body.empty() && body.front() == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(body);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument(std::string("config: ") + e.what());
        }
        for (const auto& [key, value] : doc.items()) {
            std::string v;
            if (value.is_string()) v = value.get<std::string>();
            else if (value.is_array()) {
                for (std::size_t i = 0; i < value.size(); ++i) {
                    if (i) v += ',';
                    v += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
                }
            } else v = value.dump();
            apply_config_value(config, key, v);
        }
        return;
    }
    std::stringstream ss(text);
    std::string line;
    Index line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("config: line " + std::to_string(line_no) + " has no '='");
        apply_config_value(config, t.substr(0, eq), t.substr(eq + 1));
    }
}

double RunRecord::mean_time() const
{
    if (rows.empty()) return kNaN;
    double total = 0.0;
    for (const auto& r : rows) total += r.time_s;
    return total / static_cast<double>(rows.size());
}

namespace {

double last_value(const std::vector<GenerationRow>& rows, double initial, double GenerationRow::*field)
{
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        if (!std::isnan((*it).*field)) return (*it).*field;
    }
    return initial;
}

} // namespace

double RunRecord::final_igd() const { return last_value(rows, initial_igd, &GenerationRow::igd); }
double RunRecord::final_hv() const { return last_value(rows, initial_hv, &GenerationRow::hv); }
double RunRecord::final_eu() const { return last_value(rows, initial_eu, &GenerationRow::eu); }

std::string platform_string()
{
    std::string s;
#if defined(__linux__)
    s = "linux";
#elif defined(__APPLE__)
    s = "macos";
#elif defined(_WIN32)
    s = "windows";
#else
    s = "unknown";
#endif
#if defined(__x86_64__)
    s += "-x86_64";
#elif defined(__aarch64__)
    s += "-aarch64";
#endif
#if defined(__clang__)
    s += " clang " + std::to_string(__clang_major__);
#elif defined(__GNUC__)
    s += " gcc " + std::to_string(__GNUC__);
#endif
#if defined(_OPENMP)
    s += " openmp";
#endif
    return s;
}

RunRecord run(const RunConfig& config, Index repeat)
{
    config.validate();
    const ProblemSpec spec = config.problem_spec();
    Engine engine(config, spec);

    RunRecord rec;
    rec.config = config;
    rec.seed = config.seed;
    rec.repeat = repeat;
    rec.pop_size = engine.population_size();
    rec.dim = spec.dim;
    rec.platform = platform_string();

    const auto started = Clock::now();
    const RngStream root = RngStream(config.seed).split(static_cast<std::uint64_t>(repeat));
    engine.init(root.split(0));

    const bool any_indicator = config.indicator_every > 0 &&
                               (config.indicators.igd || config.indicators.hv || config.indicators.eu);
    std::optional<IndicatorContext> ctx;
    if (any_indicator) ctx.emplace(config, spec);
    rec.initial_igd = rec.initial_hv = rec.initial_eu = kNaN;
    if (ctx) ctx->measure(engine.population().f, rec.initial_igd, rec.initial_hv, rec.initial_eu);

    for (Index g = 1; g <= config.generations; ++g) {
        if (config.timeout_s > 0.0 && seconds_since(started) > config.timeout_s) {
            rec.timed_out = true;
            break;
        }
        const auto t0 = Clock::now();
        const double selection = engine.step(root.split({1, static_cast<std::uint64_t>(g)}), g);
        const double total = seconds_since(t0);

        GenerationRow row;
        row.generation = g;
        row.time_s = config.time_selection_only ? selection : total;
        row.igd = row.hv = row.eu = kNaN;
        const bool due = any_indicator && (g % config.indicator_every == 0 || g == config.generations);
        if (due) ctx->measure(engine.population().f, row.igd, row.hv, row.eu);
        row.ideal = engine.population().f.colwise().minCoeff();
        rec.rows.push_back(std::move(row));
    }
    return rec;
}

std::vector<RunRecord> run_repeats(const RunConfig& config)
{
    std::vector<RunRecord> out;
    for (Index r = 0; r < config.repeats; ++r) out.push_back(run(config, r));
    return out;
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s)
{
    const std::string t = trim(s);
    if (lower_case(t) == "nan") return kNaN;
    double v = 0.0;
    const char* b = t.data();
    if (!t.empty() && t.front() == '+') ++b;
    const auto res = std::from_chars(b, t.data() + t.size(), v);
    if (res.ec != std::errc() || res.ptr != t.data() + t.size()) throw std::invalid_argument("not a number: '" + s + "'");
    return v;
}

namespace {

void write_meta(std::ostream& os, const std::string& key, const std::string& value)
{
    os << "# " << key << '=' << value << '\n';
}

nlohmann::json config_json(const RunConfig& c)
{
    nlohmann::json j;
    j["algorithm"] = to_string(c.algorithm);
    j["problem"] = to_string(c.problem);
    j["dim"] = c.dim;
    j["objectives"] = c.objectives;
    j["pop-size"] = c.pop_size;
    j["generations"] = c.generations;
    j["seed"] = c.seed;
    j["repeats"] = c.repeats;
    if (c.divisions) j["divisions"] = *c.divisions;
    if (c.neighborhood) j["neighborhood"] = *c.neighborhood;
    j["eta-c"] = c.eta_c;
    j["eta-m"] = c.eta_m;
    j["pm"] = c.pm;
    j["sbx-mixing"] = c.sbx_mixing;
    j["theta"] = c.theta;
    j["pbi-normalized"] = c.pbi_normalized;
    j["alpha"] = c.alpha;
    j["hv-samples"] = c.hv_samples;
    if (c.hv_ref.size() > 0) j["hv-ref"] = std::vector<double>(c.hv_ref.data(), c.hv_ref.data() + c.hv_ref.size());
    std::vector<std::string> ind;
    if (c.indicators.igd) ind.emplace_back("igd");
    if (c.indicators.hv) ind.emplace_back("hv");
    if (c.indicators.eu) ind.emplace_back("eu");
    j["indicator"] = ind;
    j["ref-front-size"] = c.ref_front_size;
    j["indicator-every"] = c.indicator_every;
    j["time-selection-only"] = c.time_selection_only;
    j["timeout"] = c.timeout_s;
    return j;
}

nlohmann::json number_or_null(double v)
{
    return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
}

} // namespace

void write_csv(std::ostream& os, const RunRecord& r)
{
    write_meta(os, "temo", r.version);
    write_meta(os, "platform", r.platform);
    write_meta(os, "config", config_json(r.config).dump());
    write_meta(os, "seed", std::to_string(r.seed));
    write_meta(os, "repeat", std::to_string(r.repeat));
    write_meta(os, "pop_size", std::to_string(r.pop_size));
    write_meta(os, "dim", std::to_string(r.dim));
    write_meta(os, "initial_igd", format_double(r.initial_igd));
    write_meta(os, "initial_hv", format_double(r.initial_hv));
    write_meta(os, "initial_eu", format_double(r.initial_eu));
    write_meta(os, "timed_out", r.timed_out ? "true" : "false");
    write_meta(os, "mean_time_s", format_double(r.mean_time()));
    os << "generation,time_s,igd,hv\n";
    for (const auto& row : r.rows) {
        os << row.generation << ',' << format_double(row.time_s) << ',' << format_double(row.igd) << ','
           << format_double(row.hv) << '\n';
    }
}

void write_json(std::ostream& os, const RunRecord& r)
{
    nlohmann::json j;
    j["metadata"] = {{"temo", r.version},      {"platform", r.platform}, {"config", config_json(r.config)},
                     {"seed", r.seed},         {"repeat", r.repeat},     {"pop_size", r.pop_size},
                     {"dim", r.dim},           {"timed_out", r.timed_out}};
    j["initial"] = {{"igd", number_or_null(r.initial_igd)},
                    {"hv", number_or_null(r.initial_hv)},
                    {"eu", number_or_null(r.initial_eu)}};
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"generation", row.generation},
                        {"time_s", row.time_s},
                        {"igd", number_or_null(row.igd)},
                        {"hv", number_or_null(row.hv)},
                        {"eu", number_or_null(row.eu)},
                        {"ideal", std::vector<double>(row.ideal.data(), row.ideal.data() + row.ideal.size())}});
    }
    j["generations"] = std::move(rows);
    j["summary"] = {{"mean_time_s", number_or_null(r.mean_time())},
                    {"final_igd", number_or_null(r.final_igd())},
                    {"final_hv", number_or_null(r.final_hv())},
                    {"final_eu", number_or_null(r.final_eu())}};
    os << j.dump(2) << '\n';
}

void emit(const RunRecord& record, const std::string& path, OutputFormat format)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (format == OutputFormat::csv) write_csv(os, record);
    else write_json(os, record);
    os.flush();
    if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

RunRecord parse_csv(std::istream& is)
{
    RunRecord r;
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string body = trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = body.substr(0, eq);
            const std::string value = body.substr(eq + 1);
            if (key == "temo") r.version = value;
            else if (key == "platform") r.platform = value;
            else if (key == "seed") r.seed = std::stoull(value);
            else if (key == "repeat") r.repeat = parse_index(key, value);
            else if (key == "pop_size") r.pop_size = parse_index(key, value);
            else if (key == "dim") r.dim = parse_index(key, value);
            else if (key == "initial_igd") r.initial_igd = parse_double(value);
            else if (key == "initial_hv") r.initial_hv = parse_double(value);
            else if (key == "initial_eu") r.initial_eu = parse_double(value);
            else if (key == "timed_out") r.timed_out = value == "true";
            continue;
        }
        if (!header) {
            if (trim(line) != "generation,time_s,igd,hv") throw std::invalid_argument("parse_csv: unexpected header '" + line + "'");
            header = true;
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (cells.size() != 4) throw std::invalid_argument("parse_csv: expected 4 columns in '" + line + "'");
        GenerationRow row;
        row.generation = parse_index("generation", trim(cells[0]));
        row.time_s = parse_double(cells[1]);
        row.igd = parse_double(cells[2]);
        row.hv = parse_double(cells[3]);
        row.eu = kNaN;
        r.rows.push_back(std::move(row));
    }
    if (!header) throw std::invalid_argument("parse_csv: missing header");
    return r;
}

std::vector<ScaleCell> scaling_experiment(ScaleKind kind, const RunConfig& base, Index from, Index steps)
{
    if (steps < 1) throw std::invalid_argument("scaling_experiment: steps must be positive");
    if (from < 1) throw std::invalid_argument("scaling_experiment: start value must be positive");
    std::vector<ScaleCell> cells;
    Index value = from;
    for (Index s = 0; s < steps; ++s, value *= 2) {
        RunConfig cfg = base;
        if (kind == ScaleKind::population) cfg.pop_size = value;
        else cfg.dim = value;

        ScaleCell cell;
        cell.pop_size = cfg.pop_size;
        cell.dim = cfg.problem_spec().dim;
        double total = 0.0;
        for (Index r = 0; r < cfg.repeats && !cell.missing; ++r) {
            const RunRecord rec = run(cfg, r);
            cell.pop_size = rec.pop_size;
            if (rec.timed_out) cell.missing = true;
            else total += rec.mean_time();
        }
        cell.mean_time_s = cell.missing ? kNaN : total / static_cast<double>(cfg.repeats);
        cells.push_back(cell);
    }
    return cells;
}

void write_scale_csv(std::ostream& os, ScaleKind kind, const RunConfig& base, const std::vector<ScaleCell>& cells)
{
    write_meta(os, "temo", kVersion);
    write_meta(os, "platform", platform_string());
    write_meta(os, "kind", to_string(kind));
    write_meta(os, "config", config_json(base).dump());
    os << "pop_size,dim,mean_time_s,missing\n";
    for (const auto& c : cells) {
        os << c.pop_size << ',' << c.dim << ',' << format_double(c.mean_time_s) << ',' << (c.missing ? 1 : 0) << '\n';
    }
}

} // namespace temo
