#include "gqfi/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqfi/errors.hpp"
#include "gqfi/fock.hpp"
#include "gqfi/io.hpp"
#include "gqfi/metrology.hpp"
#include "gqfi/montecarlo.hpp"
#include "gqfi/quantifiers.hpp"
#include "gqfi/states.hpp"

namespace gqfi::cli {

namespace {

constexpr const char* kToolVersion = "0.2.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitIo = 4;
constexpr int kExitValidation = 5;

int default_workers() {
    if (const char* env = std::getenv("GQFI_WORKERS")) {
        const int parsed = std::atoi(env);
        if (parsed >= 1) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string join_args(int argc, const char* const* argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += ' ';
        joined += argv[i];
    }
    return joined;
}

struct QfiFlags {
    double d_epsilon = 1e-3;
    int theta_nodes = 128;
    bool no_richardson = false;
    double base_epsilon = 0.0;

    QfiConfig config() const {
        QfiConfig cfg;
        cfg.d_epsilon = d_epsilon;
        cfg.theta_nodes = theta_nodes;
        cfg.richardson = !no_richardson;
        cfg.base_epsilon = base_epsilon;
        return cfg;
    }
    void attach(CLI::App* app) {
        app->add_option("--d-epsilon", d_epsilon, "finite-difference step")->capture_default_str();
        app->add_option("--theta-nodes", theta_nodes, "theta quadrature nodes (even, >= 16)")
            ->capture_default_str();
        app->add_flag("--no-richardson", no_richardson, "disable Richardson extrapolation");
        app->add_option("--base-epsilon", base_epsilon, "expansion point epsilon_0")
            ->capture_default_str();
    }
    void describe(std::map<std::string, std::string>& config) const {
        config["d_epsilon"] = io::format_g9(d_epsilon);
        config["theta_nodes"] = std::to_string(theta_nodes);
        config["richardson"] = no_richardson ? "false" : "true";
        config["base_epsilon"] = io::format_g9(base_epsilon);
    }
};

struct RangeFlags {
    double b_scale = 10.0;
    double cd_overdraw = 1.2;
    int attempt_cap = 10000;

    SamplerRanges ranges() const {
        SamplerRanges r;
        r.b_scale = b_scale;
        r.cd_overdraw = cd_overdraw;
        r.attempt_cap = attempt_cap;
        return r;
    }
    void attach(CLI::App* app) {
        app->add_option("--b-scale", b_scale, "ancilla thermal range factor")
            ->capture_default_str();
        app->add_option("--cd-overdraw", cd_overdraw, "correlation bracket widening")
            ->capture_default_str();
        app->add_option("--attempt-cap", attempt_cap, "rejection attempts per state")
            ->capture_default_str();
    }
    void describe(std::map<std::string, std::string>& config) const {
        config["b_scale"] = io::format_g9(b_scale);
        config["cd_overdraw"] = io::format_g9(cd_overdraw);
        config["attempt_cap"] = std::to_string(attempt_cap);
    }
};

std::string record_csv_header() {
    return "index,class,n_a,avg_qfi,coherence,log_negativity,param_json,seed\n";
}

std::string record_csv_row(int index, const SweepRecord& record) {
    nlohmann::json params(record.raw_parameters);
    std::string row = std::to_string(index);
    row += ',';
    row += class_name(record.class_tag);
    row += ',';
    row += io::format_g9(record.n_a);
    row += ',';
    row += io::format_g9(record.avg_qfi);
    row += ',';
    if (record.coherence) row += io::format_g9(*record.coherence);
    row += ',';
    if (record.log_negativity) row += io::format_g9(*record.log_negativity);
    row += ',';
    row += io::csv_escape(params.dump());
    row += ',';
    row += std::to_string(record.state_seed);
    row += '\n';
    return row;
}

std::string records_to_csv(const std::vector<SweepRecord>& records) {
    std::string csv = record_csv_header();
    for (std::size_t i = 0; i < records.size(); ++i)
        csv += record_csv_row(static_cast<int>(i), records[i]);
    return csv;
}

struct ParsedRange {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

ParsedRange parse_range(const std::string& text) {
    ParsedRange r;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(text);
    if (!(in >> r.lo >> colon1 >> r.hi >> colon2 >> r.step) || colon1 != ':' || colon2 != ':' ||
        r.step <= 0.0 || r.hi < r.lo)
        throw std::invalid_argument("malformed range (want lo:hi:step): " + text);
    return r;
}

std::string curve_csv(BoundCurve curve, const ParsedRange& range, std::optional<double> n_a) {
    std::string csv = "x,value\n";
    const int steps = static_cast<int>(std::floor((range.hi - range.lo) / range.step + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double x = range.lo + i * range.step;
        const double value = (curve == BoundCurve::EntangledVsNegativity)
                                 ? bound(curve, n_a.value(), x)
                                 : bound(curve, x);
        csv += io::format_g9(x);
        csv += ',';
        csv += io::format_g9(value);
        csv += '\n';
    }
    return csv;
}

// ------------------------------------------------------------------ sample

struct SampleArgs {
    std::string class_tag;
    double n_a = 1.0;
    int count = 100000;
    std::uint64_t seed = 1;
    std::string out;
    std::string dump_states;
    int workers = default_workers();
    QfiFlags qfi;
    RangeFlags ranges;
};

int cmd_sample(const SampleArgs& args, const std::string& command_line) {
    const StateClass tag = class_from_name(args.class_tag);
    const auto records =
        run_sweep(tag, args.n_a, args.count, args.seed, args.qfi.config(), args.ranges.ranges(),
                  args.workers);
    io::write_text_file(args.out, records_to_csv(records));

    io::RunManifest manifest;
    manifest.command_line = command_line;
    manifest.tool_version = kToolVersion;
    manifest.timestamp = timestamp_utc();
    manifest.seed = args.seed;
    manifest.config["class"] = args.class_tag;
    manifest.config["n_a"] = io::format_g9(args.n_a);
    manifest.config["count"] = std::to_string(args.count);
    manifest.config["workers"] = std::to_string(args.workers);
    args.qfi.describe(manifest.config);
    args.ranges.describe(manifest.config);
    manifest.add_output(args.out);

    if (!args.dump_states.empty()) {
        // full state JSONs, one per line, rebuilt from the recorded substreams
        std::string dump;
        for (const auto& record : records) {
            SubstreamRng rng(record.state_seed);
            const GaussianState state = sample_one(tag, record.n_a, rng, args.ranges.ranges());
            dump += to_json(state, class_name(tag), record.raw_parameters);
            dump += '\n';
        }
        io::write_text_file(args.dump_states, dump);
        manifest.add_output(args.dump_states);
    }
    manifest.write(args.out + ".manifest.json");
    return kExitOk;
}

// ------------------------------------------------------------------ bounds

struct BoundsArgs {
    std::string curve;
    std::string range;
    double n_a = 1.0;
    std::string out;
};

int cmd_bounds(const BoundsArgs& args, const std::string& command_line) {
    const BoundCurve curve = curve_from_name(args.curve);
    const ParsedRange range = parse_range(args.range);
    io::write_text_file(args.out, curve_csv(curve, range, args.n_a));

    io::RunManifest manifest;
    manifest.command_line = command_line;
    manifest.tool_version = kToolVersion;
    manifest.timestamp = timestamp_utc();
    manifest.config["curve"] = args.curve;
    manifest.config["range"] = args.range;
    if (curve == BoundCurve::EntangledVsNegativity)
        manifest.config["n_a"] = io::format_g9(args.n_a);
    manifest.add_output(args.out);
    manifest.write(args.out + ".manifest.json");
    return kExitOk;
}

// ------------------------------------------------------------------ figure

struct FigureArgs {
    int id = 2;
    int count = 100000;
    std::uint64_t seed = 1;
    double n_max = 5.0;
    std::string out_dir;
    int workers = default_workers();
    QfiFlags qfi;
    RangeFlags ranges;
};

struct FigureFile {
    std::string name;
    std::string role;  // scatter | curve
};

std::string gnuplot_script(int id, const std::vector<FigureFile>& files, const std::string& x_label) {
    std::string script = "# gnuplot script for figure " + std::to_string(id) + "\n";
    script += "set datafile separator ','\n";
    script += "set xlabel '" + x_label + "'\nset ylabel 'average QFI'\nset key top left\n";
    script += "plot \\\n";
    bool first = true;
    for (const auto& file : files) {
        if (!first) script += ", \\\n";
        first = false;
        if (file.role == "scatter")
            script += "  '" + file.name + "' every ::1 using " +
                      (id == 4 ? "5:4" : (id == 8 ? "6:4" : "3:4")) +
                      " with points pt 7 ps 0.3 title '" + file.name + "'";
        else
            script += "  '" + file.name + "' every ::1 using 1:2 with lines lw 2 title '" +
                      file.name + "'";
    }
    script += "\npause -1\n";
    return script;
}

int cmd_figure(const FigureArgs& args, const std::string& command_line) {
    namespace fs = std::filesystem;
    if (args.id < 2 || args.id > 8) throw std::invalid_argument("figure id must be in 2..8");
    std::error_code ec;
    fs::create_directories(args.out_dir, ec);
    if (ec) throw IoError("cannot create output directory: " + args.out_dir);

    const QfiConfig cfg = args.qfi.config();
    const SamplerRanges ranges = args.ranges.ranges();
    const std::string prefix = args.out_dir + "/fig" + std::to_string(args.id) + "_";
    std::vector<FigureFile> files;
    std::vector<std::string> written;

    const auto write_scatter = [&](const std::string& name,
                                   const std::vector<SweepRecord>& records) {
        const std::string path = prefix + name + ".csv";
        io::write_text_file(path, records_to_csv(records));
        files.push_back({fs::path(path).filename().string(), "scatter"});
        written.push_back(path);
    };
    const auto write_curve = [&](const std::string& name, BoundCurve curve, double lo, double hi,
                                 std::optional<double> n_a_fixed) {
        const std::string path = prefix + "curve_" + name + ".csv";
        ParsedRange range{lo, hi, (hi - lo) / 200.0};
        io::write_text_file(path, curve_csv(curve, range, n_a_fixed));
        files.push_back({fs::path(path).filename().string(), "curve"});
        written.push_back(path);
    };

    const std::vector<double> panel_energies = {3.0, 5.0, 10.0, 100.0};
    std::string x_label = "n_A";

    switch (args.id) {
        case 2:
        case 3:
        case 5:
        case 6:
        case 7: {
            const StateClass tag = args.id == 2   ? StateClass::SingleGeneral
                                   : args.id == 3 ? StateClass::SingleCoherent
                                   : args.id == 5 ? StateClass::TwoModeGeneral
                                   : args.id == 6 ? StateClass::SeparableStandard
                                                  : StateClass::Discordant;
            write_scatter("scatter", run_scatter(tag, args.n_max, args.count, args.seed, cfg,
                                                 ranges, args.workers));
            write_curve("upper-single", BoundCurve::UpperSingle, 0.0, args.n_max, std::nullopt);
            write_curve("lower-single", BoundCurve::LowerSingle, 0.0, args.n_max, std::nullopt);
            write_curve("coherent-max", BoundCurve::CoherentMax, 0.0, args.n_max, std::nullopt);
            if (args.id >= 5)
                write_curve("separable-max", BoundCurve::SeparableMax, 0.0, args.n_max,
                            std::nullopt);
            break;
        }
        case 4: {
            x_label = "coherence (bits)";
            for (double n_a : panel_energies) {
                const std::string tag = "panel_na" + io::format_g9(n_a);
                write_scatter(tag + "_general",
                              run_sweep(StateClass::SingleGeneral, n_a, args.count, args.seed, cfg,
                                        ranges, args.workers));
                write_scatter(tag + "_coherent",
                              run_sweep(StateClass::SingleCoherent, n_a, args.count, args.seed,
                                        cfg, ranges, args.workers));
            }
            break;
        }
        case 8: {
            x_label = "logarithmic negativity";
            for (double n_a : panel_energies) {
                const std::string tag = "panel_na" + io::format_g9(n_a);
                write_scatter(tag + "_entangled",
                              run_sweep(StateClass::EntangledStandard, n_a, args.count, args.seed,
                                        cfg, ranges, args.workers));
                const double e_n_max = 2.0 * std::asinh(std::sqrt(n_a));  // TMSV endpoint
                const std::string path = prefix + tag + "_curve_entangled-vs-negativity.csv";
                ParsedRange range{0.0, e_n_max, e_n_max / 200.0};
                io::write_text_file(path,
                                    curve_csv(BoundCurve::EntangledVsNegativity, range, n_a));
                files.push_back({fs::path(path).filename().string(), "curve"});
                written.push_back(path);
            }
            break;
        }
        default:
            break;
    }

    const std::string script_path = prefix + "plot.gp";
    io::write_text_file(script_path, gnuplot_script(args.id, files, x_label));
    written.push_back(script_path);

    io::RunManifest manifest;
    manifest.command_line = command_line;
    manifest.tool_version = kToolVersion;
    manifest.timestamp = timestamp_utc();
    manifest.seed = args.seed;
    manifest.config["figure"] = std::to_string(args.id);
    manifest.config["count"] = std::to_string(args.count);
    manifest.config["n_max"] = io::format_g9(args.n_max);
    manifest.config["workers"] = std::to_string(args.workers);
    args.qfi.describe(manifest.config);
    args.ranges.describe(manifest.config);
    for (const auto& path : written) manifest.add_output(path);
    manifest.write(prefix + "manifest.json");
    return kExitOk;
}

// --------------------------------------------------------------------- fit

struct FitArgs {
    std::string input;
    int bins = 25;
    double init_a1 = 0.0, init_a2 = 0.0, init_b1 = 0.0;
    bool init_given = false;
    int max_iter = 200;
    double tol = 1e-10;
    std::string out;
};

int cmd_fit(const FitArgs& args, const std::string& command_line) {
    const std::string csv = io::read_text_file(args.input);
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw InsufficientDataError("fit: empty input CSV");
    const auto header = io::csv_split(line);
    int col_n_a = -1, col_qfi = -1, col_en = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "n_a") col_n_a = static_cast<int>(i);
        if (header[i] == "avg_qfi") col_qfi = static_cast<int>(i);
        if (header[i] == "log_negativity") col_en = static_cast<int>(i);
    }
    if (col_n_a < 0 || col_qfi < 0 || col_en < 0)
        throw std::invalid_argument("fit: input CSV must carry n_a, avg_qfi, log_negativity");

    std::vector<SweepRecord> records;
    double n_a = 0.0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = io::csv_split(line);
        if (fields[col_en].empty())
            throw std::invalid_argument("fit: input rows lack log_negativity (entangled sweep required)");
        SweepRecord record;
        record.n_a = std::stod(fields[col_n_a]);
        record.avg_qfi = std::stod(fields[col_qfi]);
        record.log_negativity = std::stod(fields[col_en]);
        n_a = record.n_a;
        records.push_back(std::move(record));
    }
    if (records.empty()) throw InsufficientDataError("fit: no data rows");

    const auto envelope = lower_envelope(records, args.bins);
    double a1 = args.init_a1, a2 = args.init_a2, b1 = args.init_b1;
    if (!args.init_given) default_fit_init(envelope, a1, a2, b1);
    FitResult fit = fit_exponential(envelope, a1, a2, b1, args.max_iter, args.tol);
    fit.n_a = n_a;

    nlohmann::json j;
    j["A1"] = fit.a1;
    j["A2"] = fit.a2;
    j["B1"] = fit.b1;
    j["mse"] = fit.mse;
    j["delta_mse"] = fit.delta_mse;
    j["n_a"] = fit.n_a;
    j["n_points"] = fit.n_points;
    j["converged"] = fit.converged;
    const std::string report = j.dump(2) + "\n";
    if (args.out.empty()) {
        std::fputs(report.c_str(), stdout);
    } else {
        io::write_text_file(args.out, report);
        io::RunManifest manifest;
        manifest.command_line = command_line;
        manifest.tool_version = kToolVersion;
        manifest.timestamp = timestamp_utc();
        manifest.config["input"] = args.input;
        manifest.config["bins"] = std::to_string(args.bins);
        manifest.add_output(args.out);
        manifest.write(args.out + ".manifest.json");
    }
    return kExitOk;
}

// -------------------------------------------------------------- oracle-check

struct OracleArgs {
    int cutoff = 60;
    int cutoff_two = 40;
    double d_eps = 1e-3;
    std::string out;
};

int cmd_oracle_check(const OracleArgs& args, const std::string& command_line) {
    const auto checks = fock::run_oracle_checks(args.cutoff, args.cutoff_two, args.d_eps);
    nlohmann::json report = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& check : checks) {
        nlohmann::json j;
        j["quantity"] = check.quantity;
        j["recipe"] = check.recipe;
        j["gaussian_value"] = check.gaussian_value;
        j["fock_value"] = check.fock_value;
        j["abs_diff"] = check.abs_diff;
        j["tolerance"] = check.tolerance;
        j["cutoff"] = check.cutoff;
        j["pass"] = check.pass;
        if (!check.error.empty()) j["error"] = check.error;
        report.push_back(j);
        if (!check.pass) all_pass = false;
    }
    const std::string text = report.dump(2) + "\n";
    std::fputs(text.c_str(), stdout);
    if (!args.out.empty()) {
        io::write_text_file(args.out, text);
        io::RunManifest manifest;
        manifest.command_line = command_line;
        manifest.tool_version = kToolVersion;
        manifest.timestamp = timestamp_utc();
        manifest.config["cutoff"] = std::to_string(args.cutoff);
        manifest.config["cutoff_two"] = std::to_string(args.cutoff_two);
        manifest.config["d_epsilon"] = io::format_g9(args.d_eps);
        manifest.add_output(args.out);
        manifest.write(args.out + ".manifest.json");
    }
    if (!all_pass) {
        for (const auto& check : checks)
            if (!check.pass)
                std::fprintf(stderr, "oracle disagreement: %s %s\n", check.quantity.c_str(),
                             check.recipe.c_str());
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Gaussian-state squeezing-estimation toolkit"};
    app.set_version_flag("--version", kToolVersion);
    app.set_config("--config", "", "preset flags from a key = value file");
    app.require_subcommand(1);

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "sample one class at fixed n_A and sweep QFI");
    sample->add_option("--class", sample_args.class_tag, "state class tag")->required();
    sample->add_option("--n-a", sample_args.n_a, "mode-A mean photon number")->required();
    sample->add_option("--count", sample_args.count, "number of states")->capture_default_str();
    sample->add_option("--seed", sample_args.seed, "sweep seed")->capture_default_str();
    sample->add_option("--out", sample_args.out, "output CSV path")->required();
    sample->add_option("--dump-states", sample_args.dump_states,
                       "also write full state JSONs, one per line");
    sample->add_option("--workers", sample_args.workers, "worker threads")->capture_default_str();
    sample_args.qfi.attach(sample);
    sample_args.ranges.attach(sample);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound curve on a grid");
    bounds->add_option("--curve", bounds_args.curve, "curve tag")->required();
    bounds->add_option("--range", bounds_args.range, "grid as lo:hi:step")->required();
    bounds->add_option("--n-a", bounds_args.n_a, "fixed n_A for the entangled curve")
        ->capture_default_str();
    bounds->add_option("--out", bounds_args.out, "output CSV path")->required();

    FigureArgs figure_args;
    auto* figure = app.add_subcommand("figure", "reproduce a figure's data and plot script");
    figure->add_option("--id", figure_args.id, "figure id in 2..8")->required();
    figure->add_option("--count", figure_args.count, "samples per scatter")->capture_default_str();
    figure->add_option("--seed", figure_args.seed, "seed")->capture_default_str();
    figure->add_option("--n-max", figure_args.n_max, "energy range for scatter figures")
        ->capture_default_str();
    figure->add_option("--out-dir", figure_args.out_dir, "output directory")->required();
    figure->add_option("--workers", figure_args.workers, "worker threads")->capture_default_str();
    figure_args.qfi.attach(figure);
    figure_args.ranges.attach(figure);

    FitArgs fit_args;
    auto* fit = app.add_subcommand("fit", "exponential lower-envelope regression");
    fit->add_option("--input", fit_args.input, "sample CSV from an entangled sweep")->required();
    fit->add_option("--bins", fit_args.bins, "envelope bins")->capture_default_str();
    auto* a1_opt = fit->add_option("--init-a1", fit_args.init_a1, "initial A1");
    fit->add_option("--init-a2", fit_args.init_a2, "initial A2")->needs(a1_opt);
    fit->add_option("--init-b1", fit_args.init_b1, "initial B1")->needs(a1_opt);
    fit->add_option("--max-iter", fit_args.max_iter, "max Gauss-Newton iterations")
        ->capture_default_str();
    fit->add_option("--tol", fit_args.tol, "parameter update tolerance")->capture_default_str();
    fit->add_option("--out", fit_args.out, "output JSON path (stdout when omitted)");

    OracleArgs oracle_args;
    auto* oracle = app.add_subcommand("oracle-check", "Gaussian vs truncated-Fock agreement");
    oracle->add_option("--cutoff", oracle_args.cutoff, "single-mode Fock cutoff")
        ->capture_default_str();
    oracle->add_option("--cutoff-two", oracle_args.cutoff_two, "per-mode two-mode cutoff")
        ->capture_default_str();
    oracle->add_option("--d-epsilon", oracle_args.d_eps, "finite-difference step")
        ->capture_default_str();
    oracle->add_option("--out", oracle_args.out, "also write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    fit_args.init_given = a1_opt->count() > 0;
    const std::string command_line = join_args(argc, argv);

    try {
        if (sample->parsed()) return cmd_sample(sample_args, command_line);
        if (bounds->parsed()) return cmd_bounds(bounds_args, command_line);
        if (figure->parsed()) return cmd_figure(figure_args, command_line);
        if (fit->parsed()) return cmd_fit(fit_args, command_line);
        if (oracle->parsed()) return cmd_oracle_check(oracle_args, command_line);
    } catch (const SamplingExhaustedError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const InsufficientDataError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const FitDegenerateError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    } catch (const CutoffTooSmallError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return kExitConfig;
}

}  // namespace gqfi::cli
