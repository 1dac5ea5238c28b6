#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "examples.hpp"
#include "polyspec/errors.hpp"
#include "polyspec/growth.hpp"
#include "polyspec/polyhedra.hpp"
#include "polyspec/verdicts.hpp"
#include "report_io.hpp"
#include "run_config.hpp"

namespace cli {

using namespace polyspec;

namespace {

constexpr int kExitGoldenMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitResource = 5;

// flag bundles shared by several subcommands; Option pointers let the
// overlay step distinguish "flag given" from "default value"

struct CommonFlags {
    std::string config_path;
    std::string out_dir = ".";
    bool no_timestamp = false;
    std::vector<std::string> formats;

    std::string preset = "a2";
    double multiplicity = 1.0;
    int n = 5;
    std::string rhos_text = "1/2,1/2";

    CLI::Option* config_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* formats_opt = nullptr;
    CLI::Option* preset_opt = nullptr;
    CLI::Option* mult_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* rhos_opt = nullptr;
};

void attach_output(CLI::App* cmd, CommonFlags& f) {
    f.config_opt = cmd->add_option("--config", f.config_path,
                                   "JSON run configuration; explicit flags override it");
    f.out_opt = cmd->add_option("--out", f.out_dir, "output directory")->capture_default_str();
    cmd->add_flag("--no-timestamp", f.no_timestamp,
                  "omit the generated_at field so reruns are byte-identical");
    f.formats_opt = cmd->add_option("--format", f.formats,
                                    "artifact formats to write: json, csv, text (default: all)")
                        ->delimiter(',');
}

void attach_preset(CLI::App* cmd, CommonFlags& f) {
    f.preset_opt = cmd->add_option("--preset", f.preset, "root system preset: a2, b2, product")
                       ->capture_default_str();
    f.mult_opt = cmd->add_option("--multiplicity", f.multiplicity, "common root multiplicity m (a2)")
                     ->capture_default_str();
    f.n_opt = cmd->add_option("--n", f.n, "defining parameter n (b2)")->capture_default_str();
    f.rhos_opt = cmd->add_option("--rhos", f.rhos_text,
                                 "comma-separated factor rho values (product)")
                     ->capture_default_str();
}

struct GeneratorFlags {
    std::string realization = "sln";
    std::vector<std::string> matrices;
    bool no_inverses = false;
    int max_word_length = 8;
    int element_cap = 0;

    CLI::Option* realization_opt = nullptr;
    CLI::Option* matrices_opt = nullptr;
    CLI::Option* length_opt = nullptr;
    CLI::Option* cap_opt = nullptr;
};

void attach_generators(CLI::App* cmd, GeneratorFlags& f) {
    f.realization_opt = cmd->add_option("--realization", f.realization,
                                        "matrix realization: sln or product_sl2")
                            ->capture_default_str();
    f.matrices_opt = cmd->add_option(
        "--matrix", f.matrices,
        "generator matrix, rows ';'-separated, entries ','-separated, product "
        "factors '|'-separated; rational entries are kept exact (repeatable)");
    cmd->add_flag("--no-inverses", f.no_inverses, "enumerate the positive monoid only");
    f.length_opt = cmd->add_option("--max-word-length", f.max_word_length, "word ball radius")
                       ->capture_default_str();
    f.cap_opt = cmd->add_option("--element-cap", f.element_cap,
                                "abort once the ball holds this many elements (default 10000000)");
}

struct AnalysisFlags {
    std::string basis = "std";
    std::string mode = "plain";
    std::string window_text;
    double window_fraction = 0.6;
    double aperture = 0.1;
    int grid = 16;
    double metric_scale = 1.0;
    double margin = 0.05;

    CLI::Option* basis_opt = nullptr;
    CLI::Option* mode_opt = nullptr;
    CLI::Option* window_opt = nullptr;
    CLI::Option* fraction_opt = nullptr;
    CLI::Option* aperture_opt = nullptr;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* scale_opt = nullptr;
    CLI::Option* margin_opt = nullptr;
};

void attach_basis(CLI::App* cmd, AnalysisFlags& f) {
    f.basis_opt = cmd->add_option("--basis", f.basis,
                                  "coordinate basis for functionals: std or root")
                      ->capture_default_str();
}

void attach_fit(CLI::App* cmd, AnalysisFlags& f) {
    f.window_opt = cmd->add_option("--window", f.window_text,
                                   "fit window as lo:hi (default: top 60% of the radius range)");
    f.fraction_opt = cmd->add_option("--window-fraction", f.window_fraction,
                                     "fraction of the radius range to fit when no window is given")
                         ->capture_default_str();
}

RunConfig resolve(const CommonFlags& f) {
    RunConfig cfg;
    if (f.config_opt->count()) cfg = load_config(f.config_path);
    if (f.preset_opt && f.preset_opt->count()) cfg.root_system.preset = f.preset;
    if (f.mult_opt && f.mult_opt->count()) cfg.root_system.multiplicity = f.multiplicity;
    if (f.n_opt && f.n_opt->count()) cfg.root_system.n = f.n;
    if (f.rhos_opt && f.rhos_opt->count()) {
        cfg.root_system.rhos.clear();
        for (const std::string& part : split_list(f.rhos_text, ','))
            cfg.root_system.rhos.push_back(parse_scalar(part));
    }
    if (f.out_opt->count()) cfg.output.dir = f.out_dir;
    if (f.no_timestamp) cfg.output.timestamp = false;
    if (f.formats_opt->count()) {
        cfg.output.json = cfg.output.csv = cfg.output.text = false;
        for (const std::string& fmt : f.formats) {
            if (fmt == "json")
                cfg.output.json = true;
            else if (fmt == "csv")
                cfg.output.csv = true;
            else if (fmt == "text")
                cfg.output.text = true;
            else
                throw ParameterError("unknown format '" + fmt + "'");
        }
    }
    return cfg;
}

void overlay_generators(RunConfig& cfg, const GeneratorFlags& f) {
    if (f.matrices_opt->count()) {
        cfg.generators = GeneratorsConfig{};
        cfg.generators.present = true;
        cfg.generators.realization = f.realization;
        for (const std::string& text : f.matrices)
            cfg.generators.generators.push_back(parse_matrix_arg(f.realization, text));
    } else if (f.realization_opt->count() && !cfg.generators.present) {
        throw ParameterError("--realization without --matrix or a config generators block");
    }
    if (f.no_inverses) cfg.generators.include_inverses = false;
    if (f.length_opt->count()) cfg.generators.max_word_length = f.max_word_length;
    if (f.cap_opt->count()) {
        if (f.element_cap <= 0) throw ParameterError("--element-cap must be positive");
        cfg.generators.element_cap = static_cast<std::size_t>(f.element_cap);
    }
}

void overlay_analysis(RunConfig& cfg, const AnalysisFlags& f) {
    if (f.basis_opt && f.basis_opt->count()) cfg.analysis.basis = f.basis;
    if (f.mode_opt && f.mode_opt->count()) cfg.analysis.mode = f.mode;
    if (f.window_opt && f.window_opt->count()) {
        const std::vector<std::string> parts = split_list(f.window_text, ':');
        if (parts.size() != 2) throw ParameterError("--window expects lo:hi");
        WindowConfig w;
        w.lo = parse_scalar(parts[0]);
        w.hi = parse_scalar(parts[1]);
        cfg.analysis.window = w;
    }
    if (f.fraction_opt && f.fraction_opt->count()) cfg.analysis.window_fraction = f.window_fraction;
    if (f.aperture_opt && f.aperture_opt->count()) cfg.analysis.aperture = f.aperture;
    if (f.grid_opt && f.grid_opt->count()) cfg.analysis.direction_grid = f.grid;
    if (f.scale_opt && f.scale_opt->count()) cfg.analysis.metric_scale = f.metric_scale;
    if (f.margin_opt && f.margin_opt->count()) cfg.analysis.margin = f.margin;
}

OrbitData run_enumeration(const RunConfig& cfg) {
    if (!cfg.generators.present)
        throw ParameterError("this command needs generators (--matrix or a config block)");
    return enumerate_ball(cfg.generators.generators, cfg.generators.include_inverses,
                          cfg.generators.max_word_length, cfg.generators.element_cap);
}

std::optional<FitWindow> fit_window(const RunConfig& cfg) {
    if (!cfg.analysis.window) return std::nullopt;
    return FitWindow{cfg.analysis.window->lo, cfg.analysis.window->hi};
}

std::string word_text(const std::vector<int>& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(word[i]);
    }
    return s;
}

std::string estimate_text(const GrowthEstimate& e) {
    return e.minus_infinity ? "-inf" : fmt_num(e.value);
}

// ---- subcommands ----------------------------------------------------------

void cmd_rootsys(const RunConfig& cfg) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;
    const WeylGroup w = make_weyl_group(rs);
    const bool applicable = limit_cone_criterion_applicable(rs);
    const std::string cone = rs.kind == PresetKind::A2Family ? "the ray through rho"
                                                             : "the full dominant cone";

    TextReport t;
    t.line("command", "rootsys");
    t.line("preset", rs.describe());
    if (bp.warning) t.line("warning", *bp.warning);
    t.line("rank", std::to_string(rs.rank));
    t.raw("simple roots");
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i)
        t.line("  alpha_" + std::to_string(i + 1), fmt_coords(rs.simple_roots[i].std_coords));
    t.raw("positive roots");
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        t.line("  alpha_" + std::to_string(i + 1),
               fmt_coords(rs.positive_roots[i].functional.std_coords) + "  multiplicity " +
                   fmt_num(rs.positive_roots[i].multiplicity));
    t.line("rho", fmt_coords(rs.rho.std_coords));
    t.line("rho root coords", fmt_coords(rs.rho.root_coords));
    t.line("|W|", std::to_string(w.elements.size()));
    t.line("hermitian cone", cone);
    t.line("limit-cone criterion", applicable ? "applicable" : "not applicable");

    Json payload;
    payload["preset"] = rs.describe();
    if (bp.warning) payload["warning"] = *bp.warning;
    payload["rank"] = rs.rank;
    Json roots = Json::array();
    for (const PositiveRoot& r : rs.positive_roots) {
        Json jr = json_functional(r.functional);
        jr["multiplicity"] = r.multiplicity;
        roots.push_back(jr);
    }
    payload["positive_roots"] = roots;
    payload["rho"] = json_functional(rs.rho);
    payload["weyl_order"] = w.elements.size();
    payload["hermitian_cone"] = cone;
    payload["limit_cone_applicable"] = applicable;

    OutputSink sink(cfg.output, "rootsys");
    sink.emit_json(payload);
    sink.emit_text(t);
}

void cmd_norm(const RunConfig& cfg, const std::string& lambda_text, const std::string& mu_text) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;
    const WeylGroup w = make_weyl_group(rs);
    const Functional lambda = parse_functional(rs, lambda_text, cfg.analysis.basis);
    const Functional mu = parse_functional(rs, mu_text, cfg.analysis.basis);

    const double value = poly_norm(rs, w, lambda, mu);
    const double check = poly_norm_oracle(rs, w, lambda, mu);
    const bool member = membership(rs, w, lambda, mu);

    TextReport t;
    t.line("command", "norm");
    t.line("preset", rs.describe());
    t.line("lambda", fmt_coords(lambda.std_coords));
    t.line("mu", fmt_coords(mu.std_coords));
    t.line("gauge", fmt_num(value));
    t.line("gauge (orbit route)", fmt_num(check));
    t.line("member of conv(W mu)", member ? "yes" : "no");

    Json payload;
    payload["preset"] = rs.describe();
    payload["lambda"] = json_functional(lambda);
    payload["mu"] = json_functional(mu);
    payload["gauge"] = json_num(value);
    payload["gauge_orbit_route"] = json_num(check);
    payload["member"] = member;

    OutputSink sink(cfg.output, "norm");
    sink.emit_json(payload);
    sink.emit_text(t);
}

void cmd_hull(const RunConfig& cfg, const std::string& mu_text) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;
    const WeylGroup w = make_weyl_group(rs);
    const Functional mu = parse_functional(rs, mu_text, cfg.analysis.basis);
    const HullDescription h = hull(rs, w, mu);

    TextReport t;
    t.line("command", "hull");
    t.line("preset", rs.describe());
    t.line("mu", fmt_coords(mu.std_coords));
    t.line("vertices", std::to_string(h.vertices.size()));
    for (std::size_t i = 0; i < h.vertices.size(); ++i)
        t.line("  v" + std::to_string(i), fmt_coords(h.vertices[i].std_coords));
    t.line("facet caps", fmt_coords(h.facet_caps));

    std::string csv = "vertex";
    for (int i = 0; i < rs.rank; ++i) csv += ",x_" + std::to_string(i + 1);
    csv += "\n";
    for (std::size_t i = 0; i < h.vertices.size(); ++i) {
        csv += std::to_string(i);
        for (int k = 0; k < rs.rank; ++k) csv += "," + csv_num(h.vertices[i].std_coords(k));
        csv += "\n";
    }

    Json payload;
    payload["preset"] = rs.describe();
    payload["mu"] = json_functional(mu);
    Json verts = Json::array();
    for (const Functional& v : h.vertices) verts.push_back(json_functional(v));
    payload["vertices"] = verts;
    payload["facet_caps"] =
        std::vector<double>(h.facet_caps.data(), h.facet_caps.data() + h.facet_caps.size());

    OutputSink sink(cfg.output, "hull");
    sink.emit_json(payload);
    sink.emit_csv("hull.csv", csv);
    sink.emit_text(t);
}

void cmd_intersect(const RunConfig& cfg, const std::string& set_text,
                   const std::vector<std::string>& mu_names) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;

    std::vector<Functional> family;
    if (!set_text.empty())
        for (const std::string& name : split_list(set_text, ','))
            family.push_back(parse_functional(rs, name, cfg.analysis.basis));
    for (const std::string& text : mu_names)
        family.push_back(parse_functional(rs, text, cfg.analysis.basis));
    if (family.empty()) throw ParameterError("intersect needs --set names or --mu functionals");

    const Functional meet = intersect(rs, family);
    std::string annotation;
    for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
        if (approx_equal(meet.std_coords, rs.positive_roots[i].functional.std_coords, 1e-12))
            annotation = "  = alpha_" + std::to_string(i + 1);

    TextReport t;
    t.line("command", "intersect");
    t.line("preset", rs.describe());
    t.line("family size", std::to_string(family.size()));
    for (std::size_t i = 0; i < family.size(); ++i)
        t.line("  mu" + std::to_string(i + 1), fmt_coords(family[i].std_coords));
    t.line("meet", fmt_coords(meet.std_coords) + annotation);
    t.line("meet root coords", fmt_coords(meet.root_coords));

    Json payload;
    payload["preset"] = rs.describe();
    Json fam = Json::array();
    for (const Functional& f : family) fam.push_back(json_functional(f));
    payload["family"] = fam;
    payload["meet"] = json_functional(meet);

    OutputSink sink(cfg.output, "intersect");
    sink.emit_json(payload);
    sink.emit_text(t);
}

std::string samples_csv(const OrbitData& data) {
    const Eigen::Index dim = data.samples.empty() ? 0 : data.samples.front().mu_plus.size();
    std::string csv = "word,length";
    for (Eigen::Index i = 0; i < dim; ++i) csv += ",mu_" + std::to_string(i + 1);
    csv += "\n";
    for (const OrbitSample& s : data.samples) {
        csv += word_text(s.word) + "," + std::to_string(s.word_length());
        for (Eigen::Index i = 0; i < s.mu_plus.size(); ++i) csv += "," + csv_num(s.mu_plus(i));
        csv += "\n";
    }
    return csv;
}

void describe_orbit(TextReport& t, Json& payload, const OrbitData& data) {
    t.line("realization", data.realization == Realization::SLn ? "sln" : "product_sl2");
    t.line("generators", std::to_string(data.generator_count));
    t.line("inverses included", data.include_inverses ? "yes" : "no");
    t.line("dedup", data.exact ? "exact rational" : "freely reduced words");
    if (data.warning) t.line("warning", *data.warning);
    t.line("samples", std::to_string(data.samples.size()));

    std::vector<std::size_t> by_length;
    for (const OrbitSample& s : data.samples) {
        const std::size_t len = static_cast<std::size_t>(s.word_length());
        if (by_length.size() <= len) by_length.resize(len + 1, 0);
        ++by_length[len];
    }
    std::size_t cumulative = 0;
    t.raw("ball growth (length, new, cumulative)");
    for (std::size_t len = 0; len < by_length.size(); ++len) {
        cumulative += by_length[len];
        t.line("  L = " + std::to_string(len),
               std::to_string(by_length[len]) + "  " + std::to_string(cumulative));
    }

    payload["realization"] = data.realization == Realization::SLn ? "sln" : "product_sl2";
    payload["generator_count"] = data.generator_count;
    payload["include_inverses"] = data.include_inverses;
    payload["exact_dedup"] = data.exact;
    if (data.warning) payload["warning"] = *data.warning;
    payload["sample_count"] = data.samples.size();
    payload["count_by_length"] = by_length;
}

void cmd_orbit(const RunConfig& cfg) {
    const OrbitData data = run_enumeration(cfg);

    TextReport t;
    t.line("command", "orbit");
    Json payload;
    describe_orbit(t, payload, data);

    OutputSink sink(cfg.output, "orbit");
    sink.emit_json(payload);
    sink.emit_csv("samples.csv", samples_csv(data));
    sink.emit_text(t);
}

void cmd_exponent(const RunConfig& cfg, const std::string& mu_text) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;
    const OrbitData data = run_enumeration(cfg);
    const Functional mu = parse_functional(rs, mu_text, cfg.analysis.basis);
    const ExponentMode mode =
        cfg.analysis.mode == "modified" ? ExponentMode::Modified : ExponentMode::Plain;

    const GrowthEstimate est =
        critical_exponent(data, rs, mu, mode, fit_window(cfg), cfg.analysis.window_fraction);

    TextReport t;
    t.line("command", "exponent");
    t.line("preset", rs.describe());
    t.line("mu", fmt_coords(mu.std_coords));
    t.line("mode", cfg.analysis.mode);
    t.line("estimate", estimate_text(est));
    t.line("fit window", "[" + fmt_num(est.window.lo) + ", " + fmt_num(est.window.hi) + "]");
    t.line("window samples", std::to_string(est.window_samples));
    t.line("total samples", std::to_string(est.total_samples));
    t.line("fit residual", fmt_num(est.residual));
    if (est.degenerate_mu) t.line("note", "mu vanishes on part of the chamber");
    if (data.warning) t.line("warning", *data.warning);

    Json payload;
    payload["preset"] = rs.describe();
    payload["mu"] = json_functional(mu);
    payload["mode"] = cfg.analysis.mode;
    payload["estimate"] = json_estimate(est);
    if (data.warning) payload["warning"] = *data.warning;

    OutputSink sink(cfg.output, "exponent");
    sink.emit_json(payload);
    sink.emit_csv("samples.csv", samples_csv(data));
    sink.emit_text(t);
}

void cmd_gif(const RunConfig& cfg) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const OrbitData data = run_enumeration(cfg);

    // extreme rays of the dominant cone in raw realization coordinates
    Eigen::VectorXd r1, r2;
    if (data.realization == Realization::SLn && data.dim == 3) {
        r1.resize(3);
        r1 << 2, -1, -1;
        r2.resize(3);
        r2 << 1, 1, -2;
    } else if (data.realization == Realization::SLn && data.dim == 2) {
        r1.resize(2);
        r1 << 1, -1;
        r2 = r1;
    } else if (data.realization == Realization::ProductSL2 && data.dim == 2) {
        r1 = Eigen::VectorXd::Zero(2);
        r1(0) = 1;
        r2 = Eigen::VectorXd::Zero(2);
        r2(1) = 1;
    } else if (data.realization == Realization::ProductSL2 && data.dim == 1) {
        r1 = Eigen::VectorXd::Ones(1);
        r2 = r1;
    } else {
        throw ParameterError("direction grid supports two-dimensional flats only");
    }
    r1.normalize();
    r2.normalize();

    const bool degenerate = (r1 - r2).norm() < 1e-14;
    const int grid = degenerate ? 1 : std::max(2, cfg.analysis.direction_grid);

    std::string csv = "t";
    for (int i = 0; i < data.samples.front().mu_plus.size(); ++i)
        csv += ",d_" + std::to_string(i + 1);
    csv += ",estimate,window_samples,residual,status\n";

    TextReport t;
    t.line("command", "gif");
    t.line("preset", bp.rs.describe());
    t.line("aperture", fmt_num(cfg.analysis.aperture));
    t.line("directions", std::to_string(grid));
    Json rows = Json::array();
    for (int i = 0; i < grid; ++i) {
        const double tt = grid == 1 ? 0.0 : static_cast<double>(i) / (grid - 1);
        Eigen::VectorXd dir = ((1.0 - tt) * r1 + tt * r2).normalized();
        Json row;
        row["t"] = tt;
        row["direction"] = std::vector<double>(dir.data(), dir.data() + dir.size());
        std::string cell, status;
        try {
            const GrowthEstimate est = directional_growth(data, dir, cfg.analysis.aperture,
                                                          fit_window(cfg),
                                                          cfg.analysis.window_fraction);
            status = est.minus_infinity ? "minus_inf" : "ok";
            cell = estimate_text(est);
            row["estimate"] = est.minus_infinity ? Json("-inf") : json_num(est.value);
            row["window_samples"] = est.window_samples;
            row["residual"] = est.residual;
            csv += csv_num(tt);
            for (Eigen::Index k = 0; k < dir.size(); ++k) csv += "," + csv_num(dir(k));
            csv += "," + std::string(est.minus_infinity ? "-inf" : csv_num(est.value)) + "," +
                   std::to_string(est.window_samples) + "," + csv_num(est.residual) + "," +
                   status + "\n";
        } catch (const InsufficientDataError&) {
            status = "insufficient";
            cell = "n/a";
            row["estimate"] = nullptr;
            csv += csv_num(tt);
            for (Eigen::Index k = 0; k < dir.size(); ++k) csv += "," + csv_num(dir(k));
            csv += ",,0,,insufficient\n";
        }
        row["status"] = status;
        rows.push_back(row);
        t.line("  t = " + fmt_num(tt), fmt_coords(dir) + "  " + cell);
    }
    if (data.warning) t.line("warning", *data.warning);

    Json payload;
    payload["preset"] = bp.rs.describe();
    payload["aperture"] = cfg.analysis.aperture;
    payload["rows"] = rows;
    if (data.warning) payload["warning"] = *data.warning;

    OutputSink sink(cfg.output, "gif");
    sink.emit_json(payload);
    sink.emit_csv("grid.csv", csv);
    sink.emit_text(t);
}

// ---- verdict assembly -----------------------------------------------------

void render_verdict(const RunConfig& cfg, const RootSystem& rs, const SpectralVerdict& v) {
    TextReport t;
    t.line("command", "verdict");
    t.line("preset", rs.describe());
    t.line("delta-prime source", to_string(v.source));
    if (v.source == DeltaSource::Estimated)
        t.line("rigor", "heuristic: exponents come from a finite ball fit");
    t.blank();
    for (const ThetaEntry& e : v.exponents) {
        t.line("mu", fmt_coords(e.mu.std_coords));
        t.line("  delta-prime", fmt_num(e.delta_prime));
        t.line("  theta", fmt_num(e.theta.value) +
                              (e.theta.hermitian ? "" : "  (lower bound; mu not symmetric)"));
    }
    t.blank();
    t.line("tempered", v.temperedness.tempered ? "yes" : "no");
    t.line("theta(rho)", fmt_num(v.temperedness.theta_rho));
    t.line("p range", "[" + fmt_num(v.temperedness.p_lower) + ", " +
                          fmt_num(v.temperedness.p_upper) + "]");
    t.line("p even bound", fmt_num(v.temperedness.p_upper_even));
    t.line("|rho|^2", fmt_num(v.temperedness.rho_norm_sq));
    if (v.temperedness.laplace_bottom)
        t.line("Laplace bottom", fmt_num(*v.temperedness.laplace_bottom));
    if (v.laplace)
        t.line("Laplace interval", "[" + fmt_num(v.laplace->lo) + ", " + fmt_num(v.laplace->hi) +
                                       "]  (metric scale " + fmt_num(cfg.analysis.metric_scale) +
                                       ")");
    for (std::size_t i = 0; i < v.special_points.size(); ++i)
        t.line("special point " + std::to_string(i + 1),
               fmt_coords(v.special_points[i].std_coords));
    if (v.limit_cone) t.line("limit-cone verdict", to_string(*v.limit_cone));
    if (!v.notes.empty()) {
        t.blank();
        t.raw("notes");
        for (const std::string& note : v.notes) t.raw("  " + note);
    }

    Json payload;
    payload["preset"] = rs.describe();
    payload["source"] = to_string(v.source);
    Json exps = Json::array();
    for (const ThetaEntry& e : v.exponents) {
        Json je;
        je["mu"] = json_functional(e.mu);
        je["delta_prime"] = json_num(e.delta_prime);
        je["theta"] = json_num(e.theta.value);
        je["hermitian"] = e.theta.hermitian;
        exps.push_back(je);
    }
    payload["exponents"] = exps;
    Json temp;
    temp["theta_rho"] = json_num(v.temperedness.theta_rho);
    temp["tempered"] = v.temperedness.tempered;
    temp["p_lower"] = v.temperedness.p_lower;
    temp["p_upper"] = json_num(v.temperedness.p_upper);
    temp["p_upper_even"] = json_num(v.temperedness.p_upper_even);
    temp["rho_norm_sq"] = v.temperedness.rho_norm_sq;
    if (v.temperedness.laplace_bottom) temp["laplace_bottom"] = *v.temperedness.laplace_bottom;
    payload["temperedness"] = temp;
    if (v.laplace) {
        payload["laplace_interval"] = {{"lo", v.laplace->lo},
                                       {"hi", v.laplace->hi},
                                       {"metric_scale", cfg.analysis.metric_scale}};
    }
    Json pts = Json::array();
    for (const Functional& p : v.special_points) pts.push_back(json_functional(p));
    payload["special_points"] = pts;
    if (v.limit_cone) payload["limit_cone"] = to_string(*v.limit_cone);
    payload["notes"] = v.notes;

    OutputSink sink(cfg.output, "verdict");
    sink.emit_json(payload);
    sink.emit_text(t);
}

void cmd_verdict(const RunConfig& cfg, const std::string& source, double delta_prime,
                 bool have_delta_prime, const std::string& delta_text,
                 const std::string& mu_text) {
    const BuiltPreset bp = build_preset(cfg.root_system);
    const RootSystem& rs = bp.rs;
    const WeylGroup w = make_weyl_group(rs);
    SpectralVerdict v;

    if (source == "analytic") {
        v.source = DeltaSource::Analytic;
        if (rs.kind == PresetKind::A2Family) {
            if (!have_delta_prime)
                throw ParameterError("analytic a2 verdict needs --delta-prime for rho");
            v.exponents.push_back(
                {rs.rho, delta_prime, theta_from_delta_prime(rs, w, rs.rho, delta_prime)});
            v.temperedness = temperedness_report(rs, delta_prime);
            v.laplace = laplace_bottom_interval(rs, delta_prime, rs.rho, cfg.analysis.metric_scale);
            const A2BoundaryPoint pt = a2_boundary_point(rs, delta_prime);
            v.special_points.push_back(pt.point);
            v.limit_cone = limit_cone_temperedness(rs, LimitConeStats{{}, 1.0},
                                                   cfg.analysis.margin);
            v.notes.push_back("boundary point " + fmt_num(pt.theta) + "·rho, gauge cap " +
                              fmt_num(pt.cap));
            v.notes.push_back(pt.caveat);
        } else if (rs.kind == PresetKind::B2SO2n) {
            const Functional mu =
                parse_functional(rs, mu_text.empty() ? "a3" : mu_text, cfg.analysis.basis);
            const So2nReference ref =
                so2n_reference(rs, mu.std_coords(0), mu.std_coords(1));
            const So2nReference at_rho =
                so2n_reference(rs, rs.rho.std_coords(0), rs.rho.std_coords(1));
            v.exponents.push_back(
                {mu, ref.delta_prime, theta_from_delta_prime(rs, w, mu, ref.delta_prime)});
            v.exponents.push_back({rs.rho, at_rho.delta_prime,
                                   theta_from_delta_prime(rs, w, rs.rho, at_rho.delta_prime)});
            v.temperedness = temperedness_report(rs, at_rho.delta_prime);
            v.laplace =
                laplace_bottom_interval(rs, ref.delta_prime, mu, cfg.analysis.metric_scale);
            v.special_points.push_back(ref.mu_gamma);
            // the reference lattice's cone is the v2 = 0 axis, a chamber wall
            v.limit_cone = limit_cone_temperedness(rs, LimitConeStats{{}, 0.0},
                                                   cfg.analysis.margin);
            v.notes.push_back("psi on the v2 = 0 axis has slope " + fmt_num(ref.psi_axis_slope));
            v.notes.push_back("decay cap " + property_t_functional(rs).cap_text);
        } else {
            if (delta_text.empty())
                throw ParameterError("analytic product verdict needs --delta d1,d2");
            const std::vector<std::string> parts = split_list(delta_text, ',');
            if (parts.size() != rs.product_rhos.size())
                throw ParameterError("--delta needs one value per factor");
            if (parts.size() != 2)
                throw ParameterError("analytic product verdict covers two factors");
            const double d1 = parse_scalar(parts[0]);
            const double d2 = parse_scalar(parts[1]);
            const double rho1 = rs.product_rhos[0];
            const double rho2 = rs.product_rhos[1];
            const Functional mu =
                parse_functional(rs, mu_text.empty() ? "rho" : mu_text, cfg.analysis.basis);
            const ProductReference ref =
                product_reference(d1, d2, rho1, rho2, mu.std_coords(0), mu.std_coords(1));

            // unclamped exponent for the report; walls follow the gauge rules
            double dp = -kInfNorm;
            const double excess[2] = {d1 - rho1, d2 - rho2};
            for (int i = 0; i < 2; ++i) {
                if (mu.std_coords(i) > 1e-12)
                    dp = std::max(dp, excess[i] / mu.std_coords(i));
                else if (excess[i] > 1e-9)
                    dp = kInfNorm;
            }
            v.exponents.push_back({mu, dp, theta_from_delta_prime(rs, w, mu, dp)});
            v.temperedness = temperedness_report(rs, ref.tempered ? 0.0 : dp);
            v.temperedness.tempered = ref.tempered;
            if (std::isfinite(dp))
                v.laplace = laplace_bottom_interval(rs, dp, mu, cfg.analysis.metric_scale);
            v.limit_cone =
                limit_cone_temperedness(rs, LimitConeStats{{}, 0.0}, cfg.analysis.margin);
            v.notes.push_back("psi(H) = " + fmt_num(ref.psi_slope_1) + "·|H_1| + " +
                              fmt_num(ref.psi_slope_2) + "·|H_2|");
        }
    } else if (source == "estimated") {
        v.source = DeltaSource::Estimated;
        const OrbitData data = run_enumeration(cfg);
        const GrowthEstimate rho_est =
            critical_exponent(data, rs, rs.rho, ExponentMode::Modified, fit_window(cfg),
                              cfg.analysis.window_fraction);
        const double dp_rho = rho_est.minus_infinity ? -kInfNorm : rho_est.value;
        v.exponents.push_back({rs.rho, dp_rho, theta_from_delta_prime(rs, w, rs.rho, dp_rho)});
        for (const std::string& text : cfg.analysis.mu) {
            if (text == "rho") continue;
            const Functional mu = parse_functional(rs, text, cfg.analysis.basis);
            const GrowthEstimate est =
                critical_exponent(data, rs, mu, ExponentMode::Modified, fit_window(cfg),
                                  cfg.analysis.window_fraction);
            const double dp = est.minus_infinity ? -kInfNorm : est.value;
            v.exponents.push_back({mu, dp, theta_from_delta_prime(rs, w, mu, dp)});
        }
        v.temperedness = temperedness_report(rs, dp_rho);
        if (std::isfinite(dp_rho))
            v.laplace = laplace_bottom_interval(rs, dp_rho, rs.rho, cfg.analysis.metric_scale);
        if (rs.kind == PresetKind::A2Family && std::isfinite(dp_rho))
            v.special_points.push_back(a2_boundary_point(rs, dp_rho).point);
        if (limit_cone_criterion_applicable(rs)) {
            const GrowthEstimate plain =
                critical_exponent(data, rs, rs.rho, ExponentMode::Plain, fit_window(cfg),
                                  cfg.analysis.window_fraction);
            const LimitConeStats stats = limit_cone_stats(data, plain.window.lo);
            v.limit_cone = limit_cone_temperedness(rs, stats, cfg.analysis.margin);
            v.notes.push_back("observed wall distance " + fmt_num(stats.min_wall_distance) +
                              " over " + std::to_string(stats.directions.size()) +
                              " tail directions");
        } else {
            v.limit_cone = LimitConeVerdict::NotApplicable;
        }
        v.notes.push_back("estimates from a word ball of " +
                          std::to_string(data.samples.size()) + " elements");
        if (data.warning) v.notes.push_back(*data.warning);
    } else {
        throw ParameterError("unknown source '" + source + "' (use analytic or estimated)");
    }

    render_verdict(cfg, rs, v);
}

}  // namespace

int dispatch(int argc, char** argv) {
    CLI::App app{"polyhedral gauges, word-ball growth, and spectral verdicts "
                 "for rank-two symmetric space presets"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "polyspec 1.0.0");

    // rootsys
    auto* rootsys = app.add_subcommand("rootsys", "describe the chosen root system preset");
    CommonFlags rootsys_common;
    attach_output(rootsys, rootsys_common);
    attach_preset(rootsys, rootsys_common);
    rootsys->callback([&] { cmd_rootsys(resolve(rootsys_common)); });

    // norm
    auto* norm = app.add_subcommand("norm", "polyhedral gauge of lambda against conv(W mu)");
    CommonFlags norm_common;
    AnalysisFlags norm_analysis;
    std::string norm_lambda, norm_mu;
    attach_output(norm, norm_common);
    attach_preset(norm, norm_common);
    attach_basis(norm, norm_analysis);
    norm->add_option("--lambda", norm_lambda, "functional to measure")->required();
    norm->add_option("--mu", norm_mu, "gauge direction (name or coordinates)")->required();
    norm->callback([&] {
        RunConfig cfg = resolve(norm_common);
        overlay_analysis(cfg, norm_analysis);
        cmd_norm(cfg, norm_lambda, norm_mu);
    });

    // hull
    auto* hull_cmd = app.add_subcommand("hull", "vertices and facet caps of conv(W mu)");
    CommonFlags hull_common;
    AnalysisFlags hull_analysis;
    std::string hull_mu = "rho";
    attach_output(hull_cmd, hull_common);
    attach_preset(hull_cmd, hull_common);
    attach_basis(hull_cmd, hull_analysis);
    hull_cmd->add_option("--mu", hull_mu, "hull generator")->capture_default_str();
    hull_cmd->callback([&] {
        RunConfig cfg = resolve(hull_common);
        overlay_analysis(cfg, hull_analysis);
        cmd_hull(cfg, hull_mu);
    });

    // intersect
    auto* inter = app.add_subcommand("intersect", "largest conv(W mu) inside a family");
    CommonFlags inter_common;
    AnalysisFlags inter_analysis;
    std::string inter_set;
    std::vector<std::string> inter_mus;
    attach_output(inter, inter_common);
    attach_preset(inter, inter_common);
    attach_basis(inter, inter_analysis);
    inter->add_option("--set", inter_set, "comma-separated functional names, e.g. a3,a4");
    inter->add_option("--mu", inter_mus, "additional functionals (repeatable)");
    inter->callback([&] {
        RunConfig cfg = resolve(inter_common);
        overlay_analysis(cfg, inter_analysis);
        cmd_intersect(cfg, inter_set, inter_mus);
    });

    // orbit
    auto* orbit = app.add_subcommand("orbit", "enumerate the word ball and its projections");
    CommonFlags orbit_common;
    GeneratorFlags orbit_gens;
    attach_output(orbit, orbit_common);
    attach_generators(orbit, orbit_gens);
    orbit->callback([&] {
        RunConfig cfg = resolve(orbit_common);
        overlay_generators(cfg, orbit_gens);
        cmd_orbit(cfg);
    });

    // exponent
    auto* expo = app.add_subcommand("exponent", "critical exponent from the word ball");
    CommonFlags expo_common;
    GeneratorFlags expo_gens;
    AnalysisFlags expo_analysis;
    std::string expo_mu = "rho";
    attach_output(expo, expo_common);
    attach_preset(expo, expo_common);
    attach_generators(expo, expo_gens);
    attach_basis(expo, expo_analysis);
    attach_fit(expo, expo_analysis);
    expo_analysis.mode_opt = expo->add_option("--mode", expo_analysis.mode,
                                              "counting mode: plain or modified")
                                 ->capture_default_str();
    expo->add_option("--mu", expo_mu, "direction functional")->capture_default_str();
    expo->callback([&] {
        RunConfig cfg = resolve(expo_common);
        overlay_generators(cfg, expo_gens);
        overlay_analysis(cfg, expo_analysis);
        cmd_exponent(cfg, expo_mu);
    });

    // gif
    auto* gif = app.add_subcommand("gif", "growth indicator over a direction grid");
    CommonFlags gif_common;
    GeneratorFlags gif_gens;
    AnalysisFlags gif_analysis;
    attach_output(gif, gif_common);
    attach_preset(gif, gif_common);
    attach_generators(gif, gif_gens);
    attach_fit(gif, gif_analysis);
    gif_analysis.aperture_opt = gif->add_option("--aperture", gif_analysis.aperture,
                                                "angular radius of each direction cone")
                                    ->capture_default_str();
    gif_analysis.grid_opt =
        gif->add_option("--grid", gif_analysis.grid, "number of directions")->capture_default_str();
    gif->callback([&] {
        RunConfig cfg = resolve(gif_common);
        overlay_generators(cfg, gif_gens);
        overlay_analysis(cfg, gif_analysis);
        cmd_gif(cfg);
    });

    // verdict
    auto* verdict = app.add_subcommand("verdict", "spectral conclusions from delta-prime data");
    CommonFlags verdict_common;
    GeneratorFlags verdict_gens;
    AnalysisFlags verdict_analysis;
    std::string verdict_source = "analytic";
    std::string verdict_delta, verdict_mu;
    double verdict_dp = 0.0;
    attach_output(verdict, verdict_common);
    attach_preset(verdict, verdict_common);
    attach_generators(verdict, verdict_gens);
    attach_basis(verdict, verdict_analysis);
    attach_fit(verdict, verdict_analysis);
    verdict_analysis.scale_opt = verdict->add_option("--metric-scale",
                                                     verdict_analysis.metric_scale,
                                                     "metric normalization factor")
                                     ->capture_default_str();
    verdict_analysis.margin_opt = verdict->add_option("--margin", verdict_analysis.margin,
                                                      "wall clearance for the limit-cone verdict")
                                      ->capture_default_str();
    verdict->add_option("--source", verdict_source, "delta-prime provenance: analytic or estimated")
        ->capture_default_str();
    CLI::Option* dp_opt =
        verdict->add_option("--delta-prime", verdict_dp, "analytic delta-prime at rho (a2)");
    verdict->add_option("--delta", verdict_delta, "factor critical exponents d1,d2 (product)");
    verdict->add_option("--mu", verdict_mu, "direction functional (default a3 for b2, rho else)");
    verdict->callback([&] {
        RunConfig cfg = resolve(verdict_common);
        overlay_generators(cfg, verdict_gens);
        overlay_analysis(cfg, verdict_analysis);
        cmd_verdict(cfg, verdict_source, verdict_dp, dp_opt->count() > 0, verdict_delta,
                    verdict_mu);
    });

    // example
    auto* example = app.add_subcommand("example", "regenerate a worked example and diff its golden");
    CommonFlags example_common;
    ExampleOptions ex_opts;
    attach_output(example, example_common);
    example->add_option("name", ex_opts.name, "sl3, product, or so2n")->required();
    example->add_option("--n", ex_opts.n, "b2 parameter for so2n (3, 5, or 10)")
        ->capture_default_str();
    example->add_option("--goldens-dir", ex_opts.goldens_dir, "directory of shipped goldens")
        ->capture_default_str();
    example->add_flag("--write-golden", ex_opts.write_golden,
                      "rewrite the golden file instead of diffing");
    example->callback([&] {
        RunConfig cfg = resolve(example_common);
        ex_opts.output = cfg.output;
        run_example(ex_opts);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    return 0;
}

}  // namespace cli

int main(int argc, char** argv) {
    try {
        return cli::dispatch(argc, argv);
    } catch (const cli::GoldenMismatchError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitGoldenMismatch;
    } catch (const polyspec::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return cli::kExitSchema;
    } catch (const polyspec::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return cli::kExitNumeric;
    } catch (const polyspec::InsufficientDataError& e) {
        std::cerr << "insufficient data: " << e.what() << "\n";
        return cli::kExitNumeric;
    } catch (const polyspec::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return cli::kExitResource;
    } catch (const polyspec::NotAvailableError& e) {
        std::cerr << "not available: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const polyspec::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const polyspec::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return cli::kExitSchema;
    }
}
