#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monopoly/blowup.hpp"
#include "monopoly/csv.hpp"
#include "monopoly/json_io.hpp"
#include "monopoly/projection.hpp"
#include "monopoly/suites.hpp"
#include "monopoly/sublevel_volume.hpp"

namespace monopoly {

/// Result of one CLI command. exit_code: 0 success, 2 when a configured
/// acceptance band is violated; hard errors throw instead (the CLI maps them
/// to exit code 1).
struct RunOutput {
    int exit_code = 0;
    std::string summary;
    std::vector<std::pair<std::string, std::string>> files; // name -> content
};

namespace runner_detail {

inline IntMatrix preset_matrix(const std::string& name) {
    if (name == "hartogs") return IntMatrix::from_rows({{1, -1}, {0, 1}});
    if (name == "example-3d") return IntMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {1, -1, 1}});
    if (name.rfind("hartogs-generalized(", 0) == 0 && name.back() == ')') {
        const std::string args = name.substr(20, name.size() - 21);
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw ConfigError("preset needs two arguments: " + name);
        try {
            const std::int64_t a = std::stoll(args.substr(0, comma));
            const std::int64_t b = std::stoll(args.substr(comma + 1));
            if (a <= 0 || b <= 0) throw ConfigError("generalized Hartogs parameters must be positive");
            return IntMatrix::from_rows({{a, -b}, {0, 1}});
        } catch (const std::invalid_argument&) {
            throw ConfigError("could not parse preset arguments in " + name);
        }
    }
    throw ConfigError("unknown preset \"" + name + "\" (have: hartogs, hartogs-generalized(a,b), example-3d)");
}

inline IntMatrix matrix_from_config(const json& cfg) {
    if (cfg.contains("preset")) return preset_matrix(cfg.at("preset").get<std::string>());
    if (cfg.contains("B")) return int_matrix_from_json(cfg.at("B"));
    throw ConfigError("config needs either field \"B\" or field \"preset\"");
}

inline std::string matrix_echo(const IntMatrix& m) {
    std::string s = "[";
    for (int i = 0; i < m.size(); ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < m.size(); ++j) s += (j ? "," : "") + m(i, j).str();
        s += "]";
    }
    return s + "]";
}

inline double number_from_config(const json& v) {
    if (v.is_number()) return v.get<double>();
    return to_double(rational_from_json(v));
}

inline std::vector<double> s_grid_from_config(const json& cfg, int default_k_min, int default_k_max) {
    std::vector<double> grid;
    if (cfg.contains("sGrid")) {
        for (const auto& v : cfg.at("sGrid")) grid.push_back(number_from_config(v));
        return grid;
    }
    const int k_min = cfg.value("kMin", default_k_min);
    const int k_max = cfg.value("kMax", default_k_max);
    if (k_min > k_max) throw ConfigError("kMin must not exceed kMax");
    for (int k = k_min; k <= k_max; ++k) grid.push_back(std::pow(2.0, -k));
    return grid;
}

inline std::optional<std::pair<double, double>> band_from_config(const json& cfg, const std::string& key) {
    if (!cfg.contains(key)) return std::nullopt;
    const auto& b = cfg.at(key);
    if (!b.is_array() || b.size() != 2) throw ConfigError("band \"" + key + "\" must be [lo, hi]");
    return std::make_pair(number_from_config(b[0]), number_from_config(b[1]));
}

inline bool in_band(double v, const std::pair<double, double>& band) {
    return v >= band.first && v <= band.second;
}

inline std::string output_name(const json& cfg, const std::string& command) {
    return cfg.value("output", command + ".csv");
}

} // namespace runner_detail

inline RunOutput run_analyze(const json& cfg) {
    const IntMatrix B = runner_detail::matrix_from_config(cfg);
    DomainAnalysis an;
    try {
        an = analyze_domain(B);
    } catch (const Error& e) {
        throw ConfigError(std::string(e.what()) + "; B = " + runner_detail::matrix_echo(B));
    }
    RunOutput out;
    if (an.trivial)
        out.summary = "trivial polydisc (p* = 1); estimator suites reject this domain";
    else
        out.summary = "p* = " + rational_str(an.p_star) + ", q* = " + rational_str(*an.q_star) +
                      ", m = " + std::to_string(an.m);
    out.files.emplace_back(cfg.value("output", std::string("analysis.json")),
                           domain_analysis_to_json(an).dump(2) + "\n");
    return out;
}

inline RunOutput run_volume(const json& cfg) {
    if (!cfg.contains("alpha")) throw ConfigError("volume config needs field \"alpha\"");
    const ExponentVector alpha = exponent_vector_from_json(cfg.at("alpha"));
    const auto grid = runner_detail::s_grid_from_config(cfg, 8, 20);

    CsvWriter csv;
    csv.comment("command: volume");
    csv.comment("alpha = " + exponent_vector_to_json(alpha).dump());
    csv.comment("columns: s,volume");
    std::vector<double> log_s, log_log, log_v;
    for (double s : grid) {
        const double v = sublevel_volume(alpha, s);
        csv.row().cell(s).cell(v);
        log_s.push_back(std::log(s));
        log_log.push_back(std::log(std::log(1.0 / s)));
        log_v.push_back(std::log(v));
    }

    RunOutput out;
    if (grid.size() >= 3) {
        const PlaneFit fit = ols_fit2(log_s, log_log, log_v);
        csv.row().cell("FIT").cell(fit.a).cell(fit.b);
        out.summary = "s-power = " + csv_double(fit.a) + ", log-power = " + csv_double(fit.b);
        const auto s_band = runner_detail::band_from_config(cfg, "sPowerBand");
        const auto l_band = runner_detail::band_from_config(cfg, "logPowerBand");
        if ((s_band && !runner_detail::in_band(fit.a, *s_band)) ||
            (l_band && !runner_detail::in_band(fit.b, *l_band))) {
            out.exit_code = 2;
            out.summary += " (outside the configured band)";
        }
    }
    out.files.emplace_back(runner_detail::output_name(cfg, "volume"), csv.str());
    return out;
}

inline RunOutput run_project(const json& cfg) {
    const std::string mode = cfg.value("mode", std::string("indicator"));
    const int trunc = cfg.value("truncationDegree", 16);
    MonomialSeries series;
    CsvWriter csv;
    csv.comment("command: project, mode: " + mode);

    if (mode == "indicator") {
        if (!cfg.contains("alpha")) throw ConfigError("project config needs field \"alpha\"");
        const ExponentVector alpha = exponent_vector_from_json(cfg.at("alpha"));
        ReinhardtAngularSet F = ReinhardtAngularSet::full(alpha.size());
        if (cfg.contains("set")) F = reinhardt_set_from_json(cfg.at("set"), alpha.size());
        ProjectionOptions opts;
        opts.seed = cfg.value("seed", static_cast<std::uint64_t>(1234567));
        opts.mc_samples = cfg.value("samples", static_cast<std::size_t>(200000));
        csv.comment("seed = " + std::to_string(opts.seed) +
                    ", samples = " + std::to_string(opts.mc_samples));
        series = project_weighted_indicator(alpha, F, trunc, opts);
    } else if (mode == "window") {
        const IntMatrix B = runner_detail::matrix_from_config(cfg);
        const DomainAnalysis an = analyze_domain(B);
        if (!cfg.contains("b")) throw ConfigError("window mode needs the invariant multi-index \"b\"");
        const ExponentVector b = exponent_vector_from_json(cfg.at("b"));
        const double s = runner_detail::number_from_config(cfg.at("s"));
        series = blowup_series(an, b, s, trunc);
    } else {
        throw ConfigError("unknown project mode \"" + mode + "\" (have: indicator, window)");
    }

    std::string cols = "columns: ";
    for (int j = 0; j < series.dim(); ++j) cols += "gamma_" + std::to_string(j + 1) + ",";
    csv.comment(cols + "re,im");
    for (const auto& [g, c] : series.terms()) {
        auto row = csv.row();
        for (int v : g) row.cell(v);
        row.cell(c.real()).cell(c.imag());
    }
    RunOutput out;
    out.summary = std::to_string(series.size()) + " nonzero coefficients at truncation " +
                  std::to_string(trunc);
    out.files.emplace_back(runner_detail::output_name(cfg, "project"), csv.str());
    return out;
}

inline RunOutput run_verify(const json& cfg) {
    const std::string suite = cfg.value("suite", std::string("restricted"));
    const std::size_t samples = cfg.value("samples", static_cast<std::size_t>(20000));
    const std::uint64_t seed = cfg.value("seed", static_cast<std::uint64_t>(1234567));

    std::vector<ReinhardtAngularSet> sets;
    std::vector<double> index;
    std::vector<SuiteRow> rows;

    CsvWriter csv;
    csv.comment("command: verify, suite: " + suite);
    csv.comment("seed = " + std::to_string(seed) + ", samples = " + std::to_string(samples));

    auto dyadic_sets = [&](const ExponentVector& c) {
        if (cfg.contains("family")) {
            const auto& fam = cfg.at("family");
            const int k_min = fam.value("kMin", 2);
            const int k_max = fam.value("kMax", 10);
            for (int k = k_min; k <= k_max; ++k) {
                sets.push_back(ReinhardtAngularSet::sublevel(c, std::pow(2.0, -k)));
                index.push_back(static_cast<double>(k));
            }
        } else if (cfg.contains("sets")) {
            int i = 0;
            for (const auto& sj : cfg.at("sets")) {
                sets.push_back(reinhardt_set_from_json(sj, c.size()));
                index.push_back(static_cast<double>(i++));
            }
        }
    };

    if (suite == "restricted") {
        const DomainAnalysis an = analyze_domain(runner_detail::matrix_from_config(cfg));
        dyadic_sets(an.weight_exponent);
        rows = restricted_ratio_suite(an, sets, samples, seed);
    } else if (suite == "polydisc" || suite == "key") {
        if (!cfg.contains("alpha")) throw ConfigError("suite \"" + suite + "\" needs field \"alpha\"");
        const ExponentVector alpha = exponent_vector_from_json(cfg.at("alpha"));
        dyadic_sets(alpha);
        PolydiscMode mode;
        const std::string m = cfg.value("submode", std::string("endpoint"));
        if (suite == "polydisc")
            mode = m == "interior" ? PolydiscMode::projection_interior : PolydiscMode::projection_endpoint;
        else
            mode = m == "interior" ? PolydiscMode::holder_interior : PolydiscMode::holder_endpoint;
        const double p = cfg.value("p", 0.0);
        const double eps = cfg.value("eps", 0.25);
        rows = polydisc_inequality_suite(alpha, sets, mode, p, eps, samples, seed).rows;
    } else {
        throw ConfigError("unknown suite \"" + suite + "\" (have: restricted, polydisc, key)");
    }

    csv.comment("columns: k,lhs,lhs_se,rhs,rhs_se,ratio");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        csv.row()
            .cell(index[i])
            .cell(rows[i].lhs.value)
            .cell(rows[i].lhs.standard_error)
            .cell(rows[i].rhs.value)
            .cell(rows[i].rhs.standard_error)
            .cell(rows[i].ratio);
    }

    RunOutput out;
    if (rows.size() >= 2) {
        const FamilyTrend trend = family_trend(rows, index);
        csv.row().cell("FIT").cell(trend.slope).cell(trend.max_over_median);
        out.summary = "trend slope = " + csv_double(trend.slope) +
                      ", max/median = " + csv_double(trend.max_over_median);
        const auto band = runner_detail::band_from_config(cfg, "slopeBand")
                              .value_or(std::make_pair(-0.1, 0.1));
        if (!runner_detail::in_band(trend.slope, band)) {
            out.exit_code = 2;
            out.summary += " (outside the configured band)";
        }
    } else {
        out.summary = "no shrinking family configured; wrote " + std::to_string(rows.size()) + " rows";
    }
    out.files.emplace_back(runner_detail::output_name(cfg, "verify"), csv.str());
    return out;
}

inline RunOutput run_blowup(const json& cfg) {
    const DomainAnalysis an = analyze_domain(runner_detail::matrix_from_config(cfg));
    if (!cfg.contains("b")) throw ConfigError("blowup config needs the invariant multi-index \"b\"");
    const ExponentVector b = exponent_vector_from_json(cfg.at("b"));
    const auto grid = runner_detail::s_grid_from_config(cfg, 4, 16);
    const int trunc = cfg.value("truncationDegree", 48);
    const std::size_t samples = cfg.value("samples", static_cast<std::size_t>(200000));
    const std::uint64_t seed = cfg.value("seed", static_cast<std::uint64_t>(1234567));

    const BlowupResult res = blowup_experiment(an, b, grid, trunc, samples, seed);

    CsvWriter csv;
    csv.comment("command: blowup");
    csv.comment("seed = " + std::to_string(seed) + ", samples = " + std::to_string(samples) +
                ", truncation = " + std::to_string(trunc));
    csv.comment("floor constant K = " + csv_double(res.floor_constant));
    csv.comment("columns: s,lambda,superlevel,superlevel_se,superlevel_samples,denominator,ratio");
    for (const auto& row : res.rows) {
        csv.row()
            .cell(row.s)
            .cell(row.lambda)
            .cell(row.superlevel.value)
            .cell(row.superlevel.standard_error)
            .cell(row.superlevel.samples)
            .cell(row.denominator)
            .cell(row.ratio);
    }
    csv.row().cell("FIT").cell(res.fitted_slope);

    RunOutput out;
    out.summary = "ratio growth exponent = " + csv_double(res.fitted_slope);
    const auto band = runner_detail::band_from_config(cfg, "slopeBand")
                          .value_or(std::make_pair(1.0 / 3.0 - 0.15, 1.0 / 3.0 + 0.15));
    if (!runner_detail::in_band(res.fitted_slope, band)) {
        out.exit_code = 2;
        out.summary += " (outside the configured band)";
    }
    out.files.emplace_back(runner_detail::output_name(cfg, "blowup"), csv.str());
    return out;
}

inline RunOutput run_command(const std::string& command, const json& cfg) {
    if (command == "analyze") return run_analyze(cfg);
    if (command == "volume") return run_volume(cfg);
    if (command == "project") return run_project(cfg);
    if (command == "verify") return run_verify(cfg);
    if (command == "blowup") return run_blowup(cfg);
    throw ConfigError("unknown command \"" + command + "\"");
}

} // namespace monopoly
