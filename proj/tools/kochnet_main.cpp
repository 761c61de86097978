// kochnet command line tool: fractal-domain geometry, boundary rendering,
// LOS network sampling, connection-probability sweeps, and fits.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kochnet/connectivity.hpp"
#include "kochnet/domain.hpp"
#include "kochnet/experiments.hpp"
#include "kochnet/io.hpp"
#include "kochnet/sampling.hpp"
#include "kochnet/visibility.hpp"

namespace {

using nlohmann::json;
using namespace kochnet;

constexpr std::uint64_t kDefaultSeed = 0x5EEDBA5EULL;  // fixed default: reproducibility first

constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInsufficientData = 4;

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json make_manifest(const std::string& command, const json& params,
                   const std::vector<std::string>& outputs, bool with_timestamp = true) {
    json m;
    m["tool"] = kToolName;
    m["version"] = kToolVersion;
    m["command"] = command;
    m["params"] = params;
    m["outputs"] = outputs;
    if (with_timestamp) m["timestamp"] = timestamp_utc();
    return m;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw FormatError("failed writing '" + path + "'");
}

void write_manifest(const std::string& path, const json& manifest) {
    write_text_file(path, manifest.dump(2) + "\n");
}

double resolve_theta(double theta, double theta_deg, bool has_deg) {
    return has_deg ? theta_deg * M_PI / 180.0 : theta;
}

// ---- info ----------------------------------------------------------------

int cmd_info(int family, double theta, const std::string& format) {
    const FractalDomain dom = derive_domain({family, theta});
    if (format == "json") {
        json j;
        j["family"] = dom.family();
        j["theta"] = dom.spec.theta;
        j["r"] = dom.r;
        j["D"] = dom.D;
        j["V"] = dom.V;
        j["y_max"] = dom.y_max;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family  " << dom.family() << "\n"
                  << "theta   " << format_double(dom.spec.theta) << "\n"
                  << "r       " << format_double(dom.r) << "\n"
                  << "D       " << format_double(dom.D) << "\n"
                  << "V       " << format_double(dom.V) << "\n"
                  << "y_max   " << format_double(dom.y_max) << "\n";
    }
    return 0;
}

// ---- render ---------------------------------------------------------------

int cmd_render(int family, double theta, int level, const std::string& format,
               const std::string& out_path, std::uint64_t budget) {
    const FractalDomain dom = derive_domain({family, theta});
    const std::vector<Point2> boundary = domain_boundary_polyline(dom, level, budget);
    std::ostringstream body;
    if (format == "svg") {
        write_polyline_svg(body, boundary, dom.bounding_half());
    } else {
        write_polyline_csv(body, boundary);
    }
    write_text_file(out_path, body.str());
    json params{{"family", family},   {"theta", theta},   {"level", level},
                {"format", format},   {"out", out_path},  {"vertex_budget", budget}};
    write_manifest(out_path + ".manifest.json", make_manifest("render", params, {out_path}));
    std::cout << "wrote " << out_path << " (" << boundary.size() << " vertices)\n";
    return 0;
}

// ---- sample ---------------------------------------------------------------

int cmd_sample(int family, double theta, double rho, std::uint64_t seed, double r0,
               int max_depth, const std::string& format, const std::string& prefix) {
    const FractalDomain dom = derive_domain({family, theta});
    const NodeSet nodes = sample_poisson_nodes(dom, rho, seed, max_depth);
    const Network net = build_network(dom, nodes, r0, max_depth);
    const ConnectivityReport rep = analyze(net);

    json params{{"family", family}, {"theta", theta},         {"rho", rho},
                {"seed", seed},     {"r0", r0},               {"max_depth", max_depth},
                {"format", format}, {"out_prefix", prefix}};

    const std::string nodes_path = prefix + "_nodes.csv";
    const std::string edges_path = prefix + "_edges.csv";
    const std::string report_path = prefix + "_report.json";
    std::vector<std::string> outputs;

    json report;
    report["fully_connected"] = rep.fully_connected;
    report["component_count"] = rep.component_count;
    report["isolated_count"] = rep.isolated_count;
    report["node_count"] = rep.node_count;
    report["edge_count"] = net.edges.size();
    report["depth_exhausted_count"] = net.depth_exhausted_count;
    // embedded manifest stays timestamp-free so report bytes depend only on inputs
    report["manifest"] = make_manifest("sample", params, {}, false);

    if (format == "json") {
        json jnodes = json::array();
        for (std::size_t i = 0; i < nodes.points.size(); ++i) {
            jnodes.push_back({{"id", i}, {"x", nodes.points[i].x}, {"y", nodes.points[i].y}});
        }
        json jedges = json::array();
        for (const Edge& e : net.edges) jedges.push_back({{"id_a", e.a}, {"id_b", e.b}});
        report["nodes"] = std::move(jnodes);
        report["edges"] = std::move(jedges);
        outputs = {report_path};
    } else {
        std::ostringstream nodes_csv, edges_csv;
        write_nodes_csv(nodes_csv, nodes);
        write_edges_csv(edges_csv, net.edges);
        write_text_file(nodes_path, nodes_csv.str());
        write_text_file(edges_path, edges_csv.str());
        outputs = {nodes_path, edges_path, report_path};
    }
    write_text_file(report_path, report.dump(2) + "\n");
    write_manifest(prefix + ".manifest.json", make_manifest("sample", params, outputs));
    std::cout << "nodes=" << rep.node_count << " edges=" << net.edges.size()
              << " fully_connected=" << (rep.fully_connected ? "true" : "false")
              << " components=" << rep.component_count << " isolated=" << rep.isolated_count
              << "\n";
    return 0;
}

// ---- sweep ----------------------------------------------------------------

int cmd_sweep(const SweepConfig& config, const std::string& out_path) {
    const std::vector<SweepRow> rows = run_sweep(config);
    std::ostringstream body;
    write_sweep_csv(body, rows);
    write_text_file(out_path, body.str());

    json params{{"family", config.family},
                {"theta", config.thetas},
                {"rho", config.rhos},
                {"trials", config.trials},
                {"seed", config.master_seed},
                {"r0", config.r0},
                {"max_depth", config.max_depth},
                {"confidence", config.confidence},
                {"threads", config.threads}};
    write_manifest(out_path + ".manifest.json", make_manifest("sweep", params, {out_path}));
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return 0;
}

// ---- fit / check ----------------------------------------------------------

std::vector<SweepRow> load_rows(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return read_sweep_csv(in);
}

int cmd_fit(const std::string& input, double rho_min) {
    const std::vector<SweepRow> rows = load_rows(input);
    // fit each (family, theta) group in file order
    std::vector<std::pair<int, double>> groups;
    for (const SweepRow& r : rows) {
        const std::pair<int, double> key{r.family, r.theta};
        bool seen = false;
        for (const auto& g : groups) seen = seen || g == key;
        if (!seen) groups.push_back(key);
    }
    bool any = false;
    std::string failure;
    for (const auto& [family, theta] : groups) {
        std::vector<SweepRow> group;
        for (const SweepRow& r : rows) {
            if (r.family == family && r.theta == theta) group.push_back(r);
        }
        try {
            const FitResult fit = fit_stretched_exponential(group, rho_min);
            const FractalDomain dom = derive_domain({family, theta});
            std::cout << "family=" << family << " theta=" << format_double(theta)
                      << " beta_hat=" << format_double(fit.beta_hat)
                      << " beta_se=" << format_double(fit.beta_se)
                      << " a_hat=" << format_double(fit.a_hat)
                      << " a_se=" << format_double(fit.a_se)
                      << " rows_used=" << fit.rows_used
                      << " rho_min=" << format_double(fit.rho_min)
                      << " D_half=" << format_double(dom.D / 2.0) << "\n";
            any = true;
        } catch (const InsufficientDataError& e) {
            failure = e.what();
        }
    }
    if (!any) {
        std::cerr << "error: " << (failure.empty() ? "no rows" : failure) << "\n";
        return kExitInsufficientData;
    }
    return 0;
}

int cmd_check(const std::string& input, int family, double theta, bool have_filter) {
    std::vector<SweepRow> rows = load_rows(input);
    if (have_filter) {
        std::vector<SweepRow> filtered;
        for (const SweepRow& r : rows) {
            if (r.family == family && std::fabs(r.theta - theta) <= 1e-12) {
                filtered.push_back(r);
            }
        }
        rows = std::move(filtered);
    } else if (!rows.empty()) {
        family = rows.front().family;
        theta = rows.front().theta;
        for (const SweepRow& r : rows) {
            if (r.family != family || r.theta != theta) {
                throw FormatError("sweep file mixes groups; pass --family and --theta");
            }
        }
    }
    if (rows.empty()) {
        std::cerr << "error: no rows selected\n";
        return kExitInsufficientData;
    }
    const FractalDomain dom = derive_domain({family, theta});
    const std::vector<ScalingPair> pairs = scaling_check(rows, dom);
    std::cout << "rho,rho_scaled,lhs,lhs_lo,lhs_hi,rhs,rhs_lo,rhs_hi,ci_overlap\n";
    for (const ScalingPair& p : pairs) {
        std::cout << format_double(p.rho) << ',' << format_double(p.rho_scaled) << ','
                  << format_double(p.lhs) << ',' << format_double(p.lhs_ci.low) << ','
                  << format_double(p.lhs_ci.high) << ',' << format_double(p.rhs) << ','
                  << format_double(p.rhs_ci.low) << ',' << format_double(p.rhs_ci.high) << ','
                  << (p.ci_overlap ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LOS random-graph simulator for self-similar fractal domains"};
    app.require_subcommand(1);

    // info
    auto* info = app.add_subcommand("info", "print derived constants (r, D, V, y_max)");
    int in_family = 2;
    double in_theta = 0.0, in_theta_deg = 0.0;
    std::string in_format = "text";
    info->add_option("--family", in_family, "fractal family (2 or 3)")->required();
    auto* in_theta_opt = info->add_option("--theta", in_theta, "opening angle in radians");
    auto* in_theta_deg_opt =
        info->add_option("--theta-deg", in_theta_deg, "opening angle in degrees");
    in_theta_opt->excludes(in_theta_deg_opt);
    info->add_option("--format", in_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // render
    auto* render = app.add_subcommand("render", "write the boundary polyline as SVG or CSV");
    int re_family = 2, re_level = 4;
    double re_theta = 0.0, re_theta_deg = 0.0;
    std::string re_format = "svg", re_out = "boundary.svg";
    std::uint64_t re_budget = kDefaultVertexBudget;
    render->add_option("--family", re_family)->required();
    auto* re_theta_opt = render->add_option("--theta", re_theta, "angle in radians");
    auto* re_theta_deg_opt = render->add_option("--theta-deg", re_theta_deg, "angle in degrees");
    re_theta_opt->excludes(re_theta_deg_opt);
    render->add_option("--level", re_level, "refinement level m >= 0");
    render->add_option("--format", re_format)->check(CLI::IsMember({"svg", "csv"}));
    render->add_option("--out", re_out, "output path");
    render->add_option("--budget", re_budget, "vertex budget");

    // sample
    auto* sample = app.add_subcommand("sample", "draw one network realization");
    int sa_family = 2, sa_depth = kDefaultMaxDepth;
    double sa_theta = 0.0, sa_theta_deg = 0.0, sa_rho = 5.0, sa_r0 = 1.0;
    std::uint64_t sa_seed = kDefaultSeed;
    std::string sa_format = "csv", sa_prefix = "sample";
    sample->add_option("--family", sa_family)->required();
    auto* sa_theta_opt = sample->add_option("--theta", sa_theta, "angle in radians");
    auto* sa_theta_deg_opt = sample->add_option("--theta-deg", sa_theta_deg, "angle in degrees");
    sa_theta_opt->excludes(sa_theta_deg_opt);
    sample->add_option("--rho", sa_rho, "node density");
    sample->add_option("--seed", sa_seed, "RNG seed");
    sample->add_option("--r0", sa_r0, "connection range");
    sample->add_option("--max-depth", sa_depth, "recursion depth cap");
    sample->add_option("--format", sa_format)->check(CLI::IsMember({"csv", "json"}));
    sample->add_option("--out", sa_prefix, "output file prefix");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Monte Carlo P_fc over a density grid");
    std::string sw_config_path, sw_theta_list, sw_theta_deg_list, sw_rho_list,
        sw_out = "sweep.csv";
    int sw_family = 2, sw_depth = kDefaultMaxDepth;
    std::uint64_t sw_trials = 100, sw_seed = kDefaultSeed;
    double sw_r0 = 1.0, sw_conf = 0.95;
    unsigned sw_threads = 0;
    sweep->add_option("--config", sw_config_path, "key=value config file");
    auto* sw_family_opt = sweep->add_option("--family", sw_family);
    auto* sw_theta_opt =
        sweep->add_option("--theta", sw_theta_list, "comma-separated angles (radians)");
    auto* sw_theta_deg_opt =
        sweep->add_option("--theta-deg", sw_theta_deg_list, "comma-separated angles (degrees)");
    sw_theta_opt->excludes(sw_theta_deg_opt);
    auto* sw_rho_opt = sweep->add_option("--rho", sw_rho_list, "comma-separated densities");
    auto* sw_trials_opt = sweep->add_option("--trials", sw_trials);
    auto* sw_seed_opt = sweep->add_option("--seed", sw_seed);
    auto* sw_r0_opt = sweep->add_option("--r0", sw_r0);
    auto* sw_depth_opt = sweep->add_option("--max-depth", sw_depth);
    auto* sw_conf_opt = sweep->add_option("--confidence", sw_conf);
    auto* sw_threads_opt = sweep->add_option("--threads", sw_threads, "worker cap (0 = auto)");
    sweep->add_option("--out", sw_out, "output CSV path");

    // fit
    auto* fitc = app.add_subcommand("fit", "stretched-exponential fit of a sweep CSV");
    std::string fi_input;
    double fi_rho_min = 0.0;
    fitc->add_option("--input", fi_input)->required();
    fitc->add_option("--rho-min", fi_rho_min, "ignore rows below this density");

    // check
    auto* check = app.add_subcommand("check", "density-scaling identity check of a sweep CSV");
    std::string ch_input;
    int ch_family = 2;
    double ch_theta = 0.0;
    check->add_option("--input", ch_input)->required();
    auto* ch_family_opt = check->add_option("--family", ch_family);
    auto* ch_theta_opt = check->add_option("--theta", ch_theta);

    try {
        app.parse(argc, argv);

        if (info->parsed()) {
            if (!*in_theta_opt && !*in_theta_deg_opt) throw DomainError("theta is required");
            return cmd_info(in_family,
                            resolve_theta(in_theta, in_theta_deg, static_cast<bool>(*in_theta_deg_opt)),
                            in_format);
        }
        if (render->parsed()) {
            if (!*re_theta_opt && !*re_theta_deg_opt) throw DomainError("theta is required");
            return cmd_render(re_family,
                              resolve_theta(re_theta, re_theta_deg, static_cast<bool>(*re_theta_deg_opt)),
                              re_level, re_format, re_out, re_budget);
        }
        if (sample->parsed()) {
            if (!*sa_theta_opt && !*sa_theta_deg_opt) throw DomainError("theta is required");
            return cmd_sample(sa_family,
                              resolve_theta(sa_theta, sa_theta_deg, static_cast<bool>(*sa_theta_deg_opt)),
                              sa_rho, sa_seed, sa_r0, sa_depth, sa_format, sa_prefix);
        }
        if (sweep->parsed()) {
            SweepConfig cfg;
            cfg.trials = 100;
            cfg.master_seed = kDefaultSeed;
            bool have_theta = false, have_rho = false;
            if (!sw_config_path.empty()) {
                std::ifstream in(sw_config_path, std::ios::binary);
                if (!in) throw FormatError("cannot open config '" + sw_config_path + "'");
                const SweepFileConfig file = read_sweep_config(in);
                cfg = file.sweep;
                if (!file.has_trials) cfg.trials = 100;
                if (!file.has_seed) cfg.master_seed = kDefaultSeed;
                have_theta = file.has_theta;
                have_rho = file.has_rho;
            }
            if (*sw_family_opt) cfg.family = sw_family;
            if (*sw_theta_opt) {
                cfg.thetas = parse_double_list(sw_theta_list);
                have_theta = true;
            }
            if (*sw_theta_deg_opt) {
                cfg.thetas = parse_double_list(sw_theta_deg_list);
                for (double& t : cfg.thetas) t *= M_PI / 180.0;
                have_theta = true;
            }
            if (*sw_rho_opt) {
                cfg.rhos = parse_double_list(sw_rho_list);
                have_rho = true;
            }
            if (*sw_trials_opt) cfg.trials = sw_trials;
            if (*sw_seed_opt) cfg.master_seed = sw_seed;
            if (*sw_r0_opt) cfg.r0 = sw_r0;
            if (*sw_depth_opt) cfg.max_depth = sw_depth;
            if (*sw_conf_opt) cfg.confidence = sw_conf;
            if (*sw_threads_opt) cfg.threads = sw_threads;
            if (!have_theta || !have_rho) {
                throw DomainError("sweep requires theta and rho (flags or config file)");
            }
            // every theta must be valid before any work starts
            for (double t : cfg.thetas) derive_domain({cfg.family, t});
            return cmd_sweep(cfg, sw_out);
        }
        if (fitc->parsed()) return cmd_fit(fi_input, fi_rho_min);
        if (check->parsed()) {
            const bool filtered = static_cast<bool>(*ch_family_opt) || static_cast<bool>(*ch_theta_opt);
            if (static_cast<bool>(*ch_family_opt) != static_cast<bool>(*ch_theta_opt)) {
                throw DomainError("pass --family and --theta together");
            }
            return cmd_check(ch_input, ch_family, ch_theta, filtered);
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitInvalidInput;
    } catch (const VertexBudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InsufficientDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInsufficientData;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
