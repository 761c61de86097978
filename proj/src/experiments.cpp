#include "kochnet/experiments.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "kochnet/rng.hpp"
#include "kochnet/sampling.hpp"

namespace kochnet {

namespace {

void validate(const SweepConfig& config) {
    if (config.trials < 1) throw DomainError("sweep requires trials >= 1");
    if (config.thetas.empty()) throw DomainError("sweep requires at least one theta");
    if (config.rhos.empty()) throw DomainError("sweep requires at least one rho");
    if (!(config.r0 > 0.0)) throw DomainError("sweep requires r0 > 0");
    if (config.max_depth < 1) throw DomainError("sweep requires max_depth >= 1");
    if (!(config.confidence > 0.0) || !(config.confidence < 1.0)) {
        throw DomainError("confidence must lie in (0, 1)");
    }
    for (std::size_t i = 0; i < config.rhos.size(); ++i) {
        if (!(config.rhos[i] >= 0.0)) throw DomainError("rho values must be non-negative");
        if (i > 0 && !(config.rhos[i] > config.rhos[i - 1])) {
            throw DomainError("rho grid must be strictly ascending");
        }
    }
}

struct TrialOutcome {
    std::uint8_t connected = 0;
    std::uint8_t exhausted = 0;
    std::uint32_t nodes = 0;
    std::uint32_t isolated = 0;
};

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    validate(config);
    unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;

    std::vector<SweepRow> rows;
    rows.reserve(config.thetas.size() * config.rhos.size());
    std::uint64_t row_index = 0;

    for (const double theta : config.thetas) {
        const FractalDomain domain = derive_domain({config.family, theta});
        for (const double rho : config.rhos) {
            const std::uint64_t T = config.trials;
            std::vector<TrialOutcome> outcomes(T);

            auto run_trial = [&](std::uint64_t t) {
                const std::uint64_t seed = derive_seed(config.master_seed, row_index, t);
                const NodeSet nodes =
                    sample_poisson_nodes(domain, rho, seed, config.max_depth);
                std::size_t exhausted = 0;
                const ConnectivityReport rep = connectivity_report(
                    domain, nodes, config.r0, config.max_depth, &exhausted);
                outcomes[t] = {static_cast<std::uint8_t>(rep.fully_connected ? 1 : 0),
                               static_cast<std::uint8_t>(exhausted > 0 ? 1 : 0),
                               static_cast<std::uint32_t>(rep.node_count),
                               static_cast<std::uint32_t>(rep.isolated_count)};
            };

            if (workers == 1 || T == 1) {
                for (std::uint64_t t = 0; t < T; ++t) run_trial(t);
            } else {
                std::atomic<std::uint64_t> next{0};
                std::vector<std::thread> pool;
                const unsigned nw = static_cast<unsigned>(
                    std::min<std::uint64_t>(workers, T));
                pool.reserve(nw);
                for (unsigned w = 0; w < nw; ++w) {
                    pool.emplace_back([&] {
                        for (std::uint64_t t = next.fetch_add(1); t < T;
                             t = next.fetch_add(1)) {
                            run_trial(t);
                        }
                    });
                }
                for (auto& th : pool) th.join();
            }

            // integer accumulation in trial order: results do not depend on scheduling
            std::uint64_t successes = 0, exhausted_trials = 0, node_sum = 0, iso_sum = 0;
            for (const TrialOutcome& o : outcomes) {
                successes += o.connected;
                exhausted_trials += o.exhausted;
                node_sum += o.nodes;
                iso_sum += o.isolated;
            }

            SweepRow row;
            row.family = config.family;
            row.theta = theta;
            row.rho = rho;
            row.trials = T;
            row.successes = successes;
            row.p_hat = static_cast<double>(successes) / static_cast<double>(T);
            const Interval ci = wilson_interval(successes, T, config.confidence);
            row.ci_low = ci.low;
            row.ci_high = ci.high;
            row.mean_nodes = static_cast<double>(node_sum) / static_cast<double>(T);
            row.mean_isolated = static_cast<double>(iso_sum) / static_cast<double>(T);
            row.depth_exhausted_trials = exhausted_trials;
            rows.push_back(row);
            ++row_index;
        }
    }
    return rows;
}

FitResult fit_stretched_exponential(std::span<const SweepRow> rows, double rho_min) {
    std::vector<double> lx, ly;
    for (const SweepRow& row : rows) {
        if (row.successes == 0 || row.successes >= row.trials) continue;  // ln(-ln p) undefined
        if (row.rho < rho_min) continue;
        lx.push_back(std::log(row.rho));
        ly.push_back(std::log(-std::log(row.p_hat)));
    }
    if (lx.size() < 3) {
        throw InsufficientDataError(
            "stretched-exponential fit needs >= 3 rows with 0 < successes < trials");
    }
    const LinearFit fit = ols_fit(lx, ly);
    FitResult res;
    res.beta_hat = fit.slope;
    res.a_hat = std::exp(fit.intercept);
    res.beta_se = fit.slope_se;
    res.a_se = res.a_hat * fit.intercept_se;  // delta method
    res.rows_used = fit.count;
    res.rho_min = rho_min;
    return res;
}

std::vector<ScalingPair> scaling_check(std::span<const SweepRow> rows,
                                       const FractalDomain& domain) {
    const double factor = 1.0 / (domain.r * domain.r);
    const int n = domain.family();
    std::vector<ScalingPair> pairs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double target = rows[i].rho * factor;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            if (std::fabs(rows[j].rho - target) > 0.01 * target) continue;
            ScalingPair p;
            p.rho = rows[i].rho;
            p.rho_scaled = rows[j].rho;
            p.lhs = rows[j].p_hat;
            p.lhs_ci = {rows[j].ci_low, rows[j].ci_high};
            p.rhs = std::pow(rows[i].p_hat, n);
            p.rhs_ci = {std::pow(rows[i].ci_low, n), std::pow(rows[i].ci_high, n)};
            p.ci_overlap = p.lhs_ci.low <= p.rhs_ci.high && p.rhs_ci.low <= p.lhs_ci.high;
            pairs.push_back(p);
        }
    }
    if (pairs.empty()) {
        throw InsufficientDataError("no (rho, rho/r^2) pairs present in the grid within 1%");
    }
    return pairs;
}

double gateway_estimate(double scale_ratio, double D) {
    return std::pow(scale_ratio, D);
}

}  // namespace kochnet
