#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "kochnet/connectivity.hpp"
#include "kochnet/experiments.hpp"

namespace kochnet {

inline constexpr const char* kToolName = "kochnet";
inline constexpr const char* kToolVersion = "0.1.0";

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All numeric CSV fields use 12 significant digits.
std::string format_double(double v);

inline constexpr const char* kSweepCsvHeader =
    "family,theta,rho,trials,successes,p_hat,ci_low,ci_high,mean_n,mean_isolated,"
    "depth_exhausted";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

void write_nodes_csv(std::ostream& out, const NodeSet& nodes);            // id,x,y
void write_edges_csv(std::ostream& out, const std::vector<Edge>& edges);  // id_a,id_b
void write_polyline_csv(std::ostream& out, const std::vector<Point2>& pts);  // x,y
std::vector<Point2> read_polyline_csv(std::istream& in);

void write_polyline_svg(std::ostream& out, const std::vector<Point2>& pts, double half_extent);

/// Key=value sweep-config file ('#' starts a comment). Unknown keys are
/// rejected. Throws FormatError on malformed input.
struct SweepFileConfig {
    SweepConfig sweep;
    bool has_family = false, has_theta = false, has_rho = false, has_trials = false,
         has_seed = false, has_r0 = false, has_max_depth = false, has_confidence = false,
         has_threads = false;
};
SweepFileConfig read_sweep_config(std::istream& in);

std::vector<double> parse_double_list(const std::string& text);

}  // namespace kochnet
