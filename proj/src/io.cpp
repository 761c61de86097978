#include "kochnet/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace kochnet {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << "\n";
    for (const SweepRow& r : rows) {
        out << r.family << ',' << format_double(r.theta) << ',' << format_double(r.rho) << ','
            << r.trials << ',' << r.successes << ',' << format_double(r.p_hat) << ','
            << format_double(r.ci_low) << ',' << format_double(r.ci_high) << ','
            << format_double(r.mean_nodes) << ',' << format_double(r.mean_isolated) << ','
            << r.depth_exhausted_trials << "\n";
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_num(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw FormatError("");
        return v;
    } catch (...) {
        throw FormatError(std::string("malformed ") + what + " value: '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw FormatError("");
        return v;
    } catch (...) {
        throw FormatError(std::string("malformed ") + what + " value: '" + s + "'");
    }
}

}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty sweep CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSweepCsvHeader) throw FormatError("unexpected sweep CSV header: " + line);
    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() != 11) throw FormatError("sweep CSV row needs 11 fields: " + line);
        SweepRow r;
        r.family = static_cast<int>(parse_u64(f[0], "family"));
        r.theta = parse_num(f[1], "theta");
        r.rho = parse_num(f[2], "rho");
        r.trials = parse_u64(f[3], "trials");
        r.successes = parse_u64(f[4], "successes");
        r.p_hat = parse_num(f[5], "p_hat");
        r.ci_low = parse_num(f[6], "ci_low");
        r.ci_high = parse_num(f[7], "ci_high");
        r.mean_nodes = parse_num(f[8], "mean_n");
        r.mean_isolated = parse_num(f[9], "mean_isolated");
        r.depth_exhausted_trials = parse_u64(f[10], "depth_exhausted");
        rows.push_back(r);
    }
    return rows;
}

void write_nodes_csv(std::ostream& out, const NodeSet& nodes) {
    out << "id,x,y\n";
    for (std::size_t i = 0; i < nodes.points.size(); ++i) {
        out << i << ',' << format_double(nodes.points[i].x) << ','
            << format_double(nodes.points[i].y) << "\n";
    }
}

void write_edges_csv(std::ostream& out, const std::vector<Edge>& edges) {
    out << "id_a,id_b\n";
    for (const Edge& e : edges) out << e.a << ',' << e.b << "\n";
}

void write_polyline_csv(std::ostream& out, const std::vector<Point2>& pts) {
    out << "x,y\n";
    for (const Point2& p : pts) {
        out << format_double(p.x) << ',' << format_double(p.y) << "\n";
    }
}

std::vector<Point2> read_polyline_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty polyline CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x,y") throw FormatError("unexpected polyline CSV header: " + line);
    std::vector<Point2> pts;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto f = split_csv_line(line);
        if (f.size() != 2) throw FormatError("polyline CSV row needs 2 fields: " + line);
        pts.push_back({parse_num(f[0], "x"), parse_num(f[1], "y")});
    }
    return pts;
}

void write_polyline_svg(std::ostream& out, const std::vector<Point2>& pts, double half_extent) {
    const double h = half_extent;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\""
        << format_double(-h) << ' ' << format_double(-h) << ' ' << format_double(2 * h) << ' '
        << format_double(2 * h) << "\">\n"
        << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"" << format_double(h / 400.0)
        << "\" d=\"";
    // SVG y runs downward; emit mirrored y so the figure appears in the usual frame
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i == 0 ? "M " : " L ") << format_double(pts[i].x) << ' '
            << format_double(-pts[i].y);
    }
    out << "\"/>\n</svg>\n";
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> vals;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        if (cur.empty()) throw FormatError("empty entry in numeric list: '" + text + "'");
        vals.push_back(parse_num(cur, "list"));
    }
    if (vals.empty()) throw FormatError("empty numeric list");
    return vals;
}

SweepFileConfig read_sweep_config(std::istream& in) {
    SweepFileConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw FormatError("config line " + std::to_string(lineno) + " lacks '='");
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty()) throw FormatError("config key '" + key + "' has no value");
        if (key == "family") {
            cfg.sweep.family = static_cast<int>(parse_u64(val, "family"));
            cfg.has_family = true;
        } else if (key == "theta") {
            cfg.sweep.thetas = parse_double_list(val);
            cfg.has_theta = true;
        } else if (key == "rho") {
            cfg.sweep.rhos = parse_double_list(val);
            cfg.has_rho = true;
        } else if (key == "trials") {
            cfg.sweep.trials = parse_u64(val, "trials");
            cfg.has_trials = true;
        } else if (key == "seed") {
            cfg.sweep.master_seed = parse_u64(val, "seed");
            cfg.has_seed = true;
        } else if (key == "r0") {
            cfg.sweep.r0 = parse_num(val, "r0");
            cfg.has_r0 = true;
        } else if (key == "max_depth") {
            cfg.sweep.max_depth = static_cast<int>(parse_u64(val, "max_depth"));
            cfg.has_max_depth = true;
        } else if (key == "confidence") {
            cfg.sweep.confidence = parse_num(val, "confidence");
            cfg.has_confidence = true;
        } else if (key == "threads") {
            cfg.sweep.threads = static_cast<unsigned>(parse_u64(val, "threads"));
            cfg.has_threads = true;
        } else {
            throw FormatError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

}  // namespace kochnet
