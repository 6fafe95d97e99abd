#include "ltikit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ltikit/errors.hpp"

namespace ltikit::io {

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, std::size_t line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw DataError("line " + std::to_string(line_no) + ": cannot parse number '" + s + "'");
    }
    if (!std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ": non-finite value");
    }
    return v;
}

long parse_index(const std::string& s, std::size_t line_no) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) {
        throw DataError("line " + std::to_string(line_no) + ": cannot parse index '" + s + "'");
    }
    return v;
}

// Reads a header line and all non-empty data rows with the same column count.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table read_table(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw DataError("empty CSV input");
    t.header = split(line);
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(t.header.size()) + " columns");
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

// rates recovered from printed times snap to the nearest integer within 1e-9
double snap_rate(double fs) {
    const double r = std::round(fs);
    if (r > 0.0 && std::abs(fs - r) <= 1e-9 * fs) return r;
    return fs;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_signal_csv(std::ostream& os, const DiscreteSignal& s) {
    const bool timed = s.sample_rate().has_value();
    os << (timed ? "k,t,value\n" : "k,value\n");
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (s.start_index() + static_cast<long>(i)) << ',';
        if (timed) os << format_double(s.time_of(i)) << ',';
        os << format_double(s[i]) << '\n';
    }
}

DiscreteSignal read_signal_csv(std::istream& is) {
    const Table t = read_table(is);
    bool timed = false;
    if (t.header == std::vector<std::string>{"k", "t", "value"}) {
        timed = true;
    } else if (t.header != std::vector<std::string>{"k", "value"}) {
        throw DataError("signal CSV header must be 'k,t,value' or 'k,value'");
    }
    if (t.rows.empty()) throw DataError("signal CSV has no samples");

    std::vector<long> ks;
    std::vector<double> ts, vs;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        ks.push_back(parse_index(row[0], r + 2));
        if (!ks.empty() && ks.size() > 1 && ks.back() <= ks[ks.size() - 2]) {
            throw DataError("line " + std::to_string(r + 2) + ": k must be strictly increasing");
        }
        if (timed) ts.push_back(parse_double(row[1], r + 2));
        vs.push_back(parse_double(row.back(), r + 2));
    }
    const long k0 = ks.front();
    std::vector<double> samples(static_cast<std::size_t>(ks.back() - k0 + 1), 0.0);
    for (std::size_t i = 0; i < ks.size(); ++i) samples[static_cast<std::size_t>(ks[i] - k0)] = vs[i];

    std::optional<double> fs;
    if (timed && ks.size() >= 2) {
        const double span = ts.back() - ts.front();
        if (!(span > 0.0)) throw DataError("signal CSV: t must increase with k");
        fs = snap_rate(static_cast<double>(ks.back() - k0) / span);
    }
    return DiscreteSignal(std::move(samples), fs, k0);
}

void write_taps_csv(std::ostream& os, const std::vector<double>& taps) {
    os << "tap\n";
    for (double v : taps) os << format_double(v) << '\n';
}

std::vector<double> read_taps_csv(std::istream& is) {
    const Table t = read_table(is);
    if (t.header != std::vector<std::string>{"tap"}) throw DataError("taps CSV header must be 'tap'");
    std::vector<double> taps;
    for (std::size_t r = 0; r < t.rows.size(); ++r) taps.push_back(parse_double(t.rows[r][0], r + 2));
    if (taps.empty()) throw DataError("taps CSV has no taps");
    return taps;
}

void write_spectrum_csv(std::ostream& os, const SpectrumFrame& f) {
    os << "n,f_hz,re,im,mag,phase\n";
    for (std::size_t n = 0; n < f.size(); ++n) {
        double hz = f.grid[n];
        if (f.unit == FrequencyUnit::radians_per_sample) {
            hz = f.grid[n] / (2.0 * std::numbers::pi) * f.sample_rate.value_or(1.0);
        }
        const Complex v = f.bins[n];
        os << n << ',' << format_double(hz) << ',' << format_double(v.real()) << ','
           << format_double(v.imag()) << ',' << format_double(std::abs(v)) << ','
           << format_double(std::arg(v)) << '\n';
    }
}

SpectrumFrame read_spectrum_csv(std::istream& is) {
    const Table t = read_table(is);
    if (t.header != std::vector<std::string>{"n", "f_hz", "re", "im", "mag", "phase"}) {
        throw DataError("spectrum CSV header must be 'n,f_hz,re,im,mag,phase'");
    }
    SpectrumFrame f;
    f.unit = FrequencyUnit::hertz;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (parse_index(row[0], r + 2) != static_cast<long>(r)) {
            throw DataError("line " + std::to_string(r + 2) + ": bins must be numbered 0, 1, ...");
        }
        f.grid.push_back(parse_double(row[1], r + 2));
        f.bins.emplace_back(parse_double(row[2], r + 2), parse_double(row[3], r + 2));
    }
    return f;
}

void write_scales_csv(std::ostream& os, const std::vector<DiscreteSignal>& scales) {
    if (scales.empty()) throw ArgumentError("write_scales_csv: no scales");
    os << 'k';
    for (std::size_t m = 0; m < scales.size(); ++m) os << ",scale_" << (m + 1);
    os << '\n';
    const auto& first = scales.front();
    for (std::size_t i = 0; i < first.size(); ++i) {
        os << (first.start_index() + static_cast<long>(i));
        for (const auto& s : scales) os << ',' << format_double(s[i]);
        os << '\n';
    }
}

std::vector<DiscreteSignal> read_scales_csv(std::istream& is) {
    const Table t = read_table(is);
    if (t.header.size() < 2 || t.header[0] != "k") throw DataError("scales CSV header must start with 'k'");
    for (std::size_t m = 1; m < t.header.size(); ++m) {
        if (t.header[m] != "scale_" + std::to_string(m)) {
            throw DataError("scales CSV: column " + std::to_string(m) + " must be scale_" +
                            std::to_string(m));
        }
    }
    const std::size_t m_count = t.header.size() - 1;
    std::vector<std::vector<double>> cols(m_count);
    long k0 = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const long k = parse_index(t.rows[r][0], r + 2);
        if (r == 0) k0 = k;
        if (k != k0 + static_cast<long>(r)) throw DataError("scales CSV: k must be consecutive");
        for (std::size_t m = 0; m < m_count; ++m) cols[m].push_back(parse_double(t.rows[r][m + 1], r + 2));
    }
    std::vector<DiscreteSignal> out;
    for (auto& c : cols) out.emplace_back(std::move(c), std::nullopt, k0);
    return out;
}

nlohmann::json tf_to_json(const TransferFunction& tf) {
    nlohmann::json j;
    j["domain"] = to_string(tf.domain());
    j["dt"] = tf.dt() ? nlohmann::json(*tf.dt()) : nlohmann::json(nullptr);
    j["b"] = tf.b();
    j["a"] = tf.a();
    return j;
}

TransferFunction tf_from_json(const nlohmann::json& j) {
    try {
        const Domain d = domain_from_string(j.at("domain").get<std::string>());
        std::optional<double> dt;
        if (j.contains("dt") && !j.at("dt").is_null()) dt = j.at("dt").get<double>();
        return TransferFunction(j.at("b").get<std::vector<double>>(),
                                j.at("a").get<std::vector<double>>(), d, dt);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("transfer function JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace ltikit::io
