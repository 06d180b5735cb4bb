#include "magsteklov/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "magsteklov/error.hpp"

namespace magsteklov {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s) {
    if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw InvalidArgument("not a number: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return v;
}

bool next_data_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        return true;
    }
    return false;
}

nlohmann::json number_or_null(double v) { return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v); }

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const Table& table) {
    for (const auto& c : table.comments) os << "# " << c << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
        os << '\n';
    }
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line.size() > 2 ? line.substr(2) : "");
            continue;
        }
        if (t.columns.empty()) {
            t.columns = split(line);
            continue;
        }
        const auto fields = split(line);
        if (fields.size() != t.columns.size()) throw InvalidArgument("CSV row width does not match the header");
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_number(f));
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_json(std::ostream& os, const Table& table) {
    nlohmann::json j;
    j["columns"] = table.columns;
    j["comments"] = table.comments;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        auto r = nlohmann::json::array();
        for (double v : row) r.push_back(number_or_null(v));
        rows.push_back(r);
    }
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

void write_svg(std::ostream& os, const Table& table, const std::string& title, const std::string& x_label,
               const std::string& y_label) {
    constexpr double W = 800, H = 520, L = 70, R = 170, T = 40, B = 60;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& row : table.rows) {
        if (row.empty() || std::isnan(row[0])) continue;
        xmin = std::min(xmin, row[0]);
        xmax = std::max(xmax, row[0]);
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (std::isnan(row[i])) continue;
            ymin = std::min(ymin, row[i]);
            ymax = std::max(ymax, row[i]);
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
    auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                   "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
    char buf[64];
    for (int i = 0; i <= 5; ++i) {
        const double xv = xmin + i * (xmax - xmin) / 5, yv = ymin + i * (ymax - ymin) / 5;
        std::snprintf(buf, sizeof buf, "%.3g", xv);
        os << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\" font-size=\"11\">"
           << buf << "</text>\n";
        std::snprintf(buf, sizeof buf, "%.3g", yv);
        os << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\" font-size=\"11\">" << buf
           << "</text>\n";
    }
    os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15 << "\" text-anchor=\"middle\" font-size=\"13\">"
       << x_label << "</text>\n";
    os << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
       << (T + H - B) / 2 << ")\">" << y_label << "</text>\n";

    for (std::size_t c = 1; c < table.columns.size(); ++c) {
        const char* color = colors[(c - 1) % 10];
        std::string points;
        auto flush = [&] {
            if (!points.empty())
                os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << points
                   << "\"/>\n";
            points.clear();
        };
        for (const auto& row : table.rows) {
            if (c >= row.size() || std::isnan(row[0]) || std::isnan(row[c])) {
                flush();
                continue;
            }
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(row[0]), py(row[c]));
            points += buf;
        }
        flush();
        const double ly = T + 14.0 * c;
        os << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30 << "\" y2=\"" << ly
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << W - R + 35 << "\" y=\"" << ly + 4 << "\" font-size=\"10\">" << table.columns[c]
           << "</text>\n";
    }
    os << "</svg>\n";
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum, const std::vector<std::string>& comments) {
    for (const auto& c : comments) os << "# " << c << '\n';
    os << "value,family,k,p,multiplicity\n";
    for (const auto& r : spectrum.records) {
        os << format_number(r.value) << ',' << to_string(r.mode.family) << ',' << r.mode.k << ',';
        if (r.mode.p) os << *r.mode.p;
        os << ',';
        if (r.multiplicity) os << *r.multiplicity;
        os << '\n';
    }
}

Spectrum read_spectrum_csv(std::istream& is) {
    Spectrum s;
    std::string line;
    if (!next_data_line(is, line) || line != "value,family,k,p,multiplicity")
        throw InvalidArgument("missing spectrum CSV header");
    while (next_data_line(is, line)) {
        const auto f = split(line);
        if (f.size() != 5) throw InvalidArgument("spectrum CSV row must have 5 fields");
        EigenvalueRecord r;
        r.value = parse_number(f[0]);
        r.mode.family = parse_family(f[1]);
        r.mode.k = parse_int(f[2]);
        if (!f[3].empty()) r.mode.p = parse_int(f[3]);
        if (!f[4].empty()) r.multiplicity = parse_int(f[4]);
        s.cutoff = std::max(s.cutoff, r.mode.k);
        s.records.push_back(r);
    }
    return s;
}

void write_spectrum_json(std::ostream& os, const Spectrum& spectrum, Domain domain, double t) {
    nlohmann::json j;
    j["domain"] = to_string(domain);
    j["t"] = t;
    j["cutoff"] = spectrum.cutoff;
    auto recs = nlohmann::json::array();
    for (const auto& r : spectrum.records) {
        nlohmann::json e;
        e["value"] = r.value;
        e["family"] = to_string(r.mode.family);
        e["k"] = r.mode.k;
        e["p"] = r.mode.p ? nlohmann::json(*r.mode.p) : nlohmann::json(nullptr);
        e["multiplicity"] = r.multiplicity ? nlohmann::json(*r.multiplicity) : nlohmann::json(nullptr);
        if (r.multiplicity_flagged) e["multiplicity_note"] = "share of a total multiplicity split over p";
        recs.push_back(e);
    }
    j["records"] = recs;
    auto ex = nlohmann::json::array();
    for (const auto& e : spectrum.excluded)
        ex.push_back({{"family", to_string(e.mode.family)}, {"k", e.mode.k}, {"p", e.mode.p.value_or(-1)},
                      {"t", e.t}, {"reason", e.reason}});
    j["excluded"] = ex;
    j["warnings"] = spectrum.warnings;
    os << j.dump(2) << '\n';
}

}  // namespace magsteklov
