#pragma once

// Flat-file output: CSV (17 significant digits, '#' comment lines), JSON and
// simple SVG line plots.

#include <iosfwd>
#include <string>
#include <vector>

#include "magsteklov/spectra.hpp"

namespace magsteklov {

/// Numeric table; NaN marks a missing or excluded entry (empty CSV field,
/// JSON null, break in an SVG polyline).
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> comments;
};

/// 17 significant digits, or "" for NaN.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& table);
Table read_csv(std::istream& is);
void write_json(std::ostream& os, const Table& table);

/// First column on the horizontal axis, one polyline per remaining column.
void write_svg(std::ostream& os, const Table& table, const std::string& title, const std::string& x_label,
               const std::string& y_label);

/// Header `value,family,k,p,multiplicity`; p and multiplicity empty when absent.
void write_spectrum_csv(std::ostream& os, const Spectrum& spectrum, const std::vector<std::string>& comments = {});
Spectrum read_spectrum_csv(std::istream& is);
void write_spectrum_json(std::ostream& os, const Spectrum& spectrum, Domain domain, double t);

}  // namespace magsteklov
