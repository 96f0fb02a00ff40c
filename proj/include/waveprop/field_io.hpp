#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "waveprop/errors.hpp"
#include "waveprop/lattice.hpp"

namespace waveprop {

namespace detail {

// %.17g round-trips an IEEE double exactly through decimal text.
inline std::string fmt_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// Write a field as `x,re,im` CSV, one row per sample in ascending x.
/// Comment lines (prefixed '#') may precede the header.
inline void save_field_csv(std::ostream& os, const Field& field,
                           const std::string& comment = {}) {
    if (!comment.empty()) os << "# " << comment << "\n";
    os << "x,re,im\n";
    const auto& lat = *field.lattice;
    for (std::size_t j = 0; j < lat.n; ++j) {
        os << detail::fmt_g17(lat.x_samples[j]) << ','
           << detail::fmt_g17(field.values[j].real()) << ','
           << detail::fmt_g17(field.values[j].imag()) << '\n';
    }
}

inline void save_field_csv(const std::string& path, const Field& field,
                           const std::string& comment = {}) {
    std::ofstream os(path);
    if (!os) throw config_error("cannot open '" + path + "' for writing");
    save_field_csv(os, field, comment);
}

/// Read a field from the `x,re,im` CSV format.  The row count must match
/// the lattice; values are taken as-is (no normalization).
inline Field load_field_csv(std::istream& is, const LatticePtr& lattice) {
    Field field{lattice, {}};
    field.values.reserve(lattice->n);
    std::string line;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != "x,re,im")
                throw config_error("field csv: expected header 'x,re,im', got '" + line + "'");
            header_seen = true;
            continue;
        }
        std::istringstream row(line);
        std::string cell;
        double vals[3];
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(row, cell, ','))
                throw config_error("field csv: malformed row at line " + std::to_string(lineno));
            std::size_t used = 0;
            try {
                vals[c] = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw config_error("field csv: non-numeric cell at line " + std::to_string(lineno));
            }
            if (used != cell.size())
                throw config_error("field csv: trailing junk at line " + std::to_string(lineno));
            if (!std::isfinite(vals[c]))
                throw config_error("field csv: non-finite entry at line " + std::to_string(lineno));
        }
        if (std::getline(row, cell, ','))
            throw config_error("field csv: too many columns at line " + std::to_string(lineno));
        field.values.emplace_back(vals[1], vals[2]);
    }
    if (!header_seen)
        throw config_error("field csv: missing header");
    if (field.values.size() != lattice->n)
        throw config_error("field csv: expected " + std::to_string(lattice->n) +
                           " rows, got " + std::to_string(field.values.size()));
    return field;
}

inline Field load_field_csv(const std::string& path, const LatticePtr& lattice) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open '" + path + "' for reading");
    return load_field_csv(is, lattice);
}

}  // namespace waveprop
