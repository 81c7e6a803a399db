#pragma once

#include "harmap/certify.hpp"
#include "harmap/dirichlet.hpp"
#include "harmap/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace harmap::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

std::string read_text(const std::string& path);
// Writes to a sibling temporary file and renames it over path.
void write_atomic(const std::string& path, const std::string& content);

// CurveFile. Fourier inputs are synthesized on n samples; sample inputs keep their own grid.
struct CurveInput {
    BoundaryCurve curve;
    bool from_fourier = false;
};
CurveInput parse_curve(const json& j, std::size_t n);
CurveInput read_curve(const std::string& path, std::size_t n);
json curve_json(const BoundaryCurve& c);

// SeriesFile {"format": "series", "coeffs": [[k, re, im], ...]}
PowerSeries parse_series(const json& j);
PowerSeries read_series(const std::string& path);
json series_json(const PowerSeries& s);

json point_json(cplx z);
json certificate_json(const CertificateReport& r);

// Canonical text form of a document (two-space indent, trailing newline).
std::string dump(const json& j);

// Shortest round-trip decimal.
std::string fmt(double x);

class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& header);
    void row(const std::vector<double>& values);
    const std::string& str() const { return s_; }

private:
    std::string s_;
};

}  // namespace harmap::io
