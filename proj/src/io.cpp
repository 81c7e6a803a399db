#include "harmap/io.hpp"

#include "harmap/errors.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unistd.h>

namespace harmap::io {

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + path);
        out << content;
        out.flush();
        if (!out) throw InputError("short write to " + path);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot replace " + path + ": " + ec.message());
    }
}

namespace {

json parse_doc(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(what + ": " + e.what());
    }
}

double num(const json& v, const char* what) {
    if (!v.is_number()) throw InputError(std::string("expected a number for ") + what);
    return v.get<double>();
}

// [[k, re, im], ...] with unique integer k
std::map<long, cplx> coeff_list(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("coeffs must be a nonempty array");
    std::map<long, cplx> m;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer())
            throw InputError("each coefficient must be [index, re, im]");
        const long k = e[0].get<long>();
        if (!m.emplace(k, cplx(num(e[1], "re"), num(e[2], "im"))).second)
            throw InputError("duplicate coefficient index " + std::to_string(k));
    }
    return m;
}

}  // namespace

CurveInput parse_curve(const json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
        throw InputError("curve file needs a \"format\" field");
    const std::string fmt_name = j["format"].get<std::string>();
    CurveInput out;
    if (fmt_name == "fourier") {
        const auto m = coeff_list(j.at("coeffs"));
        const long lo = m.begin()->first, hi = m.rbegin()->first;
        std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1), 0.0);
        for (const auto& [k, v] : m) c[static_cast<std::size_t>(k - lo)] = v;
        if (!is_pow2(n)) throw InputError("sample count must be a power of two");
        out.curve = BoundaryCurve(from_fourier(FourierCoeffs(lo, std::move(c)), n));
        out.from_fourier = true;
        return out;
    }
    if (fmt_name != "samples") throw InputError("unknown curve format \"" + fmt_name + "\"");
    if (!j.contains("phi") || !j.contains("psi") || !j["phi"].is_array() || !j["psi"].is_array())
        throw InputError("samples format needs phi and psi arrays");
    const std::size_t len = j["phi"].size();
    if (j.contains("n") && (!j["n"].is_number_integer() || j["n"].get<long>() != static_cast<long>(len)))
        throw InputError("n does not match the sample arrays");
    if (j["psi"].size() != len) throw InputError("phi and psi differ in length");
    if (!is_pow2(len) || len < 4) throw InputError("sample count must be a power of two");
    std::vector<double> phi(len), psi(len);
    for (std::size_t k = 0; k < len; ++k) {
        phi[k] = num(j["phi"][k], "phi");
        psi[k] = num(j["psi"][k], "psi");
        if (!std::isfinite(phi[k]) || !std::isfinite(psi[k])) throw InputError("non-finite sample");
    }
    out.curve = BoundaryCurve(phi, psi);
    return out;
}

CurveInput read_curve(const std::string& path, std::size_t n) {
    return parse_curve(parse_doc(read_text(path), path), n);
}

json curve_json(const BoundaryCurve& c) {
    json j;
    j["format"] = "samples";
    j["n"] = c.size();
    j["phi"] = c.phi();
    j["psi"] = c.psi();
    return j;
}

PowerSeries parse_series(const json& j) {
    if (!j.is_object() || j.value("format", "") != "series") throw InputError("series file needs format \"series\"");
    const auto m = coeff_list(j.at("coeffs"));
    if (m.begin()->first < 0) throw InputError("series indices must be nonnegative");
    std::vector<cplx> c(static_cast<std::size_t>(m.rbegin()->first + 1), 0.0);
    for (const auto& [k, v] : m) c[static_cast<std::size_t>(k)] = v;
    return PowerSeries(std::move(c));
}

PowerSeries read_series(const std::string& path) { return parse_series(parse_doc(read_text(path), path)); }

json series_json(const PowerSeries& s) {
    json j;
    j["format"] = "series";
    json c = json::array();
    for (std::size_t k = 0; k < s.coeffs().size(); ++k)
        if (s[k] != cplx(0.0)) c.push_back(json::array({k, s[k].real(), s[k].imag()}));
    if (c.empty()) c.push_back(json::array({0, 0.0, 0.0}));
    j["coeffs"] = c;
    return j;
}

json point_json(cplx z) { return json::array({z.real(), z.imag()}); }

json certificate_json(const CertificateReport& r) {
    json j;
    j["verdict"] = verdict_name(r.verdict);
    j["reason"] = r.reason;
    j["min_jacobian"] = r.min_jacobian;
    j["argmin_theta"] = r.argmin_theta;
    j["min_checked"] = r.min_checked ? json(*r.min_checked) : json(nullptr);
    j["checked_count"] = r.checked_count;
    j["margin"] = r.margin;
    if (r.wn_report) {
        j["windings"] = {{"wn_f", r.wn_report->wn_f},
                         {"wn_phi", r.wn_report->wn_phi},
                         {"M", r.wn_report->m},
                         {"consistent", r.wn_report->consistent}};
    } else {
        j["windings"] = nullptr;
    }
    j["regularity"] = {{"simple", r.regularity.is_simple},
                       {"c1_diffeo", r.regularity.is_c1_diffeo},
                       {"orientation", r.regularity.orientation},
                       {"min_speed", r.regularity.min_speed},
                       {"max_speed", r.regularity.max_speed},
                       {"tail", r.regularity.tail}};
    json arcs = json::array();
    for (const auto& [a, b] : r.partition.nc_arcs()) arcs.push_back(json::array({a, b}));
    j["partition"] = {{"gamma_c_count", r.partition.gamma_c_indices.size()},
                      {"gamma_nc_count", r.partition.gamma_nc_indices.size()},
                      {"hull_vertices", r.partition.hull.size()},
                      {"nc_arcs", arcs}};
    j["gamma_c_violations"] = r.gamma_c_violations;
    j["violation_count"] = r.violation_indices.size();
    j["warnings"] = r.warnings;
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) {
    for (std::size_t k = 0; k < header.size(); ++k) s_ += (k ? "," : "") + header[k];
    s_ += "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) s_ += ",";
        s_ += fmt(values[k]);
    }
    s_ += "\n";
}

}  // namespace harmap::io
