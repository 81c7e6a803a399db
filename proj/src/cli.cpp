#include "harmap/cli.hpp"

#include "harmap/certify.hpp"
#include "harmap/choquet.hpp"
#include "harmap/conformal.hpp"
#include "harmap/errors.hpp"
#include "harmap/geometry.hpp"
#include "harmap/io.hpp"
#include "harmap/shear.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

namespace harmap {

namespace {

using io::json;

enum Exit { kOk = 0, kInput = 2, kNotInvertible = 3, kIndeterminate = 4, kDilatation = 5, kConvex = 6, kConformal = 7 };

std::size_t default_grid() {
    if (const char* e = std::getenv("HARMAP_DEFAULT_N")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(e, &end, 10);
        if (end == e || *end != '\0' || !is_pow2(v) || v < 8)
            throw InputError("HARMAP_DEFAULT_N must be a power of two >= 8");
        return v;
    }
    return kDefaultGrid;
}

json header(const char* command, std::size_t grid) {
    json j;
    j["tool"] = "harmap";
    j["version"] = io::kToolVersion;
    j["command"] = command;
    j["grid_size"] = grid;
    return j;
}

void emit(const json& report, const std::string& path) {
    if (path.empty())
        std::cout << io::dump(report);
    else
        io::write_atomic(path, io::dump(report));
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Invertible: return kOk;
        case Verdict::NotInvertible: return kNotInvertible;
        default: return kIndeterminate;
    }
}

struct CertifyArgs {
    std::string input, report;
    std::size_t samples = 0;
    bool nonconvex_only = false;
};

int cmd_certify(const CertifyArgs& a) {
    const std::size_t n = a.samples ? a.samples : default_grid();
    if (!is_pow2(n)) throw InputError("--samples must be a power of two");
    const auto in = io::read_curve(a.input, n);
    auto r = a.nonconvex_only ? certify_nonconvex(in.curve) : certify_full(in.curve);
    if (a.samples && !in.from_fourier && in.curve.size() != a.samples)
        r.warnings.push_back("--samples ignored: sample inputs keep their own grid");
    json j = header("certify", in.curve.size());
    j["mode"] = a.nonconvex_only ? "nonconvex_only" : "full";
    const json body = io::certificate_json(r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(j, a.report);
    std::cerr << "verdict " << verdict_name(r.verdict) << ", min_jacobian " << io::fmt(r.min_jacobian) << "\n";
    return verdict_exit(r.verdict);
}

struct ExtendArgs {
    std::string input, out_csv;
    std::size_t rings = 16, spokes = 64;
};

int cmd_extend(const ExtendArgs& a) {
    if (a.rings == 0 || a.spokes == 0) throw InputError("rings and spokes must be positive");
    const auto in = io::read_curve(a.input, default_grid());
    const auto u = solve(in.curve);
    const auto field = jacobian_field(u, a.rings, a.spokes);
    io::CsvWriter csv({"r", "theta", "u", "v", "detDU"});
    for (std::size_t i = 0; i < a.rings; ++i) {
        for (std::size_t j = 0; j < a.spokes; ++j) {
            const double r = field.radii[i], th = PeriodicSamples::theta_of(j, a.spokes);
            const cplx w = eval(u, std::polar(r, th));
            csv.row({r, th, w.real(), w.imag(), field.at(i, j)});
        }
    }
    if (a.out_csv.empty())
        std::cout << csv.str();
    else
        io::write_atomic(a.out_csv, csv.str());
    return kOk;
}

struct ShearArgs {
    std::string f, omega, report, out_curve;
    std::size_t order = kDefaultShearOrder;
};

int cmd_shear(const ShearArgs& a) {
    const auto f = io::read_series(a.f);
    const auto om = io::read_series(a.omega);
    const std::size_t n = default_grid();
    json j = header("shear", n);
    j["order"] = a.order;
    const auto spec = make_dilatation(om);
    HarmonicMap u;
    try {
        u = shear_construct(f, spec, a.order);
    } catch (const DilatationBoundError&) {
        j["sup_omega"] = spec.sup_bound;
        j["error"] = "dilatation bound";
        emit(j, a.report);
        throw;
    }
    j["sup_omega"] = spec.sup_bound;
    j["dilatation_roundtrip"] = sup_distance(dilatation(u), spec.omega.truncated(a.order - 1));
    double re_gap = 0.0;
    for (std::size_t k = 0; k < std::max(u.g.size(), f.coeffs().size()); ++k) {
        const cplx g = k < u.g.size() ? u.g[k] : 0.0, h = k < u.h.size() ? u.h[k] : 0.0;
        re_gap = std::max(re_gap, std::abs(g + h - f[k]));
    }
    j["f_coefficient_gap"] = re_gap;
    const auto vals = boundary_values(u, n);
    const BoundaryCurve trace{PeriodicSamples(vals)};
    const auto cert = certify_full(trace);
    j["certify"] = {{"verdict", verdict_name(cert.verdict)}, {"min_jacobian", cert.min_jacobian}};
    emit(j, a.report);
    if (!a.out_curve.empty()) io::write_atomic(a.out_curve, io::dump(io::curve_json(trace)));
    return kOk;
}

struct CounterexampleArgs {
    std::string target, report, out_phi, out_eta, out_grid;
    std::size_t rings = 32, spokes = 128;
};

int cmd_counterexample(const CounterexampleArgs& a) {
    const auto in = io::read_curve(a.target, default_grid());
    const auto b = build_counterexample(in.curve);
    const auto& sc = b.scaffold;
    const auto& d = b.diag;
    json j = header("counterexample", in.curve.size());
    j["scaffold"] = {{"bridge", json::array({sc.ia, sc.ib})},
                     {"A", io::point_json(sc.A)},
                     {"B", io::point_json(sc.B)},
                     {"C", io::point_json(sc.C)},
                     {"E", io::point_json(sc.E)},
                     {"A1", io::point_json(sc.A1)},
                     {"B1", io::point_json(sc.B1)},
                     {"alpha", sc.alpha},
                     {"beta", sc.beta},
                     {"aperture", sc.aperture},
                     {"p", sc.p},
                     {"reversed", sc.reversed},
                     {"affine",
                      {{"matrix", json::array({json::array({sc.affine.m[0][0], sc.affine.m[0][1]}),
                                               json::array({sc.affine.m[1][0], sc.affine.m[1][1]})})},
                       {"offset", io::point_json(sc.affine.offset)}}},
                     {"segment_clearance", sc.segment_clearance},
                     {"cone_excess", sc.cone_excess},
                     {"parabola_excess", sc.parabola_excess}};
    j["conformal"] = {{"nodes", d.nodes},
                      {"taylor_order", d.taylor_order},
                      {"nonmonotone_samples", d.nonmonotone},
                      {"leakage", d.leakage},
                      {"tail", d.tail},
                      {"center_error", d.center_error},
                      {"rejected_orders", d.attempts}};
    j["phi"] = {{"samples", b.phi.size()}, {"fidelity", d.fidelity}, {"junction_continuity", d.continuity}};
    j["eta"] = {{"samples", b.eta.size()},
                {"x1", d.x1},
                {"x2", d.x2},
                {"max_abs_det", d.eta_max_det},
                {"opposite_sign_fraction", d.eta_opposite_fraction},
                {"parabola_deviation", d.eta_parabola},
                {"min_image_separation", d.eta_min_separation},
                {"outside_target", d.eta_outside_target}};
    j["harmonic_residual"] = d.harmonic_residual;
    json ws = json::array();
    for (const auto& w : b.witnesses)
        ws.push_back({{"z1", io::point_json(w.z1)},
                      {"z2", io::point_json(w.z2)},
                      {"U1", io::point_json(w.u1)},
                      {"U2", io::point_json(w.u2)},
                      {"image_gap", std::abs(w.u1 - w.u2)},
                      {"separation", std::abs(w.z1 - w.z2)}});
    j["witnesses"] = ws;
    const auto cert = certify_full(b.phi);
    j["certify"] = {{"verdict", verdict_name(cert.verdict)},
                    {"min_jacobian", cert.min_jacobian},
                    {"gamma_c_violations", cert.gamma_c_violations}};
    emit(j, a.report);

    if (!a.out_phi.empty()) io::write_atomic(a.out_phi, io::dump(io::curve_json(b.phi)));
    if (!a.out_eta.empty()) {
        io::CsvWriter csv({"k", "x", "y", "u", "v", "detDU"});
        for (std::size_t k = 0; k < b.eta.size(); ++k) {
            const cplx w = eval(b.U, b.eta[k]);
            csv.row({double(k), b.eta[k].real(), b.eta[k].imag(), w.real(), w.imag(), eval_jacobian(b.U, b.eta[k])});
        }
        io::write_atomic(a.out_eta, csv.str());
    }
    if (!a.out_grid.empty()) {
        if (a.rings == 0 || a.spokes == 0) throw InputError("rings and spokes must be positive");
        const auto field = jacobian_field(b.U, a.rings, a.spokes);
        io::CsvWriter csv({"r", "theta", "u", "v", "detDU"});
        for (std::size_t i = 0; i < a.rings; ++i)
            for (std::size_t k = 0; k < a.spokes; ++k) {
                const double r = field.radii[i], th = PeriodicSamples::theta_of(k, a.spokes);
                const cplx w = eval(b.U, std::polar(r, th));
                csv.row({r, th, w.real(), w.imag(), field.at(i, k)});
            }
        io::write_atomic(a.out_grid, csv.str());
    }
    return kOk;
}

struct ConformalArgs {
    std::string input, report;
    std::vector<double> center;
    double tol = kTheodorsenTol;
    int max_iter = kTheodorsenMaxIter;
};

int cmd_conformal(const ConformalArgs& a) {
    const auto in = io::read_curve(a.input, default_grid());
    const auto& pts = in.curve.points();
    cplx c = 0.0;
    if (a.center.size() == 2) {
        c = cplx(a.center[0], a.center[1]);
    } else {
        for (const auto& p : pts) c += p;
        c /= double(pts.size());
    }
    const auto sb = to_polar(in.curve, c);
    const auto m = theodorsen(sb, a.tol, a.max_iter);
    json j = header("conformal", in.curve.size());
    j["center"] = io::point_json(c);
    j["residual"] = m.residual;
    j["iterations"] = m.iterations;
    j["leakage"] = m.leakage;
    j["epsilon"] = m.epsilon;
    j["map_at_0"] = io::point_json(eval_conformal(m, 0.0));
    j["derivative_at_0"] = io::point_json(eval_conformal_derivative(m, 0.0));
    {
        // radial gap to the band-limited polar interpolant of the input
        const std::size_t n = pts.size();
        double fid = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const cplx w = eval_conformal(m, std::polar(1.0, PeriodicSamples::theta_of(k, n))) - c;
            fid = std::max(fid, std::abs(std::abs(w) - m.rho_at(std::arg(w))));
        }
        j["boundary_fidelity"] = fid / geom::diameter(pts);
    }
    j["taylor"] = io::series_json(m.taylor)["coeffs"];
    emit(j, a.report);
    return kOk;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Harmonic extension, invertibility certificates and counterexamples for planar boundary maps"};
    app.set_version_flag("--version", io::kToolVersion);
    app.require_subcommand(1);

    CertifyArgs ca;
    auto* c = app.add_subcommand("certify", "Certify invertibility of the harmonic extension of a boundary curve");
    c->add_option("input", ca.input, "CurveFile")->required();
    c->add_option("--samples", ca.samples, "grid for fourier inputs (power of two)");
    c->add_flag("--nonconvex-only", ca.nonconvex_only, "check the Jacobian only on the non-convex part");
    c->add_option("--report", ca.report, "report path (default: stdout)");

    ExtendArgs ea;
    auto* e = app.add_subcommand("extend", "Tabulate the harmonic extension on a polar grid");
    e->add_option("input", ea.input, "CurveFile")->required();
    e->add_option("--rings", ea.rings);
    e->add_option("--spokes", ea.spokes);
    e->add_option("--out-csv", ea.out_csv, "CSV path (default: stdout)");

    ShearArgs sa;
    auto* s = app.add_subcommand("shear", "Shear construction from f and a dilatation");
    s->add_option("f", sa.f, "SeriesFile for f")->required();
    s->add_option("omega", sa.omega, "SeriesFile for the dilatation")->required();
    s->add_option("--order", sa.order)->check(CLI::Range(2, 1 << 16));
    s->add_option("--report", sa.report);
    s->add_option("--out-curve", sa.out_curve);

    CounterexampleArgs xa;
    auto* x = app.add_subcommand("counterexample", "Build a non-injective harmonic extension for a nonconvex target");
    x->add_option("target", xa.target, "CurveFile")->required();
    x->add_option("--report", xa.report);
    x->add_option("--out-phi", xa.out_phi);
    x->add_option("--out-eta", xa.out_eta);
    x->add_option("--out-grid", xa.out_grid);
    x->add_option("--rings", xa.rings);
    x->add_option("--spokes", xa.spokes);

    ConformalArgs fa;
    auto* f = app.add_subcommand("conformal", "Theodorsen conformal map onto a starlike domain");
    f->add_option("input", fa.input, "CurveFile")->required();
    f->add_option("--center", fa.center, "center as two reals")->expected(2);
    f->add_option("--tol", fa.tol);
    f->add_option("--max-iter", fa.max_iter);
    f->add_option("--report", fa.report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (*c) return cmd_certify(ca);
        if (*e) return cmd_extend(ea);
        if (*s) return cmd_shear(sa);
        if (*x) return cmd_counterexample(xa);
        if (*f) return cmd_conformal(fa);
    } catch (const ConvexInputError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kConvex;
    } catch (const ConformalError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kConformal;
    } catch (const DilatationBoundError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kDilatation;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kInput;
    }
    return kInput;
}

}  // namespace harmap
