/*
   Copyright 2026 The invcurve Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "invcurve/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include "invcurve/curves.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/json_io.hpp"
#include "invcurve/lattes.hpp"
#include "invcurve/poincare.hpp"
#include "invcurve/semiconj.hpp"
#include "invcurve/svg.hpp"

namespace invcurve::cli {
namespace {

constexpr double kInvarianceTol = 1e-7;
constexpr double kIdentityCoefTol = 1e-12;

// Runs one pipeline stage, prefixing any failure with the stage name.
template <class F>
auto stage(const std::string& name, F&& body) -> decltype(body())
{
    try {
        return body();
    } catch (const PreconditionError& e) {
        throw PreconditionError(name + ": " + e.what());
    } catch (const std::exception& e) {
        throw Error(name + ": " + e.what());
    }
}

cplx parse_complex(const std::string& text)
{
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return re;
        }
        const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size())
            throw std::invalid_argument(text);
        const double im = std::stod(b, &used);
        if (used != b.size())
            throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw PreconditionError("cannot parse complex number '" + text + "' (expected re or re,im)");
    }
}

void write_trace(const RunConfig& cfg, const CurveTrace& trace, const std::string& name = "trace.csv")
{
    if (!cfg.csv)
        return;
    std::ofstream os(cfg.out / name, std::ios::binary);
    if (!os)
        throw Error("cannot write " + (cfg.out / name).string());
    write_csv(os, trace);
}

std::vector<SpherePoint> marks_near(const MultiplierRealReport& r)
{
    std::vector<SpherePoint> m;
    for (const auto& e : r.entries)
        m.push_back(e.location);
    return m;
}

Json multiplier_report_to_json(const MultiplierRealReport& r)
{
    Json out;
    out["all_real"] = r.all_real;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json j;
        j["location"] = sphere_to_json(e.location);
        j["multiplier"] = complex_to_json(e.multiplier);
        j["distance_to_trace"] = number_to_json(e.distance_to_trace);
        j["real"] = e.real;
        entries.push_back(j);
    }
    out["repelling_on_trace"] = entries;
    return out;
}

Json scan_to_json(const TranscendenceScan& s)
{
    Json out;
    out["threshold"] = number_to_json(s.threshold);
    out["no_low_degree_fit"] = s.no_low_degree_fit;
    out["first_algebraic_degree"] = s.first_algebraic_degree ? Json(*s.first_algebraic_degree) : Json(nullptr);
    Json fits = Json::array();
    for (const FitReport& f : s.fits) {
        Json j;
        j["degree"] = f.degree;
        j["residual"] = number_to_json(f.residual);
        j["smallest_singular_value"] = number_to_json(f.smallest_singular_value);
        fits.push_back(j);
    }
    out["fits"] = fits;
    return out;
}

// Shared part of the two elliptic examples: map, trace, invariance, circle fit.
struct EllipticRun
{
    EllipticInvariants E;
    LattesSystem S;
    cplx offset;
    CurveTrace trace;
    std::optional<double> shift;
    std::optional<double> parametric;
    double polyline;
    FitReport circle;
    MultiplierRealReport multipliers;
    Json report;
};

EllipticRun run_elliptic(const RunConfig& cfg, const Lattice& L, cplx offset)
{
    const int samples = cfg.samples.value_or(4000);
    const int terms = cfg.order.value_or(kDefaultLaurentTerms);
    EllipticInvariants E = stage("invariants", [&] { return invariants_from_lattice(L, terms); });
    LattesSystem S = stage("lattes", [&] { return lattes_from_invariants(E); });
    CurveTrace trace = stage("trace", [&] { return trace_wp_line(E, offset, samples); });
    const auto shift = line_doubling_shift(L, offset);
    std::optional<double> parametric;
    if (shift)
        parametric = stage("parametric invariance", [&] { return parametric_invariance_residual(E, S.map, offset, samples); });
    const double polyline = stage("invariance", [&] { return invariance_residual(S.map, trace); });
    FitReport circle = stage("circle fit", [&] { return circle_fit(trace); });
    MultiplierRealReport mult = stage("multipliers", [&] { return multiplier_real_check(S.map, trace); });

    Json r;
    r["lattice"] = lattice_to_json(L);
    r["g2"] = complex_to_json(E.g2);
    r["g3"] = complex_to_json(E.g3);
    r["map"] = map_to_json(S.map);
    r["offset"] = complex_to_json(offset);
    r["samples"] = samples;
    r["trace_closed"] = trace.closed();
    r["doubling_shift"] = shift ? number_to_json(*shift) : Json(nullptr);
    r["parametric_invariance_residual"] = parametric ? number_to_json(*parametric) : Json(nullptr);
    r["invariance_residual"] = number_to_json(polyline);
    r["invariance_tolerance"] = number_to_json(cfg.tol.value_or(kInvarianceTol));
    r["circle_fit"] = fit_to_json(circle);
    r["fixed_points"] = fixed_points_to_json(fixed_points(S.map));
    r["multiplier_check"] = multiplier_report_to_json(mult);
    return {std::move(E), std::move(S), offset, std::move(trace), shift, parametric, polyline, std::move(circle),
            std::move(mult), std::move(r)};
}

bool invariant(const RunConfig& cfg, const EllipticRun& run)
{
    const double tol = cfg.tol.value_or(kInvarianceTol);
    return run.polyline <= tol && (!run.parametric || *run.parametric <= tol);
}

int example1(const RunConfig& cfg, const ExampleArgs& args, std::ostream& out)
{
    const Lattice L(2.0, cplx(0.0, 2.6));
    const cplx offset = args.offset ? parse_complex(*args.offset) : L.period2() / 3.0;
    EllipticRun run = run_elliptic(cfg, L, offset);

    std::vector<FitReport> fits;
    std::optional<int> degree;
    stage("algebraic fit", [&] {
        for (int d = 1; d <= 8 && !degree; ++d) {
            fits.push_back(algebraic_fit(run.trace, d));
            if (fits.back().passed)
                degree = d;
        }
    });
    Json fit_json = Json::array();
    for (const FitReport& f : fits)
        fit_json.push_back(fit_to_json(f));
    run.report["algebraic_fits"] = fit_json;

    const XYCheckReport xy = stage("xy check", [&] { return example1_xy_check(run.E, offset, 500, cfg.seed); });
    run.report["xy_check"] = {{"on_line_residual", number_to_json(xy.on_line_residual)},
                              {"period1_residual", number_to_json(xy.period1_residual)},
                              {"period2_residual", number_to_json(xy.period2_residual)},
                              {"off_line_y_sample", number_to_json(xy.off_line_y_sample)}};

    const bool inv = invariant(cfg, run);
    const bool circle = run.circle.residual <= kCircleThreshold;
    Json verdict;
    verdict["invariant"] = inv;
    verdict["closed"] = run.trace.closed();
    verdict["circle"] = circle;
    verdict["algebraic"] = degree.has_value();
    verdict["algebraic_degree"] = degree ? Json(*degree) : Json(nullptr);
    run.report["verdict"] = verdict;

    write_json(cfg.out / "report.json", run.report);
    write_trace(cfg, run.trace);
    if (cfg.svg)
        write_svg(cfg.out / "plot.svg", {"wp on x + offset, lattice <2, 2.6i>", &run.trace,
                                         degree ? &fits.back() : &run.circle, marks_near(run.multipliers)});
    out << "example 1: invariant=" << inv << " circle=" << circle << " algebraic=" << degree.has_value();
    if (degree)
        out << " (degree " << *degree << ")";
    out << '\n';
    return kExitOk;
}

int example2(const RunConfig& cfg, const ExampleArgs& args, std::ostream& out)
{
    const cplx tau(std::numbers::sqrt2, 1.0);
    const Lattice L(1.0, tau);
    const cplx offset = args.offset ? parse_complex(*args.offset) : cplx(0.0, 1.0 / 3.0);
    EllipticRun run = run_elliptic(cfg, L, offset);

    const TranscendenceScan scan = stage("transcendence scan", [&] { return transcendence_scan(run.trace, 6); });
    const TranscendenceScan control = stage("control scan", [&] {
        const Lattice L1(2.0, cplx(0.0, 2.6));
        const EllipticInvariants E1 = invariants_from_lattice(L1, cfg.order.value_or(kDefaultLaurentTerms));
        return transcendence_scan(trace_wp_line(E1, L1.period2() / 3.0, cfg.samples.value_or(4000)), 6);
    });
    const bool evidence = transcendence_evidence(scan, control);
    const CommensurabilityReport comm =
        stage("commensurability", [&] { return lattice_commensurability(L, Lattice(1.0, std::conj(tau))); });
    run.report["transcendence_scan"] = scan_to_json(scan);
    run.report["control_scan"] = scan_to_json(control);
    run.report["commensurability"] = commensurability_to_json(comm);

    const bool inv = invariant(cfg, run);
    const bool circle = run.circle.residual <= kCircleThreshold;
    Json verdict;
    verdict["invariant"] = inv;
    verdict["closed"] = run.trace.closed();
    verdict["circle"] = circle;
    verdict["algebraic_evidence"] = scan.first_algebraic_degree.has_value();
    verdict["transcendence_evidence"] = evidence;
    verdict["lattices"] = to_string(comm.verdict);
    run.report["verdict"] = verdict;

    write_json(cfg.out / "report.json", run.report);
    write_trace(cfg, run.trace);
    if (cfg.svg)
        write_svg(cfg.out / "plot.svg",
                  {"wp on x + i/3, lattice <1, sqrt2 + i>", &run.trace, &run.circle, marks_near(run.multipliers)});
    out << "example 2: invariant=" << inv << " circle=" << circle
        << " transcendence_evidence=" << evidence << " lattices=" << to_string(comm.verdict) << '\n';
    return kExitOk;
}

int example3(const RunConfig& cfg, const ExampleArgs& args, std::ostream& out)
{
    const int samples = cfg.samples.value_or(2000);
    Json identities = Json::array();
    double worst_identity = 0.0;
    for (int k = 1; k <= 8; ++k) {
        const double r = stage("joukowski identity", [&] { return verify_joukowski_identity(k); });
        worst_identity = std::max(worst_identity, r);
        identities.push_back({{"n", k}, {"residual", number_to_json(r)}});
    }
    const PakovichExample P = stage("construction", [&] { return pakovich_example(args.n, samples); });
    const double hyperbola = stage("hyperbola", [&] { return hyperbola_residual(P); });
    const double inv = stage("invariance", [&] { return pakovich_invariance_residual(P); });
    const MultiplierRealReport mult = stage("multipliers", [&] { return multiplier_real_check(P.f, P.gamma); });
    const double tol = cfg.tol.value_or(kInvarianceTol);

    Json r;
    r["n"] = P.n;
    r["epsilon"] = complex_to_json(P.epsilon);
    r["u"] = map_to_json(P.u);
    r["f"] = map_to_json(P.f);
    r["R"] = map_to_json(P.R);
    r["joukowski_identity"] = identities;
    r["symmetry_residual"] = number_to_json(P.symmetry_residual);
    r["hyperbola_residual"] = number_to_json(hyperbola);
    r["invariance_residual"] = number_to_json(inv);
    r["invariance_tolerance"] = number_to_json(tol);
    r["multiplier_check"] = multiplier_report_to_json(mult);
    Json verdict;
    verdict["joukowski_identity"] = worst_identity <= kIdentityCoefTol;
    verdict["R_symmetric"] = P.symmetry_residual <= kIdentityCoefTol;
    verdict["hyperbola"] = hyperbola <= 1e-10;
    verdict["hyperbola_invariant"] = inv <= tol;
    r["verdict"] = verdict;

    write_json(cfg.out / "report.json", r);
    write_trace(cfg, P.gamma);
    if (cfg.svg)
        write_svg(cfg.out / "plot.svg", {"u(R) for u = J(eps z), n = " + std::to_string(P.n), &P.gamma, nullptr,
                                         marks_near(mult)});
    out << "example 3: joukowski=" << (worst_identity <= kIdentityCoefTol) << " hyperbola=" << (hyperbola <= 1e-10)
        << " invariant=" << (inv <= tol) << '\n';
    return kExitOk;
}

} // namespace

int cmd_poincare(const RunConfig& cfg, const PoincareArgs& args, std::ostream& out)
{
    const RationalMap f = stage("map", [&] { return map_from_json(load_json(args.map)); });
    if (args.fixed_point == "inf")
        throw PreconditionError("fixed point at infinity: conjugate by 1/z first");
    const cplx a = parse_complex(args.fixed_point);
    const int order = cfg.order.value_or(40);
    const int samples = cfg.samples.value_or(2000);
    const PoincareSeries F = stage("solve", [&] { return solve_coefficients(f, a, order); });
    const cplx lambda = F.multiplier();

    // Inside the disc: f(series(z)) against series(lambda z).
    double series_residual = 0.0;
    const double r_in = 0.5 * F.working_radius() / std::abs(lambda);
    for (int k = 0; k < 64; ++k) {
        const cplx z = std::polar(r_in, 2.0 * std::numbers::pi * (k + 0.5) / 64);
        series_residual = std::max(series_residual, chordal_distance(f(SpherePoint(F.series()(z))), F.series()(lambda * z)));
    }
    // Beyond it: f(F(z)) against F(lambda z), three doublings past the
    // radius, with the right side pulled back one level deeper.
    double functional_residual = 0.0;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi), grow(0.0, 3.0);
    for (int k = 0; k < 100; ++k) {
        const cplx z = std::polar(F.working_radius() * std::exp2(grow(rng)), phase(rng));
        functional_residual = std::max(functional_residual, chordal_distance(f(evaluate(F, z)), evaluate(F, lambda * z, 1)));
    }

    Json coeffs = Json::array();
    for (int k = 1; k <= F.order(); ++k)
        coeffs.push_back({{"k", k}, {"c", complex_to_json(F.coefficient(k))}});
    Json cj;
    cj["fixed_point"] = complex_to_json(a);
    cj["multiplier"] = complex_to_json(lambda);
    cj["coefficients"] = coeffs;
    write_json(cfg.out / "coefficients.json", cj);

    Json r;
    r["map"] = map_to_json(f);
    r["fixed_point"] = complex_to_json(a);
    r["multiplier"] = complex_to_json(lambda);
    r["order"] = order;
    r["radius_estimate"] = number_to_json(F.radius_estimate());
    r["working_radius"] = number_to_json(F.working_radius());
    r["series_residual"] = number_to_json(series_residual);
    r["functional_equation_residual"] = number_to_json(functional_residual);

    if (std::abs(lambda.imag()) <= 1e-9 * std::abs(lambda)) {
        const CurveTrace trace = stage("trace", [&] { return trace_real_axis(F, args.trace_range, samples); });
        const auto crossings = stage("injectivity", [&] { return injectivity_check(trace); });
        r["trace"] = {{"range", number_to_json(args.trace_range)}, {"samples", samples}};
        r["crossings"] = crossings_to_json(crossings);
        r["injective_on_trace"] = crossings.empty();
        write_trace(cfg, trace);
        if (cfg.svg)
            write_svg(cfg.out / "plot.svg", {"F on [-T, T]", &trace, nullptr, {SpherePoint(a)}});
        out << "poincare: lambda=" << lambda.real() << " crossings=" << crossings.size();
    } else {
        r["trace"] = nullptr;
        r["trace_note"] = "multiplier is not real; real-axis trace skipped";
        out << "poincare: lambda=" << lambda.real() << (lambda.imag() < 0 ? "" : "+") << lambda.imag()
            << "i (no real trace)";
    }
    write_json(cfg.out / "report.json", r);
    out << " functional_residual=" << functional_residual << '\n';
    return kExitOk;
}

int cmd_example(const RunConfig& cfg, const ExampleArgs& args, std::ostream& out)
{
    switch (args.which) {
    case 1: return example1(cfg, args, out);
    case 2: return example2(cfg, args, out);
    case 3: return example3(cfg, args, out);
    default: throw PreconditionError("unknown example " + std::to_string(args.which));
    }
}

int cmd_semiconj(const RunConfig& cfg, const SemiconjArgs& args, std::ostream& out, std::ostream& err)
{
    const double tol = cfg.tol.value_or(Tolerances{}.identity);
    auto load = [](const std::string& s) { return stage("input", [&] { return map_from_json(load_json(s)); }); };

    SemiconjTriple t;
    std::string mode;
    std::optional<Certification> swapped;
    if (!args.verify.empty()) {
        if (args.verify.size() != 3)
            throw PreconditionError("--verify needs exactly three maps f g h");
        mode = "verify";
        t = SemiconjTriple{load(args.verify[0]), load(args.verify[1]), load(args.verify[2]), args.iterate};
    } else if (args.u && args.v) {
        mode = "ritt";
        const RationalMap u = load(*args.u), v = load(*args.v);
        t = make_ritt_triple(u, v);
        swapped = certify(SemiconjTriple{t.g, t.f, v, 1}, tol);
    } else if (args.w) {
        mode = "power";
        t = make_power_family(load(*args.w), args.m, args.n);
    } else {
        throw PreconditionError("semiconj needs --u and --v, --w with --m and --n, or --verify f g h");
    }
    if (t.n < 0)
        throw PreconditionError("semiconj: iterate count must be non-negative");
    const Certification c = stage("certify", [&] { return certify(t, tol); });

    Json triple;
    triple["f"] = map_to_json(t.f);
    triple["g"] = map_to_json(t.g);
    triple["h"] = map_to_json(t.h);
    triple["n"] = t.n;
    write_json(cfg.out / "triple.json", triple);

    Json r;
    r["mode"] = mode;
    r["residual"] = number_to_json(c.residual);
    r["tolerance"] = number_to_json(tol);
    r["certified"] = c.certified;
    r["degenerate"] = c.degenerate;
    if (swapped)
        r["swapped"] = {{"residual", number_to_json(swapped->residual)}, {"certified", swapped->certified}};
    write_json(cfg.out / "report.json", r);

    const bool ok = c.certified && (!swapped || swapped->certified);
    if (!ok) {
        err << "certification failed: max residual " << std::max(c.residual, swapped ? swapped->residual : 0.0)
            << " > " << tol << '\n';
        return kExitCertification;
    }
    out << "semiconj: certified residual=" << c.residual << (c.degenerate ? " (degenerate n = 0)" : "") << '\n';
    return kExitOk;
}

int cmd_lattes(const RunConfig& cfg, const LattesArgs& args, std::ostream& out, std::ostream& err)
{
    const Lattice L = stage("lattice", [&] { return lattice_from_json(load_json(args.lattice)); });
    const int terms = cfg.order.value_or(kDefaultLaurentTerms);
    const int samples = cfg.samples.value_or(500);
    const double tol = cfg.tol.value_or(1e-8);
    const EllipticInvariants E = stage("invariants", [&] { return invariants_from_lattice(L, terms); });
    const LattesSystem S = stage("lattes", [&] { return lattes_from_invariants(E); });
    const double residual = stage("verify", [&] { return verify_lattes(S, samples, cfg.seed); });
    const double quadrupling = stage("verify", [&] { return verify_lattes(S, samples, cfg.seed, 2); });

    write_json(cfg.out / "map.json", map_to_json(S.map));
    Json r;
    r["lattice"] = lattice_to_json(L);
    r["g2"] = complex_to_json(E.g2);
    r["g3"] = complex_to_json(E.g3);
    r["discriminant"] = complex_to_json(E.discriminant());
    r["map"] = map_to_json(S.map);
    r["samples"] = samples;
    r["residual"] = number_to_json(residual);
    r["quadrupling_residual"] = number_to_json(quadrupling);
    r["tolerance"] = number_to_json(tol);
    r["fixed_points"] = fixed_points_to_json(fixed_points(S.map));
    write_json(cfg.out / "report.json", r);
    if (residual > tol) {
        err << "lattes certification failed: max residual " << residual << " > " << tol << '\n';
        return kExitCertification;
    }
    out << "lattes: residual=" << residual << " quadrupling=" << quadrupling << '\n';
    return kExitOk;
}

} // namespace invcurve::cli
