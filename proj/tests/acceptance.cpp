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

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "helpers.hpp"
#include "invcurve/cli.hpp"
#include "invcurve/curves.hpp"
#include "invcurve/json_io.hpp"
#include "invcurve/lattes.hpp"
#include "invcurve/poincare.hpp"
#include "invcurve/semiconj.hpp"
#include "oracles.hpp"

using namespace invcurve;
namespace fs = std::filesystem;

namespace {

struct Verdict
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

using Criterion = std::function<void(Verdict&)>;

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

fs::path scratch(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("invcurve_acceptance_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// Points with |z| spread log-uniformly over [r, 8r].
cplx beyond(std::mt19937_64& rng, double r)
{
    std::uniform_real_distribution<double> grow(0.0, 3.0), phase(0.0, 2 * std::numbers::pi);
    return std::polar(r * std::exp2(grow(rng)), phase(rng));
}

double functional_residual(const PoincareSeries& F, cplx z)
{
    return chordal_distance(F.map()(evaluate(F, z)), evaluate(F, F.multiplier() * z, 1));
}

void golden_a(Verdict& v)
{
    const PoincareSeries F = solve_coefficients(RationalMap::polynomial(Polynomial{0.0, 0.0, 1.0}), 1.0, 40);
    double coef = 0.0;
    for (int k = 1; k <= 20; ++k)
        coef = std::max(coef, oracle::relative_error(F.coefficient(k), oracle::exp_coefficient(k)));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    double fe = 0.0, oracle = 0.0;
    for (int i = 0; i < 200; ++i) {
        cplx z;
        do
            z = cplx(u(rng), u(rng));
        while (std::abs(z) > 5.0);
        fe = std::max(fe, functional_residual(F, z));
        oracle = std::max(oracle, chordal_distance(evaluate(F, z), SpherePoint(std::exp(z))));
    }
    v.detail << "coef rel err " << fmt(coef) << ", functional residual " << fmt(fe) << ", |F - e^z| " << fmt(oracle);
    v.require(coef <= 1e-12, "coefficients");
    v.require(fe <= 1e-9, "functional equation");
}

void golden_b(Verdict& v)
{
    const PoincareSeries F = solve_coefficients(RationalMap::polynomial(Polynomial{-2.0, 0.0, 1.0}), 2.0, 40);
    const cplx c1 = F.coefficient(1);
    double coef = 0.0;
    for (int k = 1; k <= 15; ++k)
        coef = std::max(coef, oracle::relative_error(F.coefficient(k) / c1, oracle::cosh_sqrt_coefficient(k)));
    v.detail << "lambda " << fmt(F.multiplier().real()) << ", ratio rel err " << fmt(coef);
    v.require(std::abs(F.multiplier() - 4.0) <= 1e-12, "multiplier");
    v.require(coef <= 1e-12, "coefficient ratios");
}

void random_poincare(Verdict& v)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(2, 3);
    int built = 0;
    double worst = 0.0;
    while (built < 20) {
        const RationalMap f = testing::random_map(rng, deg(rng));
        for (const auto& p : fixed_points(f)) {
            if (p.kind != FixedPointClass::repelling || p.location.is_infinite())
                continue;
            const PoincareSeries F = solve_coefficients(f, p.location.value(), 40);
            for (int i = 0; i < 100; ++i)
                worst = std::max(worst, functional_residual(F, beyond(rng, F.radius_estimate())));
            ++built;
            break;
        }
    }
    v.detail << built << " maps, max chordal residual " << fmt(worst);
    v.require(worst <= 1e-8, "residual");
}

void lattes(Verdict& v)
{
    double worst = 0.0;
    for (const Lattice& L : {Lattice(1.0, cplx(0, 1)), Lattice(2.0, cplx(0, 2.6)),
                             Lattice(1.0, cplx(std::numbers::sqrt2, 1.0))}) {
        const LattesSystem S = lattes_from_invariants(invariants_from_lattice(L));
        worst = std::max(worst, verify_lattes(S, 500, 4));
    }
    const EllipticInvariants unit = invariants_from_lattice(Lattice(1.0, cplx(0, 1)));
    const double s = std::pow(unit.g2.real() / 4.0, 0.25);
    const EllipticInvariants E = invariants_from_lattice(Lattice(1.0, cplx(0, 1)).scaled(s));
    const RationalMap want(Polynomial{1.0, 0.0, 2.0, 0.0, 1.0}, Polynomial{0.0, -4.0, 0.0, 4.0});
    const double lem = coefficient_deviation(lattes_from_invariants(E).map, want);
    v.detail << "max duplication residual " << fmt(worst) << ", lemniscatic coefficient deviation " << fmt(lem);
    v.require(worst <= 1e-8, "duplication");
    v.require(lem <= 1e-12, "lemniscatic");
}

struct EllipticExample
{
    EllipticInvariants E;
    RationalMap f;
    cplx offset;
    CurveTrace trace;
};

EllipticExample elliptic_example(const Lattice& L, cplx offset)
{
    EllipticInvariants E = invariants_from_lattice(L);
    RationalMap f = lattes_from_invariants(E).map;
    CurveTrace t = trace_wp_line(E, offset, 4000);
    return {std::move(E), std::move(f), offset, std::move(t)};
}

EllipticExample example1()
{
    const Lattice L(2.0, cplx(0, 2.6));
    return elliptic_example(L, L.period2() / 3.0);
}

EllipticExample example2() { return elliptic_example(Lattice(1.0, cplx(std::numbers::sqrt2, 1.0)), cplx(0, 1.0 / 3.0)); }

void example1_verdict(Verdict& v)
{
    const EllipticExample ex = example1();
    const double param = parametric_invariance_residual(ex.E, ex.f, ex.offset, 1000);
    const double circle = circle_fit(ex.trace).residual;
    std::optional<int> degree;
    double held_out = 0.0;
    for (int d = 1; d <= 8 && !degree; ++d) {
        const FitReport r = algebraic_fit(ex.trace, d);
        if (r.residual <= 1e-6) {
            degree = d;
            held_out = r.residual;
        }
    }
    const XYCheckReport xy = example1_xy_check(ex.E, ex.offset, 500);
    const double period = std::max(xy.period1_residual, xy.period2_residual);
    v.detail << "closed " << ex.trace.closed() << ", parametric " << fmt(param) << ", circle " << fmt(circle)
             << ", algebraic degree " << (degree ? std::to_string(*degree) : "none") << " (held-out "
             << fmt(held_out) << "), xy periods " << fmt(period);
    v.require(ex.trace.closed(), "closed");
    v.require(param <= 1e-7, "parametric invariance");
    v.require(circle > 1e-3, "not a circle");
    v.require(degree.has_value(), "algebraic fit");
    v.require(period <= 1e-8, "xy periodicity");
}

void example2_verdict(Verdict& v)
{
    const EllipticExample ex = example2();
    const double param = parametric_invariance_residual(ex.E, ex.f, ex.offset, 1000);
    const TranscendenceScan scan = transcendence_scan(ex.trace, 6);
    const TranscendenceScan control = transcendence_scan(example1().trace, 6);
    const Lattice L(1.0, cplx(std::numbers::sqrt2, 1.0)), M(1.0, cplx(std::numbers::sqrt2, -1.0));
    const CommensurabilityReport c = lattice_commensurability(L, M, 1000);
    v.detail << "parametric " << fmt(param) << ", held-out residuals";
    for (const FitReport& r : scan.fits)
        v.detail << ' ' << fmt(r.residual);
    v.detail << ", control degree "
             << (control.first_algebraic_degree ? std::to_string(*control.first_algebraic_degree) : "none") << ", "
             << to_string(c.verdict) << " (" << fmt(c.coordinates[0]) << ", " << fmt(c.coordinates[1]) << ")";
    v.require(param <= 1e-7, "parametric invariance");
    v.require(scan.no_low_degree_fit, "every residual >= 1e-3");
    v.require(control.first_algebraic_degree.has_value(), "control");
    v.require(c.verdict == Commensurability::incommensurable_up_to, "incommensurable");
    v.require(std::abs(c.coordinates[0] - 2 * std::numbers::sqrt2) <= 1e-9 && std::abs(c.coordinates[1] + 1.0) <= 1e-9,
              "coordinates");
}

void example3_verdict(Verdict& v)
{
    double joukowski = 0.0;
    for (int n = 1; n <= 8; ++n)
        joukowski = std::max(joukowski, verify_joukowski_identity(n));
    const PakovichExample P = pakovich_example(3);
    const double hyperbola = hyperbola_residual(P);
    const double invariance = pakovich_invariance_residual(P);
    v.detail << "J o P_n residual " << fmt(joukowski) << ", R(eps z) " << fmt(P.symmetry_residual) << ", hyperbola "
             << fmt(hyperbola) << ", invariance " << fmt(invariance);
    v.require(joukowski <= 1e-12, "Joukowski identity");
    v.require(P.symmetry_residual <= 1e-12, "symmetry");
    v.require(hyperbola <= 1e-10, "hyperbola");
    v.require(invariance <= 1e-7, "invariance");
}

RationalMap random_low_degree(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> deg(1, 3);
    return testing::random_map(rng, deg(rng));
}

void semiconj_suite(Verdict& v)
{
    std::mt19937_64 rng(8);
    double ritt = 0.0, swapped = 0.0, power = 0.0;
    for (int i = 0; i < 50; ++i) {
        const RationalMap u = random_low_degree(rng), w = random_low_degree(rng);
        const SemiconjTriple t = make_ritt_triple(u, w);
        ritt = std::max(ritt, certify(t).residual);
        swapped = std::max(swapped, certify(SemiconjTriple{t.g, t.f, w, 1}).residual);
    }
    std::uniform_int_distribution<int> mdist(0, 2), ndist(1, 3);
    for (int i = 0; i < 20; ++i) {
        const int m = mdist(rng), n = ndist(rng);
        power = std::max(power, certify(make_power_family(random_low_degree(rng), m, n)).residual);
    }

    const SemiconjTriple t = make_ritt_triple(RationalMap::polynomial(Polynomial{0.0, 1.0, 1.0}),
                                              RationalMap::polynomial(Polynomial{1.0, 0.0, 0.0, 1.0}));
    Json bad = map_to_json(t.h);
    bad["num"][0][0] = bad["num"][0][0].get<double>() + 1e-3;
    std::ostringstream out, err;
    const int code = cli::run({"semiconj", "--verify", map_to_json(t.f).dump(), map_to_json(t.g).dump(), bad.dump(),
                               "--out", scratch("semiconj").string()},
                              out, err);
    v.detail << "Ritt " << fmt(ritt) << ", swapped " << fmt(swapped) << ", power " << fmt(power)
             << ", corrupted-h exit " << code;
    v.require(ritt <= 1e-9, "Ritt");
    v.require(swapped <= 1e-9, "swapped");
    v.require(power <= 1e-9, "power family");
    v.require(code == cli::kExitCertification, "negative control exit code");
}

void algebra_suite(Verdict& v)
{
    std::mt19937_64 rng(9);
    int count_failures = 0;
    double compose_eval = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int d = 2 + i % 4;
        const RationalMap f = testing::random_map(rng, d);
        int total = 0;
        for (const auto& p : fixed_points(f))
            total += p.multiplicity;
        if (total != d + 1)
            ++count_failures;
        const RationalMap g = testing::random_map(rng, 2 + (i / 4) % 4);
        const RationalMap fg = compose(f, g);
        for (int k = 0; k < 50; ++k) {
            const SpherePoint z = testing::random_sphere_point(rng);
            compose_eval = std::max(compose_eval, chordal_distance(fg(z), f(g(z))));
        }
        compose_eval = std::max(compose_eval, coefficient_deviation(iterate(f, 2), compose(f, f)));
    }
    v.detail << "fixed-point count mismatches " << count_failures << ", compose/eval " << fmt(compose_eval);
    v.require(count_failures == 0, "fixed-point count");
    v.require(compose_eval <= 1e-10, "compose-eval");
}

void determinism(Verdict& v)
{
    int mismatches = 0, files = 0;
    for (const int which : {1, 2, 3}) {
        cli::RunConfig cfg;
        cli::ExampleArgs args;
        args.which = which;
        std::ostringstream oa, ob;
        const fs::path a = scratch("det_a"), b = scratch("det_b");
        cfg.out = a;
        cli::cmd_example(cfg, args, oa);
        cfg.out = b;
        cli::cmd_example(cfg, args, ob);
        mismatches += oa.str() != ob.str();
        for (const auto& entry : fs::directory_iterator(a)) {
            ++files;
            mismatches += slurp(entry.path()) != slurp(b / entry.path().filename());
        }
    }
    v.detail << files << " files compared, " << mismatches << " mismatches";
    v.require(files > 0 && mismatches == 0, "byte-identical");
}

} // namespace

int main()
{
    const std::pair<const char*, Criterion> criteria[] = {
        {"Poincare golden A (z^2, a = 1)", golden_a},
        {"Poincare golden B (z^2 - 2, a = 2)", golden_b},
        {"random-map Poincare residual", random_poincare},
        {"Lattes certification", lattes},
        {"Example 1 verdict", example1_verdict},
        {"Example 2 verdict", example2_verdict},
        {"Example 3 verdict", example3_verdict},
        {"semiconjugacy suite", semiconj_suite},
        {"algebra suite", algebra_suite},
        {"determinism", determinism},
    };
    int failures = 0, index = 0;
    for (const auto& [name, body] : criteria) {
        ++index;
        Verdict v;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(v);
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << " [exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !v.pass;
        std::printf("%s %2d %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.str().c_str(), secs);
        std::fflush(stdout);
    }
    return failures;
}
