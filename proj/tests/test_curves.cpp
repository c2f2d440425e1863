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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "invcurve/curves.hpp"
#include "invcurve/errors.hpp"
#include "invcurve/lattes.hpp"
#include "invcurve/poincare.hpp"

using namespace invcurve;

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

CurveTrace circle_trace(cplx center, double radius, int n)
{
    return CurveTrace::sample([=](double t) { return SpherePoint(center + std::polar(radius, t)); }, 0.0, two_pi, n,
                              true, "circle");
}

struct Example
{
    Lattice lattice;
    cplx offset;
    EllipticInvariants E;
    RationalMap f;
};

Example example1()
{
    const Lattice L(2.0, cplx(0, 2.6));
    const EllipticInvariants E = invariants_from_lattice(L);
    return {L, L.period2() / 3.0, E, lattes_from_invariants(E).map};
}

Example example2()
{
    const Lattice L(1.0, cplx(std::numbers::sqrt2, 1.0));
    const EllipticInvariants E = invariants_from_lattice(L);
    return {L, cplx(0, 1.0 / 3.0), E, lattes_from_invariants(E).map};
}

// Same points, reassigned to the parameter grid in another order.
CurveTrace permuted(const CurveTrace& t, std::vector<std::size_t> order)
{
    std::vector<TraceSample> s;
    for (std::size_t i = 0; i < order.size(); ++i)
        s.push_back({static_cast<double>(i), t.samples()[order[i]].point});
    return CurveTrace(std::move(s), false, "permuted");
}

} // namespace

TEST_CASE("curve traces: construction, reversal and CSV round trip")
{
    CHECK_THROWS_AS(CurveTrace({{0.0, 1.0}, {0.0, 2.0}}, false, "bad"), PreconditionError);
    const CurveTrace c = circle_trace(0.0, 1.0, 100);
    CHECK(c.size() == 100);
    CHECK(c.closed());
    CHECK(c.segment_count() == 100);
    CHECK(c.max_gap() == doctest::Approx(2 * std::sin(two_pi / 200)).epsilon(1e-12));

    auto f = [](double t) { return SpherePoint(cplx(t, t * t)); };
    const CurveTrace fwd = CurveTrace::sample(f, 0.0, 1.0, 11, false, "fwd");
    const CurveTrace rev = CurveTrace::sample(f, 1.0, 0.0, 11, false, "rev");
    for (std::size_t i = 0; i < 11; ++i)
        CHECK(chordal_distance(rev.samples()[i].point, fwd.samples()[10 - i].point) < 1e-15);

    std::vector<TraceSample> s = fwd.samples();
    s.push_back({2.0, SpherePoint::infinity()});
    const CurveTrace with_inf(s, false, "x");
    std::stringstream io;
    write_csv(io, with_inf);
    CHECK(io.str().rfind("parameter,re,im,is_infinite\n", 0) == 0);
    const CurveTrace back = read_csv(io);
    REQUIRE(back.size() == with_inf.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back.samples()[i].parameter == with_inf.samples()[i].parameter);
        CHECK(back.samples()[i].point == with_inf.samples()[i].point);
    }
}

TEST_CASE("distance to a traced circle is below the discretization bound")
{
    const CurveTrace c = circle_trace(0.0, 1.0, 720);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.0, two_pi);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i)
        worst = std::max(worst, c.distance_to(SpherePoint(std::polar(1.0, u(rng)))));
    CHECK(worst < 1e-8);
    CHECK(c.distance_to(SpherePoint(0.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    CHECK(c.distance_to(SpherePoint::infinity()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
}

TEST_CASE("invariance residual examples with z^2")
{
    const RationalMap sq = RationalMap::polynomial(Polynomial{0.0, 0.0, 1.0});
    const CurveTrace unit = circle_trace(0.0, 1.0, 1000);
    CHECK(invariance_residual(sq, unit) <= 1e-10);
    CHECK(invariance_residual(iterate(sq, 2), unit) <= 2e-10);
    // |z| = 2 maps to |z| = 4: chordal gap between those circles.
    const double gap = chordal_distance(SpherePoint(2.0), SpherePoint(4.0));
    CHECK(invariance_residual(sq, circle_trace(0.0, 2.0, 1000)) == doctest::Approx(gap).epsilon(1e-6));
}

TEST_CASE("Example 1: closed trace, invariance and the doubling shift")
{
    const Example ex = example1();
    const CurveTrace t = trace_wp_line(ex.E, ex.offset, 4000);
    CHECK(t.closed());
    CHECK(invariance_residual(ex.f, t) <= 1e-7);
    CHECK(invariance_residual(iterate(ex.f, 2), t) <= 2e-7);
    const auto shift = line_doubling_shift(ex.lattice, ex.offset);
    REQUIRE(shift);
    CHECK(std::abs(*shift) < 1e-12);
    CHECK(parametric_invariance_residual(ex.E, ex.f, ex.offset, 1000) <= 1e-7);
    // Some other horizontal line is not invariant.
    CHECK_FALSE(line_doubling_shift(ex.lattice, ex.offset * 0.9));
    CHECK_THROWS_AS(parametric_invariance_residual(ex.E, ex.f, ex.offset * 0.9, 10), PreconditionError);
    CHECK(invariance_residual(ex.f, trace_wp_line(ex.E, ex.offset * 0.9, 4000)) > 1e-3);
}

TEST_CASE("Example 2: invariance with shift -sqrt2 mod 1")
{
    const Example ex = example2();
    const auto shift = line_doubling_shift(ex.lattice, ex.offset);
    REQUIRE(shift);
    CHECK(std::abs(*shift - (1.0 - std::numbers::sqrt2)) < 1e-12);
    CHECK(parametric_invariance_residual(ex.E, ex.f, ex.offset, 1000) <= 1e-7);
    const CurveTrace t = trace_wp_line(ex.E, ex.offset, 4000);
    CHECK(t.closed());
    CHECK(invariance_residual(ex.f, t) <= 1e-7);
}

TEST_CASE("wp on the half-period line is real")
{
    const Example ex = example1();
    const CurveTrace t = trace_wp_line(ex.E, ex.lattice.period2() / 2.0, 500);
    for (const auto& s : t.samples())
        CHECK(std::abs(s.point.value().imag()) <= 1e-9 * std::max(1.0, std::abs(s.point.value())));
    const FitReport line = circle_fit(t);
    CHECK(line.residual <= 1e-8);
    CHECK(std::abs(line.coefficients[0]) < 1e-8);
    CHECK_THROWS_AS(trace_wp_line(ex.E, ex.lattice.period1(), 10), PoleError);
}

TEST_CASE("trace_wp_line: reversed range gives the same points in reverse")
{
    const Example ex = example1();
    const CurveTrace a = trace_wp_line(ex.E, ex.offset, 0.0, 1.0, 51);
    const CurveTrace b = trace_wp_line(ex.E, ex.offset, 1.0, 0.0, 51);
    CHECK_FALSE(a.closed());
    for (std::size_t i = 0; i < 51; ++i)
        CHECK(chordal_distance(a.samples()[i].point, b.samples()[50 - i].point) < 1e-14);
}

TEST_CASE("circle fit examples")
{
    const FitReport c = circle_fit(circle_trace(0.0, 1.0, 64));
    CHECK(c.residual <= 1e-12);
    CHECK(c.passed);
    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(c.coefficients[0] - r2) < 1e-12);
    CHECK(std::abs(c.coefficients[1]) < 1e-12);
    CHECK(std::abs(c.coefficients[2]) < 1e-12);
    CHECK(std::abs(c.coefficients[3] + r2) < 1e-12);

    const CurveTrace axis = CurveTrace::sample([](double t) { return SpherePoint(t); }, -3.0, 5.0, 40, false, "axis");
    const FitReport l = circle_fit(axis);
    CHECK(l.residual <= 1e-12);
    CHECK(std::abs(l.coefficients[0]) < 1e-12);
    CHECK(std::abs(std::abs(l.coefficients[2]) - 1.0) < 1e-12);

    const Example ex = example1();
    CHECK(circle_fit(trace_wp_line(ex.E, ex.offset, 4000)).residual > 1e-3);
    CHECK_THROWS_AS(circle_fit(CurveTrace::sample([](double) { return SpherePoint(1.0); }, 0, 1, 20, false, "pt")),
                    PreconditionError);
}

TEST_CASE("property: circle fit residual is invariant under rotation")
{
    const Example ex = example1();
    const CurveTrace t = trace_wp_line(ex.E, ex.offset, 2000);
    const double base = circle_fit(t).residual;
    for (const double angle : {0.3, 1.9, 4.0}) {
        const cplx rot = std::polar(1.0, angle);
        std::vector<TraceSample> s;
        for (const auto& x : t.samples())
            s.push_back({x.parameter, SpherePoint(rot * x.point.value())});
        CHECK(std::abs(circle_fit(CurveTrace(s, true, "rotated")).residual - base) <= 1e-10);
    }
}

TEST_CASE("algebraic fit examples")
{
    const FitReport c = algebraic_fit(circle_trace(0.0, 1.0, 200), 2);
    CHECK(c.residual <= 1e-12);
    double norm = 0.0;
    for (const double x : c.coefficients)
        norm += x * x;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.monomials.size() == 6);
    CHECK_THROWS_AS(algebraic_fit(circle_trace(0.0, 1.0, 20), 3), PreconditionError);

    const Example ex = example1();
    const CurveTrace t = trace_wp_line(ex.E, ex.offset, 4000);
    std::optional<int> degree;
    for (int d = 2; d <= 8 && !degree; ++d)
        if (algebraic_fit(t, d).passed)
            degree = d;
    REQUIRE(degree);
    CHECK(*degree == 4);
}

TEST_CASE("algebraic fit excludes infinite samples")
{
    std::vector<TraceSample> s = circle_trace(0.0, 1.0, 100).samples();
    s.push_back({100.0, SpherePoint::infinity()});
    const FitReport r = algebraic_fit(CurveTrace(s, false, "x"), 2);
    CHECK(r.infinite_excluded == 1);
    CHECK(r.samples_used == 100);
}

TEST_CASE("property: smallest singular value ignores order and duplicates")
{
    const Example ex = example1();
    const CurveTrace t = trace_wp_line(ex.E, ex.offset, 600);
    std::vector<std::size_t> order(t.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(72);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> dup = order;
    for (std::size_t i = 0; i < 100; ++i)
        dup.push_back(order[i]);
    for (const int d : {2, 3}) {
        const double base = algebraic_fit(t, d).smallest_singular_value;
        CHECK(std::abs(algebraic_fit(permuted(t, order), d).smallest_singular_value - base) <= 1e-10);
        CHECK(std::abs(algebraic_fit(permuted(t, dup), d).smallest_singular_value - base) <= 1e-10);
    }
}

TEST_CASE("transcendence scan controls")
{
    const TranscendenceScan circle = transcendence_scan(circle_trace(0.0, 1.0, 400), 4);
    REQUIRE(circle.first_algebraic_degree);
    CHECK(*circle.first_algebraic_degree == 2);
    CHECK_FALSE(circle.no_low_degree_fit);

    const Example ex = example1();
    const TranscendenceScan control = transcendence_scan(trace_wp_line(ex.E, ex.offset, 4000), 6);
    REQUIRE(control.first_algebraic_degree);
    CHECK(*control.first_algebraic_degree <= 8);
    CHECK_FALSE(transcendence_evidence(control, control));
}

TEST_CASE("Example 2 scan: low-degree residuals and their stability")
{
    const Example ex = example2();
    const TranscendenceScan a = transcendence_scan(trace_wp_line(ex.E, ex.offset, 4000), 6);
    const TranscendenceScan b = transcendence_scan(trace_wp_line(ex.E, ex.offset, 8000), 6);
    CHECK(a.no_low_degree_fit == b.no_low_degree_fit);
    for (int d = 1; d <= 3; ++d)
        CHECK(a.fits[static_cast<std::size_t>(d - 1)].residual >= 1e-4);
    for (std::size_t i = 0; i < a.fits.size(); ++i) {
        const double ra = a.fits[i].residual, rb = b.fits[i].residual;
        if (ra >= 1e-12)
            CHECK(std::abs(ra - rb) <= 0.1 * ra);
    }
}

TEST_CASE("lattice commensurability")
{
    const Lattice L(1.0, cplx(std::numbers::sqrt2, 1.0));
    const auto same = lattice_commensurability(L, L);
    CHECK(same.verdict == Commensurability::commensurable);
    CHECK(same.coordinates[0] == doctest::Approx(1.0));
    CHECK(std::abs(same.coordinates[1]) < 1e-15);

    const auto scaled = lattice_commensurability(L, L.scaled(1.5));
    CHECK(scaled.verdict == Commensurability::commensurable);
    REQUIRE(scaled.fractions[0]);
    CHECK(scaled.fractions[0]->numerator == 3);
    CHECK(scaled.fractions[0]->denominator == 2);

    const auto conj = lattice_commensurability(L, Lattice(1.0, cplx(std::numbers::sqrt2, -1.0)));
    CHECK(conj.verdict == Commensurability::incommensurable_up_to);
    CHECK(conj.max_denominator == 1000);
    // sqrt2 - i = 2 sqrt2 * 1 - (sqrt2 + i).
    CHECK(conj.coordinates[0] == doctest::Approx(2 * std::numbers::sqrt2).epsilon(1e-14));
    CHECK(conj.coordinates[1] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK_FALSE(conj.fractions[0]);
    CHECK(to_string(conj.verdict) == "INCOMMENSURABLE-UP-TO");
}

TEST_CASE("Example 1 X, Y cross-check")
{
    const Example ex = example1();
    const XYCheckReport r = example1_xy_check(ex.E, ex.offset, 300);
    CHECK(r.on_line_residual <= 1e-10);
    CHECK(r.period1_residual <= 1e-8);
    CHECK(r.period2_residual <= 1e-8);
    CHECK(r.off_line_y_sample > 1e-3);
    const Example ex2 = example2();
    CHECK_THROWS_AS(example1_xy_check(ex2.E, ex2.offset, 10), PreconditionError);
}

TEST_CASE("repelling fixed points of the Example 1 map on the curve have real multipliers")
{
    const Example ex = example1();
    const auto rep = multiplier_real_check(ex.f, trace_wp_line(ex.E, ex.offset, 4000));
    CHECK(rep.entries.size() == 3);
    CHECK(rep.all_real);
    for (const auto& e : rep.entries)
        CHECK(std::abs(e.multiplier + 2.0) < 1e-8);
}
