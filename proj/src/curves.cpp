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

#include "invcurve/curves.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <Eigen/Dense>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

bool is_real_period(cplx p)
{
    return std::abs(p.imag()) <= 1e-12 * std::abs(p);
}

struct FitData
{
    std::vector<cplx> points; // distinct finite samples, first-occurrence order
    std::size_t infinite = 0;
};

FitData collect(const CurveTrace& trace)
{
    FitData data;
    std::set<std::pair<double, double>> seen;
    for (const TraceSample& s : trace.samples()) {
        if (s.point.is_infinite()) {
            ++data.infinite;
            continue;
        }
        const cplx z = s.point.value();
        if (seen.insert({z.real(), z.imag()}).second)
            data.points.push_back(z);
    }
    return data;
}

FitFrame frame_for(const std::vector<cplx>& pts)
{
    FitFrame f;
    cplx sum = 0.0;
    for (const cplx z : pts)
        sum += z;
    f.center = sum / static_cast<double>(pts.size());
    double r = 0.0;
    for (const cplx z : pts)
        r = std::max(r, std::abs(z - f.center));
    if (!(r > 0.0))
        throw PreconditionError("fit: all samples coincide");
    f.scale = r;
    return f;
}

std::vector<std::pair<int, int>> monomials_up_to(int d)
{
    std::vector<std::pair<int, int>> m;
    for (int t = 0; t <= d; ++t)
        for (int i = t; i >= 0; --i)
            m.emplace_back(i, t - i);
    return m;
}

Eigen::MatrixXd monomial_matrix(const std::vector<cplx>& pts, const FitFrame& frame,
                                const std::vector<std::pair<int, int>>& mons)
{
    Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), static_cast<Eigen::Index>(mons.size()));
    for (std::size_t r = 0; r < pts.size(); ++r) {
        const cplx q = (pts[r] - frame.center) / frame.scale;
        for (std::size_t c = 0; c < mons.size(); ++c)
            A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::pow(q.real(), mons[c].first) * std::pow(q.imag(), mons[c].second);
    }
    return A;
}

// Smallest right singular vector and value of A with columns scaled to unit
// norm; the vector is mapped back to unscaled columns and renormalized.
std::pair<Eigen::VectorXd, double> null_direction(const Eigen::MatrixXd& A)
{
    Eigen::VectorXd norms = A.colwise().norm().transpose();
    for (Eigen::Index i = 0; i < norms.size(); ++i)
        if (norms(i) == 0.0)
            norms(i) = 1.0;
    const Eigen::MatrixXd scaled = A * norms.cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    Eigen::VectorXd v = svd.matrixV().col(last).cwiseQuotient(norms);
    v.normalize();
    // Deterministic sign: largest-magnitude entry positive.
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0)
        v = -v;
    return {v, svd.singularValues()(last)};
}

std::vector<double> to_std(const Eigen::VectorXd& v)
{
    return std::vector<double>(v.data(), v.data() + v.size());
}

} // namespace

CurveTrace trace_wp_line(const EllipticInvariants& E, cplx offset, double t0, double t1, int n)
{
    const cplx r = reduce_to_fundamental(E.lattice, offset);
    if (std::abs(r) <= 1e-12 * E.lattice.shortest_vector())
        throw PoleError("trace_wp_line: offset is a lattice point");
    const double span = t1 - t0;
    const bool closed = span != 0.0 && std::abs(reduce_to_fundamental(E.lattice, span)) <= 1e-12 * std::abs(span);
    return CurveTrace::sample([&](double t) { return wp_eval(E, t + offset); }, t0, t1, n, closed,
                              "wp(t + offset)");
}

CurveTrace trace_wp_line(const EllipticInvariants& E, cplx offset, int n)
{
    const cplx p = E.lattice.period1();
    if (!is_real_period(p))
        throw PreconditionError("trace_wp_line: first period is not real");
    return trace_wp_line(E, offset, 0.0, p.real(), n);
}

double invariance_residual(const RationalMap& f, const CurveTrace& curve, const CurveTrace& queries)
{
    double worst = 0.0;
    for (const TraceSample& s : queries.samples())
        worst = std::max(worst, curve.distance_to(f(s.point)));
    return worst;
}

double invariance_residual(const RationalMap& f, const CurveTrace& trace)
{
    return invariance_residual(f, trace, trace);
}

std::optional<double> line_doubling_shift(const Lattice& lattice, cplx offset, double tol)
{
    const cplx p1 = lattice.period1();
    if (!is_real_period(p1))
        return std::nullopt;
    const cplx triple = 3.0 * offset;
    const double n = triple.imag() / lattice.period2().imag();
    if (std::abs(n - std::round(n)) > tol * (1.0 + std::abs(n)))
        return std::nullopt;
    const double shift = (triple - std::round(n) * lattice.period2()).real();
    const double P = p1.real();
    return shift - P * std::floor(shift / P + 0.5);
}

double parametric_invariance_residual(const EllipticInvariants& E, const RationalMap& f, cplx offset, int n)
{
    const auto shift = line_doubling_shift(E.lattice, offset);
    if (!shift)
        throw PreconditionError("parametric_invariance_residual: line is not invariant under doubling");
    const double P = E.lattice.period1().real();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = P * k / n;
        const SpherePoint lhs = f(wp_eval(E, x + offset));
        const SpherePoint rhs = wp_eval(E, -2.0 * x - *shift + offset);
        worst = std::max(worst, chordal_distance(lhs, rhs));
    }
    return worst;
}

FitReport circle_fit(const CurveTrace& trace, double threshold)
{
    const FitData data = collect(trace);
    if (data.points.size() < 8)
        throw PreconditionError("circle_fit: need at least 8 finite samples");
    FitReport rep;
    rep.degree = 2;
    rep.frame = frame_for(data.points);
    rep.infinite_excluded = data.infinite;
    rep.samples_used = data.points.size();
    rep.threshold = threshold;

    Eigen::MatrixXd A(static_cast<Eigen::Index>(data.points.size()), 4);
    for (std::size_t r = 0; r < data.points.size(); ++r) {
        const cplx q = (data.points[r] - rep.frame.center) / rep.frame.scale;
        const auto i = static_cast<Eigen::Index>(r);
        A(i, 0) = std::norm(q);
        A(i, 1) = q.real();
        A(i, 2) = q.imag();
        A(i, 3) = 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinV);
    Eigen::VectorXd v = svd.matrixV().col(3);
    Eigen::Index imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    if (v(imax) < 0.0)
        v = -v;
    rep.smallest_singular_value = svd.singularValues()(3);
    rep.residual = (A * v).cwiseAbs().maxCoeff();
    rep.coefficients = to_std(v);
    rep.passed = rep.residual <= threshold;
    return rep;
}

FitReport algebraic_fit(const CurveTrace& trace, int degree, double threshold)
{
    if (degree < 1)
        throw PreconditionError("algebraic_fit: degree must be at least 1");
    const FitData data = collect(trace);
    const auto mons = monomials_up_to(degree);
    if (data.points.size() < 3 * mons.size())
        throw PreconditionError("algebraic_fit: under-sampled (" + std::to_string(data.points.size()) + " < " +
                                std::to_string(3 * mons.size()) + ")");
    FitReport rep;
    rep.degree = degree;
    rep.monomials = mons;
    rep.frame = frame_for(data.points);
    rep.infinite_excluded = data.infinite;
    rep.samples_used = data.points.size();
    rep.threshold = threshold;

    std::vector<cplx> train, test;
    for (std::size_t i = 0; i < data.points.size(); ++i)
        (i % 2 == 0 ? train : test).push_back(data.points[i]);

    rep.smallest_singular_value = null_direction(monomial_matrix(data.points, rep.frame, mons)).second;
    const Eigen::VectorXd c = null_direction(monomial_matrix(train, rep.frame, mons)).first;
    rep.residual = (monomial_matrix(test, rep.frame, mons) * c).cwiseAbs().maxCoeff();
    rep.coefficients = to_std(c);
    rep.passed = rep.residual <= threshold;
    return rep;
}

TranscendenceScan transcendence_scan(const CurveTrace& trace, int d_max, double threshold, double algebraic_threshold)
{
    TranscendenceScan scan;
    scan.threshold = threshold;
    scan.no_low_degree_fit = true;
    for (int d = 1; d <= d_max; ++d) {
        FitReport r = algebraic_fit(trace, d, algebraic_threshold);
        if (r.residual < threshold)
            scan.no_low_degree_fit = false;
        if (r.passed && !scan.first_algebraic_degree)
            scan.first_algebraic_degree = d;
        scan.fits.push_back(std::move(r));
    }
    return scan;
}

bool transcendence_evidence(const TranscendenceScan& candidate, const TranscendenceScan& control)
{
    return candidate.no_low_degree_fit && control.first_algebraic_degree.has_value();
}

std::string to_string(Commensurability c)
{
    return c == Commensurability::commensurable ? "COMMENSURABLE" : "INCOMMENSURABLE-UP-TO";
}

CommensurabilityReport lattice_commensurability(const Lattice& L1, const Lattice& L2, std::int64_t q_max, double tol)
{
    const auto [a, b] = L1.coordinates(L2.period1());
    const auto [c, d] = L1.coordinates(L2.period2());
    CommensurabilityReport rep{Commensurability::commensurable, q_max, {a, b, c, d}, {}};
    for (std::size_t i = 0; i < 4; ++i) {
        rep.fractions[i] = detect_rational(rep.coordinates[i], q_max, tol);
        if (!rep.fractions[i])
            rep.verdict = Commensurability::incommensurable_up_to;
    }
    return rep;
}

XYCheckReport example1_xy_check(const EllipticInvariants& E, cplx offset, int n_samples, std::uint64_t seed)
{
    if (!E.lattice.is_rectangular(1e-12))
        throw PreconditionError("example1_xy_check: lattice is not rectangular");
    const double shift = 2.0 * offset.imag();
    struct XY
    {
        cplx wp, X, Y;
        bool finite;
    };
    auto xy = [&](cplx z) {
        const SpherePoint a = wp_eval(E, z);
        const SpherePoint b = wp_eval(E, std::conj(z) + cplx(0.0, shift));
        if (a.is_infinite() || b.is_infinite())
            return XY{0.0, 0.0, 0.0, false};
        const cplx w = a.value(), r = std::conj(b.value());
        return XY{w, (w + r) / 2.0, (w - r) / cplx(0.0, 2.0), true};
    };

    XYCheckReport rep;
    const cplx p1 = E.lattice.period1(), p2 = E.lattice.period2();
    for (int k = 0; k < n_samples; ++k) {
        const XY v = xy(p1 * (static_cast<double>(k) / n_samples) + offset);
        if (!v.finite)
            continue;
        const double err = std::abs(v.X - v.wp.real()) + std::abs(v.Y - v.wp.imag());
        rep.on_line_residual = std::max(rep.on_line_residual, err / std::max(1.0, std::abs(v.wp)));
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    auto rel = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); };
    for (int k = 0; k < n_samples; ++k) {
        const cplx z = u(rng) * p1 + u(rng) * p2;
        const XY base = xy(z), s1 = xy(z + p1), s2 = xy(z + p2);
        if (!base.finite || !s1.finite || !s2.finite || std::abs(base.X) > 1e6 || std::abs(base.Y) > 1e6)
            continue;
        rep.period1_residual = std::max({rep.period1_residual, rel(base.X, s1.X), rel(base.Y, s1.Y)});
        rep.period2_residual = std::max({rep.period2_residual, rel(base.X, s2.X), rel(base.Y, s2.Y)});
    }
    const XY real_point = xy(0.3 * p1);
    rep.off_line_y_sample = real_point.finite ? std::abs(real_point.Y) : 0.0;
    return rep;
}

} // namespace invcurve
