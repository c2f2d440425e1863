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

#include "invcurve/poincare.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <cmath>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

constexpr double kMaxRadius = 1e6;

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 lerp(const Vec3& a, const Vec3& b, double t)
{
    return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2])};
}

struct SegmentClosest
{
    double s;
    double t;
    double distance;
};

// Closest points of segments p1-q1 and p2-q2 (Ericson, Real-Time Collision
// Detection, 5.1.9).
SegmentClosest closest_segments(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2)
{
    const Vec3 d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    constexpr double kTiny = 1e-30;
    double s = 0.0, t = 0.0;
    if (a <= kTiny && e <= kTiny) {
        // both degenerate
    } else if (a <= kTiny) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= kTiny) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            s = denom > kTiny ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    const Vec3 c1 = lerp(p1, q1, s), c2 = lerp(p2, q2, t);
    const Vec3 d = sub(c1, c2);
    return {s, t, std::sqrt(dot(d, d))};
}

double radius_from_coefficients(const TruncatedPowerSeries& s)
{
    const int N = s.order();
    const int first = std::max(1, N - N / 3);
    double limsup = 0.0;
    for (int k = first; k <= N; ++k) {
        const double m = std::abs(s[k]);
        if (m > 0.0)
            limsup = std::max(limsup, std::pow(m, 1.0 / k));
    }
    if (limsup == 0.0)
        return kMaxRadius;
    return std::min(1.0 / limsup, kMaxRadius);
}

// Shrinks rho/2 until the last two retained terms are negligible against the
// largest term.
double working_radius_for(const TruncatedPowerSeries& s, double rho)
{
    const int N = s.order();
    double r = rho / 2.0;
    for (int it = 0; it < 400; ++it) {
        double biggest = std::abs(s[0]);
        for (int k = 1; k <= N; ++k)
            biggest = std::max(biggest, std::abs(s[k]) * std::pow(r, k));
        const double tail = std::abs(s[N]) * std::pow(r, N) + (N >= 1 ? std::abs(s[N - 1]) * std::pow(r, N - 1) : 0.0);
        if (tail <= 1e-16 * std::max(biggest, 1.0))
            break;
        r *= 0.9;
    }
    return r;
}

} // namespace

PoincareSeries::PoincareSeries(RationalMap map, cplx fixed_point, cplx multiplier, TruncatedPowerSeries series,
                               double radius_estimate)
    : map_(std::move(map)), fixed_point_(fixed_point), multiplier_(multiplier), series_(std::move(series)),
      radius_(radius_estimate), working_radius_(working_radius_for(series_, radius_estimate))
{
}

PoincareSeries solve_coefficients(const RationalMap& f, cplx a, int order, const PoincareOptions& options)
{
    if (order < 1)
        throw PreconditionError("solve_coefficients: order must be at least 1");
    if (chordal_distance(f(SpherePoint(a)), SpherePoint(a)) > options.fixed_tol)
        throw PreconditionError("solve_coefficients: point is not fixed by the map");
    const cplx lambda = f.derivative(a);
    if (std::abs(lambda) <= 1.0 + options.classify_tol)
        throw PreconditionError("solve_coefficients: fixed point is not repelling (|lambda| = " +
                                std::to_string(std::abs(lambda)) + ")");

    TruncatedPowerSeries F(order);
    F[0] = a;
    F[1] = 1.0;
    cplx lambda_k = lambda;
    for (int k = 2; k <= order; ++k) {
        lambda_k *= lambda;
        const cplx gap = lambda_k - lambda;
        if (std::abs(gap) <= options.degenerate_tol * std::abs(lambda_k))
            throw PreconditionError("solve_coefficients: resonant multiplier");
        // With c_k still zero, the z^k coefficient of f(F) is everything but
        // the lambda c_k term.
        const cplx rest = compose_rational(f, F.truncated(k))[k];
        F[k] = rest / gap;
    }
    const double rho = radius_from_coefficients(F);
    return PoincareSeries(f, a, lambda, std::move(F), rho);
}

SpherePoint evaluate(const PoincareSeries& F, cplx z, int extra_depth)
{
    if (extra_depth < 0)
        throw PreconditionError("evaluate: negative extra depth");
    const double r = F.working_radius();
    const cplx lambda = F.multiplier();
    int k = 0;
    cplx w = z;
    while (std::abs(w) > r && k < 4000) {
        w /= lambda;
        ++k;
    }
    for (int j = 0; j < extra_depth; ++j, ++k)
        w /= lambda;
    SpherePoint v(F.series()(w));
    for (int j = 0; j < k; ++j)
        v = F.map()(v);
    return v;
}

MultiplierRealReport multiplier_real_check(const RationalMap& f, const CurveTrace& trace, double near,
                                           double imag_tol)
{
    MultiplierRealReport report;
    for (const FixedPointInfo& fp : fixed_points(f)) {
        if (fp.kind != FixedPointClass::repelling)
            continue;
        const double d = trace.distance_to(fp.location);
        if (d > near)
            continue;
        const bool real = std::abs(fp.multiplier.imag()) <= imag_tol;
        report.entries.push_back({fp.location, fp.multiplier, d, real});
        report.all_real = report.all_real && real;
    }
    return report;
}

CurveTrace trace_real_axis(const PoincareSeries& F, double T, int n, double imag_tol)
{
    const cplx lambda = F.multiplier();
    if (std::abs(lambda.imag()) > imag_tol)
        throw PreconditionError("trace_real_axis: multiplier is not real");
    std::ostringstream source;
    source << "poincare a=" << F.fixed_point() << " lambda=" << lambda.real();
    if (lambda.real() > 0.0)
        return CurveTrace::sample([&](double t) { return evaluate(F, t); }, -T, T, n, false, source.str());
    // Same linearizer, now for f^2 with multiplier lambda^2 > 1.
    const PoincareSeries G = solve_coefficients(iterate(F.map(), 2), F.fixed_point(), F.order());
    source << " via second iterate";
    return CurveTrace::sample([&](double t) { return evaluate(G, t); }, -T, T, n, false, source.str());
}

std::vector<Crossing> injectivity_check(const CurveTrace& trace, const CrossingOptions& options)
{
    const auto& s = trace.samples();
    const std::size_t n = s.size();
    std::vector<Crossing> out;
    if (n < 2)
        return out;
    std::vector<Vec3> e(n);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = s[i].point.embed();
    const std::size_t segments = trace.segment_count();
    const double period = trace.closed() && n >= 2
                              ? (s.back().parameter - s.front().parameter) * static_cast<double>(n) / (n - 1)
                              : 0.0;
    auto param = [&](std::size_t i, double u) {
        const std::size_t j = (i + 1) % n;
        const double t0 = s[i].parameter;
        double t1 = s[j].parameter;
        if (j < i)
            t1 += period;
        return t0 + u * (t1 - t0);
    };
    const auto sep = static_cast<std::size_t>(std::max(options.min_separation, 1));
    struct Hit
    {
        std::size_t i, j;
        SegmentClosest c;
    };
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < segments; ++i) {
        for (std::size_t j = i + sep; j < segments; ++j) {
            if (trace.closed() && segments - (j - i) < sep)
                continue;
            const SegmentClosest c = closest_segments(e[i], e[(i + 1) % n], e[j], e[(j + 1) % n]);
            if (c.distance < options.tolerance)
                hits.push_back({i, j, c});
        }
    }

    // Hits within min_separation steps of each other in both indices belong
    // to one crossing (or one overlapping stretch, where the trace folds back
    // on itself); each cluster keeps its closest pair.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    for (std::size_t h = 0; h < hits.size(); ++h)
        index[{hits[h].i, hits[h].j}] = h;
    std::vector<std::size_t> parent(hits.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t h = 0; h < hits.size(); ++h) {
        const std::size_t j0 = hits[h].j >= sep ? hits[h].j - sep : 0;
        for (std::size_t i = hits[h].i; i <= hits[h].i + sep; ++i) {
            for (auto it = index.lower_bound({i, j0}); it != index.end() && it->first.first == i &&
                                                       it->first.second <= hits[h].j + sep;
                 ++it)
                parent[find(it->second)] = find(h);
        }
    }
    std::map<std::size_t, std::pair<std::size_t, std::size_t>> best; // root -> (hit, count)
    for (std::size_t h = 0; h < hits.size(); ++h) {
        auto [it, fresh] = best.try_emplace(find(h), h, 0);
        ++it->second.second;
        if (hits[h].c.distance < hits[it->second.first].c.distance)
            it->second.first = h;
    }
    std::vector<std::pair<std::size_t, std::size_t>> reps;
    for (const auto& [root, v] : best)
        reps.push_back(v);
    std::sort(reps.begin(), reps.end());
    for (const auto& [h, count] : reps) {
        if (out.size() >= options.max_reports)
            break;
        const Hit& x = hits[h];
        const Vec3 p = lerp(e[x.i], e[(x.i + 1) % n], x.c.s);
        out.push_back({param(x.i, x.c.s), param(x.j, x.c.t), SpherePoint::from_embedding(p), x.c.distance, count});
    }
    return out;
}

} // namespace invcurve
