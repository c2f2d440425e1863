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

#include "invcurve/curve_trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b)
{
    const Vec3 ab = sub(b, a), ap = sub(p, a);
    const double len2 = dot(ab, ab);
    double t = len2 > 0.0 ? dot(ap, ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec3 c{a[0] + t * ab[0], a[1] + t * ab[1], a[2] + t * ab[2]};
    return norm(sub(p, c));
}

// Cubic Lagrange interpolation through four points at nodes u[0..3].
Vec3 cubic(const std::array<Vec3, 4>& pts, const std::array<double, 4>& u, double x)
{
    Vec3 out{0.0, 0.0, 0.0};
    for (int j = 0; j < 4; ++j) {
        double w = 1.0;
        for (int m = 0; m < 4; ++m)
            if (m != j)
                w *= (x - u[m]) / (u[j] - u[m]);
        for (int c = 0; c < 3; ++c)
            out[c] += w * pts[j][c];
    }
    return out;
}

// Min distance from p to the cubic restricted to [lo, hi]: coarse scan then
// golden-section refinement around the best scan point.
double cubic_distance(const Vec3& p, const std::array<Vec3, 4>& pts, const std::array<double, 4>& u, double lo,
                      double hi)
{
    auto f = [&](double x) { return norm(sub(cubic(pts, u, x), p)); };
    constexpr int kScan = 16;
    double best_x = lo, best = f(lo);
    for (int k = 1; k <= kScan; ++k) {
        const double x = lo + (hi - lo) * k / kScan;
        const double v = f(x);
        if (v < best) {
            best = v;
            best_x = x;
        }
    }
    double a = std::max(lo, best_x - (hi - lo) / kScan);
    double b = std::min(hi, best_x + (hi - lo) / kScan);
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    return std::min({best, f1, f2});
}

} // namespace

CurveTrace::CurveTrace(std::vector<TraceSample> samples, bool closed, std::string source)
    : samples_(std::move(samples)), closed_(closed), source_(std::move(source))
{
    for (std::size_t i = 1; i < samples_.size(); ++i)
        if (!(samples_[i].parameter > samples_[i - 1].parameter))
            throw PreconditionError("CurveTrace: parameters must be strictly increasing");
}

CurveTrace CurveTrace::sample(const std::function<SpherePoint(double)>& curve, double t0, double t1, int n,
                              bool closed, std::string source)
{
    if (n < 2)
        throw PreconditionError("CurveTrace::sample: need at least two samples");
    const double sign = t1 >= t0 ? 1.0 : -1.0;
    const int steps = closed ? n : n - 1;
    std::vector<TraceSample> s;
    s.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t = t0 + (t1 - t0) * static_cast<double>(k) / steps;
        s.push_back({sign * t, curve(t)});
    }
    return CurveTrace(std::move(s), closed, std::move(source));
}

std::size_t CurveTrace::segment_count() const noexcept
{
    if (samples_.size() < 2)
        return 0;
    return closed_ ? samples_.size() : samples_.size() - 1;
}

double CurveTrace::max_gap() const
{
    double gap = 0.0;
    const std::size_t n = samples_.size();
    for (std::size_t i = 0; i < segment_count(); ++i)
        gap = std::max(gap, chordal_distance(samples_[i].point, samples_[(i + 1) % n].point));
    return gap;
}

std::vector<cplx> CurveTrace::finite_points() const
{
    std::vector<cplx> out;
    out.reserve(samples_.size());
    for (const TraceSample& s : samples_)
        if (s.point.is_finite())
            out.push_back(s.point.value());
    return out;
}

double CurveTrace::distance_to(const SpherePoint& p) const
{
    const std::size_t n = samples_.size();
    if (n == 0)
        return std::numeric_limits<double>::infinity();
    const Vec3 P = p.embed();
    if (n == 1)
        return norm(sub(P, samples_[0].point.embed()));

    std::vector<Vec3> e(n);
    for (std::size_t i = 0; i < n; ++i)
        e[i] = samples_[i].point.embed();

    const std::size_t segments = segment_count();
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_seg = 0;
    for (std::size_t i = 0; i < segments; ++i) {
        const Vec3& a = e[i];
        const Vec3& b = e[(i + 1) % n];
        // Cheap lower bound before the full projection.
        const double da = norm(sub(P, a));
        if (da - norm(sub(b, a)) >= best)
            continue;
        const double d = point_segment_distance(P, a, b);
        if (d < best) {
            best = d;
            best_seg = i;
        }
    }
    if (n < 4)
        return best;

    // Refine on the cubic through the four samples around the best segment
    // and its neighbours, parametrized by cumulative chord length.
    auto refine = [&](std::ptrdiff_t seg) {
        std::ptrdiff_t start = seg - 1;
        const auto sn = static_cast<std::ptrdiff_t>(n);
        if (!closed_)
            start = std::clamp<std::ptrdiff_t>(start, 0, sn - 4);
        std::array<Vec3, 4> pts;
        std::array<double, 4> u{};
        for (int j = 0; j < 4; ++j)
            pts[j] = e[static_cast<std::size_t>(((start + j) % sn + sn) % sn)];
        for (int j = 1; j < 4; ++j)
            u[j] = u[j - 1] + norm(sub(pts[j], pts[j - 1]));
        for (int j = 1; j < 4; ++j)
            if (!(u[j] > u[j - 1]))
                return best;
        const std::ptrdiff_t local = seg - start;
        return cubic_distance(P, pts, u, u[local], u[local + 1]);
    };
    double refined = refine(static_cast<std::ptrdiff_t>(best_seg));
    const auto bs = static_cast<std::ptrdiff_t>(best_seg);
    const auto segs = static_cast<std::ptrdiff_t>(segments);
    for (const std::ptrdiff_t nb : {bs - 1, bs + 1}) {
        if (closed_)
            refined = std::min(refined, refine((nb + segs) % segs));
        else if (nb >= 0 && nb < segs)
            refined = std::min(refined, refine(nb));
    }
    return std::min(best, refined);
}

void write_csv(std::ostream& os, const CurveTrace& trace)
{
    os << "parameter,re,im,is_infinite\n";
    char buf[128];
    for (const TraceSample& s : trace.samples()) {
        const cplx z = s.point.is_finite() ? s.point.value() : cplx(0.0);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d\n", s.parameter, z.real(), z.imag(),
                      s.point.is_infinite() ? 1 : 0);
        os << buf;
    }
}

CurveTrace read_csv(std::istream& is, bool closed, std::string source)
{
    std::string line;
    std::vector<TraceSample> samples;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (header) {
            header = false;
            if (line.rfind("parameter", 0) == 0)
                continue;
        }
        std::istringstream ls(line);
        double t = 0, re = 0, im = 0;
        int inf = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(ls >> t >> c1 >> re >> c2 >> im >> c3 >> inf) || c1 != ',' || c2 != ',' || c3 != ',')
            throw PreconditionError("read_csv: malformed line: " + line);
        samples.push_back({t, inf ? SpherePoint::infinity() : SpherePoint(cplx(re, im))});
    }
    return CurveTrace(std::move(samples), closed, std::move(source));
}

} // namespace invcurve
