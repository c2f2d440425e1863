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

#include "invcurve/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

constexpr double kSize = 600.0;
constexpr int kGrid = 240;

struct Window
{
    cplx center;
    double radius;

    double px(cplx z) const { return kSize / 2 + (z.real() - center.real()) / radius * (kSize / 2); }
    double py(cplx z) const { return kSize / 2 - (z.imag() - center.imag()) / radius * (kSize / 2); }
    bool contains(cplx z) const
    {
        return std::abs(z.real() - center.real()) <= 1.5 * radius && std::abs(z.imag() - center.imag()) <= 1.5 * radius;
    }
};

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

Window choose_window(const Plot& plot)
{
    std::vector<cplx> pts;
    if (plot.trace)
        pts = plot.trace->finite_points();
    for (const SpherePoint& m : plot.marks)
        if (m.is_finite() && pts.empty())
            pts.push_back(m.value());
    if (pts.empty())
        return {0.0, 1.0};
    std::vector<double> re, im;
    for (const cplx z : pts) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    const cplx c(median(re), median(im));
    std::vector<double> dist;
    for (const cplx z : pts)
        dist.push_back(std::abs(z - c));
    std::sort(dist.begin(), dist.end());
    const double r = dist[static_cast<std::size_t>(0.9 * static_cast<double>(dist.size() - 1))];
    return {c, std::max(1.15 * r, 1e-9)};
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

std::string trace_path(const CurveTrace& trace, const Window& w)
{
    std::string d;
    bool pen = false;
    cplx last = 0.0;
    auto visit = [&](const SpherePoint& p) {
        if (p.is_infinite() || !w.contains(p.value()) || (pen && std::abs(p.value() - last) > 0.5 * w.radius)) {
            pen = false;
            if (p.is_infinite() || !w.contains(p.value()))
                return;
        }
        last = p.value();
        d += (pen ? " L" : " M") + fmt(w.px(last)) + "," + fmt(w.py(last));
        pen = true;
    };
    for (const TraceSample& s : trace.samples())
        visit(s.point);
    if (trace.closed() && trace.size() > 0)
        visit(trace.samples().front().point);
    return d;
}

double implicit_value(const FitReport& fit, cplx z)
{
    const cplx q = (z - fit.frame.center) / fit.frame.scale;
    double v = 0.0;
    for (std::size_t k = 0; k < fit.monomials.size(); ++k)
        v += fit.coefficients[k] * std::pow(q.real(), fit.monomials[k].first) *
             std::pow(q.imag(), fit.monomials[k].second);
    return v;
}

// Zero set by marching squares, one straight segment per crossed cell.
std::string contour_path(const FitReport& fit, const Window& w)
{
    const double x0 = w.center.real() - 1.5 * w.radius, y0 = w.center.imag() - 1.5 * w.radius;
    const double h = 3.0 * w.radius / kGrid;
    std::vector<double> v(static_cast<std::size_t>((kGrid + 1) * (kGrid + 1)));
    auto at = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(j * (kGrid + 1) + i)]; };
    for (int j = 0; j <= kGrid; ++j)
        for (int i = 0; i <= kGrid; ++i)
            at(i, j) = implicit_value(fit, cplx(x0 + i * h, y0 + j * h));
    std::string d;
    for (int j = 0; j < kGrid; ++j) {
        for (int i = 0; i < kGrid; ++i) {
            const cplx corner[4] = {{x0 + i * h, y0 + j * h},
                                    {x0 + (i + 1) * h, y0 + j * h},
                                    {x0 + (i + 1) * h, y0 + (j + 1) * h},
                                    {x0 + i * h, y0 + (j + 1) * h}};
            const double val[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            std::vector<cplx> cuts;
            for (int e = 0; e < 4; ++e) {
                const double a = val[e], b = val[(e + 1) % 4];
                if ((a < 0.0) != (b < 0.0))
                    cuts.push_back(corner[e] + (corner[(e + 1) % 4] - corner[e]) * (a / (a - b)));
            }
            for (std::size_t k = 0; k + 1 < cuts.size(); k += 2)
                d += " M" + fmt(w.px(cuts[k])) + "," + fmt(w.py(cuts[k])) + " L" + fmt(w.px(cuts[k + 1])) + "," +
                     fmt(w.py(cuts[k + 1]));
        }
    }
    return d;
}

std::string circle_element(const FitReport& fit, const Window& w)
{
    if (fit.coefficients.size() != 4 || std::abs(fit.coefficients[0]) < 1e-12)
        return {};
    const double a = fit.coefficients[0], b = fit.coefficients[1], c = fit.coefficients[2], e = fit.coefficients[3];
    const cplx q0(-b / (2 * a), -c / (2 * a));
    const double r2 = std::norm(q0) - e / a;
    if (r2 <= 0.0)
        return {};
    const cplx centre = fit.frame.center + fit.frame.scale * q0;
    const double radius = fit.frame.scale * std::sqrt(r2) / w.radius * (kSize / 2);
    return "<circle cx=\"" + fmt(w.px(centre)) + "\" cy=\"" + fmt(w.py(centre)) + "\" r=\"" + fmt(radius) +
           "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
}

std::string escape(const std::string& s)
{
    std::string out;
    for (const char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Plot& plot)
{
    const Window w = choose_window(plot);
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
    s += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    s += "<defs><clipPath id=\"frame\"><rect width=\"600\" height=\"600\"/></clipPath></defs>\n";
    s += "<g clip-path=\"url(#frame)\">\n";
    if (plot.overlay) {
        if (plot.overlay->monomials.empty())
            s += circle_element(*plot.overlay, w);
        else
            s += "<path d=\"" + contour_path(*plot.overlay, w) +
                 "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    }
    if (plot.trace)
        s += "<path d=\"" + trace_path(*plot.trace, w) + "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    for (const SpherePoint& m : plot.marks) {
        if (m.is_infinite() || !w.contains(m.value()))
            continue;
        s += "<circle cx=\"" + fmt(w.px(m.value())) + "\" cy=\"" + fmt(w.py(m.value())) +
             "\" r=\"4\" fill=\"#2ca02c\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }
    s += "</g>\n";
    if (!plot.title.empty())
        s += "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" + escape(plot.title) + "</text>\n";
    s += "</svg>\n";
    return s;
}

void write_svg(const std::filesystem::path& path, const Plot& plot)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << render_svg(plot);
}

} // namespace invcurve
