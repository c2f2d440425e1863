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

#include "invcurve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Evaluation
{
    cplx newton;    // p(z) / p'(z)
    double residual; // |p(z)| / sum |p_k| |z|^k
};

// Newton ratio and relative residual, switching to the reversed polynomial
// outside the unit disc so high powers of z never overflow.
Evaluation evaluate(const Polynomial& p, const Polynomial& rev, cplx z)
{
    const int n = p.degree();
    if (std::abs(z) <= 1.0) {
        cplx v = 0.0, d = 0.0;
        double scale = 0.0;
        const double az = std::abs(z);
        const auto& c = p.coefficients();
        for (int k = n; k >= 0; --k) {
            d = d * z + v;
            v = v * z + c[static_cast<std::size_t>(k)];
            scale = scale * az + std::abs(c[static_cast<std::size_t>(k)]);
        }
        return {d == cplx(0.0) ? cplx(0.0) : v / d, scale > 0.0 ? std::abs(v) / scale : 0.0};
    }
    const cplx w = 1.0 / z;
    const double aw = std::abs(w);
    cplx r = 0.0, dr = 0.0;
    double scale = 0.0;
    const auto& c = rev.coefficients();
    for (int k = n; k >= 0; --k) {
        dr = dr * w + r;
        r = r * w + c[static_cast<std::size_t>(k)];
        scale = scale * aw + std::abs(c[static_cast<std::size_t>(k)]);
    }
    // p(z) = z^n r(w), p'(z) = z^{n-1} (n r(w) - w r'(w)).
    const cplx denom = static_cast<double>(n) * r - w * dr;
    return {denom == cplx(0.0) ? cplx(0.0) : z * r / denom, scale > 0.0 ? std::abs(r) / scale : 0.0};
}

} // namespace

std::vector<cplx> poly_roots(const Polynomial& p, const RootOptions& options)
{
    if (p.degree() < 1)
        throw PreconditionError("poly_roots: degree must be at least 1");

    const auto& coeffs = p.coefficients();
    std::size_t zeros = 0;
    while (coeffs[zeros] == cplx(0.0))
        ++zeros;
    std::vector<cplx> roots(zeros, cplx(0.0));

    const Polynomial q(std::vector<cplx>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));
    const int n = q.degree();
    if (n == 0)
        return roots;
    const Polynomial monic = q * (1.0 / q.leading());
    if (n == 1) {
        roots.push_back(-monic[0]);
        return roots;
    }
    const Polynomial rev = monic.reversed();

    // Start on a circle with the geometric mean of the root moduli, with an
    // angular offset that breaks real symmetry.
    const double radius = std::pow(std::abs(monic[0]), 1.0 / n);
    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }

    std::vector<char> done(static_cast<std::size_t>(n), 0);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        bool all_done = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (done[i])
                continue;
            const Evaluation e = evaluate(monic, rev, z[i]);
            if (e.residual <= 4.0 * kEps) {
                done[i] = 1;
                continue;
            }
            all_done = false;
            cplx sum = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i)
                    sum += 1.0 / (z[i] - z[j]);
            const cplx denom = 1.0 - e.newton * sum;
            const cplx step = denom == cplx(0.0) ? e.newton : e.newton / denom;
            z[i] -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(z[i]))
                done[i] = 1;
        }
        if (all_done)
            break;
    }

    double worst = 0.0;
    for (cplx& r : z) {
        // One Newton polish on the original coefficients; kept only if it helps.
        const Evaluation e = evaluate(monic, rev, r);
        if (e.newton != cplx(0.0)) {
            const cplx candidate = r - e.newton;
            if (evaluate(monic, rev, candidate).residual < e.residual)
                r = candidate;
        }
        worst = std::max(worst, evaluate(monic, rev, r).residual);
    }
    if (worst > options.tolerance)
        throw RootFindingError("poly_roots: no convergence, worst relative residual " + std::to_string(worst),
                               worst);
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double cluster_tol)
{
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i)
        parent[i] = i;
    auto find = [&](std::size_t i) {
        while (parent[i] != i)
            i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= cluster_tol * (1.0 + std::max(std::abs(roots[i]), std::abs(roots[j]))))
                parent[find(i)] = find(j);

    std::vector<RootCluster> out;
    std::vector<std::size_t> index_of(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (index_of[r] == n) {
            index_of[r] = out.size();
            out.push_back({0.0, 0});
        }
        RootCluster& c = out[index_of[r]];
        c.location += roots[i];
        ++c.multiplicity;
    }
    for (RootCluster& c : out)
        c.location /= static_cast<double>(c.multiplicity);
    return out;
}

} // namespace invcurve
