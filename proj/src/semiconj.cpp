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

#include "invcurve/semiconj.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>

#include "invcurve/curves.hpp"
#include "invcurve/errors.hpp"

namespace invcurve {

Certification certify(const SemiconjTriple& t, double tol, int degree_cap)
{
    if (t.n < 0)
        throw PreconditionError("certify: negative iterate count");
    const RationalMap lhs = compose(t.h, t.g, degree_cap);
    const RationalMap rhs = compose(iterate(t.f, t.n, degree_cap), t.h, degree_cap);
    Certification c;
    c.residual = identity_residual(lhs, rhs);
    c.certified = c.residual <= tol;
    c.degenerate = t.n == 0;
    return c;
}

SemiconjTriple make_ritt_triple(const RationalMap& u, const RationalMap& v, int degree_cap)
{
    return SemiconjTriple{compose(u, v, degree_cap), compose(v, u, degree_cap), u, 1};
}

SemiconjTriple make_power_family(const RationalMap& w, int m, int n, int degree_cap)
{
    if (m < 0 || n < 1)
        throw PreconditionError("make_power_family: need m >= 0 and n >= 1");
    const long long deg_f = static_cast<long long>(m) + static_cast<long long>(n) * w.degree();
    if (deg_f > degree_cap || static_cast<long long>(n) * deg_f > degree_cap)
        throw DegreeCapExceeded(static_cast<long long>(n) * deg_f, degree_cap);

    const Polynomial zm = Polynomial::monomial(m);
    const Polynomial& p = w.numerator();
    const Polynomial& q = w.denominator();
    const RationalMap f(zm * p.pow(n), q.pow(n));

    // w(z^n): spread the coefficients out by n.
    auto spread = [n](const Polynomial& a) {
        std::vector<cplx> c(static_cast<std::size_t>(std::max(a.degree(), 0) * n) + 1, 0.0);
        for (int k = 0; k <= a.degree(); ++k)
            c[static_cast<std::size_t>(k * n)] = a[k];
        return Polynomial(std::move(c));
    };
    const RationalMap g(zm * spread(p), spread(q));
    const RationalMap h = RationalMap::polynomial(Polynomial::monomial(n));
    return SemiconjTriple{f, g, h, 1};
}

Polynomial chebyshev(int n)
{
    if (n < 0)
        throw PreconditionError("chebyshev: negative index");
    Polynomial prev({1.0});
    if (n == 0)
        return prev;
    Polynomial cur({0.0, 1.0});
    const Polynomial two_z({0.0, 2.0});
    for (int k = 1; k < n; ++k) {
        Polynomial next = two_z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RationalMap joukowski()
{
    return RationalMap::from_coprime(Polynomial({1.0, 0.0, 1.0}), Polynomial({0.0, 2.0}));
}

double verify_joukowski_identity(int n)
{
    const RationalMap J = joukowski();
    const RationalMap Pn = RationalMap::polynomial(Polynomial::monomial(n));
    const RationalMap Tn = RationalMap::polynomial(chebyshev(n));
    return coefficient_deviation(compose(J, Pn), compose(Tn, J));
}

namespace {

// x from -e^L up to -e^-L, then e^-L up to e^L, uniform in log|x|; the
// parameter is x itself so it increases across the gap at 0.
std::vector<TraceSample> log_samples(const RationalMap& u, int n, double L)
{
    if (n < 2)
        throw PreconditionError("pakovich_example: need at least 2 samples per branch");
    std::vector<TraceSample> samples;
    samples.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = -std::exp(L - 2.0 * L * k / (n - 1));
        samples.push_back({x, u(SpherePoint(x))});
    }
    for (int k = 0; k < n; ++k) {
        const double x = std::exp(-L + 2.0 * L * k / (n - 1));
        samples.push_back({x, u(SpherePoint(x))});
    }
    return samples;
}

} // namespace

PakovichExample pakovich_example(int n, int n_samples, double log_range, int root_index)
{
    if (n < 3)
        throw PreconditionError("pakovich_example: need n >= 3");
    const cplx eps = std::polar(1.0, 2.0 * std::numbers::pi * root_index / n);
    const RationalMap J = joukowski();
    const RationalMap u = compose(J, RationalMap::mobius(eps, 0.0, 0.0, 1.0));
    const RationalMap Tn = RationalMap::polynomial(chebyshev(n));
    const RationalMap f = compose(u, Tn);
    const RationalMap R = compose(J, RationalMap::polynomial(Polynomial::monomial(n)));
    const RationalMap R_rot = compose(R, RationalMap::mobius(eps, 0.0, 0.0, 1.0));

    CurveTrace gamma(log_samples(u, n_samples, log_range), false, "u(R) for u = J(eps z), n = " + std::to_string(n));
    return PakovichExample{n, eps, u, f, R, std::move(gamma), coefficient_deviation(R_rot, R), log_range};
}

double hyperbola_residual(const PakovichExample& P)
{
    const double c = P.epsilon.real(), s = P.epsilon.imag();
    if (std::abs(c) < 1e-12 || std::abs(s) < 1e-12)
        throw PreconditionError("hyperbola_residual: degenerate epsilon");
    double worst = 0.0;
    for (const TraceSample& t : P.gamma.samples()) {
        if (t.point.is_infinite())
            continue;
        const cplx w = t.point.value();
        const double a = (w.real() / c) * (w.real() / c), b = (w.imag() / s) * (w.imag() / s);
        worst = std::max(worst, std::abs(a - b - 1.0) / (1.0 + a + b));
    }
    return worst;
}

double pakovich_invariance_residual(const PakovichExample& P, int n_queries)
{
    const CurveTrace queries(log_samples(P.u, n_queries, P.log_range / P.n), false, "queries");
    return invariance_residual(P.f, P.gamma, queries);
}

} // namespace invcurve
