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

#include "invcurve/rational_map.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "invcurve/errors.hpp"
#include "invcurve/rational_approx.hpp"
#include "invcurve/roots.hpp"

namespace invcurve {
namespace {

// A coefficient this small against the magnitudes of the terms summed into
// it is cancellation noise.
constexpr double kTrimTol = 1e-13;

// sum_k p_k w^{d-k}, i.e. w^d p(1/w) for a nominal degree d >= deg p.
cplx eval_reversed(const Polynomial& p, int d, cplx w)
{
    cplx acc = 0.0;
    for (int k = 0; k <= d; ++k)
        acc = acc * w + p[k];
    return acc;
}

// |p(z)| relative to sum |p_k| |z|^k.
double relative_value(const Polynomial& p, cplx z)
{
    const double az = std::abs(z);
    const int d = p.degree();
    if (az <= 1.0) {
        double scale = 0.0;
        for (int k = d; k >= 0; --k)
            scale = scale * az + std::abs(p[k]);
        return scale > 0.0 ? std::abs(p(z)) / scale : 0.0;
    }
    const cplx w = 1.0 / z;
    const double aw = 1.0 / az;
    double scale = 0.0;
    for (int k = 0; k <= d; ++k)
        scale = scale * aw + std::abs(p[k]);
    return scale > 0.0 ? std::abs(eval_reversed(p, d, w)) / scale : 0.0;
}

Polynomial deflate(const Polynomial& p, cplx root)
{
    return divide(p, Polynomial({-root, 1.0})).quotient;
}

using XPoly = std::vector<std::complex<long double>>;

XPoly extended(const Polynomial& p)
{
    XPoly out;
    for (int i = 0; i <= p.degree(); ++i)
        out.emplace_back(p[i].real(), p[i].imag());
    return out;
}

XPoly multiply(const XPoly& a, const XPoly& b)
{
    XPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<XPoly> powers(const Polynomial& p, int d)
{
    std::vector<XPoly> out{XPoly{1.0L}};
    const XPoly x = extended(p);
    for (int i = 1; i <= d; ++i)
        out.push_back(multiply(out.back(), x));
    return out;
}

// Sum of p_i r^i s^(d - i), accumulated in extended precision and rounded once.
Polynomial homogeneous_compose(const Polynomial& p, int d, const std::vector<XPoly>& rpow,
                               const std::vector<XPoly>& spow)
{
    XPoly acc;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p[i] == cplx(0.0))
            continue;
        const XPoly term = multiply(rpow[static_cast<std::size_t>(i)], spow[static_cast<std::size_t>(d - i)]);
        if (acc.size() < term.size())
            acc.resize(term.size());
        const std::complex<long double> c(p[i].real(), p[i].imag());
        for (std::size_t k = 0; k < term.size(); ++k)
            acc[k] += c * term[k];
    }
    std::vector<cplx> out;
    for (const auto& x : acc)
        out.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    return Polynomial(std::move(out));
}

} // namespace

RationalMap::RationalMap() : num_({0.0, 1.0}), den_({1.0}) {}

RationalMap::RationalMap(Polynomial num, Polynomial den, double gcd_tol)
{
    num = num.trimmed(0.0);
    den = den.trimmed(0.0);
    if (den.is_zero())
        throw PreconditionError("rational map with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial{};
        den_ = Polynomial({1.0});
        return;
    }
    if (num.degree() >= 1 && den.degree() >= 1) {
        // Approximate gcd: cancel every denominator root at which the
        // numerator (as it stands after earlier cancellations) vanishes.
        for (const cplx r : poly_roots(den)) {
            if (num.degree() < 1)
                break;
            if (relative_value(num, r) <= gcd_tol && relative_value(den, r) <= gcd_tol) {
                num = deflate(num, r);
                den = deflate(den, r);
            }
        }
    }
    const cplx lead = den.leading();
    num_ = num * (1.0 / lead);
    den_ = den * (1.0 / lead);
}

RationalMap RationalMap::from_coprime(Polynomial num, Polynomial den)
{
    den = den.trimmed(0.0);
    if (den.is_zero())
        throw PreconditionError("rational map with zero denominator");
    num = num.trimmed(0.0);
    RationalMap f;
    const cplx lead = den.leading();
    f.num_ = num * (1.0 / lead);
    f.den_ = den * (1.0 / lead);
    if (f.num_.is_zero())
        f.den_ = Polynomial({1.0});
    return f;
}

RationalMap RationalMap::polynomial(Polynomial p)
{
    return from_coprime(std::move(p), Polynomial({1.0}));
}

RationalMap RationalMap::constant(cplx c)
{
    return from_coprime(Polynomial({c}), Polynomial({1.0}));
}

RationalMap RationalMap::mobius(cplx a, cplx b, cplx c, cplx d)
{
    if (a * d - b * c == cplx(0.0))
        throw PreconditionError("degenerate Mobius map");
    return from_coprime(Polynomial({b, a}), Polynomial({d, c}));
}

int RationalMap::degree() const noexcept
{
    return std::max({num_.degree(), den_.degree(), 0});
}

SpherePoint RationalMap::operator()(const SpherePoint& z) const
{
    const int dp = num_.degree(), dq = den_.degree();
    if (num_.is_zero())
        return SpherePoint(cplx(0.0));
    if (z.is_infinite()) {
        if (dp > dq)
            return SpherePoint::infinity();
        if (dp < dq)
            return SpherePoint(cplx(0.0));
        return SpherePoint(num_.leading() / den_.leading());
    }
    const cplx x = z.value();
    if (std::abs(x) <= 1.0) {
        const cplx q = den_(x);
        if (q == cplx(0.0))
            return SpherePoint::infinity();
        return SpherePoint(num_(x) / q);
    }
    const cplx w = 1.0 / x;
    const cplx P = eval_reversed(num_, dp, w);
    const cplx Q = eval_reversed(den_, dq, w);
    if (Q == cplx(0.0))
        return SpherePoint::infinity();
    const cplx ratio = P / Q;
    if (dp == dq)
        return SpherePoint(ratio);
    if (dp > dq)
        return SpherePoint(ratio * std::pow(x, dp - dq));
    return SpherePoint(ratio * std::pow(w, dq - dp));
}

cplx RationalMap::derivative(cplx z) const
{
    const cplx q = den_(z);
    if (q == cplx(0.0))
        throw PoleError("derivative at a pole");
    const cplx p = num_(z);
    return (num_.derivative()(z) * q - p * den_.derivative()(z)) / (q * q);
}

SpherePoint eval(const RationalMap& f, const SpherePoint& z)
{
    return f(z);
}

RationalMap compose(const RationalMap& f, const RationalMap& g, int degree_cap)
{
    const long long d = f.degree();
    const long long product = d * g.degree();
    if (product > degree_cap)
        throw DegreeCapExceeded(product, degree_cap);
    if (d == 0)
        return f;
    const Polynomial& r = g.numerator();
    const Polynomial& s = g.denominator();
    const int di = static_cast<int>(d);
    const std::vector<XPoly> rpow = powers(r, di), spow = powers(s, di);
    const std::vector<XPoly> rapow = powers(r.magnitudes(), di), sapow = powers(s.magnitudes(), di);
    auto side = [&](const Polynomial& p) {
        return homogeneous_compose(p, di, rpow, spow)
            .trimmed_against(homogeneous_compose(p.magnitudes(), di, rapow, sapow), kTrimTol);
    };
    // With p/q and r/s coprime, the homogenized compositions stay coprime.
    return RationalMap::from_coprime(side(f.numerator()), side(f.denominator()));
}

RationalMap iterate(const RationalMap& f, int n, int degree_cap)
{
    if (n < 0)
        throw PreconditionError("iterate: negative count");
    if (n == 0)
        return RationalMap::identity();
    long long deg = 1;
    for (int k = 0; k < n; ++k) {
        deg *= std::max(f.degree(), 1);
        if (deg > degree_cap)
            throw DegreeCapExceeded(deg, degree_cap);
    }
    RationalMap result = f;
    for (int k = 1; k < n; ++k)
        result = compose(f, result, degree_cap);
    return result;
}

RationalMap conjugate_by_inversion(const RationalMap& f)
{
    const int d = f.degree();
    std::vector<cplx> P(static_cast<std::size_t>(d) + 1), Q(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        P[static_cast<std::size_t>(j)] = f.numerator()[d - j];
        Q[static_cast<std::size_t>(j)] = f.denominator()[d - j];
    }
    return RationalMap::from_coprime(Polynomial(std::move(Q)), Polynomial(std::move(P)));
}

std::string to_string(FixedPointClass c)
{
    switch (c) {
    case FixedPointClass::superattracting: return "superattracting";
    case FixedPointClass::attracting: return "attracting";
    case FixedPointClass::repelling: return "repelling";
    case FixedPointClass::neutral_rational: return "neutral-rational";
    case FixedPointClass::neutral_irrational_candidate: return "neutral-irrational-candidate";
    }
    return "unknown";
}

FixedPointClass classify_multiplier(cplx multiplier, double tol)
{
    const double m = std::abs(multiplier);
    if (m < tol)
        return FixedPointClass::superattracting;
    if (m < 1.0 - tol)
        return FixedPointClass::attracting;
    if (m > 1.0 + tol)
        return FixedPointClass::repelling;
    const double turns = std::arg(multiplier) / (2.0 * std::numbers::pi);
    if (detect_rational(turns, 1000, tol))
        return FixedPointClass::neutral_rational;
    return FixedPointClass::neutral_irrational_candidate;
}

std::vector<FixedPointInfo> fixed_points(const RationalMap& f, const Tolerances& tol)
{
    const int d = f.degree();
    if (d == 0)
        throw PreconditionError("fixed_points: constant map");
    const Polynomial z({0.0, 1.0});
    const Polynomial E = (f.numerator() - z * f.denominator())
                             .trimmed_against(f.numerator().magnitudes() + z * f.denominator().magnitudes(), 1e-12);
    if (E.is_zero())
        throw PreconditionError("fixed_points: identity map");

    std::vector<FixedPointInfo> out;
    if (E.degree() >= 1) {
        RootOptions ro;
        ro.tolerance = tol.root;
        for (const RootCluster& c : cluster_roots(poly_roots(E, ro))) {
            // A multiple fixed point is parabolic: its multiplier is exactly 1.
            const cplx lambda = c.multiplicity > 1 ? cplx(1.0) : f.derivative(c.location);
            out.push_back({SpherePoint(c.location), lambda, classify_multiplier(lambda, tol.classify), c.multiplicity,
                           tol.classify});
        }
    }
    const int at_infinity = d + 1 - E.degree();
    if (at_infinity > 0) {
        const cplx lambda = conjugate_by_inversion(f).derivative(0.0);
        out.push_back({SpherePoint::infinity(), lambda, classify_multiplier(lambda, tol.classify), at_infinity,
                       tol.classify});
    }
    return out;
}

std::vector<SpherePoint> critical_points(const RationalMap& f, const Tolerances& tol)
{
    const int d = f.degree();
    if (d < 1)
        throw PreconditionError("critical_points: constant map");
    const Polynomial& p = f.numerator();
    const Polynomial& q = f.denominator();
    const Polynomial W = (p.derivative() * q - p * q.derivative())
                             .trimmed_against(p.derivative().magnitudes() * q.magnitudes() +
                                                  p.magnitudes() * q.derivative().magnitudes(),
                                              1e-12);
    std::vector<SpherePoint> out;
    if (W.degree() >= 1) {
        RootOptions ro;
        ro.tolerance = tol.root;
        for (const cplx r : poly_roots(W, ro))
            out.emplace_back(r);
    }
    for (int k = std::max(W.degree(), 0); k < 2 * d - 2; ++k)
        out.push_back(SpherePoint::infinity());
    return out;
}

cplx multiplier(const RationalMap& f, const SpherePoint& a, double fixed_tol)
{
    if (chordal_distance(f(a), a) > fixed_tol)
        throw PreconditionError("multiplier: point is not fixed");
    if (a.is_infinite())
        return conjugate_by_inversion(f).derivative(0.0);
    return f.derivative(a.value());
}

double identity_residual(const RationalMap& f, const RationalMap& g, int extra_points)
{
    const int K = 2 * std::max(f.degree(), g.degree()) + 5 + std::max(extra_points, 0);
    // Offset by a fraction of a step so symmetric maps do not put every
    // sample on a pole.
    constexpr double kPhase = 0.3819660112501051;
    double worst = 0.0;
    for (int k = 0; k < K; ++k) {
        const SpherePoint z(std::polar(1.0, 2.0 * std::numbers::pi * (k + kPhase) / K));
        worst = std::max(worst, chordal_distance(f(z), g(z)));
    }
    return worst;
}

double coefficient_deviation(const RationalMap& f, const RationalMap& g)
{
    if (f.numerator().degree() != g.numerator().degree() || f.denominator().degree() != g.denominator().degree())
        return std::numeric_limits<double>::infinity();
    const double scale = std::max({f.numerator().max_abs_coefficient(), f.denominator().max_abs_coefficient(),
                                   g.numerator().max_abs_coefficient(), g.denominator().max_abs_coefficient()});
    double dev = 0.0;
    for (int k = 0; k <= f.numerator().degree(); ++k)
        dev = std::max(dev, std::abs(f.numerator()[k] - g.numerator()[k]));
    for (int k = 0; k <= f.denominator().degree(); ++k)
        dev = std::max(dev, std::abs(f.denominator()[k] - g.denominator()[k]));
    return scale > 0.0 ? dev / scale : 0.0;
}

} // namespace invcurve
