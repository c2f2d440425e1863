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

#include "invcurve/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "invcurve/errors.hpp"

namespace invcurve {

TruncatedPowerSeries::TruncatedPowerSeries(int order)
{
    if (order < 0)
        throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

TruncatedPowerSeries::TruncatedPowerSeries(std::vector<cplx> coefficients, int order)
    : TruncatedPowerSeries(order)
{
    const std::size_t n = std::min(coefficients.size(), c_.size());
    std::copy_n(coefficients.begin(), n, c_.begin());
}

TruncatedPowerSeries::TruncatedPowerSeries(std::initializer_list<cplx> coefficients, int order)
    : TruncatedPowerSeries(std::vector<cplx>(coefficients), order)
{
}

TruncatedPowerSeries TruncatedPowerSeries::constant(cplx c, int order)
{
    TruncatedPowerSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedPowerSeries TruncatedPowerSeries::variable(cplx c, int order)
{
    TruncatedPowerSeries s(order);
    s.c_[0] = c;
    if (order >= 1)
        s.c_[1] = 1.0;
    return s;
}

TruncatedPowerSeries TruncatedPowerSeries::truncated(int order) const
{
    return TruncatedPowerSeries(c_, std::min(order, this->order()));
}

TruncatedPowerSeries TruncatedPowerSeries::derivative() const
{
    // Differentiation loses one order of accuracy.
    TruncatedPowerSeries d(std::max(order() - 1, 0));
    for (int k = 1; k <= order(); ++k)
        d.c_[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * c_[static_cast<std::size_t>(k)];
    return d;
}

cplx TruncatedPowerSeries::operator()(cplx z) const noexcept
{
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator+=(const TruncatedPowerSeries& o)
{
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] += o.c_[k];
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator-=(const TruncatedPowerSeries& o)
{
    c_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k)
        c_[k] -= o.c_[k];
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator*=(cplx s)
{
    for (cplx& c : c_)
        c *= s;
    return *this;
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
{
    const int n = std::min(a.order(), b.order());
    TruncatedPowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
        const cplx ai = a.c_[static_cast<std::size_t>(i)];
        if (ai == cplx(0.0))
            continue;
        for (int j = 0; i + j <= n; ++j)
            r.c_[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
    }
    return r;
}

TruncatedPowerSeries add(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
{
    return a + b;
}

TruncatedPowerSeries scale(const TruncatedPowerSeries& a, cplx s)
{
    return a * s;
}

TruncatedPowerSeries mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b)
{
    return a * b;
}

TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& a, double tol)
{
    const cplx a0 = a[0];
    if (std::abs(a0) <= tol)
        throw PoleError("reciprocal: constant term vanishes");
    const int n = a.order();
    TruncatedPowerSeries r(n);
    r[0] = 1.0 / a0;
    for (int k = 1; k <= n; ++k) {
        cplx acc = 0.0;
        for (int j = 1; j <= k; ++j)
            acc += a[j] * r[k - j];
        r[k] = -acc / a0;
    }
    return r;
}

TruncatedPowerSeries compose_rational(const RationalMap& f, const TruncatedPowerSeries& a, double tol)
{
    const int n = a.order();
    auto horner = [&](const Polynomial& p) {
        TruncatedPowerSeries acc(n);
        for (int k = p.degree(); k >= 0; --k) {
            acc = acc * a;
            acc[0] += p[k];
        }
        return acc;
    };
    const Polynomial& q = f.denominator();
    const TruncatedPowerSeries den = horner(q);
    double scale = 0.0;
    const double a0 = std::abs(a[0]);
    for (int k = q.degree(); k >= 0; --k)
        scale = scale * a0 + std::abs(q[k]);
    if (std::abs(den[0]) <= tol * scale)
        throw PoleError("compose_rational: series centred at a pole");
    if (q.degree() == 0)
        return horner(f.numerator()) * (1.0 / q[0]);
    return horner(f.numerator()) * reciprocal(den, 0.0);
}

std::ostream& operator<<(std::ostream& os, const TruncatedPowerSeries& s)
{
    os << '[';
    for (int k = 0; k <= s.order(); ++k) {
        if (k)
            os << ", ";
        os << s[k];
    }
    return os << ']';
}

} // namespace invcurve
