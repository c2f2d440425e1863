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

#include "invcurve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace invcurve {

Polynomial::Polynomial(std::vector<cplx> coefficients) : c_(std::move(coefficients))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<cplx> coefficients) : c_(coefficients)
{
    normalize();
}

void Polynomial::normalize()
{
    while (!c_.empty() && c_.back() == cplx(0.0, 0.0))
        c_.pop_back();
}

Polynomial Polynomial::monomial(int power, cplx c)
{
    if (power < 0)
        throw std::invalid_argument("negative monomial power");
    std::vector<cplx> v(static_cast<std::size_t>(power) + 1, cplx(0.0));
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const cplx> roots)
{
    std::vector<cplx> v{1.0};
    for (const cplx r : roots) {
        v.push_back(0.0);
        for (std::size_t k = v.size() - 1; k > 0; --k)
            v[k] = v[k - 1] - r * v[k];
        v[0] = -r * v[0];
    }
    return Polynomial(std::move(v));
}

cplx Polynomial::operator[](int k) const noexcept
{
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return 0.0;
    return c_[static_cast<std::size_t>(k)];
}

cplx Polynomial::operator()(cplx z) const noexcept
{
    cplx acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (c_.size() <= 1)
        return {};
    std::vector<cplx> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * c_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed() const
{
    std::vector<cplx> r(c_.rbegin(), c_.rend());
    return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative polynomial power");
    Polynomial result = constant(1.0);
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

double Polynomial::max_abs_coefficient() const noexcept
{
    double m = 0.0;
    for (const cplx& c : c_)
        m = std::max(m, std::abs(c));
    return m;
}

Polynomial Polynomial::trimmed(double rel_tol) const
{
    const double cut = rel_tol * max_abs_coefficient();
    std::vector<cplx> v = c_;
    while (!v.empty() && std::abs(v.back()) <= cut)
        v.pop_back();
    return Polynomial(std::move(v));
}

Polynomial Polynomial::trimmed_against(const Polynomial& bound, double rel_tol) const
{
    std::vector<cplx> v = c_;
    while (!v.empty() && std::abs(v.back()) <= rel_tol * std::abs(bound[static_cast<int>(v.size()) - 1]))
        v.pop_back();
    return Polynomial(std::move(v));
}

Polynomial Polynomial::magnitudes() const
{
    std::vector<cplx> v;
    v.reserve(c_.size());
    for (const cplx& c : c_)
        v.emplace_back(std::abs(c));
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size(), 0.0);
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator*=(cplx s)
{
    for (cplx& c : c_)
        c *= s;
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<cplx> r(a.c_.size() + b.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        const cplx ai = a.c_[i];
        if (ai == cplx(0.0))
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += ai * b.c_[j];
    }
    return Polynomial(std::move(r));
}

DivisionResult divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    const int db = b.degree();
    if (a.degree() < db)
        return {Polynomial{}, a};
    std::vector<cplx> rem = a.coefficients();
    std::vector<cplx> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0.0);
    const cplx lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        const cplx q = rem[static_cast<std::size_t>(k + db)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b[j];
        rem[static_cast<std::size_t>(k + db)] = 0.0;
    }
    rem.resize(static_cast<std::size_t>(std::max(db, 0)));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

double relative_coefficient_deviation(const Polynomial& a, const Polynomial& b)
{
    const double scale = std::max(a.max_abs_coefficient(), b.max_abs_coefficient());
    if (scale == 0.0)
        return 0.0;
    const int n = std::max(a.degree(), b.degree());
    double dev = 0.0;
    for (int k = 0; k <= n; ++k)
        dev = std::max(dev, std::abs(a[k] - b[k]));
    return dev / scale;
}

} // namespace invcurve
