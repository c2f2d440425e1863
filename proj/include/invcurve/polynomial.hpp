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

#ifndef INVCURVE_POLYNOMIAL_HPP
#define INVCURVE_POLYNOMIAL_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "invcurve/sphere.hpp"

namespace invcurve {

/// Dense polynomial with complex coefficients in ascending powers.
///
/// The zero polynomial is stored as an empty coefficient vector and has
/// degree -1. Exact trailing zeros are always stripped, so the stored
/// leading coefficient is nonzero for every other polynomial.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coefficients);
    Polynomial(std::initializer_list<cplx> coefficients);

    static Polynomial constant(cplx c) { return Polynomial({c}); }
    static Polynomial monomial(int power, cplx c = 1.0);
    /// Monic polynomial with the given roots.
    static Polynomial from_roots(std::span<const cplx> roots);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<cplx>& coefficients() const noexcept { return c_; }
    cplx operator[](int k) const noexcept;
    cplx leading() const noexcept { return c_.empty() ? cplx(0.0) : c_.back(); }

    /// Horner evaluation.
    cplx operator()(cplx z) const noexcept;

    Polynomial derivative() const;
    /// z^degree * p(1/z).
    Polynomial reversed() const;
    Polynomial pow(int n) const;
    /// Drops leading coefficients with |c| <= rel_tol * max|c_k|.
    Polynomial trimmed(double rel_tol) const;
    /// Drops leading coefficients with |c_k| <= rel_tol * |bound_k|, where
    /// bound holds the magnitudes of the terms that produced each c_k.
    Polynomial trimmed_against(const Polynomial& bound, double rel_tol) const;
    /// Coefficientwise |c_k|.
    Polynomial magnitudes() const;
    double max_abs_coefficient() const noexcept;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(cplx s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, cplx s) { return a *= s; }
    friend Polynomial operator*(cplx s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void normalize();
    std::vector<cplx> c_;
};

/// Polynomial long division; the divisor must be nonzero.
struct DivisionResult
{
    Polynomial quotient;
    Polynomial remainder;
};
DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// max_k |a_k - b_k| / max(max|a_k|, max|b_k|), zero for two zero polynomials.
double relative_coefficient_deviation(const Polynomial& a, const Polynomial& b);

} // namespace invcurve

#endif
