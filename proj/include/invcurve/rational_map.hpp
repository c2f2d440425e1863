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

#ifndef INVCURVE_RATIONAL_MAP_HPP
#define INVCURVE_RATIONAL_MAP_HPP

#include <string>
#include <vector>

#include "invcurve/polynomial.hpp"
#include "invcurve/sphere.hpp"

namespace invcurve {

inline constexpr int kDefaultDegreeCap = 4096;

/// Tolerances shared by the rational-map algebra.
struct Tolerances
{
    double gcd = 1e-10;      ///< common-root cancellation, relative to coefficient scale
    double root = 1e-10;     ///< root residual, relative
    double classify = 1e-9;  ///< attracting/repelling margin around |lambda| = 1
    double identity = 1e-9;  ///< rational identity test, chordal
};

/// A rational map p/q on the Riemann sphere.
///
/// Canonical form: monic denominator, numerator and denominator without
/// common roots. The zero map is 0/1. Values are immutable once built.
class RationalMap
{
public:
    /// Identity map z.
    RationalMap();

    /// Builds num/den and brings it to canonical form: leading-coefficient
    /// trimming, removal of approximate common roots, monic denominator.
    /// Throws PreconditionError if den is zero.
    RationalMap(Polynomial num, Polynomial den, double gcd_tol = Tolerances{}.gcd);

    static RationalMap polynomial(Polynomial p);
    static RationalMap constant(cplx c);
    static RationalMap identity() { return RationalMap(); }
    /// (a z + b) / (c z + d)
    static RationalMap mobius(cplx a, cplx b, cplx c, cplx d);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    int degree() const noexcept;

    SpherePoint operator()(const SpherePoint& z) const;
    /// f'(z) at a finite non-pole z.
    cplx derivative(cplx z) const;

    /// Skips the common-root search; the caller guarantees coprimality.
    static RationalMap from_coprime(Polynomial num, Polynomial den);

private:
    Polynomial num_;
    Polynomial den_;
};

SpherePoint eval(const RationalMap& f, const SpherePoint& z);

/// f o g. Throws DegreeCapExceeded when deg f * deg g > degree_cap.
RationalMap compose(const RationalMap& f, const RationalMap& g, int degree_cap = kDefaultDegreeCap);

/// n-fold composition f o ... o f; n = 0 gives the identity.
RationalMap iterate(const RationalMap& f, int n, int degree_cap = kDefaultDegreeCap);

/// 1/f(1/w): f in the chart at infinity.
RationalMap conjugate_by_inversion(const RationalMap& f);

enum class FixedPointClass
{
    superattracting,
    attracting,
    repelling,
    neutral_rational,
    neutral_irrational_candidate,
};

std::string to_string(FixedPointClass c);

struct FixedPointInfo
{
    SpherePoint location;
    cplx multiplier;
    FixedPointClass kind;
    int multiplicity = 1;
    double class_tolerance = Tolerances{}.classify;
};

FixedPointClass classify_multiplier(cplx multiplier, double tol = Tolerances{}.classify);

/// Fixed points with multiplicity; the multiplicities sum to degree + 1.
/// Requires f non-constant and not the identity.
std::vector<FixedPointInfo> fixed_points(const RationalMap& f, const Tolerances& tol = {});

/// Critical points repeated by multiplicity; 2 deg - 2 of them.
std::vector<SpherePoint> critical_points(const RationalMap& f, const Tolerances& tol = {});

/// f'(a) at a finite fixed point, the derivative of 1/f(1/w) at w = 0 when
/// a is infinity. Throws PreconditionError if chordal(f(a), a) > fixed_tol.
cplx multiplier(const RationalMap& f, const SpherePoint& a, double fixed_tol = 1e-8);

/// Max chordal distance between f and g at 2 max(deg) + 5 points of the
/// unit circle (or more if extra_points > 0).
double identity_residual(const RationalMap& f, const RationalMap& g, int extra_points = 0);

/// Coefficientwise relative deviation of the canonical forms; infinity
/// when numerator or denominator degrees differ.
double coefficient_deviation(const RationalMap& f, const RationalMap& g);

} // namespace invcurve

#endif
