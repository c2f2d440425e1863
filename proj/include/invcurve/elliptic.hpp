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

#ifndef INVCURVE_ELLIPTIC_HPP
#define INVCURVE_ELLIPTIC_HPP

#include <utility>
#include <vector>

#include "invcurve/rational_map.hpp"
#include "invcurve/sphere.hpp"

namespace invcurve {

/// Period lattice generated by two full periods with Im(period2/period1) > 0.
class Lattice
{
public:
    /// Swaps the generators if needed to make Im(period2/period1) > 0.
    /// Throws PreconditionError on zero or parallel generators.
    Lattice(cplx period1, cplx period2);

    cplx period1() const noexcept { return w1_; }
    cplx period2() const noexcept { return w2_; }
    cplx tau() const noexcept { return w2_ / w1_; }

    /// Real coordinates (x, y) with z = x period1 + y period2.
    std::pair<double, double> coordinates(cplx z) const noexcept;
    double shortest_vector() const noexcept;
    /// period1 real and period2 purely imaginary, within tol relative.
    bool is_rectangular(double tol = 1e-12) const noexcept;
    Lattice scaled(cplx s) const { return Lattice(s * w1_, s * w2_); }

private:
    cplx w1_;
    cplx w2_;
};

/// z - m period1 - n period2 with lattice coordinates in [-1/2, 1/2).
cplx reduce_to_fundamental(const Lattice& lattice, cplx z);

/// Duplication map of the Weierstrass function with invariants g2, g3:
///   (w^4 + g2/2 w^2 + 2 g3 w + g2^2/16) / (4 w^3 - g2 w - g3).
RationalMap duplication_map(cplx g2, cplx g3);

struct EllipticInvariants
{
    Lattice lattice;
    cplx g2;
    cplx g3;
    /// laurent[k] = c_k for k >= 2, with wp(z) = z^-2 + sum_k c_k z^{2k-2};
    /// entries 0 and 1 are zero.
    std::vector<cplx> laurent;
    RationalMap doubling;
    int rows_used = 0;

    cplx discriminant() const noexcept { return g2 * g2 * g2 - 27.0 * g3 * g3; }
};

inline constexpr int kDefaultLaurentTerms = 24;

/// g2 = 60 sum' w^-4 and g3 = 140 sum' w^-6. The lattice sums run row by row
/// (w = period1 (m + n tau)), the sum over m of each row in closed form
/// through csc^2, with compensated accumulation until a row pair adds less
/// than 1e-17 relative. Laurent coefficients follow from
///   c_k = 3 / ((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m},  k >= 4.
/// Throws PreconditionError when the discriminant vanishes.
EllipticInvariants invariants_from_lattice(const Lattice& lattice, int laurent_terms = kDefaultLaurentTerms);

/// wp(z) by reduction to the fundamental cell, halving into a quarter of the
/// shortest period, the Laurent series there, and the duplication map on the
/// way back. Lattice points give infinity.
SpherePoint wp_eval(const EllipticInvariants& E, cplx z);

/// wp'(z) through the same halving scheme, doubling with
/// wp'(2z) = f'(wp(z)) wp'(z) / 2.
SpherePoint wp_prime_eval(const EllipticInvariants& E, cplx z);

/// Both at once (shares the halving work).
std::pair<SpherePoint, SpherePoint> wp_and_prime(const EllipticInvariants& E, cplx z);

} // namespace invcurve

#endif
