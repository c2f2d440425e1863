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

#ifndef INVCURVE_SPHERE_HPP
#define INVCURVE_SPHERE_HPP

#include <array>
#include <complex>

namespace invcurve {

using cplx = std::complex<double>;

/// A point of the Riemann sphere: a finite complex number or infinity.
///
/// Non-finite complex values passed to the constructor collapse to infinity,
/// so overflowing arithmetic lands on the point at infinity rather than NaN.
class SpherePoint
{
public:
    SpherePoint() = default;
    SpherePoint(cplx z); // NOLINT(google-explicit-constructor)
    SpherePoint(double x) : SpherePoint(cplx(x, 0.0)) {}

    static SpherePoint infinity() noexcept
    {
        SpherePoint p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }

    /// Finite value; throws std::logic_error at infinity.
    cplx value() const;

    /// Inverse stereographic projection (2x, 2y, |z|^2 - 1) / (|z|^2 + 1)
    /// onto the unit sphere; infinity maps to the north pole. Euclidean
    /// distance between embeddings is the chordal distance.
    std::array<double, 3> embed() const noexcept;
    static SpherePoint from_embedding(const std::array<double, 3>& p) noexcept;

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) noexcept
    {
        if (a.infinite_ || b.infinite_)
            return a.infinite_ == b.infinite_;
        return a.z_ == b.z_;
    }

private:
    cplx z_{0.0, 0.0};
    bool infinite_ = false;
};

/// Chordal distance 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)); at most 2.
double chordal_distance(const SpherePoint& a, const SpherePoint& b) noexcept;

} // namespace invcurve

#endif
