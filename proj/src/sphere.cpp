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

#include "invcurve/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace invcurve {

SpherePoint::SpherePoint(cplx z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        infinite_ = true;
    else
        z_ = z;
}

cplx SpherePoint::value() const
{
    if (infinite_)
        throw std::logic_error("SpherePoint::value() at infinity");
    return z_;
}

std::array<double, 3> SpherePoint::embed() const noexcept
{
    if (infinite_)
        return {0.0, 0.0, 1.0};
    const double r2 = std::norm(z_);
    if (r2 > 1.0) {
        // Divide through by |z|^2 to keep the large-|z| case accurate.
        const double inv = 1.0 / r2;
        const double d = 1.0 + inv;
        return {2.0 * z_.real() * inv / d, 2.0 * z_.imag() * inv / d, (1.0 - inv) / d};
    }
    const double d = 1.0 + r2;
    return {2.0 * z_.real() / d, 2.0 * z_.imag() / d, (r2 - 1.0) / d};
}

SpherePoint SpherePoint::from_embedding(const std::array<double, 3>& p) noexcept
{
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (n == 0.0)
        return SpherePoint(cplx(0.0, 0.0));
    const double x = p[0] / n, y = p[1] / n, h = p[2] / n;
    if (h >= 1.0)
        return infinity();
    // Stereographic projection from the north pole.
    return SpherePoint(cplx(x, y) / (1.0 - h));
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) noexcept
{
    if (a.is_infinite() && b.is_infinite())
        return 0.0;
    if (a.is_infinite() || b.is_infinite()) {
        const cplx z = a.is_infinite() ? b.value() : a.value();
        return 2.0 / std::sqrt(1.0 + std::norm(z));
    }
    const cplx z = a.value(), w = b.value();
    const double az = std::abs(z), aw = std::abs(w);
    if (az > 1.0 && aw > 1.0) {
        // Same quantity in the chart 1/z.
        const cplx iz = 1.0 / z, iw = 1.0 / w;
        return 2.0 * std::abs(iz - iw) / std::sqrt((1.0 + std::norm(iz)) * (1.0 + std::norm(iw)));
    }
    return 2.0 * std::abs(z - w) / std::sqrt((1.0 + az * az) * (1.0 + aw * aw));
}

} // namespace invcurve
