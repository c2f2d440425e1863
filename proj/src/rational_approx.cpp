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

#include "invcurve/rational_approx.hpp"

#include <cmath>
#include <limits>

namespace invcurve {

std::vector<Fraction> convergents(double x, std::int64_t max_denominator)
{
    std::vector<Fraction> out;
    if (!std::isfinite(x) || max_denominator < 1)
        return out;
    // h_{k} = a_k h_{k-1} + h_{k-2}, same for k.
    long double y = x;
    std::int64_t h_prev = 1, h_prev2 = 0;
    std::int64_t k_prev = 0, k_prev2 = 1;
    for (int step = 0; step < 64; ++step) {
        const long double a = std::floor(y);
        if (std::fabs(a) > static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 4))
            break;
        const auto ai = static_cast<std::int64_t>(a);
        const std::int64_t h = ai * h_prev + h_prev2;
        const std::int64_t k = ai * k_prev + k_prev2;
        if (k > max_denominator || k <= 0)
            break;
        out.push_back({h, k});
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const long double frac = y - a;
        if (frac == 0.0L)
            break;
        y = 1.0L / frac;
    }
    return out;
}

std::optional<Fraction> detect_rational(double x, std::int64_t max_denominator, double tol)
{
    for (const Fraction& f : convergents(x, max_denominator))
        if (std::abs(x - f.value()) <= tol)
            return f;
    return std::nullopt;
}

} // namespace invcurve
