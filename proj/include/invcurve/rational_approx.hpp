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

#ifndef INVCURVE_RATIONAL_APPROX_HPP
#define INVCURVE_RATIONAL_APPROX_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace invcurve {

struct Fraction
{
    std::int64_t numerator;
    std::int64_t denominator;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// Continued-fraction convergents of x with denominator <= max_denominator.
std::vector<Fraction> convergents(double x, std::int64_t max_denominator);

/// First convergent p/q of x with q <= max_denominator and |x - p/q| <= tol.
std::optional<Fraction> detect_rational(double x, std::int64_t max_denominator, double tol);

} // namespace invcurve

#endif
