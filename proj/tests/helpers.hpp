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

#ifndef INVCURVE_TESTS_HELPERS_HPP
#define INVCURVE_TESTS_HELPERS_HPP

#include <random>

#include "invcurve/rational_map.hpp"

namespace testing {

using invcurve::cplx;

inline cplx random_complex(std::mt19937_64& rng, double scale = 1.0)
{
    std::normal_distribution<double> g(0.0, scale);
    return {g(rng), g(rng)};
}

inline invcurve::Polynomial random_polynomial(std::mt19937_64& rng, int degree)
{
    std::vector<cplx> c;
    for (int k = 0; k <= degree; ++k)
        c.push_back(random_complex(rng));
    return invcurve::Polynomial(std::move(c));
}

// Numerator of exact degree d, denominator of degree d - 1 or d with
// Gaussian coefficients; generic, hence coprime.
inline invcurve::RationalMap random_map(std::mt19937_64& rng, int d)
{
    std::bernoulli_distribution coin(0.5);
    const int dq = coin(rng) ? d : d - 1;
    return invcurve::RationalMap(random_polynomial(rng, d), random_polynomial(rng, dq));
}

inline invcurve::SpherePoint random_sphere_point(std::mt19937_64& rng)
{
    // Uniform on the sphere through the inverse embedding.
    std::normal_distribution<double> g(0.0, 1.0);
    std::array<double, 3> p{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    for (double& x : p)
        x /= n;
    return invcurve::SpherePoint::from_embedding(p);
}

} // namespace testing

#endif
