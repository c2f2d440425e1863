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

#include "invcurve/lattes.hpp"

#include <algorithm>
#include <random>

#include "invcurve/errors.hpp"

namespace invcurve {

LattesSystem lattes_from_invariants(const EllipticInvariants& E)
{
    const cplx disc = E.discriminant();
    if (std::abs(disc) <= 1e-12 * (std::pow(std::abs(E.g2), 3) + 27.0 * std::norm(E.g3)))
        throw PreconditionError("lattes_from_invariants: degenerate invariants");
    return LattesSystem{E, duplication_map(E.g2, E.g3)};
}

double verify_lattes(const LattesSystem& S, int n_samples, std::uint64_t seed, int doublings)
{
    const RationalMap fk = iterate(S.map, doublings);
    const double factor = static_cast<double>(1 << doublings);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-0.5, 0.5);
    const Lattice& L = S.invariants.lattice;
    double worst = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const cplx z = coord(rng) * L.period1() + coord(rng) * L.period2();
        const SpherePoint lhs = wp_eval(S.invariants, factor * z);
        const SpherePoint rhs = fk(wp_eval(S.invariants, z));
        worst = std::max(worst, chordal_distance(lhs, rhs));
    }
    return worst;
}

} // namespace invcurve
