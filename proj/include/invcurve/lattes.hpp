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

#ifndef INVCURVE_LATTES_HPP
#define INVCURVE_LATTES_HPP

#include <cstdint>

#include "invcurve/elliptic.hpp"

namespace invcurve {

/// Degree-4 map f with wp(2z) = f(wp(z)).
struct LattesSystem
{
    EllipticInvariants invariants;
    RationalMap map;
};

LattesSystem lattes_from_invariants(const EllipticInvariants& E);

/// Max chordal distance between wp(2^k z) and f^k(wp(z)) over n_samples
/// random z in the fundamental cell (k = 1 checks the map itself, k = 2 its
/// second iterate against quadrupling).
double verify_lattes(const LattesSystem& S, int n_samples, std::uint64_t seed = 1, int doublings = 1);

} // namespace invcurve

#endif
