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

#ifndef INVCURVE_ROOTS_HPP
#define INVCURVE_ROOTS_HPP

#include <vector>

#include "invcurve/polynomial.hpp"

namespace invcurve {

struct RootOptions
{
    /// Accept a root when |p(r)| <= tolerance * sum_k |p_k| |r|^k.
    double tolerance = 1e-10;
    int max_iterations = 500;
};

/// All degree-many roots of p, repeated according to multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration from points on a circle sized by
/// the Fujiwara bound. Exact zero roots are split off first, so z^k factors
/// come back as exact zeros. Throws RootFindingError when some root misses
/// the residual tolerance after max_iterations.
std::vector<cplx> poly_roots(const Polynomial& p, const RootOptions& options = {});

/// Groups of roots closer than cluster_tol * (1 + |r|), as (mean, count).
struct RootCluster
{
    cplx location;
    int multiplicity;
};
std::vector<RootCluster> cluster_roots(const std::vector<cplx>& roots, double cluster_tol = 1e-6);

} // namespace invcurve

#endif
