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

#ifndef INVCURVE_SEMICONJ_HPP
#define INVCURVE_SEMICONJ_HPP

#include "invcurve/curve_trace.hpp"
#include "invcurve/rational_map.hpp"

namespace invcurve {

/// h o g = f^n o h.
struct SemiconjTriple
{
    RationalMap f;
    RationalMap g;
    RationalMap h;
    int n = 1;
};

struct Certification
{
    double residual = 0.0;  ///< chordal, see identity_residual
    bool certified = false;
    bool degenerate = false; ///< n = 0: h o g = h
};

Certification certify(const SemiconjTriple& t, double tol = Tolerances{}.identity,
                       int degree_cap = kDefaultDegreeCap);

/// f = u o v, g = v o u, h = u, n = 1.
SemiconjTriple make_ritt_triple(const RationalMap& u, const RationalMap& v, int degree_cap = kDefaultDegreeCap);

/// f = z^m w(z)^n, g = z^m w(z^n), h = z^n, with semiconjugacy exponent 1.
SemiconjTriple make_power_family(const RationalMap& w, int m, int n, int degree_cap = kDefaultDegreeCap);

/// Chebyshev T_n with leading coefficient 2^{n-1}.
Polynomial chebyshev(int n);

/// J(z) = (z + 1/z) / 2.
RationalMap joukowski();

/// Coefficient deviation between J o P_n and T_n o J.
double verify_joukowski_identity(int n);

struct PakovichExample
{
    int n;
    cplx epsilon;
    RationalMap u;      ///< J(epsilon z)
    RationalMap f;      ///< u o T_n
    RationalMap R;      ///< J o P_n
    CurveTrace gamma;   ///< u(R \ {0}), x = +-e^s
    double symmetry_residual; ///< coefficient deviation of R(epsilon z) from R(z)
    double log_range;
};

/// Requires n >= 3. `root_index` picks epsilon = exp(2 pi i k / n).
/// The trace covers |x| in [e^-log_range, e^log_range] with n_samples per branch.
PakovichExample pakovich_example(int n, int n_samples = 2000, double log_range = 6.0, int root_index = 1);

/// With epsilon = e^{i theta}, gamma lies on (X / cos theta)^2 - (Y / sin theta)^2 = 1.
/// Max of |lhs - 1| / (1 + (X / cos theta)^2 + (Y / sin theta)^2) over the trace.
double hyperbola_residual(const PakovichExample& P);

/// Chordal distance from f(u(x)) to gamma for n_queries points with
/// |x| in [e^{-L/n}, e^{L/n}], whose images stay inside the traced range.
double pakovich_invariance_residual(const PakovichExample& P, int n_queries = 500);

} // namespace invcurve

#endif
