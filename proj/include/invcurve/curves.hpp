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

#ifndef INVCURVE_CURVES_HPP
#define INVCURVE_CURVES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invcurve/curve_trace.hpp"
#include "invcurve/elliptic.hpp"
#include "invcurve/rational_approx.hpp"
#include "invcurve/rational_map.hpp"

namespace invcurve {

/// wp(t + offset) for n uniform t in [t0, t1). Marked closed when t1 - t0 is
/// a lattice period. Throws PoleError if offset is a lattice point.
CurveTrace trace_wp_line(const EllipticInvariants& E, cplx offset, double t0, double t1, int n);

/// One real period of the horizontal line through offset. Requires a real
/// first generator.
CurveTrace trace_wp_line(const EllipticInvariants& E, cplx offset, int n);

/// Max over samples p of the chordal distance from f(p) to the trace.
double invariance_residual(const RationalMap& f, const CurveTrace& trace);

/// Same, with the images of `queries` measured against `curve`.
double invariance_residual(const RationalMap& f, const CurveTrace& curve, const CurveTrace& queries);

/// For the line L = R + offset with 3 offset = lattice period + r (r real),
/// the duplication map sends wp(x + offset) to wp(-2x - r + offset).
/// Returns r, or nullopt when 3 offset is not of that form.
std::optional<double> line_doubling_shift(const Lattice& lattice, cplx offset, double tol = 1e-12);

/// Max chordal distance between f(gamma(x)) and gamma(-2x - r) over n uniform
/// x in one real period. Throws PreconditionError if the line is not of the
/// invariant form above.
double parametric_invariance_residual(const EllipticInvariants& E, const RationalMap& f, cplx offset, int n);

/// Coordinates used by the implicit fits: (z - center) / scale with the
/// centroid of the finite samples and their largest distance from it.
struct FitFrame
{
    cplx center{0.0, 0.0};
    double scale = 1.0;
};

/// Implicit fit result. Circle fits store (a, b, c, d) of
/// a(x^2+y^2) + bx + cy + d with an empty monomial list.
struct FitReport
{
    int degree = 0;
    /// Over all distinct finite samples, column-normalized.
    double smallest_singular_value = 0.0;
    double residual = 0.0;            ///< max |F| over held-out samples, unit-norm coefficients
    std::vector<double> coefficients; ///< unit Euclidean norm, order given by `monomials`
    std::vector<std::pair<int, int>> monomials; ///< (i, j) for x^i y^j in the fit frame
    FitFrame frame;
    std::size_t samples_used = 0;
    std::size_t infinite_excluded = 0;
    bool passed = false;              ///< residual <= threshold
    double threshold = 0.0;
};

inline constexpr double kCircleThreshold = 1e-8;
inline constexpr double kAlgebraicThreshold = 1e-6;
inline constexpr double kTranscendenceThreshold = 1e-3;

/// a(x^2+y^2) + b x + c y + d = 0 through the smallest right singular vector;
/// coefficients in the fit frame. Circles and lines pass at residual <= 1e-8.
FitReport circle_fit(const CurveTrace& trace, double threshold = kCircleThreshold);

/// Implicit polynomial of total degree <= d: fit on even-index samples,
/// residual over odd-index samples. Monomial columns are scaled to unit norm
/// before the SVD. Throws PreconditionError when there are fewer than
/// 3 * (number of monomials) finite samples.
FitReport algebraic_fit(const CurveTrace& trace, int degree, double threshold = kAlgebraicThreshold);

struct TranscendenceScan
{
    std::vector<FitReport> fits; ///< d = 1 .. d_max
    double threshold = kTranscendenceThreshold;
    /// Every held-out residual stayed >= threshold.
    bool no_low_degree_fit = false;
    /// First degree whose residual fell to <= algebraic threshold, if any.
    std::optional<int> first_algebraic_degree;
};

TranscendenceScan transcendence_scan(const CurveTrace& trace, int d_max,
                                     double threshold = kTranscendenceThreshold,
                                     double algebraic_threshold = kAlgebraicThreshold);

/// Evidence (never proof) of transcendence: the scan of the candidate finds
/// no fit while the control scan does find one.
bool transcendence_evidence(const TranscendenceScan& candidate, const TranscendenceScan& control);

enum class Commensurability
{
    commensurable,
    incommensurable_up_to,
};

std::string to_string(Commensurability c);

struct CommensurabilityReport
{
    Commensurability verdict;
    std::int64_t max_denominator;
    /// Coordinates of L2's generators in L1's basis: period1 = a p1 + b p2,
    /// period2 = c p1 + d p2.
    std::array<double, 4> coordinates;
    std::array<std::optional<Fraction>, 4> fractions;
};

CommensurabilityReport lattice_commensurability(const Lattice& L1, const Lattice& L2, std::int64_t q_max = 1000,
                                                double tol = 1e-9);

struct XYCheckReport
{
    double on_line_residual = 0.0;       ///< max (|X - Re wp| + |Y - Im wp|) / max(1, |wp|) on L
    double period1_residual = 0.0;       ///< max relative change of X, Y under z -> z + period1
    double period2_residual = 0.0;       ///< same for period2
    double off_line_y_sample = 0.0;      ///< |Y| at a real-axis point
};

/// X(z) = (wp(z) + conj(wp(s(z)))) / 2 and Y(z) = (wp(z) - conj(wp(s(z)))) / (2i),
/// s the reflection in the horizontal line through offset. Requires a
/// rectangular lattice.
XYCheckReport example1_xy_check(const EllipticInvariants& E, cplx offset, int n_samples, std::uint64_t seed = 7);

} // namespace invcurve

#endif
