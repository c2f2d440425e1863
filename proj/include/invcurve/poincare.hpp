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

#ifndef INVCURVE_POINCARE_HPP
#define INVCURVE_POINCARE_HPP

#include <vector>

#include "invcurve/curve_trace.hpp"
#include "invcurve/rational_map.hpp"
#include "invcurve/series.hpp"

namespace invcurve {

/// Linearizer F of f at a repelling fixed point a:
///   F(lambda z) = f(F(z)),  F(0) = a,  F'(0) = 1.
class PoincareSeries
{
public:
    PoincareSeries(RationalMap map, cplx fixed_point, cplx multiplier, TruncatedPowerSeries series,
                   double radius_estimate);

    const RationalMap& map() const noexcept { return map_; }
    cplx fixed_point() const noexcept { return fixed_point_; }
    cplx multiplier() const noexcept { return multiplier_; }
    /// a + z + c_2 z^2 + ... + c_N z^N.
    const TruncatedPowerSeries& series() const noexcept { return series_; }
    int order() const noexcept { return series_.order(); }
    /// c_k for k >= 1 (c_1 = 1).
    cplx coefficient(int k) const noexcept { return series_[k]; }

    /// Root-test estimate 1 / limsup |c_k|^{1/k} over the last third of
    /// the coefficients; capped at 1e6 for entire-looking data.
    double radius_estimate() const noexcept { return radius_; }
    /// Disc where the truncated series is used directly: rho/2, shrunk
    /// further if the truncation tail would exceed 1e-15 relative there.
    double working_radius() const noexcept { return working_radius_; }

private:
    RationalMap map_;
    cplx fixed_point_;
    cplx multiplier_;
    TruncatedPowerSeries series_;
    double radius_;
    double working_radius_;
};

struct PoincareOptions
{
    double fixed_tol = 1e-8;                   ///< |f(a) - a| chordal
    double classify_tol = Tolerances{}.classify;
    double degenerate_tol = 1e-12;             ///< |lambda^k - lambda| guard
};

/// Coefficients c_1..c_N of F. Each c_k solves (lambda^k - lambda) c_k = T_k,
/// where T_k is the z^k coefficient of f(a + c_1 z + ... + c_{k-1} z^{k-1}).
/// Throws PreconditionError if a is not fixed or not repelling.
PoincareSeries solve_coefficients(const RationalMap& f, cplx a, int order, const PoincareOptions& options = {});

/// F(z) on all of C: f^k(series(z / lambda^k)) for the smallest k with
/// |z| / |lambda|^k <= working radius, plus extra_depth further pullbacks.
/// Different depths give independent routes to the same value. Poles of F
/// come back as infinity.
SpherePoint evaluate(const PoincareSeries& F, cplx z, int extra_depth = 0);

struct MultiplierCheckEntry
{
    SpherePoint location;
    cplx multiplier;
    double distance_to_trace;
    bool real;
};

struct MultiplierRealReport
{
    std::vector<MultiplierCheckEntry> entries; ///< repelling fixed points near the trace
    bool all_real = true;
};

/// Repelling fixed points of f within chordal distance `near` of the trace,
/// flagged when |Im lambda| > imag_tol (such a point cannot lie on an
/// invariant analytic curve through it).
MultiplierRealReport multiplier_real_check(const RationalMap& f, const CurveTrace& trace, double near = 1e-4,
                                           double imag_tol = 1e-9);

/// F(t) for n uniform t in [-T, T]. Requires real lambda (|Im| <= imag_tol);
/// for lambda < 0 the samples come from the linearizer of f^2 (multiplier
/// lambda^2 > 1), which is the same function F.
CurveTrace trace_real_axis(const PoincareSeries& F, double T, int n, double imag_tol = 1e-9);

struct Crossing
{
    double s;
    double t;
    SpherePoint point;
    double distance;
    std::size_t segment_pairs; ///< size of the cluster this crossing represents
};

struct CrossingOptions
{
    double tolerance = 1e-6;   ///< chordal
    int min_separation = 10;   ///< in grid steps
    std::size_t max_reports = 1000;
};

/// Pairs of segments at least min_separation steps apart whose chordal
/// distance falls below tolerance: evidence that the traced map is not
/// injective. Hits within min_separation steps in both segment indices are
/// clustered and each cluster reports its closest pair, with parameters interpolated at the closest
/// points. Ordered by first segment.
std::vector<Crossing> injectivity_check(const CurveTrace& trace, const CrossingOptions& options = {});

} // namespace invcurve

#endif
