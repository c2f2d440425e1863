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

#ifndef INVCURVE_CURVE_TRACE_HPP
#define INVCURVE_CURVE_TRACE_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "invcurve/sphere.hpp"

namespace invcurve {

struct TraceSample
{
    double parameter;
    SpherePoint point;
};

/// Ordered samples of a parametrized curve on the sphere.
///
/// Parameters are strictly increasing. A closed trace does not repeat its
/// first sample at the end; the last segment wraps around to the first.
class CurveTrace
{
public:
    CurveTrace() = default;
    /// Throws PreconditionError if parameters are not strictly increasing.
    CurveTrace(std::vector<TraceSample> samples, bool closed, std::string source);

    /// Samples `curve` at n uniform parameters. For closed traces t1 is
    /// excluded (it is identified with t0), otherwise both ends are included.
    /// t1 < t0 reverses the sample order (parameters are then negated so they
    /// stay increasing).
    static CurveTrace sample(const std::function<SpherePoint(double)>& curve, double t0, double t1, int n,
                             bool closed, std::string source);

    const std::vector<TraceSample>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool closed() const noexcept { return closed_; }
    const std::string& source() const noexcept { return source_; }

    std::size_t segment_count() const noexcept;
    /// Largest chordal gap between consecutive samples (including the wrap
    /// segment when closed).
    double max_gap() const;
    /// Finite sample points only.
    std::vector<cplx> finite_points() const;

    /// Chordal distance from p to the traced curve: nearest segment in the
    /// sphere embedding, then refined on a local cubic through the four
    /// surrounding samples.
    double distance_to(const SpherePoint& p) const;

private:
    std::vector<TraceSample> samples_;
    bool closed_ = false;
    std::string source_;
};

/// CSV with header "parameter,re,im,is_infinite".
void write_csv(std::ostream& os, const CurveTrace& trace);
CurveTrace read_csv(std::istream& is, bool closed = false, std::string source = "csv");

} // namespace invcurve

#endif
