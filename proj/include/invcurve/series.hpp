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

#ifndef INVCURVE_SERIES_HPP
#define INVCURVE_SERIES_HPP

#include <initializer_list>
#include <ostream>
#include <vector>

#include "invcurve/rational_map.hpp"

namespace invcurve {

/// c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
///
/// Binary operations truncate at the smaller order of the operands.
class TruncatedPowerSeries
{
public:
    /// Zero series of the given order.
    explicit TruncatedPowerSeries(int order = 0);
    TruncatedPowerSeries(std::vector<cplx> coefficients, int order);
    TruncatedPowerSeries(std::initializer_list<cplx> coefficients, int order);

    static TruncatedPowerSeries constant(cplx c, int order);
    /// c + z
    static TruncatedPowerSeries variable(cplx c, int order);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    cplx operator[](int k) const noexcept { return k >= 0 && k <= order() ? c_[k] : cplx(0.0); }
    cplx& operator[](int k) { return c_.at(k); }
    const std::vector<cplx>& coefficients() const noexcept { return c_; }

    TruncatedPowerSeries truncated(int order) const;
    TruncatedPowerSeries derivative() const;
    /// Horner evaluation of the stored polynomial part.
    cplx operator()(cplx z) const noexcept;

    TruncatedPowerSeries& operator+=(const TruncatedPowerSeries& o);
    TruncatedPowerSeries& operator-=(const TruncatedPowerSeries& o);
    TruncatedPowerSeries& operator*=(cplx s);

    friend TruncatedPowerSeries operator+(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a += b; }
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a -= b; }
    friend TruncatedPowerSeries operator*(TruncatedPowerSeries a, cplx s) { return a *= s; }
    friend TruncatedPowerSeries operator*(cplx s, TruncatedPowerSeries a) { return a *= s; }
    friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);

private:
    std::vector<cplx> c_;
};

TruncatedPowerSeries add(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
TruncatedPowerSeries scale(const TruncatedPowerSeries& a, cplx s);
TruncatedPowerSeries mul(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);

/// 1/a; throws PoleError when |a_0| <= tol.
TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& a, double tol = 1e-14);

/// Taylor expansion of f(a(z)) by Horner on series.
/// Throws PoleError when f has a pole at a_0.
TruncatedPowerSeries compose_rational(const RationalMap& f, const TruncatedPowerSeries& a, double tol = 1e-14);

std::ostream& operator<<(std::ostream& os, const TruncatedPowerSeries& s);

} // namespace invcurve

#endif
