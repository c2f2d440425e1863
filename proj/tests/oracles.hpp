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

#ifndef INVCURVE_TESTS_ORACLES_HPP
#define INVCURVE_TESTS_ORACLES_HPP

// Reference values computed by methods independent of the library.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double pi = std::numbers::pi;

inline double factorial(int n)
{
    double f = 1.0;
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// Coefficients of e^z and of 2 cosh(sqrt z), the latter scaled so c_1 = 1.
inline double exp_coefficient(int k) { return 1.0 / factorial(k); }
inline double cosh_sqrt_coefficient(int k) { return 2.0 / factorial(2 * k); }

inline cplx two_cosh_sqrt(cplx z) { return 2.0 * std::cosh(std::sqrt(z)); }

// Direct O(N^2) Cauchy product truncated at `order`.
inline std::vector<cplx> slow_convolution(const std::vector<cplx>& a, const std::vector<cplx>& b, int order)
{
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int i = 0; i <= order; ++i)
        for (int j = 0; i + j <= order; ++j)
            if (i < static_cast<int>(a.size()) && j < static_cast<int>(b.size()))
                c[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return c;
}

inline cplx csc2(cplx z)
{
    const cplx s = std::sin(pi * z);
    return 1.0 / (s * s);
}

// wp(z; 1, tau) = pi^2 [csc^2(pi z) - 1/3 + sum_{n != 0} (csc^2(pi(z + n tau)) - csc^2(pi n tau))],
// each row summed in closed form over the first period.
inline cplx wp_unit(cplx z, cplx tau, int rows = 60)
{
    cplx acc = csc2(z) - 1.0 / 3.0;
    for (int n = 1; n <= rows; ++n) {
        const double m = n;
        acc += csc2(z + m * tau) + csc2(z - m * tau) - 2.0 * csc2(m * tau);
    }
    return pi * pi * acc;
}

// General lattice <w1, w2> by homogeneity: wp(z; w1, w2) = wp(z / w1; 1, w2 / w1) / w1^2.
inline cplx wp(cplx z, cplx w1, cplx w2)
{
    cplx tau = w2 / w1;
    if (tau.imag() < 0.0)
        tau = -tau;
    return wp_unit(z / w1, tau) / (w1 * w1);
}

inline double divisor_power_sum(int n, int power)
{
    double s = 0.0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            s += std::pow(static_cast<double>(d), power);
    return s;
}

// g2 and g3 from the q-expansions of E4 and E6 for <w1, w2>, Im(w2 / w1) > 0.
inline std::pair<cplx, cplx> invariants_q_series(cplx w1, cplx w2, int terms = 80)
{
    const cplx tau = w2 / w1;
    const cplx q = std::exp(cplx(0.0, 2.0 * pi) * tau);
    cplx e4 = 1.0, e6 = 1.0, qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        e4 += 240.0 * divisor_power_sum(n, 3) * qn;
        e6 -= 504.0 * divisor_power_sum(n, 5) * qn;
    }
    const cplx u = 2.0 * pi / w1;
    return {std::pow(u, 4) * e4 / 12.0, std::pow(u, 6) * e6 / 216.0};
}

// sum' w^{-2k} over the square shells max(|m|,|n|) <= N. Reliable for
// 2k >= 8, where the shell tail falls like N^{2-2k}.
inline cplx lattice_sum(cplx w1, cplx w2, int two_k, int N)
{
    cplx acc = 0.0;
    for (int m = -N; m <= N; ++m)
        for (int n = -N; n <= N; ++n)
            if (m != 0 || n != 0)
                acc += std::pow(static_cast<double>(m) * w1 + static_cast<double>(n) * w2, -two_k);
    return acc;
}

// Laurent coefficient c_k of wp(z) = z^-2 + sum c_k z^{2k-2}: (2k - 1) G_{2k}.
inline cplx laurent_coefficient(cplx w1, cplx w2, int k, int N = 120)
{
    return (2.0 * k - 1.0) * lattice_sum(w1, w2, 2 * k, N);
}

inline double relative_error(cplx got, cplx want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

} // namespace oracle

#endif
