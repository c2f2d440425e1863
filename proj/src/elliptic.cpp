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

#include "invcurve/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "invcurve/errors.hpp"

namespace invcurve {
namespace {

constexpr double kPi = std::numbers::pi;

// Neumaier-compensated complex accumulator.
class CompensatedSum
{
public:
    void add(cplx x)
    {
        add_part(re_, cre_, x.real());
        add_part(im_, cim_, x.imag());
    }
    cplx value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void add_part(double& sum, double& comp, double x)
    {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

// Lagrange-Gauss reduction: returns a basis (b1, b2) of the same lattice
// with |b1| <= |b2| <= |b2 +- b1|.
std::pair<cplx, cplx> reduced_basis(cplx b1, cplx b2)
{
    if (std::abs(b2) < std::abs(b1))
        std::swap(b1, b2);
    for (int it = 0; it < 1000; ++it) {
        const double mu = std::round((b2 * std::conj(b1)).real() / std::norm(b1));
        b2 -= mu * b1;
        if (std::abs(b2) >= std::abs(b1))
            break;
        std::swap(b1, b2);
    }
    return {b1, b2};
}

struct EisensteinSums
{
    cplx weight4; // sum' w^-4
    cplx weight6; // sum' w^-6
    int rows;
};

// Rows w = b1 (m + n tau); for fixed n the sum over m is closed form:
//   sum_m (x+m)^-4 = pi^4 (c^2 - 2c/3),  sum_m (x+m)^-6 = pi^6 (c^3 - c^2 + 2c/15),
// with c = csc^2(pi x). Row n = 0 gives 2 zeta(4) and 2 zeta(6).
EisensteinSums eisenstein_sums(const Lattice& lattice)
{
    auto [b1, b2] = reduced_basis(lattice.period1(), lattice.period2());
    cplx tau = b2 / b1;
    if (tau.imag() < 0.0)
        tau = -tau;
    const double pi4 = std::pow(kPi, 4), pi6 = std::pow(kPi, 6);
    CompensatedSum s4, s6;
    s4.add(pi4 / 45.0);
    s6.add(2.0 * pi6 / 945.0);
    int n = 1;
    for (; n <= 200; ++n) {
        const cplx sn = std::sin(kPi * static_cast<double>(n) * tau);
        const cplx c = 1.0 / (sn * sn);
        const cplx r4 = 2.0 * pi4 * (c * c - 2.0 * c / 3.0);
        const cplx r6 = 2.0 * pi6 * (c * c * c - c * c + 2.0 * c / 15.0);
        s4.add(r4);
        s6.add(r6);
        if (std::abs(r4) <= 1e-17 * std::abs(s4.value()) && std::abs(r6) <= 1e-17 * std::abs(s6.value()))
            break;
    }
    return {s4.value() / std::pow(b1, 4), s6.value() / std::pow(b1, 6), n};
}

} // namespace

Lattice::Lattice(cplx period1, cplx period2) : w1_(period1), w2_(period2)
{
    if (w1_ == cplx(0.0) || w2_ == cplx(0.0))
        throw PreconditionError("Lattice: zero generator");
    const cplx t = w2_ / w1_;
    if (std::abs(t.imag()) <= 1e-12 * std::abs(t))
        throw PreconditionError("Lattice: parallel generators");
    if (t.imag() < 0.0)
        std::swap(w1_, w2_);
}

std::pair<double, double> Lattice::coordinates(cplx z) const noexcept
{
    const cplx u = z / w1_;
    const cplx t = tau();
    const double y = u.imag() / t.imag();
    const double x = u.real() - y * t.real();
    return {x, y};
}

double Lattice::shortest_vector() const noexcept
{
    return std::abs(reduced_basis(w1_, w2_).first);
}

bool Lattice::is_rectangular(double tol) const noexcept
{
    return std::abs(w1_.imag()) <= tol * std::abs(w1_) && std::abs(w2_.real()) <= tol * std::abs(w2_);
}

cplx reduce_to_fundamental(const Lattice& lattice, cplx z)
{
    const auto [x, y] = lattice.coordinates(z);
    const double m = std::floor(x + 0.5);
    const double n = std::floor(y + 0.5);
    return z - m * lattice.period1() - n * lattice.period2();
}

RationalMap duplication_map(cplx g2, cplx g3)
{
    return RationalMap::from_coprime(Polynomial({g2 * g2 / 16.0, 2.0 * g3, g2 / 2.0, 0.0, 1.0}),
                                     Polynomial({-g3, -g2, 0.0, 4.0}));
}

EllipticInvariants invariants_from_lattice(const Lattice& lattice, int laurent_terms)
{
    if (laurent_terms < 3)
        throw PreconditionError("invariants_from_lattice: need at least 3 Laurent terms");
    const EisensteinSums sums = eisenstein_sums(lattice);
    const cplx g2 = 60.0 * sums.weight4;
    const cplx g3 = 140.0 * sums.weight6;
    const cplx disc = g2 * g2 * g2 - 27.0 * g3 * g3;
    if (std::abs(disc) <= 1e-12 * (std::pow(std::abs(g2), 3) + 27.0 * std::norm(g3)))
        throw PreconditionError("invariants_from_lattice: vanishing discriminant");

    std::vector<cplx> c(static_cast<std::size_t>(laurent_terms) + 1, 0.0);
    c[2] = g2 / 20.0;
    c[3] = g3 / 28.0;
    for (int k = 4; k <= laurent_terms; ++k) {
        cplx acc = 0.0;
        for (int m = 2; m <= k - 2; ++m)
            acc += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = 3.0 / ((2.0 * k + 1.0) * (k - 3.0)) * acc;
    }
    return EllipticInvariants{lattice, g2, g3, std::move(c), duplication_map(g2, g3), sums.rows};
}

std::pair<SpherePoint, SpherePoint> wp_and_prime(const EllipticInvariants& E, cplx z)
{
    const cplx z0 = reduce_to_fundamental(E.lattice, z);
    if (z0 == cplx(0.0))
        return {SpherePoint::infinity(), SpherePoint::infinity()};
    const double r0 = E.lattice.shortest_vector() / 4.0;
    int k = 0;
    cplx w = z0;
    while (std::abs(w) > r0) {
        w *= 0.5;
        ++k;
    }
    // z^2 wp(z) = 1 + sum_j c_j z^{2j}; differentiate termwise for wp'.
    const cplx w2 = w * w;
    const int M = static_cast<int>(E.laurent.size()) - 1;
    cplx head = 0.0, dhead = 0.0;
    for (int j = M; j >= 2; --j) {
        head = head * w2 + E.laurent[static_cast<std::size_t>(j)];
        dhead = dhead * w2 + static_cast<double>(2 * j - 2) * E.laurent[static_cast<std::size_t>(j)];
    }
    // head = sum c_j w^{2j-4}, dhead = sum (2j-2) c_j w^{2j-4}
    SpherePoint value(1.0 / w2 + head * w2);
    SpherePoint prime(-2.0 / (w2 * w) + dhead * w);

    for (int i = 0; i < k; ++i) {
        if (value.is_infinite()) {
            prime = SpherePoint::infinity();
            continue;
        }
        const cplx v = value.value();
        const SpherePoint next = E.doubling(value);
        if (next.is_infinite() || prime.is_infinite()) {
            prime = SpherePoint::infinity();
        } else {
            try {
                prime = SpherePoint(E.doubling.derivative(v) * prime.value() / 2.0);
            } catch (const PoleError&) {
                prime = SpherePoint::infinity();
            }
        }
        value = next;
    }
    return {value, prime};
}

SpherePoint wp_eval(const EllipticInvariants& E, cplx z)
{
    return wp_and_prime(E, z).first;
}

SpherePoint wp_prime_eval(const EllipticInvariants& E, cplx z)
{
    return wp_and_prime(E, z).second;
}

} // namespace invcurve
