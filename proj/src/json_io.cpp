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

#include "invcurve/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "invcurve/errors.hpp"

namespace invcurve {

Json number_to_json(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    return x;
}

double number_from_json(const Json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf")
            return std::numeric_limits<double>::infinity();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
        if (s == "nan")
            return std::numeric_limits<double>::quiet_NaN();
    }
    throw PreconditionError("expected a number, got " + j.dump());
}

Json complex_to_json(cplx z)
{
    return Json::array({number_to_json(z.real()), number_to_json(z.imag())});
}

cplx complex_from_json(const Json& j)
{
    if (j.is_number())
        return j.get<double>();
    if (!j.is_array() || j.size() != 2)
        throw PreconditionError("expected [re, im], got " + j.dump());
    return {number_from_json(j[0]), number_from_json(j[1])};
}

Json sphere_to_json(const SpherePoint& p)
{
    return p.is_infinite() ? Json("inf") : complex_to_json(p.value());
}

SpherePoint sphere_from_json(const Json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return SpherePoint::infinity();
    return SpherePoint(complex_from_json(j));
}

Json polynomial_to_json(const Polynomial& p)
{
    Json out = Json::array();
    for (const cplx c : p.coefficients())
        out.push_back(complex_to_json(c));
    return out;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw PreconditionError("expected a coefficient list, got " + j.dump());
    std::vector<cplx> c;
    for (const Json& e : j)
        c.push_back(complex_from_json(e));
    return Polynomial(std::move(c));
}

Json map_to_json(const RationalMap& f)
{
    Json out;
    out["num"] = polynomial_to_json(f.numerator());
    out["den"] = polynomial_to_json(f.denominator());
    return out;
}

RationalMap map_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw PreconditionError("rational map needs \"num\" and \"den\"");
    return RationalMap(polynomial_from_json(j["num"]), polynomial_from_json(j["den"]));
}

Json lattice_to_json(const Lattice& L)
{
    Json out;
    out["g1"] = complex_to_json(L.period1());
    out["g2"] = complex_to_json(L.period2());
    return out;
}

Lattice lattice_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("g1") || !j.contains("g2"))
        throw PreconditionError("lattice needs \"g1\" and \"g2\"");
    return Lattice(complex_from_json(j["g1"]), complex_from_json(j["g2"]));
}

Json fit_to_json(const FitReport& r)
{
    Json out;
    out["degree"] = r.degree;
    out["residual"] = number_to_json(r.residual);
    out["threshold"] = number_to_json(r.threshold);
    out["passed"] = r.passed;
    out["smallest_singular_value"] = number_to_json(r.smallest_singular_value);
    out["samples_used"] = r.samples_used;
    out["infinite_excluded"] = r.infinite_excluded;
    out["frame"] = {{"center", complex_to_json(r.frame.center)}, {"scale", number_to_json(r.frame.scale)}};
    Json coeffs = Json::array();
    for (const double c : r.coefficients)
        coeffs.push_back(number_to_json(c));
    out["coefficients"] = coeffs;
    if (!r.monomials.empty()) {
        Json mons = Json::array();
        for (const auto& [i, j] : r.monomials)
            mons.push_back(Json::array({i, j}));
        out["monomials"] = mons;
    }
    return out;
}

Json fixed_points_to_json(const std::vector<FixedPointInfo>& pts)
{
    Json out = Json::array();
    for (const FixedPointInfo& p : pts) {
        Json e;
        e["location"] = sphere_to_json(p.location);
        e["multiplier"] = complex_to_json(p.multiplier);
        e["abs_multiplier"] = number_to_json(std::abs(p.multiplier));
        e["class"] = to_string(p.kind);
        e["multiplicity"] = p.multiplicity;
        out.push_back(e);
    }
    return out;
}

Json commensurability_to_json(const CommensurabilityReport& r)
{
    Json out;
    out["verdict"] = to_string(r.verdict);
    out["max_denominator"] = r.max_denominator;
    Json coords = Json::array(), fr = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        coords.push_back(number_to_json(r.coordinates[i]));
        if (r.fractions[i])
            fr.push_back(Json::array({r.fractions[i]->numerator, r.fractions[i]->denominator}));
        else
            fr.push_back(nullptr);
    }
    out["coordinates"] = coords;
    out["fractions"] = fr;
    return out;
}

Json crossings_to_json(const std::vector<Crossing>& c)
{
    Json out = Json::array();
    for (const Crossing& x : c) {
        Json e;
        e["s"] = number_to_json(x.s);
        e["t"] = number_to_json(x.t);
        e["point"] = sphere_to_json(x.point);
        e["distance"] = number_to_json(x.distance);
        e["segment_pairs"] = x.segment_pairs;
        out.push_back(e);
    }
    return out;
}

Json load_json(const std::string& text_or_path)
{
    const auto first = text_or_path.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '['))
            return Json::parse(text_or_path);
        std::ifstream in(text_or_path);
        if (!in)
            throw PreconditionError("cannot open " + text_or_path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
    }
}

void write_json(const std::filesystem::path& path, const Json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

} // namespace invcurve
