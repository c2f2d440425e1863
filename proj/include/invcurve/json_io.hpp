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

#ifndef INVCURVE_JSON_IO_HPP
#define INVCURVE_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "invcurve/curves.hpp"
#include "invcurve/elliptic.hpp"
#include "invcurve/poincare.hpp"
#include "invcurve/rational_map.hpp"

namespace invcurve {

using Json = nlohmann::ordered_json;

/// Finite values as numbers; inf and nan as the strings "inf", "-inf", "nan".
Json number_to_json(double x);
double number_from_json(const Json& j);

/// [re, im].
Json complex_to_json(cplx z);
cplx complex_from_json(const Json& j);

/// [re, im], or the string "inf".
Json sphere_to_json(const SpherePoint& p);
SpherePoint sphere_from_json(const Json& j);

/// Ascending powers as a list of [re, im].
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"num": [...], "den": [...]}.
Json map_to_json(const RationalMap& f);
RationalMap map_from_json(const Json& j);

/// {"g1": [re, im], "g2": [re, im]}.
Json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const Json& j);

Json fit_to_json(const FitReport& r);
Json fixed_points_to_json(const std::vector<FixedPointInfo>& pts);
Json commensurability_to_json(const CommensurabilityReport& r);
Json crossings_to_json(const std::vector<Crossing>& c);

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load_json(const std::string& text_or_path);

/// Two-space indentation and a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);

} // namespace invcurve

#endif
