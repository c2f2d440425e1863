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

#ifndef INVCURVE_SVG_HPP
#define INVCURVE_SVG_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "invcurve/curves.hpp"

namespace invcurve {

struct Plot
{
    std::string title;
    const CurveTrace* trace = nullptr;
    /// Circle fits draw as a circle; algebraic fits as their zero set.
    const FitReport* overlay = nullptr;
    std::vector<SpherePoint> marks;
};

/// Static SVG of the finite part of the plot. The window is centred on the
/// coordinatewise median of the trace and clipped to the 90th percentile
/// radius so that branches running off to infinity do not flatten the rest.
std::string render_svg(const Plot& plot);

void write_svg(const std::filesystem::path& path, const Plot& plot);

} // namespace invcurve

#endif
