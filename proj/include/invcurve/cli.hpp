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

#ifndef INVCURVE_CLI_HPP
#define INVCURVE_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitCertification = 3;
inline constexpr int kExitUsage = 64;

/// Shared flags. Unset optionals fall back to per-command defaults.
struct RunConfig
{
    std::optional<double> tol;
    std::optional<int> order;
    std::optional<int> samples;
    std::uint64_t seed = 1;
    std::filesystem::path out = ".";
    bool csv = true;
    bool svg = true;
};

struct PoincareArgs
{
    std::string map;
    std::string fixed_point;
    double trace_range = 8.0;
};

struct ExampleArgs
{
    int which = 1;
    std::optional<std::string> offset;
    int n = 3;
};

struct SemiconjArgs
{
    std::optional<std::string> u, v;
    std::optional<std::string> w;
    int m = 1, n = 1;
    std::vector<std::string> verify; ///< f g h
    int iterate = 1;
};

struct LattesArgs
{
    std::string lattice;
};

int cmd_poincare(const RunConfig& cfg, const PoincareArgs& args, std::ostream& out);
int cmd_example(const RunConfig& cfg, const ExampleArgs& args, std::ostream& out);
int cmd_semiconj(const RunConfig& cfg, const SemiconjArgs& args, std::ostream& out, std::ostream& err);
int cmd_lattes(const RunConfig& cfg, const LattesArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name), dispatches, and
/// maps errors to exit codes: 2 precondition, 3 certification, 64 usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace invcurve::cli

#endif
