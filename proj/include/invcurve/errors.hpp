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

#ifndef INVCURVE_ERRORS_HPP
#define INVCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invcurve {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (not fixed, not repelling, ...).
class PreconditionError : public Error
{
public:
    using Error::Error;
};

class DegreeCapExceeded : public Error
{
public:
    DegreeCapExceeded(long long degree, long long cap)
        : Error("degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap)),
          degree_(degree), cap_(cap) {}

    long long degree() const noexcept { return degree_; }
    long long cap() const noexcept { return cap_; }

private:
    long long degree_;
    long long cap_;
};

class RootFindingError : public Error
{
public:
    RootFindingError(const std::string& what, double best_residual)
        : Error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

// A series or evaluation ran into a pole where a finite value was required.
class PoleError : public Error
{
public:
    using Error::Error;
};

} // namespace invcurve

#endif
