/*
   Copyright 2026 the wsigma authors

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

#ifndef WSIGMA_ERRORS_HPP
#define WSIGMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsigma {

/* Base class: everything thrown by the library derives from this. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/* Validation-type errors (bad input, exit code 1 in the CLI). */
class ValidationError : public Error {
public:
    using Error::Error;
};

/* Internal/verification-type errors (exit code 2 in the CLI). */
class VerificationError : public Error {
public:
    using Error::Error;
};

#define WSIGMA_DEFINE_ERROR(NAME, BASE)                         \
    class NAME : public BASE {                                  \
    public:                                                     \
        explicit NAME(const std::string& what = #NAME)          \
            : BASE(std::string(#NAME) + ": " + what) {}         \
    }

WSIGMA_DEFINE_ERROR(EmptyGenerators, ValidationError);
WSIGMA_DEFINE_ERROR(NonCoprimeGenerators, ValidationError);
WSIGMA_DEFINE_ERROR(GenusZero, ValidationError);
WSIGMA_DEFINE_ERROR(IndexOutOfRange, ValidationError);
WSIGMA_DEFINE_ERROR(NotCoprime, ValidationError);
WSIGMA_DEFINE_ERROR(InconsistentDh, ValidationError);
WSIGMA_DEFINE_ERROR(TooFewVariables, ValidationError);
WSIGMA_DEFINE_ERROR(SubstitutionCollision, VerificationError);
WSIGMA_DEFINE_ERROR(IdentityFailure, VerificationError);
WSIGMA_DEFINE_ERROR(DegreeBoundViolated, ValidationError);
WSIGMA_DEFINE_ERROR(SingularAffineModel, ValidationError);
WSIGMA_DEFINE_ERROR(UnsupportedCurveClass, ValidationError);
WSIGMA_DEFINE_ERROR(RootFindingFailure, VerificationError);
WSIGMA_DEFINE_ERROR(RHViolation, VerificationError);
WSIGMA_DEFINE_ERROR(LogTermError, ValidationError);
WSIGMA_DEFINE_ERROR(OrderUnderflow, ValidationError);
WSIGMA_DEFINE_ERROR(NewtonStall, VerificationError);
WSIGMA_DEFINE_ERROR(GapMismatch, VerificationError);
WSIGMA_DEFINE_ERROR(RankDeficiency, VerificationError);
WSIGMA_DEFINE_ERROR(CoincidentFiber, ValidationError);
WSIGMA_DEFINE_ERROR(CoincidentPoints, ValidationError);
WSIGMA_DEFINE_ERROR(EvaluationAtRamification, ValidationError);
WSIGMA_DEFINE_ERROR(PathThroughSingularity, VerificationError);
WSIGMA_DEFINE_ERROR(QuadratureNonConvergence, VerificationError);
WSIGMA_DEFINE_ERROR(SymplecticViolation, VerificationError);
WSIGMA_DEFINE_ERROR(AmbiguousCharacteristic, VerificationError);
WSIGMA_DEFINE_ERROR(NotPositiveDefinite, ValidationError);
WSIGMA_DEFINE_ERROR(SuiteFailure, VerificationError);
WSIGMA_DEFINE_ERROR(ConfigError, ValidationError);

#undef WSIGMA_DEFINE_ERROR

}  // namespace wsigma

#endif  // WSIGMA_ERRORS_HPP
