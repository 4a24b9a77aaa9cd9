// Copyright 2026 The ctiqa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace ctiqa {

// Base class for every error raised by the library. Each subclass names one
// failure mode so callers (and the CLI exit-code table) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CTIQA_DEFINE_ERROR(Name)          \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  };

CTIQA_DEFINE_ERROR(InvalidArgument)
CTIQA_DEFINE_ERROR(ShapeMismatch)
CTIQA_DEFINE_ERROR(NonFinite)
CTIQA_DEFINE_ERROR(UnknownPrimitive)
CTIQA_DEFINE_ERROR(NonScalarOutput)
CTIQA_DEFINE_ERROR(DegenerateGeometry)
CTIQA_DEFINE_ERROR(NonPositivePhotons)
CTIQA_DEFINE_ERROR(InsufficientDetectorCoverage)
CTIQA_DEFINE_ERROR(MissingReference)
CTIQA_DEFINE_ERROR(InvalidRange)
CTIQA_DEFINE_ERROR(StepOutOfRange)
CTIQA_DEFINE_ERROR(EmptyDataset)
CTIQA_DEFINE_ERROR(DivergedLoss)
CTIQA_DEFINE_ERROR(RangeError)
CTIQA_DEFINE_ERROR(BadCropFraction)
CTIQA_DEFINE_ERROR(WindowMismatch)
CTIQA_DEFINE_ERROR(AllZeroWeights)
CTIQA_DEFINE_ERROR(ConstantVector)
CTIQA_DEFINE_ERROR(IoError)
CTIQA_DEFINE_ERROR(ConfigError)
CTIQA_DEFINE_ERROR(MissingArtifact)
CTIQA_DEFINE_ERROR(ProvenanceMismatch)

#undef CTIQA_DEFINE_ERROR

}  // namespace ctiqa
