// Copyright 2026 The aquavqe Authors
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

#include "aquavqe/error.hpp"

namespace aqv {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kParse: return "parse";
    case ErrorKind::kIndex: return "index";
    case ErrorKind::kConsistency: return "consistency";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kIo: return "io";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kSector: return "sector";
    case ErrorKind::kFit: return "fit";
    case ErrorKind::kCalibration: return "calibration";
    case ErrorKind::kOptimizer: return "optimizer";
  }
  return "unknown";
}

}  // namespace aqv
