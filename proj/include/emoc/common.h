// include/emoc/common.h

// Copyright 2026  EmoCorrector Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef EMOC_COMMON_H_
#define EMOC_COMMON_H_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace emoc {

static_assert(std::endian::native == std::endian::little,
              "on-disk formats are little-endian; big-endian hosts unsupported");

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using MatF = Eigen::MatrixXf;

// Error taxonomy. The CLI maps these onto exit codes:
//   ConfigError -> 2, DependencyError -> 3, everything else -> 4.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration value, dimension/config mismatch between artifacts.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A required upstream artifact is missing, stale, or fails its hash check.
class DependencyError : public Error {
 public:
  using Error::Error;
};

// Tensor/sequence shape violation at runtime.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Out-of-range argument (K, empty result sets, ...).
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Missing or corrupt file content; message names the offending field.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Class label outside the configured range.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Token id not covered by the vocabulary.
class TokenizationError : public Error {
 public:
  using Error::Error;
};

// Numerically degenerate input (zero-norm aggregate, all-zero features).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Training diverged or could not run.
class TrainingError : public Error {
 public:
  using Error::Error;
};

enum class Emotion : int {
  kNeutral = 0,
  kSadness = 1,
  kAngry = 2,
  kHappy = 3,
  kFear = 4,
};

inline constexpr int kNumEmotions = 5;

const char* emotion_name(Emotion e);
Emotion emotion_from_name(const std::string& name);
Emotion emotion_from_id(int id);

enum class SampleNote : int {
  kConsistent = 0,
  kMismatched = 1,
};

const char* sample_note_name(SampleNote n);
SampleNote sample_note_from_name(const std::string& name);

inline Mat to_double(const MatF& m) { return m.cast<double>(); }
inline MatF to_float(const Mat& m) { return m.cast<float>(); }

}  // namespace emoc

#endif  // EMOC_COMMON_H_
