// Copyright 2026 The argagree Authors
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

#ifndef ARGAGREE_SYNTH_H_
#define ARGAGREE_SYNTH_H_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/rational.h"
#include "argagree/semantics.h"
#include "argagree/vaf.h"

namespace argagree {

struct GenConfig {
  std::uint64_t seed = 42;
  std::size_t agents = 3;
  Rational attack_prob{1, 2};
  std::size_t max_targets = 3;
  std::size_t prefs_per_agent = 5;
  Rational topic_prob{1, 2};
  std::size_t retry_limit = 50;

  // Throws a domain error on probabilities outside [0,1] or zero counts.
  void Validate() const;
};

// Limits wide enough for the largest generated instances.
inline constexpr SearchLimits kExperimentLimits{32, 26, 1'000'000};

enum class TopicScope { kAllArguments, kFirstFive };

// Arguments a00, a01, ... carry values v00, v01, ... one to one. Throws a
// generation error carrying the seed when a retry budget runs out.
ValueScenario GenerateInitialScenario(
    const GenConfig& cfg, std::size_t n_args, SemanticsKind sem,
    TopicScope scope = TopicScope::kAllArguments);

// New arguments attack old or new arguments and are never attacked by old
// ones. The result is always a normal expansion of `base`.
ValueScenario GenerateExpansion(const GenConfig& cfg, const ValueScenario& base,
                                std::size_t n_new, bool expand_topic);

enum class ExperimentKind { kDelta, kImpact };
enum class TopicMode { kFixed, kExpanding, kProportional };

std::string_view ExperimentName(ExperimentKind kind);
std::string_view TopicModeName(TopicMode mode);

using BigRational = boost::multiprecision::cpp_rational;

struct ExperimentRecord {
  ExperimentKind experiment = ExperimentKind::kDelta;
  std::size_t size_param = 0;
  DegreeKind kind = DegreeKind::kMin;
  BigRational raw_mean;
  BigRational normalized_mean;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  TopicMode topic_mode = TopicMode::kFixed;
};

// Independent of iteration order: mixes master seed, experiment, size and
// repetition through splitmix64.
std::uint64_t DeriveSeed(std::uint64_t master, ExperimentKind experiment,
                         std::uint64_t size, std::uint64_t rep);

// `threads` = 0 uses the hardware concurrency. Output is ordered by size,
// then degree kind, and does not depend on the thread count.
std::vector<ExperimentRecord> RunDeltaExperiment(
    const GenConfig& cfg, SemanticsKind sem, std::size_t max_expansion,
    std::size_t reps, bool expand_topic, unsigned threads = 0);

std::vector<ExperimentRecord> RunImpactExperiment(
    const GenConfig& cfg, SemanticsKind sem, std::size_t min_size,
    std::size_t max_size, std::size_t reps, bool proportional_topic,
    unsigned threads = 0);

inline constexpr std::string_view kCsvHeader =
    "experiment,size_param,degree_kind,topic_mode,normalized,reps,seed,"
    "mean_delta";

// Two rows per record: raw, then normalized.
void WriteCsv(std::ostream& out, const std::vector<ExperimentRecord>& records);

// 12 significant digits.
std::string FormatMean(const BigRational& value);

}  // namespace argagree

#endif  // ARGAGREE_SYNTH_H_
