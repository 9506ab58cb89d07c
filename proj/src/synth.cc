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

#include "argagree/synth.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <exception>
#include <iterator>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "argagree/error.h"

namespace argagree {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Mix(std::uint64_t seed, std::uint64_t salt) {
  return SplitMix64(seed ^ SplitMix64(salt));
}

// Bounded draws by rejection on the raw engine output, so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n >= 1.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t draw;
    do {
      draw = engine_();
    } while (draw >= limit);
    return draw % n;
  }

  bool Chance(const Rational& p) {
    return static_cast<std::int64_t>(Below(
               static_cast<std::uint64_t>(p.denominator()))) < p.numerator();
  }

 private:
  std::mt19937_64 engine_;
};

Error GenerationError(std::uint64_t seed, const std::string& what) {
  return Error(ErrorCategory::kGeneration, "synth.retry_exhausted",
               what + " (seed " + std::to_string(seed) + ")");
}

std::string Numbered(char prefix, std::size_t index) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%c%02zu", prefix, index);
  return buffer;
}

PreferenceRelation Closure(PreferenceRelation relation) {
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ValuePair> added;
    for (const auto& [u, w] : relation) {
      for (auto it = relation.lower_bound({w, ""});
           it != relation.end() && it->first == w; ++it) {
        if (!relation.contains({u, it->second}))
          added.emplace_back(u, it->second);
      }
    }
    for (auto& pair : added) grew |= relation.insert(std::move(pair)).second;
  }
  return relation;
}

bool StrictOrder(const PreferenceRelation& relation) {
  return std::none_of(
      relation.begin(), relation.end(), [&](const ValuePair& p) {
        return p.first == p.second || relation.contains({p.second, p.first});
      });
}

// Preference pairs that run against some attack: (val(target), val(source)).
std::set<ValuePair> BackedPairs(const std::vector<Attack>& attacks,
                                const std::map<std::string, std::string>& val) {
  std::set<ValuePair> out;
  for (const Attack& attack : attacks) {
    out.emplace(val.at(attack.to), val.at(attack.from));
  }
  return out;
}

// Adds `pair` and closes transitively. Every pair of the closure must be
// backed by an attack. With `old_values` set, rejects closures that relate
// two old values not already related.
bool TryAddPreference(PreferenceRelation& relation, const ValuePair& pair,
                      const std::set<ValuePair>& backed,
                      const std::set<std::string>* old_values = nullptr) {
  PreferenceRelation candidate = relation;
  candidate.insert(pair);
  candidate = Closure(std::move(candidate));
  if (!StrictOrder(candidate)) return false;
  for (const ValuePair& p : candidate) {
    if (!backed.contains(p)) return false;
    if (old_values != nullptr && old_values->contains(p.first) &&
        old_values->contains(p.second) && !relation.contains(p)) {
      return false;
    }
  }
  relation = std::move(candidate);
  return true;
}

}  // namespace

void GenConfig::Validate() const {
  auto probability = [](const Rational& p) { return p >= 0 && p <= 1; };
  if (!probability(attack_prob) || !probability(topic_prob)) {
    throw DomainError("synth.bad_config", "probabilities must lie in [0,1]");
  }
  if (agents == 0 || max_targets == 0 || retry_limit == 0) {
    throw DomainError("synth.bad_config",
                      "agents, max_targets and retry_limit must be positive");
  }
}

ValueScenario GenerateInitialScenario(const GenConfig& cfg, std::size_t n_args,
                                      SemanticsKind sem, TopicScope scope) {
  cfg.Validate();
  if (n_args == 0) {
    throw DomainError("synth.bad_size", "at least one argument is required");
  }
  Rng rng(cfg.seed);
  std::vector<std::string> names;
  std::set<std::string> values;
  std::map<std::string, std::string> valuation;
  for (std::size_t i = 0; i < n_args; ++i) {
    names.push_back(Numbered('a', i));
    values.insert(Numbered('v', i));
    valuation[names.back()] = Numbered('v', i);
  }

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < n_args && n_args > 1; ++x) {
    for (std::size_t t = 0; t < cfg.max_targets; ++t) {
      if (!rng.Chance(cfg.attack_prob)) continue;
      std::size_t y = rng.Below(n_args - 1);
      if (y >= x) ++y;
      edges.emplace(x, y);
    }
  }
  std::vector<Attack> attacks;
  for (const auto& [x, y] : edges) attacks.push_back({names[x], names[y]});

  const std::size_t candidates = scope == TopicScope::kFirstFive
                                     ? std::min<std::size_t>(5, n_args)
                                     : n_args;
  std::vector<std::string> topic;
  for (std::size_t attempt = 0; topic.empty(); ++attempt) {
    if (attempt == cfg.retry_limit) {
      throw GenerationError(cfg.seed, "could not draw a nonempty topic");
    }
    for (std::size_t i = 0; i < candidates; ++i) {
      if (rng.Chance(cfg.topic_prob)) topic.push_back(names[i]);
    }
  }

  const std::set<ValuePair> backed = BackedPairs(attacks, valuation);
  std::vector<PreferenceRelation> preferences(cfg.agents);
  for (PreferenceRelation& relation : preferences) {
    for (std::size_t k = 0; k < cfg.prefs_per_agent && !attacks.empty(); ++k) {
      bool accepted = false;
      for (std::size_t r = 0; r < cfg.retry_limit && !accepted; ++r) {
        const Attack& attack = attacks[rng.Below(attacks.size())];
        accepted = TryAddPreference(
            relation, {valuation[attack.to], valuation[attack.from]}, backed);
      }
      if (!accepted) {
        throw GenerationError(cfg.seed, "could not place a value preference");
      }
    }
  }

  ValueFramework vaf(ArgFramework(names, std::move(attacks)), std::move(values),
                     std::move(valuation), std::move(preferences));
  return ValueScenario{std::move(vaf), ArgSet(std::move(topic)), sem};
}

ValueScenario GenerateExpansion(const GenConfig& cfg, const ValueScenario& base,
                                std::size_t n_new, bool expand_topic) {
  cfg.Validate();
  if (n_new == 0) {
    throw DomainError("synth.bad_size",
                      "at least one new argument is required");
  }
  Rng rng(cfg.seed);
  const ValueFramework& old = base.vaf;
  std::vector<std::string> names = old.af().arguments();
  std::set<std::string> values = old.values();
  std::map<std::string, std::string> valuation = old.valuation();

  std::vector<std::string> fresh;
  for (std::size_t index = names.size(); fresh.size() < n_new; ++index) {
    const std::string name = Numbered('a', index);
    const std::string value = Numbered('v', index);
    if (old.af().contains(name) || values.contains(value)) continue;
    fresh.push_back(name);
    names.push_back(name);
    values.insert(value);
    valuation[name] = value;
  }

  std::vector<Attack> attacks = old.af().attacks();
  std::vector<std::vector<Attack>> outgoing(n_new);
  const std::size_t total = names.size();
  for (std::size_t k = 0; k < n_new; ++k) {
    const std::size_t x = total - n_new + k;
    std::set<std::size_t> targets;
    for (std::size_t t = 0; t < cfg.max_targets && total > 1; ++t) {
      if (!rng.Chance(cfg.attack_prob)) continue;
      std::size_t y = rng.Below(total - 1);
      if (y >= x) ++y;
      targets.insert(y);
    }
    for (std::size_t y : targets) {
      outgoing[k].push_back({names[x], names[y]});
      attacks.push_back(outgoing[k].back());
    }
  }

  const std::set<ValuePair> backed = BackedPairs(attacks, valuation);
  std::vector<PreferenceRelation> preferences = old.preferences();
  for (PreferenceRelation& relation : preferences) {
    for (std::size_t k = 0; k < n_new; ++k) {
      if (outgoing[k].empty()) continue;
      for (std::size_t r = 0; r < cfg.retry_limit; ++r) {
        const Attack& attack = outgoing[k][rng.Below(outgoing[k].size())];
        if (TryAddPreference(relation,
                             {valuation[attack.to], valuation[attack.from]},
                             backed, &old.values())) {
          break;
        }
      }
    }
  }

  std::vector<std::string> topic = base.topic.members();
  if (expand_topic) {
    for (const std::string& name : fresh) {
      if (rng.Chance(cfg.topic_prob)) topic.push_back(name);
    }
  }

  ValueFramework vaf(ArgFramework(std::move(names), std::move(attacks)),
                     std::move(values), std::move(valuation),
                     std::move(preferences));
  ValueScenario out{std::move(vaf), ArgSet(std::move(topic)), base.sem};
  if (const ExpansionFailure failure = DiagnoseValueNormalExpansion(base, out);
      failure != ExpansionFailure::kNone) {
    throw Error(ErrorCategory::kGeneration, "synth.not_normal_expansion",
                "generated pair is not a normal expansion (" +
                    std::string(ExpansionFailureName(failure)) + ", seed " +
                    std::to_string(cfg.seed) + ")");
  }
  return out;
}

std::string_view ExperimentName(ExperimentKind kind) {
  return kind == ExperimentKind::kDelta ? "delta" : "impact";
}

std::string_view TopicModeName(TopicMode mode) {
  switch (mode) {
    case TopicMode::kFixed:
      return "fixed";
    case TopicMode::kExpanding:
      return "expanding";
    case TopicMode::kProportional:
      return "proportional";
  }
  return "unknown";
}

std::uint64_t DeriveSeed(std::uint64_t master, ExperimentKind experiment,
                         std::uint64_t size, std::uint64_t rep) {
  const std::uint64_t tag = experiment == ExperimentKind::kDelta ? 1 : 2;
  std::uint64_t h = SplitMix64(master ^ SplitMix64(tag));
  h = SplitMix64(h ^ size);
  return SplitMix64(h ^ rep);
}

namespace {

// Raw and normalized change for each degree kind.
using Sample = std::array<std::pair<Rational, Rational>, 3>;

Sample CompareProfiles(const AgreementProfile& before,
                       const AgreementProfile& after) {
  Sample out;
  for (std::size_t k = 0; k < 3; ++k) {
    const DegreeKind kind = kAllDegreeKinds[k];
    const Degree d0 = DegreeOfAgreement(before, kind, SimilarityKind::kHamming,
                                        kExperimentLimits);
    const Degree d1 = DegreeOfAgreement(after, kind, SimilarityKind::kHamming,
                                        kExperimentLimits);
    const Rational raw = AbsDifference(d0, d1).value();
    const Rational span = std::max(d0.value(), 1 - d0.value());
    out[k] = {raw, raw / span};
  }
  return out;
}

// Runs `work(task)` for every task index and keeps results in task order.
template <typename Work>
std::vector<Sample> RunTasks(std::size_t count, unsigned threads, Work work) {
  std::vector<Sample> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < count; task = next++) {
      try {
        results[task] = work(task);
      } catch (...) {
        errors[task] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return results;
}

std::vector<ExperimentRecord> Summarize(const std::vector<Sample>& samples,
                                        ExperimentKind experiment,
                                        std::size_t first_size,
                                        std::size_t reps, std::uint64_t seed,
                                        TopicMode mode) {
  std::vector<ExperimentRecord> out;
  const std::size_t sizes = samples.size() / reps;
  for (std::size_t s = 0; s < sizes; ++s) {
    for (std::size_t k = 0; k < 3; ++k) {
      BigRational raw = 0;
      BigRational normalized = 0;
      for (std::size_t r = 0; r < reps; ++r) {
        const auto& [a, b] = samples[s * reps + r][k];
        raw += BigRational(a.numerator(), a.denominator());
        normalized += BigRational(b.numerator(), b.denominator());
      }
      const auto n = static_cast<long long>(reps);
      out.push_back({experiment, first_size + s, kAllDegreeKinds[k], raw / n,
                     normalized / n, reps, seed, mode});
    }
  }
  return out;
}

}  // namespace

std::vector<ExperimentRecord> RunDeltaExperiment(
    const GenConfig& cfg, SemanticsKind sem, std::size_t max_expansion,
    std::size_t reps, bool expand_topic, unsigned threads) {
  cfg.Validate();
  if (reps == 0 || max_expansion == 0) {
    throw DomainError("synth.bad_size",
                      "reps and max_expansion must be positive");
  }
  auto work = [&](std::size_t task) {
    const std::size_t size = 1 + task / reps;
    const std::size_t rep = task % reps;
    const std::uint64_t sub =
        DeriveSeed(cfg.seed, ExperimentKind::kDelta, size, rep);
    Rng meta(sub);
    const std::size_t initial_size = 1 + meta.Below(10);
    GenConfig initial_cfg = cfg;
    initial_cfg.seed = Mix(sub, 1);
    GenConfig expansion_cfg = cfg;
    expansion_cfg.seed = Mix(sub, 2);
    const ValueScenario base =
        GenerateInitialScenario(initial_cfg, initial_size, sem);
    const ValueScenario expanded =
        GenerateExpansion(expansion_cfg, base, size, expand_topic);
    return CompareProfiles(ToAgreementProfile(base, kExperimentLimits),
                           ToAgreementProfile(expanded, kExperimentLimits));
  };
  const auto samples = RunTasks(max_expansion * reps, threads, work);
  return Summarize(samples, ExperimentKind::kDelta, 1, reps, cfg.seed,
                   expand_topic ? TopicMode::kExpanding : TopicMode::kFixed);
}

std::vector<ExperimentRecord> RunImpactExperiment(
    const GenConfig& cfg, SemanticsKind sem, std::size_t min_size,
    std::size_t max_size, std::size_t reps, bool proportional_topic,
    unsigned threads) {
  cfg.Validate();
  if (reps == 0 || min_size == 0 || max_size < min_size) {
    throw DomainError("synth.bad_size",
                      "need reps >= 1 and 1 <= min_size <= max_size");
  }
  const TopicScope scope =
      proportional_topic ? TopicScope::kAllArguments : TopicScope::kFirstFive;
  auto work = [&](std::size_t task) {
    const std::size_t size = min_size + task / reps;
    const std::size_t rep = task % reps;
    const std::uint64_t sub =
        DeriveSeed(cfg.seed, ExperimentKind::kImpact, size, rep);
    for (std::size_t attempt = 0; attempt < cfg.retry_limit; ++attempt) {
      GenConfig attempt_cfg = cfg;
      attempt_cfg.seed = Mix(sub, 2 * attempt + 1);
      const ValueScenario scenario =
          GenerateInitialScenario(attempt_cfg, size, sem, scope);
      std::set<std::string> relevant;
      for (const Attack& attack : scenario.vaf.af().attacks()) {
        relevant.insert(scenario.vaf.ValueOf(attack.to));
      }
      if (relevant.empty()) continue;
      Rng pick(Mix(sub, 2 * attempt + 2));
      auto it = relevant.begin();
      std::advance(it,
                   static_cast<std::ptrdiff_t>(pick.Below(relevant.size())));
      const ValueScenario stripped{StripValue(scenario.vaf, *it),
                                   scenario.topic, scenario.sem};
      return CompareProfiles(ToAgreementProfile(scenario, kExperimentLimits),
                             ToAgreementProfile(stripped, kExperimentLimits));
    }
    throw GenerationError(sub, "no scenario with an attacked argument");
  };
  const auto samples =
      RunTasks((max_size - min_size + 1) * reps, threads, work);
  return Summarize(
      samples, ExperimentKind::kImpact, min_size, reps, cfg.seed,
      proportional_topic ? TopicMode::kProportional : TopicMode::kFixed);
}

std::string FormatMean(const BigRational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", value.convert_to<double>());
  return buffer;
}

void WriteCsv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& record : records) {
    for (bool normalized : {false, true}) {
      out << ExperimentName(record.experiment) << ',' << record.size_param
          << ',' << DegreeKindName(record.kind) << ','
          << TopicModeName(record.topic_mode) << ','
          << (normalized ? "true" : "false") << ',' << record.reps << ','
          << record.seed << ','
          << FormatMean(normalized ? record.normalized_mean : record.raw_mean)
          << '\n';
    }
  }
}

}  // namespace argagree
