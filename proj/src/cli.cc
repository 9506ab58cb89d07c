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

#include "argagree/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "argagree/agreement.h"
#include "argagree/dynamics.h"
#include "argagree/error.h"
#include "argagree/scenario_format.h"
#include "argagree/semantics.h"
#include "argagree/synth.h"
#include "argagree/vaf.h"

namespace argagree::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kJson };

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCategory::kIo, "io.read", "cannot read '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Scenario Load(const std::string& path) {
  try {
    return BuildScenario(ParseScenario(ReadFile(path)));
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::kIo) throw;
    throw Error(e.category(), e.code(), path + ":" + e.what());
  }
}

const ArgFramework& FrameworkOf(const Scenario& scenario) {
  if (const auto* aas = std::get_if<AgreementScenario>(&scenario)) {
    return aas->af;
  }
  if (const auto* vaas = std::get_if<ValueScenario>(&scenario)) {
    return vaas->vaf.af();
  }
  return std::get<ArgFramework>(scenario);
}

Error NeedsAgents() {
  return ValidationError("scenario.no_agents",
                         "command needs agent(...) or semantics(...) facts");
}

// The extension-producing view each agent holds of the scenario.
struct AgentView {
  std::string label;
  ArgFramework af;
  SemanticsKind sem;
};

std::vector<AgentView> Views(const Scenario& scenario) {
  std::vector<AgentView> out;
  if (const auto* aas = std::get_if<AgreementScenario>(&scenario)) {
    for (SemanticsKind sem : aas->agents) {
      out.push_back({std::string(SemanticsName(sem)), aas->af, sem});
    }
  } else if (const auto* vaas = std::get_if<ValueScenario>(&scenario)) {
    for (std::size_t i = 0; i < vaas->vaf.agent_count(); ++i) {
      out.push_back({"P" + std::to_string(i), SubjectiveFramework(vaas->vaf, i),
                     vaas->sem});
    }
  } else {
    throw NeedsAgents();
  }
  return out;
}

const ArgSet& TopicOf(const Scenario& scenario) {
  if (const auto* aas = std::get_if<AgreementScenario>(&scenario)) {
    return aas->topic;
  }
  if (const auto* vaas = std::get_if<ValueScenario>(&scenario)) {
    return vaas->topic;
  }
  throw NeedsAgents();
}

AgreementProfile ProfileOf(const Scenario& scenario) {
  if (const auto* aas = std::get_if<AgreementScenario>(&scenario)) {
    return Realize(*aas);
  }
  if (const auto* vaas = std::get_if<ValueScenario>(&scenario)) {
    return ToAgreementProfile(*vaas);
  }
  throw NeedsAgents();
}

std::string Decimal(const Rational& value) { return ToDecimal(value, 6); }

std::string FractionText(const Rational& value) {
  return ToString(value) + " " + Decimal(value);
}

Json FractionJson(const Rational& value) {
  return Json{{"numerator", value.numerator()},
              {"denominator", value.denominator()},
              {"fraction", ToString(value)},
              {"decimal", Decimal(value)}};
}

Json SetJson(const ArgSet& set) { return Json(set.members()); }

Json ExtensionsJson(const ExtensionSet& extensions) {
  Json out = Json::array();
  for (const ArgSet& e : extensions) out.push_back(SetJson(e));
  return out;
}

std::string ExtensionsText(const ExtensionSet& extensions) {
  std::string out;
  for (const ArgSet& e : extensions)
    out += (out.empty() ? "" : " ") + ToString(e);
  return out;
}

void Emit(std::ostream& out, Format format, const Json& json,
          const std::string& text) {
  if (format == Format::kJson) {
    out << json.dump(2) << '\n';
  } else {
    out << text;
  }
}

SemanticsKind SemanticsOption(const std::string& token) {
  return *ParseSemantics(token);
}

std::vector<std::string> SemanticsTokens() {
  std::vector<std::string> out;
  for (SemanticsKind kind : kAllSemantics) {
    out.emplace_back(SemanticsName(kind));
  }
  return out;
}

struct Options {
  std::string format = "text";
  std::string af;
  std::string scenario;
  std::string before;
  std::string after;
  std::string semantics = "preferred";
  std::string similarity = "h";
  std::string kind;
  std::string agents;
  bool matrix = false;
  std::string value;
  bool normal = false;
  std::string principle;
  std::string experiment;
  std::uint64_t seed = 42;
  std::size_t reps = 30;
  std::string out;
  bool expanding_topic = false;
  bool proportional_topic = false;
  std::size_t max_expansion = 15;
  std::size_t min_size = 5;
  std::size_t max_size = 20;
  unsigned threads = 0;
};

SimilarityKind Similarity(const Options& o) {
  return *ParseSimilarity(o.similarity);
}

void Solve(const Options& o, Format format, std::ostream& out) {
  const SemanticsKind sem = SemanticsOption(o.semantics);
  const ExtensionSet extensions = Enumerate(FrameworkOf(Load(o.af)), sem);
  std::string text;
  for (const ArgSet& e : extensions) text += ToString(e) + "\n";
  Emit(out, format,
       Json{{"command", "solve"},
            {"semantics", o.semantics},
            {"extensions", ExtensionsJson(extensions)}},
       text);
}

void Degrees(const Options& o, Format format, std::ostream& out) {
  const AgreementProfile profile = ProfileOf(Load(o.scenario));
  std::vector<DegreeKind> kinds(std::begin(kAllDegreeKinds),
                                std::end(kAllDegreeKinds));
  if (!o.kind.empty()) kinds = {*ParseDegreeKind(o.kind)};
  Json rows = Json::array();
  std::string text;
  for (DegreeKind kind : kinds) {
    const AgreementResult result =
        DegreeWithWitness(profile, kind, Similarity(o));
    Json row{{"kind", DegreeKindName(kind)}};
    row.update(FractionJson(result.degree.value()));
    row["witness"] = SetJson(result.witness);
    rows.push_back(std::move(row));
    text += std::string(DegreeKindName(kind)) + " " +
            FractionText(result.degree.value()) + " " +
            ToString(result.witness) + "\n";
  }
  Emit(out, format,
       Json{{"command", "degrees"},
            {"similarity", o.similarity},
            {"degrees", std::move(rows)}},
       text);
}

std::pair<std::size_t, std::size_t> ParseAgentPair(const std::string& token) {
  const auto comma = token.find(',');
  auto parse = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.size() > 9 ||
        !std::all_of(part.begin(), part.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw UsageError("--agents expects two indices 'I,J'");
    }
    return std::stoul(part);
  };
  if (comma == std::string::npos) {
    throw UsageError("--agents expects two indices 'I,J'");
  }
  return {parse(token.substr(0, comma)), parse(token.substr(comma + 1))};
}

std::string PadLeft(const std::string& cell, std::size_t width) {
  return std::string(width - std::min(width, cell.size()), ' ') + cell;
}

void Sat(const Options& o, Format format, std::ostream& out) {
  if (o.matrix == !o.agents.empty()) {
    throw UsageError("sat needs exactly one of --agents or --matrix");
  }
  const Scenario scenario = Load(o.scenario);
  const AgreementProfile profile = ProfileOf(scenario);
  const std::vector<AgentView> views = Views(scenario);
  const std::size_t n = profile.agents.size();
  auto sat = [&](std::size_t i, std::size_t j) {
    return TwoAgentSatisfaction(profile.agents[i], profile.agents[j],
                                profile.topic, Similarity(o))
        .value();
  };

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (o.matrix) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(i, j);
    }
  } else {
    const auto [i, j] = ParseAgentPair(o.agents);
    if (i >= n || j >= n) {
      throw DomainError(
          "scenario.agent_out_of_range",
          "agent index out of range (agents: " + std::to_string(n) + ")");
    }
    pairs.emplace_back(i, j);
  }

  Json labels = Json::array();
  for (const AgentView& view : views) labels.push_back(view.label);
  Json entries = Json::array();
  std::vector<std::string> cells;
  for (const auto& [i, j] : pairs) {
    const Rational value = sat(i, j);
    Json entry{{"first", i}, {"second", j}};
    entry.update(FractionJson(value));
    entries.push_back(std::move(entry));
    cells.push_back(ToString(value));
  }

  std::string text;
  if (!o.matrix) {
    text = FractionText(sat(pairs[0].first, pairs[0].second)) + "\n";
  } else {
    std::size_t width = 1;
    for (const AgentView& view : views)
      width = std::max(width, view.label.size());
    for (const std::string& cell : cells) width = std::max(width, cell.size());
    text += std::string(width, ' ');
    for (const AgentView& view : views)
      text += " " + PadLeft(view.label, width);
    text += "\n";
    for (std::size_t i = 0; i < n; ++i) {
      text += PadLeft(views[i].label, width);
      for (std::size_t j = 0; j < n; ++j) {
        text += " " + PadLeft(cells[i * n + j], width);
      }
      text += "\n";
    }
  }
  Emit(out, format,
       Json{{"command", "sat"},
            {"similarity", o.similarity},
            {"agents", std::move(labels)},
            {"entries", std::move(entries)}},
       text);
}

void Impact(const Options& o, Format format, std::ostream& out) {
  const Scenario scenario = Load(o.scenario);
  const auto* vaas = std::get_if<ValueScenario>(&scenario);
  if (vaas == nullptr) {
    throw ValidationError("scenario.not_value_based",
                          "impact needs a semantics(...) scenario with values");
  }
  Json rows = Json::array();
  std::string text;
  for (DegreeKind kind : kAllDegreeKinds) {
    const Rational impact = ValueImpact(*vaas, o.value, kind, Similarity(o));
    Json row{{"kind", DegreeKindName(kind)}};
    row.update(FractionJson(impact));
    rows.push_back(std::move(row));
    text +=
        std::string(DegreeKindName(kind)) + " " + FractionText(impact) + "\n";
  }
  Emit(out, format,
       Json{{"command", "impact"},
            {"value", o.value},
            {"similarity", o.similarity},
            {"impacts", std::move(rows)}},
       text);
}

void CheckExpansion(const Options& o, Format format, std::ostream& out) {
  const Scenario before = Load(o.before);
  const Scenario after = Load(o.after);
  if (before.index() != after.index()) {
    throw ValidationError("scenario.kind_mismatch",
                          "both files must be of the same scenario kind");
  }
  ExpansionFailure failure = ExpansionFailure::kNone;
  if (const auto* aas = std::get_if<AgreementScenario>(&before)) {
    const auto& next = std::get<AgreementScenario>(after);
    failure = o.normal ? DiagnoseNormalExpansion(*aas, next)
                       : DiagnoseExpansion(aas->af, next.af, false);
  } else if (const auto* vaas = std::get_if<ValueScenario>(&before)) {
    const auto& next = std::get<ValueScenario>(after);
    failure = o.normal ? DiagnoseValueNormalExpansion(*vaas, next)
                       : DiagnoseValueExpansion(vaas->vaf, next.vaf, false);
  } else {
    failure = DiagnoseExpansion(std::get<ArgFramework>(before),
                                std::get<ArgFramework>(after), o.normal);
  }
  const bool holds = failure == ExpansionFailure::kNone;
  Emit(out, format,
       Json{{"command", "check-expansion"},
            {"normal", o.normal},
            {"holds", holds},
            {"reason", ExpansionFailureName(failure)}},
       holds ? "true\n"
             : "false " + std::string(ExpansionFailureName(failure)) + "\n");
}

std::pair<std::vector<AgentView>, std::vector<AgentView>> ViewPairs(
    const Scenario& before, const Scenario& after) {
  std::vector<AgentView> first = Views(before);
  std::vector<AgentView> second = Views(after);
  if (first.size() != second.size()) {
    throw DomainError("scenario.agent_count_mismatch",
                      "files define different numbers of agents");
  }
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].sem != second[i].sem) {
      throw DomainError("scenario.semantics_mismatch",
                        "agent " + std::to_string(i) +
                            " uses different semantics in the two files");
    }
  }
  return {std::move(first), std::move(second)};
}

void CheckPrincipleCommand(const Options& o, Format format, std::ostream& out) {
  const PrincipleKind principle = *ParsePrinciple(o.principle);
  const auto [first, second] = ViewPairs(Load(o.before), Load(o.after));
  Json agents = Json::array();
  std::string text;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const PrincipleVerdict verdict =
        CheckPrinciple(first[i].af, second[i].af, first[i].sem, principle);
    text += "agent " + std::to_string(i) + " (" +
            std::string(SemanticsName(first[i].sem)) +
            ") holds=" + (verdict.holds ? "true" : "false") + "\n";
    Json witnesses = Json::array();
    for (const ExtensionWitness& w : verdict.witnesses) {
      text += "  " + ToString(w.extension) +
              " condition=" + (w.condition ? "true" : "false") +
              " superset=" + (w.superset ? ToString(*w.superset) : "-");
      if (w.new_attack) {
        text +=
            " new-attack=(" + w.new_attack->from + "," + w.new_attack->to + ")";
      }
      if (w.strong_attacker) text += " strong-attacker=" + *w.strong_attacker;
      text += "\n";
      witnesses.push_back(
          Json{{"extension", SetJson(w.extension)},
               {"condition", w.condition},
               {"superset", w.superset ? SetJson(*w.superset) : Json(nullptr)},
               {"new_attack", w.new_attack
                                  ? Json{w.new_attack->from, w.new_attack->to}
                                  : Json(nullptr)},
               {"strong_attacker",
                w.strong_attacker ? Json(*w.strong_attacker) : Json(nullptr)}});
    }
    agents.push_back(Json{{"index", i},
                          {"semantics", SemanticsName(first[i].sem)},
                          {"holds", verdict.holds},
                          {"witnesses", std::move(witnesses)}});
  }
  Emit(out, format,
       Json{{"command", "check-principle"},
            {"principle", o.principle},
            {"agents", std::move(agents)}},
       text);
}

void Enforce(const Options& o, Format format, std::ostream& out) {
  const PrincipleKind principle = *ParsePrinciple(o.principle);
  const Scenario before = Load(o.before);
  const Scenario after = Load(o.after);
  const auto [first, second] = ViewPairs(before, after);
  const AgreementProfile initial = ProfileOf(before);
  const AgreementProfile expanded = ProfileOf(after);
  AgreementProfile enforced{TopicOf(after), {}};

  Json agents = Json::array();
  std::string text;
  for (std::size_t i = 0; i < first.size(); ++i) {
    ExtensionSet extensions = EnforcePrinciple(
        first[i].af, second[i].af, enforced.topic, first[i].sem, principle);
    text += "agent " + std::to_string(i) + " (" +
            std::string(SemanticsName(first[i].sem)) + ") " +
            ExtensionsText(extensions) + "\n";
    agents.push_back(Json{{"index", i},
                          {"semantics", SemanticsName(first[i].sem)},
                          {"extensions", ExtensionsJson(extensions)}});
    enforced.agents.push_back(std::move(extensions));
  }
  Json deltas = Json::array();
  for (DegreeKind kind : kAllDegreeKinds) {
    const Degree d0 =
        DegreeOfAgreement(initial, kind, SimilarityKind::kHamming);
    const Rational plain =
        AbsDifference(
            d0, DegreeOfAgreement(expanded, kind, SimilarityKind::kHamming))
            .value();
    const Rational repaired =
        AbsDifference(
            d0, DegreeOfAgreement(enforced, kind, SimilarityKind::kHamming))
            .value();
    text += "delta " + std::string(DegreeKindName(kind)) +
            " before=" + ToString(plain) + " after=" + ToString(repaired) +
            "\n";
    deltas.push_back(Json{{"kind", DegreeKindName(kind)},
                          {"before", FractionJson(plain)},
                          {"after", FractionJson(repaired)}});
  }
  Emit(out, format,
       Json{{"command", "enforce"},
            {"principle", o.principle},
            {"agents", std::move(agents)},
            {"deltas", std::move(deltas)}},
       text);
}

void Experiment(const Options& o, Format format, std::ostream& out) {
  const bool delta = o.experiment == "delta";
  if (delta && o.proportional_topic) {
    throw UsageError("--proportional-topic applies to the impact experiment");
  }
  if (!delta && o.expanding_topic) {
    throw UsageError("--expanding-topic applies to the delta experiment");
  }
  GenConfig cfg;
  cfg.seed = o.seed;
  const SemanticsKind sem = SemanticsOption(o.semantics);
  const std::vector<ExperimentRecord> records =
      delta ? RunDeltaExperiment(cfg, sem, o.max_expansion, o.reps,
                                 o.expanding_topic, o.threads)
            : RunImpactExperiment(cfg, sem, o.min_size, o.max_size, o.reps,
                                  o.proportional_topic, o.threads);
  std::ofstream file(o.out, std::ios::binary);
  if (!file) {
    throw Error(ErrorCategory::kIo, "io.write", "cannot write '" + o.out + "'");
  }
  WriteCsv(file, records);
  file.close();
  if (!file) {
    throw Error(ErrorCategory::kIo, "io.write", "cannot write '" + o.out + "'");
  }
  const std::size_t rows = 2 * records.size();
  Emit(out, format,
       Json{{"command", "experiment"},
            {"experiment", o.experiment},
            {"rows", rows},
            {"out", o.out}},
       "wrote " + std::to_string(rows) + " rows to " + o.out + "\n");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Argumentation-based agreement toolkit", "argagree"};
  app.require_subcommand(1);
  Options o;
  const auto semantics = CLI::IsMember(SemanticsTokens());
  const auto similarity = CLI::IsMember({"h", "i", "c"});
  const auto principle = CLI::IsMember({"cm", "srm"});

  auto command = [&](const std::string& name, const std::string& about) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    return sub;
  };

  CLI::App* solve = command("solve", "Enumerate extensions");
  solve->add_option("--af", o.af, "Framework file")->required();
  solve->add_option("--semantics", o.semantics, "Semantics")
      ->required()
      ->check(semantics);

  CLI::App* degrees = command("degrees", "Degrees of agreement");
  degrees->add_option("--scenario", o.scenario, "Scenario file")->required();
  degrees->add_option("--similarity", o.similarity, "h, i or c")
      ->check(similarity);
  degrees->add_option("--kind", o.kind, "min, mean or med (default: all)")
      ->check(CLI::IsMember({"min", "mean", "med"}));

  CLI::App* sat = command("sat", "Two-agent satisfaction");
  sat->add_option("--scenario", o.scenario, "Scenario file")->required();
  sat->add_option("--agents", o.agents, "Agent indices I,J");
  sat->add_flag("--matrix", o.matrix, "Print every pair");
  sat->add_option("--similarity", o.similarity, "h, i or c")->check(similarity);

  CLI::App* impact = command("impact", "Impact of a value on the degrees");
  impact->add_option("--scenario", o.scenario, "Value-based scenario file")
      ->required();
  impact->add_option("--value", o.value, "Value to strip")->required();
  impact->add_option("--similarity", o.similarity, "h, i or c")
      ->check(similarity);

  CLI::App* expansion = command("check-expansion", "Check an expansion");
  expansion->add_option("--before", o.before, "Initial file")->required();
  expansion->add_option("--after", o.after, "Expanded file")->required();
  expansion->add_flag("--normal", o.normal, "Require a normal expansion");

  CLI::App* check = command("check-principle", "Check a monotony principle");
  check->add_option("--before", o.before, "Initial file")->required();
  check->add_option("--after", o.after, "Expanded file")->required();
  check->add_option("--principle", o.principle, "cm or srm")
      ->required()
      ->check(principle);

  CLI::App* enforce = command("enforce", "Enforce a monotony principle");
  enforce->add_option("--before", o.before, "Initial file")->required();
  enforce->add_option("--after", o.after, "Expanded file")->required();
  enforce->add_option("--principle", o.principle, "cm or srm")
      ->required()
      ->check(principle);

  CLI::App* experiment = command("experiment", "Run a synthetic experiment");
  experiment->add_option("kind", o.experiment, "delta or impact")
      ->required()
      ->check(CLI::IsMember({"delta", "impact"}));
  experiment->add_option("--seed", o.seed, "Master seed");
  experiment->add_option("--reps", o.reps, "Repetitions per size")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--out", o.out, "CSV output path")->required();
  auto* expanding =
      experiment->add_flag("--expanding-topic", o.expanding_topic,
                           "Add new arguments to the topic (delta)");
  auto* proportional =
      experiment->add_flag("--proportional-topic", o.proportional_topic,
                           "Draw the topic from all arguments (impact)");
  expanding->excludes(proportional);
  experiment->add_option("--semantics", o.semantics, "Semantics")
      ->check(semantics);
  experiment
      ->add_option("--max-expansion", o.max_expansion,
                   "Largest expansion size (delta)")
      ->check(CLI::PositiveNumber);
  experiment
      ->add_option("--min-size", o.min_size, "Smallest framework (impact)")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--max-size", o.max_size, "Largest framework (impact)")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--threads", o.threads, "Worker threads (0: auto)");

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error[usage]: " << e.what() << "\n";
    return kExitUsage;
  }

  const Format format = o.format == "json" ? Format::kJson : Format::kText;
  try {
    if (solve->parsed()) Solve(o, format, out);
    if (degrees->parsed()) Degrees(o, format, out);
    if (sat->parsed()) Sat(o, format, out);
    if (impact->parsed()) Impact(o, format, out);
    if (expansion->parsed()) CheckExpansion(o, format, out);
    if (check->parsed()) CheckPrincipleCommand(o, format, out);
    if (enforce->parsed()) Enforce(o, format, out);
    if (experiment->parsed()) Experiment(o, format, out);
  } catch (const UsageError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error[" << e.code() << "]: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace argagree::cli
