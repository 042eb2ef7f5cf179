// Copyright 2026 The Distract Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distract/cli.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "distract/annotation.h"
#include "distract/datasets_io.h"
#include "distract/lifespan.h"
#include "distract/metrics.h"
#include "distract/morphology.h"
#include "distract/passivizer.h"
#include "distract/person_reversal.h"
#include "distract/pipeline.h"

namespace distract {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  int workers = 1;
  bool reversals = false;
  std::string claims;
  std::string retrieved;
  int reference_year = 2018;
  int min_birth_year = 800;
  int max_birth_year = 2000;
  std::string gold;
  std::string pred;
  std::string irregular_verbs;
  std::string reciprocal_verbs;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// What one input line produced: examples to write plus one event per
// attempted transform.
struct LineOutcome {
  std::vector<GeneratedExample> examples;
  std::vector<std::pair<Transform, std::optional<SkipReason>>> events;
  std::optional<std::string> error;
};

using Generator = std::function<void(const AnnotatedPair&, LineOutcome&)>;

void Record(LineOutcome& outcome, Transform transform,
            Expected<GeneratedExample> result) {
  if (result) {
    outcome.examples.push_back(std::move(result).value());
    outcome.events.emplace_back(transform, std::nullopt);
  } else {
    outcome.events.emplace_back(transform, result.skip());
  }
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path, 0, "cannot open for reading");
  return in;
}

void WriteStats(const std::string& output, const RunStats& stats) {
  WriteFileAtomically(output + ".stats.json", stats.ToJson().dump(2) + "\n");
}

// Streams annotated pairs through `generate` and writes the examples in
// input order. Throws DataError naming the first bad line.
void RunGeneration(const Options& options, const Generator& generate,
                   const std::vector<Transform>& transforms) {
  std::ifstream in = OpenInput(options.input);
  const std::string temp = options.output + ".tmp";
  std::ofstream out(temp, std::ios::binary | std::ios::trunc);
  if (!out) throw IoFailure("cannot open " + temp + " for writing");

  RunStats stats;
  stats.split = InferSplit(options.input);
  for (Transform t : transforms) stats[t];
  std::optional<DataError> failure;

  auto work = [&](std::size_t, const std::string& line) {
    LineOutcome outcome;
    if (line.find_first_not_of(" \t\r") == std::string::npos) return outcome;
    try {
      generate(ParseAnnotatedPair(line), outcome);
    } catch (const AnnotationError& e) {
      outcome.error = e.what();
    } catch (const MorphologyError& e) {
      outcome.error = e.what();
    }
    return outcome;
  };
  auto sink = [&](std::size_t number, LineOutcome&& outcome) {
    if (outcome.error) {
      failure.emplace(options.input, number, *outcome.error);
      return false;
    }
    for (const GeneratedExample& example : outcome.examples) {
      out << ExampleToJsonLine(example) << '\n';
      ++stats.labels[std::string(LabelName(example.label))];
    }
    for (const auto& [transform, skip] : outcome.events) {
      if (skip) {
        stats[transform].RecordSkip(*skip);
      } else {
        stats[transform].RecordOutput();
      }
    }
    return true;
  };
  MapLinesOrdered<LineOutcome>(in, options.workers, work, sink);
  out.close();

  std::error_code ec;
  if (failure) {
    std::filesystem::remove(temp, ec);
    throw *failure;
  }
  if (!out) throw IoFailure("write to " + temp + " failed");
  std::filesystem::rename(temp, options.output, ec);
  if (ec) throw IoFailure("cannot rename " + temp + " to " + options.output);
  WriteStats(options.output, stats);
}

std::vector<NliLabel> ReadLabelFile(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::vector<NliLabel> labels;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    std::string label = line;
    if (line.front() == '{') {
      try {
        const auto record = nlohmann::json::parse(line);
        label = record.value("label", record.value("gold_label", ""));
      } catch (const nlohmann::json::exception& e) {
        throw DataError(path, number, e.what());
      }
    }
    std::optional<NliLabel> parsed = ParseLabel(label);
    if (!parsed) throw DataError(path, number, "unknown label '" + label + "'");
    labels.push_back(*parsed);
  }
  return labels;
}

void Emit(const ordered_json& report, const Options& options,
          std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  out << text;
  if (!options.output.empty()) WriteFileAtomically(options.output, text);
}

void RunEvaluate(const Options& options, std::ostream& out) {
  const std::vector<NliLabel> gold = ReadLabelFile(options.gold);
  const std::vector<NliLabel> pred = ReadLabelFile(options.pred);
  if (gold.size() != pred.size()) {
    throw DataError(options.pred, 0,
                    "has " + std::to_string(pred.size()) + " labels, gold has " +
                        std::to_string(gold.size()));
  }
  if (gold.empty()) throw DataError(options.gold, 0, "no labels");
  const ConfusionCounts confusion = ConfusionCounts::FromLabels(gold, pred);
  ordered_json per_class = ordered_json::object();
  for (NliLabel label : kAllLabels) {
    per_class[std::string(LabelName(label))] = {
        {"gold", confusion.gold_total(label)},
        {"predicted", confusion.predicted_total(label)},
        {"correct", confusion.at(label, label)}};
  }
  ordered_json report;
  report["accuracy"] = Accuracy(confusion);
  report["kappa"] = CohenKappa(confusion);
  report["per_class_counts"] = std::move(per_class);
  Emit(report, options, out);
}

void RunClassWeights(const Options& options, std::ostream& out) {
  const std::vector<NliLabel> labels = ReadLabelFile(options.input);
  std::map<NliLabel, double> counts;
  for (NliLabel label : labels) counts[label] += 1.0;
  ClassWeights weights;
  try {
    weights = ComputeClassWeights(counts);
  } catch (const MetricsError& e) {
    throw DataError(options.input, 0, e.what());
  }
  ordered_json count_json = ordered_json::object();
  ordered_json weight_json = ordered_json::object();
  for (NliLabel label : kAllLabels) {
    const std::string name(LabelName(label));
    count_json[name] = static_cast<std::uint64_t>(counts[label]);
    weight_json[name] = weights[label];
  }
  ordered_json report;
  report["counts"] = std::move(count_json);
  report["weights"] = std::move(weight_json);
  Emit(report, options, out);
}

void RunLabelFever(const Options& options) {
  std::ifstream claims = OpenInput(options.claims);
  std::ifstream retrieved = OpenInput(options.retrieved);
  std::vector<FeverPair> pairs;
  try {
    pairs = ReadFever(claims, retrieved);
  } catch (const DataError& e) {
    const std::string& file =
        e.source() == "claims" ? options.claims : options.retrieved;
    throw DataError(file, e.line(), e.detail());
  }
  std::vector<GeneratedExample> examples;
  examples.reserve(pairs.size());
  RunStats stats;
  stats.split = InferSplit(options.retrieved);
  for (const FeverPair& pair : pairs) {
    examples.push_back(pair.ToExample());
    stats[Transform::kOriginal].RecordOutput();
    ++stats.labels[std::string(LabelName(pair.label))];
  }
  WriteExamples(examples, options.output);
  WriteStats(options.output, stats);
}

Lexicons LoadLexicons(const Options& options, IrregularVerbs& irregulars,
                      WordList& reciprocal) {
  Lexicons lexicons;
  try {
    if (!options.irregular_verbs.empty()) {
      irregulars = IrregularVerbs::Load(options.irregular_verbs);
      lexicons.irregulars = &irregulars;
    }
    if (!options.reciprocal_verbs.empty()) {
      reciprocal = WordList::Load(options.reciprocal_verbs);
      lexicons.reciprocal_verbs = &reciprocal;
    }
  } catch (const LexiconError& e) {
    throw DataError("lexicon", 0, e.what());
  }
  return lexicons;
}

void AddGenerationFlags(CLI::App* command, Options& options) {
  command->add_option("--input", options.input, "Annotated pairs (JSON Lines)")
      ->required();
  command->add_option("--output", options.output, "Generated examples")
      ->required();
  command->add_option("--seed", options.seed, "Random seed");
  command->add_option("--workers", options.workers, "Worker threads")
      ->check(CLI::Range(1, 256));
}

void AddLexiconFlags(CLI::App* command, Options& options) {
  command->add_option("--irregular-verbs", options.irregular_verbs,
                      "Override the irregular participle table");
  command->add_option("--reciprocal-verbs", options.reciprocal_verbs,
                      "Override the reciprocal verb list");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options options;
  CLI::App app{"Adversarial distraction generator for NLI corpora", "distract"};
  app.require_subcommand(1);

  CLI::App* passivize =
      app.add_subcommand("passivize", "Passive and passive-reversal hypotheses");
  AddGenerationFlags(passivize, options);
  AddLexiconFlags(passivize, options);
  passivize->add_flag("--reversals", options.reversals,
                      "Also emit passive reversals of entailments");

  CLI::App* person =
      app.add_subcommand("person-reverse", "Person-name reversal contradictions");
  AddGenerationFlags(person, options);
  AddLexiconFlags(person, options);

  CLI::App* birthday =
      app.add_subcommand("birthday", "Inserted life-span distractions");
  AddGenerationFlags(birthday, options);
  birthday->add_option("--reference-year", options.reference_year,
                       "Death dates after this year are omitted");
  birthday->add_option("--min-birth-year", options.min_birth_year);
  birthday->add_option("--max-birth-year", options.max_birth_year);

  CLI::App* fever =
      app.add_subcommand("label-fever", "Label retrieved FEVER evidence");
  fever->add_option("--claims", options.claims, "FEVER claims (JSON Lines)")
      ->required();
  fever->add_option("--retrieved", options.retrieved,
                    "Retrieved evidence (JSON Lines)")
      ->required();
  fever->add_option("--output", options.output, "Labeled pairs")->required();
  fever->add_option("--seed", options.seed, "Accepted for uniformity");
  fever->add_option("--workers", options.workers, "Accepted for uniformity");

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Accuracy and Cohen's kappa");
  evaluate->add_option("--gold", options.gold, "Gold labels, one per line")
      ->required();
  evaluate->add_option("--pred", options.pred, "Predicted labels")->required();
  evaluate->add_option("--output", options.output, "Also write the report here");

  CLI::App* weights =
      app.add_subcommand("class-weights", "Inverse-proportion class weights");
  weights->add_option("--input", options.input, "Labels, one per line")
      ->required();
  weights->add_option("--output", options.output, "Also write the report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    IrregularVerbs irregulars;
    WordList reciprocal;
    if (passivize->parsed()) {
      const Lexicons lexicons = LoadLexicons(options, irregulars, reciprocal);
      std::vector<Transform> transforms = {Transform::kPassive};
      if (options.reversals) transforms.push_back(Transform::kPassiveReversal);
      const bool reversals = options.reversals;
      RunGeneration(
          options,
          [&lexicons, reversals](const AnnotatedPair& pair, LineOutcome& o) {
            Record(o, Transform::kPassive, ToPassive(pair, lexicons));
            if (reversals) {
              Record(o, Transform::kPassiveReversal,
                     ToPassiveReversal(pair, lexicons));
            }
          },
          transforms);
    } else if (person->parsed()) {
      const Lexicons lexicons = LoadLexicons(options, irregulars, reciprocal);
      RunGeneration(
          options,
          [&lexicons](const AnnotatedPair& pair, LineOutcome& o) {
            Record(o, Transform::kPersonReversal,
                   ReversePersons(pair, lexicons));
          },
          {Transform::kPersonReversal});
    } else if (birthday->parsed()) {
      BirthdayConfig config;
      config.seed = options.seed;
      config.reference_year = options.reference_year;
      config.birth_years = {options.min_birth_year, options.max_birth_year};
      try {
        config.Validate();
      } catch (const ConfigError& e) {
        throw UsageError(e.what());
      }
      RunGeneration(
          options,
          [&config](const AnnotatedPair& pair, LineOutcome& o) {
            Record(o, Transform::kBirthday, MakeBirthdayExample(pair, config));
          },
          {Transform::kBirthday});
    } else if (fever->parsed()) {
      RunLabelFever(options);
    } else if (evaluate->parsed()) {
      RunEvaluate(options, out);
    } else if (weights->parsed()) {
      RunClassWeights(options, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const IoFailure& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace distract
