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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "distract/annotation.h"
#include "distract/cli.h"
#include "distract/datasets_io.h"
#include "distract/lexicon.h"
#include "distract/lifespan.h"
#include "distract/metrics.h"
#include "distract/morphology.h"
#include "distract/passivizer.h"
#include "distract/person_reversal.h"
#include "distract/text.h"
#include "support/test_support.h"

namespace distract {
namespace {

namespace fs = std::filesystem;

constexpr double kKappaTolerance = 1e-12;
constexpr double kWorkedKappa = 0.6364;
constexpr double kWorkedKappaTolerance = 5e-5;
constexpr double kWeightTolerance = 1e-3;
constexpr double kBalanceTolerance = 0.03;
constexpr int kBirthdayExamples = 9999;
constexpr std::uint64_t kDaenerysSeed = 22920551;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Expect(bool condition, const std::string& what) {
    if (condition) return;
    if (pass) detail = what;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

AnnotatedPair Snli(const std::string& id) {
  return testing::FixturePair("snli_annotated.jsonl", id);
}
AnnotatedPair Fever(const std::string& id) {
  return testing::FixturePair("fever_annotated.jsonl", id);
}

Outcome Goldens() {
  Outcome o;
  auto start = Clock::now();
  AnnotatedPair umbrella = Snli("umbrella");
  Expected<GeneratedExample> passive = ToPassive(umbrella);
  o.Expect(passive.ok() &&
               passive->hypothesis ==
                   "A large umbrella is being used by a woman" &&
               passive->label == NliLabel::kEntailment,
           "umbrella passive");
  Expected<GeneratedExample> reversal = ToPassiveReversal(umbrella);
  o.Expect(reversal.ok() &&
               reversal->hypothesis ==
                   "A woman is being used by a large umbrella" &&
               reversal->label == NliLabel::kContradiction,
           "umbrella reversal");
  Expected<GeneratedExample> lois = ReversePersons(Fever("fever-lois"));
  o.Expect(lois.ok() &&
               lois->hypothesis ==
                   "Lola Lane's name was taken from Lois Lane's name" &&
               lois->label == NliLabel::kContradiction,
           "Lois/Lola swap");
  BirthdayConfig config;
  config.seed = kDaenerysSeed;
  config.birth_years = {860, 860};
  config.lifespan_years = {60, 60};
  Expected<GeneratedExample> birthday =
      MakeBirthdayExample(Fever("fever-daenerys"), config);
  o.Expect(birthday.ok() &&
               birthday->premise.find(
                   "Emilia Clarke (April 25, 860 -- November 9, 920),") !=
                   std::string::npos &&
               birthday->hypothesis == "Emilia Clarke died in April" &&
               birthday->label == NliLabel::kContradiction,
           "Daenerys birthday");
  double elapsed = Seconds(start);
  o.Expect(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome KappaOracle() {
  Outcome o;
  auto start = Clock::now();
  Rng rng(565);
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng.UniformBelow(50);
    std::vector<NliLabel> gold(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      gold[i] = kAllLabels[rng.UniformBelow(3)];
      pred[i] = kAllLabels[rng.UniformBelow(3)];
    }
    double agree = 0, chance = 0;
    for (std::size_t i = 0; i < n; ++i) agree += gold[i] == pred[i];
    for (NliLabel g : gold) {
      for (NliLabel p : pred) chance += g == p;
    }
    double p_o = agree / n;
    double p_e = chance / (static_cast<double>(n) * n);
    double oracle = p_e == 1.0 ? 0.0 : (p_o - p_e) / (1.0 - p_e);
    double kappa = CohenKappa(ConfusionCounts::FromLabels(gold, pred));
    worst = std::max(worst, std::abs(kappa - oracle));
  }
  o.Expect(worst <= kKappaTolerance,
           "max deviation " + std::to_string(worst));
  std::vector<NliLabel> gold = {NliLabel::kEntailment, NliLabel::kEntailment,
                                NliLabel::kContradiction, NliLabel::kNeutral};
  std::vector<NliLabel> pred = {NliLabel::kEntailment,
                                NliLabel::kContradiction,
                                NliLabel::kContradiction, NliLabel::kNeutral};
  double worked = CohenKappa(ConfusionCounts::FromLabels(gold, pred));
  o.Expect(std::abs(worked - kWorkedKappa) <= kWorkedKappaTolerance,
           "worked example " + std::to_string(worked));
  double elapsed = Seconds(start);
  o.Expect(elapsed < 5.0, "runtime " + std::to_string(elapsed) + " s");
  return o;
}

Outcome ClassWeightsSkew() {
  Outcome o;
  ClassWeights w = ComputeClassWeights({{NliLabel::kNeutral, 0.92},
                                        {NliLabel::kEntailment, 0.06},
                                        {NliLabel::kContradiction, 0.02}});
  o.Expect(std::abs(w[NliLabel::kNeutral] - 0.0481) <= kWeightTolerance,
           "neutral " + std::to_string(w[NliLabel::kNeutral]));
  o.Expect(std::abs(w[NliLabel::kEntailment] - 0.7380) <= kWeightTolerance,
           "entailment " + std::to_string(w[NliLabel::kEntailment]));
  o.Expect(std::abs(w[NliLabel::kContradiction] - 2.2139) <= kWeightTolerance,
           "contradiction " + std::to_string(w[NliLabel::kContradiction]));
  return o;
}

// Title-bearing FEVER records with several entities, plus generated
// two-person sentences, each copy under its own id.
std::vector<AnnotatedPair> BirthdayCorpus(int size) {
  std::vector<AnnotatedPair> base = {Fever("fever-lois"),
                                     Fever("fever-daenerys")};
  Rng rng(4);
  std::vector<AnnotatedPair> corpus;
  for (int i = 0; i < size; ++i) {
    AnnotatedPair pair;
    if (i % 3 == 2) {
      pair = testing::MakePair("", NliLabel::kEntailment,
                               testing::RandomPersonSentence(rng));
    } else {
      pair = base[i % 3];
    }
    pair.id = "birthday-" + std::to_string(i);
    corpus.push_back(std::move(pair));
  }
  return corpus;
}

Outcome BirthdayBalance() {
  Outcome o;
  auto start = Clock::now();
  std::vector<AnnotatedPair> corpus = BirthdayCorpus(2 * kBirthdayExamples);
  BirthdayConfig config;
  config.seed = 2018;
  std::map<NliLabel, int> counts;
  int emitted = 0;
  int unsound = 0;
  std::string first_problem;
  for (const AnnotatedPair& pair : corpus) {
    if (emitted == kBirthdayExamples) break;
    Expected<GeneratedExample> ex = MakeBirthdayExample(pair, config);
    if (!ex) continue;
    ++emitted;
    ++counts[ex->label];
    std::string problem = testing::CheckBirthdayExample(*ex);
    if (!problem.empty()) {
      if (unsound++ == 0) first_problem = problem + ": " + ex->hypothesis;
    }
  }
  o.Expect(emitted == kBirthdayExamples,
           "only " + std::to_string(emitted) + " examples");
  for (NliLabel label : kAllLabels) {
    double share = static_cast<double>(counts[label]) / emitted;
    o.Expect(std::abs(share - 1.0 / 3.0) <= kBalanceTolerance,
             std::string(LabelName(label)) + " share " + std::to_string(share));
  }
  o.Expect(unsound == 0, std::to_string(unsound) + " unsound, first: " +
                             first_problem);
  double elapsed = Seconds(start);
  o.Expect(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    o.detail = "E/C/N = " + std::to_string(counts[NliLabel::kEntailment]) +
               "/" + std::to_string(counts[NliLabel::kContradiction]) + "/" +
               std::to_string(counts[NliLabel::kNeutral]);
  }
  return o;
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void WriteLines(const fs::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  for (const std::string& line : lines) out << line << "\n";
}

Outcome Determinism() {
  Outcome o;
  fs::path dir = fs::temp_directory_path() / "distract_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  Rng rng(5);
  std::vector<std::string> snli, fever;
  for (const AnnotatedPair& p : testing::LoadPairs("snli_annotated.jsonl")) {
    snli.push_back(SerializeAnnotatedPair(p));
  }
  for (int i = 0; i < 1500; ++i) {
    snli.push_back(SerializeAnnotatedPair(testing::MakePair(
        "active-" + std::to_string(i), kAllLabels[i % 3],
        testing::BuildActive(testing::RandomActiveSpec(rng)))));
  }
  for (const AnnotatedPair& p : testing::LoadPairs("fever_annotated.jsonl")) {
    fever.push_back(SerializeAnnotatedPair(p));
  }
  for (const AnnotatedPair& p : BirthdayCorpus(1500)) {
    fever.push_back(SerializeAnnotatedPair(p));
  }
  WriteLines(dir / "snli.jsonl", snli);
  WriteLines(dir / "fever.jsonl", fever);

  std::vector<std::string> claims, retrieved;
  const char* verdicts[] = {"SUPPORTS", "REFUTES", "NOT ENOUGH INFO"};
  for (int id = 1; id <= 300; ++id) {
    std::string label = verdicts[id % 3];
    std::string evidence =
        label == "NOT ENOUGH INFO"
            ? "[[[0, 0, null, null]]]"
            : "[[[0, 0, \"Page_" + std::to_string(id) + "\", 1]]]";
    claims.push_back("{\"id\": " + std::to_string(id) +
                     ", \"claim\": \"Claim " + std::to_string(id) +
                     ".\", \"label\": \"" + label +
                     "\", \"evidence\": " + evidence + "}");
    for (int s = 0; s < 3; ++s) {
      retrieved.push_back("{\"claim_id\": " + std::to_string(id) +
                          ", \"page\": \"Page_" + std::to_string(id) +
                          "\", \"sentence_index\": " + std::to_string(s) +
                          ", \"text\": \"Sentence " + std::to_string(s) +
                          ".\"}");
    }
  }
  WriteLines(dir / "claims.jsonl", claims);
  WriteLines(dir / "retrieved.jsonl", retrieved);

  struct Command {
    std::string name;
    std::vector<std::string> args;
  };
  const std::vector<Command> commands = {
      {"passivize",
       {"passivize", "--input", (dir / "snli.jsonl").string(), "--seed", "3",
        "--reversals"}},
      {"person-reverse",
       {"person-reverse", "--input", (dir / "fever.jsonl").string(),
        "--seed", "3"}},
      {"birthday",
       {"birthday", "--input", (dir / "fever.jsonl").string(), "--seed", "3",
        "--reference-year", "2018"}},
      {"label-fever",
       {"label-fever", "--claims", (dir / "claims.jsonl").string(),
        "--retrieved", (dir / "retrieved.jsonl").string(), "--seed", "3"}},
  };
  std::ostringstream sizes;
  for (const Command& command : commands) {
    std::vector<std::string> outputs;
    for (const char* workers : {"1", "1", "8", "8"}) {
      fs::path out = dir / (command.name + "_" + workers + "_" +
                            std::to_string(outputs.size()) + ".jsonl");
      std::vector<std::string> args = command.args;
      args.insert(args.end(),
                  {"--workers", workers, "--output", out.string()});
      std::ostringstream sink_out, sink_err;
      int code = RunCli(args, sink_out, sink_err);
      o.Expect(code == kExitOk, command.name + " exited " +
                                    std::to_string(code) + " " +
                                    sink_err.str());
      std::string text = ReadAll(out);
      std::string stats = ReadAll(out.string() + ".stats.json");
      o.Expect(!text.empty(), command.name + " produced no output");
      outputs.push_back(text + "\x1e" + stats);
    }
    for (const std::string& other : outputs) {
      o.Expect(other == outputs[0], command.name + " output differs");
    }
    std::string first = outputs[0].substr(0, outputs[0].find('\x1e'));
    sizes << command.name << "="
          << std::count(first.begin(), first.end(), '\n') << " ";
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = "lines: " + sizes.str();
  return o;
}

std::multiset<std::string> Lowered(const std::vector<std::string>& words) {
  std::multiset<std::string> out;
  for (const std::string& w : words) out.insert(ToLower(w));
  return out;
}

Outcome Properties() {
  Outcome o;
  Rng rng(6);
  constexpr int kFixtures = 250;
  int passive_checked = 0;
  for (int i = 0; i < kFixtures; ++i) {
    testing::ActiveSpec spec = testing::RandomActiveSpec(rng);
    SentenceAnno active = testing::BuildActive(spec);
    AnnotatedPair pair = testing::MakePair("p", NliLabel::kEntailment, active);
    Expected<PassiveEligibility> elig = PassiveEligible(pair);
    o.Expect(elig.ok(), "generated sentence not eligible");
    if (!elig) continue;
    for (bool reversed : {false, true}) {
      std::vector<std::string> out = PassiveTokens(active, *elig, reversed);
      Span subject = reversed ? elig->agent : elig->patient;
      std::vector<std::string> expected;
      for (int t = 0; t < active.size(); ++t) {
        if (!elig->verb_group.group_span.contains(t)) {
          expected.push_back(active.tokens[t].text);
        }
      }
      std::vector<std::string> group = PassiveVerbGroup(
          elig->verb_group, NounNumber(active, subject));
      expected.insert(expected.end(), group.begin(), group.end());
      expected.push_back("by");
      o.Expect(Lowered(out) == Lowered(expected),
               "token conservation: " + Detokenize(out));
    }
    testing::ActiveSpec swapped = spec;
    std::swap(swapped.agent, swapped.patient);
    Expected<GeneratedExample> reversal = ToPassiveReversal(pair);
    Expected<GeneratedExample> oracle = ToPassive(testing::MakePair(
        "s", NliLabel::kEntailment, testing::BuildActive(swapped)));
    o.Expect(reversal.ok() && oracle.ok() &&
                 reversal->hypothesis == oracle->hypothesis,
             "reversal differs from swapped passive");
    ++passive_checked;
  }

  for (int i = 0; i < kFixtures; ++i) {
    SentenceAnno s = testing::RandomPersonSentence(rng);
    AnnotatedPair pair = testing::MakePair("q", NliLabel::kEntailment, s);
    Expected<SentenceAnno> once = ReversePersonsSentence(pair);
    o.Expect(once.ok(), "person sentence skipped");
    if (!once) continue;
    std::vector<std::string> a = s.texts(), b = once->texts();
    o.Expect(std::multiset<std::string>(a.begin(), a.end()) ==
                 std::multiset<std::string>(b.begin(), b.end()),
             "token multiset changed");
    pair.hypothesis = *once;
    Expected<SentenceAnno> twice = ReversePersonsSentence(pair);
    o.Expect(twice.ok() && *twice == s, "reversal is not an involution");
  }

  for (int i = 0; i < 500; ++i) {
    AnnotatedPair pair = testing::RandomValidPair(rng, i);
    o.Expect(ParseAnnotatedPair(SerializeAnnotatedPair(pair)) == pair,
             "round trip changed a record");
  }
  if (o.pass) {
    o.detail = std::to_string(passive_checked) +
               " passive fixtures, " + std::to_string(kFixtures) +
               " person fixtures, 500 records";
  }
  return o;
}

}  // namespace
}  // namespace distract

int main() {
  using distract::Outcome;
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "golden examples", distract::Goldens},
      {2, "kappa oracle equivalence", distract::KappaOracle},
      {3, "class weights for 92/6/2 skew", distract::ClassWeightsSkew},
      {4, "birthday label balance and soundness", distract::BirthdayBalance},
      {5, "determinism across runs and worker counts", distract::Determinism},
      {6, "property suites", distract::Properties},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%d] %s%s%s\n", outcome.pass ? "PASS" : "FAIL", c.number,
                c.name, outcome.detail.empty() ? "" : " -- ",
                outcome.detail.c_str());
  }
  std::fflush(stdout);
  return failures == 0 ? 0 : 1;
}
