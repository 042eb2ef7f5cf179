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

#include "distract/person_reversal.h"

#include <algorithm>
#include <array>
#include <vector>

#include "distract/text.h"

namespace distract {

namespace {

constexpr std::array<std::string_view, 3> kReversibleRoles = {"ARG0", "ARG1",
                                                              "ARG2"};

// Index bookkeeping for exchanging two ordered, disjoint ranges.
class Exchange {
 public:
  Exchange(Span a, Span b) : a_(a), b_(b), delta_(b.size() - a.size()) {}

  // New index of the token at `i`.
  int Moved(int i) const {
    if (i < a_.start || i >= b_.end) return i;
    if (a_.contains(i)) return b_.start + delta_ + (i - a_.start);
    if (b_.contains(i)) return a_.start + (i - b_.start);
    return i + delta_;
  }

  // New position of a span boundary. Boundaries that cut into a range snap
  // to the edge of whatever now occupies it.
  int Boundary(int p, bool is_end) const {
    if (p <= a_.start || p >= b_.end) return p;
    if (p < a_.end) return is_end ? a_.start + b_.size() : a_.start;
    if (p <= b_.start) return p + delta_;
    return is_end ? b_.end : b_.start + delta_;
  }

  // Entities follow their tokens. Role spans that coincide with a range stay
  // in place and take whatever content now fills it.
  Span MapSpan(Span span, bool follow_tokens) const {
    if (!follow_tokens && (span == a_ || span == b_)) {
      return Span{Boundary(span.start, false), Boundary(span.end, true)};
    }
    if (a_.contains(span) || b_.contains(span)) {
      return Span{Moved(span.start), Moved(span.end - 1) + 1};
    }
    return Span{Boundary(span.start, false), Boundary(span.end, true)};
  }

 private:
  Span a_;
  Span b_;
  int delta_;
};

std::vector<Span> PersonsInside(const SentenceAnno& sentence, Span arg) {
  std::vector<Span> out;
  for (const EntityAnno& entity : sentence.entities) {
    if (IsPersonKind(entity.kind) && arg.contains(entity.span)) {
      out.push_back(entity.span);
    }
  }
  std::sort(out.begin(), out.end(), [](const Span& x, const Span& y) {
    return x.start != y.start ? x.start < y.start : x.end < y.end;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string_view ClaimLabelName(ClaimLabel label) {
  switch (label) {
    case ClaimLabel::kSupports:
      return "SUPPORTS";
    case ClaimLabel::kRefutes:
      return "REFUTES";
    case ClaimLabel::kNotEnoughInfo:
      return "NOT ENOUGH INFO";
  }
  return "NOT ENOUGH INFO";
}

std::optional<ClaimLabel> ParseClaimLabel(std::string_view name) {
  for (ClaimLabel label : {ClaimLabel::kSupports, ClaimLabel::kRefutes,
                           ClaimLabel::kNotEnoughInfo}) {
    if (ClaimLabelName(label) == name) return label;
  }
  return std::nullopt;
}

NliLabel LabelFeverPair(ClaimLabel claim_label, bool evidence_is_gold) {
  if (!evidence_is_gold) return NliLabel::kNeutral;
  switch (claim_label) {
    case ClaimLabel::kSupports:
      return NliLabel::kEntailment;
    case ClaimLabel::kRefutes:
      return NliLabel::kContradiction;
    case ClaimLabel::kNotEnoughInfo:
      return NliLabel::kNeutral;
  }
  return NliLabel::kNeutral;
}

std::string PrefixTitle(std::string_view page_title,
                        std::string_view premise_text) {
  std::string title(page_title);
  std::replace(title.begin(), title.end(), '_', ' ');
  std::string out;
  out.reserve(title.size() + premise_text.size() + 3);
  out += '[';
  out += title;
  out += "] ";
  out += premise_text;
  return out;
}

bool IsPersonKind(std::string_view kind) {
  return kind == "PERSON" || kind == "PER" || kind == "B-PER";
}

Expected<PersonPair> FindReversiblePersons(const SentenceAnno& hypothesis) {
  std::optional<SrlFrame> frame;
  try {
    frame = FrameAt(hypothesis, RootIndex(hypothesis));
  } catch (const AnnotationError&) {
    return SkipReason::kNoTwoPersons;
  }
  if (!frame) return SkipReason::kNoTwoPersons;

  std::vector<std::vector<Span>> by_role;
  for (std::string_view role : kReversibleRoles) {
    if (const Span* arg = frame->arg(role)) {
      by_role.push_back(PersonsInside(hypothesis, *arg));
    }
  }
  for (std::size_t i = 0; i < by_role.size(); ++i) {
    for (const Span& first : by_role[i]) {
      for (std::size_t j = i + 1; j < by_role.size(); ++j) {
        for (const Span& second : by_role[j]) {
          if (hypothesis.texts(first) == hypothesis.texts(second)) continue;
          if (first.start < second.start) return PersonPair{first, second};
          return PersonPair{second, first};
        }
      }
    }
  }
  return SkipReason::kNoTwoPersons;
}

std::pair<Span, Span> ExchangedPositions(Span a, Span b) {
  const bool ordered = a.start <= b.start;
  const Span left = ordered ? a : b;
  const Span right = ordered ? b : a;
  const int delta = right.size() - left.size();
  const Span left_moved{right.start + delta, right.end};
  const Span right_moved{left.start, left.start + right.size()};
  if (ordered) return {left_moved, right_moved};
  return {right_moved, left_moved};
}

SentenceAnno ExchangeSpans(const SentenceAnno& sentence, Span a, Span b) {
  if (b.start < a.start) std::swap(a, b);
  if (a.overlaps(b) || !a.valid_for(sentence.size()) ||
      !b.valid_for(sentence.size())) {
    throw std::invalid_argument("ExchangeSpans: ranges must be disjoint");
  }
  const Exchange exchange(a, b);
  const int head_a = SpanHead(sentence, a).value_or(a.start);
  const int head_b = SpanHead(sentence, b).value_or(b.start);

  // A reference into a range now lands on the head of the other content.
  auto resolve = [&](int target) {
    if (target == kRootHead) return kRootHead;
    if (a.contains(target)) return exchange.Moved(head_b);
    if (b.contains(target)) return exchange.Moved(head_a);
    return exchange.Moved(target);
  };

  SentenceAnno out;
  out.tokens.resize(sentence.tokens.size());
  for (int i = 0; i < sentence.size(); ++i) {
    TokenAnno token = sentence.tokens[i];
    const Span* own = a.contains(i) ? &a : (b.contains(i) ? &b : nullptr);
    if (own != nullptr && token.dep_head != kRootHead &&
        own->contains(token.dep_head)) {
      token.dep_head = exchange.Moved(token.dep_head);
    } else if (i == head_a || i == head_b) {
      // The content head inherits the outward edge of the range it moves to.
      const TokenAnno& other = sentence.tokens[i == head_a ? head_b : head_a];
      token.dep_head = resolve(other.dep_head);
      token.dep_label = other.dep_label;
    } else {
      token.dep_head = resolve(token.dep_head);
    }
    out.tokens[exchange.Moved(i)] = std::move(token);
  }

  out.frames.reserve(sentence.frames.size());
  for (const SrlFrame& frame : sentence.frames) {
    SrlFrame moved;
    moved.predicate = exchange.Moved(frame.predicate);
    for (const auto& [role, span] : frame.args) {
      moved.args.emplace(role, exchange.MapSpan(span, false));
    }
    out.frames.push_back(std::move(moved));
  }
  out.entities.reserve(sentence.entities.size());
  for (const EntityAnno& entity : sentence.entities) {
    out.entities.push_back({exchange.MapSpan(entity.span, true), entity.kind});
  }
  return out;
}

Expected<SentenceAnno> ReversePersonsSentence(const AnnotatedPair& pair,
                                              const Lexicons& lexicons) {
  if (pair.label != NliLabel::kEntailment) return SkipReason::kNotEntailment;
  Expected<PersonPair> persons = FindReversiblePersons(pair.hypothesis);
  if (!persons) return persons.skip();
  const FilterVerdict verdict =
      BlockedByFilters(pair.hypothesis, RootIndex(pair.hypothesis), lexicons);
  if (verdict.blocked) return ToSkipReason(*verdict.reason);
  return ExchangeSpans(pair.hypothesis, persons->first, persons->second);
}

Expected<GeneratedExample> ReversePersons(const AnnotatedPair& pair,
                                          const Lexicons& lexicons) {
  Expected<SentenceAnno> reversed = ReversePersonsSentence(pair, lexicons);
  if (!reversed) return reversed.skip();
  const std::vector<std::string> premise = pair.premise.texts();
  const std::vector<std::string> hypothesis = reversed->texts();
  return GeneratedExample{Detokenize(premise), Detokenize(hypothesis),
                          NliLabel::kContradiction, Transform::kPersonReversal,
                          pair.id, nullptr};
}

}  // namespace distract
