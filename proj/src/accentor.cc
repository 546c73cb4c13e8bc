// ruphon/accentor.cc

#include "ruphon/accentor.h"

#include <iostream>
#include <stdexcept>

#include "ruphon/text_utils.h"

namespace ruphon {

namespace {

bool IsRussianToken(const std::u32string& cps) {
  if (cps.empty()) return false;
  for (char32_t c : cps) {
    if (!IsCyrillicLetter(c) && c != U'-' && c != U'+') return false;
  }
  return true;
}

bool HasStressMarker(const std::string& word) {
  return word.find('+') != std::string::npos;
}

}  // namespace

const char* AccentOutcomeName(AccentOutcome outcome) {
  switch (outcome) {
    case AccentOutcome::kPreAccented: return "pre-accented";
    case AccentOutcome::kNonRussian: return "non-russian";
    case AccentOutcome::kFunctionWord: return "function-word";
    case AccentOutcome::kDictSimple: return "dict";
    case AccentOutcome::kDictHomograph: return "dict-homograph";
    case AccentOutcome::kProviderHit: return "provider";
    case AccentOutcome::kUnresolved: return "unresolved";
  }
  return "unknown";
}

bool IsFunctionWordPos(const std::string& pos) {
  return pos == "ADP" || pos == "CCONJ" || pos == "SCONJ" || pos == "PART";
}

std::optional<std::pair<std::string, std::string>> ResolveHomograph(
    const AccentEntry& entry, const MorphTag* tag) {
  if (tag != nullptr && !tag->Empty()) {
    std::string wanted = tag->Canonical();
    for (const HomographVariant& v : entry.variants) {
      if (v.tag.Canonical() == wanted) return std::make_pair(v.form, wanted);
    }
    // Partial match: same POS, the most agreeing feature pairs, no feature
    // present on both sides with different values.  Features known to only
    // one side are neutral.
    const HomographVariant* best = nullptr;
    int best_score = -1;
    for (const HomographVariant& v : entry.variants) {
      if (v.tag.pos != tag->pos) continue;
      int score = 0;
      bool contradiction = false;
      for (const auto& [key, value] : tag->features) {
        for (const auto& [vkey, vvalue] : v.tag.features) {
          if (key != vkey) continue;
          if (value == vvalue) {
            ++score;
          } else {
            contradiction = true;
          }
          break;
        }
        if (contradiction) break;
      }
      if (contradiction) continue;
      if (score > best_score) {  // ties keep the earlier (dictionary) variant
        best = &v;
        best_score = score;
      }
    }
    if (best != nullptr) {
      return std::make_pair(best->form, best->tag.Canonical());
    }
  }
  // No tag, or nothing usable in it: resolve only if every variant agrees.
  const std::string& first = entry.variants.front().form;
  for (const HomographVariant& v : entry.variants) {
    if (v.form != first) return std::nullopt;
  }
  return std::make_pair(first, std::string());
}

Accentor::Accentor(AccentDictionary* dict, StressProvider* provider)
    : dict_(dict), provider_(provider) {}

TokenDecision Accentor::AccentuateWord(const std::string& word,
                                       const MorphTag* tag) const {
  TokenDecision decision;
  decision.input = word;

  if (HasStressMarker(word)) {
    decision.output = ToLowerUtf8(word);
    decision.outcome = AccentOutcome::kPreAccented;
    return decision;
  }

  std::string lower = ToLowerUtf8(word);
  std::u32string cps = DecodeUtf8(lower);
  if (!IsRussianToken(cps)) {
    decision.output = word;  // untouched, including case
    decision.outcome = AccentOutcome::kNonRussian;
    return decision;
  }

  if (tag != nullptr && !tag->Empty() && IsFunctionWordPos(tag->pos)) {
    decision.output = lower;
    decision.outcome = AccentOutcome::kFunctionWord;
    return decision;
  }

  if (lower.find('-') != std::string::npos) {
    return AccentuateHyphenated(lower, tag);
  }
  return AccentuatePart(lower, tag);
}

TokenDecision Accentor::AccentuatePart(const std::string& part,
                                       const MorphTag* tag) const {
  TokenDecision decision;
  decision.input = part;
  decision.output = part;
  decision.outcome = AccentOutcome::kUnresolved;

  if (tag != nullptr && !tag->Empty() && IsFunctionWordPos(tag->pos)) {
    decision.outcome = AccentOutcome::kFunctionWord;
    return decision;
  }

  std::optional<AccentEntry> entry = dict_->Lookup(part);
  if (entry.has_value()) {
    if (entry->kind == AccentEntry::Kind::kSimple) {
      decision.output = entry->simple_form;
      decision.outcome = AccentOutcome::kDictSimple;
      return decision;
    }
    auto resolved = ResolveHomograph(*entry, tag);
    if (resolved.has_value()) {
      decision.output = resolved->first;
      decision.outcome = AccentOutcome::kDictHomograph;
      decision.tag_used = resolved->second;
    }
    // A homograph the tag cannot pick apart stays unresolved; asking the
    // provider would just reintroduce the arbitrary choice.
    return decision;
  }

  // Words this short are almost always clitics pronounced without stress;
  // they skip the external provider on purpose.
  if (CountCyrillicVowels(part) <= 1) {
    decision.outcome = AccentOutcome::kFunctionWord;
    return decision;
  }

  if (provider_ != nullptr) {
    std::optional<AccentEntry> external = provider_->LookupExternal(part);
    if (external.has_value()) {
      try {
        dict_->AddCachedEntry(part, *external);
      } catch (const std::exception& e) {
        std::cerr << "[ruphon] warning: provider " << provider_->Name()
                  << " returned an invalid entry for '" << part
                  << "': " << e.what() << "\n";
        return decision;
      }
      if (external->kind == AccentEntry::Kind::kSimple) {
        decision.output = external->simple_form;
        decision.outcome = AccentOutcome::kProviderHit;
        return decision;
      }
      auto resolved = ResolveHomograph(*external, tag);
      if (resolved.has_value()) {
        decision.output = resolved->first;
        decision.outcome = AccentOutcome::kProviderHit;
        decision.tag_used = resolved->second;
      }
      return decision;
    }
  }
  return decision;
}

TokenDecision Accentor::AccentuateHyphenated(const std::string& word,
                                             const MorphTag* tag) const {
  // Compounds like "кто-то" live in the dictionary as whole words; only
  // unknown compounds are accented part by part.
  std::optional<AccentEntry> whole = dict_->Lookup(word);
  if (whole.has_value()) {
    return AccentuatePart(word, tag);
  }

  TokenDecision decision;
  decision.input = word;
  decision.outcome = AccentOutcome::kUnresolved;

  // SplitChar keeps empty fields, so rejoining with '-' preserves the
  // original hyphen layout exactly.
  std::string output;
  bool first = true;
  bool any_accented = false;
  for (const std::string& part : SplitChar(word, '-')) {
    TokenDecision part_decision =
        part.empty() ? TokenDecision{part, part, AccentOutcome::kUnresolved, ""}
                     : AccentuatePart(part, tag);
    if (!first) output += '-';
    first = false;
    output += part_decision.output;
    if (!any_accented && part_decision.output != part_decision.input) {
      any_accented = true;
      decision.outcome = part_decision.outcome;
      decision.tag_used = part_decision.tag_used;
    }
  }
  decision.output = output;
  if (!any_accented) {
    decision.outcome = AccentOutcome::kUnresolved;
    decision.output = word;
  }
  return decision;
}

std::vector<TokenDecision> Accentor::AccentuatePhrase(
    const std::vector<std::string>& tokens,
    const std::vector<MorphTag>* tags) const {
  if (tags != nullptr && tags->size() != tokens.size()) {
    throw std::invalid_argument(
        "tag list length " + std::to_string(tags->size()) +
        " does not match token count " + std::to_string(tokens.size()));
  }
  std::vector<TokenDecision> decisions;
  decisions.reserve(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i) {
    const MorphTag* tag = tags != nullptr ? &(*tags)[i] : nullptr;
    decisions.push_back(AccentuateWord(tokens[i], tag));
  }
  return decisions;
}

}  // namespace ruphon
