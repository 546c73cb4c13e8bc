// ruphon/accentor.h
//
// Places the '+' lexical stress marker on tokenized text.  Per token the
// pipeline is: pre-accented passthrough -> non-Russian passthrough ->
// function-word policy -> dictionary lookup (homographs resolved by
// morphological tag) -> external provider with write-through caching ->
// unresolved passthrough.  Hyphenated compounds try a whole-word lookup
// before being accented part by part.

#ifndef RUPHON_ACCENTOR_H_
#define RUPHON_ACCENTOR_H_

#include <optional>
#include <string>
#include <vector>

#include "ruphon/accent_dict.h"
#include "ruphon/morph_tag.h"
#include "ruphon/stress_provider.h"

namespace ruphon {

enum class AccentOutcome {
  kPreAccented,   // input already carried '+'
  kNonRussian,    // not purely Cyrillic letters (plus '-'/'+')
  kFunctionWord,  // function-word POS, or single-vowel word not in dictionary
  kDictSimple,    // non-homonym dictionary hit
  kDictHomograph, // homograph resolved (by tag or unanimity)
  kProviderHit,   // external provider hit, written through to the cache
  kUnresolved,    // passed through unchanged
};

const char* AccentOutcomeName(AccentOutcome outcome);

struct TokenDecision {
  std::string input;
  std::string output;
  AccentOutcome outcome = AccentOutcome::kUnresolved;
  // Canonical dictionary tag that matched, for kDictHomograph; empty for a
  // unanimous resolution or other outcomes.
  std::string tag_used;
};

// Function-word POS classes left unaccented by design.
bool IsFunctionWordPos(const std::string& pos);

// Resolves a homograph entry against an optional tag:
//  1. exact canonical-string match wins;
//  2. else the variant with the same POS, the most agreeing features and no
//     contradicting feature wins (ties: dictionary order);
//  3. else (no tag / no POS match) the shared form if all variants agree.
// Returns (form, canonical tag used) or nullopt.
std::optional<std::pair<std::string, std::string>> ResolveHomograph(
    const AccentEntry& entry, const MorphTag* tag);

class Accentor {
 public:
  // The dictionary must outlive the accentor.  `provider` may be null
  // (treated as always-miss).  Provider hits are validated and written
  // through to the dictionary's cache overlay.
  Accentor(AccentDictionary* dict, StressProvider* provider);

  // `tag` may be null or empty (no morphology available).  Input of any
  // case is accepted; Russian output is lowercase.
  TokenDecision AccentuateWord(const std::string& word,
                               const MorphTag* tag = nullptr) const;

  // tags, when present, must be parallel to tokens (std::invalid_argument
  // otherwise); an empty MorphTag means "no tag for this token".
  std::vector<TokenDecision> AccentuatePhrase(
      const std::vector<std::string>& tokens,
      const std::vector<MorphTag>* tags = nullptr) const;

 private:
  TokenDecision AccentuatePart(const std::string& part,
                               const MorphTag* tag) const;
  TokenDecision AccentuateHyphenated(const std::string& word,
                                     const MorphTag* tag) const;

  AccentDictionary* dict_;
  StressProvider* provider_;
};

}  // namespace ruphon

#endif  // RUPHON_ACCENTOR_H_
