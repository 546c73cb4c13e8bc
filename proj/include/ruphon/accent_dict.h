// ruphon/accent_dict.h
//
// The layered stress dictionary.  A JSON document holds two collections:
//
//   {
//     "homonyms":     { "<word>": { "<morph tag>": "<accented form>", ... } },
//     "non-homonyms": [ "<accented form>", ... ]
//   }
//
// Non-homonym keys are derived by stripping the '+' stress marker; homonym
// keys are the written word.  A separate cache file in the same format is
// merged over the base dictionary at load (cache wins) and accumulates
// entries resolved at runtime; flushing rewrites it atomically.

#ifndef RUPHON_ACCENT_DICT_H_
#define RUPHON_ACCENT_DICT_H_

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ruphon/morph_tag.h"

namespace ruphon {

// Validates an accented form: non-empty, Cyrillic letters plus optional
// hyphens, exactly one '+' placed right after a vowel letter.  Returns the
// lookup key (lowercased, '+' stripped); throws std::runtime_error with
// `context` in the message otherwise.
std::string ValidateAccentedForm(const std::string& form,
                                 const std::string& context);

struct HomographVariant {
  std::string tag_text;  // as written in the dictionary
  MorphTag tag;
  std::string form;  // accented
};

struct AccentEntry {
  enum class Kind { kSimple, kHomograph };

  Kind kind = Kind::kSimple;
  std::string simple_form;
  std::vector<HomographVariant> variants;  // dictionary order preserved

  static AccentEntry Simple(std::string form);
  static AccentEntry Homograph(std::vector<HomographVariant> variants);

  // Enforces the structural invariants for an entry stored under `key`:
  // every form strips back to the key, and a homograph has at least two
  // variants differing in form or tag.  Throws std::runtime_error.
  void Validate(const std::string& key) const;
};

class AccentDictionary {
 public:
  AccentDictionary() = default;

  // Not copyable (owns a mutex guarding the cache overlay).
  AccentDictionary(const AccentDictionary&) = delete;
  AccentDictionary& operator=(const AccentDictionary&) = delete;

  // Loads the base layer.  Malformed JSON or invalid records raise
  // std::runtime_error naming the offending record; duplicate keys resolve
  // last-wins with a warning on `diag`; a key present in both collections
  // keeps the simple form with a warning.
  void LoadBase(std::istream& in, const std::string& name,
                std::ostream& diag);
  void LoadBaseFile(const std::string& path, std::ostream& diag);

  // Merges a cache file (same format) into the overlay; overlay entries
  // shadow the base on lookup.  A missing file is not an error (fresh cache).
  void LoadCacheFile(const std::string& path, std::ostream& diag);

  // Cache overlay first, then base.  Thread-safe.
  std::optional<AccentEntry> Lookup(const std::string& word) const;

  bool Contains(const std::string& word) const {
    return Lookup(word).has_value();
  }

  // Validates and stores a runtime-resolved entry in the cache overlay.
  // Invalid entries are rejected (std::runtime_error) without touching
  // state.  Thread-safe; this is the single write path.
  void AddCachedEntry(const std::string& word, const AccentEntry& entry);

  // Rewrites the cache file (temp file + rename) with the whole overlay.
  // No-op when the overlay is empty and the file does not exist.
  void FlushCache(const std::string& path) const;

  // Serializes the base layer; load -> save -> load preserves entry content.
  void SaveBase(std::ostream& out) const;

  size_t BaseSize() const { return base_.size(); }
  size_t CacheSize() const;

  // Deterministic iteration over base keys (for tests and tooling).
  std::vector<std::string> BaseKeys() const;

 private:
  std::map<std::string, AccentEntry> base_;
  mutable std::mutex cache_mutex_;
  std::map<std::string, AccentEntry> cache_;
};

// Exclusion dictionary: lines of two whitespace-separated accented forms
// ("source replacement"), '#' comment lines and blank lines skipped.
// Keyed by the accented source form.  Malformed lines raise
// std::runtime_error naming the line number.
std::map<std::string, std::string> LoadExclusions(std::istream& in,
                                                  const std::string& name);
std::map<std::string, std::string> LoadExclusionsFile(const std::string& path);

}  // namespace ruphon

#endif  // RUPHON_ACCENT_DICT_H_
