// ruphon/stress_provider.h
//
// External stress lookup behind an interface so the accentor can be tested
// hermetically.  FixtureProvider serves a canned JSON file (same format as
// the accent dictionary); NullProvider always misses.

#ifndef RUPHON_STRESS_PROVIDER_H_
#define RUPHON_STRESS_PROVIDER_H_

#include <memory>
#include <optional>
#include <string>

#include "ruphon/accent_dict.h"

namespace ruphon {

class StressProvider {
 public:
  virtual ~StressProvider() = default;

  // Returns an entry for the word or nullopt on a miss.  Lookup failures of
  // any kind must surface as misses, never as exceptions.
  virtual std::optional<AccentEntry> LookupExternal(
      const std::string& word) = 0;

  virtual std::string Name() const = 0;
};

class NullProvider : public StressProvider {
 public:
  std::optional<AccentEntry> LookupExternal(const std::string&) override {
    return std::nullopt;
  }
  std::string Name() const override { return "none"; }
};

class FixtureProvider : public StressProvider {
 public:
  // Throws std::runtime_error when the fixture file is missing or invalid;
  // a provider that can't even load is a configuration error.
  explicit FixtureProvider(const std::string& path);

  std::optional<AccentEntry> LookupExternal(const std::string& word) override;
  std::string Name() const override { return "fixture:" + path_; }

 private:
  std::string path_;
  AccentDictionary entries_;
};

}  // namespace ruphon

#endif  // RUPHON_STRESS_PROVIDER_H_
