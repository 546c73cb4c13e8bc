// ruphon/stress_provider.cc

#include "ruphon/stress_provider.h"

#include <iostream>

namespace ruphon {

FixtureProvider::FixtureProvider(const std::string& path) : path_(path) {
  entries_.LoadBaseFile(path, std::cerr);
}

std::optional<AccentEntry> FixtureProvider::LookupExternal(
    const std::string& word) {
  return entries_.Lookup(word);
}

}  // namespace ruphon
