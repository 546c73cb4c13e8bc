// ruphon/accent_dict.cc

#include "ruphon/accent_dict.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ruphon/phoneme.h"
#include "ruphon/text_utils.h"

namespace ruphon {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string StripStressMarker(const std::string& form) {
  std::string out;
  out.reserve(form.size());
  for (char c : form) {
    if (c != '+') out += c;
  }
  return out;
}

void SerializeLayer(const std::map<std::string, AccentEntry>& layer,
                    std::ostream& out) {
  OrderedJson doc;
  doc["homonyms"] = OrderedJson::object();
  doc["non-homonyms"] = OrderedJson::array();
  for (const auto& [key, entry] : layer) {
    if (entry.kind == AccentEntry::Kind::kSimple) {
      doc["non-homonyms"].push_back(entry.simple_form);
    } else {
      OrderedJson variants = OrderedJson::object();
      for (const HomographVariant& v : entry.variants) {
        variants[v.tag_text] = v.form;
      }
      doc["homonyms"][key] = std::move(variants);
    }
  }
  out << doc.dump(2) << "\n";
}

void MergeDocument(const OrderedJson& doc, const std::string& name,
                   std::map<std::string, AccentEntry>* layer,
                   std::ostream& diag) {
  if (!doc.is_object()) {
    throw std::runtime_error(name + ": top level must be a JSON object");
  }
  for (const auto& [section, value] : doc.items()) {
    if (section != "homonyms" && section != "non-homonyms") {
      throw std::runtime_error(name + ": unknown section '" + section + "'");
    }
  }
  std::map<std::string, AccentEntry> homographs;
  if (doc.contains("homonyms")) {
    const OrderedJson& hom = doc.at("homonyms");
    if (!hom.is_object()) {
      throw std::runtime_error(name + ": \"homonyms\" must be an object");
    }
    for (const auto& [word, variants_json] : hom.items()) {
      if (!variants_json.is_object()) {
        throw std::runtime_error(name + ": homonym record '" + word +
                                 "' must map tags to accented forms");
      }
      std::string key = ToLowerUtf8(word);
      std::vector<HomographVariant> variants;
      for (const auto& [tag_text, form_json] : variants_json.items()) {
        if (!form_json.is_string()) {
          throw std::runtime_error(name + ": homonym record '" + word +
                                   "' has a non-string form");
        }
        HomographVariant v;
        v.tag_text = tag_text;
        try {
          v.tag = MorphTag::Parse(tag_text);
        } catch (const std::exception& e) {
          throw std::runtime_error(name + ": homonym record '" + word +
                                   "': " + e.what());
        }
        v.form = ToLowerUtf8(form_json.get<std::string>());
        variants.push_back(std::move(v));
      }
      AccentEntry entry = AccentEntry::Homograph(std::move(variants));
      try {
        entry.Validate(key);
      } catch (const std::exception& e) {
        throw std::runtime_error(name + ": " + e.what());
      }
      if (homographs.count(key) > 0) {
        diag << "[ruphon] warning: " << name << ": duplicate homonym key '"
             << key << "', last wins\n";
      }
      homographs[key] = std::move(entry);
    }
  }
  std::map<std::string, AccentEntry> simples;
  if (doc.contains("non-homonyms")) {
    const OrderedJson& non = doc.at("non-homonyms");
    if (!non.is_array()) {
      throw std::runtime_error(name + ": \"non-homonyms\" must be an array");
    }
    for (const OrderedJson& form_json : non) {
      if (!form_json.is_string()) {
        throw std::runtime_error(name +
                                 ": \"non-homonyms\" entries must be strings");
      }
      std::string form = ToLowerUtf8(form_json.get<std::string>());
      std::string key =
          ValidateAccentedForm(form, name + ": non-homonym entry");
      if (simples.count(key) > 0 && simples[key].simple_form != form) {
        diag << "[ruphon] warning: " << name << ": duplicate entry for '"
             << key << "', last wins\n";
      }
      simples[key] = AccentEntry::Simple(form);
    }
  }
  // Simple beats homograph when the same key appears in both collections.
  for (auto& [key, entry] : homographs) {
    if (simples.count(key) > 0) {
      diag << "[ruphon] warning: " << name << ": key '" << key
           << "' is listed both as homonym and non-homonym; "
              "keeping the simple form\n";
      continue;
    }
    (*layer)[key] = std::move(entry);
  }
  for (auto& [key, entry] : simples) {
    (*layer)[key] = std::move(entry);
  }
}

void LoadLayer(std::istream& in, const std::string& name,
               std::map<std::string, AccentEntry>* layer, std::ostream& diag) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(in);
  } catch (const OrderedJson::parse_error& e) {
    throw std::runtime_error(name + ": " + e.what());
  }
  MergeDocument(doc, name, layer, diag);
}

}  // namespace

std::string ValidateAccentedForm(const std::string& form,
                                 const std::string& context) {
  std::u32string cps = DecodeUtf8(form);
  if (cps.empty()) {
    throw std::runtime_error(context + ": empty accented form");
  }
  int stress_count = 0;
  for (size_t i = 0; i < cps.size(); ++i) {
    char32_t c = cps[i];
    if (c == U'+') {
      ++stress_count;
      if (i == 0 || !IsCyrillicVowel(cps[i - 1])) {
        throw std::runtime_error(context + ": stress marker not after a "
                                 "vowel in '" + form + "'");
      }
    } else if (c == U'-') {
      // hyphenated compounds are legal dictionary entries
    } else if (!IsCyrillicLetter(c)) {
      throw std::runtime_error(context + ": non-Cyrillic character in '" +
                               form + "'");
    } else if (ToLowerCodepoint(c) != c) {
      throw std::runtime_error(context + ": accented form '" + form +
                               "' is not lowercase");
    }
  }
  if (stress_count != 1) {
    throw std::runtime_error(context + ": accented form '" + form + "' must "
                             "carry exactly one stress marker, found " +
                             std::to_string(stress_count));
  }
  return StripStressMarker(form);
}

AccentEntry AccentEntry::Simple(std::string form) {
  AccentEntry entry;
  entry.kind = Kind::kSimple;
  entry.simple_form = std::move(form);
  return entry;
}

AccentEntry AccentEntry::Homograph(std::vector<HomographVariant> variants) {
  AccentEntry entry;
  entry.kind = Kind::kHomograph;
  entry.variants = std::move(variants);
  return entry;
}

void AccentEntry::Validate(const std::string& key) const {
  if (kind == Kind::kSimple) {
    std::string derived =
        ValidateAccentedForm(simple_form, "entry '" + key + "'");
    if (derived != key) {
      throw std::runtime_error("entry '" + key + "': accented form '" +
                               simple_form + "' strips to '" + derived + "'");
    }
    return;
  }
  if (variants.size() < 2) {
    throw std::runtime_error("homonym record '" + key + "' needs at least "
                             "two variants (a single form belongs in "
                             "non-homonyms)");
  }
  bool distinct_form = false;
  bool distinct_tag = false;
  for (size_t i = 0; i < variants.size(); ++i) {
    const HomographVariant& v = variants[i];
    std::string derived = ValidateAccentedForm(
        v.form, "homonym record '" + key + "', tag '" + v.tag_text + "'");
    if (derived != key) {
      throw std::runtime_error("homonym record '" + key + "': form '" +
                               v.form + "' strips to '" + derived + "'");
    }
    if (i > 0) {
      if (v.form != variants[0].form) distinct_form = true;
      if (v.tag.Canonical() != variants[0].tag.Canonical())
        distinct_tag = true;
    }
  }
  if (!distinct_form && !distinct_tag) {
    throw std::runtime_error("homonym record '" + key +
                             "' lists indistinguishable variants");
  }
}

void AccentDictionary::LoadBase(std::istream& in, const std::string& name,
                                std::ostream& diag) {
  LoadLayer(in, name, &base_, diag);
  diag << "[ruphon] loaded " << base_.size() << " entries from " << name
       << "\n";
}

void AccentDictionary::LoadBaseFile(const std::string& path,
                                    std::ostream& diag) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dictionary file: " + path);
  }
  LoadBase(in, path, diag);
}

void AccentDictionary::LoadCacheFile(const std::string& path,
                                     std::ostream& diag) {
  std::ifstream in(path);
  if (!in) return;  // fresh cache
  std::lock_guard<std::mutex> lock(cache_mutex_);
  LoadLayer(in, path, &cache_, diag);
  diag << "[ruphon] merged " << cache_.size() << " cached entries from "
       << path << "\n";
}

std::optional<AccentEntry> AccentDictionary::Lookup(
    const std::string& word) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(word);
    if (it != cache_.end()) return it->second;
  }
  auto it = base_.find(word);
  if (it != base_.end()) return it->second;
  return std::nullopt;
}

void AccentDictionary::AddCachedEntry(const std::string& word,
                                      const AccentEntry& entry) {
  entry.Validate(word);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_[word] = entry;
}

void AccentDictionary::FlushCache(const std::string& path) const {
  std::map<std::string, AccentEntry> snapshot;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    snapshot = cache_;
  }
  std::ifstream existing(path);
  if (snapshot.empty() && !existing) return;
  existing.close();
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      throw std::runtime_error("cannot write cache file: " + tmp);
    }
    SerializeLayer(snapshot, out);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot replace cache file: " + path);
  }
}

void AccentDictionary::SaveBase(std::ostream& out) const {
  SerializeLayer(base_, out);
}

size_t AccentDictionary::CacheSize() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  return cache_.size();
}

std::vector<std::string> AccentDictionary::BaseKeys() const {
  std::vector<std::string> keys;
  keys.reserve(base_.size());
  for (const auto& [key, entry] : base_) keys.push_back(key);
  return keys;
}

std::map<std::string, std::string> LoadExclusions(std::istream& in,
                                                  const std::string& name) {
  std::map<std::string, std::string> exclusions;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string where = name + ":" + std::to_string(line_no);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> fields = SplitWhitespace(line);
    if (fields.size() != 2) {
      throw std::runtime_error(where + ": expected two accented forms, got " +
                               std::to_string(fields.size()));
    }
    ValidateAccentedForm(fields[0], where);
    ValidateAccentedForm(fields[1], where);
    exclusions[fields[0]] = fields[1];
  }
  return exclusions;
}

std::map<std::string, std::string> LoadExclusionsFile(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open exclusion file: " + path);
  }
  return LoadExclusions(in, path);
}

}  // namespace ruphon
