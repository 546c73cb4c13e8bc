// ruphon/phoneme.cc

#include "ruphon/phoneme.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ruphon/text_utils.h"

namespace ruphon {

namespace {

const std::map<PhonemeQuality, std::string>& QualityNames() {
  static const std::map<PhonemeQuality, std::string> names = {
      {PhonemeQuality::kA, "A"},     {PhonemeQuality::kO, "O"},
      {PhonemeQuality::kU, "U"},     {PhonemeQuality::kE, "E"},
      {PhonemeQuality::kY, "Y"},     {PhonemeQuality::kI, "I"},
      {PhonemeQuality::kJ, "J"},     {PhonemeQuality::kB, "B"},
      {PhonemeQuality::kV, "V"},     {PhonemeQuality::kG, "G"},
      {PhonemeQuality::kD, "D"},     {PhonemeQuality::kZ, "Z"},
      {PhonemeQuality::kK, "K"},     {PhonemeQuality::kL, "L"},
      {PhonemeQuality::kM, "M"},     {PhonemeQuality::kN, "N"},
      {PhonemeQuality::kP, "P"},     {PhonemeQuality::kR, "R"},
      {PhonemeQuality::kS, "S"},     {PhonemeQuality::kT, "T"},
      {PhonemeQuality::kF, "F"},     {PhonemeQuality::kKh, "KH"},
      {PhonemeQuality::kZh, "ZH"},   {PhonemeQuality::kSh, "SH"},
      {PhonemeQuality::kTs, "TS"},   {PhonemeQuality::kTsh, "TSH"},
      {PhonemeQuality::kDz, "DZ"},   {PhonemeQuality::kDzh, "DZH"},
      {PhonemeQuality::kSil, "sil"},
  };
  return names;
}

const std::map<std::string, PhonemeQuality>& QualityByName() {
  static const std::map<std::string, PhonemeQuality> by_name = [] {
    std::map<std::string, PhonemeQuality> m;
    for (const auto& [q, name] : QualityNames()) m.emplace(name, q);
    return m;
  }();
  return by_name;
}

}  // namespace

LetterClass ClassifyLetter(char32_t codepoint) {
  char32_t c = ToLowerCodepoint(codepoint);
  if (IsCyrillicVowel(c)) return LetterClass::kVowel;
  switch (c) {
    case U'ж':
    case U'ц':
    case U'ш':
      return LetterClass::kAlwaysHard;
    case U'й':
    case U'ч':
    case U'щ':
      return LetterClass::kAlwaysSoft;
    case U'ь':
      return LetterClass::kSoftSign;
    case U'ъ':
      return LetterClass::kHardSign;
    default:
      break;
  }
  if (IsCyrillicLetter(c)) return LetterClass::kPairedConsonant;
  return LetterClass::kNonLetter;
}

bool IsVowelQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kA:
    case PhonemeQuality::kO:
    case PhonemeQuality::kU:
    case PhonemeQuality::kE:
    case PhonemeQuality::kY:
    case PhonemeQuality::kI:
      return true;
    default:
      return false;
  }
}

bool IsConsonantQuality(PhonemeQuality q) {
  return q != PhonemeQuality::kSil && !IsVowelQuality(q);
}

bool IsPalatalizableQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kB:
    case PhonemeQuality::kV:
    case PhonemeQuality::kG:
    case PhonemeQuality::kD:
    case PhonemeQuality::kZ:
    case PhonemeQuality::kK:
    case PhonemeQuality::kL:
    case PhonemeQuality::kM:
    case PhonemeQuality::kN:
    case PhonemeQuality::kP:
    case PhonemeQuality::kR:
    case PhonemeQuality::kS:
    case PhonemeQuality::kT:
    case PhonemeQuality::kF:
    case PhonemeQuality::kKh:
    case PhonemeQuality::kZh:
    case PhonemeQuality::kSh:
    case PhonemeQuality::kTsh:
    case PhonemeQuality::kDzh:
      return true;
    default:
      return false;
  }
}

bool IsObstruentQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kB:
    case PhonemeQuality::kP:
    case PhonemeQuality::kV:
    case PhonemeQuality::kF:
    case PhonemeQuality::kG:
    case PhonemeQuality::kK:
    case PhonemeQuality::kD:
    case PhonemeQuality::kT:
    case PhonemeQuality::kZ:
    case PhonemeQuality::kS:
    case PhonemeQuality::kZh:
    case PhonemeQuality::kSh:
    case PhonemeQuality::kTs:
    case PhonemeQuality::kDz:
    case PhonemeQuality::kTsh:
    case PhonemeQuality::kDzh:
    case PhonemeQuality::kKh:
      return true;
    default:
      return false;
  }
}

bool IsVoicedObstruentQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kB:
    case PhonemeQuality::kV:
    case PhonemeQuality::kG:
    case PhonemeQuality::kD:
    case PhonemeQuality::kZ:
    case PhonemeQuality::kZh:
    case PhonemeQuality::kDz:
    case PhonemeQuality::kDzh:
      return true;
    default:
      return false;
  }
}

PhonemeQuality VoicedQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kP: return PhonemeQuality::kB;
    case PhonemeQuality::kF: return PhonemeQuality::kV;
    case PhonemeQuality::kK: return PhonemeQuality::kG;
    case PhonemeQuality::kT: return PhonemeQuality::kD;
    case PhonemeQuality::kS: return PhonemeQuality::kZ;
    case PhonemeQuality::kSh: return PhonemeQuality::kZh;
    case PhonemeQuality::kTs: return PhonemeQuality::kDz;
    case PhonemeQuality::kTsh: return PhonemeQuality::kDzh;
    default: return q;  // voiced already, sonorant, or unpaired (KH)
  }
}

PhonemeQuality DevoicedQuality(PhonemeQuality q) {
  switch (q) {
    case PhonemeQuality::kB: return PhonemeQuality::kP;
    case PhonemeQuality::kV: return PhonemeQuality::kF;
    case PhonemeQuality::kG: return PhonemeQuality::kK;
    case PhonemeQuality::kD: return PhonemeQuality::kT;
    case PhonemeQuality::kZ: return PhonemeQuality::kS;
    case PhonemeQuality::kZh: return PhonemeQuality::kSh;
    case PhonemeQuality::kDz: return PhonemeQuality::kTs;
    case PhonemeQuality::kDzh: return PhonemeQuality::kTsh;
    default: return q;
  }
}

std::string Phoneme::Name() const {
  std::string name = QualityNames().at(quality);
  if (stressed || palatalized) name += '0';
  if (long_mark) name += 'l';
  return name;
}

Phoneme MakePhoneme(PhonemeQuality quality, bool stressed, bool palatalized,
                    bool long_mark) {
  if (quality == PhonemeQuality::kSil) {
    if (stressed || palatalized || long_mark) {
      throw std::invalid_argument("sil carries no stress/soft/long flags");
    }
    return Phoneme{};
  }
  if (stressed && !IsVowelQuality(quality)) {
    throw std::invalid_argument("stress flag on consonant quality " +
                                QualityNames().at(quality));
  }
  if (palatalized && !IsPalatalizableQuality(quality)) {
    throw std::invalid_argument("quality " + QualityNames().at(quality) +
                                " has no palatalized variant");
  }
  if (stressed && palatalized) {
    throw std::invalid_argument("stress and palatalization are exclusive");
  }
  return Phoneme{quality, stressed, palatalized, long_mark};
}

Phoneme SilPhoneme() { return Phoneme{}; }

Phoneme ParsePhonemeName(const std::string& name) {
  if (name == "sil") return SilPhoneme();
  if (name == "J0" || name == "J0l") {
    // The soft marker is redundant on the inherently soft iot; accepted on
    // input, never emitted.
    return MakePhoneme(PhonemeQuality::kJ, false, false, name == "J0l");
  }
  std::string base = name;
  bool long_mark = false;
  bool flagged = false;
  if (!base.empty() && base.back() == 'l') {
    long_mark = true;
    base.pop_back();
  }
  if (!base.empty() && base.back() == '0') {
    flagged = true;
    base.pop_back();
  }
  auto it = QualityByName().find(base);
  if (it == QualityByName().end() || it->second == PhonemeQuality::kSil) {
    throw std::invalid_argument("unknown phoneme name: " + name);
  }
  PhonemeQuality q = it->second;
  if (flagged) {
    if (IsVowelQuality(q)) return MakePhoneme(q, true, false, long_mark);
    return MakePhoneme(q, false, true, long_mark);  // throws if not soft-able
  }
  return MakePhoneme(q, false, false, long_mark);
}

bool IsPhonemeName(const std::string& name) {
  const std::vector<std::string>& inv = PhonemeInventory();
  return std::binary_search(inv.begin(), inv.end(), name);
}

const std::vector<std::string>& PhonemeInventory() {
  static const std::vector<std::string> inventory = [] {
    std::set<std::string> names;
    for (const auto& [q, base] : QualityNames()) {
      if (q == PhonemeQuality::kSil) {
        names.insert(base);
        continue;
      }
      for (bool flagged : {false, true}) {
        if (flagged && IsVowelQuality(q)) {
          // stressed vowel
        } else if (flagged && !IsPalatalizableQuality(q)) {
          continue;  // J, TS, DZ take no '0'
        }
        for (bool long_mark : {false, true}) {
          Phoneme p = IsVowelQuality(q)
                          ? MakePhoneme(q, flagged, false, long_mark)
                          : MakePhoneme(q, false, flagged, long_mark);
          names.insert(p.Name());
        }
      }
    }
    return std::vector<std::string>(names.begin(), names.end());
  }();
  return inventory;
}

std::string JoinPhonemeNames(const std::vector<Phoneme>& phones,
                             const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < phones.size(); ++i) {
    if (i > 0) out += sep;
    out += phones[i].Name();
  }
  return out;
}

}  // namespace ruphon
