// ruphon/phoneme.h
//
// Letter classification and the phoneme alphabet used by the transcriber.
//
// Phoneme names are quality + optional '0' + optional 'l':
//   * on a vowel quality, '0' marks lexical stress (A0 = stressed A);
//   * on a consonant quality, '0' marks palatalization (T0 = soft T);
//   * 'l' marks a long (geminate) phoneme produced by merging.
// The '0' suffix is deliberately overloaded: stress and palatalization never
// apply to the same quality, so names stay unambiguous.  "sil" is the pause
// quasi-phoneme and carries no suffixes.

#ifndef RUPHON_PHONEME_H_
#define RUPHON_PHONEME_H_

#include <cstdint>
#include <string>
#include <vector>

namespace ruphon {

// Classes of Russian letters that drive the transcription rules.
enum class LetterClass {
  kVowel,            // а е ё и о у ы э ю я
  kPairedConsonant,  // б в г д з к л м н п р с т ф х
  kAlwaysHard,       // ж ц ш
  kAlwaysSoft,       // й ч щ
  kSoftSign,         // ь
  kHardSign,         // ъ
  kNonLetter,        // everything else, total over all codepoints
};

// Case-insensitive; non-Cyrillic input lands in kNonLetter.
LetterClass ClassifyLetter(char32_t codepoint);

enum class PhonemeQuality : std::uint8_t {
  // Vowel qualities (stressable).
  kA, kO, kU, kE, kY, kI,
  // Iot (й). Inherently soft; carries no flags. "J0" parses as an alias.
  kJ,
  // Paired consonants (palatalizable).
  kB, kV, kG, kD, kZ, kK, kL, kM, kN, kP, kR, kS, kT, kF, kKh,
  // Hushers/affricates. ZH/SH/TSH/DZH palatalize (SH0 = щ, TSH0 = ч,
  // ZH0/DZH0 = their voiced counterparts); TS/DZ never do.
  kZh, kSh, kTs, kTsh, kDz, kDzh,
  // Pause.
  kSil,
};

bool IsVowelQuality(PhonemeQuality q);
bool IsConsonantQuality(PhonemeQuality q);  // includes kJ, excludes kSil
bool IsPalatalizableQuality(PhonemeQuality q);

// Obstruent voicing machinery for the assimilation rules.  Sonorants
// (L M N R) and J are neither voiced nor voiceless here.
bool IsObstruentQuality(PhonemeQuality q);
bool IsVoicedObstruentQuality(PhonemeQuality q);
// Returns the (de)voiced counterpart, or the input unchanged when the
// quality has no partner (KH has no voiced twin).
PhonemeQuality VoicedQuality(PhonemeQuality q);
PhonemeQuality DevoicedQuality(PhonemeQuality q);

struct Phoneme {
  PhonemeQuality quality = PhonemeQuality::kSil;
  bool stressed = false;     // vowels only
  bool palatalized = false;  // palatalizable consonants only
  bool long_mark = false;    // never on sil

  bool operator==(const Phoneme& other) const = default;

  bool IsSil() const { return quality == PhonemeQuality::kSil; }
  bool IsVowel() const { return IsVowelQuality(quality); }
  // Soft for assimilation purposes: flagged palatalized, or inherently
  // soft J.
  bool IsSoft() const {
    return palatalized || quality == PhonemeQuality::kJ;
  }

  std::string Name() const;
};

// Constructs a phoneme, rejecting illegal flag combinations
// (vowel+palatalized, consonant+stressed, sil with any flag, flags on
// J/TS/DZ) with std::invalid_argument.
Phoneme MakePhoneme(PhonemeQuality quality, bool stressed = false,
                    bool palatalized = false, bool long_mark = false);

Phoneme SilPhoneme();

// Parses a canonical name back into a phoneme.  Accepts "J0" as an alias
// of "J"; anything else outside the inventory raises std::invalid_argument.
Phoneme ParsePhonemeName(const std::string& name);

bool IsPhonemeName(const std::string& name);

// The full closed inventory (107 names including "sil"), sorted
// lexicographically.  Built once; every phoneme any rule can emit is here.
const std::vector<std::string>& PhonemeInventory();

std::string JoinPhonemeNames(const std::vector<Phoneme>& phones,
                             const std::string& sep = " ");

}  // namespace ruphon

#endif  // RUPHON_PHONEME_H_
