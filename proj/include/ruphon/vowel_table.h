// ruphon/vowel_table.h
//
// The vowel realization table: for each left-context row, stress state and
// following-symbol state it gives the emitted phoneme(s) for each of the ten
// vowel letters.  Row selection:
//   iotated      - word-initial, after another vowel, or after Ь/Ъ
//                  (only ё ю я е take the J prefix here);
//   after_soft   - after Й Ч Щ;
//   after_hard   - after Ж Ц Ш;
//   after_paired - after a paired consonant (this row also palatalizes the
//                  consonant when the letter is one of е ё ю я и).
// The table ships as a TSV data file so cells can be amended without code
// changes; the built-in copy is the same content.

#ifndef RUPHON_VOWEL_TABLE_H_
#define RUPHON_VOWEL_TABLE_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "ruphon/phoneme.h"

namespace ruphon {

enum class VowelRow { kIotated, kAfterSoft, kAfterHard, kAfterPaired };

// Column order within a table line, mirroring the source layout.
inline constexpr char32_t kVowelColumns[10] = {U'ё', U'ю', U'я', U'е', U'о',
                                               U'у', U'а', U'э', U'ы', U'и'};

struct VowelCell {
  bool iot_prefix = false;  // emit J before the vowel
  PhonemeQuality vowel = PhonemeQuality::kA;

  bool operator==(const VowelCell& other) const = default;
};

class VowelTable {
 public:
  // Rows: "iotated" | "after_soft" | "after_hard" | "after_paired";
  // stress: "stressed" | "unstressed"; next: "final" | "letter"; then ten
  // cells ("A", "J O0", ...).  '#' lines and blanks are skipped.  All 16
  // combinations must be present exactly once.
  static VowelTable Parse(std::istream& in, const std::string& name);
  static VowelTable LoadFile(const std::string& path);

  // The compiled-in default, identical to the shipped data file.
  static const VowelTable& Builtin();

  // `letter` must be a vowel letter (any case); std::invalid_argument
  // otherwise.
  const VowelCell& Lookup(VowelRow row, char32_t letter, bool stressed,
                          bool letter_follows) const;

  // Cell expanded to phonemes: optional J plus the vowel with the stress
  // flag applied.
  std::vector<Phoneme> Phonemes(VowelRow row, char32_t letter, bool stressed,
                                bool letter_follows) const;

  bool operator==(const VowelTable& other) const = default;

 private:
  // [row][stressed][letter_follows][column]
  VowelCell cells_[4][2][2][10] = {};
};

}  // namespace ruphon

#endif  // RUPHON_VOWEL_TABLE_H_
