// ruphon/vowel_table.cc

#include "ruphon/vowel_table.h"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "ruphon/text_utils.h"

namespace ruphon {

namespace {

// Matches data/vowel_table.tsv; the file is the editable copy of record.
constexpr const char* kBuiltinTableTsv = R"(
iotated	stressed	final	J O0	J U0	J A0	J E0	O0	U0	A0	E0	Y0	I0
iotated	stressed	letter	J O0	J U0	J A0	J E0	O0	U0	A0	E0	Y0	I0
iotated	unstressed	final	J O	J U	J A	J I	A	U	A	Y	Y	I
iotated	unstressed	letter	J O	J U	J I	J I	A	U	A	Y	Y	I
after_soft	stressed	final	O0	U0	A0	E0	O0	U0	A0	E0	Y0	I0
after_soft	stressed	letter	O0	U0	A0	E0	O0	U0	A0	E0	Y0	I0
after_soft	unstressed	final	O	U	A	I	A	U	A	Y	Y	I
after_soft	unstressed	letter	O	U	I	I	I	U	I	Y	Y	I
after_hard	stressed	final	O0	U0	A0	E0	O0	U0	A0	E0	Y0	Y0
after_hard	stressed	letter	O0	U0	A0	E0	O0	U0	A0	E0	Y0	Y0
after_hard	unstressed	final	O	U	A	Y	A	U	A	Y	Y	Y
after_hard	unstressed	letter	O	U	Y	Y	A	U	A	Y	Y	Y
after_paired	stressed	final	O0	U0	A0	E0	O0	U0	A0	E0	Y0	I0
after_paired	stressed	letter	O0	U0	A0	E0	O0	U0	A0	E0	Y0	I0
after_paired	unstressed	final	O	U	A	I	A	U	A	Y	Y	I
after_paired	unstressed	letter	O	U	I	I	A	U	A	Y	Y	I
)";

int RowIndex(const std::string& name, const std::string& where) {
  if (name == "iotated") return 0;
  if (name == "after_soft") return 1;
  if (name == "after_hard") return 2;
  if (name == "after_paired") return 3;
  throw std::runtime_error(where + ": unknown row '" + name + "'");
}

int StressIndex(const std::string& name, const std::string& where) {
  if (name == "unstressed") return 0;
  if (name == "stressed") return 1;
  throw std::runtime_error(where + ": unknown stress column '" + name + "'");
}

int NextIndex(const std::string& name, const std::string& where) {
  if (name == "final") return 0;
  if (name == "letter") return 1;
  throw std::runtime_error(where + ": unknown context column '" + name + "'");
}

VowelCell ParseCell(const std::string& text, bool stressed,
                    const std::string& where) {
  std::vector<std::string> names = SplitWhitespace(text);
  VowelCell cell;
  size_t vowel_at = 0;
  if (names.size() == 2 && names[0] == "J") {
    cell.iot_prefix = true;
    vowel_at = 1;
  } else if (names.size() != 1) {
    throw std::runtime_error(where + ": cell '" + text +
                             "' must be a vowel or J + vowel");
  }
  Phoneme p;
  try {
    p = ParsePhonemeName(names[vowel_at]);
  } catch (const std::exception& e) {
    throw std::runtime_error(where + ": " + e.what());
  }
  if (!p.IsVowel() || p.long_mark) {
    throw std::runtime_error(where + ": cell '" + text +
                             "' is not a plain vowel phoneme");
  }
  if (p.stressed != stressed) {
    throw std::runtime_error(where + ": cell '" + text + "' stress does not "
                             "match its column");
  }
  cell.vowel = p.quality;
  return cell;
}

}  // namespace

VowelTable VowelTable::Parse(std::istream& in, const std::string& name) {
  VowelTable table;
  bool seen[4][2][2] = {};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string where = name + ":" + std::to_string(line_no);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields = SplitChar(line, '\t');
    if (fields.size() != 13) {
      throw std::runtime_error(where + ": expected 13 tab-separated fields, "
                               "got " + std::to_string(fields.size()));
    }
    int row = RowIndex(fields[0], where);
    int stress = StressIndex(fields[1], where);
    int next = NextIndex(fields[2], where);
    if (seen[row][stress][next]) {
      throw std::runtime_error(where + ": duplicate table line");
    }
    seen[row][stress][next] = true;
    for (int col = 0; col < 10; ++col) {
      table.cells_[row][stress][next][col] =
          ParseCell(fields[3 + col], stress == 1, where);
    }
  }
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 2; ++s) {
      for (int n = 0; n < 2; ++n) {
        if (!seen[r][s][n]) {
          throw std::runtime_error(name + ": incomplete vowel table");
        }
      }
    }
  }
  return table;
}

VowelTable VowelTable::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open vowel table: " + path);
  }
  return Parse(in, path);
}

const VowelTable& VowelTable::Builtin() {
  static const VowelTable table = [] {
    std::istringstream in(kBuiltinTableTsv);
    return Parse(in, "<builtin vowel table>");
  }();
  return table;
}

const VowelCell& VowelTable::Lookup(VowelRow row, char32_t letter,
                                    bool stressed,
                                    bool letter_follows) const {
  char32_t lower = ToLowerCodepoint(letter);
  for (int col = 0; col < 10; ++col) {
    if (kVowelColumns[col] == lower) {
      return cells_[static_cast<int>(row)][stressed ? 1 : 0]
                   [letter_follows ? 1 : 0][col];
    }
  }
  throw std::invalid_argument("not a vowel letter: " + EncodeUtf8(letter));
}

std::vector<Phoneme> VowelTable::Phonemes(VowelRow row, char32_t letter,
                                          bool stressed,
                                          bool letter_follows) const {
  const VowelCell& cell = Lookup(row, letter, stressed, letter_follows);
  std::vector<Phoneme> out;
  if (cell.iot_prefix) out.push_back(MakePhoneme(PhonemeQuality::kJ));
  out.push_back(MakePhoneme(cell.vowel, stressed));
  return out;
}

}  // namespace ruphon
