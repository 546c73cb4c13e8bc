// ruphon/text_utils.cc

#include "ruphon/text_utils.h"

#include <sstream>
#include <stdexcept>

namespace ruphon {

std::u32string DecodeUtf8(const std::string& text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw std::runtime_error("invalid UTF-8 lead byte at offset " +
                               std::to_string(i));
    }
    if (i + len > text.size()) {
      throw std::runtime_error("truncated UTF-8 sequence at offset " +
                               std::to_string(i));
    }
    for (size_t k = 1; k < len; ++k) {
      unsigned char bk = static_cast<unsigned char>(text[i + k]);
      if ((bk & 0xC0) != 0x80) {
        throw std::runtime_error("invalid UTF-8 continuation at offset " +
                                 std::to_string(i + k));
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string EncodeUtf8(const std::u32string& codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 2);
  for (char32_t cp : codepoints) out += EncodeUtf8(cp);
  return out;
}

char32_t ToLowerCodepoint(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0x0410 && c <= 0x042F) return c + 0x20;  // А-Я -> а-я
  if (c == 0x0401) return 0x0451;                   // Ё -> ё
  return c;
}

std::string ToLowerUtf8(const std::string& text) {
  std::u32string cps = DecodeUtf8(text);
  for (char32_t& c : cps) c = ToLowerCodepoint(c);
  return EncodeUtf8(cps);
}

bool IsCyrillicLetter(char32_t c) {
  char32_t l = ToLowerCodepoint(c);
  return (l >= 0x0430 && l <= 0x044F) || l == 0x0451;
}

bool IsCyrillicVowel(char32_t c) {
  switch (ToLowerCodepoint(c)) {
    case U'а':
    case U'е':
    case U'ё':
    case U'и':
    case U'о':
    case U'у':
    case U'ы':
    case U'э':
    case U'ю':
    case U'я':
      return true;
    default:
      return false;
  }
}

int CountCyrillicVowels(const std::string& word) {
  int n = 0;
  for (char32_t c : DecodeUtf8(word)) {
    if (IsCyrillicVowel(c)) ++n;
  }
  return n;
}

std::vector<std::string> SplitWhitespace(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

std::vector<std::string> SplitChar(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == sep) {
      fields.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  fields.push_back(current);
  return fields;
}

}  // namespace ruphon
