// ruphon/text_utils.h
//
// Small UTF-8 and Cyrillic helpers shared by the whole library.  Words are
// short, so everything round-trips through std::u32string codepoint buffers
// instead of iterating raw bytes in every rule.

#ifndef RUPHON_TEXT_UTILS_H_
#define RUPHON_TEXT_UTILS_H_

#include <string>
#include <vector>

namespace ruphon {

// Decodes UTF-8 into codepoints.  Malformed sequences raise std::runtime_error
// naming the byte offset; inputs come from user files, so silent replacement
// would hide data corruption.
std::u32string DecodeUtf8(const std::string& text);

std::string EncodeUtf8(const std::u32string& codepoints);
std::string EncodeUtf8(char32_t codepoint);

// ASCII A-Z and Cyrillic А-Я/Ё fold to lowercase; everything else unchanged.
char32_t ToLowerCodepoint(char32_t c);
std::string ToLowerUtf8(const std::string& text);

// Russian alphabet membership (а-я plus ё, case-insensitive).
bool IsCyrillicLetter(char32_t c);

// The ten Russian vowel letters (а е ё и о у ы э ю я), case-insensitive.
bool IsCyrillicVowel(char32_t c);

int CountCyrillicVowels(const std::string& word);

// Whitespace-separated fields; empty fields dropped.
std::vector<std::string> SplitWhitespace(const std::string& line);

// Splits on a single character, keeping empty fields (for TSV parsing).
std::vector<std::string> SplitChar(const std::string& line, char sep);

}  // namespace ruphon

#endif  // RUPHON_TEXT_UTILS_H_
