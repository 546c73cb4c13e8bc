// ruphon/transcriber.h
//
// Accented-word and phrase transcription.  The per-word pipeline:
//
//   0  exclusion rewrite (whole accented word);
//   1  СТН/СТЛ/НТГ drop Т;        2  ЗДН/ЗДЦ/НДЦ/РДЦ/НДШ/ГДТ drop Д;
//   3  ЛНЦ drops Л;               4  affricate merges (СЧ/ЖЧ -> Щ,
//      ТС/ТЬС/ТЦ/ДС/ДЦ -> Ц, СШ -> Ш, ЗЖ -> Ж);
//   5  word-final ОГО/ЕГО/ГО -> ВО with an adverb exception list;
//   6  softness assimilation (modern or classic trigger sets);
//   7  vowels via the context table;  8  consonants: palatalization,
//      final devoicing, regressive voicing assimilation (В never triggers);
//   9/10  adjacent identical or name-prefix phonemes merge into longs.
//
// Steps 6-8 run as one right-to-left sweep so each consonant already sees
// the phoneme that follows it.  Phrases concatenate word transcriptions
// inside a syntagm (between sil markers) so devoicing, softening and
// merging also act across word junctions; hyphen parts behave the same way
// inside a word.

#ifndef RUPHON_TRANSCRIBER_H_
#define RUPHON_TRANSCRIBER_H_

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ruphon/phoneme.h"
#include "ruphon/vowel_table.h"

namespace ruphon {

enum class TranscriptionMode { kModern, kClassic };

struct PhraseToken {
  bool is_sil = false;
  std::string accented;  // empty for sil

  static PhraseToken Sil() { return PhraseToken{true, ""}; }
  static PhraseToken Word(std::string accented) {
    return PhraseToken{false, std::move(accented)};
  }
};

// Phone positions [begin, end) owned by each input token.  A long phoneme
// merged across a junction belongs to the right-hand word.
struct WordSpan {
  int begin = 0;
  int end = 0;
};

struct PhraseTranscription {
  std::vector<Phoneme> phones;
  std::vector<WordSpan> spans;  // parallel to the input tokens
};

struct WordTrace {
  std::string rewritten;           // after the exclusion rewrite
  std::string simplified;          // after letter rules 1-5
  std::vector<Phoneme> pre_merge;  // before long-merging
  std::vector<Phoneme> phones;
};

class Transcriber {
 public:
  struct Options {
    TranscriptionMode mode = TranscriptionMode::kModern;
    std::map<std::string, std::string> exclusions;
    VowelTable vowel_table = VowelTable::Builtin();
    std::set<std::string> genitive_exceptions = {"много", "дорого", "строго"};
    std::ostream* diag = &std::cerr;  // warnings; nullptr silences them
  };

  Transcriber() : Transcriber(Options{}) {}
  explicit Transcriber(Options options);

  // Letter-level stages, exposed for direct testing.  All take and return
  // accented strings (the '+' marker stays glued to its vowel).
  std::string ApplyExclusions(const std::string& accented) const;
  static std::string SimplifyClusters(const std::string& accented);
  static std::string MergeAffricates(const std::string& accented);
  std::string RewriteGenitive(const std::string& accented) const;

  // Long-merging over a finished phoneme sequence: both operands must be
  // short, equal names or name(x) a proper prefix of name(y) merge into the
  // long variant of y; sil never merges.  Single left-to-right pass reaches
  // the fixpoint because a long result can't merge again.
  static std::vector<Phoneme> MergeLong(std::vector<Phoneme> phones);

  // `accented` must be Cyrillic letters plus optional '-' and at most one
  // '+' after a vowel; violations raise std::runtime_error naming the
  // character.  A word with no '+' treats its last 'ё' as stressed, other
  // vowels unstressed.
  std::vector<Phoneme> WordToPhonemes(const std::string& accented) const;

  WordTrace TraceWord(const std::string& accented) const;

  PhraseTranscription PhraseToPhonemes(
      const std::vector<PhraseToken>& tokens) const;

  TranscriptionMode mode() const { return options_.mode; }

  // Unstressed ё reaches otherwise-dead table cells; the hits are counted
  // rather than asserted away because explicit stress elsewhere in a word
  // legitimately de-stresses its ё.
  std::uint64_t UnstressedYoCellHits() const {
    return unstressed_yo_hits_.load();
  }

 private:
  struct Cell {
    char32_t ch = 0;
    bool stressed = false;
  };
  using Part = std::vector<Cell>;

  std::vector<Part> ParseAccented(const std::string& accented) const;
  std::vector<Phoneme> TranscribePart(const Part& part,
                                      const Phoneme* next) const;
  std::vector<std::vector<Phoneme>> PartsToPhonemes(
      const std::string& accented, const Phoneme* next) const;

  Options options_;
  mutable std::atomic<std::uint64_t> unstressed_yo_hits_{0};
};

}  // namespace ruphon

#endif  // RUPHON_TRANSCRIBER_H_
