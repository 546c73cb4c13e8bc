// ruphon/morph_tag.h
//
// Universal-Dependencies-style morphological tags: a POS plus Feature=Value
// pairs.  Canonical form is "POS k1=v1 k2=v2 ..." with features sorted by
// key; both space- and pipe-separated feature lists parse.

#ifndef RUPHON_MORPH_TAG_H_
#define RUPHON_MORPH_TAG_H_

#include <string>
#include <utility>
#include <vector>

namespace ruphon {

struct MorphTag {
  std::string pos;  // "NOUN", "ADP", placeholder "X", ...
  // Sorted by key, unique keys.
  std::vector<std::pair<std::string, std::string>> features;

  bool operator==(const MorphTag& other) const = default;

  // "NOUN Animacy=Inan Case=Gen Gender=Masc Number=Sing"; bare POS or
  // POS with the "_" placeholder yields an empty feature list.  Malformed
  // feature chunks (no '=') raise std::invalid_argument.
  static MorphTag Parse(const std::string& text);

  std::string Canonical() const;

  bool Empty() const { return pos.empty(); }
};

}  // namespace ruphon

#endif  // RUPHON_MORPH_TAG_H_
