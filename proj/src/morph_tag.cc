// ruphon/morph_tag.cc

#include "ruphon/morph_tag.h"

#include <algorithm>
#include <stdexcept>

#include "ruphon/text_utils.h"

namespace ruphon {

MorphTag MorphTag::Parse(const std::string& text) {
  MorphTag tag;
  std::vector<std::string> chunks = SplitWhitespace(text);
  if (chunks.empty()) {
    throw std::invalid_argument("empty morphological tag");
  }
  tag.pos = chunks[0];
  for (size_t i = 1; i < chunks.size(); ++i) {
    // Taggers often join features with '|'; split those too.
    for (const std::string& piece : SplitChar(chunks[i], '|')) {
      if (piece.empty() || piece == "_") continue;
      size_t eq = piece.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == piece.size()) {
        throw std::invalid_argument("malformed feature '" + piece +
                                    "' in tag '" + text + "'");
      }
      tag.features.emplace_back(piece.substr(0, eq), piece.substr(eq + 1));
    }
  }
  std::sort(tag.features.begin(), tag.features.end());
  tag.features.erase(std::unique(tag.features.begin(), tag.features.end()),
                     tag.features.end());
  return tag;
}

std::string MorphTag::Canonical() const {
  std::string out = pos;
  for (const auto& [key, value] : features) {
    out += ' ';
    out += key;
    out += '=';
    out += value;
  }
  return out;
}

}  // namespace ruphon
