#include "mercurial/stemming.hpp"

#include <algorithm>

namespace mercurial {

SuffixStemmer::SuffixStemmer(std::vector<std::string> suffixes,
                             std::size_t min_stem_bytes)
    : suffixes_(std::move(suffixes)), min_stem_(min_stem_bytes) {
  std::sort(suffixes_.begin(), suffixes_.end(),
            [](const std::string& a, const std::string& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  suffixes_.erase(std::unique(suffixes_.begin(), suffixes_.end()),
                  suffixes_.end());
}

std::string SuffixStemmer::stem(std::string_view word) const {
  std::string w(word);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& suffix : suffixes_) {
      if (w.size() >= suffix.size() + min_stem_ && w.ends_with(suffix)) {
        w.resize(w.size() - suffix.size());
        changed = true;
        break;
      }
    }
  }
  return w;
}

const Stemmer& italian_stemmer() {
  static const SuffixStemmer instance(
      {
          // verb conjugations
          "eranno", "iranno", "assero", "essero", "issero", "erebbe", "irebbe",
          "eremo", "iremo", "avamo", "evamo", "ivamo", "arono", "erono",
          "irono", "avano", "evano", "ivano", "erete", "irete", "avate",
          "evate", "ivate", "ando", "endo", "iamo", "ammo", "emmo", "immo",
          "erai", "irai", "erei", "irei", "are", "ere", "ire", "ato", "ata",
          "ati", "ate", "uto", "uta", "uti", "ute", "ito", "ita", "iti", "ite",
          "avo", "avi", "ava", "evo", "evi", "eva", "ivo", "ivi", "iva", "ano",
          "ono",
          // nominal and derivational suffixes
          "azione", "azioni", "amento", "amenti", "imento", "imenti", "atore",
          "atori", "atrice", "atrici", "abile", "ibile", "mente", "ione",
          "ioni", "anza", "enza", "ezza", "ezze", "ista", "iste", "isti",
          "one", "oni", "on", "io", "ia", "ie",
          // final vowels, plain and accented (UTF-8)
          "a", "e", "i", "o", "u", "à", "è", "é", "ì",
          "ò", "ù",
      },
      3);
  return instance;
}

}  // namespace mercurial
