#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mercurial {

/// Reduces an inflected word to its root. Implementations must be
/// deterministic and idempotent: stem(stem(w)) == stem(w).
class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string stem(std::string_view word) const = 0;
};

// Iterative longest-suffix stripping: the longest listed suffix is removed
// while at least min_stem_bytes remain, until no suffix matches. The result
// is a fixpoint of the rule set, which makes the stemmer idempotent.
class SuffixStemmer final : public Stemmer {
 public:
  SuffixStemmer(std::vector<std::string> suffixes, std::size_t min_stem_bytes);

  std::string stem(std::string_view word) const override;

 private:
  std::vector<std::string> suffixes_;  // longest first
  std::size_t min_stem_;
};

/// Shared stemmer for Italian: verb conjugations, derivational suffixes and
/// final vowels (including accented ones). Maps abbandoneremo/abbandono to
/// "abband" and studio/studiare to "stud".
const Stemmer& italian_stemmer();

}  // namespace mercurial
