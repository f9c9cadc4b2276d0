#pragma once

#include <optional>
#include <string>
#include <vector>

namespace wordrank {

// A freely reduced word in a free group. Letters are signed generator
// indices: +i is the i-th basis element, -i its inverse (1-based).
struct Word {
  std::vector<int> letters;
  int rank = 1;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word& o) const { return letters == o.letters && rank == o.rank; }
};

// Lowercase a-z are generators 1..26, uppercase A-Z their inverses. The
// result is freely reduced; rank defaults to the largest index mentioned
// (1 for the empty string).
Word parse_word(const std::string& text, std::optional<int> rank = std::nullopt);

// Inverse of parse_word on its canonical image.
std::string render_word(const Word& w);

// Free reduction (cancels adjacent x x^-1 pairs).
std::vector<int> free_reduce(const std::vector<int>& letters);

Word inverse(const Word& w);

// w = conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// The cyclic word w^n; requires w cyclically reduced and nonempty, n >= 1.
Word word_power(const Word& w, int n);

// Entry i-1 = (#occurrences of +i) - (#occurrences of -i).
std::vector<long> exponent_vector(const Word& w);

// If w (cyclically reduced, nonempty) equals u^t with t maximal and t >= 2,
// returns (u, t); otherwise nothing.
struct PowerDecomposition {
  Word root;
  int exponent;
};
std::optional<PowerDecomposition> is_proper_power(const Word& w);

// Occurrence count of each signed letter, as a pair (positive, negative)
// per generator. Used by the letter-count vanishing shortcut.
std::vector<std::pair<int, int>> letter_counts(const Word& w);

}  // namespace wordrank
