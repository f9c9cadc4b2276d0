#include "wordrank/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wordrank {

std::vector<int> free_reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int x : letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word parse_word(const std::string& text, std::optional<int> rank) {
  std::vector<int> letters;
  letters.reserve(text.size());
  int max_index = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int x;
    if (c >= 'a' && c <= 'z')
      x = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      x = -(c - 'A' + 1);
    else
      throw std::invalid_argument("parse_word: non-alphabetic character '" + std::string(1, c) +
                                  "' at position " + std::to_string(i));
    max_index = std::max(max_index, std::abs(x));
    letters.push_back(x);
  }
  Word w;
  w.letters = free_reduce(letters);
  if (rank) {
    if (*rank < 1) throw std::invalid_argument("parse_word: rank must be positive");
    if (*rank < max_index)
      throw std::invalid_argument("parse_word: explicit rank " + std::to_string(*rank) +
                                  " smaller than used generator index " +
                                  std::to_string(max_index));
    w.rank = *rank;
  } else {
    w.rank = std::max(1, max_index);
  }
  return w;
}

std::string render_word(const Word& w) {
  std::string out;
  out.reserve(w.letters.size());
  for (int x : w.letters) {
    int i = std::abs(x);
    if (i < 1 || i > 26) throw std::domain_error("render_word: generator index out of a-z range");
    out.push_back(x > 0 ? static_cast<char>('a' + i - 1) : static_cast<char>('A' + i - 1));
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.rank = w.rank;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  size_t lo = 0, hi = w.letters.size();
  while (hi - lo >= 2 && w.letters[lo] == -w.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.core.rank = w.rank;
  out.core.letters.assign(w.letters.begin() + lo, w.letters.begin() + hi);
  out.conjugator.rank = w.rank;
  out.conjugator.letters.assign(w.letters.begin(), w.letters.begin() + lo);
  return out;
}

bool is_cyclically_reduced(const Word& w) {
  if (w.letters.empty()) return true;
  if (free_reduce(w.letters) != w.letters) return false;
  return w.letters.front() != -w.letters.back();
}

Word word_power(const Word& w, int n) {
  if (n < 1) throw std::domain_error("word_power: exponent must be >= 1");
  if (w.empty() || !is_cyclically_reduced(w))
    throw std::invalid_argument("word_power: base must be cyclically reduced and nonempty");
  Word out;
  out.rank = w.rank;
  out.letters.reserve(w.letters.size() * n);
  for (int k = 0; k < n; ++k)
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  return out;
}

std::vector<long> exponent_vector(const Word& w) {
  std::vector<long> out(w.rank, 0);
  for (int x : w.letters) {
    if (x > 0)
      ++out[x - 1];
    else
      --out[-x - 1];
  }
  return out;
}

std::optional<PowerDecomposition> is_proper_power(const Word& w) {
  if (w.empty()) throw std::domain_error("is_proper_power: empty word");
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("is_proper_power: word must be cyclically reduced");
  int n = w.length();
  for (int p = 1; p <= n / 2; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (int i = 0; i + p < n && periodic; ++i) periodic = (w.letters[i] == w.letters[i + p]);
    if (periodic) {
      PowerDecomposition d;
      d.root.rank = w.rank;
      d.root.letters.assign(w.letters.begin(), w.letters.begin() + p);
      d.exponent = n / p;
      return d;
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> letter_counts(const Word& w) {
  std::vector<std::pair<int, int>> out(w.rank, {0, 0});
  for (int x : w.letters) {
    if (x > 0)
      ++out[x - 1].first;
    else
      ++out[-x - 1].second;
  }
  return out;
}

}  // namespace wordrank
