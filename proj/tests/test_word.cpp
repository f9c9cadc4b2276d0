#include <doctest.h>

#include <stdexcept>

#include <random>

#include "wordrank/word.hpp"

using namespace wordrank;

namespace {

Word random_reduced_word(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  Word w;
  w.rank = rank;
  while (w.length() < len) {
    int x = gen(rng) * (coin(rng) ? 1 : -1);
    if (!w.letters.empty() && w.letters.back() == -x) continue;
    w.letters.push_back(x);
  }
  return w;
}

}  // namespace

TEST_CASE("parse_word transliterates and reduces") {
  Word w = parse_word("abAB");
  CHECK(w.letters == std::vector<int>{1, 2, -1, -2});
  CHECK(w.rank == 2);

  Word e = parse_word("aA");
  CHECK(e.letters.empty());
  CHECK(e.rank == 1);

  Word t = parse_word("aBcbbaCac");
  CHECK(t.letters == std::vector<int>{1, -2, 3, 2, 2, 1, -3, 1, 3});
  CHECK(t.rank == 3);

  CHECK(parse_word("").rank == 1);
  CHECK(parse_word("abc", 5).rank == 5);
}

TEST_CASE("parse_word rejects bad input") {
  CHECK_THROWS_WITH_AS(parse_word("ab1"), doctest::Contains("position 2"),
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_word("abc", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a", 0), std::invalid_argument);
}

TEST_CASE("render_word inverts parse_word") {
  for (const char* s : {"", "a", "abAB", "aBcbbaCac", "zZy"})
    CHECK(render_word(parse_word(s)) == render_word(parse_word(render_word(parse_word(s)))));
  CHECK(render_word(parse_word("abAB")) == "abAB");
}

TEST_CASE("cyclic_reduce strips conjugation") {
  Word w;
  w.rank = 2;
  w.letters = {1, 2, -1};
  CyclicReduction r = cyclic_reduce(w);
  CHECK(r.core.letters == std::vector<int>{2});
  CHECK(r.conjugator.letters == std::vector<int>{1});

  Word c = parse_word("abAB");
  CHECK(cyclic_reduce(c).core == c);
  CHECK(cyclic_reduce(c).conjugator.letters.empty());

  Word e;
  CHECK(cyclic_reduce(e).core.letters.empty());
  CHECK(cyclic_reduce(e).conjugator.letters.empty());
}

TEST_CASE("word_power repeats the cyclic word") {
  CHECK(word_power(parse_word("a"), 3).letters == std::vector<int>{1, 1, 1});
  CHECK(word_power(parse_word("ab"), 2).letters == std::vector<int>{1, 2, 1, 2});
  Word c = parse_word("abAB");
  CHECK(word_power(c, 1) == c);
  CHECK_THROWS_AS(word_power(parse_word("a"), 0), std::domain_error);
}

TEST_CASE("exponent_vector counts signed occurrences") {
  CHECK(exponent_vector(parse_word("abAB")) == std::vector<long>{0, 0});
  CHECK(exponent_vector(parse_word("aaa")) == std::vector<long>{3});
  CHECK(exponent_vector(parse_word("aBcbbaCac")) == std::vector<long>{3, 1, 1});
}

TEST_CASE("is_proper_power finds the maximal root") {
  auto p = is_proper_power(parse_word("aaa"));
  REQUIRE(p.has_value());
  CHECK(p->root.letters == std::vector<int>{1});
  CHECK(p->exponent == 3);

  auto q = is_proper_power(parse_word("abab"));
  REQUIRE(q.has_value());
  CHECK(q->root.letters == std::vector<int>{1, 2});
  CHECK(q->exponent == 2);

  CHECK_FALSE(is_proper_power(parse_word("abAB")).has_value());
  CHECK_THROWS_AS(is_proper_power(Word{}), std::domain_error);
}

TEST_CASE("word properties on random samples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_reduced_word(rng, 2 + trial % 2, 1 + trial % 9);
    CHECK(parse_word(render_word(w)).letters == w.letters);

    Word core = cyclic_reduce(w).core;
    CHECK(cyclic_reduce(core).core == core);
    CHECK(is_cyclically_reduced(core));

    if (!core.empty()) {
      int n = 1 + trial % 4;
      Word p = word_power(core, n);
      std::vector<long> ev = exponent_vector(core);
      std::vector<long> pv = exponent_vector(p);
      for (size_t i = 0; i < ev.size(); ++i) CHECK(pv[i] == n * ev[i]);

      if (auto d = is_proper_power(p)) {
        CHECK(p.length() % d->root.length() == 0);
        CHECK(word_power(d->root, d->exponent) == p);
      }
      if (n >= 2) CHECK(is_proper_power(p).has_value());
    }
  }
}

TEST_CASE("letter_counts splits by sign") {
  auto c = letter_counts(parse_word("aBcbbaCac"));
  CHECK(c[0] == std::pair<int, int>{3, 0});
  CHECK(c[1] == std::pair<int, int>{2, 1});
  CHECK(c[2] == std::pair<int, int>{2, 1});
}
