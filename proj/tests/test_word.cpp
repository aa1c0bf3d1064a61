#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "knotrep/presentation.hpp"
#include "knotrep/target_group.hpp"

using namespace knotrep;

namespace {

const std::vector<std::string> kNames = {"a", "b", "c"};

Word w(const char* text) { return detail::parse_word(text, kNames); }

Word rand_word(std::mt19937& rng, std::size_t len) {
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  Word out;
  for (std::size_t i = 0; i < len; ++i) {
    int x = letter(rng);
    out.letters.push_back(std::int16_t(coin(rng) ? x : -x));
  }
  return out;
}

}  // namespace

TEST_CASE("free and cyclic reduction") {
  REQUIRE(free_reduce(w("aA")).empty());
  REQUIRE(free_reduce(w("abBA")).empty());
  REQUIRE(free_reduce(w("babB")) == w("ba"));
  REQUIRE(cyclic_reduce(w("babB")) == w("ba"));
  REQUIRE(cyclic_reduce(w("Acba")) == w("cb"));
  REQUIRE(invert(w("ab")) == w("BA"));
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Word u = rand_word(rng, 12);
    REQUIRE(free_reduce(free_reduce(u)) == free_reduce(u));
    REQUIRE(free_reduce(concat(u, invert(u))).empty());
  }
}

TEST_CASE("evaluate is a monoid homomorphism") {
  Perm pa = parse_cycles("(1 2)", 3);
  Perm pb = parse_cycles("(1 3)", 3);
  std::vector<Perm> images = {pa, pb, Perm::identity(3)};
  REQUIRE(format_cycles(evaluate(w("abA"), images)) == "(2 3)");
  REQUIRE(evaluate(Word{}, images, 3).is_identity());
  std::mt19937 rng(17);
  TargetGroup s4 = TargetGroup::symmetric(4);
  std::uniform_int_distribution<std::size_t> pick(0, s4.size() - 1);
  for (int i = 0; i < 60; ++i) {
    std::vector<Perm> im = {s4.elements()[pick(rng)], s4.elements()[pick(rng)],
                            s4.elements()[pick(rng)]};
    Word u = rand_word(rng, 8), v = rand_word(rng, 8);
    REQUIRE(evaluate(concat(u, v), im) == evaluate(u, im) * evaluate(v, im));
    REQUIRE(evaluate(invert(u), im) == evaluate(u, im).inverse());
    REQUIRE(evaluate(free_reduce(u), im) == evaluate(u, im));
  }
}

TEST_CASE("trefoil peripheral words evaluate to the published images") {
  // x1 -> (1 2 3 4 5), x2 -> (1 3 5 4 2); the right-handed longitude word
  // makes the meridian-longitude product trivial, the left-handed one a
  // 5-cycle.
  std::vector<std::string> names = {"a", "b"};
  std::vector<Perm> im = {parse_cycles("(1 2 3 4 5)", 5),
                          parse_cycles("(1 3 5 4 2)", 5)};
  Word rel = detail::parse_word("babABA", names);
  REQUIRE(evaluate(rel, im).is_identity());
  Word ml_right = detail::parse_word("abaBabAAA", names);
  REQUIRE(evaluate(ml_right, im).is_identity());
  Word ml_left = detail::parse_word("aBAbABaaa", names);
  REQUIRE(format_cycles(evaluate(ml_left, im)) == "(1 3 5 2 4)");
}
