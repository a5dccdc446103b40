#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "traintrack/morphism.hpp"
#include "traintrack/word.hpp"

using namespace tt;
using fixtures::w;

namespace {

Word random_word(std::mt19937& rng, std::size_t alphabet, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(alphabet - 1));
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<Letter> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    letters.push_back(Letter{gen(rng), flip(rng) == 1});
  }
  return Word(std::move(letters));
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(reduce_word({{0, false}, {1, false}, {1, true}, {2, false}}, 3) == w("a c"));
  CHECK(reduce_word({{0, false}, {0, true}}, 3) == Word());
  CHECK(reduce_word({{2, false}, {0, false}, {0, false}, {0, false}}, 3) == w("c a a a"));

  CHECK_THROWS_AS(reduce_word({{5, false}}, 3), MalformedInputError);
}

TEST_CASE("reduction is idempotent and length-non-increasing") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw;
    std::uniform_int_distribution<std::uint32_t> gen(0, 2);
    std::uniform_int_distribution<int> flip(0, 1);
    std::uniform_int_distribution<std::size_t> len(0, 24);
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) raw.push_back(Letter{gen(rng), flip(rng) == 1});

    const Word once(raw);
    CHECK(once.size() <= raw.size());
    CHECK(Word(once.letters()) == once);
    for (std::size_t i = 0; i + 1 < once.size(); ++i) {
      CHECK(once[i + 1] != once[i].inverted());
    }
  }
}

TEST_CASE("morphism application on the BK map") {
  const BasisMorphism& phi = *fixtures::bk().basis;
  CHECK(apply_morphism(phi, w("a")) == w("b"));
  CHECK(apply_morphism(phi, w("a b")) == w("b c a a a"));
  CHECK(apply_morphism(phi, Word()) == Word());

  const BasisMorphism two(2, {w("a", 2), w("b", 2)});
  CHECK_THROWS_AS(apply_morphism(two, w("c")), MalformedInputError);
}

TEST_CASE("morphism iteration") {
  const BasisMorphism& tribo = *fixtures::tribonacci().basis;
  CHECK(iterate_morphism(tribo, w("a"), 2) == w("a b a c"));
  CHECK(iterate_morphism(tribo, w("a"), 8).size() == 149);

  const BasisMorphism& bk = *fixtures::bk().basis;
  CHECK(iterate_morphism(bk, w("a"), 0) == w("a"));
}

TEST_CASE("inverse pair certificates") {
  const BasisMorphism& phi = *fixtures::bk().basis;
  const BasisMorphism& phi_inv = *fixtures::bk_inv().basis;
  CHECK(verify_inverse_pair(phi, phi_inv));
  CHECK(verify_inverse_pair(BasisMorphism::identity(3), BasisMorphism::identity(3)));
  CHECK_FALSE(verify_inverse_pair(phi, phi));

  const BasisMorphism& tribo = *fixtures::tribonacci().basis;
  CHECK_THROWS_AS(verify_inverse_pair(tribo, BasisMorphism::identity(2)),
                  MalformedInputError);
}

TEST_CASE("homomorphism property on random words") {
  const BasisMorphism& phi = *fixtures::bk().basis;
  const BasisMorphism& tribo = *fixtures::tribonacci().basis;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(rng, 3, 20);
    const Word v = random_word(rng, 3, 20);
    for (const BasisMorphism* m : {&phi, &tribo}) {
      CHECK(apply_morphism(*m, u * v) == apply_morphism(*m, u) * apply_morphism(*m, v));
    }
  }
}

TEST_CASE("bi-Lipschitz bound for inverse pairs") {
  const BasisMorphism& phi = *fixtures::bk().basis;
  const BasisMorphism& phi_inv = *fixtures::bk_inv().basis;
  REQUIRE(verify_inverse_pair(phi, phi_inv));
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Word word = random_word(rng, 3, 30);
    const std::size_t image_len = apply_morphism(phi, word).size();
    CHECK(image_len * phi_inv.max_image_length() >= word.size());
  }
}

TEST_CASE("malformed morphisms are rejected") {
  CHECK_THROWS_AS(BasisMorphism(2, {Word(), w("a", 2)}), MalformedInputError);
  CHECK_THROWS_AS(BasisMorphism(2, {w("a c"), w("b")}), MalformedInputError);
}

TEST_CASE("word formatting round-trips") {
  const auto names = default_names(3);
  CHECK(format_word(w("c a' a' b"), names) == "c a' a' b");
  CHECK(format_word(Word(), names) == "1");
  CHECK(parse_word("c a' a' b", names) == w("c a' a' b"));
  CHECK_THROWS_AS(parse_word("q", names), MalformedInputError);
}
