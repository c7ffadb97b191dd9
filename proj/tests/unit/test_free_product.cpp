#include <doctest.h>

#include <random>

#include "lfg/catalog.hpp"
#include "lfg/free_product.hpp"
#include "support/oracles.hpp"

using namespace lfg::group;

namespace {

struct Fixture
{
  FreeProduct fp{cyclic(2), cyclic(3)};
  oracle::Tables tables;

  Fixture()
  {
    for (int f = 0; f < 2; ++f) {
      const auto &E = fp.factor(f).enumerate();
      std::vector<std::vector<std::uint32_t>> t(E.size(), std::vector<std::uint32_t>(E.size()));
      for (Elem x = 0; x < E.size(); ++x)
        for (Elem y = 0; y < E.size(); ++y)
          t[x][y] = E.mul(x, y);
      tables.mul.push_back(std::move(t));
    }
  }

  std::vector<oracle::RawLetter> random_raw(std::mt19937_64 &rng, std::size_t max_len) const
  {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::vector<oracle::RawLetter> w(len(rng));
    for (auto &l : w) {
      l.factor = static_cast<int>(rng() % 2);
      l.elem = static_cast<std::uint32_t>(rng() % fp.factor(l.factor).order());
    }
    return w;
  }

  FPWord reduce(const std::vector<oracle::RawLetter> &w) const
  {
    std::vector<Letter> raw;
    for (const auto &l : w)
      raw.push_back({static_cast<std::uint8_t>(l.factor), l.elem});
    return fp.reduce(raw);
  }

  FPWord random_word(std::mt19937_64 &rng, std::size_t max_len) const { return reduce(random_raw(rng, max_len)); }

  std::vector<oracle::RawLetter> raw(const FPWord &w) const
  {
    std::vector<oracle::RawLetter> out;
    for (const auto &l : w.letters)
      out.push_back({l.factor, l.elem});
    return out;
  }
};

} // namespace

TEST_CASE("fp_reduce examples")
{
  Fixture fx;
  const auto &E1 = fx.fp.factor(1).enumerate();
  const Elem g = 1, ginv = E1.inverse(1);
  REQUIRE(g != ginv);

  std::vector<Letter> cancel{{1, g}, {1, ginv}};
  CHECK(fx.fp.reduce(cancel).letters.empty());

  std::vector<Letter> merge{{1, g}, {1, g}};
  auto m = fx.fp.reduce(merge);
  REQUIRE(m.letters.size() == 1);
  CHECK(m.letters[0] == Letter{1, E1.mul(g, g)});

  std::vector<Letter> alt{{0, 1}, {1, g}, {0, 1}};
  CHECK(fx.fp.reduce(alt).letters == alt);

  std::vector<Letter> identity_letters{{0, 0}, {1, 0}};
  CHECK(fx.fp.reduce(identity_letters).letters.empty());

  std::vector<Letter> bad_elem{{0, 5}};
  CHECK_THROWS_AS(fx.fp.reduce(bad_elem), std::invalid_argument);
  std::vector<Letter> bad_factor{{2, 0}};
  CHECK_THROWS_AS(fx.fp.reduce(bad_factor), std::invalid_argument);
}

TEST_CASE("fp_reduce collapses across cancellations")
{
  Fixture fx;
  // a b b^-1 a = a a = e in C2 * C3
  std::vector<Letter> w{{0, 1}, {1, 1}, {1, fx.fp.factor(1).enumerate().inverse(1)}, {0, 1}};
  CHECK(fx.fp.reduce(w).letters.empty());
}

TEST_CASE("fp_multiply examples")
{
  Fixture fx;
  std::mt19937_64 rng(oracle::kSeed + 20);
  auto w = fx.random_word(rng, 6);
  CHECK(fx.fp.multiply(fx.fp.identity(), w) == w);
  CHECK(fx.fp.multiply(w, fx.fp.identity()) == w);

  const auto &E1 = fx.fp.factor(1).enumerate();
  const Elem g = 1, h = 2;
  FPWord w1 = fx.fp.reduce(std::vector<Letter>{{1, g}});
  FPWord w2 = fx.fp.reduce(std::vector<Letter>{{1, E1.inverse(g)}, {0, 1}, {1, h}});
  // (g)(g^-1 x h) = (x h)
  CHECK(fx.fp.multiply(w1, w2).letters == std::vector<Letter>{{0, 1}, {1, h}});

  FreeProduct other(cyclic(2), cyclic(2));
  CHECK_THROWS_AS(fx.fp.multiply(w, other.identity()), std::invalid_argument);
}

TEST_CASE("reduction is confluent against two independent strategies")
{
  Fixture fx;
  std::mt19937_64 rng(oracle::kSeed + 21);
  for (int t = 0; t < 1000; ++t) {
    auto raw = fx.random_raw(rng, 12);
    auto left = oracle::reduce_leftmost(raw, fx.tables);
    auto right = oracle::reduce_rightmost(raw, fx.tables);
    REQUIRE(left == right);
    auto w = fx.reduce(raw);
    REQUIRE(fx.raw(w) == left);
    REQUIRE(fx.fp.is_reduced(w));
    REQUIRE(fx.reduce(fx.raw(w)) == w);
  }
}

TEST_CASE("group axioms for fp_multiply on random triples")
{
  Fixture fx;
  std::mt19937_64 rng(oracle::kSeed + 22);
  const auto &fp = fx.fp;
  for (int t = 0; t < 1000; ++t) {
    auto a = fx.random_word(rng, 6), b = fx.random_word(rng, 6), c = fx.random_word(rng, 6);
    REQUIRE(fp.multiply(fp.multiply(a, b), c) == fp.multiply(a, fp.multiply(b, c)));
    REQUIRE(fp.multiply(a, fp.inverse(a)) == fp.identity());
    REQUIRE(fp.multiply(fp.inverse(a), a) == fp.identity());
    REQUIRE(fp.multiply(fp.identity(), a) == a);

    // the inverse is the reversed word of inverted letters
    std::vector<Letter> rev;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
      rev.push_back({it->factor, fp.factor(it->factor).enumerate().inverse(it->elem)});
    REQUIRE(fp.inverse(a).letters == rev);
  }
}

TEST_CASE("free product over larger factors")
{
  FreeProduct fp(named_group("S3"), cyclic(4));
  std::vector<Letter> w{{0, 1}, {0, 2}, {1, 1}, {1, 3}, {0, 0}};
  auto r = fp.reduce(w);
  CHECK(fp.is_reduced(r));
  CHECK(fp.multiply(r, fp.inverse(r)) == fp.identity());
  CHECK_FALSE(fp.format(r).empty());
}
