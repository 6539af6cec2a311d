#include <doctest.h>

#include <random>

#include "calegari/endomorphism.hpp"
#include "calegari/error.hpp"
#include "calegari/surface.hpp"
#include "support.hpp"

using namespace calegari;
using support::w;

namespace {
  std::vector<oracle::Raw> raw_images(FreeEndomorphism const& e) {
    std::vector<oracle::Raw> out;
    for (auto const& img : e.images()) {
      out.push_back(img.to_signed());
    }
    return out;
  }

  FreeEndomorphism random_endo(std::mt19937_64& rng, int n) {
    std::vector<Word> imgs;
    for (int i = 0; i < n; ++i) {
      imgs.push_back(support::from_raw(oracle::random_raw(rng, n, 6)));
    }
    return FreeEndomorphism(n, imgs);
  }
}  // namespace

TEST_CASE("construction checks rank") {
  CHECK_THROWS_AS(FreeEndomorphism(2, {w({1})}), RankError);
  CHECK_THROWS_AS(FreeEndomorphism(1, {w({2})}), RankError);
  CHECK(FreeEndomorphism::identity(3).image(2) == Word::generator(2));
  CHECK(FreeEndomorphism(2, {w({1, 2}), w({2})}).total_length() == 3);
}

TEST_CASE("apply and compose agree with substitution") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    auto f  = random_endo(rng, 3);
    auto g  = random_endo(rng, 3);
    auto fg = compose(f, g);
    for (int i = 1; i <= 3; ++i) {
      auto expected = oracle::substitute(raw_images(f), g.image(i).to_signed());
      CHECK(fg.image(i).to_signed() == expected);
    }
    auto word = support::from_raw(oracle::random_raw(rng, 3, 10));
    CHECK(apply(f, word).to_signed()
          == oracle::substitute(raw_images(f), word.to_signed()));
  }
  CHECK_THROWS_AS(compose(FreeEndomorphism::identity(2),
                          FreeEndomorphism::identity(3)),
                  RankError);
}

TEST_CASE("abelianization matrix is functorial") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 200; ++k) {
    auto f = random_endo(rng, 3);
    auto g = random_endo(rng, 3);
    CHECK(abelianization_matrix(compose(f, g))
          == abelianization_matrix(f) * abelianization_matrix(g));
    auto m = abelianization_matrix(f);
    for (int j = 1; j <= 3; ++j) {
      auto t = oracle::tally(f.image(j).to_signed(), 3);
      for (int i = 0; i < 3; ++i) {
        CHECK(m(i, j - 1) == t[i]);
      }
    }
  }
}

TEST_CASE("Nielsen moves") {
  std::vector<Word> t{w({1}), w({2})};
  apply_nielsen_move(t, {NielsenKind::left_mul, 1, 2});
  CHECK(t[0] == w({2, 1}));
  apply_nielsen_move(t, {NielsenKind::right_mul, 2, 1});
  CHECK(t[1] == w({2, 2, 1}));
  apply_nielsen_move(t, {NielsenKind::invert, 1, 1});
  CHECK(t[0] == w({-1, -2}));
  apply_nielsen_move(t, {NielsenKind::swap, 1, 2});
  CHECK(t[0] == w({2, 2, 1}));
  CHECK_THROWS(apply_nielsen_move(t, {NielsenKind::left_mul, 1, 1}));
  CHECK_THROWS(apply_nielsen_move(t, {NielsenKind::swap, 1, 3}));
  for (auto k : {NielsenKind::invert, NielsenKind::left_mul,
                 NielsenKind::right_mul, NielsenKind::swap}) {
    CHECK(nielsen_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(nielsen_kind_from_string("twist"), MalformedInput);
}

TEST_CASE("certification of random automorphisms") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto a    = random_automorphism(3, 20, seed);
    auto cert = certify_automorphism(a.forward());
    REQUIRE(cert.has_value());
    auto id = FreeEndomorphism::identity(3);
    CHECK(compose(cert->forward(), cert->inverse()) == id);
    CHECK(compose(cert->inverse(), cert->forward()) == id);
    CHECK(cert->inverse() == a.inverse());
    // The trace witnesses the inverse.
    auto rebuilt = Automorphism::from_parts(cert->forward(), cert->inverse(),
                                            cert->nielsen_trace());
    CHECK(rebuilt == *cert);
  }
}

TEST_CASE("non-automorphisms are rejected") {
  CHECK_FALSE(certify_automorphism(FreeEndomorphism(2, {w({1, 1}), w({2})})));
  CHECK_FALSE(certify_automorphism(FreeEndomorphism(2, {w({1}), w({1})})));
  CHECK_FALSE(certify_automorphism(FreeEndomorphism(2, {w({1}), Word()})));
  CHECK_FALSE(certify_automorphism(
      FreeEndomorphism(2, {w({1, 2, -1, -2}), w({2})})));
  CHECK_FALSE(certify_automorphism(FreeEndomorphism(2, {w({1, 2}), w({1, -2})})));
}

TEST_CASE("bases needing length-preserving moves") {
  // Each monodromy is a basis, but greedy shortening alone stalls on some.
  for (auto const& entry : catalog()) {
    auto phi  = monodromy_automorphism(entry.monodromy);
    auto cert = certify_automorphism(phi.forward());
    REQUIRE(cert.has_value());
    CHECK(cert->inverse() == phi.inverse());
  }
}

TEST_CASE("from_parts rejects inconsistent data") {
  auto a  = random_automorphism(2, 10, 1);
  auto id = FreeEndomorphism::identity(2);
  CHECK_THROWS_AS(Automorphism::from_parts(a.forward(), id, a.nielsen_trace()),
                  MalformedInput);
  CHECK_THROWS_AS(Automorphism::from_parts(a.forward(), a.inverse(), {}),
                  MalformedInput);
}

TEST_CASE("composition and inverse") {
  auto a  = random_automorphism(3, 15, 4);
  auto b  = random_automorphism(3, 15, 5);
  auto ab = a * b;
  CHECK(ab.forward() == compose(a.forward(), b.forward()));
  CHECK(ab.inverse() == compose(b.inverse(), a.inverse()));
  auto ia = inverse(a);
  CHECK(ia.forward() == a.inverse());
  CHECK((a * ia).forward() == FreeEndomorphism::identity(3));
  CHECK(random_automorphism(3, 15, 4) == a);
  CHECK(random_automorphism(0, 5, 1) == Automorphism::identity(0));
}
