#include <doctest.h>

#include "calegari/error.hpp"
#include "calegari/surface.hpp"
#include "support.hpp"

using namespace calegari;
using support::w;

namespace {
  oracle::Mat to_mat(IntMatrix const& m) {
    oracle::Mat out;
    for (auto const& r : m.to_rows()) {
      out.emplace_back(r.begin(), r.end());
    }
    return out;
  }
}  // namespace

TEST_CASE("boundary word") {
  CHECK(boundary_word(1) == w({1, 2, -1, -2}));
  CHECK(boundary_word(2) == w({1, 2, -1, -2, 3, 4, -3, -4}));
}

TEST_CASE("every twist fixes the boundary") {
  for (int g = 1; g <= 5; ++g) {
    Word d = boundary_word(g);
    for (int c = 1; c <= 2 * g; ++c) {
      for (int p : {1, -1, 2, -3}) {
        auto t = twist_action(g, {c, p});
        CHECK(apply(t.forward(), d) == d);
        CHECK(compose(t.forward(), t.inverse()) == FreeEndomorphism::identity(2 * g));
      }
    }
  }
}

TEST_CASE("genus-one twists in the standard basis") {
  auto c1 = twist_action(1, {1, 1});
  auto c2 = twist_action(1, {2, 1});
  CHECK(c1.forward().image(1) == w({1}));
  CHECK(c1.forward().image(2) == w({2, -1}));
  CHECK(c2.forward().image(1) == w({1, 2, 1}));
  CHECK(c2.forward().image(2) == w({-1}));
}

TEST_CASE("chain relations") {
  for (int g = 1; g <= 3; ++g) {
    for (int i = 1; i <= 2 * g; ++i) {
      for (int j = i + 1; j <= 2 * g; ++j) {
        auto a = twist_action(g, {i, 1});
        auto b = twist_action(g, {j, 1});
        if (j == i + 1) {
          CHECK((a * b * a).forward() == (b * a * b).forward());
        } else {
          CHECK((a * b).forward() == (b * a).forward());
        }
      }
    }
  }
  auto a = twist_action(2, {2, 1});
  CHECK((a * twist_action(2, {2, -1})).forward() == FreeEndomorphism::identity(4));
  CHECK(twist_action(2, {2, 2}).forward() == (a * a).forward());
}

TEST_CASE("monodromies") {
  auto tre = find_knot("trefoil");
  REQUIRE(tre);
  auto phi = monodromy_automorphism(tre->monodromy);
  auto c1  = twist_action(1, {1, 1});
  auto c2  = twist_action(1, {2, 1});
  CHECK(phi.forward() == compose(c1.forward(), c2.forward()));
  CHECK(find_knot("T(2,3)")->name == "trefoil");
  CHECK_FALSE(find_knot("unknot"));
  CHECK(torus_knot_monodromy(2) == find_knot("T(2,5)")->monodromy);
  for (auto const& e : catalog()) {
    auto m = monodromy_automorphism(e.monodromy);
    CHECK(apply(m.forward(), boundary_word(e.genus())) == boundary_word(e.genus()));
    CHECK(e.seifert_matrix.rows() == 2 * e.genus());
  }
}

TEST_CASE("catalog Alexander polynomials match their Seifert matrices") {
  for (auto const& e : catalog()) {
    auto o = oracle::unit_normal(oracle::seifert_alexander(to_mat(e.seifert_matrix)));
    auto c = e.alexander.unit_normalized().coefficients();
    CHECK(std::vector<long long>(c.begin(), c.end()) == o);
  }
}

TEST_CASE("twist text and validation") {
  auto s = parse_twists(2, "1 2:-1, 4:3");
  REQUIRE(s.twists.size() == 3);
  CHECK(s.twists[1] == TwistGenerator{2, -1});
  CHECK(s.twists[2] == TwistGenerator{4, 3});
  CHECK(parse_twists(1, "").twists.empty());
  CHECK_THROWS_AS(parse_twists(1, "3"), MalformedInput);
  CHECK_THROWS_AS(parse_twists(1, "1:0"), MalformedInput);
  CHECK_THROWS_AS(parse_twists(1, "a"), MalformedInput);
  CHECK_THROWS_AS(parse_twists(0, "1"), MalformedInput);
  CHECK_THROWS_AS(validate(MonodromySpec{1, {{0, 1}}}), MalformedInput);
}
