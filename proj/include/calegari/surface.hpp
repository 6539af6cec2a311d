#pragma once

// Dehn twists on the once-bounded genus-g surface S_{g,1} acting on
// pi_1(S_{g,1}, p) = F_{2g}, p on the boundary, and monodromies of fibered
// knots written as words in twists along the chain c_1, ..., c_{2g}.
//
// Basis convention: x_{2k-1}, x_{2k} are the meridian/longitude pair of the
// k-th handle and the boundary reads [x_1, x_2][x_3, x_4]...[x_{2g-1}, x_{2g}].

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "calegari/endomorphism.hpp"
#include "calegari/int_matrix.hpp"
#include "calegari/polynomial.hpp"
#include "calegari/word.hpp"

namespace calegari {

  struct TwistGenerator {
    int curve;  // 1 .. 2g
    int power;  // nonzero

    friend bool operator==(TwistGenerator const&, TwistGenerator const&) = default;
  };

  struct MonodromySpec {
    int genus = 0;
    std::vector<TwistGenerator> twists;

    friend bool operator==(MonodromySpec const&, MonodromySpec const&) = default;
  };

  struct CatalogEntry {
    std::string name;
    MonodromySpec monodromy;
    PolynomialZ alexander;      // reference value, constant term first
    IntMatrix seifert_matrix;   // 2g x 2g

    int genus() const noexcept {
      return monodromy.genus;
    }
  };

  // Throws MalformedInput on an invalid curve, zero power or genus < 1.
  void validate(MonodromySpec const& spec);

  Automorphism twist_action(int genus, TwistGenerator t);

  // phi = tau_1 o tau_2 o ... o tau_k for the twist word tau_1 ... tau_k.
  Automorphism monodromy_automorphism(MonodromySpec const& spec);

  Word boundary_word(int genus);

  // Trefoil, figure-eight and T(2, 2k+1) for k = 2..5.
  std::vector<CatalogEntry> const& catalog();

  std::optional<CatalogEntry> find_knot(std::string_view name);

  // Positive twists along the full chain on genus k; monodromy of T(2, 2k+1).
  MonodromySpec torus_knot_monodromy(int genus);

  // Text form `1 2:-1 3` (curve[:power], whitespace or comma separated).
  MonodromySpec parse_twists(int genus, std::string_view text);

}  // namespace calegari
