#pragma once

// Certificates: the computable checks behind a candidate Calegari datum and
// the conclusion they support.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "calegari/endomorphism.hpp"
#include "calegari/polynomial.hpp"
#include "calegari/presentation.hpp"
#include "calegari/surface.hpp"
#include "calegari/tietze.hpp"

namespace calegari {

  struct HomologyCheck {
    std::int64_t det_A_minus_I = 0;
    bool h1_trivial            = false;
  };

  HomologyCheck homology_check(Automorphism const& phi);

  // det(tI - A) for the abelianization matrix A.
  PolynomialZ alexander_from_monodromy(Automorphism const& phi);

  using TwistVector = std::vector<std::uint8_t>;  // entries 0 or 1

  struct MappingClassLift {
    std::shared_ptr<Automorphism const> automorphism;
    TwistVector twist_vector;
  };

  constexpr int default_lift_cap = 20;

  // All 2^n twist vectors in lexicographic order; LimitError if n > cap.
  std::vector<MappingClassLift>
  enumerate_lifts(std::shared_ptr<Automorphism const> phi,
                  int cap = default_lift_cap);

  std::string format_twist_vector(TwistVector const& v);

  enum class Conclusion : std::uint8_t {
    calegari_sphere_standard,
    double_is_S4,
    casson_gordon_homology_ball,
    casson_gordon_contractible_ball,
    not_a_calegari_datum,
    inconclusive,
  };

  std::string_view to_string(Conclusion c);
  Conclusion conclusion_from_string(std::string_view name);

  struct InputDescriptor {
    std::string kind;  // "catalog" | "monodromy" | "automorphism"
    std::string name;  // catalog name, empty otherwise
    std::optional<MonodromySpec> monodromy;

    friend bool operator==(InputDescriptor const&,
                           InputDescriptor const&) = default;
  };

  struct TrivializationRecord {
    TrivializeStatus status = TrivializeStatus::inconclusive;
    TrivializationTrace trace;
    bool verified               = false;
    std::int64_t nodes_expanded = 0;

    friend bool operator==(TrivializationRecord const&,
                           TrivializationRecord const&) = default;
  };

  struct Certificate {
    InputDescriptor input;
    int rank       = 0;
    bool geometric = false;
    Automorphism automorphism = Automorphism::identity(0);
    bool balanced  = false;
    std::int64_t det_A_minus_I = 0;
    bool h1_trivial            = false;
    AbelianInvariants abelianization;
    std::optional<PolynomialZ> alexander;  // geometric inputs only
    Presentation calegari_presentation;
    Presentation handle_presentation;
    bool handle_matches_calegari = false;
    TrivializationRecord trivialization;
    std::optional<std::uint64_t> lift_count;  // absent when n > lift cap
    std::vector<TwistVector> lifts;
    Conclusion conclusion = Conclusion::inconclusive;
    std::vector<Conclusion> also_applies;

    friend bool operator==(Certificate const&, Certificate const&) = default;
  };

  struct CertifyOptions {
    SearchBudget budget;
    int lift_cap = default_lift_cap;
  };

  Certificate certify(CatalogEntry const& entry, CertifyOptions const& options);
  Certificate certify(MonodromySpec const& spec, CertifyOptions const& options);
  // Raw automorphisms are never treated as geometric.
  Certificate certify(Automorphism const& phi, CertifyOptions const& options);

  // Conclusion rules, exposed for testing:
  //   H_1 != 0                               -> not_a_calegari_datum
  //   verified trace, geometric, even rank   -> calegari_sphere_standard
  //                                             (+ double_is_S4,
  //                                                casson_gordon_contractible_ball)
  //   verified trace, not geometric          -> casson_gordon_contractible_ball
  //   H_1 = 0 without a trace                -> inconclusive
  //                                             (+ casson_gordon_homology_ball)
  void assign_conclusion(Certificate& c);

}  // namespace calegari
