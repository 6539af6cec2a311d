#include "calegari/report.hpp"

#include "calegari/error.hpp"
#include "calegari/trace_verifier.hpp"

namespace calegari {

  HomologyCheck homology_check(Automorphism const& phi) {
    IntMatrix const a = abelianization_matrix(phi.forward());
    std::int64_t det  = determinant(a - IntMatrix::identity(phi.rank()));
    return HomologyCheck{det, det == 1 || det == -1};
  }

  PolynomialZ alexander_from_monodromy(Automorphism const& phi) {
    return characteristic_polynomial(abelianization_matrix(phi.forward()));
  }

  std::vector<MappingClassLift>
  enumerate_lifts(std::shared_ptr<Automorphism const> phi, int cap) {
    int const n = phi->rank();
    if (n > cap) {
      throw LimitError("rank " + std::to_string(n) + " exceeds the lift cap "
                       + std::to_string(cap));
    }
    if (n >= 63) {
      throw LimitError("lift enumeration beyond 2^62 is not supported");
    }
    std::uint64_t const count = std::uint64_t{1} << n;
    std::vector<MappingClassLift> lifts;
    lifts.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
      TwistVector v(n);
      for (int b = 0; b < n; ++b) {
        v[b] = static_cast<std::uint8_t>((code >> (n - 1 - b)) & 1U);
      }
      lifts.push_back(MappingClassLift{phi, std::move(v)});
    }
    return lifts;
  }

  std::string format_twist_vector(TwistVector const& v) {
    std::string s;
    for (auto bit : v) {
      s += bit ? '1' : '0';
    }
    return s;
  }

  std::string_view to_string(Conclusion c) {
    switch (c) {
      case Conclusion::calegari_sphere_standard:
        return "calegari_sphere_standard";
      case Conclusion::double_is_S4:
        return "double_is_S4";
      case Conclusion::casson_gordon_homology_ball:
        return "casson_gordon_homology_ball";
      case Conclusion::casson_gordon_contractible_ball:
        return "casson_gordon_contractible_ball";
      case Conclusion::not_a_calegari_datum:
        return "not_a_calegari_datum";
      case Conclusion::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

  Conclusion conclusion_from_string(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(Conclusion::inconclusive); ++k) {
      auto c = static_cast<Conclusion>(k);
      if (to_string(c) == name) {
        return c;
      }
    }
    throw MalformedInput("unknown conclusion '" + std::string(name) + "'");
  }

  void assign_conclusion(Certificate& c) {
    c.also_applies.clear();
    bool const traced = c.trivialization.status == TrivializeStatus::trivialized
                        && c.trivialization.verified;
    if (!c.h1_trivial) {
      c.conclusion = Conclusion::not_a_calegari_datum;
    } else if (traced && c.geometric && c.rank % 2 == 0) {
      c.conclusion   = Conclusion::calegari_sphere_standard;
      c.also_applies = {Conclusion::double_is_S4,
                        Conclusion::casson_gordon_contractible_ball};
    } else if (traced && !c.geometric) {
      c.conclusion = Conclusion::casson_gordon_contractible_ball;
    } else {
      c.conclusion   = Conclusion::inconclusive;
      c.also_applies = {Conclusion::casson_gordon_homology_ball};
    }
  }

  namespace {
    Certificate build(InputDescriptor input,
                      bool geometric,
                      Automorphism const& given,
                      CertifyOptions const& options) {
      validate(options.budget);
      Certificate c;
      c.input     = std::move(input);
      c.rank      = given.rank();
      c.geometric = geometric;

      // Re-derive the inverse and trace from the forward images alone.
      auto certified = certify_automorphism(given.forward());
      if (!certified) {
        throw MalformedInput("input endomorphism is not an automorphism");
      }
      c.automorphism = std::move(*certified);

      auto const hom  = homology_check(c.automorphism);
      c.det_A_minus_I = hom.det_A_minus_I;
      c.h1_trivial    = hom.h1_trivial;
      if (geometric) {
        c.alexander = alexander_from_monodromy(c.automorphism);
      }

      c.calegari_presentation = calegari_presentation(c.automorphism);
      c.handle_presentation   = handle_presentation(c.automorphism);
      c.balanced              = c.calegari_presentation.is_balanced()
                   && c.handle_presentation.is_balanced();
      c.abelianization = abelianization(c.calegari_presentation);

      int const n         = c.rank;
      Presentation killed = apply_move(c.handle_presentation,
                                       TietzeMove::eliminate(n + 1, n + 1));
      c.handle_matches_calegari
          = canonical_form(killed) == canonical_form(c.calegari_presentation);

      auto result = trivialize(c.calegari_presentation, options.budget);
      c.trivialization.status         = result.status;
      c.trivialization.trace          = std::move(result.trace);
      c.trivialization.nodes_expanded = result.nodes_expanded;
      c.trivialization.verified
          = result.status == TrivializeStatus::trivialized
            && verify_trace(c.calegari_presentation, c.trivialization.trace).ok;

      if (n <= options.lift_cap) {
        auto shared = std::make_shared<Automorphism const>(c.automorphism);
        auto lifts  = enumerate_lifts(shared, options.lift_cap);
        c.lift_count = lifts.size();
        for (auto& l : lifts) {
          c.lifts.push_back(std::move(l.twist_vector));
        }
      }
      assign_conclusion(c);
      return c;
    }
  }  // namespace

  Certificate certify(CatalogEntry const& entry, CertifyOptions const& options) {
    return build(InputDescriptor{"catalog", entry.name, entry.monodromy},
                 true,
                 monodromy_automorphism(entry.monodromy),
                 options);
  }

  Certificate certify(MonodromySpec const& spec, CertifyOptions const& options) {
    return build(InputDescriptor{"monodromy", "", spec},
                 true,
                 monodromy_automorphism(spec),
                 options);
  }

  Certificate certify(Automorphism const& phi, CertifyOptions const& options) {
    return build(InputDescriptor{"automorphism", "", std::nullopt},
                 false,
                 phi,
                 options);
  }

}  // namespace calegari
