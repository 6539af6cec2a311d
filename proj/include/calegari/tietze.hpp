#pragma once

// Tietze moves and a bounded best-first search for trivializing traces.
//
// Move semantics (indices 1-based, shared with the independent verifier in
// trace_verifier.hpp):
//   invert_relator           r_i <- r_i^{-1}
//   cyclic_shift             r_i <- r_i rotated left by `shift` letters
//   multiply_relator_by_conjugate_of_other
//                            r_i <- cyc(r_i w r_j^e w^{-1}), j != i
//   eliminate_generator_via_relator
//                            x_k occurs exactly once in r_i; writing
//                            r_i = u x_k^e v, substitute x_k = (v u)^{-e}
//                            in every other relator, delete r_i and x_k and
//                            renumber x_{k+1}.. down by one
//   add_trivial_generator_and_relator
//                            new generator x_{n+1}, appended relator
//                            cyc(x_{n+1} w^{-1})
//   remove_trivial_relator   delete r_i, which must be the empty word
// cyc() is free plus cyclic reduction; every result relator is normalized
// that way.

#include <cstdint>
#include <string_view>
#include <vector>

#include "calegari/presentation.hpp"

namespace calegari {

  enum class TietzeKind : std::uint8_t {
    invert_relator,
    cyclic_shift,
    multiply_relator_by_conjugate_of_other,
    eliminate_generator_via_relator,
    add_trivial_generator_and_relator,
    remove_trivial_relator,
  };

  std::string_view to_string(TietzeKind kind);
  TietzeKind tietze_kind_from_string(std::string_view name);

  struct TietzeMove {
    TietzeKind kind = TietzeKind::invert_relator;
    int relator   = 0;  // r_i
    int other     = 0;  // r_j (multiply)
    int generator = 0;  // x_k (eliminate)
    int shift     = 0;  // cyclic_shift
    int exponent  = 1;  // +-1 (multiply)
    Word word;          // conjugator (multiply) or w (add)

    static TietzeMove invert_relator(int i);
    static TietzeMove cyclic_shift(int i, int shift);
    static TietzeMove multiply_by_conjugate(int i, int j, int exponent, Word w);
    static TietzeMove eliminate(int generator, int relator);
    static TietzeMove add_generator(Word w);
    static TietzeMove remove_trivial_relator(int i);

    friend bool operator==(TietzeMove const&, TietzeMove const&) = default;
  };

  struct TrivializationTrace {
    std::vector<TietzeMove> moves;

    friend bool operator==(TrivializationTrace const&,
                           TrivializationTrace const&) = default;
  };

  // Throws MalformedInput when the move is illegal for `p`.
  Presentation apply_move(Presentation const& p, TietzeMove const& move);

  struct SearchBudget {
    int max_relator_length  = 64;
    int max_generators      = 8;
    std::int64_t node_limit = 200000;
    std::uint64_t seed      = 0;
  };

  // Throws LimitError on a nonpositive limit.
  void validate(SearchBudget const& budget);

  enum class TrivializeStatus : std::uint8_t {
    trivialized,
    inconclusive,
    certified_nontrivial,
  };

  std::string_view to_string(TrivializeStatus status);
  TrivializeStatus trivialize_status_from_string(std::string_view name);

  struct TrivializeResult {
    TrivializeStatus status = TrivializeStatus::inconclusive;
    TrivializationTrace trace;      // when trivialized
    AbelianInvariants homology;     // H_1 of the input
    std::int64_t nodes_expanded = 0;
  };

  // Returns certified_nontrivial iff H_1 != 0. Otherwise a deterministic
  // best-first search over Tietze moves, ordered by (total relator length,
  // generator count, seeded hash of the canonical form, insertion order),
  // deduplicated on canonical_form. Multiplications conjugate by the empty
  // word or a single letter; generator additions name a cyclic 2-letter
  // subword of a relator while generator_count < max_generators. Limits the
  // input itself exceeds are raised to the input's size.
  TrivializeResult trivialize(Presentation const& p, SearchBudget const& budget);

}  // namespace calegari
