#pragma once

// Endomorphisms and automorphisms of F_n, stored as the tuple of images of
// the generators. Automorphisms carry an inverse together with a Nielsen
// trace: the elementary moves that carry the forward image tuple to the
// standard basis (and, replayed on the standard basis, produce the inverse).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "calegari/int_matrix.hpp"
#include "calegari/word.hpp"

namespace calegari {

  class FreeEndomorphism {
   public:
    FreeEndomorphism() = default;
    // Throws RankError if an image uses a generator above `rank`.
    FreeEndomorphism(int rank, std::vector<Word> images);

    static FreeEndomorphism identity(int rank);

    int rank() const noexcept {
      return rank_;
    }
    std::vector<Word> const& images() const noexcept {
      return images_;
    }
    // Image of x_index, 1-based.
    Word const& image(int index) const {
      return images_.at(index - 1);
    }

    std::size_t total_length() const noexcept;

    friend bool operator==(FreeEndomorphism const&,
                           FreeEndomorphism const&) = default;

   private:
    int rank_ = 0;
    std::vector<Word> images_;
  };

  Word apply(FreeEndomorphism const& e, Word const& w);

  // f o g: x_i -> f(g(x_i)).
  FreeEndomorphism compose(FreeEndomorphism const& f, FreeEndomorphism const& g);

  // Entry (i, j) is the exponent sum of x_i in e(x_j), so M(f o g) = M(f) M(g).
  IntMatrix abelianization_matrix(FreeEndomorphism const& e);

  // Elementary Nielsen moves on a tuple (u_1, ..., u_n), indices 1-based:
  //   invert    u_i <- u_i^{-1}         (j == i)
  //   left_mul  u_i <- u_j u_i
  //   right_mul u_i <- u_i u_j
  //   swap      u_i <-> u_j
  // The enumerator order is the tie-break code used by Nielsen reduction.
  enum class NielsenKind : std::uint8_t { invert, left_mul, right_mul, swap };

  struct NielsenMove {
    NielsenKind kind;
    int i;
    int j;

    friend bool operator==(NielsenMove const&, NielsenMove const&) = default;
  };

  std::string_view to_string(NielsenKind kind);
  NielsenKind nielsen_kind_from_string(std::string_view name);

  // Applies the move in place. On the image tuple of f this is f o nu.
  void apply_nielsen_move(std::vector<Word>& tuple, NielsenMove const& move);

  class Automorphism {
   public:
    // Checks that the trace carries `forward` to the identity, that it rebuilds
    // `inverse`, and that both compositions are the identity.
    static Automorphism from_parts(FreeEndomorphism forward,
                                   FreeEndomorphism inverse,
                                   std::vector<NielsenMove> trace);

    static Automorphism identity(int rank);

    int rank() const noexcept {
      return forward_.rank();
    }
    FreeEndomorphism const& forward() const noexcept {
      return forward_;
    }
    FreeEndomorphism const& inverse() const noexcept {
      return inverse_;
    }
    std::vector<NielsenMove> const& nielsen_trace() const noexcept {
      return trace_;
    }

    friend bool operator==(Automorphism const&, Automorphism const&) = default;

   private:
    friend std::optional<Automorphism>
    certify_automorphism(FreeEndomorphism const&);
    friend Automorphism
    random_automorphism(int, int, std::uint64_t);
    friend Automorphism operator*(Automorphism const&, Automorphism const&);
    friend Automorphism inverse(Automorphism const&);

    Automorphism(FreeEndomorphism forward,
                 FreeEndomorphism inverse,
                 std::vector<NielsenMove> trace)
        : forward_(std::move(forward)),
          inverse_(std::move(inverse)),
          trace_(std::move(trace)) {}

    FreeEndomorphism forward_;
    FreeEndomorphism inverse_;
    std::vector<NielsenMove> trace_;
  };

  // Greedy Nielsen reduction. Among moves u_i <- u_j^{+-1} u_i and
  // u_i <- u_i u_j^{+-1} the one with the largest decrease in total length is
  // taken, ties broken by the least (kind, i, j, sign) with + before -. A move
  // by u_j^{-1} is recorded as invert j, the move, invert j. When no move
  // shortens the tuple, a breadth-first search over length-preserving moves
  // looks for a tuple that can be shortened (Nielsen's N2 condition), and
  // greedy reduction resumes from there. The input is a basis iff this ends
  // at single letters with distinct indices.
  std::optional<Automorphism> certify_automorphism(FreeEndomorphism const& e);

  // `move_count` moves drawn from std::mt19937_64(seed), applied to the
  // standard basis.
  Automorphism random_automorphism(int rank, int move_count, std::uint64_t seed);

  // Composition a o b with the trace of b's reduction followed by a's.
  Automorphism operator*(Automorphism const& a, Automorphism const& b);

  Automorphism inverse(Automorphism const& a);

}  // namespace calegari
