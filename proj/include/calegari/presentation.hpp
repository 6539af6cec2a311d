#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "calegari/endomorphism.hpp"
#include "calegari/word.hpp"

namespace calegari {

  // Finite presentation <x_1..x_n | r_1..r_m>. Relators are stored freely and
  // cyclically reduced; the constructor normalizes them.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(int generator_count, std::vector<Word> relators);

    int generator_count() const noexcept {
      return generators_;
    }
    std::vector<Word> const& relators() const noexcept {
      return relators_;
    }
    std::size_t relator_count() const noexcept {
      return relators_.size();
    }
    bool is_balanced() const noexcept {
      return static_cast<std::size_t>(generators_) == relators_.size();
    }
    bool is_empty() const noexcept {
      return generators_ == 0 && relators_.empty();
    }
    std::size_t total_length() const noexcept;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    int generators_ = 0;
    std::vector<Word> relators_;
  };

  struct AbelianInvariants {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;  // each entry >= 2, divides the next

    bool is_trivial() const noexcept {
      return free_rank == 0 && torsion.empty();
    }
    std::string to_string() const;

    friend bool operator==(AbelianInvariants const&,
                           AbelianInvariants const&) = default;
  };

  // <x_1..x_n | phi(x_i) x_i^{-1}>
  Presentation calegari_presentation(Automorphism const& phi);

  // <x_1..x_n, t | t x_i t^{-1} phi(x_i)^{-1}, t> with t = x_{n+1}.
  Presentation handle_presentation(Automorphism const& phi);

  // Relator-by-generator exponent-sum matrix.
  IntMatrix relation_matrix(Presentation const& p);

  AbelianInvariants abelianization(Presentation const& p);

  // H_1 = 0.
  bool is_perfect(Presentation const& p);

  // Least cyclic permutation of r or r^{-1}, letters ordered x1 < X1 < x2 <
  // X2 < ...
  Word canonical_relator(Word const& r);

  // Normal form used for deduplication and comparisons: relators replaced by
  // canonical_relator and sorted, generators relabelled (and re-signed) in
  // order of first appearance, iterated to a fixed point. Generators not
  // occurring in any relator are numbered last.
  Presentation canonical_form(Presentation const& p);

}  // namespace calegari
