#include "calegari/presentation.hpp"

#include <algorithm>

#include "calegari/error.hpp"
#include "calegari/int_matrix.hpp"

namespace calegari {

  Presentation::Presentation(int generator_count, std::vector<Word> relators)
      : generators_(generator_count) {
    if (generator_count < 0) {
      throw MalformedInput("generator count must be nonnegative");
    }
    relators_.reserve(relators.size());
    for (Word& r : relators) {
      if (r.max_index() > generator_count) {
        throw RankError("relator uses x" + std::to_string(r.max_index())
                        + " but there are only "
                        + std::to_string(generator_count) + " generators");
      }
      relators_.push_back(cyclic_reduce(r));
    }
  }

  std::size_t Presentation::total_length() const noexcept {
    std::size_t total = 0;
    for (Word const& r : relators_) {
      total += r.size();
    }
    return total;
  }

  std::string AbelianInvariants::to_string() const {
    std::string out;
    auto append = [&out](std::string const& s) {
      out += out.empty() ? s : " + " + s;
    };
    if (free_rank == 1) {
      append("Z");
    } else if (free_rank > 1) {
      append("Z^" + std::to_string(free_rank));
    }
    for (auto d : torsion) {
      append("Z/" + std::to_string(d));
    }
    return out.empty() ? "0" : out;
  }

  Presentation calegari_presentation(Automorphism const& phi) {
    std::vector<Word> relators;
    for (int i = 1; i <= phi.rank(); ++i) {
      relators.push_back(
          multiply(phi.forward().image(i), invert(Word::generator(i))));
    }
    return Presentation(phi.rank(), std::move(relators));
  }

  Presentation handle_presentation(Automorphism const& phi) {
    int const n  = phi.rank();
    Word const t = Word::generator(n + 1);
    std::vector<Word> relators;
    for (int i = 1; i <= n; ++i) {
      relators.push_back(multiply({t,
                                   Word::generator(i),
                                   invert(t),
                                   invert(phi.forward().image(i))}));
    }
    relators.push_back(t);
    return Presentation(n + 1, std::move(relators));
  }

  IntMatrix relation_matrix(Presentation const& p) {
    IntMatrix m(static_cast<int>(p.relator_count()), p.generator_count());
    for (std::size_t r = 0; r < p.relator_count(); ++r) {
      for (Letter l : p.relators()[r].letters()) {
        m(static_cast<int>(r), l.index() - 1) += l.sign();
      }
    }
    return m;
  }

  AbelianInvariants abelianization(Presentation const& p) {
    auto diag = smith_diagonal(relation_matrix(p));
    AbelianInvariants out;
    out.free_rank = p.generator_count() - static_cast<int>(diag.size());
    for (auto d : diag) {
      if (d > 1) {
        out.torsion.push_back(d);
      }
    }
    return out;
  }

  bool is_perfect(Presentation const& p) {
    return abelianization(p).is_trivial();
  }

  namespace {
    // x1 < X1 < x2 < X2 < ..., then shorter first.
    bool letter_less(Letter a, Letter b) {
      if (a.index() != b.index()) {
        return a.index() < b.index();
      }
      return a.sign() > b.sign();
    }

    bool relator_less(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                          b.letters().begin(), b.letters().end(),
                                          letter_less);
    }
  }  // namespace

  Word canonical_relator(Word const& r) {
    Word best = r;
    for (Word const& base : {r, invert(r)}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        Word candidate = rotate(base, s);
        if (relator_less(candidate, best)) {
          best = std::move(candidate);
        }
      }
    }
    return best;
  }

  namespace {
    Presentation sorted_canonical_relators(Presentation const& p) {
      std::vector<Word> rels;
      rels.reserve(p.relator_count());
      for (Word const& r : p.relators()) {
        rels.push_back(canonical_relator(r));
      }
      std::sort(rels.begin(), rels.end(), relator_less);
      return Presentation(p.generator_count(), std::move(rels));
    }

    Presentation relabel_by_first_appearance(Presentation const& p) {
      int const n = p.generator_count();
      std::vector<int> image(n + 1, 0);  // signed new label per old index
      int next = 1;
      for (Word const& r : p.relators()) {
        for (Letter l : r.letters()) {
          if (image[l.index()] == 0) {
            image[l.index()] = l.sign() * next++;
          }
        }
      }
      for (int g = 1; g <= n; ++g) {
        if (image[g] == 0) {
          image[g] = next++;
        }
      }
      std::vector<Word> rels;
      for (Word const& r : p.relators()) {
        std::vector<int> raw;
        for (Letter l : r.letters()) {
          raw.push_back(l.sign() * image[l.index()]);
        }
        rels.push_back(reduce_signed(raw));
      }
      return Presentation(n, std::move(rels));
    }
  }  // namespace

  Presentation canonical_form(Presentation const& p) {
    Presentation current = sorted_canonical_relators(p);
    for (int round = 0; round < 8; ++round) {
      Presentation next
          = sorted_canonical_relators(relabel_by_first_appearance(current));
      if (next == current) {
        break;
      }
      current = std::move(next);
    }
    return current;
  }

}  // namespace calegari
