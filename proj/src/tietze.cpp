#include "calegari/tietze.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_set>

#include "calegari/error.hpp"

namespace calegari {

  std::string_view to_string(TietzeKind kind) {
    switch (kind) {
      case TietzeKind::invert_relator:
        return "invert_relator";
      case TietzeKind::cyclic_shift:
        return "cyclic_shift";
      case TietzeKind::multiply_relator_by_conjugate_of_other:
        return "multiply_relator_by_conjugate_of_other";
      case TietzeKind::eliminate_generator_via_relator:
        return "eliminate_generator_via_relator";
      case TietzeKind::add_trivial_generator_and_relator:
        return "add_trivial_generator_and_relator";
      case TietzeKind::remove_trivial_relator:
        return "remove_trivial_relator";
    }
    return "?";
  }

  TietzeKind tietze_kind_from_string(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(TietzeKind::remove_trivial_relator);
         ++k) {
      auto kind = static_cast<TietzeKind>(k);
      if (to_string(kind) == name) {
        return kind;
      }
    }
    throw MalformedInput("unknown Tietze move '" + std::string(name) + "'");
  }

  TietzeMove TietzeMove::invert_relator(int i) {
    TietzeMove m;
    m.kind = TietzeKind::invert_relator;
    m.relator = i;
    return m;
  }

  TietzeMove TietzeMove::cyclic_shift(int i, int shift) {
    TietzeMove m;
    m.kind = TietzeKind::cyclic_shift;
    m.relator = i;
    m.shift   = shift;
    return m;
  }

  TietzeMove TietzeMove::multiply_by_conjugate(int i, int j, int exponent,
                                               Word w) {
    TietzeMove m;
    m.kind = TietzeKind::multiply_relator_by_conjugate_of_other;
    m.relator  = i;
    m.other    = j;
    m.exponent = exponent;
    m.word     = std::move(w);
    return m;
  }

  TietzeMove TietzeMove::eliminate(int generator, int relator) {
    TietzeMove m;
    m.kind = TietzeKind::eliminate_generator_via_relator;
    m.generator = generator;
    m.relator   = relator;
    return m;
  }

  TietzeMove TietzeMove::add_generator(Word w) {
    TietzeMove m;
    m.kind = TietzeKind::add_trivial_generator_and_relator;
    m.word = std::move(w);
    return m;
  }

  TietzeMove TietzeMove::remove_trivial_relator(int i) {
    TietzeMove m;
    m.kind = TietzeKind::remove_trivial_relator;
    m.relator = i;
    return m;
  }

  namespace {
    void check_relator(Presentation const& p, int i, char const* what) {
      if (i < 1 || static_cast<std::size_t>(i) > p.relator_count()) {
        throw MalformedInput(std::string(what) + " index "
                             + std::to_string(i) + " out of range");
      }
    }

    Presentation eliminate(Presentation const& p, int k, int i) {
      if (k < 1 || k > p.generator_count()) {
        throw MalformedInput("generator index out of range");
      }
      Word const& r = p.relators()[i - 1];
      if (occurrences(r, k) != 1) {
        throw MalformedInput("generator must occur exactly once in the relator");
      }
      std::size_t pos = 0;
      while (r[pos].index() != k) {
        ++pos;
      }
      auto const letters = r.letters();
      Word const u       = reduce(letters.subspan(0, pos));
      Word const v       = reduce(letters.subspan(pos + 1));
      Word const vu      = multiply(v, u);
      Word const value   = r[pos].sign() > 0 ? invert(vu) : vu;

      auto renumber = [k](Letter l) {
        return l.index() > k ? Letter(l.index() - 1, l.sign()) : l;
      };
      std::vector<Letter> sub;
      for (Letter l : value.letters()) {
        sub.push_back(renumber(l));
      }
      std::vector<Word> rels;
      for (std::size_t s = 0; s < p.relator_count(); ++s) {
        if (static_cast<int>(s) == i - 1) {
          continue;
        }
        std::vector<Letter> raw;
        for (Letter l : p.relators()[s].letters()) {
          if (l.index() != k) {
            raw.push_back(renumber(l));
          } else if (l.sign() > 0) {
            raw.insert(raw.end(), sub.begin(), sub.end());
          } else {
            for (auto it = sub.rbegin(); it != sub.rend(); ++it) {
              raw.push_back(it->inverse());
            }
          }
        }
        rels.push_back(reduce(raw));
      }
      return Presentation(p.generator_count() - 1, std::move(rels));
    }
  }  // namespace

  Presentation apply_move(Presentation const& p, TietzeMove const& move) {
    std::vector<Word> rels = p.relators();
    switch (move.kind) {
      case TietzeKind::invert_relator:
        check_relator(p, move.relator, "relator");
        rels[move.relator - 1] = invert(rels[move.relator - 1]);
        return Presentation(p.generator_count(), std::move(rels));

      case TietzeKind::cyclic_shift: {
        check_relator(p, move.relator, "relator");
        Word const& r = rels[move.relator - 1];
        if (move.shift < 0
            || (move.shift > 0
                && static_cast<std::size_t>(move.shift) >= r.size())) {
          throw MalformedInput("cyclic shift out of range");
        }
        rels[move.relator - 1] = rotate(r, static_cast<std::size_t>(move.shift));
        return Presentation(p.generator_count(), std::move(rels));
      }

      case TietzeKind::multiply_relator_by_conjugate_of_other: {
        check_relator(p, move.relator, "relator");
        check_relator(p, move.other, "other relator");
        if (move.relator == move.other) {
          throw MalformedInput("cannot multiply a relator by itself");
        }
        if (move.exponent != 1 && move.exponent != -1) {
          throw MalformedInput("exponent must be +1 or -1");
        }
        if (move.word.max_index() > p.generator_count()) {
          throw MalformedInput("conjugator uses an unknown generator");
        }
        Word const& rj  = rels[move.other - 1];
        Word const conj = multiply(
            {move.word, move.exponent > 0 ? rj : invert(rj), invert(move.word)});
        rels[move.relator - 1] = multiply(rels[move.relator - 1], conj);
        return Presentation(p.generator_count(), std::move(rels));
      }

      case TietzeKind::eliminate_generator_via_relator:
        check_relator(p, move.relator, "relator");
        return eliminate(p, move.generator, move.relator);

      case TietzeKind::add_trivial_generator_and_relator: {
        if (move.word.max_index() > p.generator_count()) {
          throw MalformedInput("new generator's value uses an unknown generator");
        }
        int const n = p.generator_count() + 1;
        rels.push_back(multiply(Word::generator(n), invert(move.word)));
        return Presentation(n, std::move(rels));
      }

      case TietzeKind::remove_trivial_relator:
        check_relator(p, move.relator, "relator");
        if (!rels[move.relator - 1].empty()) {
          throw MalformedInput("only an empty relator can be removed");
        }
        rels.erase(rels.begin() + (move.relator - 1));
        return Presentation(p.generator_count(), std::move(rels));
    }
    throw MalformedInput("unknown move kind");
  }

  void validate(SearchBudget const& budget) {
    if (budget.max_relator_length <= 0 || budget.max_generators <= 0
        || budget.node_limit <= 0) {
      throw LimitError("search budget limits must be positive");
    }
  }

  std::string_view to_string(TrivializeStatus status) {
    switch (status) {
      case TrivializeStatus::trivialized:
        return "trivialized";
      case TrivializeStatus::inconclusive:
        return "inconclusive";
      case TrivializeStatus::certified_nontrivial:
        return "certified_nontrivial";
    }
    return "?";
  }

  TrivializeStatus trivialize_status_from_string(std::string_view name) {
    for (auto s : {TrivializeStatus::trivialized,
                   TrivializeStatus::inconclusive,
                   TrivializeStatus::certified_nontrivial}) {
      if (to_string(s) == name) {
        return s;
      }
    }
    throw MalformedInput("unknown trivialization status '" + std::string(name)
                         + "'");
  }

  namespace {
    std::string state_key(Presentation const& p) {
      Presentation c = canonical_form(p);
      std::string key = std::to_string(c.generator_count());
      for (Word const& r : c.relators()) {
        key += '|';
        for (Letter l : r.letters()) {
          key += std::to_string(l.signed_value());
          key += ',';
        }
      }
      return key;
    }

    std::uint64_t fnv1a(std::string const& s) {
      std::uint64_t h = 14695981039346656037ULL;
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
      }
      return h;
    }

    std::uint64_t splitmix64(std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    }

    struct Node {
      Presentation state;
      std::int64_t parent;
      TietzeMove move;
    };

    struct Entry {
      std::size_t length;
      int generators;
      std::uint64_t tie;
      std::int64_t index;

      bool operator>(Entry const& o) const {
        if (length != o.length) {
          return length > o.length;
        }
        if (generators != o.generators) {
          return generators > o.generators;
        }
        if (tie != o.tie) {
          return tie > o.tie;
        }
        return index > o.index;
      }
    };

    std::vector<TietzeMove> candidate_moves(Presentation const& p,
                                            SearchBudget const& budget) {
      std::vector<TietzeMove> moves;
      int const n = p.generator_count();
      int const m = static_cast<int>(p.relator_count());
      auto const& rels = p.relators();
      for (int i = 1; i <= m; ++i) {
        if (rels[i - 1].empty()) {
          moves.push_back(TietzeMove::remove_trivial_relator(i));
        }
      }
      for (int i = 1; i <= m; ++i) {
        for (int k = 1; k <= n; ++k) {
          if (occurrences(rels[i - 1], k) == 1) {
            moves.push_back(TietzeMove::eliminate(k, i));
          }
        }
      }
      std::vector<Word> conjugators = {Word()};
      for (int g = 1; g <= n; ++g) {
        conjugators.push_back(Word::generator(g));
        conjugators.push_back(invert(Word::generator(g)));
      }
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
          if (i == j || rels[j - 1].empty()) {
            continue;
          }
          for (int e : {1, -1}) {
            for (Word const& w : conjugators) {
              moves.push_back(TietzeMove::multiply_by_conjugate(i, j, e, w));
            }
          }
        }
      }
      if (n < budget.max_generators) {
        std::vector<Word> seen;
        for (Word const& r : rels) {
          for (std::size_t s = 0; s < r.size() && r.size() >= 2; ++s) {
            Letter const pair[] = {r[s], r[(s + 1) % r.size()]};
            Word w              = reduce(pair);
            if (w.size() == 2
                && std::find(seen.begin(), seen.end(), w) == seen.end()) {
              seen.push_back(w);
            }
          }
        }
        std::sort(seen.begin(), seen.end());
        for (Word& w : seen) {
          moves.push_back(TietzeMove::add_generator(std::move(w)));
        }
      }
      return moves;
    }

    bool within_budget(Presentation const& p, SearchBudget const& budget) {
      if (p.generator_count() > budget.max_generators) {
        return false;
      }
      for (Word const& r : p.relators()) {
        if (r.size() > static_cast<std::size_t>(budget.max_relator_length)) {
          return false;
        }
      }
      return true;
    }

    TrivializationTrace unwind(std::vector<Node> const& nodes,
                               std::int64_t index) {
      TrivializationTrace trace;
      while (nodes[index].parent >= 0) {
        trace.moves.push_back(nodes[index].move);
        index = nodes[index].parent;
      }
      std::reverse(trace.moves.begin(), trace.moves.end());
      return trace;
    }
  }  // namespace

  TrivializeResult trivialize(Presentation const& p,
                              SearchBudget const& budget) {
    validate(budget);
    TrivializeResult result;
    result.homology = abelianization(p);
    if (!result.homology.is_trivial()) {
      result.status = TrivializeStatus::certified_nontrivial;
      return result;
    }
    if (p.is_empty()) {
      result.status = TrivializeStatus::trivialized;
      return result;
    }

    // An input already beyond a size limit is searched with that limit
    // raised to the input's own size.
    SearchBudget effective = budget;
    effective.max_generators = std::max(budget.max_generators, p.generator_count());
    for (Word const& r : p.relators()) {
      effective.max_relator_length
          = std::max(effective.max_relator_length, static_cast<int>(r.size()));
    }

    std::vector<Node> nodes;
    std::unordered_set<std::string> seen;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

    auto admit = [&](Presentation state, std::int64_t parent,
                     TietzeMove move) -> std::int64_t {
      std::string key = state_key(state);
      if (!seen.insert(key).second) {
        return -1;
      }
      auto const index = static_cast<std::int64_t>(nodes.size());
      frontier.push(Entry{state.total_length(),
                          state.generator_count(),
                          splitmix64(fnv1a(key) ^ budget.seed),
                          index});
      nodes.push_back(Node{std::move(state), parent, std::move(move)});
      return index;
    };

    admit(p, -1, TietzeMove{});
    while (!frontier.empty()) {
      if (static_cast<std::int64_t>(nodes.size()) >= budget.node_limit) {
        break;
      }
      Entry const top = frontier.top();
      frontier.pop();
      ++result.nodes_expanded;
      // Copy: `nodes` may reallocate while successors are admitted.
      Presentation const current = nodes[top.index].state;
      for (TietzeMove& move : candidate_moves(current, effective)) {
        Presentation next = apply_move(current, move);
        if (!within_budget(next, effective)) {
          continue;
        }
        bool const done = next.is_empty();
        auto const idx  = admit(std::move(next), top.index, std::move(move));
        if (done && idx >= 0) {
          result.status = TrivializeStatus::trivialized;
          result.trace  = unwind(nodes, idx);
          return result;
        }
      }
    }
    result.status = TrivializeStatus::inconclusive;
    return result;
  }

}  // namespace calegari
