#include "calegari/endomorphism.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "calegari/error.hpp"

namespace calegari {

  FreeEndomorphism::FreeEndomorphism(int rank, std::vector<Word> images)
      : rank_(rank), images_(std::move(images)) {
    if (rank < 0) {
      throw RankError("rank must be nonnegative");
    }
    if (static_cast<int>(images_.size()) != rank) {
      throw RankError("expected " + std::to_string(rank) + " images, got "
                      + std::to_string(images_.size()));
    }
    for (Word const& w : images_) {
      if (w.max_index() > rank) {
        throw RankError("image word uses x" + std::to_string(w.max_index())
                        + " in rank " + std::to_string(rank));
      }
    }
  }

  FreeEndomorphism FreeEndomorphism::identity(int rank) {
    std::vector<Word> images;
    for (int i = 1; i <= rank; ++i) {
      images.push_back(Word::generator(i));
    }
    return FreeEndomorphism(rank, std::move(images));
  }

  std::size_t FreeEndomorphism::total_length() const noexcept {
    std::size_t total = 0;
    for (Word const& w : images_) {
      total += w.size();
    }
    return total;
  }

  Word apply(FreeEndomorphism const& e, Word const& w) {
    if (w.max_index() > e.rank()) {
      throw RankError("word uses x" + std::to_string(w.max_index())
                      + " beyond rank " + std::to_string(e.rank()));
    }
    std::vector<Letter> raw;
    for (Letter l : w.letters()) {
      Word const& img = e.image(l.index());
      if (l.sign() > 0) {
        raw.insert(raw.end(), img.letters().begin(), img.letters().end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend();
             ++it) {
          raw.push_back(it->inverse());
        }
      }
    }
    return reduce(raw);
  }

  FreeEndomorphism compose(FreeEndomorphism const& f,
                           FreeEndomorphism const& g) {
    if (f.rank() != g.rank()) {
      throw RankError("cannot compose endomorphisms of ranks "
                      + std::to_string(f.rank()) + " and "
                      + std::to_string(g.rank()));
    }
    std::vector<Word> images;
    images.reserve(g.rank());
    for (Word const& w : g.images()) {
      images.push_back(apply(f, w));
    }
    return FreeEndomorphism(f.rank(), std::move(images));
  }

  IntMatrix abelianization_matrix(FreeEndomorphism const& e) {
    int const n = e.rank();
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
      for (Letter l : e.images()[j].letters()) {
        m(l.index() - 1, j) += l.sign();
      }
    }
    return m;
  }

  std::string_view to_string(NielsenKind kind) {
    switch (kind) {
      case NielsenKind::invert:
        return "invert";
      case NielsenKind::left_mul:
        return "left_mul";
      case NielsenKind::right_mul:
        return "right_mul";
      case NielsenKind::swap:
        return "swap";
    }
    return "?";
  }

  NielsenKind nielsen_kind_from_string(std::string_view name) {
    for (auto k : {NielsenKind::invert,
                   NielsenKind::left_mul,
                   NielsenKind::right_mul,
                   NielsenKind::swap}) {
      if (to_string(k) == name) {
        return k;
      }
    }
    throw MalformedInput("unknown Nielsen move '" + std::string(name) + "'");
  }

  void apply_nielsen_move(std::vector<Word>& tuple, NielsenMove const& move) {
    int const n = static_cast<int>(tuple.size());
    if (move.i < 1 || move.i > n || move.j < 1 || move.j > n) {
      throw RankError("Nielsen move index out of range");
    }
    Word& ui       = tuple[move.i - 1];
    Word const& uj = tuple[move.j - 1];
    switch (move.kind) {
      case NielsenKind::invert:
        ui = invert(ui);
        return;
      case NielsenKind::left_mul:
      case NielsenKind::right_mul:
      case NielsenKind::swap:
        if (move.i == move.j) {
          throw MalformedInput("Nielsen move needs distinct indices");
        }
        break;
    }
    if (move.kind == NielsenKind::left_mul) {
      ui = multiply(uj, ui);
    } else if (move.kind == NielsenKind::right_mul) {
      ui = multiply(ui, uj);
    } else {
      std::swap(tuple[move.i - 1], tuple[move.j - 1]);
    }
  }

  namespace {
    std::vector<Word> replay(std::vector<Word> tuple,
                             std::vector<NielsenMove> const& trace) {
      for (NielsenMove const& m : trace) {
        apply_nielsen_move(tuple, m);
      }
      return tuple;
    }

    // Appends the inverse of a single move.
    void append_inverse(std::vector<NielsenMove>& out, NielsenMove const& m) {
      if (m.kind == NielsenKind::invert || m.kind == NielsenKind::swap) {
        out.push_back(m);
        return;
      }
      out.push_back({NielsenKind::invert, m.j, m.j});
      out.push_back(m);
      out.push_back({NielsenKind::invert, m.j, m.j});
    }
  }  // namespace

  Automorphism Automorphism::from_parts(FreeEndomorphism forward,
                                        FreeEndomorphism inverse,
                                        std::vector<NielsenMove> trace) {
    int const n = forward.rank();
    if (inverse.rank() != n) {
      throw RankError("forward and inverse ranks differ");
    }
    auto const id = FreeEndomorphism::identity(n);
    if (replay(forward.images(), trace) != id.images()) {
      throw MalformedInput("Nielsen trace does not reduce the forward map");
    }
    if (replay(id.images(), trace) != inverse.images()) {
      throw MalformedInput("Nielsen trace does not rebuild the inverse");
    }
    if (compose(forward, inverse) != id || compose(inverse, forward) != id) {
      throw MalformedInput("inverse is not a two-sided inverse");
    }
    return Automorphism(std::move(forward), std::move(inverse), std::move(trace));
  }

  Automorphism Automorphism::identity(int rank) {
    auto id = FreeEndomorphism::identity(rank);
    return Automorphism(id, id, {});
  }

  namespace {
    struct SignedMove {
      NielsenMove move;
      int sign;  // +1: by u_j, -1: by u_j^{-1}
    };

    // Either the single best shortening product move, or every
    // length-preserving one, in tie-break order.
    std::vector<SignedMove> product_moves(std::vector<Word> const& tuple,
                                          bool best_decrease_only) {
      int const n = static_cast<int>(tuple.size());
      std::vector<SignedMove> out;
      std::size_t best = 0;
      for (auto kind : {NielsenKind::left_mul, NielsenKind::right_mul}) {
        for (int i = 1; i <= n; ++i) {
          Word const& ui = tuple[i - 1];
          for (int j = 1; j <= n; ++j) {
            if (j == i) {
              continue;
            }
            Word const& uj = tuple[j - 1];
            for (int sign : {1, -1}) {
              Word const factor = sign > 0 ? uj : invert(uj);
              std::size_t len   = kind == NielsenKind::left_mul
                                      ? product_length(factor, ui)
                                      : product_length(ui, factor);
              if (best_decrease_only) {
                if (len < ui.size() && ui.size() - len > best) {
                  best = ui.size() - len;
                  out.assign(1, SignedMove{{kind, i, j}, sign});
                }
              } else if (len == ui.size()) {
                out.push_back(SignedMove{{kind, i, j}, sign});
              }
            }
          }
        }
      }
      return out;
    }

    void perform(std::vector<Word>& tuple,
                 std::vector<NielsenMove>& trace,
                 SignedMove const& sm) {
      if (sm.sign > 0) {
        apply_nielsen_move(tuple, sm.move);
        trace.push_back(sm.move);
        return;
      }
      NielsenMove const flip{NielsenKind::invert, sm.move.j, sm.move.j};
      for (auto const& m : {flip, sm.move, flip}) {
        apply_nielsen_move(tuple, m);
        trace.push_back(m);
      }
    }

    bool is_letter_tuple(std::vector<Word> const& tuple) {
      return std::all_of(tuple.begin(), tuple.end(),
                         [](Word const& w) { return w.size() == 1; });
    }

    constexpr std::size_t plateau_limit = 1U << 18;

    // Breadth-first search through length-preserving moves for a tuple that
    // admits a shortening move. Returns the path, or nullopt if the plateau
    // has none (or exceeds plateau_limit).
    std::optional<std::vector<SignedMove>>
    escape_plateau(std::vector<Word> const& start) {
      struct Node {
        std::vector<Word> tuple;
        std::size_t parent;
        SignedMove via;
      };
      std::vector<Node> nodes{{start, 0, {}}};
      std::map<std::vector<Word>, std::size_t> seen{{start, 0}};
      for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (head > 0 && !product_moves(nodes[head].tuple, true).empty()) {
          std::vector<SignedMove> path;
          for (std::size_t k = head; k != 0; k = nodes[k].parent) {
            path.push_back(nodes[k].via);
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        for (auto const& sm : product_moves(nodes[head].tuple, false)) {
          std::vector<Word> next = nodes[head].tuple;
          std::vector<NielsenMove> scratch;
          perform(next, scratch, sm);
          if (seen.contains(next)) {
            continue;
          }
          if (nodes.size() >= plateau_limit) {
            return std::nullopt;
          }
          seen.emplace(next, nodes.size());
          nodes.push_back(Node{std::move(next), head, sm});
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<Automorphism> certify_automorphism(FreeEndomorphism const& e) {
    int const n = e.rank();
    std::vector<Word> tuple = e.images();
    std::vector<NielsenMove> trace;

    while (true) {
      for (Word const& w : tuple) {
        if (w.empty()) {
          return std::nullopt;
        }
      }
      auto best = product_moves(tuple, true);
      if (!best.empty()) {
        perform(tuple, trace, best.front());
        continue;
      }
      if (is_letter_tuple(tuple)) {
        break;
      }
      auto path = escape_plateau(tuple);
      if (!path) {
        return std::nullopt;
      }
      for (auto const& sm : *path) {
        perform(tuple, trace, sm);
      }
    }

    // Basis test: a signed permutation of the generators.
    std::vector<bool> seen(n + 1, false);
    for (Word const& w : tuple) {
      if (w.size() != 1 || seen[w[0].index()]) {
        return std::nullopt;
      }
      seen[w[0].index()] = true;
    }
    for (int i = 1; i <= n; ++i) {
      if (tuple[i - 1][0].sign() < 0) {
        NielsenMove const m{NielsenKind::invert, i, i};
        apply_nielsen_move(tuple, m);
        trace.push_back(m);
      }
    }
    for (int i = 1; i <= n; ++i) {
      if (tuple[i - 1][0].index() == i) {
        continue;
      }
      for (int j = i + 1; j <= n; ++j) {
        if (tuple[j - 1][0].index() == i) {
          NielsenMove const m{NielsenKind::swap, i, j};
          apply_nielsen_move(tuple, m);
          trace.push_back(m);
          break;
        }
      }
    }

    auto inverse_images = replay(FreeEndomorphism::identity(n).images(), trace);
    return Automorphism(
        e, FreeEndomorphism(n, std::move(inverse_images)), std::move(trace));
  }

  Automorphism random_automorphism(int rank, int move_count,
                                   std::uint64_t seed) {
    if (rank < 0) {
      throw RankError("rank must be nonnegative");
    }
    if (move_count < 0) {
      throw LimitError("move_count must be nonnegative");
    }
    auto const id = FreeEndomorphism::identity(rank);
    if (rank == 0) {
      return Automorphism(id, id, {});
    }
    std::mt19937_64 rng(seed);
    // Modular reduction rather than std::uniform_int_distribution keeps the
    // stream identical across standard library implementations.
    auto draw = [&rng](int bound) {
      return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
    };
    std::vector<Word> tuple = id.images();
    std::vector<NielsenMove> moves;
    for (int k = 0; k < move_count; ++k) {
      auto kind = static_cast<NielsenKind>(draw(4));
      int i     = 1 + draw(rank);
      int j     = i;
      if (rank == 1) {
        kind = NielsenKind::invert;
      } else if (kind != NielsenKind::invert) {
        j = 1 + draw(rank - 1);
        if (j >= i) {
          ++j;
        }
      }
      NielsenMove const m{kind, i, j};
      apply_nielsen_move(tuple, m);
      moves.push_back(m);
    }
    std::vector<NielsenMove> trace;
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
      append_inverse(trace, *it);
    }
    FreeEndomorphism forward(rank, std::move(tuple));
    auto inverse_images = replay(id.images(), trace);
    return Automorphism(std::move(forward),
                        FreeEndomorphism(rank, std::move(inverse_images)),
                        std::move(trace));
  }

  Automorphism operator*(Automorphism const& a, Automorphism const& b) {
    std::vector<NielsenMove> trace = b.trace_;
    trace.insert(trace.end(), a.trace_.begin(), a.trace_.end());
    return Automorphism(compose(a.forward_, b.forward_),
                        compose(b.inverse_, a.inverse_),
                        std::move(trace));
  }

  Automorphism inverse(Automorphism const& a) {
    std::vector<NielsenMove> trace;
    for (auto it = a.trace_.rbegin(); it != a.trace_.rend(); ++it) {
      append_inverse(trace, *it);
    }
    return Automorphism(a.inverse_, a.forward_, std::move(trace));
  }

}  // namespace calegari
