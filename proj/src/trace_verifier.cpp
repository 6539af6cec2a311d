#include "calegari/trace_verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

namespace calegari {

  namespace {
    // Plain signed-integer words; deliberately independent of Word.
    using Raw = std::vector<int>;

    struct State {
      int generators;
      std::vector<Raw> relators;
    };

    struct Illegal {
      std::string reason;
    };

    Raw free_reduce(Raw const& in) {
      Raw out;
      for (int x : in) {
        if (!out.empty() && out.back() == -x) {
          out.pop_back();
        } else {
          out.push_back(x);
        }
      }
      return out;
    }

    Raw cyclic(Raw const& in) {
      Raw w = free_reduce(in);
      std::size_t a = 0;
      std::size_t b = w.size();
      while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
      }
      return Raw(w.begin() + a, w.begin() + b);
    }

    Raw inverse_of(Raw const& w) {
      Raw out(w.rbegin(), w.rend());
      for (int& x : out) {
        x = -x;
      }
      return out;
    }

    Raw concat(std::initializer_list<Raw> parts) {
      Raw out;
      for (Raw const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    void require(bool cond, std::string const& reason) {
      if (!cond) {
        throw Illegal{reason};
      }
    }

    bool letters_within(Raw const& w, int generators) {
      return std::all_of(w.begin(), w.end(), [generators](int x) {
        return x != 0 && std::abs(x) <= generators;
      });
    }

    Raw& relator_at(State& s, int i) {
      require(i >= 1 && static_cast<std::size_t>(i) <= s.relators.size(),
              "relator index " + std::to_string(i) + " out of range");
      return s.relators[i - 1];
    }

    void step(State& s, TietzeMove const& m) {
      switch (m.kind) {
        case TietzeKind::invert_relator: {
          Raw& r = relator_at(s, m.relator);
          r      = cyclic(inverse_of(r));
          return;
        }
        case TietzeKind::cyclic_shift: {
          Raw& r = relator_at(s, m.relator);
          require(m.shift >= 0
                      && (m.shift == 0
                          || static_cast<std::size_t>(m.shift) < r.size()),
                  "shift out of range");
          Raw rotated(r.begin() + m.shift, r.end());
          rotated.insert(rotated.end(), r.begin(), r.begin() + m.shift);
          r = cyclic(rotated);
          return;
        }
        case TietzeKind::multiply_relator_by_conjugate_of_other: {
          require(m.relator != m.other, "relator multiplied by itself");
          require(m.exponent == 1 || m.exponent == -1, "bad exponent");
          Raw const other = relator_at(s, m.other);
          Raw& r          = relator_at(s, m.relator);
          Raw const w     = m.word.to_signed();
          require(letters_within(w, s.generators), "bad conjugator");
          Raw const rj = m.exponent > 0 ? other : inverse_of(other);
          r            = cyclic(concat({r, w, rj, inverse_of(w)}));
          return;
        }
        case TietzeKind::eliminate_generator_via_relator: {
          int const k = m.generator;
          require(k >= 1 && k <= s.generators, "generator out of range");
          Raw const r = relator_at(s, m.relator);
          auto const hits = std::count_if(
              r.begin(), r.end(), [k](int x) { return std::abs(x) == k; });
          require(hits == 1, "generator does not occur exactly once");
          auto pos = static_cast<std::size_t>(
              std::find_if(r.begin(), r.end(),
                           [k](int x) { return std::abs(x) == k; })
              - r.begin());
          // r = u x^e v  =>  x^e = (v u)^{-1}
          Raw const u(r.begin(), r.begin() + pos);
          Raw const v(r.begin() + pos + 1, r.end());
          Raw value = inverse_of(concat({v, u}));
          if (r[pos] < 0) {
            value = inverse_of(value);
          }
          auto shift_down = [k](int x) {
            int const a = std::abs(x);
            return a > k ? (x > 0 ? x - 1 : x + 1) : x;
          };
          std::vector<Raw> out;
          for (std::size_t t = 0; t < s.relators.size(); ++t) {
            if (static_cast<int>(t) == m.relator - 1) {
              continue;
            }
            Raw expanded;
            for (int x : s.relators[t]) {
              if (x == k) {
                expanded.insert(expanded.end(), value.begin(), value.end());
              } else if (x == -k) {
                Raw inv = inverse_of(value);
                expanded.insert(expanded.end(), inv.begin(), inv.end());
              } else {
                expanded.push_back(x);
              }
            }
            for (int& x : expanded) {
              x = shift_down(x);
            }
            out.push_back(cyclic(expanded));
          }
          s.relators = std::move(out);
          s.generators -= 1;
          return;
        }
        case TietzeKind::add_trivial_generator_and_relator: {
          Raw const w = m.word.to_signed();
          require(letters_within(w, s.generators), "bad generator value");
          s.generators += 1;
          s.relators.push_back(cyclic(concat({Raw{s.generators}, inverse_of(w)})));
          return;
        }
        case TietzeKind::remove_trivial_relator: {
          Raw& r = relator_at(s, m.relator);
          require(r.empty(), "relator is not trivial");
          s.relators.erase(s.relators.begin() + (m.relator - 1));
          return;
        }
      }
      throw Illegal{"unknown move"};
    }
  }  // namespace

  TraceVerdict verify_trace(Presentation const& start,
                            TrivializationTrace const& trace) {
    State s{start.generator_count(), {}};
    for (Word const& r : start.relators()) {
      s.relators.push_back(cyclic(r.to_signed()));
    }
    for (std::size_t i = 0; i < trace.moves.size(); ++i) {
      try {
        step(s, trace.moves[i]);
      } catch (Illegal const& e) {
        return TraceVerdict{false, i, e.reason};
      }
    }
    if (s.generators != 0 || !s.relators.empty()) {
      return TraceVerdict{false,
                          std::nullopt,
                          "trace ends with " + std::to_string(s.generators)
                              + " generators and "
                              + std::to_string(s.relators.size())
                              + " relators"};
    }
    return TraceVerdict{true, std::nullopt, ""};
  }

}  // namespace calegari
