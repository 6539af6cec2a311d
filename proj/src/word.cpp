#include "calegari/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "calegari/error.hpp"

namespace calegari {

  Letter::Letter(int index, int sign) : value_(0) {
    if (index < 1) {
      throw MalformedInput("generator index must be >= 1, got "
                           + std::to_string(index));
    }
    if (sign != 1 && sign != -1) {
      throw MalformedInput("letter sign must be +1 or -1, got "
                           + std::to_string(sign));
    }
    value_ = sign * index;
  }

  Letter Letter::from_signed(int value) {
    if (value == 0 || value == std::numeric_limits<int>::min()) {
      throw MalformedInput("invalid signed letter " + std::to_string(value));
    }
    return Letter(value, Unchecked{});
  }

  Word Word::generator(int index) {
    return Word({Letter(index, 1)});
  }

  int Word::max_index() const noexcept {
    int m = 0;
    for (Letter l : letters_) {
      m = std::max(m, l.index());
    }
    return m;
  }

  std::vector<int> Word::to_signed() const {
    std::vector<int> out;
    out.reserve(letters_.size());
    for (Letter l : letters_) {
      out.push_back(l.signed_value());
    }
    return out;
  }

  Word reduce(std::span<const Letter> raw) {
    std::vector<Letter> stack;
    stack.reserve(raw.size());
    for (Letter l : raw) {
      if (!stack.empty() && stack.back().cancels(l)) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  Word reduce_signed(std::span<const int> raw) {
    std::vector<Letter> letters;
    letters.reserve(raw.size());
    for (int v : raw) {
      letters.push_back(Letter::from_signed(v));
    }
    return reduce(letters);
  }

  namespace {
    // Length of the longest suffix of u cancelling against a prefix of v.
    std::size_t cancellation(Word const& u, Word const& v) {
      std::size_t c   = 0;
      std::size_t max = std::min(u.size(), v.size());
      while (c < max && u[u.size() - 1 - c].cancels(v[c])) {
        ++c;
      }
      return c;
    }
  }  // namespace

  Word multiply(Word const& u, Word const& v) {
    std::size_t c = cancellation(u, v);
    std::vector<Letter> out;
    out.reserve(u.size() + v.size() - 2 * c);
    out.insert(out.end(), u.letters_.begin(), u.letters_.end() - c);
    out.insert(out.end(), v.letters_.begin() + c, v.letters_.end());
    return Word(std::move(out));
  }

  Word multiply(std::initializer_list<Word> factors) {
    Word result;
    for (Word const& f : factors) {
      result = multiply(result, f);
    }
    return result;
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  std::int64_t exponent_sum(Word const& w, int index) {
    std::int64_t sum = 0;
    for (Letter l : w.letters()) {
      if (l.index() == index) {
        sum += l.sign();
      }
    }
    return sum;
  }

  std::size_t occurrences(Word const& w, int index) {
    return std::count_if(w.letters().begin(),
                         w.letters().end(),
                         [index](Letter l) { return l.index() == index; });
  }

  std::size_t product_length(Word const& u, Word const& v) {
    return u.size() + v.size() - 2 * cancellation(u, v);
  }

  Word cyclic_reduce(Word const& w) {
    std::size_t lo = 0;
    std::size_t hi = w.size();
    while (hi - lo >= 2 && w[lo].cancels(w[hi - 1])) {
      ++lo;
      --hi;
    }
    if (lo == 0) {
      return w;
    }
    return Word(std::vector<Letter>(w.letters_.begin() + lo,
                                    w.letters_.begin() + hi));
  }

  bool is_cyclically_reduced(Word const& w) {
    return w.size() < 2 || !w.front().cancels(w.back());
  }

  Word rotate(Word const& w, std::size_t shift) {
    if (w.empty()) {
      return w;
    }
    shift %= w.size();
    std::vector<Letter> out(w.letters_);
    std::rotate(out.begin(), out.begin() + shift, out.end());
    return Word(std::move(out));
  }

  Word parse_word(std::string_view text, std::optional<int> rank) {
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto is_space   = [](char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    };
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && !is_space(text[end])) {
        ++end;
      }
      std::string_view token = text.substr(pos, end - pos);
      pos                    = end;
      if (token.size() < 2 || (token[0] != 'x' && token[0] != 'X')) {
        throw MalformedInput("unknown token '" + std::string(token) + "'");
      }
      int index       = 0;
      auto const* beg = token.data() + 1;
      auto const* fin = token.data() + token.size();
      auto [ptr, ec]  = std::from_chars(beg, fin, index);
      if (ec != std::errc() || ptr != fin || !std::isdigit(*beg)) {
        throw MalformedInput("unknown token '" + std::string(token) + "'");
      }
      if (index < 1) {
        throw MalformedInput("generator index must be >= 1 in '"
                             + std::string(token) + "'");
      }
      if (rank && index > *rank) {
        throw RankError("generator x" + std::to_string(index)
                        + " exceeds rank " + std::to_string(*rank));
      }
      letters.emplace_back(index, token[0] == 'x' ? 1 : -1);
    }
    return reduce(letters);
  }

  std::string format_word(Word const& w) {
    std::string out;
    for (Letter l : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += l.sign() > 0 ? 'x' : 'X';
      out += std::to_string(l.index());
    }
    return out;
  }

}  // namespace calegari
