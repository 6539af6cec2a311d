#pragma once

// Reduced words in the free group F_n on generators x_1, ..., x_n.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace calegari {

  // A generator x_k (sign +1) or its inverse (sign -1). Indices are 1-based.
  class Letter {
   public:
    Letter(int index, int sign);

    // +k for x_k, -k for x_k^{-1}; 0 is rejected.
    static Letter from_signed(int value);

    int index() const noexcept {
      return value_ < 0 ? -value_ : value_;
    }
    int sign() const noexcept {
      return value_ < 0 ? -1 : 1;
    }
    int signed_value() const noexcept {
      return value_;
    }
    Letter inverse() const noexcept {
      return Letter(-value_, Unchecked{});
    }
    bool cancels(Letter other) const noexcept {
      return value_ == -other.value_;
    }

    friend bool operator==(Letter, Letter) = default;
    friend std::strong_ordering operator<=>(Letter, Letter) = default;

   private:
    struct Unchecked {};
    constexpr Letter(int value, Unchecked) noexcept : value_(value) {}

    int value_;
  };

  // Immutable freely reduced word. The empty word is the identity.
  class Word {
   public:
    Word() = default;

    static Word generator(int index);

    std::span<const Letter> letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters_[i];
    }
    Letter front() const {
      return letters_.front();
    }
    Letter back() const {
      return letters_.back();
    }

    // Largest generator index occurring, 0 for the identity.
    int max_index() const noexcept;

    std::vector<int> to_signed() const;

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b) {
      return a.letters_ <=> b.letters_;
    }

   private:
    friend Word reduce(std::span<const Letter>);
    friend Word multiply(Word const&, Word const&);
    friend Word invert(Word const&);
    friend Word cyclic_reduce(Word const&);
    friend Word rotate(Word const&, std::size_t);

    explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

    std::vector<Letter> letters_;
  };

  // Free reduction of an arbitrary letter sequence (stack-based, linear time).
  Word reduce(std::span<const Letter> raw);

  // Same, from the signed-integer encoding; throws MalformedInput on a 0.
  Word reduce_signed(std::span<const int> raw);

  Word multiply(Word const& u, Word const& v);

  Word multiply(std::initializer_list<Word> factors);

  Word invert(Word const& w);

  // Signed count of occurrences of x_index.
  std::int64_t exponent_sum(Word const& w, int index);

  // Number of occurrences of x_index or its inverse.
  std::size_t occurrences(Word const& w, int index);

  // Length of the reduced product u*v, without building it.
  std::size_t product_length(Word const& u, Word const& v);

  // Strips inverse pairs from the two ends; the result is a conjugate of w.
  Word cyclic_reduce(Word const& w);

  bool is_cyclically_reduced(Word const& w);

  // Cyclic rotation moving the first `shift` letters to the end. Requires a
  // cyclically reduced word, so the result stays freely reduced.
  Word rotate(Word const& w, std::size_t shift);

  // Parses the text grammar `x3 X1 x2`; `X` denotes an inverse. When `rank`
  // is given, indices above it raise RankError.
  Word parse_word(std::string_view text, std::optional<int> rank = std::nullopt);

  std::string format_word(Word const& w);

}  // namespace calegari
