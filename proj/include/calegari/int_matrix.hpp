#pragma once

// Exact integer matrices: products, Bareiss determinants, Smith normal form.
// All arithmetic is overflow-checked and throws ArithmeticOverflow.

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace calegari {

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::vector<std::vector<std::int64_t>> const& rows,
                               int cols_if_empty = 0);

    int rows() const noexcept {
      return rows_;
    }
    int cols() const noexcept {
      return cols_;
    }
    bool is_square() const noexcept {
      return rows_ == cols_;
    }

    // 0-based access.
    std::int64_t& operator()(int r, int c) {
      return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }
    std::int64_t operator()(int r, int c) const {
      return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<std::vector<std::int64_t>> to_rows() const;

    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> entries_;
  };

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b);
  IntMatrix transpose(IntMatrix const& a);

  // Fraction-free Gaussian elimination; exact for square matrices.
  std::int64_t determinant(IntMatrix const& a);

  // Nonzero diagonal entries d_1 | d_2 | ... | d_r (all positive) of the Smith
  // normal form; r is the rank.
  std::vector<std::int64_t> smith_diagonal(IntMatrix const& a);

  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b);
    std::int64_t sub(std::int64_t a, std::int64_t b);
    std::int64_t mul(std::int64_t a, std::int64_t b);
  }  // namespace checked

}  // namespace calegari
