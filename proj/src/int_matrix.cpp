#include "calegari/int_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "calegari/error.hpp"

namespace calegari {

  namespace {
    __extension__ using wide = __int128;
  }

  namespace checked {
    std::int64_t add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw ArithmeticOverflow("integer overflow in addition");
      }
      return r;
    }
    std::int64_t sub(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw ArithmeticOverflow("integer overflow in subtraction");
      }
      return r;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw ArithmeticOverflow("integer overflow in multiplication");
      }
      return r;
    }
  }  // namespace checked

  IntMatrix::IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        entries_(static_cast<std::size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) {
      throw MalformedInput("matrix dimensions must be nonnegative");
    }
  }

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : rows_(static_cast<int>(rows.size())),
        cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
    for (auto const& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw MalformedInput("ragged matrix rows");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix
  IntMatrix::from_rows(std::vector<std::vector<std::int64_t>> const& rows,
                       int cols_if_empty) {
    int cols = rows.empty() ? cols_if_empty : static_cast<int>(rows[0].size());
    IntMatrix m(static_cast<int>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != cols) {
        throw MalformedInput("ragged matrix rows");
      }
      for (int c = 0; c < cols; ++c) {
        m(static_cast<int>(r), c) = rows[r][c];
      }
    }
    return m;
  }

  std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
    std::vector<std::vector<std::int64_t>> out(rows_);
    for (int r = 0; r < rows_; ++r) {
      out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                    entries_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
    }
    return out;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw RankError("matrix product dimension mismatch");
    }
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int k = 0; k < a.cols(); ++k) {
        std::int64_t aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (int j = 0; j < b.cols(); ++j) {
          out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
        }
      }
    }
    return out;
  }

  IntMatrix operator-(IntMatrix const& a, IntMatrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw RankError("matrix difference dimension mismatch");
    }
    IntMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) {
        out(i, j) = checked::sub(a(i, j), b(i, j));
      }
    }
    return out;
  }

  IntMatrix transpose(IntMatrix const& a) {
    IntMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) {
        out(j, i) = a(i, j);
      }
    }
    return out;
  }

  std::int64_t determinant(IntMatrix const& a) {
    if (!a.is_square()) {
      throw RankError("determinant of a non-square matrix");
    }
    int const n = a.rows();
    if (n == 0) {
      return 1;
    }
    IntMatrix m    = a;
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m(k, k) == 0) {
        int swap_row = -1;
        for (int r = k + 1; r < n; ++r) {
          if (m(r, k) != 0) {
            swap_row = r;
            break;
          }
        }
        if (swap_row < 0) {
          return 0;
        }
        for (int c = 0; c < n; ++c) {
          std::swap(m(k, c), m(swap_row, c));
        }
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) {
          // Bareiss: the division by the previous pivot is exact.
          wide num = static_cast<wide>(m(i, j)) * m(k, k)
                         - static_cast<wide>(m(i, k)) * m(k, j);
          wide q = num / prev;
          if (q > INT64_MAX || q < INT64_MIN) {
            throw ArithmeticOverflow("overflow in Bareiss elimination");
          }
          m(i, j) = static_cast<std::int64_t>(q);
        }
        m(i, k) = 0;
      }
      prev = m(k, k);
    }
    return checked::mul(sign, m(n - 1, n - 1));
  }

  std::vector<std::int64_t> smith_diagonal(IntMatrix const& a) {
    IntMatrix m    = a;
    int const rows = m.rows();
    int const cols = m.cols();
    std::vector<std::int64_t> diag;

    auto swap_rows = [&](int r1, int r2) {
      for (int c = 0; c < cols; ++c) {
        std::swap(m(r1, c), m(r2, c));
      }
    };
    auto swap_cols = [&](int c1, int c2) {
      for (int r = 0; r < rows; ++r) {
        std::swap(m(r, c1), m(r, c2));
      }
    };
    // row r2 -= q * row r1
    auto row_op = [&](int r2, int r1, std::int64_t q) {
      for (int c = 0; c < cols; ++c) {
        m(r2, c) = checked::sub(m(r2, c), checked::mul(q, m(r1, c)));
      }
    };
    auto col_op = [&](int c2, int c1, std::int64_t q) {
      for (int r = 0; r < rows; ++r) {
        m(r, c2) = checked::sub(m(r, c2), checked::mul(q, m(r, c1)));
      }
    };

    for (int t = 0; t < std::min(rows, cols); ++t) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      auto find_pivot = [&](int& pr, int& pc) {
        pr = pc = -1;
        std::int64_t best = 0;
        for (int r = t; r < rows; ++r) {
          for (int c = t; c < cols; ++c) {
            std::int64_t v = std::llabs(m(r, c));
            if (v != 0 && (best == 0 || v < best)) {
              best = v;
              pr   = r;
              pc   = c;
            }
          }
        }
      };
      int pr, pc;
      find_pivot(pr, pc);
      if (pr < 0) {
        break;
      }
      while (true) {
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (int r = t + 1; r < rows; ++r) {
          if (m(r, t) != 0) {
            row_op(r, t, m(r, t) / m(t, t));
            clean = clean && m(r, t) == 0;
          }
        }
        for (int c = t + 1; c < cols; ++c) {
          if (m(t, c) != 0) {
            col_op(c, t, m(t, c) / m(t, t));
            clean = clean && m(t, c) == 0;
          }
        }
        if (clean) {
          // Enforce divisibility of the remaining block by the pivot.
          int bad_r = -1;
          for (int r = t + 1; r < rows && bad_r < 0; ++r) {
            for (int c = t + 1; c < cols; ++c) {
              if (m(r, c) % m(t, t) != 0) {
                bad_r = r;
                break;
              }
            }
          }
          if (bad_r < 0) {
            break;
          }
          for (int c = t; c < cols; ++c) {
            m(t, c) = checked::add(m(t, c), m(bad_r, c));
          }
        }
        find_pivot(pr, pc);
      }
      diag.push_back(std::llabs(m(t, t)));
    }
    return diag;
  }

}  // namespace calegari
