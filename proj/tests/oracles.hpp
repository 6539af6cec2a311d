#pragma once

// Slow reference implementations used to check the library. Nothing here
// calls into calegari.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

  using Raw = std::vector<int>;
  using Mat = std::vector<std::vector<long long>>;

  // Quadratic reduction: delete the leftmost cancelling pair until none is
  // left.
  inline Raw reduce(Raw w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + static_cast<long>(i),
                  w.begin() + static_cast<long>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline Raw concat(Raw a, Raw const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline Raw inverse(Raw w) {
    std::reverse(w.begin(), w.end());
    for (int& x : w) {
      x = -x;
    }
    return w;
  }

  // Letter-by-letter substitution.
  inline Raw substitute(std::vector<Raw> const& images, Raw const& w) {
    Raw out;
    for (int x : w) {
      Raw img = images[std::abs(x) - 1];
      out     = concat(out, x > 0 ? img : inverse(img));
    }
    return reduce(out);
  }

  inline std::vector<long long> tally(Raw const& w, int n) {
    std::vector<long long> t(n, 0);
    for (int x : w) {
      t[std::abs(x) - 1] += x > 0 ? 1 : -1;
    }
    return t;
  }

  inline Raw random_raw(std::mt19937_64& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n), sgn(0, 1);
    Raw w(len(rng));
    for (int& x : w) {
      x = gen(rng) * (sgn(rng) ? 1 : -1);
    }
    return w;
  }

  // Leibniz expansion over all permutations.
  inline long long det(Mat const& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    long long total = 0;
    do {
      long long term = 1;
      for (int i = 0; i < n; ++i) {
        term *= m[i][p[i]];
      }
      int inversions = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          inversions += p[i] > p[j];
        }
      }
      total += inversions % 2 ? -term : term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
  }

  struct Frac {
    long long num = 0, den = 1;
    Frac(long long n = 0, long long d = 1) : num(n), den(d) {
      if (den < 0) {
        num = -num;
        den = -den;
      }
      long long g = std::gcd(num < 0 ? -num : num, den);
      if (g > 1) {
        num /= g;
        den /= g;
      }
    }
  };
  inline Frac operator+(Frac a, Frac b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  inline Frac operator-(Frac a, Frac b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  inline Frac operator*(Frac a, Frac b) {
    return Frac(a.num * b.num, a.den * b.den);
  }
  inline Frac operator/(Frac a, Frac b) {
    return Frac(a.num * b.den, a.den * b.num);
  }

  // Polynomial of degree <= d through (k, values[k]), k = 0..d, by Lagrange
  // interpolation. Coefficients constant term first, trailing zeros removed.
  inline std::vector<long long> interpolate(std::vector<long long> const& values) {
    int d = static_cast<int>(values.size()) - 1;
    std::vector<Frac> coeff(d + 1);
    for (int k = 0; k <= d; ++k) {
      std::vector<Frac> basis{Frac(1)};
      Frac scale(values[k]);
      for (int m = 0; m <= d; ++m) {
        if (m == k) {
          continue;
        }
        std::vector<Frac> next(basis.size() + 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
          next[i + 1] = next[i + 1] + basis[i];
          next[i]     = next[i] - basis[i] * Frac(m);
        }
        basis = next;
        scale = scale / Frac(k - m);
      }
      for (int i = 0; i <= d; ++i) {
        coeff[i] = coeff[i] + basis[i] * scale;
      }
    }
    std::vector<long long> out;
    for (auto const& c : coeff) {
      if (c.den != 1) {
        std::abort();
      }
      out.push_back(c.num);
    }
    while (!out.empty() && out.back() == 0) {
      out.pop_back();
    }
    return out;
  }

  // det(V - t V^T).
  inline std::vector<long long> seifert_alexander(Mat const& v) {
    int n = static_cast<int>(v.size());
    std::vector<long long> values;
    for (int t = 0; t <= n; ++t) {
      Mat m(n, std::vector<long long>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          m[i][j] = v[i][j] - t * v[j][i];
        }
      }
      values.push_back(det(m));
    }
    return interpolate(values);
  }

  // det(t I - A).
  inline std::vector<long long> charpoly(Mat const& a) {
    int n = static_cast<int>(a.size());
    std::vector<long long> values;
    for (int t = 0; t <= n; ++t) {
      Mat m(n, std::vector<long long>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          m[i][j] = (i == j ? t : 0) - a[i][j];
        }
      }
      values.push_back(det(m));
    }
    return interpolate(values);
  }

  // Shift out powers of t and fix the sign of the leading coefficient.
  inline std::vector<long long> unit_normal(std::vector<long long> p) {
    while (!p.empty() && p.front() == 0) {
      p.erase(p.begin());
    }
    if (!p.empty() && p.back() < 0) {
      for (auto& c : p) {
        c = -c;
      }
    }
    return p;
  }

}  // namespace oracle
