#include "calegari/polynomial.hpp"

#include "calegari/error.hpp"

namespace calegari {

  PolynomialZ::PolynomialZ(std::vector<std::int64_t> coefficients)
      : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
      coeffs_.pop_back();
    }
  }

  std::int64_t PolynomialZ::evaluate(std::int64_t t) const {
    std::int64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = checked::add(checked::mul(acc, t), *it);
    }
    return acc;
  }

  PolynomialZ PolynomialZ::unit_normalized() const {
    if (coeffs_.empty()) {
      return *this;
    }
    std::size_t low = 0;
    while (coeffs_[low] == 0) {
      ++low;
    }
    std::vector<std::int64_t> out(coeffs_.begin() + low, coeffs_.end());
    if (out.back() < 0) {
      for (auto& c : out) {
        c = -c;
      }
    }
    return PolynomialZ(std::move(out));
  }

  std::string PolynomialZ::to_string() const {
    if (coeffs_.empty()) {
      return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      std::int64_t c = coeffs_[k];
      if (c == 0) {
        continue;
      }
      std::int64_t mag = c < 0 ? -c : c;
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || k == 0) {
        out += std::to_string(mag);
      }
      if (k >= 1) {
        out += "t";
      }
      if (k >= 2) {
        out += "^" + std::to_string(k);
      }
    }
    return out;
  }

  PolynomialZ operator*(PolynomialZ const& a, PolynomialZ const& b) {
    if (a.is_zero() || b.is_zero()) {
      return PolynomialZ();
    }
    auto const& x = a.coefficients();
    auto const& y = b.coefficients();
    std::vector<std::int64_t> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        out[i + j] = checked::add(out[i + j], checked::mul(x[i], y[j]));
      }
    }
    return PolynomialZ(std::move(out));
  }

  bool equal_up_to_unit(PolynomialZ const& a, PolynomialZ const& b) {
    return a.unit_normalized() == b.unit_normalized();
  }

  PolynomialZ characteristic_polynomial(IntMatrix const& a) {
    if (!a.is_square()) {
      throw RankError("characteristic polynomial of a non-square matrix");
    }
    int const n = a.rows();
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    IntMatrix m(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
      // M_k = A M_{k-1} + c_{n-k+1} I
      m = a * m;
      for (int i = 0; i < n; ++i) {
        m(i, i) = checked::add(m(i, i), c[n - k + 1]);
      }
      IntMatrix am      = a * m;
      std::int64_t trace = 0;
      for (int i = 0; i < n; ++i) {
        trace = checked::add(trace, am(i, i));
      }
      c[n - k] = -trace / k;
    }
    return PolynomialZ(std::move(c));
  }

}  // namespace calegari
