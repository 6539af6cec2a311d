#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "calegari/int_matrix.hpp"

namespace calegari {

  // Integer polynomial, coefficients stored constant term first and trimmed
  // so that the leading coefficient is nonzero (the zero polynomial is empty).
  class PolynomialZ {
   public:
    PolynomialZ() = default;
    explicit PolynomialZ(std::vector<std::int64_t> coefficients);

    std::vector<std::int64_t> const& coefficients() const noexcept {
      return coeffs_;
    }
    bool is_zero() const noexcept {
      return coeffs_.empty();
    }
    // -1 for the zero polynomial.
    int degree() const noexcept {
      return static_cast<int>(coeffs_.size()) - 1;
    }
    std::int64_t evaluate(std::int64_t t) const;

    // Representative of {±t^k p}: lowest nonzero coefficient moved to the
    // constant term, leading coefficient positive.
    PolynomialZ unit_normalized() const;

    std::string to_string() const;

    friend bool operator==(PolynomialZ const&, PolynomialZ const&) = default;

   private:
    std::vector<std::int64_t> coeffs_;
  };

  PolynomialZ operator*(PolynomialZ const& a, PolynomialZ const& b);

  bool equal_up_to_unit(PolynomialZ const& a, PolynomialZ const& b);

  // det(tI - A) by the Faddeev-LeVerrier recurrence (all divisions exact).
  PolynomialZ characteristic_polynomial(IntMatrix const& a);

}  // namespace calegari
