#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "combx/bigint.hpp"

namespace combx {

using BigRational = boost::multiprecision::cpp_rational;

// Truncated formal power series with exact rational coefficients. A series of
// order m carries coefficients of x^0 .. x^(m-1); every operation truncates to
// the smaller operand order, so results are exact as far as they go.
class PowerSeries {
public:
    explicit PowerSeries(int order);  // the zero series
    PowerSeries(std::vector<BigRational> coeffs);

    static PowerSeries constant(const BigRational& c, int order);
    static PowerSeries x(int order);  // the monomial x; needs order >= 2

    int order() const { return static_cast<int>(coeffs_.size()); }
    const BigRational& coeff(int k) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    // coefficients as exact integers; throws std::domain_error if any
    // coefficient has a denominator
    std::vector<BigCount> integer_coeffs() const;

    PowerSeries operator+(const PowerSeries& rhs) const;
    PowerSeries operator-(const PowerSeries& rhs) const;
    PowerSeries operator*(const PowerSeries& rhs) const;

    // 1/this; requires a nonzero constant term
    PowerSeries reciprocal() const;

    // this(inner); requires inner's constant term to be zero, otherwise the
    // substitution would need infinitely many terms per coefficient
    PowerSeries compose(const PowerSeries& inner) const;

    bool operator==(const PowerSeries&) const = default;

private:
    std::vector<BigRational> coeffs_;
};

// The Catalan number generating function C(x), truncated to `order` terms,
// obtained by iterating the fixed point C = 1 + x*C^2 (each pass settles one
// more coefficient).
PowerSeries catalan_series(int order);

}  // namespace combx
