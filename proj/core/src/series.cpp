#include "combx/series.hpp"

#include <stdexcept>

namespace combx {

PowerSeries::PowerSeries(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    coeffs_.assign(static_cast<size_t>(order), BigRational(0));
}

PowerSeries::PowerSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series order must be >= 1");
}

PowerSeries PowerSeries::constant(const BigRational& c, int order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::x(int order) {
    if (order < 2) throw std::invalid_argument("monomial x needs order >= 2");
    PowerSeries s(order);
    s.coeffs_[1] = 1;
    return s;
}

const BigRational& PowerSeries::coeff(int k) const {
    if (k < 0 || k >= order()) throw std::out_of_range("coefficient index outside truncation order");
    return coeffs_[static_cast<size_t>(k)];
}

std::vector<BigCount> PowerSeries::integer_coeffs() const {
    std::vector<BigCount> out;
    out.reserve(coeffs_.size());
    for (const auto& q : coeffs_) {
        if (boost::multiprecision::denominator(q) != 1)
            throw std::domain_error("series coefficient is not an integer");
        out.push_back(boost::multiprecision::numerator(q));
    }
    return out;
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
    const int m = std::min(order(), rhs.order());
    PowerSeries out(m);
    for (int k = 0; k < m; ++k)
        out.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] + rhs.coeffs_[static_cast<size_t>(k)];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
    const int m = std::min(order(), rhs.order());
    PowerSeries out(m);
    for (int k = 0; k < m; ++k)
        out.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] - rhs.coeffs_[static_cast<size_t>(k)];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
    const int m = std::min(order(), rhs.order());
    PowerSeries out(m);
    for (int i = 0; i < m; ++i) {
        if (coeffs_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j < m; ++j)
            out.coeffs_[static_cast<size_t>(i + j)] +=
                coeffs_[static_cast<size_t>(i)] * rhs.coeffs_[static_cast<size_t>(j)];
    }
    return out;
}

PowerSeries PowerSeries::reciprocal() const {
    if (coeffs_[0] == 0)
        throw std::domain_error("reciprocal needs a nonzero constant term");
    const int m = order();
    PowerSeries out(m);
    const BigRational inv0 = BigRational(1) / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (int k = 1; k < m; ++k) {
        BigRational acc = 0;
        for (int j = 1; j <= k; ++j)
            acc += coeffs_[static_cast<size_t>(j)] * out.coeffs_[static_cast<size_t>(k - j)];
        out.coeffs_[static_cast<size_t>(k)] = -inv0 * acc;
    }
    return out;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (inner.coeffs_[0] != 0)
        throw std::domain_error("composition needs a zero constant term in the inner series");
    const int m = std::min(order(), inner.order());
    // Horner evaluation: result = a_0 + inner*(a_1 + inner*(a_2 + ...))
    PowerSeries result = PowerSeries::constant(coeffs_[static_cast<size_t>(m - 1)], m);
    for (int k = m - 2; k >= 0; --k)
        result = result * inner + PowerSeries::constant(coeffs_[static_cast<size_t>(k)], m);
    return result;
}

PowerSeries catalan_series(int order) {
    if (order < 1) throw std::invalid_argument("series order must be >= 1");
    PowerSeries c = PowerSeries::constant(1, order);
    if (order == 1) return c;
    const PowerSeries one = PowerSeries::constant(1, order);
    const PowerSeries mono = PowerSeries::x(order);
    for (int pass = 0; pass < order; ++pass) c = one + mono * (c * c);
    return c;
}

}  // namespace combx
