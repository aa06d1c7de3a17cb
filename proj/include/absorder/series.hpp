#pragma once

#include <cstddef>
#include <vector>

#include "absorder/bigint.hpp"

namespace absorder {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over Q.
/// Binary operations require equal truncation orders.
class Series {
public:
    explicit Series(std::size_t order);
    Series(std::size_t order, std::vector<Rational> coefficients);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    static Series constant(std::size_t order, const Rational& c);
    /// t truncated at `order`.
    static Series variable(std::size_t order);

    Series operator+(const Series& rhs) const;
    Series operator-(const Series& rhs) const;
    Series operator-() const;
    /// Product truncated at order N.
    Series operator*(const Series& rhs) const;
    Series operator*(const Rational& s) const;
    /// Multiply by t^k, dropping terms above the order.
    Series shifted_up(std::size_t k) const;
    /// f(t) -> f(-t).
    Series negate_variable() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

/// exp(a) for a with zero constant term: b_0 = 1, k b_k = Σ_{j=1}^k j a_j b_{k-j}.
/// Throws PreconditionViolation on a nonzero constant term.
Series series_exp(const Series& a);

/// n! [t^n] s as an exact integer; throws std::domain_error if not integral.
Integer exponential_coefficient(const Series& s, std::size_t n);

Integer factorial(unsigned n);

}  // namespace absorder
