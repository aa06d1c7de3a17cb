#include "absorder/series.hpp"

#include <stdexcept>

#include "absorder/errors.hpp"

namespace absorder {

Series::Series(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

Series::Series(std::size_t order, std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    coeffs_.resize(order + 1, Rational(0));
}

Series Series::constant(std::size_t order, const Rational& c) {
    Series s(order);
    s[0] = c;
    return s;
}

Series Series::variable(std::size_t order) {
    Series s(order);
    if (order >= 1) {
        s[1] = 1;
    }
    return s;
}

namespace {
void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order()) {
        throw PreconditionViolation("series truncation orders differ");
    }
}
}  // namespace

Series Series::operator+(const Series& rhs) const {
    require_same_order(*this, rhs);
    Series out = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] += rhs.coeffs_[i];
    }
    return out;
}

Series Series::operator-(const Series& rhs) const { return *this + (-rhs); }

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Series Series::operator*(const Series& rhs) const {
    require_same_order(*this, rhs);
    const std::size_t n = order();
    Series out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

Series Series::operator*(const Rational& s) const {
    Series out = *this;
    for (auto& c : out.coeffs_) {
        c *= s;
    }
    return out;
}

Series Series::shifted_up(std::size_t k) const {
    Series out(order());
    for (std::size_t i = 0; i + k <= order(); ++i) {
        out.coeffs_[i + k] = coeffs_[i];
    }
    return out;
}

Series Series::negate_variable() const {
    Series out = *this;
    for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
        out.coeffs_[i] = -out.coeffs_[i];
    }
    return out;
}

Series series_exp(const Series& a) {
    if (a[0] != 0) {
        throw PreconditionViolation("exp needs a series with zero constant term");
    }
    const std::size_t n = a.order();
    Series b(n);
    b[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += Rational(static_cast<long long>(j)) * a[j] * b[k - j];
        }
        b[k] = acc / Rational(static_cast<long long>(k));
    }
    return b;
}

Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

Integer exponential_coefficient(const Series& s, std::size_t n) {
    const Rational v = s[n] * Rational(factorial(static_cast<unsigned>(n)));
    if (denominator(v) != 1) {
        throw std::domain_error("coefficient " + std::to_string(n) + " is not integral: " + v.str());
    }
    return numerator(v);
}

}  // namespace absorder
