#include "absorder/mobius.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "absorder/errors.hpp"

namespace absorder {

Integer catalan(unsigned m) {
    // C_m = Π_{k=2}^{m} (m + k) / k, numerator and denominator kept apart.
    Integer num = 1;
    Integer den = 1;
    for (unsigned k = 2; k <= m; ++k) {
        num *= m + k;
        den *= k;
    }
    return num / den;
}

Series catalan_series(std::size_t order) {
    Series c(order);
    for (std::size_t m = 0; m <= order; ++m) {
        c[m] = Rational(catalan(static_cast<unsigned>(m)));
    }
    return c;
}

Integer mobius_product(const Permutation& x) {
    Integer mu = 1;
    for (const Cycle& y : cycle_decomposition(x).cycles) {
        const auto len = static_cast<unsigned>(y.size());
        const Integer factor = catalan(len - 1);
        mu *= (len % 2 == 1) ? factor : Integer(-factor);
    }
    return mu;
}

namespace {

std::size_t unique_minimum(const Poset& p) {
    const auto minima = p.minimal_elements();
    if (minima.size() != 1) {
        throw PreconditionViolation("poset has no minimum element");
    }
    return minima.front();
}

std::vector<std::size_t> by_rank(const Poset& p, std::vector<std::size_t> idx) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return p.rank(a) < p.rank(b); });
    return idx;
}

}  // namespace

Integer mobius_direct(const Poset& p, std::size_t x) {
    const std::size_t bottom = unique_minimum(p);
    std::vector<std::size_t> down;
    for (std::size_t y = 0; y < p.size(); ++y) {
        if (p.leq(y, x)) {
            down.push_back(y);
        }
    }
    down = by_rank(p, std::move(down));
    std::map<std::size_t, Integer> mu;
    for (std::size_t z : down) {
        if (z == bottom) {
            mu[z] = 1;
            continue;
        }
        Integer acc = 0;
        for (std::size_t y : down) {
            if (p.rank(y) >= p.rank(z)) {
                break;
            }
            if (p.leq(y, z)) {
                acc += mu.at(y);
            }
        }
        mu[z] = -acc;
    }
    return mu.at(x);
}

std::vector<Integer> mobius_from_minimum(const Poset& p) {
    const std::size_t bottom = unique_minimum(p);
    std::vector<std::size_t> all(p.size());
    std::iota(all.begin(), all.end(), 0);
    const auto order = by_rank(p, std::move(all));
    std::vector<Integer> mu(p.size());
    for (std::size_t z : order) {
        if (z == bottom) {
            mu[z] = 1;
            continue;
        }
        Integer acc = 0;
        for (std::size_t y : order) {
            if (p.rank(y) >= p.rank(z)) {
                break;
            }
            if (p.leq(y, z)) {
                acc += mu[y];
            }
        }
        mu[z] = -acc;
    }
    return mu;
}

Integer mobius_adjoined_top(const Poset& p) {
    Integer total = 0;
    for (const Integer& m : mobius_from_minimum(p)) {
        total += m;
    }
    return -total;
}

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer conjugacy_class_size(const std::vector<int>& partition) {
    const int n = std::accumulate(partition.begin(), partition.end(), 0);
    std::map<int, unsigned> mult;
    for (int part : partition) {
        ++mult[part];
    }
    Integer denom = 1;
    for (const auto& [part, m] : mult) {
        for (unsigned i = 0; i < m; ++i) {
            denom *= part;
        }
        denom *= factorial(m);
    }
    return factorial(static_cast<unsigned>(n)) / denom;
}

Integer euler_char_via_mobius(int n, EulerRoute route) {
    if (n < 1) {
        throw PreconditionViolation("n must be positive");
    }
    Integer sum = 0;
    if (route == EulerRoute::Partitions) {
        for (const auto& lambda : integer_partitions(n)) {
            Integer mu = 1;
            for (int part : lambda) {
                const Integer c = catalan(static_cast<unsigned>(part - 1));
                mu *= (part % 2 == 1) ? c : Integer(-c);
            }
            sum += conjugacy_class_size(lambda) * mu;
        }
    } else {
        if (n > 10) {
            throw ResourceCapExceeded("all-permutations route refused above n = 10");
        }
        std::vector<int> images(static_cast<std::size_t>(n));
        std::iota(images.begin(), images.end(), 1);
        do {
            sum += mobius_product(Permutation::from_one_line(images));
        } while (std::next_permutation(images.begin(), images.end()));
    }
    return -sum;
}

std::vector<Integer> gf_expand(std::size_t max_n) {
    if (max_n < 1) {
        throw PreconditionViolation("truncation order must be at least 1");
    }
    const Series c = catalan_series(max_n);
    const Series exponent = c.shifted_up(1) * Rational(-2);
    const Series f = Series::constant(max_n, 1) - c * series_exp(exponent);
    std::vector<Integer> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(exponential_coefficient(f, n));
    }
    return out;
}

std::vector<Integer> euler_chars_via_exponential_formula(std::size_t max_n) {
    Series log_part(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Rational c(catalan(static_cast<unsigned>(n - 1)));
        const Rational term = c / Rational(static_cast<long long>(n));
        log_part[n] = (n % 2 == 1) ? term : Rational(-term);
    }
    const Series e = series_exp(log_part);
    std::vector<Integer> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        out.push_back(-exponential_coefficient(e, n));
    }
    return out;
}

std::vector<Integer> signed_euler_chars_via_mobius(std::size_t max_n) {
    std::vector<Integer> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Integer chi = euler_char_via_mobius(static_cast<int>(n));
        out.push_back(n % 2 == 0 ? chi : Integer(-chi));
    }
    return out;
}

}  // namespace absorder
