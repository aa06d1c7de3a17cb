#include "absorder/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "absorder/errors.hpp"

namespace absorder {

Cycle::Cycle(std::vector<int> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw PreconditionViolation("a cycle needs at least one element");
    }
    std::vector<int> sorted = elements_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 1) {
        throw PreconditionViolation("cycle elements must be positive");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionViolation("cycle elements must be distinct");
    }
    auto smallest = std::min_element(elements_.begin(), elements_.end());
    std::rotate(elements_.begin(), smallest, elements_.end());
}

bool Cycle::contains(int x) const {
    return std::find(elements_.begin(), elements_.end(), x) != elements_.end();
}

Permutation::Permutation(int n) {
    if (n < 1) {
        throw PreconditionViolation("permutation degree must be positive");
    }
    images_.resize(static_cast<std::size_t>(n));
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_one_line(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n == 0) {
        throw ParseError("empty one-line permutation");
    }
    std::vector<bool> seen(images.size() + 1, false);
    for (int x : images) {
        if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
            throw ParseError("one-line form is not a bijection on [n]");
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    Permutation p(n);
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, std::span<const Cycle> cycles) {
    Permutation p(n);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const Cycle& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int x = c[i];
            if (x > n) {
                throw DegreeMismatch(x, n);
            }
            if (used[static_cast<std::size_t>(x)]) {
                throw ParseError("cycles are not disjoint");
            }
            used[static_cast<std::size_t>(x)] = true;
            p.images_[static_cast<std::size_t>(x - 1)] = c[(i + 1) % c.size()];
        }
    }
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<Cycle> cs;
    cs.reserve(cycles.size());
    for (const auto& c : cycles) {
        cs.emplace_back(c);
    }
    return from_cycles(n, std::span<const Cycle>(cs));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a == b) {
        throw PreconditionViolation("transposition needs two distinct points");
    }
    return from_cycles(n, std::vector<std::vector<int>>{{a, b}});
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != static_cast<int>(i) + 1) {
            return false;
        }
    }
    return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) {
        throw DegreeMismatch(u.degree(), v.degree());
    }
    std::vector<int> w(static_cast<std::size_t>(u.degree()));
    for (int x = 1; x <= u.degree(); ++x) {
        w[static_cast<std::size_t>(x - 1)] = u(v(x));
    }
    return Permutation::from_one_line(std::move(w));
}

Permutation inverse(const Permutation& u) {
    std::vector<int> w(static_cast<std::size_t>(u.degree()));
    for (int x = 1; x <= u.degree(); ++x) {
        w[static_cast<std::size_t>(u(x) - 1)] = x;
    }
    return Permutation::from_one_line(std::move(w));
}

CycleDecomposition cycle_decomposition(const Permutation& u) {
    CycleDecomposition d;
    d.degree = u.degree();
    std::vector<bool> seen(static_cast<std::size_t>(u.degree()) + 1, false);
    // Scanning x in increasing order yields cycles already sorted by minimum
    // and each one starting at its minimum.
    for (int x = 1; x <= u.degree(); ++x) {
        if (seen[static_cast<std::size_t>(x)]) {
            continue;
        }
        std::vector<int> c;
        for (int y = x; !seen[static_cast<std::size_t>(y)]; y = u(y)) {
            seen[static_cast<std::size_t>(y)] = true;
            c.push_back(y);
        }
        d.cycles.emplace_back(std::move(c));
    }
    return d;
}

int cycle_count(std::span<const int> one_line) {
    const std::size_t n = one_line.size();
    // Small degrees dominate every hot loop; avoid the heap there.
    bool small[32] = {};
    std::vector<bool> large;
    if (n >= 32) {
        large.assign(n, false);
    }
    auto seen = [&](std::size_t i) -> bool { return n < 32 ? small[i] : large[i]; };
    auto mark = [&](std::size_t i) {
        if (n < 32) {
            small[i] = true;
        } else {
            large[i] = true;
        }
    };
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen(i)) {
            continue;
        }
        ++count;
        for (std::size_t j = i; !seen(j); j = static_cast<std::size_t>(one_line[j] - 1)) {
            mark(j);
        }
    }
    return count;
}

int cycle_count(const Permutation& u) { return cycle_count(u.one_line()); }

int reflection_length(const Permutation& u) { return u.degree() - cycle_count(u); }

std::vector<int> cycle_type(const Permutation& u) {
    std::vector<int> type;
    for (const Cycle& c : cycle_decomposition(u).cycles) {
        type.push_back(static_cast<int>(c.size()));
    }
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::string to_string(const Cycle& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) {
            s += ' ';
        }
        s += std::to_string(c[i]);
    }
    s += ')';
    return s;
}

std::string to_cycle_string(const Permutation& u, bool include_fixed_points) {
    std::string s;
    for (const Cycle& c : cycle_decomposition(u).cycles) {
        if (c.size() == 1 && !include_fixed_points) {
            continue;
        }
        s += to_string(c);
    }
    return s.empty() ? "()" : s;
}

std::string to_one_line_string(const Permutation& u) {
    std::string s;
    for (int x : u.one_line()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += std::to_string(x);
    }
    return s;
}

namespace {

struct ParsedText {
    bool cycle_notation = false;
    std::vector<std::vector<int>> cycles;  // cycle notation
    std::vector<int> one_line;             // one-line notation
};

int parse_int(std::string_view text, std::size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
        throw ParseError("expected an integer at position " + std::to_string(pos));
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
}

bool is_separator(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == ','; }

ParsedText parse_text(std::string_view text) {
    ParsedText out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && is_separator(text[pos])) {
            ++pos;
        }
    };
    skip();
    if (pos == text.size()) {
        throw ParseError("empty permutation");
    }
    out.cycle_notation = text[pos] == '(';
    if (!out.cycle_notation) {
        while (pos < text.size()) {
            out.one_line.push_back(parse_int(text, pos));
            skip();
        }
        return out;
    }
    while (pos < text.size()) {
        if (text[pos] != '(') {
            throw ParseError("expected '(' at position " + std::to_string(pos));
        }
        ++pos;
        std::vector<int> cycle;
        skip();
        while (pos < text.size() && text[pos] != ')') {
            cycle.push_back(parse_int(text, pos));
            skip();
        }
        if (pos == text.size()) {
            throw ParseError("unterminated cycle");
        }
        ++pos;
        if (!cycle.empty()) {
            out.cycles.push_back(std::move(cycle));
        }
        skip();
    }
    return out;
}

}  // namespace

int natural_degree(std::string_view text) {
    ParsedText parsed = parse_text(text);
    if (!parsed.cycle_notation) {
        return static_cast<int>(parsed.one_line.size());
    }
    int n = 1;
    for (const auto& c : parsed.cycles) {
        for (int x : c) {
            n = std::max(n, x);
        }
    }
    return n;
}

Permutation parse_permutation(std::string_view text, std::optional<int> degree) {
    ParsedText parsed = parse_text(text);
    if (!parsed.cycle_notation) {
        Permutation p = Permutation::from_one_line(parsed.one_line);
        if (degree && *degree != p.degree()) {
            throw DegreeMismatch(p.degree(), *degree);
        }
        return p;
    }
    const int n = degree.value_or(natural_degree(text));
    try {
        return Permutation::from_cycles(n, parsed.cycles);
    } catch (const DegreeMismatch&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

std::vector<Permutation> all_transpositions(int n) {
    std::vector<Permutation> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            out.push_back(Permutation::transposition(n, a, b));
        }
    }
    return out;
}

}  // namespace absorder
