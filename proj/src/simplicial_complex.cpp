#include "absorder/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "absorder/errors.hpp"

namespace absorder {

SimplicialComplex::SimplicialComplex() : facets_{Face{}}, faces_{{Face{}}} {}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.size() == facets_.front().size(); });
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    static const std::vector<Face> none;
    if (d < -1 || d + 1 >= static_cast<int>(faces_.size())) {
        return none;
    }
    return faces_[static_cast<std::size_t>(d + 1)];
}

std::size_t SimplicialComplex::face_count() const {
    std::size_t total = 0;
    for (const auto& layer : faces_) {
        total += layer.size();
    }
    return total;
}

long SimplicialComplex::index_of(const Face& f) const {
    if (f.size() >= faces_.size()) {
        return -1;
    }
    const auto& layer = faces_[f.size()];
    auto it = std::lower_bound(layer.begin(), layer.end(), f);
    if (it == layer.end() || *it != f) {
        return -1;
    }
    return static_cast<long>(it - layer.begin());
}

std::vector<int> SimplicialComplex::vertices() const {
    std::vector<int> out;
    for (const Face& v : faces(0)) {
        out.push_back(v.front());
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
    for (Face& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
            throw PreconditionViolation("repeated vertex in a facet");
        }
    }
    std::sort(facets.begin(), facets.end(), [](const Face& a, const Face& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<Face> maximal;
    for (const Face& f : facets) {
        // Only strictly larger faces can contain f, and they come first.
        const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Face& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!covered) {
            maximal.push_back(f);
        }
    }
    if (maximal.empty()) {
        maximal.push_back(Face{});
    }

    SimplicialComplex k;
    std::vector<std::set<Face>> layers(maximal.front().size() + 1);
    for (const Face& f : maximal) {
        const std::size_t s = f.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < s; ++i) {
                if (mask & (std::size_t{1} << i)) {
                    sub.push_back(f[i]);
                }
            }
            layers[sub.size()].insert(std::move(sub));
        }
    }
    k.faces_.clear();
    for (auto& layer : layers) {
        k.faces_.emplace_back(layer.begin(), layer.end());
    }
    std::sort(maximal.begin(), maximal.end());
    k.facets_ = std::move(maximal);
    return k;
}

SimplicialComplex SimplicialComplex::from_face_list(std::vector<Face> faces) {
    SimplicialComplex k;
    std::size_t top = 0;
    for (Face& f : faces) {
        std::sort(f.begin(), f.end());
        top = std::max(top, f.size());
    }
    k.faces_.assign(top + 1, {});
    for (Face& f : faces) {
        k.faces_[f.size()].push_back(std::move(f));
    }
    for (auto& layer : k.faces_) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    if (k.faces_[0].empty()) {
        k.faces_[0].push_back(Face{});
    }
    k.finalize_facets_from_faces();
    return k;
}

void SimplicialComplex::finalize_facets_from_faces() {
    // A face is a facet iff no face one dimension up contains it.
    std::vector<Face> facets;
    for (std::size_t s = 0; s < faces_.size(); ++s) {
        std::set<Face> covered;
        if (s + 1 < faces_.size()) {
            for (const Face& g : faces_[s + 1]) {
                for (std::size_t drop = 0; drop < g.size(); ++drop) {
                    Face sub;
                    sub.reserve(g.size() - 1);
                    for (std::size_t i = 0; i < g.size(); ++i) {
                        if (i != drop) {
                            sub.push_back(g[i]);
                        }
                    }
                    covered.insert(std::move(sub));
                }
            }
        }
        for (const Face& f : faces_[s]) {
            if (!covered.count(f)) {
                facets.push_back(f);
            }
        }
    }
    std::sort(facets.begin(), facets.end());
    facets_ = std::move(facets);
}

SimplicialComplex order_complex(const Poset& p) {
    const std::size_t size = p.size();
    std::vector<std::vector<std::size_t>> strictly_above(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (p.less(i, j)) {
                strictly_above[i].push_back(j);
            }
        }
    }
    std::vector<Face> faces{Face{}};
    std::vector<int> chain;
    std::function<void(std::size_t)> extend = [&](std::size_t top) {
        Face f(chain.begin(), chain.end());
        faces.push_back(std::move(f));
        for (std::size_t next : strictly_above[top]) {
            chain.push_back(static_cast<int>(next));
            extend(next);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < size; ++i) {
        chain.assign(1, static_cast<int>(i));
        extend(i);
    }
    return SimplicialComplex::from_face_list(std::move(faces));
}

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (!k.contains(sorted)) {
        throw PreconditionViolation("link of a non-face");
    }
    std::vector<Face> facets;
    for (const Face& g : k.facets()) {
        if (std::includes(g.begin(), g.end(), sorted.begin(), sorted.end())) {
            Face rest;
            std::set_difference(g.begin(), g.end(), sorted.begin(), sorted.end(),
                                std::back_inserter(rest));
            facets.push_back(std::move(rest));
        }
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

void write_facets(std::ostream& os, const SimplicialComplex& k) {
    for (const Face& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            os << (i ? " " : "") << f[i];
        }
        os << '\n';
    }
}

SimplicialComplex read_facets(std::istream& is) {
    std::vector<Face> facets;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        Face f;
        std::string token;
        while (ls >> token) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                throw ParseError("bad vertex index '" + token + "'");
            }
            if (used != token.size() || v < 0) {
                throw ParseError("bad vertex index '" + token + "'");
            }
            f.push_back(v);
        }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace absorder
