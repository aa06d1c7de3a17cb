#include "absorder/homology.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "absorder/errors.hpp"

namespace absorder {

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int d) {
    const auto& cols = k.faces(d);
    const auto& rows = k.faces(d - 1);
    IntegerMatrix m(rows.size(), cols.size());
    Face sub;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Face& g = cols[j];
        for (std::size_t drop = 0; drop < g.size(); ++drop) {
            sub.clear();
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i != drop) {
                    sub.push_back(g[i]);
                }
            }
            const long r = k.index_of(sub);
            if (r < 0) {
                throw std::logic_error("complex is not closed under taking faces");
            }
            m.set(static_cast<std::size_t>(r), j, drop % 2 == 0 ? 1 : -1);
        }
    }
    return m;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& k) {
    const int top = k.dimension();
    // smith[d] is the Smith form of the boundary C_d -> C_{d-1}, d = 0..top.
    std::vector<SmithForm> smith;
    std::optional<IntegerMatrix> previous;
    for (int d = 0; d <= top; ++d) {
        IntegerMatrix current = boundary_matrix(k, d);
        if (previous && !(*previous * current).is_zero()) {
            throw std::logic_error("boundary of boundary is nonzero in dimension " +
                                   std::to_string(d));
        }
        smith.push_back(smith_normal_form(current));
        previous = std::move(current);
    }
    auto rank_of = [&](int d) -> std::size_t {
        return (d >= 0 && d <= top) ? smith[static_cast<std::size_t>(d)].rank : 0;
    };
    std::vector<HomologyGroup> out;
    for (int d = -1; d <= top; ++d) {
        HomologyGroup h;
        h.free_rank = k.faces(d).size() - rank_of(d) - rank_of(d + 1);
        if (d + 1 <= top) {
            for (const Integer& f : smith[static_cast<std::size_t>(d + 1)].invariant_factors) {
                if (f > 1) {
                    h.torsion.push_back(f);
                }
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

Integer euler_characteristic_reduced(const SimplicialComplex& k) {
    Integer chi = 0;
    for (int d = -1; d <= k.dimension(); ++d) {
        const Integer f = static_cast<unsigned long>(k.faces(d).size());
        chi += (d % 2 == 0) ? f : Integer(-f);
    }
    return chi;
}

std::string homology_to_json(const std::vector<HomologyGroup>& groups) {
    nlohmann::ordered_json dims = nlohmann::ordered_json::array();
    for (std::size_t idx = 0; idx < groups.size(); ++idx) {
        nlohmann::ordered_json entry;
        entry["i"] = static_cast<int>(idx) - 1;
        entry["rank"] = groups[idx].free_rank;
        auto torsion = nlohmann::ordered_json::array();
        for (const Integer& t : groups[idx].torsion) {
            torsion.push_back(t.str());
        }
        entry["torsion"] = std::move(torsion);
        dims.push_back(std::move(entry));
    }
    nlohmann::ordered_json j;
    j["dims"] = std::move(dims);
    return j.dump();
}

std::string homology_to_text(const std::vector<HomologyGroup>& groups) {
    std::ostringstream os;
    for (std::size_t idx = 0; idx < groups.size(); ++idx) {
        const HomologyGroup& h = groups[idx];
        os << "H~_" << static_cast<int>(idx) - 1 << " = ";
        if (h.is_zero()) {
            os << "0";
        }
        bool first = true;
        if (h.free_rank > 0) {
            os << "Z^" << h.free_rank;
            first = false;
        }
        for (const Integer& t : h.torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

namespace {

struct FaceRef {
    int dim;
    std::size_t index;
};

CohenMacaulayReport run_cohen_macaulay(const SimplicialComplex& k, const LinkSignature* signature,
                                       unsigned jobs) {
    std::vector<FaceRef> faces;
    for (int d = -1; d <= k.dimension(); ++d) {
        for (std::size_t i = 0; i < k.faces(d).size(); ++i) {
            faces.push_back({d, i});
        }
    }
    // Group faces by link class; the first face of each class is its representative.
    std::vector<std::size_t> class_of(faces.size());
    std::vector<std::size_t> representatives;
    if (signature) {
        std::map<std::string, std::size_t> seen;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            const Face& face = k.faces(faces[f].dim)[faces[f].index];
            auto [it, inserted] = seen.emplace((*signature)(face), representatives.size());
            if (inserted) {
                representatives.push_back(f);
            }
            class_of[f] = it->second;
        }
    } else {
        for (std::size_t f = 0; f < faces.size(); ++f) {
            class_of[f] = f;
            representatives.push_back(f);
        }
    }

    // Lowest degree below the link dimension with nonzero homology, per class.
    std::vector<std::optional<int>> failing(representatives.size());
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t c = next++; c < representatives.size(); c = next++) {
                const FaceRef& ref = faces[representatives[c]];
                const SimplicialComplex l = link(k, k.faces(ref.dim)[ref.index]);
                const auto h = reduced_homology(l);
                for (int i = -1; i < l.dimension(); ++i) {
                    if (!h[static_cast<std::size_t>(i + 1)].is_zero()) {
                        failing[c] = i;
                        break;
                    }
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            error = std::current_exception();
        }
    };
    const unsigned threads = std::max(1u, jobs);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    CohenMacaulayReport report;
    report.links_computed = representatives.size();
    for (std::size_t f = 0; f < faces.size(); ++f) {
        ++report.faces_checked;
        if (failing[class_of[f]]) {
            report.cohen_macaulay = false;
            report.witness_face = k.faces(faces[f].dim)[faces[f].index];
            report.witness_degree = *failing[class_of[f]];
            break;
        }
    }
    return report;
}

}  // namespace

CohenMacaulayReport is_cohen_macaulay_Z(const SimplicialComplex& k, unsigned jobs) {
    return run_cohen_macaulay(k, nullptr, jobs);
}

CohenMacaulayReport is_cohen_macaulay_Z(const SimplicialComplex& k, const LinkSignature& signature,
                                        unsigned jobs) {
    return run_cohen_macaulay(k, &signature, jobs);
}

LinkSignature absolute_order_link_signature(const Poset& proper_part) {
    return [&proper_part](const Face& face) {
        std::vector<std::size_t> chain(face.begin(), face.end());
        std::sort(chain.begin(), chain.end(), [&](std::size_t a, std::size_t b) {
            return proper_part.rank(a) < proper_part.rank(b);
        });
        auto type_string = [](const Permutation& w) {
            std::string s;
            for (int part : cycle_type(w)) {
                s += std::to_string(part) + ".";
            }
            return s;
        };
        std::vector<std::string> pieces;
        if (chain.empty()) {
            return std::string("whole");
        }
        pieces.push_back("I" + type_string(proper_part.element(chain.front())));
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            const Permutation step = compose(inverse(proper_part.element(chain[i])),
                                             proper_part.element(chain[i + 1]));
            pieces.push_back("I" + type_string(step));
        }
        pieces.push_back("U" + type_string(proper_part.element(chain.back())));
        std::sort(pieces.begin(), pieces.end());
        std::string key;
        for (const auto& p : pieces) {
            key += p + "|";
        }
        return key;
    };
}

}  // namespace absorder
