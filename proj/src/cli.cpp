#include "absorder/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "absorder/absolute_order.hpp"
#include "absorder/constructibility.hpp"
#include "absorder/errors.hpp"
#include "absorder/homology.hpp"
#include "absorder/mobius.hpp"
#include "absorder/simplicial_complex.hpp"

namespace absorder {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct OrderArgs {
    std::string u, v;
    std::string method = "both";
    std::optional<int> n;
};

struct Table1Args {
    int max = 9;
    std::string method = "both";
    std::string format = "text";
};

struct HasseArgs {
    int n = 0;
    std::string format = "dot";
    std::string output;
    int max_n = kDefaultPosetCap;
};

struct HomologyArgs {
    int n = 0;
    bool links = false;
    bool cm = false;
    std::string format = "text";
    int max_n = 5;
    std::string facets_out;
    std::string facets_in;
    unsigned jobs = 1;
};

struct CertifyArgs {
    int n = 0;
    std::vector<int> sigma;
    std::vector<std::vector<std::string>> tau;
    std::vector<std::string> tau0;
    int max_materialize = 7;
    std::size_t shelling_cap = 200;
    std::string json;
};

// "{3,4}", "3,4", "3 4" and brace-expanded "3" "4" all name the set {3, 4}.
std::vector<int> parse_set(const std::vector<std::string>& tokens) {
    std::vector<int> out;
    for (const auto& token : tokens) {
        std::string cleaned;
        for (char ch : token) {
            if (ch == '{' || ch == '}' || ch == ',') {
                cleaned += ' ';
            } else if ((ch >= '0' && ch <= '9') || ch == ' ') {
                cleaned += ch;
            } else {
                throw ParseError("bad character in set '" + token + "'");
            }
        }
        std::istringstream in(cleaned);
        int x = 0;
        while (in >> x) {
            out.push_back(x);
        }
    }
    return out;
}

int cmd_order(const OrderArgs& a, std::ostream& out, std::ostream& err) {
    const int n = a.n ? *a.n : std::max(natural_degree(a.u), natural_degree(a.v));
    const Permutation u = parse_permutation(a.u, n);
    const Permutation v = parse_permutation(a.v, n);
    if (a.method == "length") {
        out << (leq_length(u, v) ? "true" : "false") << '\n';
        return kExitOk;
    }
    if (a.method == "noncrossing") {
        out << (leq_noncrossing(u, v) ? "true" : "false") << '\n';
        return kExitOk;
    }
    const bool by_length = leq_length(u, v);
    const bool by_nc = leq_noncrossing(u, v);
    if (by_length != by_nc) {
        out << "length: " << (by_length ? "true" : "false")
            << ", noncrossing: " << (by_nc ? "true" : "false") << '\n';
        err << "error: the two characterizations disagree\n";
        return kExitFailure;
    }
    out << (by_length ? "true" : "false") << '\n';
    out << "methods agree\n";
    return kExitOk;
}

int cmd_table1(const Table1Args& a, std::ostream& out, std::ostream& err) {
    const auto count = static_cast<std::size_t>(a.max);
    std::vector<Integer> gf, mob;
    if (a.method != "mobius") {
        gf = gf_expand(count);
    }
    if (a.method != "gf") {
        mob = signed_euler_chars_via_mobius(count);
    }
    const std::vector<Integer>& values = gf.empty() ? mob : gf;
    const bool agree = gf.empty() || mob.empty() || gf == mob;

    if (a.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < count; ++i) {
            nlohmann::ordered_json row;
            row["n"] = i + 1;
            row["value"] = values[i].str();
            if (!agree) {
                row["gf"] = gf[i].str();
                row["mobius"] = mob[i].str();
            }
            rows.push_back(std::move(row));
        }
        out << rows.dump() << '\n';
    } else {
        const std::size_t n_width = std::max<std::size_t>(1, std::to_string(count).size());
        std::size_t v_width = 0;
        for (const auto& v : values) {
            v_width = std::max(v_width, v.str().size());
        }
        for (std::size_t i = 0; i < count; ++i) {
            out << std::setw(static_cast<int>(n_width)) << i + 1 << "  "
                << std::setw(static_cast<int>(v_width)) << values[i].str();
            if (!agree && gf[i] != mob[i]) {
                out << "  (gf " << gf[i].str() << ", mobius " << mob[i].str() << ")";
            }
            out << '\n';
        }
    }
    if (!agree) {
        err << "error: generating function and Mobius routes disagree\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_hasse(const HasseArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n < 1) {
        err << "error: n must be positive\n";
        return kExitUsage;
    }
    if (a.n > a.max_n) {
        err << "error: n = " << a.n << " exceeds the poset cap " << a.max_n << " (raise --max-n)\n";
        return kExitUsage;
    }
    const Poset p = build_Pn(a.n, a.max_n);
    const std::string text = a.format == "json" ? poset_to_json(p) + "\n" : poset_to_dot(p);
    if (a.output.empty()) {
        out << text;
    } else {
        std::ofstream file(a.output);
        if (!file) {
            err << "error: cannot write " << a.output << '\n';
            return kExitUsage;
        }
        file << text;
    }
    return kExitOk;
}

int cmd_homology(const HomologyArgs& a, std::ostream& out, std::ostream& err) {
    SimplicialComplex complex;
    std::optional<Poset> proper;
    if (!a.facets_in.empty()) {
        std::ifstream file(a.facets_in);
        if (!file) {
            err << "error: cannot read " << a.facets_in << '\n';
            return kExitUsage;
        }
        complex = read_facets(file);
    } else {
        if (a.n < 1) {
            err << "error: n must be positive\n";
            return kExitUsage;
        }
        if (a.n > a.max_n) {
            err << "error: n = " << a.n << " exceeds the homology cap " << a.max_n
                << " (raise --max-n)\n";
            return kExitUsage;
        }
        proper = build_proper_part(a.n, std::max(a.max_n, a.n));
        complex = order_complex(*proper);
    }
    if (!a.facets_out.empty()) {
        std::ofstream file(a.facets_out);
        if (!file) {
            err << "error: cannot write " << a.facets_out << '\n';
            return kExitUsage;
        }
        write_facets(file, complex);
    }

    const auto groups = reduced_homology(complex);
    std::optional<CohenMacaulayReport> cm;
    if (a.cm) {
        const unsigned jobs = std::max(1u, a.jobs);
        cm = (proper && !a.links) ? is_cohen_macaulay_Z(complex, absolute_order_link_signature(*proper), jobs)
                                  : is_cohen_macaulay_Z(complex, jobs);
    }

    if (a.format == "json") {
        nlohmann::ordered_json j;
        if (proper) {
            j["n"] = a.n;
        }
        j["dimension"] = complex.dimension();
        j["facets"] = complex.facets().size();
        j["homology"] = nlohmann::ordered_json::parse(homology_to_json(groups))["dims"];
        if (cm) {
            nlohmann::ordered_json c;
            c["cohen_macaulay"] = cm->cohen_macaulay;
            c["faces_checked"] = cm->faces_checked;
            c["links_computed"] = cm->links_computed;
            if (cm->witness_face) {
                c["witness_face"] = *cm->witness_face;
                c["witness_degree"] = cm->witness_degree;
            }
            j["cm"] = std::move(c);
        }
        out << j.dump() << '\n';
    } else {
        if (proper) {
            out << "order complex of the proper part of P_" << a.n << '\n';
        }
        out << "dimension " << complex.dimension() << ", " << complex.facets().size() << " facets\n";
        out << homology_to_text(groups);
        if (cm) {
            out << "Cohen-Macaulay over Z: " << (cm->cohen_macaulay ? "true" : "false") << " ("
                << cm->faces_checked << " faces, " << cm->links_computed << " links computed)\n";
            if (cm->witness_face) {
                out << "witness face of size " << cm->witness_face->size() << ", nonzero H~_"
                    << cm->witness_degree << " in its link\n";
            }
        }
    }
    return cm && !cm->cohen_macaulay ? kExitFailure : kExitOk;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<std::vector<int>> tau;
    if (!a.tau.empty() || !a.tau0.empty()) {
        tau.push_back(parse_set(a.tau0));
        for (const auto& group : a.tau) {
            tau.push_back(parse_set(group));
        }
    }
    const RSpec r(a.n, a.sigma, tau);
    const CertificatePtr cert = build_certificate(r);
    out << "certificate for " << r.to_string() << ": " << certificate_node_count(cert) << " nodes, root "
        << to_string(cert->kind) << " of rank " << cert->rank << '\n';

    CertificateLimits limits;
    limits.materialize_cap = a.max_materialize;
    limits.shelling_facet_cap = a.shelling_cap;
    std::optional<VerificationReport> report;
    try {
        report = verify_certificate(cert, limits);
    } catch (const ResourceCapExceeded& e) {
        if (!a.json.empty()) {
            std::ofstream(a.json) << certificate_to_json(cert) << '\n';
        }
        err << "error: " << e.what() << '\n';
        return kExitCap;
    }
    out << "VERIFIED " << report->verified << ", ASSUMED " << report->assumed << ", FAILED "
        << report->failed << '\n';
    if (!report->failures.empty()) {
        out << "first failure: " << report->failures.front() << '\n';
    }
    out << (report->ok ? "certificate verified" : "certificate rejected") << '\n';
    if (!a.json.empty()) {
        std::ofstream file(a.json);
        if (!file) {
            err << "error: cannot write " << a.json << '\n';
            return kExitUsage;
        }
        file << certificate_to_json(cert, &*report) << '\n';
    }
    return report->ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Absolute order on the symmetric group: order tests, Hasse diagrams, homology, "
                 "Euler characteristics and constructibility certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "absorder 1.0.0");

    OrderArgs order;
    auto* order_cmd = app.add_subcommand("order", "decide u <= v in the absolute order");
    order_cmd->add_option("u", order.u, "permutation, cycle or one-line notation")->required();
    order_cmd->add_option("v", order.v, "permutation, cycle or one-line notation")->required();
    order_cmd->add_option("--method", order.method)
        ->check(CLI::IsMember({"length", "noncrossing", "both"}))
        ->capture_default_str();
    order_cmd->add_option("--n", order.n, "degree (default: largest letter used)")
        ->check(CLI::PositiveNumber);

    Table1Args table;
    auto* table_cmd = app.add_subcommand("table1", "(-1)^n times the reduced Euler characteristic");
    table_cmd->add_option("--max", table.max)->check(CLI::Range(1, 200))->capture_default_str();
    table_cmd->add_option("--method", table.method)
        ->check(CLI::IsMember({"gf", "mobius", "both"}))
        ->capture_default_str();
    table_cmd->add_option("--format", table.format)
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    HasseArgs hasse;
    auto* hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of P_n");
    hasse_cmd->add_option("n", hasse.n)->required();
    hasse_cmd->add_option("--format", hasse.format)
        ->check(CLI::IsMember({"dot", "json"}))
        ->capture_default_str();
    hasse_cmd->add_option("--output,-o", hasse.output, "write to a file instead of stdout");
    hasse_cmd->add_option("--max-n", hasse.max_n)->check(CLI::PositiveNumber)->capture_default_str();

    HomologyArgs hom;
    auto* hom_cmd = app.add_subcommand("homology", "reduced homology of the proper part of P_n");
    hom_cmd->add_option("n", hom.n);
    hom_cmd->add_flag("--cm", hom.cm, "check Cohen-Macaulayness over Z");
    hom_cmd->add_flag("--links", hom.links, "with --cm, compute every link instead of one per class");
    hom_cmd->add_option("--format", hom.format)
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    hom_cmd->add_option("--max-n", hom.max_n)->check(CLI::PositiveNumber)->capture_default_str();
    hom_cmd->add_option("--facets-out", hom.facets_out, "save the facet list");
    hom_cmd->add_option("--facets-in", hom.facets_in, "use a saved facet list instead of n");
    hom_cmd->add_option("--jobs", hom.jobs)->check(CLI::PositiveNumber)->capture_default_str();

    CertifyArgs cert;
    auto* cert_cmd = app.add_subcommand("certify", "build and verify a constructibility certificate");
    cert_cmd->add_option("n", cert.n)->required()->check(CLI::PositiveNumber);
    cert_cmd->add_option("--sigma", cert.sigma, "elements of sigma in cyclic order")->required();
    cert_cmd->add_option("--tau", cert.tau, "one block tau_i per occurrence, e.g. {3,4}");
    cert_cmd->add_option("--tau0", cert.tau0, "the set tau_0 (default empty)");
    cert_cmd->add_option("--max-materialize", cert.max_materialize)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cert_cmd->add_option("--shelling-cap", cert.shelling_cap, "facet cap for leaf shelling search")
        ->capture_default_str();
    cert_cmd->add_option("--json", cert.json, "write the certificate tree as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << "absorder 1.0.0\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*order_cmd) return cmd_order(order, out, err);
        if (*table_cmd) return cmd_table1(table, out, err);
        if (*hasse_cmd) return cmd_hasse(hasse, out, err);
        if (*hom_cmd) return cmd_homology(hom, out, err);
        if (*cert_cmd) return cmd_certify(cert, out, err);
    } catch (const ResourceCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        // ParseError, DegreeMismatch, PreconditionViolation
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace absorder
