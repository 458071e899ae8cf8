#include "commands.hpp"

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

#include <sps/bounds.hpp>
#include <sps/constructions.hpp>
#include <sps/duality.hpp>
#include <sps/rank.hpp>
#include <sps/verification.hpp>

#include "json_io.hpp"
#include "profile_parse.hpp"

namespace sps::tools {

namespace {

unsigned get_uint(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter " + key + "=<integer>");
    try {
        return static_cast<unsigned>(std::stoul(it->second));
    } catch (const std::exception&) {
        throw std::invalid_argument("parameter " + key + ": bad integer '" + it->second + "'");
    }
}

unsigned get_uint_or(const std::map<std::string, std::string>& params,
                     const std::string& key, unsigned fallback) {
    return params.count(key) ? get_uint(params, key) : fallback;
}

std::vector<unsigned> get_list(const std::map<std::string, std::string>& params,
                               const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter " + key + "=<comma list>");
    std::vector<unsigned> out;
    std::string cur;
    for (char c : it->second + ",") {
        if (c == ',') {
            if (cur.empty())
                throw std::invalid_argument("parameter " + key + ": empty element");
            out.push_back(static_cast<unsigned>(std::stoul(cur)));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            cur += c;
        } else {
            throw std::invalid_argument("parameter " + key + ": bad list '" + it->second + "'");
        }
    }
    return out;
}

std::string get_str(const std::map<std::string, std::string>& params, const std::string& key) {
    const auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing parameter " + key + "=<path>");
    return it->second;
}

ConstructionRecord resolve_construction(const std::string& name,
                                        const std::map<std::string, std::string>& params) {
    if (name.rfind("catalog:", 0) == 0) return catalog(name.substr(8));
    if (name == "standard")
        return standard_example(get_uint(params, "a"), get_uint(params, "b"));
    if (name == "cyclic") {
        auto sys = cyclic_family(get_list(params, "base_a"), get_list(params, "base_b"),
                                 get_uint(params, "modulus"), get_uint(params, "count"),
                                 get_uint_or(params, "stride", 1));
        const std::size_t m = sys.size();
        return make_record(std::move(sys), ConstraintProfile{}, m, "cyclic");
    }
    if (name == "product") {
        const auto s1 = system_from_document(read_json_file(get_str(params, "in1")));
        const auto s2 = system_from_document(read_json_file(get_str(params, "in2")));
        const bool one = get_uint_or(params, "one_cross", 1) != 0;
        auto sys = product(s1, s2, one);
        const std::size_t m = sys.size();
        const IntersectionRule cross =
            one ? IntersectionRule::one() : IntersectionRule::wildcard();
        return make_record(std::move(sys),
                           ConstraintProfile{std::nullopt, std::nullopt,
                                             IntersectionRule::wildcard(),
                                             IntersectionRule::wildcard(), cross},
                           m, "product");
    }
    if (name == "w22_power") return w22_power(get_uint(params, "n"));
    if (name == "star_extremal_2n") return star_extremal_2n(get_uint(params, "n"));
    if (name == "double_star") return double_star(get_uint(params, "s"));
    if (name == "c1") return c_family(1, get_uint(params, "q"));
    if (name == "c2") return c_family(2, get_uint(params, "q"));
    if (name == "c3") return c_family(3, get_uint(params, "q"));
    if (name == "final1") return final_construction(1, get_uint(params, "n"));
    if (name == "final2") return final_construction(2, get_uint(params, "n"));
    if (name == "final3") return final_construction(3, get_uint(params, "n"));
    throw std::invalid_argument("unknown construction '" + name + "'");
}

const char* condition_label(std::size_t c) {
    switch (static_cast<Condition>(c)) {
        case Condition::disjoint_pairs: return "A_i disjoint from B_i";
        case Condition::a_size: return "|A_i| <= a";
        case Condition::b_size: return "|B_i| <= b";
        case Condition::a_intersections: return "|A_i ^ A_j| in I_A";
        case Condition::b_intersections: return "|B_i ^ B_j| in I_B";
        case Condition::cross_intersections: return "0 < |A_i ^ B_j| in I_cross";
    }
    return "?";
}

unsigned max_of(const std::vector<unsigned>& v) {
    unsigned m = 0;
    for (unsigned x : v) m = std::max(m, x);
    return m;
}

} // namespace

int cmd_construct(const std::string& name,
                  const std::map<std::string, std::string>& params,
                  const std::string& out_path) {
    ConstructionRecord rec = [&] {
        try {
            return resolve_construction(name, params);
        } catch (const std::invalid_argument& e) {
            std::cerr << "construct: " << e.what() << "\n";
            std::exit(kExitUsage);
        } catch (const std::logic_error& e) {
            // make_record re-verifies; a failure here is a construction bug
            std::cerr << "construct: " << e.what() << "\n";
            std::exit(kExitDomainFailure);
        }
    }();

    json meta;
    meta["construction"] = name;
    if (!params.empty()) {
        json p = json::object();
        for (const auto& [k, v] : params) p[k] = v;
        meta["params"] = std::move(p);
    }
    meta["citation"] = rec.citation;
    meta["profile"] = rec.declared_profile.to_string();
    try {
        write_json_file(out_path, to_document(rec.system, std::move(meta)));
    } catch (const std::runtime_error& e) {
        std::cerr << "construct: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "wrote " << out_path << ": " << rec.system.size() << " pairs, profile "
              << rec.declared_profile.to_string() << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& in_path, const std::string& profile_text) {
    SetPairSystem sys;
    ConstraintProfile profile;
    try {
        sys = system_from_document(read_json_file(in_path));
        profile = parse_profile(profile_text);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return kExitUsage;
    }

    const VerificationReport rep = verify(sys, profile);
    std::cout << "profile " << profile.to_string() << ", m=" << rep.size
              << ", ground=" << sys.ground_set_size() << "\n";
    for (std::size_t c = 0; c < kConditionCount; ++c) {
        const auto& r = rep.conditions[c];
        std::cout << "  " << (c + 1) << ". " << condition_label(c) << ": "
                  << (r.passed ? "pass" : "FAIL");
        if (r.witness)
            std::cout << " (i=" << r.witness->i << ", j=" << r.witness->j
                      << ", size=" << r.witness->intersection_size << ")";
        std::cout << "\n";
    }
    if (rep.degenerate_size) std::cout << "  degenerate: fewer than 2 pairs\n";
    std::cout << "degrees: max d_A=" << max_of(rep.degrees.d_a)
              << ", max d_B=" << max_of(rep.degrees.d_b) << "\n";
    if (profile.one_cross() && rep.passed) {
        const IdentityCheck id = cross_degree_identity(sys);
        std::cout << "sum d_A*d_B = " << id.lhs << " vs m^2-m = " << id.rhs << ": "
                  << (id.holds ? "holds" : "VIOLATED") << "\n";
        std::cout << "incidence rank: A=" << incidence_rank(sys.a_side())
                  << ", B=" << incidence_rank(sys.b_side()) << "\n";
    }
    std::cout << (rep.passed ? "VERIFIED" : "NOT VERIFIED") << "\n";
    return rep.passed ? kExitOk : kExitDomainFailure;
}

int cmd_dualize(const std::string& in_path, const std::string& kind,
                const std::string& out_path) {
    PartitionKind pk;
    if (kind == "clique") pk = PartitionKind::clique_of_t2m;
    else if (kind == "biclique") pk = PartitionKind::biclique_of_b2m;
    else {
        std::cerr << "dualize: kind must be 'clique' or 'biclique'\n";
        return kExitUsage;
    }

    SetPairSystem sys;
    try {
        sys = system_from_document(read_json_file(in_path));
    } catch (const std::exception& e) {
        std::cerr << "dualize: " << e.what() << "\n";
        return kExitUsage;
    }

    EdgePartition part;
    try {
        part = dualize(sys, pk);
    } catch (const std::invalid_argument& e) {
        std::cerr << "dualize: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    try {
        write_json_file(out_path, to_document(part));
    } catch (const std::runtime_error& e) {
        std::cerr << "dualize: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cout << "wrote " << out_path << ": " << part.parts.size() << " parts, width "
              << part.width << "\n";
    return kExitOk;
}

int cmd_bounds(const std::string& profile_text, unsigned n) {
    ConstraintProfile profile;
    try {
        profile = parse_profile(profile_text);
    } catch (const std::exception& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return kExitUsage;
    }
    const BoundResult res = upper_bound(profile, n);
    if (!res.value) {
        std::cout << "no bound known for " << profile.to_string() << " at n=" << n << "\n";
        return kExitOk;
    }
    std::cout << *res.value << " ("
              << (res.kind == BoundKind::exact ? "exact" : "upper bound") << ", "
              << res.source << ")\n";
    return kExitOk;
}

int cmd_search(const SearchArgs& args) {
    ConstraintProfile profile;
    try {
        profile = parse_profile(args.profile_text);
    } catch (const std::exception& e) {
        std::cerr << "search: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        SearchStatus status;
        std::optional<SetPairSystem> witness;
        if (args.m) {
            const SearchOutcome o = decide_size(profile, *args.m, args.limits, args.options);
            status = o.status;
            witness = o.witness;
            const char* name = o.status == SearchStatus::sat     ? "SAT"
                               : o.status == SearchStatus::unsat ? "UNSAT"
                                                                 : "UNKNOWN";
            std::cout << "m=" << *args.m << " " << name << " nodes=" << o.nodes_explored
                      << "\n";
        } else {
            const MaximizeResult r = maximize(profile, args.limits, args.options);
            status = r.witness ? SearchStatus::sat : SearchStatus::unknown;
            witness = r.witness;
            std::cout << "max=" << r.best_m << " " << (r.proven_optimal ? "proven" : "unproven")
                      << " nodes=" << r.nodes_explored << "\n";
        }

        if (witness) {
            const VerificationReport rep = verify(*witness, profile);
            if (!rep.passed) {
                std::cerr << "search: witness failed re-verification (solver bug)\n";
                return kExitDomainFailure;
            }
            if (!args.witness_out.empty()) {
                json meta;
                meta["construction"] = "search-witness";
                meta["profile"] = profile.to_string();
                write_json_file(args.witness_out, to_document(*witness, std::move(meta)));
                std::cout << "witness written to " << args.witness_out << "\n";
            }
        }

        if (args.expect_sat) {
            const bool sat = status == SearchStatus::sat;
            if (sat != *args.expect_sat) {
                std::cerr << "search: expectation not met\n";
                return kExitDomainFailure;
            }
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "search: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace sps::tools
