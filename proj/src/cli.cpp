#include "deltaone/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "deltaone/dynamics.hpp"
#include "deltaone/poset.hpp"
#include "deltaone/rootsys.hpp"
#include "deltaone/verify.hpp"

namespace deltaone {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClauseFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

using nlohmann::ordered_json;

struct Selector {
    std::string type;
    int rank = 0;
    bool rank_set = false;
    bool all = false;
    int max_rank = 8;
};

SimpleType parse_exceptional(const std::string& t) {
    if (t == "E6") return make_simple_type(Family::E, 6);
    if (t == "E7") return make_simple_type(Family::E, 7);
    if (t == "E8") return make_simple_type(Family::E, 8);
    if (t == "F4") return make_simple_type(Family::F, 4);
    if (t == "G2") return make_simple_type(Family::G, 2);
    throw std::invalid_argument("unknown type '" + t +
                                "'; expected A/B/C/D with --rank, E6, E7, E8, F4, G2, or all");
}

// Resolve --type/--rank/--all into a list of concrete types.
std::vector<SimpleType> resolve_types(const Selector& sel, bool allow_all) {
    std::string t = sel.type;
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (sel.all || t == "ALL") {
        if (!allow_all)
            throw std::invalid_argument("this command needs a single --type, not 'all'");
        if (sel.rank_set) throw std::invalid_argument("--rank cannot be combined with 'all'");
        return sweep_types(sel.max_rank);
    }
    if (t == "A" || t == "B" || t == "C" || t == "D") {
        if (!sel.rank_set)
            throw std::invalid_argument("type " + t + " requires --rank");
        return {make_simple_type(static_cast<Family>(t[0]), sel.rank)};
    }
    SimpleType st = parse_exceptional(t);
    if (sel.rank_set)
        throw std::invalid_argument("type " + t + " takes no --rank flag");
    return {st};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file '" + path + "'");
    f << text;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

struct CountRow {
    SimpleType type{Family::A, 1};
    int h, hstar, long_simple_count, delta1_size;
    long long ideal_count;
};

CountRow count_row(SimpleType t, long long cap) {
    const RootSystem rs = RootSystem::build(t);
    const Delta1 d1 = rs.delta_one();
    return {t, rs.h(), rs.hstar(), rs.long_simple_count(), d1.poset.size(),
            static_cast<long long>(enumerate_lower_ideals(d1.poset, cap).size())};
}

std::string render_counts(const std::vector<CountRow>& rows, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        auto obj = [](const CountRow& r) {
            ordered_json j;
            j["type"] = r.type.to_string();
            j["h"] = r.h;
            j["hstar"] = r.hstar;
            j["longSimpleCount"] = r.long_simple_count;
            j["delta1Size"] = r.delta1_size;
            j["idealCount"] = r.ideal_count;
            return j;
        };
        if (rows.size() == 1) {
            os << obj(rows[0]).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) arr.push_back(obj(r));
            os << arr.dump(2) << "\n";
        }
    } else if (format == "tsv") {
        os << "# type\th\thstar\tlongSimpleCount\tdelta1Size\tidealCount\n";
        for (const auto& r : rows)
            os << r.type.to_string() << "\t" << r.h << "\t" << r.hstar << "\t"
               << r.long_simple_count << "\t" << r.delta1_size << "\t" << r.ideal_count << "\n";
    } else {
        for (const auto& r : rows) {
            os << "type            " << r.type.to_string() << "\n";
            os << "h               " << r.h << "\n";
            os << "hstar           " << r.hstar << "\n";
            os << "longSimpleCount " << r.long_simple_count << "\n";
            os << "delta1Size      " << r.delta1_size << "\n";
            os << "idealCount      " << r.ideal_count << "\n";
        }
    }
    return os.str();
}

std::string render_delta1(SimpleType t, const std::string& format) {
    const RootSystem rs = RootSystem::build(t);
    const Delta1 d1 = rs.delta_one();
    const FinitePoset& p = d1.poset;
    std::ostringstream os;
    if (format == "dot") return to_dot(p, "delta1_" + t.to_string());
    if (format == "json") {
        ordered_json j;
        j["type"] = t.to_string();
        j["size"] = p.size();
        ordered_json elems = ordered_json::array();
        for (int i = 0; i < p.size(); ++i) {
            ordered_json e;
            e["index"] = i;
            e["label"] = p.label(i);
            e["coeffs"] = d1.roots[i].coeffs;
            e["height"] = d1.roots[i].height;
            elems.push_back(e);
        }
        j["elements"] = elems;
        ordered_json covers = ordered_json::array();
        for (auto [l, u] : p.covers()) covers.push_back({l, u});
        j["covers"] = covers;
        os << j.dump(2) << "\n";
    } else if (format == "tsv") {
        os << "# index\tlabel\theight\tcoeffs\tupper_covers\n";
        for (int i = 0; i < p.size(); ++i) {
            std::vector<int> up;
            for (auto [l, u] : p.covers())
                if (l == i) up.push_back(u);
            os << i << "\t" << p.label(i) << "\t" << d1.roots[i].height << "\t"
               << join_ints(d1.roots[i].coeffs) << "\t" << join_ints(up) << "\n";
        }
    } else {
        os << "type " << t.to_string() << "\n";
        os << "elements " << p.size() << "\n";
        for (int i = 0; i < p.size(); ++i)
            os << "  " << i << "  label " << p.label(i) << "  height " << d1.roots[i].height
               << "\n";
        os << "covers " << p.covers().size() << "\n";
        for (auto [l, u] : p.covers()) os << "  " << p.label(l) << " -> " << p.label(u) << "\n";
    }
    return os.str();
}

std::string render_orbits(SimpleType t, const std::string& format, long long cap) {
    const RootSystem rs = RootSystem::build(t);
    const Delta1 d1 = rs.delta_one();
    const std::vector<Orbit> orbits = orbit_decomposition(d1.poset, cap);
    const int target = rs.hstar() - 2;
    std::ostringstream os;
    if (format == "json") {
        ordered_json j;
        j["type"] = t.to_string();
        j["orbitCount"] = orbits.size();
        j["lagrangianTarget"] = target;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const Orbit& o = orbits[i];
            ordered_json e;
            e["index"] = i;
            e["size"] = o.size();
            e["lagrangian"] = lagrangian_count(o, target);
            ordered_json rep = ordered_json::array();
            for (int x : o.representative().elements()) rep.push_back(d1.poset.label(x));
            e["representative"] = rep;
            e["cardinalities"] = o.cardinality_cycle();
            arr.push_back(e);
        }
        j["orbits"] = arr;
        os << j.dump(2) << "\n";
    } else if (format == "tsv") {
        os << "# orbit\tsize\tlagrangian\tcardinalities\n";
        for (std::size_t i = 0; i < orbits.size(); ++i)
            os << i << "\t" << orbits[i].size() << "\t" << lagrangian_count(orbits[i], target)
               << "\t" << join_ints(orbits[i].cardinality_cycle()) << "\n";
    } else {
        os << "type " << t.to_string() << "\n";
        os << "orbits " << orbits.size() << "  lagrangian target " << target << "\n";
        for (std::size_t i = 0; i < orbits.size(); ++i)
            os << "  orbit " << i << "  size " << orbits[i].size() << "  lagrangian "
               << lagrangian_count(orbits[i], target) << "  cards "
               << join_ints(orbits[i].cardinality_cycle()) << "\n";
    }
    return os.str();
}

std::string render_verify(const std::vector<VerificationReport>& reports,
                          const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        if (reports.size() == 1) {
            os << report_json(reports[0]).dump(2) << "\n";
        } else {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            os << arr.dump(2) << "\n";
        }
    } else if (format == "tsv") {
        os << "# type\th\thstar\tlongSimpleCount\tdelta1Size\tidealCount\torbitCount"
              "\torbit-count\torbit-size\tlagrangian-uniqueness\tsize-identity\tisoClaim\tpass\n";
        for (const auto& r : reports) {
            ordered_json j = report_json(r);
            os << r.type.to_string() << "\t" << r.h << "\t" << r.hstar << "\t"
               << r.long_simple_count << "\t" << r.delta1_size << "\t" << r.ideal_count << "\t"
               << r.orbit_count << "\t" << (r.clause_orbit_count ? "pass" : "fail") << "\t"
               << (r.clause_orbit_size ? "pass" : "fail") << "\t"
               << (r.clause_lagrangian.has_value() ? (*r.clause_lagrangian ? "pass" : "fail")
                                                   : "skipped")
               << "\t" << (r.clause_size_identity ? "pass" : "fail") << "\t"
               << j["isoClaim"].get<std::string>() << "\t" << (r.asserted_pass() ? "pass" : "fail")
               << "\n";
        }
    } else {
        os << report_table(reports);
        os << (all_asserted_pass(reports) ? "all clauses pass" : "CLAUSE FAILURES PRESENT") << "\n";
    }
    return os.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weight-poset rowmotion toolkit: builds the extra-special Delta(1) poset of a "
                 "finite simple root system, decomposes its ideal lattice into reverse-operator "
                 "orbits, and verifies the orbit-structure clauses"};
    app.require_subcommand(1);

    Selector sel;
    long long cap = kDefaultIdealCap;
    std::string format = "pretty";
    std::string output;

    auto add_common = [&](CLI::App* cmd, bool with_dot, bool with_all) {
        cmd->add_option("-t,--type", sel.type,
                        with_all ? "A/B/C/D (with --rank), E6, E7, E8, F4, G2, or all"
                                 : "A/B/C/D (with --rank), E6, E7, E8, F4, G2");
        CLI::Option* r = cmd->add_option("-r,--rank", sel.rank, "rank for families A/B/C/D");
        r->each([&](const std::string&) { sel.rank_set = true; });
        cmd->add_option("--cap", cap, "lower-ideal enumeration limit");
        std::vector<std::string> fmts = {"json", "tsv", "pretty"};
        if (with_dot) fmts.push_back("dot");
        cmd->add_option("-f,--format", format, "output format")
            ->check(CLI::IsMember(fmts));
        cmd->add_option("-o,--output", output, "write to file instead of stdout");
    };

    CLI::App* c_counts = app.add_subcommand("counts", "h, h*, |Pi_l|, |Delta(1)|, |J(Delta(1))|");
    add_common(c_counts, false, true);
    c_counts->add_flag("--all", sel.all, "run the default sweep");
    c_counts->add_option("--max-rank", sel.max_rank, "sweep rank bound (A/B/C to N, D to N+1)");

    CLI::App* c_delta1 = app.add_subcommand("delta1", "elements and covers of Delta(1)");
    add_common(c_delta1, true, false);

    CLI::App* c_orbits = app.add_subcommand("orbits", "reverse-operator orbits on J(Delta(1))");
    add_common(c_orbits, false, false);

    CLI::App* c_verify = app.add_subcommand("verify", "check the orbit-structure clauses");
    add_common(c_verify, false, true);
    c_verify->add_flag("--all", sel.all, "verify the default sweep");
    c_verify->add_option("--max-rank", sel.max_rank, "sweep rank bound (A/B/C to N, D to N+1)");

    CLI::App* c_export = app.add_subcommand("export-hasse", "Hasse diagram of Delta(1) as DOT");
    c_export->add_option("-t,--type", sel.type, "A/B/C/D (with --rank), E6, E7, E8, F4, G2");
    CLI::Option* er = c_export->add_option("-r,--rank", sel.rank, "rank for families A/B/C/D");
    er->each([&](const std::string&) { sel.rank_set = true; });
    c_export->add_option("-o,--output", output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_counts->parsed()) {
            std::vector<CountRow> rows;
            for (SimpleType t : resolve_types(sel, true)) rows.push_back(count_row(t, cap));
            write_output(output, render_counts(rows, format), out);
            return kExitOk;
        }
        if (c_delta1->parsed()) {
            SimpleType t = resolve_types(sel, false).at(0);
            write_output(output, render_delta1(t, format), out);
            return kExitOk;
        }
        if (c_orbits->parsed()) {
            SimpleType t = resolve_types(sel, false).at(0);
            write_output(output, render_orbits(t, format, cap), out);
            return kExitOk;
        }
        if (c_verify->parsed()) {
            std::vector<VerificationReport> reports;
            for (SimpleType t : resolve_types(sel, true)) reports.push_back(verify_type(t, cap));
            write_output(output, render_verify(reports, format), out);
            return all_asserted_pass(reports) ? kExitOk : kExitClauseFail;
        }
        if (c_export->parsed()) {
            SimpleType t = resolve_types(sel, false).at(0);
            write_output(output, render_delta1(t, "dot"), out);
            return kExitOk;
        }
        err << "no command given\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace deltaone
