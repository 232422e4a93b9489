// Command-line front end: verification suites, equation export, the
// exceptional-locus case study, and the finite-field oracle.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermconic/casestudy.hpp"
#include "fermconic/conicsystem.hpp"
#include "fermconic/json_io.hpp"
#include "fermconic/oracle.hpp"
#include "fermconic/symfun.hpp"

namespace {

constexpr const char* kVersion = "fermconic 1.0.0";

using fermconic::CheckReport;
using Json = nlohmann::json;

int emit_reports(const std::vector<CheckReport>& reports, bool json_format) {
    bool all = true;
    if (json_format) {
        Json out = Json::array();
        for (const auto& r : reports) {
            out.push_back(r.to_json());
            all = all && r.all_pass();
        }
        std::cout << Json{{"pass", all}, {"suites", out}}.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            r.print(std::cout);
            all = all && r.all_pass();
        }
        std::cout << (all ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << "\n";
    }
    return all ? 0 : 1;
}

// Flattens an AlphaBeta element over Frac(Q[e1..e5]) into a polynomial in
// [e1..e5, alpha, beta] after clearing the (monomial) denominators; the
// cleared denominator is returned separately.
struct Flattened {
    fermconic::MultiPoly<fermconic::Rational> poly;
    fermconic::Monomial cleared;  // denominator monomial in e1..e5
};

Flattened flatten_ab_dpoly(const fermconic::MultiPoly<fermconic::conics::ABS>& e,
                           const fermconic::VarsPtr& flat_vars) {
    using fermconic::Monomial;
    using fermconic::MultiPoly;
    using fermconic::Rational;
    // gather denominator monomials (all Frac denominators here are monomials)
    Monomial lcm;
    auto upd = [&](const fermconic::conics::FS& f) {
        if (f.den().is_constant()) return;
        if (f.den().term_count() != 1)
            throw fermconic::Error("flatten: non-monomial denominator in export");
        const Monomial& m = f.den().leading_term().m;
        for (size_t i = 0; i < 16; ++i)
            if (m.exp(i) > lcm.exp(i)) lcm.set(i, m.exp(i));
    };
    for (const auto& t : e.terms()) {
        upd(t.c.c00());
        upd(t.c.c10());
        upd(t.c.c01());
        upd(t.c.c11());
    }
    std::vector<typename MultiPoly<Rational>::Term> out;
    auto push = [&](const fermconic::conics::FS& f, unsigned da, unsigned db, unsigned dd) {
        if (f.is_zero()) return;
        // multiply by lcm / den
        Monomial quot = lcm;
        if (!f.den().is_constant()) quot = lcm.divide(f.den().leading_term().m);
        fermconic::Rational den_scalar =
            f.den().is_constant() ? f.den().leading_term().c : f.den().leading_term().c;
        for (const auto& nt : f.num().terms()) {
            Monomial m;
            for (int i = 0; i < 5; ++i) m.set(i, nt.m.exp(i) + quot.exp(i));
            m.set(5, da);
            m.set(6, db);
            m.set(7, dd);
            out.push_back({m, nt.c / den_scalar});
        }
    };
    for (const auto& t : e.terms()) {
        unsigned dd = t.m.exp(2);  // d exponent in the {x,y,d} carrier
        push(t.c.c00(), 0, 0, dd);
        push(t.c.c10(), 1, 0, dd);
        push(t.c.c01(), 0, 1, dd);
        push(t.c.c11(), 1, 1, dd);
    }
    Flattened fl{MultiPoly<Rational>::from_terms(flat_vars, std::move(out), Rational()), lcm};
    return fl;
}

Json monomial_to_json(const fermconic::Monomial& m, size_t nvars) {
    Json e = Json::array();
    for (size_t i = 0; i < nvars; ++i) e.push_back(m.exp(i));
    return e;
}

int run_identities(bool json_format) {
    namespace sf = fermconic::symfun;
    namespace cs = fermconic::conics;
    std::vector<CheckReport> reports;
    reports.push_back(sf::verify_vandermonde_kernel());
    reports.push_back(sf::base_locus_identities());
    reports.push_back(sf::involution_relations());
    auto [table, o2rep] = sf::option2_frame();
    reports.push_back(o2rep);
    {
        CheckReport swaps;
        swaps.suite = "smn-tau-swaps (option 2)";
        swaps.items.push_back(sf::check_smn_swap(table, 0, 2));
        swaps.items.push_back(sf::check_smn_swap(table, 3, 2));
        swaps.items.push_back(sf::check_smn_swap(table, 1, 2));
        reports.push_back(swaps);
    }
    reports.push_back(cs::discriminant_check());
    reports.push_back(cs::recursion_identity_report(cs::build_free_symbol_system(), "free-S"));
    reports.push_back(cs::recursion_identity_report(cs::build_option1_system(), "option-1"));
    reports.push_back(cs::tau_symmetry_report());
    return emit_reports(reports, json_format);
}

int run_derive(int option, bool eliminate, bool json_format, const std::string& out_path) {
    namespace cs = fermconic::conics;
    using fermconic::Rational;
    Json out;
    if (option == 1) {
        auto sys = cs::build_option1_system();
        auto flat_vars =
            fermconic::make_vars({"e1", "e2", "e3", "e4", "e5", "alpha", "beta", "d"});
        out["option"] = 1;
        out["vars"] = flat_vars->names();
        out["note"] =
            "coefficients in the elementary symmetric basis e1..e5 of u0..u4; "
            "denominators (powers of e2, e3) cleared per equation and recorded";
        Json eqs = Json::array();
        for (int i = 0; i < 5; ++i) {
            Flattened fl = flatten_ab_dpoly(sys.E[i], flat_vars);
            Json ej;
            ej["name"] = "E" + std::to_string(i + 1);
            ej["cleared_denominator"] = monomial_to_json(fl.cleared, 5);
            ej["poly"] = fermconic::to_json(fl.poly);
            eqs.push_back(std::move(ej));
        }
        out["equations"] = std::move(eqs);
        if (eliminate) {
            auto el = cs::eliminate_d(sys);
            Json rs = Json::array();
            for (int i = 0; i < 4; ++i) {
                // residuals are scalar AlphaBeta values; wrap as 0-degree polys
                fermconic::MultiPoly<cs::ABS> wrap =
                    fermconic::MultiPoly<cs::ABS>::constant(sys.vars, el.r[i]);
                Flattened fl = flatten_ab_dpoly(wrap, flat_vars);
                Json rj;
                rj["name"] = "R" + std::to_string(i + 1);
                rj["cleared_denominator"] = monomial_to_json(fl.cleared, 5);
                rj["poly"] = fermconic::to_json(fl.poly);
                rs.push_back(std::move(rj));
            }
            out["eliminated"] = std::move(rs);
        }
    } else {
        // Option 2: the n >= 3 S'-entries have no feasible closed form
        // (degrees 54..90 in u); the system is exported over free S-symbols
        // together with every entry known in closed form.
        fermconic::conics::FreeSymbolContext ctx;
        auto sys = cs::build_system(ctx.s, ctx.alpha, ctx.beta);
        auto flat_vars = fermconic::make_vars({"S20", "S30", "S11", "S21", "S31", "S02", "S12",
                                               "S22", "S32", "S03", "S13", "S23", "S04", "S14",
                                               "S05"});
        (void)flat_vars;
        auto sym_vars = fermconic::make_vars(
            {"S20", "S30", "S11", "S21", "S31", "S02", "S12", "S22", "S32", "S03", "S13", "S23",
             "S04", "S14", "S05", "alpha"});
        (void)sym_vars;
        auto exp_vars =
            fermconic::make_vars({"S20", "S30", "S11", "S21", "S31", "S02", "S12", "S22", "S32",
                                  "S03", "S13", "S23", "S04", "S14", "S05", "d"});
        (void)exp_vars;
        out["option"] = 2;
        out["note"] =
            "equations over free S-symbols with alpha, beta implicit in the quadratic "
            "extension; S'-values with n <= 2 are attached in closed form over u0..u4, "
            "higher entries are defined by the delta-division and available numerically";
        // export equations as strings (alpha/beta carried in the extension)
        Json eqs = Json::array();
        for (int i = 0; i < 5; ++i) {
            Json ej;
            ej["name"] = "E" + std::to_string(i + 1);
            ej["text"] = sys.E[i].to_string();
            eqs.push_back(std::move(ej));
        }
        out["equations"] = std::move(eqs);
        auto [table, rep] = fermconic::symfun::option2_frame();
        (void)rep;
        Json known;
        for (unsigned m = 0; m <= 5; ++m)
            for (unsigned n = 0; m + n <= 5 && n <= 2; ++n) {
                const auto& v = table.at(m, n);
                known["S_" + std::to_string(m) + "_" + std::to_string(n)] = fermconic::to_json(v);
            }
        out["smn_known"] = std::move(known);
    }
    std::string payload = out.dump(json_format ? 2 : -1);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << payload << "\n";
        std::cerr << "wrote " << out_path << "\n";
    } else {
        std::cout << payload << "\n";
    }
    return 0;
}

int run_casestudy(bool json_format) {
    auto reports = fermconic::casestudy::run_case_study();
    if (!json_format) {
        bool f3ok = false;
        for (const auto& r : reports)
            for (const auto& item : r.items)
                if (item.name.rfind("f3 ==", 0) == 0) f3ok = item.pass;
        std::cout << "f3 = -20 t^2(t-1)^2 a^5 b^5 c^5: " << (f3ok ? "OK" : "FAIL") << "\n";
    }
    return emit_reports(reports, json_format);
}

int run_examples(bool json_format) {
    return emit_reports(fermconic::casestudy::run_examples(), json_format);
}

int run_oracle(std::uint64_t prime, unsigned trials, std::uint64_t seed, bool json_format,
               const std::string& replay_path) {
    namespace orc = fermconic::oracle;
    if (!replay_path.empty()) {
        std::ifstream f(replay_path);
        if (!f) {
            std::cerr << "cannot open replay file " << replay_path << "\n";
            return 2;
        }
        Json j = Json::parse(f);
        auto inst = orc::SectionInstance::from_json(j);
        orc::CrossValidateReport rep;
        rep.prime = inst.prime;
        rep.seed = seed;
        rep.requested = 1;
        rep.accepted = 1;
        auto branches = fermconic::conics::pencil_roots_fp(inst.s);
        auto sols = orc::system_solutions(inst.s, branches);
        bool ok = orc::validate_instance(inst, sols, rep);
        std::cout << rep.to_json().dump(json_format ? 2 : -1) << "\n";
        return ok ? 0 : 1;
    }
    auto rep = orc::cross_validate(trials, prime, seed);
    // Schwartz-Zippel batch over the kernel identities, with bound accounting
    const auto& U = fermconic::symfun::uring();
    std::vector<orc::SZRecord> sz;
    {
        fermconic::MultiPoly<fermconic::Rational> sum_n = U.zero();
        for (int i = 0; i < 5; ++i) sum_n += U.n(i);
        auto rhs = U.constant(3) * U.e(2) * U.e(2) - U.constant(4) * U.e(1) * U.e(3);
        sz.push_back(orc::identity_test("sum n_i == 3e2^2-4e1e3", sum_n, rhs,
                                        (1ull << 61) - 1, 8, seed));
        sz.push_back(orc::identity_test("sum M_i u_i^2 == delta e2", U.kernel_moment(2),
                                        U.delta() * U.e(2), (1ull << 61) - 1, 8, seed + 1));
    }
    bool sz_ok = true;
    Json szj = Json::array();
    for (const auto& r : sz) {
        sz_ok = sz_ok && r.pass && r.log2_bound <= -40.0;
        szj.push_back(r.to_json());
    }
    Json out = rep.to_json();
    out["schwartz_zippel"] = std::move(szj);
    out["sz_bounds_ok"] = sz_ok;
    std::cout << out.dump(json_format ? 2 : -1) << "\n";
    return (rep.agreement && rep.accepted == rep.requested && sz_ok) ? 0 : 1;
}

int run_dump_smn(int option, unsigned max_total, bool json_format) {
    namespace sf = fermconic::symfun;
    Json out;
    out["option"] = option;
    Json table;
    if (option == 1) {
        out["vars"] = std::vector<std::string>{"e1", "e2", "e3", "e4", "e5"};
        out["note"] = "entries in the elementary symmetric basis";
        for (unsigned m = 0; m <= max_total; ++m)
            for (unsigned n = 0; m + n <= max_total; ++n)
                table["S_" + std::to_string(m) + "_" + std::to_string(n)] =
                    fermconic::to_json(sf::smn_option1(m, n));
    } else {
        out["vars"] = std::vector<std::string>{"u0", "u1", "u2", "u3", "u4"};
        out["note"] = "entries with n <= 2 (higher entries are delta-division defined; "
                      "their closed forms are computationally infeasible)";
        auto [tbl, rep] = sf::option2_frame();
        (void)rep;
        for (unsigned m = 0; m <= max_total; ++m)
            for (unsigned n = 0; m + n <= max_total && n <= 2; ++n)
                table["S_" + std::to_string(m) + "_" + std::to_string(n)] =
                    fermconic::to_json(tbl.at(m, n));
    }
    out["table"] = std::move(table);
    std::cout << out.dump(json_format ? 2 : -1) << "\n";
    return 0;
}

std::array<fermconic::Rational, 5> parse_coords(const std::string& text) {
    std::array<fermconic::Rational, 5> out;
    std::stringstream ss(text);
    std::string piece;
    int i = 0;
    while (std::getline(ss, piece, ',') && i < 5) out[i++] = fermconic::Rational::from_string(piece);
    if (i != 5) throw fermconic::ParseError("expected 5 comma-separated coordinates");
    return out;
}

int run_bitangent_check(const std::string& pstr, const std::string& qstr, bool json_format) {
    namespace bt = fermconic::bitangent;
    auto pc = parse_coords(pstr);
    auto qc = parse_coords(qstr);
    bt::PointP4<fermconic::Rational> P{pc}, Q{qc};
    auto res = bt::contact_residuals(P, Q);
    Json out;
    Json arr = Json::array();
    bool all_zero = true;
    std::array<int, 4> ks{0, 1, 4, 5};
    for (int i = 0; i < 4; ++i) {
        arr.push_back(Json{{"k", ks[i]}, {"residual", res[i].to_string()}});
        all_zero = all_zero && res[i].is_zero();
    }
    out["residuals"] = std::move(arr);
    out["bitangent"] = all_zero;
    std::cout << out.dump(json_format ? 2 : -1) << "\n";
    return 0;
}

int run_bitangent_mmap(const std::string& ustr, bool json_format) {
    namespace bt = fermconic::bitangent;
    auto uc = parse_coords(ustr);
    Json out;
    try {
        auto img = bt::m_map(uc);
        Json arr = Json::array();
        for (const auto& c : img.x) arr.push_back(c.to_string());
        out["m"] = std::move(arr);
        auto cls = bt::base_locus_classify(uc);
        out["base_locus"] = cls.to_string();
    } catch (const fermconic::BaseLocusError& e) {
        out["error"] = e.what();
        out["base_locus"] = bt::base_locus_classify(uc).to_string();
        std::cout << out.dump(json_format ? 2 : -1) << "\n";
        return 1;
    }
    std::cout << out.dump(json_format ? 2 : -1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact equations and verification suites for the space of conics "
                 "in the Fermat quintic threefold"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_id = app.add_subcommand("identities", "Symmetric-function and bitangent suites");

    int opt = 1;
    bool eliminate = false;
    std::string out_path;
    auto* cmd_derive = app.add_subcommand("derive", "Export the conic-existence equations");
    cmd_derive->add_option("--option", opt, "Coordinate simplex choice")->check(CLI::IsMember({1, 2}));
    cmd_derive->add_flag("--eliminate", eliminate, "Also export the d-free residuals");
    cmd_derive->add_option("--out", out_path, "Write JSON to a file instead of stdout");

    auto* cmd_case = app.add_subcommand("casestudy", "Exceptional-locus reproduction");
    auto* cmd_ex = app.add_subcommand("examples", "Worked plane-family verifications");

    std::uint64_t prime = 101;
    unsigned trials = 100;
    std::uint64_t seed = 7;
    std::string replay;
    auto* cmd_oracle = app.add_subcommand("oracle", "Finite-field cross-validation");
    cmd_oracle->add_option("--prime", prime, "Enumeration prime");
    cmd_oracle->add_option("--trials", trials, "Admissible samples");
    cmd_oracle->add_option("--seed", seed, "Deterministic seed");
    cmd_oracle->add_option("--replay", replay, "Replay a serialized instance JSON");

    int dump_opt = 1;
    unsigned max_total = 5;
    auto* cmd_dump = app.add_subcommand("dump-smn", "Emit the S table as JSON");
    cmd_dump->add_option("--option", dump_opt, "Frame choice")->check(CLI::IsMember({1, 2}));
    cmd_dump->add_option("--max", max_total, "Maximum m+n");

    std::string pstr, qstr, ustr;
    auto* cmd_bit = app.add_subcommand("bitangent", "Point-level bitangent utilities");
    auto* cmd_bit_check = cmd_bit->add_subcommand("check", "Contact residuals for P, Q");
    cmd_bit_check->add_option("--p", pstr, "P coordinates, comma separated")->required();
    cmd_bit_check->add_option("--q", qstr, "Q coordinates, comma separated")->required();
    auto* cmd_bit_mmap = cmd_bit->add_subcommand("mmap", "Evaluate the m-map");
    cmd_bit_mmap->add_option("--u", ustr, "U coordinates, comma separated")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (const char* env = std::getenv("FERMCONIC_SEED")) {
        if (!cmd_oracle->count("--seed")) seed = std::strtoull(env, nullptr, 10);
    }

    bool json_format = format == "json";
    try {
        if (cmd_id->parsed()) return run_identities(json_format);
        if (cmd_derive->parsed()) return run_derive(opt, eliminate, json_format, out_path);
        if (cmd_case->parsed()) return run_casestudy(json_format);
        if (cmd_ex->parsed()) return run_examples(json_format);
        if (cmd_oracle->parsed()) return run_oracle(prime, trials, seed, json_format, replay);
        if (cmd_dump->parsed()) return run_dump_smn(dump_opt, max_total, json_format);
        if (cmd_bit->parsed()) {
            if (cmd_bit_check->parsed()) return run_bitangent_check(pstr, qstr, json_format);
            if (cmd_bit_mmap->parsed()) return run_bitangent_mmap(ustr, json_format);
            std::cerr << "bitangent: expected a subcommand (check | mmap)\n";
            return 2;
        }
    } catch (const fermconic::Error& e) {
        Json err{{"error", e.what()}};
        std::cout << err.dump() << "\n";
        return 1;
    }
    return 2;
}
