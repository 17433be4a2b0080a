// Command-line front end: symbol arithmetic, theta/GGP predicates, and the
// verification census, with text or JSON output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "lusym/lusym.hpp"

namespace {

using namespace lusym;
using io::json;

struct GlobalOpts {
    std::string format = "text";
    int q_class = 1;
    unsigned seed = 20240u;
    bool enable_case3 = false;

    SignConfig cfg() const { return SignConfig::from_q_class(q_class); }
    bool json_out() const { return format == "json"; }
};

struct IrrepInput {
    std::string irrep_json;
    std::string kind;
    int n = 0;
    std::string eps;
    std::string lambda1;
    std::string lambdam1;
    std::string iota;
    std::string rho_json;
    bool rho_cuspidal = false;

    void attach(CLI::App* cmd, const std::string& prefix) {
        std::string p = prefix.empty() ? "" : prefix + "-";
        cmd->add_option("--" + (prefix.empty() ? std::string("irrep") : prefix),
                        irrep_json, "representation as JSON");
        cmd->add_option("--" + p + "kind", kind, "group kind: Sp|OEven|OOdd");
        cmd->add_option("--" + p + "n", n, "group rank n");
        cmd->add_option("--" + p + "eps", eps, "group discriminant +|-");
        cmd->add_option("--" + p + "lambda1", lambda1, "symbol 'top;bottom'");
        cmd->add_option("--" + p + "lambdam1", lambdam1,
                        "symbol 'top;bottom' (default '-;-' or '0;-')");
        cmd->add_option("--" + p + "iota", iota, "iota +|- (odd orthogonal)");
        cmd->add_option("--" + p + "rho", rho_json, "rho as a JSON array");
        cmd->add_flag("--" + p + "rho-cuspidal", rho_cuspidal,
                      "mark rho as cuspidal (basic data)");
    }

    Irrep build() const {
        if (!irrep_json.empty())
            return io::irrep_from_json(json::parse(irrep_json));
        Irrep p;
        p.group.kind = io::parse_kind(kind);
        p.group.n = n;
        if (!eps.empty())
            p.group.eps = parse_sign(eps);
        if (!rho_json.empty())
            p.rho = io::rho_from_json(json::parse(rho_json), rho_cuspidal);
        p.lambda1 = io::parse_symbol(lambda1);
        if (!lambdam1.empty())
            p.lambdam1 = io::parse_symbol(lambdam1);
        else
            p.lambdam1 = p.group.kind == GroupKind::OOdd ? Symbol({0}, {})
                                                         : Symbol({}, {});
        if (!iota.empty())
            p.iota = parse_sign(iota);
        auto v = validate(p);
        if (!v.ok())
            throw std::invalid_argument("invalid representation: " + v.violations.front());
        return p;
    }
};

void emit(const GlobalOpts& g, const json& j, const std::string& text) {
    if (g.json_out())
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

int cmd_symbols_show(const GlobalOpts& g, const std::string& sym) {
    Symbol s = io::parse_symbol(sym);
    json j;
    j["symbol"] = io::format_symbol(s);
    j["reduced"] = io::format_symbol(s.normalize());
    j["rank"] = s.rank();
    j["defect"] = s.defect();
    auto fam = s.family();
    j["family"] = fam ? family_name(*fam) : "none";
    try {
        j["sd"] = std::string(1, sign_char(s.sd()));
    } catch (const SdUndefinedError&) {
        j["sd"] = "undefined";
    }
    j["pd"] = std::string(1, sign_char(s.pd()));
    j["upsilon"] = io::format_bipartition(s.upsilon());
    j["dual"] = io::format_symbol(ac_dual(s));
    j["zeta"] = to_string(s.zeta());

    std::ostringstream os;
    os << "symbol   " << j["symbol"].get<std::string>() << "\n"
       << "reduced  " << j["reduced"].get<std::string>() << "\n"
       << "rank     " << s.rank() << "\n"
       << "defect   " << s.defect() << "\n"
       << "family   " << j["family"].get<std::string>() << "\n"
       << "sd       " << j["sd"].get<std::string>() << "\n"
       << "pd       " << j["pd"].get<std::string>() << "\n"
       << "upsilon  " << j["upsilon"].get<std::string>() << "\n"
       << "dual     " << j["dual"].get<std::string>() << "\n"
       << "zeta     " << j["zeta"].get<std::string>() << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_symbols_enum(const GlobalOpts& g, int rank, std::optional<int> defect,
                     const std::string& family) {
    std::vector<Symbol> list;
    if (defect) {
        list = enumerate_symbols(rank, *defect);
    } else {
        DefectFamily f;
        if (family == "S") f = DefectFamily::S;
        else if (family == "S+") f = DefectFamily::SPlus;
        else if (family == "S-") f = DefectFamily::SMinus;
        else throw std::invalid_argument("family must be S, S+ or S-");
        list = enumerate_family(rank, f);
    }
    json arr = json::array();
    std::ostringstream os;
    for (const auto& s : list) {
        arr.push_back(io::format_symbol(s));
        os << io::format_symbol(s) << "\n";
    }
    json j{{"rank", rank}, {"count", list.size()}, {"symbols", arr}};
    emit(g, j, os.str());
    return 0;
}

GroupTag parse_target(const std::string& kind, int n, const std::string& eps) {
    GroupTag t;
    t.kind = io::parse_kind(kind);
    t.n = n;
    if (!eps.empty())
        t.eps = parse_sign(eps);
    return t;
}

WittTower parse_tower(const std::string& s) {
    if (s == "Sp") return WittTower::sp;
    if (s == "O+even") return WittTower::o_even_plus;
    if (s == "O-even") return WittTower::o_even_minus;
    if (s == "O+odd") return WittTower::o_odd_plus;
    if (s == "O-odd") return WittTower::o_odd_minus;
    throw std::invalid_argument(
        "tower must be one of Sp, O+even, O-even, O+odd, O-odd");
}

int cmd_theta_targets(const GlobalOpts& g, const IrrepInput& in,
                      const std::string& tk, int tn, const std::string& te) {
    Irrep p = in.build();
    GroupTag target = parse_target(tk, tn, te);
    auto targets = theta_targets(p, target, g.cfg());
    json edges = json::array();
    std::ostringstream os;
    for (const auto& q : targets) {
        edges.push_back(json{{"source", io::irrep_to_json(p)},
                             {"target", io::irrep_to_json(q)}});
        os << io::irrep_to_json(q).dump() << "\n";
    }
    json j{{"count", targets.size()}, {"edges", edges}};
    emit(g, j, os.str());
    return 0;
}

int cmd_theta_first(const GlobalOpts& g, const IrrepInput& in, const std::string& tower) {
    Irrep p = in.build();
    auto fo = first_occurrence(p, parse_tower(tower), g.cfg());
    json j{{"tower", tower}, {"n_first", fo.n_first}, {"bold_n", fo.bold_n}};
    std::ostringstream os;
    os << "n_first " << fo.n_first << "\nbold_n  " << fo.bold_n << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_theta_conserve(const GlobalOpts& g, const IrrepInput& in) {
    Irrep p = in.build();
    auto ids = conservation_check_basic(p, g.cfg());
    json arr = json::array();
    std::ostringstream os;
    bool all = true;
    for (const auto& id : ids) {
        arr.push_back(json{{"identity", id.name}, {"passed", id.passed},
                           {"detail", id.detail}});
        os << (id.passed ? "pass " : "FAIL ") << id.name << "  " << id.detail << "\n";
        all = all && id.passed;
    }
    emit(g, json{{"all_passed", all}, {"identities", arr}}, os.str());
    return all ? 0 : 1;
}

int cmd_ggp_check(const GlobalOpts& g, const IrrepInput& a, const IrrepInput& b,
                  const std::string& eps) {
    GGPQuery q{a.build(), b.build(), parse_sign(eps), g.cfg(), g.enable_case3};
    auto wit = ggp_witnesses(q);
    json warr = json::array();
    for (auto& [z, v] : wit)
        warr.push_back(json{{"zeta", std::string(1, sign_char(z))},
                            {"nu", std::string(1, sign_char(v))}});
    json j{{"nonvanishing", !wit.empty()}, {"witnesses", warr}};
    std::ostringstream os;
    os << (wit.empty() ? "vanishes\n" : "nonvanishing\n");
    for (auto& [z, v] : wit)
        os << "  zeta=" << sign_char(z) << " nu=" << sign_char(v) << "\n";
    emit(g, j, os.str());
    return 0;
}

int cmd_ggp_relevant(const GlobalOpts& g, const IrrepInput& a, const IrrepInput& b) {
    auto w = strongly_relevant(a.build(), b.build(), g.cfg());
    json j;
    std::ostringstream os;
    if (w) {
        j = json{{"strongly_relevant", true},
                 {"zeta", std::string(1, sign_char(w->zeta))},
                 {"nu", std::string(1, sign_char(w->nu))},
                 {"eps", std::string(1, sign_char(w->eps))}};
        os << "strongly relevant: zeta=" << sign_char(w->zeta)
           << " nu=" << sign_char(w->nu) << " eps=" << sign_char(w->eps) << "\n";
    } else {
        j = json{{"strongly_relevant", false}};
        os << "not strongly relevant\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_ggp_descent(const GlobalOpts& g, const IrrepInput& in) {
    Irrep p = in.build();
    DescentByEps r = first_descent_by_eps(p, g.cfg(), g.enable_case3);
    json j{{"ell", r.ell}};
    std::ostringstream os;
    os << "ell " << r.ell << "\n";
    for (Sign e : {Sign::plus, Sign::minus}) {
        json arr = json::array();
        for (const auto& c : r.at(e))
            arr.push_back(io::irrep_to_json(c));
        j[e == Sign::plus ? "plus" : "minus"] = arr;
        os << "eps=" << sign_char(e) << " (" << r.at(e).size() << ")\n";
        for (const auto& c : r.at(e))
            os << "  " << io::irrep_to_json(c).dump() << "\n";
    }
    emit(g, j, os.str());
    return 0;
}

int cmd_verify_run(const GlobalOpts& g, int max_rank, const std::string& checks,
                   const std::string& csv_path) {
    SuiteOptions opt;
    opt.max_rank = max_rank;
    opt.cfg = g.cfg();
    opt.seed = g.seed;
    std::vector<std::string> selection;
    if (!checks.empty()) {
        std::istringstream is(checks);
        std::string id;
        while (std::getline(is, id, ','))
            if (!id.empty())
                selection.push_back(id);
    }
    auto reports = run_suite(opt, selection);

    json arr = json::array();
    std::ostringstream os, csv;
    csv << "check_id,scope,passed,failed,warnings\n";
    for (const auto& r : reports) {
        json ce = json::array();
        for (const auto& c : r.counterexamples)
            ce.push_back(c);
        arr.push_back(json{{"check_id", r.check_id},
                           {"scope", r.scope},
                           {"passed", r.passed},
                           {"failed", r.failed},
                           {"warnings", r.warnings},
                           {"counterexamples", ce}});
        os << (r.failed ? "FAIL " : "pass ") << r.check_id << "  passed=" << r.passed
           << " failed=" << r.failed << " warnings=" << r.warnings << "  [" << r.scope
           << "]\n";
        for (const auto& c : r.counterexamples)
            os << "    " << c << "\n";
        csv << r.check_id << ",\"" << r.scope << "\"," << r.passed << "," << r.failed
            << "," << r.warnings << "\n";
    }
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        f << csv.str();
    }
    emit(g, arr, os.str());
    return suite_exit_code(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lusym: Lusztig-symbol calculus for finite classical groups"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--q-class", g.q_class, "q mod 4 (1 or 3); sets the sign of -1")
        ->check(CLI::IsMember({1, 3}));
    app.add_option("--seed", g.seed, "seed for randomized property samplers");
    app.add_flag("--enable-case3", g.enable_case3,
                 "evaluate the odd-odd GGP case exactly as printed");

    // symbols
    auto* symbols = app.add_subcommand("symbols", "symbol arithmetic");
    symbols->require_subcommand(1);
    auto* show = symbols->add_subcommand("show", "statistics of one symbol");
    std::string show_sym;
    show->add_option("--symbol", show_sym, "symbol 'top;bottom'")->required();
    auto* senum = symbols->add_subcommand("enum", "list symbols of a rank");
    int enum_rank = 0;
    std::optional<int> enum_defect;
    std::string enum_family;
    senum->add_option("--rank", enum_rank)->required();
    int defect_holder = 0;
    auto* dopt = senum->add_option("--defect", defect_holder);
    senum->add_option("--family", enum_family, "S|S+|S-");

    // theta
    auto* theta = app.add_subcommand("theta", "theta correspondence");
    theta->require_subcommand(1);
    auto* targets = theta->add_subcommand("targets", "targets in a fixed group");
    IrrepInput targets_in;
    targets_in.attach(targets, "");
    std::string tk, te;
    int tn = 0;
    targets->add_option("--target-kind", tk)->required();
    targets->add_option("--target-n", tn)->required();
    targets->add_option("--target-eps", te);
    auto* firstocc = theta->add_subcommand("first-occurrence", "first occurrence index");
    IrrepInput firstocc_in;
    firstocc_in.attach(firstocc, "");
    std::string tower;
    firstocc->add_option("--tower", tower, "Sp|O+even|O-even|O+odd|O-odd")->required();
    auto* conserve = theta->add_subcommand("conserve", "conservation identities");
    IrrepInput conserve_in;
    conserve_in.attach(conserve, "");

    // ggp
    auto* ggp = app.add_subcommand("ggp", "Gan-Gross-Prasad predicates");
    ggp->require_subcommand(1);
    auto* check = ggp->add_subcommand("check", "non-vanishing of m_eps(pi, pistar)");
    IrrepInput pi_in, pistar_in;
    pi_in.attach(check, "pi");
    pistar_in.attach(check, "pistar");
    std::string ggp_eps = "+";
    check->add_option("--eps", ggp_eps);
    auto* descent = ggp->add_subcommand("descent", "first descent");
    IrrepInput descent_in;
    descent_in.attach(descent, "");
    auto* relevant = ggp->add_subcommand("relevant", "strong relevance for basic pairs");
    IrrepInput rel_pi, rel_pistar;
    rel_pi.attach(relevant, "pi");
    rel_pistar.attach(relevant, "pistar");

    // verify
    auto* verify = app.add_subcommand("verify", "verification census");
    verify->require_subcommand(1);
    auto* run = verify->add_subcommand("run", "run the check suite");
    int max_rank = 4;
    std::string checks, csv_path;
    run->add_option("--max-rank", max_rank);
    run->add_option("--checks", checks, "comma-separated check ids");
    run->add_option("--csv", csv_path, "write a CSV summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed())
            return cmd_symbols_show(g, show_sym);
        if (senum->parsed()) {
            if (dopt->count())
                enum_defect = defect_holder;
            return cmd_symbols_enum(g, enum_rank, enum_defect, enum_family);
        }
        if (targets->parsed())
            return cmd_theta_targets(g, targets_in, tk, tn, te);
        if (firstocc->parsed())
            return cmd_theta_first(g, firstocc_in, tower);
        if (conserve->parsed())
            return cmd_theta_conserve(g, conserve_in);
        if (check->parsed())
            return cmd_ggp_check(g, pi_in, pistar_in, ggp_eps);
        if (descent->parsed())
            return cmd_ggp_descent(g, descent_in);
        if (relevant->parsed())
            return cmd_ggp_relevant(g, rel_pi, rel_pistar);
        if (run->parsed())
            return cmd_verify_run(g, max_rank, checks, csv_path);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const lusym::io::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
