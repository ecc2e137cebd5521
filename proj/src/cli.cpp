#include "prescount/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "prescount/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prescount {

namespace {

struct InstanceOpts {
    std::int64_t q = 0;
    std::int64_t p = 0;
    int r = 1;
    std::string modulus;  // constant-first digits over F_p, e.g. "2,2,1"
    std::string type;
    int ell = 0;
    int t = -1;
    std::int64_t max_group_order = std::int64_t{1} << 20;
    std::int64_t budget = std::int64_t{1} << 22;
    int threads = 0;  // 0 = parallel with runtime default, 1 = serial
    std::string format = "pretty";
};

void add_instance_flags(CLI::App* cmd, InstanceOpts& o, bool with_budget) {
    cmd->add_option("--q", o.q, "field size q (prime power)");
    cmd->add_option("--p", o.p, "field characteristic (alternative to --q)");
    cmd->add_option("--r", o.r, "extension degree over F_p");
    cmd->add_option("--modulus", o.modulus,
                    "extension modulus digits over F_p, constant first (e.g. 2,2,1)");
    cmd->add_option("--type", o.type, "prescription type: I or II")->required();
    cmd->add_option("--ell", o.ell, "number of prescribed leading coefficients")->required();
    cmd->add_option("--t", o.t, "number of prescribed ending coefficients (type I)");
    cmd->add_option("--max-group-order", o.max_group_order, "cap on |E| for decomposition");
    cmd->add_option("--format", o.format, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--threads", o.threads, "worker threads (1 = serial reference kernels)");
    if (with_budget) cmd->add_option("--budget", o.budget, "oracle candidate cap");
}

std::vector<std::int64_t> parse_digit_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

Prescription make_prescription(const InstanceOpts& o) {
    FieldCtx F = FieldCtx::prime_field(2);
    if (o.q > 0) {
        if (o.modulus.empty()) {
            F = FieldCtx::from_q(o.q);
        } else {
            auto fac = nt::factorize(o.q);
            if (fac.size() != 1) throw invalid_input("q must be a prime power");
            F = FieldCtx::extension_field(fac[0].first, fac[0].second, parse_digit_list(o.modulus));
        }
    } else if (o.p > 0) {
        F = FieldCtx::extension_field(o.p, o.r,
                                      o.modulus.empty() ? std::vector<std::int64_t>{}
                                                        : parse_digit_list(o.modulus));
    } else {
        throw invalid_input("one of --q or --p is required");
    }
    if (o.type == "I") {
        if (o.t < 1) throw invalid_input("type I requires --t >= 1");
        return Prescription::type_one(std::move(F), o.ell, o.t);
    }
    if (o.type == "II") {
        if (o.t >= 0) throw invalid_input("type II takes no --t");
        return Prescription::type_two(std::move(F), o.ell);
    }
    throw invalid_input("--type must be I or II");
}

Exec exec_of(const InstanceOpts& o) {
    if (o.threads == 1) return Exec::serial;
#ifdef _OPENMP
    if (o.threads > 1) omp_set_num_threads(o.threads);
#endif
    return Exec::parallel;
}

// inclusive "a..b" or single "a"
std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    int a = std::stoi(s.substr(0, pos));
    int b = std::stoi(s.substr(pos + 2));
    if (a > b) throw invalid_input("empty range " + s);
    return {a, b};
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : s) {
        if (ch == ' ' || ch == ';') {
            if (!cur.empty()) toks.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
}

// "all" | "v=2,1" | "rep=1,0,1,0,1" | "lead=0,0 end=1,1"
std::vector<std::size_t> resolve_class(const std::string& spec, const Prescription& p,
                                       const GroupStructure& gs) {
    if (spec == "all") {
        std::vector<std::size_t> all(static_cast<std::size_t>(gs.order()));
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }
    std::optional<ExponentVector> v;
    std::optional<std::string> rep;
    std::optional<std::vector<std::int64_t>> lead, end;
    for (const auto& tok : split_tokens(spec)) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw invalid_input("bad class spec token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "v") {
            auto digits = parse_digit_list(val);
            v = ExponentVector(digits.begin(), digits.end());
        } else if (key == "rep") {
            rep = val;
        } else if (key == "lead") {
            lead = parse_digit_list(val);
        } else if (key == "end") {
            end = parse_digit_list(val);
        } else {
            throw invalid_input("unknown class spec key: " + key);
        }
    }
    int forms = (v ? 1 : 0) + (rep ? 1 : 0) + ((lead || end) ? 1 : 0);
    if (forms != 1) throw invalid_input("class spec must use exactly one of v=, rep=, lead=/end=");
    if (v) return {gs.linear_index(*v)};
    if (rep) {
        auto cls = class_of(p, poly_parse(p.field, *rep));
        if (!cls) throw invalid_input("polynomial with zero constant term has no class");
        return {gs.index_of(*cls)};
    }
    if (!lead) throw invalid_input("class spec needs lead= coefficients");
    std::vector<Fe> leading;
    for (auto d : *lead) leading.push_back(p.field.fe(d));
    std::optional<std::vector<Fe>> ending;
    if (end) {
        ending.emplace();
        for (auto d : *end) ending->push_back(p.field.fe(d));
    }
    return {gs.index_of(prescribe_to_class(p, leading, ending))};
}

std::string exps_to_string(const ExponentVector& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s.push_back(sep);
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_group(const InstanceOpts& o, std::ostream& out) {
    Prescription p = make_prescription(o);
    GroupStructure gs = decompose(p, o.max_group_order);
    if (o.format == "json") {
        out << group_to_json(gs).dump(2) << "\n";
        return 0;
    }
    out << "class group of " << gs.prescription().field.to_spec() << " type "
        << (p.kind == Kind::I ? "I" : "II") << " ell=" << p.ell;
    if (p.kind == Kind::I) out << " t=" << p.t;
    out << "\n|E| = " << gs.order() << ", R = " << gs.root_order() << "\n";
    for (std::size_t i = 0; i < gs.generators().size(); ++i)
        out << "  factor C_" << gs.orders()[i] << "  generator "
            << poly_to_string(gs.generators()[i].rep) << "\n";
    return 0;
}

int cmd_count(const InstanceOpts& o, char which, const std::string& range,
              const std::string& class_spec, std::ostream& out) {
    Prescription p = make_prescription(o);
    GroupStructure gs = decompose(p, o.max_group_order);
    Counter counter(p, gs);
    Exec exec = exec_of(o);
    auto [lo, hi] = parse_range(range);
    if (lo < 1) throw invalid_input("degrees start at 1");
    std::vector<std::size_t> classes = resolve_class(class_spec, p, gs);

    struct Row {
        int n;
        std::size_t cls;
        Int value;
    };
    std::vector<Row> rows;
    for (int n = lo; n <= hi; ++n) {
        for (std::size_t c : classes) {
            Int val = (which == 'N') ? counter.n_of(gs.exponents_at(c), n, exec)
                                     : counter.i_of(gs.exponents_at(c), n, exec);
            rows.push_back({n, c, std::move(val)});
        }
    }
    if (o.format == "json") {
        nlohmann::json jrows = nlohmann::json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"n", r.n},
                             {"exponents", gs.exponents_at(r.cls)},
                             {"rep", poly_to_string(gs.rep_at(r.cls).rep)},
                             {"value", r.value.get_str()}});
        }
        out << nlohmann::json{{"instance", group_to_json(gs)},
                              {"kind", std::string(1, which)},
                              {"rows", jrows}}
                   .dump(2)
            << "\n";
    } else if (o.format == "csv") {
        out << "n,class,rep,value\n";
        for (const auto& r : rows)
            out << r.n << "," << exps_to_string(gs.exponents_at(r.cls), ';') << ",\""
                << poly_to_string(gs.rep_at(r.cls).rep) << "\"," << r.value.get_str() << "\n";
    } else {
        for (const auto& r : rows)
            out << which << "_" << r.n << "(" << exps_to_string(gs.exponents_at(r.cls), ',')
                << " | " << poly_to_string(gs.rep_at(r.cls).rep) << ") = " << r.value.get_str()
                << "\n";
    }
    return 0;
}

int cmd_zeta(const InstanceOpts& o, std::ostream& out) {
    Prescription p = make_prescription(o);
    GroupStructure gs = decompose(p, o.max_group_order);
    Counter counter(p, gs);
    ZetaData z = counter.zeta_numerators();
    if (o.format == "json" || o.format == "csv") {
        out << zeta_to_json(p, gs, z, counter.ctx()).dump(2) << "\n";
        return 0;
    }
    out << "R = " << counter.ctx().R() << ", tau = " << p.tau() << "\n";
    out << "trivial factor: num ";
    for (std::size_t i = 0; i < z.trivial_num.c.size(); ++i)
        out << (i ? "," : "") << z.trivial_num.c[i].get_str();
    out << "  den ";
    for (std::size_t i = 0; i < z.trivial_den.c.size(); ++i)
        out << (i ? "," : "") << z.trivial_den.c[i].get_str();
    out << "\n";
    for (const auto& [j, P] : z.numerators) {
        out << "P[" << exps_to_string(j, ',') << "]:";
        for (const CycloNum& c : P.c) {
            out << " (";
            for (std::size_t i = 0; i < c.c.size(); ++i) out << (i ? "," : "") << c.c[i].get_str();
            out << ")";
        }
        out << "\n";
    }
    return 0;
}

int cmd_verify(const InstanceOpts& o, const std::string& nrange, const std::string& drange,
               std::ostream& out, std::ostream& err) {
    Prescription p = make_prescription(o);
    GroupStructure gs = decompose(p, o.max_group_order);
    Counter counter(p, gs);
    int n_max = nrange.empty() ? 0 : parse_range(nrange).second;
    int d_max = drange.empty() ? 0 : parse_range(drange).second;
    OracleReport rep = verify_counts(p, gs, counter, n_max, d_max, Int(o.budget), exec_of(o));
    if (o.format == "json") {
        out << report_to_json(rep).dump(2) << "\n";
    } else {
        out << rep.instance << ": " << rep.checks.size() << " checks, "
            << (rep.pass ? "PASS" : "FAIL") << " (" << rep.elapsed_seconds << " s)\n";
    }
    if (!rep.pass) {
        err << rep.first_mismatch << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counts of monic irreducible polynomials with prescribed coefficients"};
    app.require_subcommand(1);

    InstanceOpts go, co, zo, vo;
    std::string which, nrange, drange, class_spec = "all";
    std::string v_nrange, v_drange;

    CLI::App* g = app.add_subcommand("group", "class-group structure");
    add_instance_flags(g, go, false);

    CLI::App* c = app.add_subcommand("count", "N_n or I_d counts");
    c->add_option("which", which, "N (element counts) or I (irreducible counts)")
        ->required()
        ->check(CLI::IsMember({"N", "I"}));
    add_instance_flags(c, co, false);
    c->add_option("--n", nrange, "degree range a..b for N");
    c->add_option("--d", drange, "degree range a..b for I");
    c->add_option("--class", class_spec, "class: all | v=.. | rep=.. | lead=.. [end=..]");

    CLI::App* z = app.add_subcommand("zeta", "zeta numerator polynomials");
    add_instance_flags(z, zo, false);

    CLI::App* v = app.add_subcommand("verify", "cross-check pipeline against brute force");
    add_instance_flags(v, vo, true);
    v->add_option("--n", v_nrange, "check N up to this n");
    v->add_option("--d", v_drange, "check I up to this d");

    std::vector<const char*> argv{"prescount"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (g->parsed()) return cmd_group(go, out);
        if (c->parsed()) {
            char kind = which == "N" ? 'N' : 'I';
            const std::string& range = kind == 'N' ? nrange : drange;
            if (range.empty())
                throw invalid_input(kind == 'N' ? "count N requires --n" : "count I requires --d");
            return cmd_count(co, kind, range, class_spec, out);
        }
        if (z->parsed()) return cmd_zeta(zo, out);
        if (v->parsed()) return cmd_verify(vo, v_nrange, v_drange, out, err);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace prescount
