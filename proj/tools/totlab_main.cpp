#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "totlab/folio/check.hpp"
#include "totlab/folio/parse.hpp"
#include "totlab/ineq.hpp"
#include "totlab/io.hpp"
#include "totlab/kernels.hpp"
#include "totlab/models.hpp"
#include "totlab/pgood.hpp"
#include "totlab/primes.hpp"

using namespace totlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "plain";  // plain | json | csv
    std::string cache_path;
    std::uint64_t seed = 1;
    std::uint64_t budget = 20000;
    std::uint64_t samples = 1000;
    std::size_t pool = 8;
    int degree_bound = 6;
    int jobs = 1;
};

std::string cache_path_or_env(const Options& opt) {
    if (!opt.cache_path.empty()) return opt.cache_path;
    if (const char* env = std::getenv("TOTLAB_CACHE")) return env;
    return {};
}

void emit_json(const io::Json& j) { std::cout << j.dump(2) << "\n"; }

Nat parse_nat(const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, "expected a number");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::parse_error, "expected a number: " + text);
    }
    return Nat(text);
}

// "x=5; y=X+2" -> pairs
std::vector<std::pair<std::string, std::string>> parse_bindings(const std::string& text) {
    std::vector<std::pair<std::string, std::string>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        auto trim = [](std::string& s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        };
        trim(item);
        if (item.empty()) continue;
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "binding needs var=value: " + item);
        std::string var = item.substr(0, eq), val = item.substr(eq + 1);
        trim(var);
        trim(val);
        if (var.empty() || val.empty()) fail(Errc::parse_error, "binding needs var=value: " + item);
        out.emplace_back(std::move(var), std::move(val));
    }
    return out;
}

std::string product_str(const std::string& a, const std::string& b) {
    auto wrap = [](const std::string& s) {
        return s.find(' ') == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(a) + " * " + wrap(b);
}

// ---- pgood ----------------------------------------------------------------

int cmd_pgood_check(const Options& opt, const std::string& n_text, const std::string& p_text) {
    Nat n = parse_nat(n_text);
    pgood::PGoodReport report =
        p_text.empty() ? pgood::all_totatives_prime(n) : pgood::is_p_good(n, parse_nat(p_text));
    if (opt.format == "json") emit_json(io::pgood_json(report));
    else std::cout << io::pgood_line(report) << "\n";
    return kExitOk;
}

int cmd_pgood_enumerate(const Options& opt, const std::string& p_text, const std::string& limit_text) {
    Nat p = parse_nat(p_text);
    auto values = pgood::enumerate_p_good(p, parse_nat(limit_text));
    if (opt.format == "json") {
        io::Json j;
        j["p"] = to_string(p);
        j["limit"] = limit_text;
        j["values"] = io::Json::array();
        for (const auto& v : values) j["values"].push_back(to_string(v));
        emit_json(j);
    } else {
        for (const auto& v : values) std::cout << to_string(v) << "\n";
    }
    return kExitOk;
}

int cmd_pgood_largest(const Options& opt, const std::string& p_text) {
    Nat p = parse_nat(p_text);
    Nat best = pgood::largest_p_good(p);
    if (opt.format == "json") {
        io::Json j;
        j["p"] = to_string(p);
        j["largest"] = to_string(best);
        emit_json(j);
    } else {
        std::cout << to_string(best) << "\n";
    }
    return kExitOk;
}

int cmd_pgood_bounds(const Options& opt, const std::string& p_text) {
    Nat p = parse_nat(p_text);
    Nat weak = pgood::weak_bound(p);
    std::optional<Nat> strong;
    if (p > 7) strong = pgood::strong_bound(p);
    if (opt.format == "json") {
        io::Json j;
        j["p"] = to_string(p);
        j["weak_bound"] = to_string(weak);
        j["strong_bound"] = strong ? io::Json(to_string(*strong)) : io::Json(nullptr);
        emit_json(j);
    } else {
        std::cout << "weak_bound=" << to_string(weak);
        if (strong) std::cout << " strong_bound=" << to_string(*strong);
        std::cout << "\n";
    }
    return kExitOk;
}

// ---- ineq -----------------------------------------------------------------

int cmd_ineq_scan(const Options& opt, const std::string& which_text, std::uint64_t limit) {
    auto which = ineq::which_from_name(which_text);
    auto report = ineq::scan(which, limit, opt.jobs);
    if (opt.format == "json") emit_json(io::scan_json(report));
    else if (opt.format == "csv") std::cout << io::scan_csv(report);
    else std::cout << io::scan_plain(report);
    return report.failures.empty() ? kExitOk : kExitCounterexample;
}

int cmd_ineq_check(const Options& opt, const std::string& which_text, const std::string& q_text,
                   std::uint64_t k) {
    auto which = ineq::which_from_name(which_text);
    bool ok = false;
    std::string instance;
    switch (which) {
        case ineq::Which::a19: {
            Nat q = parse_nat(q_text);
            if (!nt::is_prime(q)) fail(Errc::not_prime, "a19 instance needs a prime q");
            Nat p = nt::predecessor_prime(q);
            Nat r = nt::predecessor_prime(p);
            ok = ineq::check_a19(ineq::Triple{r, p, q});
            instance = "(" + to_string(r) + ", " + to_string(p) + ", " + to_string(q) + ")";
            break;
        }
        case ineq::Which::eq4:
            ok = ineq::check_eq4(parse_nat(q_text));
            instance = q_text;
            break;
        case ineq::Which::chebyshev:
            ok = ineq::check_chebyshev(parse_nat(q_text));
            instance = q_text;
            break;
        case ineq::Which::bonse:
            ok = ineq::check_bonse(k);
            instance = "k=" + std::to_string(k);
            break;
    }
    if (opt.format == "json") {
        io::Json j;
        j["which"] = which_text;
        j["instance"] = instance;
        j["holds"] = ok;
        emit_json(j);
    } else {
        std::cout << which_text << " " << instance << " " << (ok ? "holds" : "VIOLATED") << "\n";
    }
    return ok ? kExitOk : kExitCounterexample;
}

// ---- model ----------------------------------------------------------------

int cmd_model_zx(const Options& opt, const std::string& op, const std::vector<std::string>& args) {
    poly::IrredOptions irred{opt.degree_bound};
    auto need = [&](std::size_t n) {
        if (args.size() != n) fail(Errc::bad_format, op + " expects " + std::to_string(n) + " polynomial argument(s)");
    };
    auto out_poly = [&](const poly::IntPoly& f) {
        if (opt.format == "json") {
            io::Json j;
            j["model"] = "zx";
            j["op"] = op;
            j["args"] = args;
            j["result"] = f.str();
            emit_json(j);
        } else {
            std::cout << f.str() << "\n";
        }
    };
    if (op == "irreducible") {
        need(1);
        auto f = poly::IntPoly::parse(args[0]);
        bool irr = poly::is_irreducible_int(f, irred);
        std::string witness;
        if (!irr) {
            auto split = poly::factor_split_int(f, irred);
            if (split) witness = product_str(split->a.str(), split->b.str());
        }
        if (opt.format == "json") {
            io::Json j;
            j["model"] = "zx";
            j["op"] = op;
            j["input"] = f.str();
            j["irreducible"] = irr;
            j["witness"] = witness.empty() ? io::Json(nullptr) : io::Json(witness);
            emit_json(j);
        } else {
            std::cout << (irr ? "irreducible" : "composite") << (witness.empty() ? "" : " witness = " + witness)
                      << "\n";
        }
        return kExitOk;
    }
    if (op == "lemma51") {
        need(1);
        auto f = poly::IntPoly::parse(args[0]);
        bool applies = poly::lemma51(f) == poly::Lemma51::applies_irreducible;
        if (opt.format == "json") {
            io::Json j;
            j["model"] = "zx";
            j["op"] = op;
            j["input"] = f.str();
            j["applies_irreducible"] = applies;
            emit_json(j);
        } else {
            std::cout << (applies ? "applies_irreducible" : "not_applicable") << "\n";
        }
        return kExitOk;
    }
    if (op == "successor") {
        need(1);
        out_poly(poly::successor_prime_int(poly::IntPoly::parse(args[0]), irred));
        return kExitOk;
    }
    if (op == "predecessor") {
        need(1);
        out_poly(poly::predecessor_prime_int(poly::IntPoly::parse(args[0]), irred));
        return kExitOk;
    }
    if (op == "add" || op == "mul" || op == "monus") {
        need(2);
        auto a = poly::IntPoly::parse(args[0]), b = poly::IntPoly::parse(args[1]);
        out_poly(op == "add" ? a + b : op == "mul" ? a * b : a.monus(b));
        return kExitOk;
    }
    if (op == "compare") {
        need(2);
        auto c = poly::IntPoly::parse(args[0]).compare(poly::IntPoly::parse(args[1]));
        std::cout << (c == poly::Cmp::less ? "less" : c == poly::Cmp::equal ? "equal" : "greater") << "\n";
        return kExitOk;
    }
    if (op == "floor-div") {
        need(2);
        auto k = poly::floor_div_int(poly::IntPoly::parse(args[0]), poly::IntPoly::parse(args[1]));
        if (!k) {
            std::cout << "NoFloor\n";
            return kExitOk;
        }
        out_poly(*k);
        return kExitOk;
    }
    if (op == "strong-bound") {
        need(1);
        out_poly(poly::strong_bound_int(poly::IntPoly::parse(args[0]), irred));
        return kExitOk;
    }
    if (op == "a18-bigger") {
        need(2);
        out_poly(poly::a18_bigger_prime(poly::IntPoly::parse(args[0]), poly::IntPoly::parse(args[1]), irred));
        return kExitOk;
    }
    if (op == "a19-check") {
        need(1);
        bool ok = poly::a19_check_int(poly::IntPoly::parse(args[0]), irred);
        std::cout << (ok ? "holds" : "VIOLATED") << "\n";
        return ok ? kExitOk : kExitCounterexample;
    }
    fail(Errc::bad_format, "unknown zx op: " + op);
}

int cmd_model_qz(const Options& opt, const std::string& op, const std::vector<std::string>& args) {
    poly::IrredOptions irred{opt.degree_bound};
    auto need = [&](std::size_t n) {
        if (args.size() != n) fail(Errc::bad_format, op + " expects " + std::to_string(n) + " polynomial argument(s)");
    };
    auto out_poly = [&](const poly::QZPoly& f) {
        if (opt.format == "json") {
            io::Json j;
            j["model"] = "qz";
            j["op"] = op;
            j["args"] = args;
            j["result"] = f.str();
            emit_json(j);
        } else {
            std::cout << f.str() << "\n";
        }
    };
    if (op == "irreducible") {
        need(1);
        auto f = poly::QZPoly::parse(args[0]);
        auto r = poly::is_irreducible_qz(f, irred);
        std::string witness;
        if (r.witness) witness = product_str(r.witness->first.str(), r.witness->second.str());
        if (opt.format == "json") {
            io::Json j;
            j["model"] = "qz";
            j["op"] = op;
            j["input"] = f.str();
            j["irreducible"] = r.irreducible;
            j["witness"] = witness.empty() ? io::Json(nullptr) : io::Json(witness);
            emit_json(j);
        } else {
            std::cout << (r.irreducible ? "irreducible" : "composite")
                      << (witness.empty() ? "" : " witness = " + witness) << "\n";
        }
        return kExitOk;
    }
    if (op == "prime-divisor") {
        need(1);
        out_poly(poly::prime_divisor_qz(poly::QZPoly::parse(args[0]), irred));
        return kExitOk;
    }
    if (op == "between") {
        need(2);
        out_poly(poly::between_prime_qz(poly::QZPoly::parse(args[0]), poly::QZPoly::parse(args[1])));
        return kExitOk;
    }
    if (op == "add" || op == "mul" || op == "monus") {
        need(2);
        auto a = poly::QZPoly::parse(args[0]), b = poly::QZPoly::parse(args[1]);
        out_poly(op == "add" ? a + b : op == "mul" ? a * b : a.monus(b));
        return kExitOk;
    }
    if (op == "compare") {
        need(2);
        auto c = poly::QZPoly::parse(args[0]).compare(poly::QZPoly::parse(args[1]));
        std::cout << (c == poly::Cmp::less ? "less" : c == poly::Cmp::equal ? "equal" : "greater") << "\n";
        return kExitOk;
    }
    fail(Errc::bad_format, "unknown qz op: " + op);
}

// ---- formula ----------------------------------------------------------------

template <folio::Structure S>
int run_formula_eval(const S& s, const Options& opt, const std::string& text, const std::string& env_text) {
    folio::EvalOptions<typename S::Value> eopts;
    eopts.pool_size = opt.pool;
    eopts.budget = opt.budget;
    eopts.seed = opt.seed;
    folio::Env<typename S::Value> env;
    for (const auto& [var, val] : parse_bindings(env_text)) {
        if constexpr (std::is_same_v<typename S::Value, Nat>) env.emplace_back(var, parse_nat(val));
        else if constexpr (std::is_same_v<typename S::Value, poly::IntPoly>) env.emplace_back(var, poly::IntPoly::parse(val));
        else env.emplace_back(var, poly::QZPoly::parse(val));
    }
    auto f = folio::parse(text);
    auto r = folio::eval_bounded(f, s, env, eopts);
    if (opt.format == "json") {
        io::Json j;
        j["structure"] = s.name();
        j["formula"] = folio::pretty(f);
        j["verdict"] = folio::tri_name(r.verdict);
        j["budget_exhausted"] = r.budget_exhausted;
        j["instantiations"] = r.instantiations;
        j["root_instance"] = r.root_instance ? io::Json(s.print(*r.root_instance)) : io::Json(nullptr);
        j["seed"] = opt.seed;
        emit_json(j);
    } else {
        std::cout << folio::tri_name(r.verdict);
        if (r.root_instance) std::cout << " (instance: " << s.print(*r.root_instance) << ")";
        std::cout << "\n";
    }
    return kExitOk;
}

template <folio::Structure S>
int run_check_structure(const S& s, const Options& opt, const std::string& axioms_text,
                        const std::string& guided_text) {
    folio::CheckOptions<typename S::Value> copts;
    copts.seed = opt.seed;
    copts.samples = opt.samples;
    copts.pool = opt.pool;
    copts.budget = opt.budget;
    copts.hooks = s.hooks();
    for (const auto& [var, val] : parse_bindings(guided_text)) {
        if constexpr (std::is_same_v<typename S::Value, Nat>) copts.guided[var] = {parse_nat(val)};
        else if constexpr (std::is_same_v<typename S::Value, poly::IntPoly>) copts.guided[var] = {poly::IntPoly::parse(val)};
        else copts.guided[var] = {poly::QZPoly::parse(val)};
    }
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= axioms_text.size() && !axioms_text.empty()) {
        std::size_t end = axioms_text.find(',', pos);
        if (end == std::string::npos) end = axioms_text.size();
        std::string name = axioms_text.substr(pos, end - pos);
        if (!name.empty()) names.push_back(name);
        pos = end + 1;
        if (end == axioms_text.size()) break;
    }
    if (names.empty()) fail(Errc::bad_format, "no axioms requested");
    auto report = folio::check_structure(s, names, copts);
    std::uint64_t counterexamples = 0;
    for (const auto& a : report.axioms) counterexamples += a.definite_false;
    if (opt.format == "json") {
        emit_json(io::structure_report_json(report));
    } else {
        for (const auto& a : report.axioms) {
            std::cout << a.name << ": " << folio::tri_name(a.verdict) << " (true=" << a.definite_true
                      << " false=" << a.definite_false << " unknown=" << a.undecided;
            if (!a.refutations.empty()) std::cout << " refutations=" << a.refutations.size();
            std::cout << ")\n";
        }
    }
    return counterexamples == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational lab for p-good numbers, prime inequalities, and weak-arithmetic models"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    Options opt;
    app.add_option("--format", opt.format, "output format: plain, json, csv")->capture_default_str();
    app.add_option("--cache", opt.cache_path, "prime cache file (overrides TOTLAB_CACHE)");
    app.add_option("--seed", opt.seed, "sampler seed")->capture_default_str();
    app.add_option("--budget", opt.budget, "quantifier instantiation budget")->capture_default_str();
    app.add_option("--samples", opt.samples, "outer samples for check-structure")->capture_default_str();
    app.add_option("--pool", opt.pool, "inner quantifier pool size")->capture_default_str();
    app.add_option("--degree-bound", opt.degree_bound, "exhaustive irreducibility degree budget")->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for scans")->capture_default_str();

    // pgood
    auto* pg = app.add_subcommand("pgood", "p-good predicates, enumeration, bounds");
    std::string n_text, p_text, limit_text;
    auto* pg_check = pg->add_subcommand("check", "test one n (omit --p for the classic predicate)");
    pg_check->add_option("--n", n_text, "the number to test")->required();
    pg_check->add_option("--p", p_text, "prime filter");
    auto* pg_enum = pg->add_subcommand("enumerate", "all p-good n up to a limit");
    pg_enum->add_option("--p", p_text, "prime filter")->required();
    pg_enum->add_option("--limit", limit_text, "inclusive upper bound")->required();
    auto* pg_largest = pg->add_subcommand("largest", "certified largest p-good number");
    pg_largest->add_option("--p", p_text, "prime filter")->required();
    auto* pg_bounds = pg->add_subcommand("bounds", "weak and strong closed-form bounds");
    pg_bounds->add_option("--p", p_text, "prime filter")->required();

    // ineq
    auto* iq = app.add_subcommand("ineq", "prime inequality checks and bulk scans");
    std::string which_text, q_text;
    std::uint64_t limit_u64 = 0, k_u64 = 0;
    auto* iq_scan = iq->add_subcommand("scan", "scan every instance up to a limit");
    iq_scan->add_option("--which", which_text, "a19, eq4, chebyshev, bonse")->required();
    iq_scan->add_option("--limit", limit_u64, "largest prime (or k for bonse)")->required();
    auto* iq_check = iq->add_subcommand("check", "check a single instance");
    iq_check->add_option("--which", which_text, "a19, eq4, chebyshev, bonse")->required();
    iq_check->add_option("--q", q_text, "the prime instance (a19/eq4/chebyshev)");
    iq_check->add_option("--k", k_u64, "the index (bonse)");

    // model
    auto* md = app.add_subcommand("model", "polynomial cone models");
    std::string op_text;
    std::vector<std::string> op_args;
    auto* md_zx = md->add_subcommand("zx", "positive cone of Z[X]");
    md_zx->add_option("op", op_text,
                      "irreducible|lemma51|successor|predecessor|add|mul|monus|compare|floor-div|strong-bound|a18-bigger|a19-check")
        ->required();
    md_zx->add_option("args", op_args, "polynomial arguments");
    auto* md_qz = md->add_subcommand("qz", "positive cone of Q_Z[X]");
    md_qz->add_option("op", op_text, "irreducible|prime-divisor|between|add|mul|monus|compare")->required();
    md_qz->add_option("args", op_args, "polynomial arguments");

    // formula
    auto* fo = app.add_subcommand("formula", "first-order formula tools");
    std::string text, structure_text = "n", env_text, axioms_text, guided_text;
    auto* fo_parse = fo->add_subcommand("parse", "parse and reprint a formula");
    fo_parse->add_option("--text", text, "formula text")->required();
    auto* fo_eval = fo->add_subcommand("eval", "bounded three-valued evaluation");
    fo_eval->add_option("--text", text, "formula text")->required();
    fo_eval->add_option("--structure", structure_text, "n, zx, qz")->capture_default_str();
    fo_eval->add_option("--env", env_text, "free-variable bindings, e.g. \"x=3; y=5\"");
    auto* fo_check = fo->add_subcommand("check-structure", "sample axioms over a structure");
    fo_check->add_option("--structure", structure_text, "n, zx, qz")->capture_default_str();
    fo_check->add_option("--axioms", axioms_text, "comma-separated catalog names")->required();
    fo_check->add_option("--guided", guided_text, "guided instantiations, e.g. \"n=X^3\"");

    // cache
    auto* ca = app.add_subcommand("cache", "prime table cache files");
    auto* ca_build = ca->add_subcommand("build", "sieve and save a prime cache");
    ca_build->add_option("--limit", limit_u64, "sieve limit")->required();
    auto* ca_info = ca->add_subcommand("info", "print cache header");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pg_check->parsed()) return cmd_pgood_check(opt, n_text, p_text);
        if (pg_enum->parsed()) return cmd_pgood_enumerate(opt, p_text, limit_text);
        if (pg_largest->parsed()) return cmd_pgood_largest(opt, p_text);
        if (pg_bounds->parsed()) return cmd_pgood_bounds(opt, p_text);
        if (iq_scan->parsed()) return cmd_ineq_scan(opt, which_text, limit_u64);
        if (iq_check->parsed()) return cmd_ineq_check(opt, which_text, q_text, k_u64);
        if (md_zx->parsed()) return cmd_model_zx(opt, op_text, op_args);
        if (md_qz->parsed()) return cmd_model_qz(opt, op_text, op_args);
        if (fo_parse->parsed()) {
            std::cout << folio::pretty(folio::parse(text)) << "\n";
            return kExitOk;
        }
        if (fo_eval->parsed()) {
            if (structure_text == "n") return run_formula_eval(folio::NatStructure{}, opt, text, env_text);
            if (structure_text == "zx") return run_formula_eval(folio::ZXStructure{}, opt, text, env_text);
            if (structure_text == "qz") return run_formula_eval(folio::QZXStructure{}, opt, text, env_text);
            fail(Errc::bad_format, "unknown structure: " + structure_text);
        }
        if (fo_check->parsed()) {
            if (structure_text == "n") return run_check_structure(folio::NatStructure{}, opt, axioms_text, guided_text);
            if (structure_text == "zx") return run_check_structure(folio::ZXStructure{}, opt, axioms_text, guided_text);
            if (structure_text == "qz") return run_check_structure(folio::QZXStructure{}, opt, axioms_text, guided_text);
            fail(Errc::bad_format, "unknown structure: " + structure_text);
        }
        if (ca_build->parsed()) {
            std::string path = cache_path_or_env(opt);
            if (path.empty()) fail(Errc::bad_format, "no cache path: pass --cache or set TOTLAB_CACHE");
            nt::PrimeCtx ctx(limit_u64);
            ctx.save(path);
            std::cout << "wrote " << ctx.count() << " primes (limit " << ctx.limit() << ") to " << path << "\n";
            return kExitOk;
        }
        if (ca_info->parsed()) {
            std::string path = cache_path_or_env(opt);
            if (path.empty()) fail(Errc::bad_format, "no cache path: pass --cache or set TOTLAB_CACHE");
            auto info = nt::cache_info(path);
            if (opt.format == "json") {
                io::Json j;
                j["version"] = info.version;
                j["limit"] = info.limit;
                j["count"] = info.count;
                j["largest"] = info.largest;
                emit_json(j);
            } else {
                std::cout << "version=" << info.version << " limit=" << info.limit << " count=" << info.count
                          << " largest=" << info.largest << "\n";
            }
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::certification_failed ? kExitCounterexample : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: missing subcommand\n";
    return kExitUsage;
}
