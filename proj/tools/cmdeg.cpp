// cmdeg: command-line front end for the CM torsion-degree library.
//
// Subcommands
//   degree       least degree of an (M, N) torsion pair over K(f) or Q(f)
//   isogeny      rational cyclic-isogeny criteria and per-prime depth (m, M)
//   orbits       exhaustive Cartan orbit report (the enumeration oracle)
//   dual         dual-isogeny structure on one torsion module
//   classnumber  reduced-form class number h(delta)
//   table        batch degree table with content-addressed caching
//   verify       closed-form-vs-oracle sweeps; exit 1 on any mismatch
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap exceeded,
// 4 I/O failure. Unbounded quantities serialize as the string "inf".

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cmdeg/cartan.hpp"
#include "cmdeg/checked.hpp"
#include "cmdeg/degrees.hpp"
#include "cmdeg/dual.hpp"
#include "cmdeg/isogeny.hpp"
#include "cmdeg/order.hpp"
#include "cmdeg/rational.hpp"
#include "cmdeg/table.hpp"
#include "cmdeg/verify.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

// File-system problems distinct from the library's domain errors; main()
// maps this to exit code 4.
class io_failure : public std::runtime_error {
public:
    explicit io_failure(const std::string& msg) : std::runtime_error(msg) {}
};

long long ll(std::int64_t v) { return static_cast<long long>(v); }

// Integer-flavoured replacement for kPositiveInt (whose diagnostic
// quotes floating-point bounds).
const CLI::Validator kPositiveInt{
    [](std::string& input) -> std::string {
        std::int64_t value = 0;
        if (!CLI::detail::lexical_cast(input, value) || value < 1) {
            return "expected a positive integer, got '" + input + "'";
        }
        return {};
    },
    "INT>0"};

// The order under discussion is given either as a total discriminant
// (--delta) or as a fundamental discriminant plus conductor (--delta-k --f).
struct OrderFlags {
    std::int64_t delta = 0;
    std::int64_t delta_k = 0;
    std::int64_t f = 1;
    CLI::Option* delta_opt = nullptr;
    CLI::Option* delta_k_opt = nullptr;

    void add_to(CLI::App& cmd) {
        delta_opt = cmd.add_option(
            "--delta", delta, "Total discriminant delta = f^2 * delta_k (negative)");
        delta_k_opt = cmd.add_option(
            "--delta-k", delta_k, "Fundamental discriminant of K (negative)");
        CLI::Option* f_opt =
            cmd.add_option("--f", f, "Conductor f >= 1 (together with --delta-k)")
                ->check(kPositiveInt);
        delta_opt->excludes(delta_k_opt);
        delta_opt->excludes(f_opt);
        f_opt->needs(delta_k_opt);
    }

    cmdeg::Order resolve() const {
        if (delta_opt->count() > 0) return cmdeg::order_from_delta(delta);
        if (delta_k_opt->count() > 0) return cmdeg::make_order(delta_k, f);
        throw cmdeg::invalid_input(
            "specify the order via --delta or via --delta-k [--f]");
    }
};

ordered_json order_echo(const cmdeg::Order& order) {
    return ordered_json{
        {"delta_k", order.delta_k}, {"f", order.f}, {"delta", order.delta}};
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// Clause id for the K(f)-side answer: which arm of the closed form decided.
const char* kf_clause(std::int64_t n) {
    return n <= 3 ? "kf-small-table" : "kf-orbit-product";
}

ordered_json depth_entry(const cmdeg::IsogenyDepth& depth) {
    ordered_json e;
    e["m"] = depth.m;
    if (depth.m_sup.unbounded)
        e["M"] = "inf";
    else
        e["M"] = depth.m_sup.value;
    return e;
}

// ---------------------------------------------------------------- degree --

struct DegreeArgs {
    OrderFlags order;
    std::int64_t m = 1;
    std::int64_t n = 1;
    std::string over = "both";
    bool human = false;
};

int run_degree(const DegreeArgs& args) {
    const cmdeg::Order order = args.order.resolve();
    struct Line {
        const char* over;
        cmdeg::DegreeAnswer answer;
        std::string clause;
    };
    std::vector<Line> lines;
    if (args.over != "qf") {
        const cmdeg::DegreeAnswer answer = cmdeg::t_kf(order, args.m, args.n);
        lines.push_back({"kf", answer, kf_clause(args.n)});
    }
    if (args.over != "kf") {
        const auto [answer, trace] = cmdeg::t_qf_full_traced(order, args.m, args.n);
        lines.push_back({"qf", answer, trace.case_id});
    }
    if (args.human) {
        std::printf("order: delta_k=%lld f=%lld delta=%lld   level: M=%lld N=%lld\n",
                    ll(order.delta_k), ll(order.f), ll(order.delta), ll(args.m),
                    ll(args.n));
        std::printf("%-5s %-9s %-24s %s\n", "over", "degree", "clause",
                    "multiples-closed");
        for (const Line& line : lines)
            std::printf("%-5s %-9lld %-24s %s\n", line.over, ll(line.answer.value),
                        line.clause.c_str(),
                        line.answer.multiples_closed ? "yes" : "no");
    } else {
        for (const Line& line : lines) {
            ordered_json j = order_echo(order);
            j["m_level"] = args.m;
            j["n_level"] = args.n;
            j["over"] = line.over;
            j["degree"] = line.answer.value;
            j["clause"] = line.clause;
            j["multiples_closed"] = line.answer.multiples_closed;
            emit(j);
        }
    }
    return 0;
}

// --------------------------------------------------------------- isogeny --

struct IsogenyArgs {
    OrderFlags order;
    std::int64_t n = 1;
    std::int64_t ell = 2;
    CLI::Option* n_opt = nullptr;
    CLI::Option* ell_opt = nullptr;
};

int run_isogeny(const IsogenyArgs& args) {
    const cmdeg::Order order = args.order.resolve();
    const bool has_n = args.n_opt->count() > 0;
    const bool has_ell = args.ell_opt->count() > 0;
    if (!has_n && !has_ell)
        throw cmdeg::invalid_input("isogeny: specify --n and/or --ell");
    if (has_n) {
        ordered_json j = order_echo(order);
        j["n_level"] = args.n;
        j["qf"] = cmdeg::qf_cyclic_isogeny_exists(order, args.n);
        // The ideal-theoretic decomposition is proved equivalent to the
        // numeric criterion for delta < -4 only; the two extra-unit orders
        // get a null there.
        if (order.delta < -4)
            j["structural"] = cmdeg::structural_isogeny_admissible(order, args.n);
        else
            j["structural"] = nullptr;
        try {
            j["kf"] = cmdeg::kf_cyclic_isogeny_exists(order, args.n);
        } catch (const cmdeg::unsupported_query&) {
            j["kf"] = "unsupported";
        }
        ordered_json depth = ordered_json::object();
        for (const auto& [p, e] : cmdeg::factorize(args.n)) {
            (void)e;
            depth[std::to_string(p)] = depth_entry(cmdeg::isogeny_depth(order, p));
        }
        j["depth"] = depth;
        emit(j);
    }
    if (has_ell) {
        ordered_json j = order_echo(order);
        j["ell"] = args.ell;
        const cmdeg::IsogenyDepth depth = cmdeg::isogeny_depth(order, args.ell);
        j["m"] = depth.m;
        if (depth.m_sup.unbounded)
            j["M"] = "inf";
        else
            j["M"] = depth.m_sup.value;
        emit(j);
    }
    return 0;
}

// ---------------------------------------------------------------- orbits --

struct OrbitsArgs {
    OrderFlags order;
    std::int64_t m = 1;
    std::int64_t n = 1;
};

int run_orbits(const OrbitsArgs& args) {
    const cmdeg::Order order = args.order.resolve();
    const cmdeg::OrbitReport report = cmdeg::pair_orbits(order, args.m, args.n);
    ordered_json j = order_echo(order);
    j["m_level"] = args.m;
    j["n_level"] = args.n;
    j["pair_count"] = report.pair_count;
    j["min_size"] = report.min_size;
    j["min_reduced_size"] = report.min_reduced_size;
    j["orbit_sizes"] = report.orbit_sizes;
    j["reduced_orbit_sizes"] = report.reduced_orbit_sizes;
    emit(j);
    return 0;
}

// ------------------------------------------------------------------ dual --

struct DualArgs {
    std::string kind;
    std::int64_t ell = 2;
    std::int64_t c = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t d = 0;
};

int run_dual(const DualArgs& args) {
    cmdeg::TorsionModuleSpec spec;
    ordered_json j{{"case", args.kind}, {"ell", args.ell}, {"c", args.c}};
    if (args.kind == "split") {
        spec = cmdeg::TorsionModuleSpec::split(args.ell, args.c, args.a, args.b);
        j["a"] = args.a;
        j["b"] = args.b;
    } else if (args.kind == "ramified") {
        spec = cmdeg::TorsionModuleSpec::ramified(args.ell, args.c, args.d);
        j["d"] = args.d;
    } else {
        spec = cmdeg::TorsionModuleSpec::inert(args.ell, args.c, args.b);
        j["b"] = args.b;
    }
    const cmdeg::AbelianPair module = cmdeg::module_structure(spec);
    const cmdeg::AbelianPair image = cmdeg::dual_image(spec);
    j["module"] = ordered_json::array({module.inv1, module.inv2});
    j["kernel"] = cmdeg::kernel_intersection(spec);
    j["image"] = ordered_json::array({image.inv1, image.inv2});
    emit(j);
    return 0;
}

// ----------------------------------------------------------- classnumber --

struct ClassNumberArgs {
    OrderFlags order;
    bool recount = false;
};

int run_classnumber(const ClassNumberArgs& args) {
    const cmdeg::Order order = args.order.resolve();
    ordered_json j = order_echo(order);
    j["class_number"] = cmdeg::class_number(order.delta);
    if (args.recount) j["recount"] = cmdeg::class_number_recount(order.delta);
    emit(j);
    return 0;
}

// ----------------------------------------------------------------- table --

struct TableArgs {
    cmdeg::TableConfig config;
    std::string out = "-";
    std::string cache_dir;
    bool no_cache = false;
};

int run_table(const TableArgs& args) {
    std::string cache_dir = args.cache_dir;
    if (cache_dir.empty()) {
        if (const char* env = std::getenv("CM_DEGREES_CACHE")) cache_dir = env;
    }
    const bool use_cache = !args.no_cache && !cache_dir.empty();

    std::string text;
    bool hit = false;
    if (use_cache) hit = cmdeg::cache_load(cache_dir, args.config, text);
    if (!hit) {
        text = cmdeg::render_rows(cmdeg::degree_table(args.config), args.config.csv);
        if (use_cache) {
            try {
                cmdeg::cache_store(cache_dir, args.config, text);
            } catch (const std::exception& e) {
                throw io_failure(std::string("table: ") + e.what());
            }
        }
    }

    if (args.out == "-") {
        std::cout << text << std::flush;
        if (!std::cout) throw io_failure("table: writing to stdout failed");
    } else {
        std::ofstream os(args.out, std::ios::binary | std::ios::trunc);
        if (!os) throw io_failure("table: cannot open output path " + args.out);
        os << text << std::flush;
        if (!os.good()) throw io_failure("table: write failed for " + args.out);
    }
    std::cerr << "table: " << (hit ? "cache hit" : "computed") << " ("
              << cmdeg::cache_file_name(args.config) << ")\n";
    return 0;
}

// ---------------------------------------------------------------- verify --

struct VerifyArgs {
    cmdeg::VerifyConfig config;
    bool quick = false;
    std::string out;
};

int run_verify_cmd(const VerifyArgs& args) {
    cmdeg::VerifyConfig config = args.config;
    if (args.quick) {
        config.max_abs_delta = 60;
        config.max_n = 12;
        config.oracle_cap = 8;
        config.triangle_abs_delta = 100;
        config.triangle_max_n = 50;
        config.depth_abs_delta = 150;
        config.qf_agreement_abs_delta = 150;
        config.recount_abs_delta = 1000;
        config.coincidence_abs_delta = 150;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<cmdeg::SuiteResult> results = cmdeg::run_verify(config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    std::int64_t failed_suites = 0;
    for (const cmdeg::SuiteResult& r : results) {
        std::printf("%-24s checked=%-7lld failed=%lld\n", r.name.c_str(),
                    ll(r.checked), ll(r.failed));
        if (!r.passed()) {
            ++failed_suites;
            if (!r.sample_failures.empty())
                std::printf("    counterexample: %s\n",
                            r.sample_failures.front().c_str());
        }
    }
    std::printf("verify: %zu suites, %lld failed, %.2fs\n", results.size(),
                ll(failed_suites), elapsed);

    if (!args.out.empty()) {
        std::ofstream os(args.out, std::ios::binary | std::ios::trunc);
        if (!os) throw io_failure("verify: cannot open output path " + args.out);
        for (const cmdeg::SuiteResult& r : results) {
            ordered_json j{{"suite", r.name},
                           {"checked", r.checked},
                           {"failed", r.failed},
                           {"samples", r.sample_failures}};
            os << j.dump() << "\n";
        }
        os.flush();
        if (!os.good()) throw io_failure("verify: write failed for " + args.out);
    }
    return failed_suites == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CM torsion degrees, Cartan orbits, and cyclic-isogeny criteria"};
    app.set_version_flag("--version", cmdeg::kLibraryVersion);
    app.set_config("--config", "",
                   "Key=value config file mirroring the flags ([subcommand] "
                   "sections for subcommand options)");
    app.require_subcommand(1);
    app.footer(
        "Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 cap "
        "exceeded, 4 I/O failure.");

    int rc = 0;

    DegreeArgs degree_args;
    CLI::App* degree = app.add_subcommand(
        "degree", "Least degree of a torsion pair of order (M, N), M | N");
    degree_args.order.add_to(*degree);
    degree->add_option("--m", degree_args.m, "Row level M (divides N)")
        ->check(kPositiveInt);
    degree->add_option("--n", degree_args.n, "Column level N >= 1")
        ->required()
        ->check(kPositiveInt);
    degree
        ->add_option("--over", degree_args.over,
                     "Base field: kf (CM field side), qf (rational side), both")
        ->check(CLI::IsMember({"kf", "qf", "both"}));
    degree->add_flag("--human", degree_args.human,
                     "Aligned text instead of JSON lines");
    degree->callback([&] { rc = run_degree(degree_args); });

    IsogenyArgs isogeny_args;
    CLI::App* isogeny = app.add_subcommand(
        "isogeny", "Cyclic N-isogeny criteria and per-prime depth pair (m, M)");
    isogeny_args.order.add_to(*isogeny);
    isogeny_args.n_opt =
        isogeny->add_option("--n", isogeny_args.n, "Cyclic isogeny degree N >= 1")
            ->check(kPositiveInt);
    isogeny_args.ell_opt =
        isogeny->add_option("--ell", isogeny_args.ell, "Prime for the depth pair")
            ->check(kPositiveInt);
    isogeny->callback([&] { rc = run_isogeny(isogeny_args); });

    OrbitsArgs orbits_args;
    CLI::App* orbits = app.add_subcommand(
        "orbits", "Exhaustive Cartan orbit report on (M, N)-pairs (the oracle)");
    orbits_args.order.add_to(*orbits);
    orbits->add_option("--m", orbits_args.m, "Row level M (divides N)")
        ->check(kPositiveInt);
    orbits->add_option("--n", orbits_args.n, "Column level N >= 1")
        ->required()
        ->check(kPositiveInt);
    orbits->callback([&] { rc = run_orbits(orbits_args); });

    DualArgs dual_args;
    CLI::App* dual = app.add_subcommand(
        "dual", "Dual-isogeny image of one torsion module, by invariant factors");
    dual->add_option("--case", dual_args.kind,
                     "Module shape: split (needs --a --b), ramified (needs "
                     "--d), inert (needs --b)")
        ->required()
        ->check(CLI::IsMember({"split", "ramified", "inert"}));
    dual->add_option("--ell", dual_args.ell, "Prime ell")
        ->check(kPositiveInt);
    dual->add_option("--c", dual_args.c,
                     "ord_ell of the source conductor (kernel degree ell^c)")
        ->check(CLI::NonNegativeNumber);
    dual->add_option("--a", dual_args.a, "Split: smaller exponent (0 <= a <= b)")
        ->check(CLI::NonNegativeNumber);
    dual->add_option("--b", dual_args.b, "Split/inert: larger exponent")
        ->check(CLI::NonNegativeNumber);
    dual->add_option("--d", dual_args.d, "Ramified: prime-ideal exponent")
        ->check(CLI::NonNegativeNumber);
    dual->callback([&] { rc = run_dual(dual_args); });

    ClassNumberArgs class_args;
    CLI::App* classnumber = app.add_subcommand(
        "classnumber", "Class number h(delta) by reduced-form count");
    class_args.order.add_to(*classnumber);
    classnumber->add_flag("--recount", class_args.recount,
                          "Also run the independent recount oracle");
    classnumber->callback([&] { rc = run_classnumber(class_args); });

    TableArgs table_args;
    CLI::App* table = app.add_subcommand(
        "table", "Degree table over a (delta, M, N) grid, cached by config hash");
    table
        ->add_option("--max-abs-delta", table_args.config.max_abs_delta,
                     "Orders with |delta| up to this bound")
        ->check(kPositiveInt);
    table
        ->add_option("--max-n", table_args.config.max_n,
                     "Levels (M, N) with M | N <= this bound")
        ->check(kPositiveInt);
    table->add_flag("--csv", table_args.config.csv,
                    "CSV with header (default: JSON lines)");
    table
        ->add_option("--workers", table_args.config.workers,
                     "Worker threads (never affects the bytes)")
        ->check(CLI::Range(1, 64));
    table->add_option("--out", table_args.out, "Output path, or - for stdout");
    table->add_option("--cache-dir", table_args.cache_dir,
                      "Cache directory (default: $CM_DEGREES_CACHE)");
    table->add_flag("--no-cache", table_args.no_cache,
                    "Skip cache lookup and store");
    table->callback([&] { rc = run_table(table_args); });

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run every closed-form-vs-oracle sweep below the caps");
    verify
        ->add_option("--max-abs-delta", verify_args.config.max_abs_delta,
                     "Orbit-bank orders with |delta| up to this bound")
        ->check(kPositiveInt);
    verify
        ->add_option("--max-n", verify_args.config.max_n,
                     "Orbit-bank levels up to this bound")
        ->check(kPositiveInt);
    verify
        ->add_option("--oracle-cap", verify_args.config.oracle_cap,
                     "Hard cap on enumeration level (<= 64)")
        ->check(CLI::Range(static_cast<std::int64_t>(1),
                           cmdeg::limits::max_n_oracle));
    verify
        ->add_option("--workers", verify_args.config.workers, "Worker threads")
        ->check(CLI::Range(1, 64));
    CLI::Option* quick_opt = verify->add_flag(
        "--quick", verify_args.quick, "Reduced bounds (oracle cap 8) for a fast pass");
    quick_opt->excludes("--max-abs-delta")
        ->excludes("--max-n")
        ->excludes("--oracle-cap");
    verify->add_option("--out", verify_args.out,
                       "Also write per-suite JSON lines to this path");
    verify
        ->add_flag("--inject-fault", verify_args.config.inject_fault,
                   "Perturb one closed form to exercise the failure path")
        ->group("");  // test-harness hook; hidden from help
    verify->callback([&] { rc = run_verify_cmd(verify_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cmdeg::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cmdeg::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cmdeg::arithmetic_overflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cmdeg::unsupported_query& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
