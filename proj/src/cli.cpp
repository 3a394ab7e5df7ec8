#include "parsep/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "parsep/bijection.hpp"
#include "parsep/classes.hpp"
#include "parsep/partition.hpp"
#include "parsep/qseries.hpp"

namespace parsep::cli {

namespace {

using json = nlohmann::json;

struct IntRange {
    Integer lo = 0;
    Integer hi = 0;
};

// "A..B" or a single value "A".
IntRange parse_range(const std::string& text, const std::string& flag) {
    auto to_int = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return static_cast<Integer>(v);
        } catch (const std::exception&) {
            throw ParseError("bad " + flag + " value '" + text + "', expected A..B or A");
        }
    };
    const auto dots = text.find("..");
    IntRange range;
    if (dots == std::string::npos) {
        range.lo = range.hi = to_int(text);
    } else {
        range.lo = to_int(text.substr(0, dots));
        range.hi = to_int(text.substr(dots + 2));
    }
    if (range.lo > range.hi) throw InvalidParameter(flag + " range " + text + " is empty");
    return range;
}

std::string range_text(const IntRange& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

struct GlobalOptions {
    bool json = false;
    bool no_timing = false;
    bool verbose = false;
    int jobs = 1;
    std::uint64_t seed = 0;
    Integer max_n = 60;
    Integer max_order = 200;
};

struct RunReport {
    std::string command;
    json parameters = json::object();
    json results = json::object();
    bool pass = true;
    Integer elapsed_ms = 0;

    json to_json() const {
        return json{{"command", command},
                    {"parameters", parameters},
                    {"results", results},
                    {"pass", pass},
                    {"elapsed_ms", elapsed_ms}};
    }
};

void guard_n(Integer n_max, const GlobalOptions& opts) {
    if (n_max > opts.max_n)
        throw InvalidParameter("n = " + std::to_string(n_max) + " exceeds the enumeration ceiling " +
                               std::to_string(opts.max_n) + " (raise it with --max-n)");
}

void guard_order(Integer order, const GlobalOptions& opts) {
    if (order > opts.max_order)
        throw InvalidParameter("truncation order " + std::to_string(order) + " exceeds the ceiling " +
                               std::to_string(opts.max_order) + " (raise it with --max-T)");
    if (order < 0) throw InvalidParameter("truncation order must be >= 0");
}

// Applies fn to every item on up to `jobs` threads. Results keep input order;
// the first exception (by item index) is rethrown after all workers finish.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, int jobs, Fn fn) {
    using Out = decltype(fn(items.front()));
    std::vector<std::optional<Out>> slots(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i].emplace(fn(items[i]));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<std::size_t>(std::max(1, jobs));
    if (workers == 1 || items.size() < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < std::min(workers, items.size()); ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<Out> out;
    out.reserve(items.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

// ---------------------------------------------------------------------------
// count / list

struct ClassArgs {
    std::string n = "0";
    std::string kind;
    std::optional<Integer> p;
    std::optional<Integer> r;
};

ClassSpec build_spec(const ClassArgs& args) {
    const auto kind = parse_class_kind(args.kind);
    if (!kind) throw InvalidParameter("unknown class '" + args.kind + "' (expected D, O, A, B, AP, DR or MOD4)");
    auto need = [&](const std::optional<Integer>& v, const char* name) {
        if (!v) throw InvalidParameter("class " + args.kind + " requires --" + name);
        return *v;
    };
    switch (*kind) {
    case ClassKind::D:
        return ClassSpec::d(need(args.p, "p"), need(args.r, "r"));
    case ClassKind::O:
        return ClassSpec::o(need(args.p, "p"), need(args.r, "r"));
    case ClassKind::A:
        return ClassSpec::a(need(args.r, "r"));
    case ClassKind::B:
        return ClassSpec::b();
    case ClassKind::ApClass:
        return ClassSpec::ap(need(args.p, "p"));
    case ClassKind::DistinctResidueClass:
        return ClassSpec::distinct_residue(need(args.p, "p"));
    case ClassKind::ResiduePartsMod4:
        return ClassSpec::mod4(need(args.r, "r"));
    }
    throw InvalidParameter("unknown class");
}

json spec_json(const ClassSpec& spec) {
    json j{{"class", std::string(class_kind_name(spec.kind))}};
    switch (spec.kind) {
    case ClassKind::D:
    case ClassKind::O:
        j["p"] = spec.p;
        j["r"] = spec.r;
        break;
    case ClassKind::A:
    case ClassKind::ResiduePartsMod4:
        j["r"] = spec.r;
        break;
    case ClassKind::ApClass:
    case ClassKind::DistinctResidueClass:
        j["p"] = spec.p;
        break;
    case ClassKind::B:
        break;
    }
    return j;
}

int cmd_count(const ClassArgs& args, const GlobalOptions& opts, RunReport& report, std::ostream& text) {
    const ClassSpec spec = build_spec(args);
    const IntRange range = parse_range(args.n, "--n");
    if (range.lo < 0) throw InvalidParameter("n must be >= 0");
    guard_n(range.hi, opts);

    report.parameters = spec_json(spec);
    report.parameters["n"] = range_text(range);

    std::vector<Integer> ns;
    for (Integer n = range.lo; n <= range.hi; ++n) ns.push_back(n);
    const auto counts = parallel_map(ns, opts.jobs, [&](Integer n) { return count_class(n, spec); });

    json rows = json::array();
    for (std::size_t i = 0; i < ns.size(); ++i) {
        rows.push_back({{"n", ns[i]}, {"count", counts[i]}});
        if (ns.size() == 1)
            text << counts[i] << '\n';
        else
            text << ns[i] << ':' << counts[i] << '\n';
    }
    report.results["counts"] = std::move(rows);
    return kPass;
}

int cmd_list(const ClassArgs& args, const GlobalOptions& opts, RunReport& report, std::ostream& text) {
    const ClassSpec spec = build_spec(args);
    const IntRange range = parse_range(args.n, "--n");
    if (range.lo != range.hi) throw InvalidParameter("list takes a single --n value");
    if (range.lo < 0) throw InvalidParameter("n must be >= 0");
    guard_n(range.lo, opts);

    report.parameters = spec_json(spec);
    report.parameters["n"] = range.lo;

    json members = json::array();
    for (const Partition& lam : list_class(range.lo, spec)) {
        text << to_literal(lam) << '\n';
        members.push_back(to_literal(lam));
    }
    report.results["count"] = members.size();
    report.results["members"] = std::move(members);
    return kPass;
}

// ---------------------------------------------------------------------------
// map

struct MapArgs {
    Integer p = 2;
    Integer r = 1;
    std::optional<std::string> forward;
    std::optional<std::string> inverse;
};

int cmd_map(const MapArgs& args, RunReport& report, std::ostream& text) {
    if (args.forward.has_value() == args.inverse.has_value())
        throw InvalidParameter("map needs exactly one of --forward or --inverse");
    check_modulus_residue(args.p, args.r);
    const bool forward = args.forward.has_value();
    const Partition input = parse_partition(forward ? *args.forward : *args.inverse);

    report.parameters = {{"p", args.p}, {"r", args.r}, {"direction", forward ? "forward" : "inverse"},
                         {"input", to_literal(input)}};

    Partition image;
    std::optional<Partition> stairs;
    if (forward) {
        image = phi(input, args.p, args.r);
    } else {
        if (!is_in_D(input, args.p, args.r)) psi(input, args.p, args.r);  // throws NotInClass
        InverseTrace trace = psi_traced(input, args.p, args.r);
        image = std::move(trace.image);
        stairs = std::move(trace.staircase);
    }

    report.pass = image.weight() == input.weight();
    report.results = {{"image", to_literal(image)}, {"input_weight", input.weight()},
                      {"image_weight", image.weight()}};
    text << to_literal(image) << '\n';
    text << "weight: " << image.weight() << '\n';
    if (stairs) {
        report.results["staircase"] = to_literal(*stairs);
        text << "staircase: " << to_literal(*stairs) << '\n';
    }
    if (!report.pass) text << "weight changed: " << input.weight() << " -> " << image.weight() << '\n';
    return report.pass ? kPass : kVerificationFailure;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string theorem;
    std::string n = "0..30";
    std::string p = "2..5";
    std::optional<std::string> r;
};

struct TupleOutcome {
    json row;
    bool ok = true;
    std::string reason;
};

int cmd_verify(const VerifyArgs& args, const GlobalOptions& opts, RunReport& report, std::ostream& text) {
    const IntRange n_range = parse_range(args.n, "--n");
    if (n_range.lo < 0) throw InvalidParameter("n must be >= 0");
    guard_n(n_range.hi, opts);
    const std::optional<IntRange> r_range =
        args.r ? std::optional<IntRange>(parse_range(*args.r, "--r")) : std::nullopt;
    auto r_allowed = [&](Integer r) { return !r_range || (r >= r_range->lo && r <= r_range->hi); };

    report.parameters = {{"theorem", args.theorem}, {"n", range_text(n_range)}};
    if (r_range) report.parameters["r"] = range_text(*r_range);

    // (n, p, r); unused coordinates are 0.
    std::vector<std::array<Integer, 3>> tuples;
    std::function<TupleOutcome(const std::array<Integer, 3>&)> check;

    if (args.theorem == "T2" || args.theorem == "COR") {
        const IntRange p_range = parse_range(args.p, "--p");
        if (p_range.lo < 2) throw InvalidParameter("p must be >= 2");
        report.parameters["p"] = range_text(p_range);
        for (Integer n = n_range.lo; n <= n_range.hi; ++n)
            for (Integer p = p_range.lo; p <= p_range.hi; ++p) {
                if (args.theorem == "COR") {
                    tuples.push_back({n, p, 0});
                    continue;
                }
                for (Integer r = 1; r < p; ++r)
                    if (r_allowed(r)) tuples.push_back({n, p, r});
            }
    } else if (args.theorem == "T3") {
        for (Integer n = n_range.lo; n <= n_range.hi; ++n)
            for (Integer r : {1, 3})
                if (r_allowed(r)) tuples.push_back({n, 0, r});
    } else if (args.theorem == "T4") {
        for (Integer n = n_range.lo; n <= n_range.hi; ++n) tuples.push_back({n, 0, 0});
    } else {
        throw InvalidParameter("unknown theorem '" + args.theorem + "' (expected T2, T3, T4 or COR)");
    }
    if (tuples.empty()) throw InvalidParameter("no valid (n, p, r) tuples in the requested ranges");

    if (args.theorem == "T2") {
        check = [](const std::array<Integer, 3>& t) {
            const BijectionReport b = verify_bijection(t[0], t[1], t[2]);
            TupleOutcome out;
            out.ok = b.class_size == b.d_class_size && b.ok();
            out.row = {{"n", t[0]}, {"p", t[1]}, {"r", t[2]}, {"O", b.class_size}, {"D", b.d_class_size},
                       {"roundtrip_ok", b.roundtrip_ok}, {"image_equals_D_class", b.image_equals_D_class},
                       {"weight_preserved", b.weight_preserved}};
            if (b.first_failure) {
                out.reason = b.first_failure->reason + " at (" + to_literal(b.first_failure->partition) + ")";
            } else if (!out.ok) {
                out.reason = "O and D class sizes differ";
            }
            return out;
        };
    } else if (args.theorem == "T3") {
        check = [](const std::array<Integer, 3>& t) {
            const Integer a = count_class(t[0], ClassSpec::a(t[2]));
            const Integer m = count_class(t[0], ClassSpec::mod4(t[2]));
            return TupleOutcome{{{"n", t[0]}, {"r", t[2]}, {"A", a}, {"MOD4", m}}, a == m,
                                a == m ? "" : "A and MOD4 counts differ"};
        };
    } else if (args.theorem == "T4") {
        check = [](const std::array<Integer, 3>& t) {
            const SignedCount s = signed_count_B(t[0]);
            const Integer expected = is_pentagonal4(t[0]) ? 1 : 0;
            return TupleOutcome{{{"n", t[0]},
                                 {"even", s.even_count},
                                 {"odd", s.odd_count},
                                 {"difference", s.difference()},
                                 {"expected", expected}},
                                s.difference() == expected,
                                s.difference() == expected ? "" : "signed count differs from m(4m±1) indicator"};
        };
    } else {
        check = [](const std::array<Integer, 3>& t) {
            const Integer ap = count_class(t[0], ClassSpec::ap(t[1]));
            const Integer dr = count_class(t[0], ClassSpec::distinct_residue(t[1]));
            return TupleOutcome{{{"n", t[0]}, {"p", t[1]}, {"AP", ap}, {"DR", dr}}, ap == dr,
                                ap == dr ? "" : "AP and DR counts differ"};
        };
    }

    const auto outcomes = parallel_map(tuples, opts.jobs, check);

    json rows = json::array();
    json ones = json::array();
    const TupleOutcome* first_bad = nullptr;
    for (const TupleOutcome& o : outcomes) {
        rows.push_back(o.row);
        if (!o.ok && !first_bad) first_bad = &o;
        if (args.theorem == "T4" && o.row["difference"] == 1) ones.push_back(o.row["n"]);
        if (opts.verbose) {
            for (const auto& [key, value] : o.row.items()) text << key << '=' << value.dump() << ' ';
            text << (o.ok ? "ok" : "FAIL") << '\n';
        }
    }

    report.pass = first_bad == nullptr;
    report.results["tuples_checked"] = tuples.size();
    report.results["rows"] = std::move(rows);
    text << args.theorem << ": " << tuples.size() << " tuples checked\n";
    if (args.theorem == "T4") {
        text << "ones at:";
        for (std::size_t i = 0; i < ones.size(); ++i) text << (i ? "," : " ") << ones[i].get<Integer>();
        text << '\n';
        report.results["ones"] = std::move(ones);
    }
    if (first_bad) {
        json ce = first_bad->row;
        ce["reason"] = first_bad->reason;
        report.results["first_counterexample"] = ce;
        text << "FAIL: " << first_bad->row.dump() << ": " << first_bad->reason << '\n';
        return kVerificationFailure;
    }
    text << "PASS\n";
    return kPass;
}

// ---------------------------------------------------------------------------
// series / identity

struct SeriesArgs {
    std::string target;
    Integer order = 64;
    std::string a = "0";
    Integer r = 1;
    std::optional<std::string> side;
};

json coefficient_array(const QSeries& s) { return json(std::vector<Integer>(s.coefficients().begin(), s.coefficients().end())); }

int cmd_series(const SeriesArgs& args, const GlobalOptions& opts, RunReport& report, std::ostream& text) {
    guard_order(args.order, opts);
    report.parameters = {{"target", args.target}, {"T", args.order}};

    const std::string& t = args.target;
    std::string side;
    auto pick_side = [&](std::initializer_list<const char*> sides) {
        side = args.side.value_or(*sides.begin());
        if (std::none_of(sides.begin(), sides.end(), [&](const char* s) { return side == s; }))
            throw InvalidParameter("target " + t + " has no side '" + side + "'");
        report.parameters["side"] = side;
    };

    QSeries s;
    if (t == "pfn") {
        s = partition_function_series(args.order);
    } else if (t == "lebesgue") {
        pick_side({"lhs", "rhs"});
        const Monomial a = parse_monomial(args.a);
        report.parameters["a"] = to_string(a);
        s = side == "lhs" ? lebesgue_lhs(a, args.order) : lebesgue_rhs(a, args.order);
    } else if (t == "slater") {
        pick_side({"rhs", "printed", "corrected"});
        s = side == "rhs" ? slater_rhs(args.order)
            : side == "printed" ? slater_printed_lhs(args.order)
                                : slater_corrected_lhs(args.order);
    } else if (t == "genA") {
        pick_side({"sum", "product"});
        report.parameters["r"] = args.r;
        s = side == "sum" ? gen_A(args.r, args.order) : gen_A_product(args.r, args.order);
    } else if (t == "genB") {
        s = gen_B_signed(args.order);
    } else if (t == "theta") {
        s = theta_4nn(args.order);
    } else {
        throw InvalidParameter("unknown series target '" + t + "'");
    }

    for (Integer e = 0; e <= s.order(); ++e) text << e << ':' << s.coefficient(e) << '\n';
    report.results["coefficients"] = coefficient_array(s);
    return kPass;
}

struct IdentityArgs {
    std::string id;
    Integer order = 64;
    std::string a = "0";
    std::optional<Integer> r;
};

json compare(const std::string& name, const QSeries& lhs, const QSeries& rhs, std::ostream& text) {
    const auto mm = first_mismatch(lhs, rhs);
    json j{{"name", name}, {"status", mm ? "FIRST-MISMATCH" : "PASS"}};
    text << name << ": ";
    if (mm) {
        j["exponent"] = mm->exponent;
        j["lhs"] = mm->lhs;
        j["rhs"] = mm->rhs;
        text << "FIRST-MISMATCH at " << mm->exponent << " (lhs " << mm->lhs << ", rhs " << mm->rhs << ")\n";
    } else {
        text << "PASS\n";
    }
    return j;
}

int cmd_identity(const IdentityArgs& args, const GlobalOptions& opts, RunReport& report, std::ostream& text) {
    guard_order(args.order, opts);
    const Integer T = args.order;
    report.parameters = {{"id", args.id}, {"T", T}};

    json checks = json::array();
    bool pass = true;
    auto gate = [&](json check) {
        if (check["status"] != "PASS") pass = false;
        checks.push_back(std::move(check));
    };
    // The enumeration leg is exhaustive, so it obeys the --max-n ceiling.
    auto enumeration_allowed = [&] {
        if (T <= opts.max_n) return true;
        text << "enumeration: SKIPPED (T above --max-n " << opts.max_n << ")\n";
        checks.push_back({{"name", "enumeration"}, {"status", "SKIPPED"}});
        return false;
    };

    if (args.id == "lebesgue") {
        const Monomial a = parse_monomial(args.a);
        report.parameters["a"] = to_string(a);
        gate(compare("lebesgue a=" + to_string(a), lebesgue_lhs(a, T), lebesgue_rhs(a, T), text));
    } else if (args.id == "slater") {
        const SlaterReport sr = slater_check(T);
        // The printed form is reported, not gated: its mismatch is the expected outcome.
        checks.push_back(compare("printed form", slater_printed_lhs(T), slater_rhs(T), text));
        gate(compare("corrected form", slater_corrected_lhs(T), slater_rhs(T), text));
        report.results["printed_first_mismatch"] =
            sr.printed_first_mismatch ? json(sr.printed_first_mismatch->exponent) : json(nullptr);
        report.results["corrected_ok"] = sr.corrected_ok();
    } else if (args.id == "genA") {
        std::vector<Integer> rs = args.r ? std::vector<Integer>{*args.r} : std::vector<Integer>{1, 3};
        const bool enumerate = enumeration_allowed();
        for (Integer r : rs) {
            const std::string tag = " r=" + std::to_string(r);
            const QSeries sum = gen_A(r, T);
            gate(compare("sum = product" + tag, sum, gen_A_product(r, T), text));
            if (enumerate) {
                gate(compare("sum = A enumeration" + tag, sum, class_gf_from_enumeration(ClassSpec::a(r), T), text));
                gate(compare("sum = MOD4 enumeration" + tag, sum, class_gf_from_enumeration(ClassSpec::mod4(r), T),
                             text));
            }
        }
    } else if (args.id == "genB") {
        const QSeries signed_sum = gen_B_signed(T);
        gate(compare("signed sum = theta", signed_sum, theta_4nn(T), text));
        if (enumeration_allowed())
            gate(compare("signed sum = signed enumeration", signed_sum, signed_B_gf_from_enumeration(T), text));
    } else if (args.id == "pfn") {
        const QSeries pfn = partition_function_series(T);
        if (enumeration_allowed()) {
            std::vector<Integer> counts;
            for (Integer n = 0; n <= T; ++n) {
                Integer c = 0;
                for_each_partition(n, [&](const Partition&) { ++c; });
                counts.push_back(c);
            }
            gate(compare("1/(q;q)_inf = enumeration", pfn, QSeries::from_coefficients(counts, T), text));
        }
    } else {
        throw InvalidParameter("unknown identity '" + args.id + "' (expected lebesgue, slater, genA, genB or pfn)");
    }

    report.results["checks"] = std::move(checks);
    report.pass = pass;
    return pass ? kPass : kVerificationFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"parsep"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parity-separated partition toolkit: enumeration, the O/D bijection, and q-series identity checks"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    app.add_flag("--json", opts.json, "Emit a JSON run report instead of text");
    app.add_flag("--no-timing", opts.no_timing, "Report elapsed_ms as 0 for byte-reproducible JSON");
    app.add_flag("-v,--verbose", opts.verbose, "Print one line per checked tuple");
    app.add_option("--jobs", opts.jobs, "Worker threads for sweeps")->check(CLI::Range(1, 1024));
    app.add_option("--seed", opts.seed, "Seed for sampled checks (default sweeps are exhaustive)");
    app.add_option("--max-n", opts.max_n, "Ceiling on n for exhaustive enumeration");
    app.add_option("--max-T", opts.max_order, "Ceiling on the series truncation order");

    ClassArgs count_args;
    auto* count = app.add_subcommand("count", "Count members of a partition class");
    count->add_option("--n", count_args.n, "n or A..B")->required();
    count->add_option("--class", count_args.kind, "D, O, A, B, AP, DR or MOD4")->required();
    count->add_option("--p", count_args.p, "Modulus");
    count->add_option("--r", count_args.r, "Residue");

    ClassArgs list_args;
    auto* list = app.add_subcommand("list", "List members of a partition class");
    list->add_option("--n", list_args.n, "n")->required();
    list->add_option("--class", list_args.kind, "D, O, A, B, AP, DR or MOD4")->required();
    list->add_option("--p", list_args.p, "Modulus");
    list->add_option("--r", list_args.r, "Residue");

    MapArgs map_args;
    auto* map = app.add_subcommand("map", "Apply the O->D bijection or its inverse to one partition");
    map->add_option("--p", map_args.p, "Modulus")->required();
    map->add_option("--r", map_args.r, "Residue")->required();
    map->add_option("--forward", map_args.forward, "O-class partition literal, e.g. 4,3,2,1");
    map->add_option("--inverse", map_args.inverse, "D-class partition literal, e.g. 7,3");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Exhaustively verify a counting identity over a range");
    verify->add_option("theorem", verify_args.theorem, "T2, T3, T4 or COR")->required();
    verify->add_option("--n", verify_args.n, "A..B")->capture_default_str();
    verify->add_option("--p", verify_args.p, "A..B (T2, COR)")->capture_default_str();
    verify->add_option("--r", verify_args.r, "A..B (T2, T3; default all valid)");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Print the coefficients of a q-series");
    series->add_option("target", series_args.target, "pfn, lebesgue, slater, genA, genB or theta")->required();
    series->add_option("--T", series_args.order, "Truncation order")->capture_default_str();
    series->add_option("--a", series_args.a, "Monomial parameter, e.g. -1, q^2, -q^3 (use --a=-q)");
    series->add_option("--r", series_args.r, "Residue for genA (1 or 3)")->capture_default_str();
    series->add_option("--side", series_args.side, "lhs|rhs, printed|corrected|rhs, sum|product");

    IdentityArgs identity_args;
    auto* identity = app.add_subcommand("identity", "Compare both sides of a q-series identity");
    identity->add_option("id", identity_args.id, "lebesgue, slater, genA, genB or pfn")->required();
    identity->add_option("--T", identity_args.order, "Truncation order")->capture_default_str();
    identity->add_option("--a", identity_args.a, "Monomial parameter for lebesgue");
    identity->add_option("--r", identity_args.r, "Residue for genA (default: both 1 and 3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    RunReport report;
    std::ostringstream text;
    const auto start = std::chrono::steady_clock::now();
    int code = kPass;
    std::string error;
    try {
        if (count->parsed()) {
            report.command = "count";
            code = cmd_count(count_args, opts, report, text);
        } else if (list->parsed()) {
            report.command = "list";
            code = cmd_list(list_args, opts, report, text);
        } else if (map->parsed()) {
            report.command = "map";
            code = cmd_map(map_args, report, text);
        } else if (verify->parsed()) {
            report.command = "verify";
            code = cmd_verify(verify_args, opts, report, text);
        } else if (series->parsed()) {
            report.command = "series";
            code = cmd_series(series_args, opts, report, text);
        } else {
            report.command = "identity";
            code = cmd_identity(identity_args, opts, report, text);
        }
    } catch (const NotInClass& e) {
        code = kNotInClass;
        error = e.what();
    } catch (const IntegerOverflow& e) {
        code = kOverflow;
        error = e.what();
    } catch (const InternalConsistencyError& e) {
        code = kVerificationFailure;
        error = e.what();
    } catch (const Error& e) {
        code = kUsageError;
        error = e.what();
    }
    report.pass = report.pass && code == kPass;

    const auto elapsed = std::chrono::steady_clock::now() - start;
    report.elapsed_ms =
        opts.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();

    if (!error.empty()) {
        err << "error: " << error << '\n';
        report.results["error"] = error;
        report.results["exit_code"] = code;
    }
    if (opts.json) {
        // nlohmann::json objects keep keys sorted, so the dump is stable.
        out << report.to_json().dump(2) << '\n';
    } else {
        out << text.str();
    }
    return code;
}

} // namespace parsep::cli
