#include "sumstruct/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "sumstruct/analysis.hpp"
#include "sumstruct/cache.hpp"
#include "sumstruct/constructions.hpp"
#include "sumstruct/errors.hpp"
#include "sumstruct/parse.hpp"
#include "sumstruct/report.hpp"
#include "sumstruct/rng.hpp"
#include "sumstruct/scan.hpp"
#include "sumstruct/sumset.hpp"
#include "sumstruct/theory.hpp"

namespace sumstruct {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

OrderedJson members_json(const ElementSet& s) { return OrderedJson(s.members()); }

OrderedJson niceness_json(const NicenessVerdict& v) {
    OrderedJson j;
    j["nice"] = v.nice;
    j["witness"] = v.witness ? members_json(v.witness->members) : OrderedJson(nullptr);
    OrderedJson rows = OrderedJson::array();
    for (const auto& d : v.per_subgroup) {
        OrderedJson r;
        r["index"] = d.subgroup.index;
        r["order"] = d.subgroup.order;
        r["members"] = members_json(d.subgroup.members);
        r["intersection_size"] = d.intersection_size;
        r["span_size"] = d.span_size;
        r["spans"] = d.spans;
        rows.push_back(std::move(r));
    }
    j["per_subgroup"] = std::move(rows);
    return j;
}

OrderedJson fact_bounds_json(const FactBoundsReport& rep) {
    OrderedJson j;
    j["nice"] = rep.nice;
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : rep.rows) {
        OrderedJson row;
        row["index_q"] = r.subgroup_index_q;
        row["subgroup"] = members_json(r.subgroup_members);
        row["a_minus_h"] = r.a_minus_h;
        row["h_minus_a"] = r.h_minus_a;
        row["size_bound_ok"] = r.size_bound_ok;
        row["projected_labels"] = r.projected_labels;
        row["projection_incomplete"] = r.projection_incomplete;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["global_bound_checked"] = rep.global_bound_checked;
    j["global_bound_ok"] = rep.global_bound_ok;
    j["all_ok"] = rep.all_ok;
    return j;
}

OrderedJson theory_json(const TheoryCritical& t) {
    OrderedJson j;
    switch (t.kind) {
    case TheoryCritical::Kind::exact:
        j["kind"] = "exact";
        j["value"] = t.lo;
        break;
    case TheoryCritical::Kind::interval:
        j["kind"] = "interval";
        j["lo"] = t.lo;
        j["hi"] = t.hi;
        break;
    case TheoryCritical::Kind::upper_bound_only:
        j["kind"] = "upper-bound-only";
        j["bound"] = t.hi;
        break;
    }
    j["case"] = t.case_name;
    return j;
}

OrderedJson critical_verdict(const GroupSpec& g, const Budget& budget) {
    CriticalNumberResult r = critical_number(g, budget);
    OrderedJson v;
    if (r.exact)
        v["exact"] = *r.exact;
    else
        v["exact"] = nullptr;
    v["max_incomplete_size"] = r.max_incomplete_lower_bound;
    v["witness_incomplete"] = members_json(r.witness_incomplete);
    v["theory"] = theory_json(r.theory);
    v["consistent"] = r.theory_consistent;
    v["nodes"] = r.nodes;
    v["truncated"] = r.truncated;
    return v;
}

OrderedJson max_non_nice_verdict(const GroupSpec& g, const Budget& budget, double delta) {
    MaxNonNiceResult r = max_non_nice_incomplete_set(g, budget, delta);
    OrderedJson v;
    v["size"] = r.size;
    v["witness"] = members_json(r.witness);
    v["delta"] = round12(r.delta);
    v["threshold_single_prime"] = round12(r.threshold_single_prime);
    v["threshold_two_primes"] = round12(r.threshold_two_primes);
    v["exceeds_single_prime_threshold"] = r.size > r.threshold_single_prime;
    v["exceeds_two_prime_threshold"] = r.size > r.threshold_two_primes;
    v["empirical"] = true;
    v["nodes"] = r.nodes;
    v["truncated"] = r.truncated;
    return v;
}

OrderedJson verifier_json(const VerifierReport& rep) {
    OrderedJson j;
    j["property"] = rep.property_id;
    j["params"] = rep.params;
    j["instances_checked"] = rep.instances_checked;
    j["violation_count"] = rep.violations.size();
    OrderedJson viol = OrderedJson::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 50; ++i)
        viol.push_back(rep.violations[i]);
    j["violations"] = std::move(viol);
    j["sampled"] = rep.sampled;
    j["ok"] = rep.ok();
    return j;
}

OrderedJson construction_json(const GroupSpec& g, const ConstructionResult& c) {
    OrderedJson j;
    j["name"] = c.name;
    j["params"] = c.params;
    if (c.set) {
        j["set"] = members_json(*c.set);
        j["size"] = c.set->count();
    }
    if (c.sequence) {
        j["sequence"] = c.sequence->items();
        j["size"] = c.sequence->total_length();
    }
    OrderedJson claims = OrderedJson::array();
    for (const auto& cl : c.claims) {
        OrderedJson row;
        row["property"] = cl.property;
        row["expected"] = cl.expected;
        row["actual"] = cl.actual;
        row["pass"] = cl.pass();
        claims.push_back(std::move(row));
    }
    j["claims"] = std::move(claims);
    j["valid"] = c.valid();
    (void)g;
    return j;
}

struct GlobalOpts {
    std::string group_text;
    std::string set_text;
    std::string seq_text;
    std::uint64_t seed = 0;
    std::uint64_t budget_nodes = 50'000'000;
    double budget_seconds = 0;
    std::string format = "table";
    std::string cache_dir;
    bool no_cache = false;

    Budget budget() const { return Budget{budget_nodes, budget_seconds}; }

    GroupSpec group() const {
        if (group_text.empty()) throw Error(Errc::usage, "--group is required");
        return GroupSpec::make(parse_group_factors(group_text));
    }

    MultisetSequence items(const GroupSpec& g) const {
        if (!set_text.empty() && !seq_text.empty())
            throw Error(Errc::usage, "--set and --seq are mutually exclusive");
        if (!set_text.empty()) return MultisetSequence::from_set(parse_set(g, set_text));
        if (!seq_text.empty()) return parse_sequence(g, seq_text);
        throw Error(Errc::usage, "one of --set or --seq is required");
    }
};

OrderedJson command_echo(const std::vector<std::string>& argv, const GlobalOpts& opt) {
    OrderedJson j;
    j["argv"] = argv;
    j["seed"] = opt.seed;
    j["budget_nodes"] = opt.budget_nodes;
    j["budget_seconds"] = round12(opt.budget_seconds);
    return j;
}

std::string budget_params(const GlobalOpts& opt) {
    return "bn=" + std::to_string(opt.budget_nodes) +
           "|bs=" + std::to_string(round12(opt.budget_seconds));
}

} // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"subset-sum structure in finite abelian groups"};
    app.name("sumstruct");
    GlobalOpts opt;
    if (const char* env = std::getenv("SUMSTRUCT_CACHE_DIR")) opt.cache_dir = env;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--group", opt.group_text, "group as comma-separated factor orders");
        if (with_input) {
            cmd->add_option("--set", opt.set_text, "set literal, e.g. {1,2,3}");
            cmd->add_option("--seq", opt.seq_text, "sequence literal, e.g. seq{1,1,3}");
        }
        cmd->add_option("--seed", opt.seed, "RNG seed");
        cmd->add_option("--budget-nodes", opt.budget_nodes, "search node budget");
        cmd->add_option("--budget-seconds", opt.budget_seconds, "search wall-clock budget");
        cmd->add_option("--format", opt.format, "output format: jsonl|csv|table");
        cmd->add_option("--cache-dir", opt.cache_dir, "scan cache directory");
        cmd->add_flag("--no-cache", opt.no_cache, "bypass the scan cache");
    };

    auto* cmd_sumset = app.add_subcommand("sumset", "subset sums of a set or sequence");
    add_common(cmd_sumset, true);

    auto* cmd_analyze =
        app.add_subcommand("analyze", "completeness, niceness and bounds for one set");
    add_common(cmd_analyze, true);

    auto* cmd_critical = app.add_subcommand("critical", "exact critical number vs theory");
    add_common(cmd_critical, false);

    auto* cmd_constants = app.add_subcommand("constants", "threshold constants for one epsilon");
    double epsilon = 1.0;
    cmd_constants->add_option("--epsilon", epsilon, "epsilon in (0,1]");
    add_common(cmd_constants, false);

    auto* cmd_construct = app.add_subcommand("construct", "build and verify an extremal object");
    std::string construct_name;
    std::uint32_t cp = 0, cq = 0;
    cmd_construct
        ->add_option("name", construct_name,
                     "staircase | dir2-sharp | fact1-extremal | coset-extremal")
        ->required();
    cmd_construct->add_option("--p", cp, "prime p");
    cmd_construct->add_option("--q", cq, "prime q");
    add_common(cmd_construct, false);

    auto* cmd_verify = app.add_subcommand("verify", "exhaustive verifier for one property");
    std::string property;
    cmd_verify
        ->add_option("property", property,
                     "fact1 | half-plus-two | zero-sum | olson | constants | spread-lemma | "
                     "subgroup-profile")
        ->required();
    std::uint32_t vp = 0, max_p = 0, max_order = 0, max_l = 4;
    bool strict_literal = false;
    double delta = 0.25;
    std::uint32_t max_attempts = 1000;
    std::uint32_t size_threshold = 0;
    std::string profile_mode = "exhaustive";
    std::uint64_t samples_per_size = 200;
    cmd_verify->add_option("--p", vp, "single prime p (fact1)");
    cmd_verify->add_option("--max-p", max_p, "all primes up to this (fact1)");
    cmd_verify->add_option("--max-order", max_order, "all groups with order up to this");
    cmd_verify->add_option("--max-l", max_l, "largest iterated sumset exponent (olson)");
    cmd_verify->add_flag("--strict-literal", strict_literal,
                         "treat literal-form growth findings as failures (olson)");
    cmd_verify->add_option("--delta", delta, "delta in (0, 1/2] (spread-lemma)");
    cmd_verify->add_option("--max-attempts", max_attempts, "sampling attempts (spread-lemma)");
    cmd_verify->add_option("--size-threshold", size_threshold,
                           "minimum |A| profiled (subgroup-profile)");
    cmd_verify->add_option("--mode", profile_mode, "exhaustive|sampled (subgroup-profile)");
    cmd_verify->add_option("--samples-per-size", samples_per_size,
                           "sampled-mode draws per size (subgroup-profile)");
    cmd_verify->add_option("--epsilon", epsilon, "epsilon (constants)");
    add_common(cmd_verify, true);

    auto* cmd_scan = app.add_subcommand("scan", "run a per-group command over a family");
    std::string orders_text, scan_command;
    unsigned jobs = 1;
    cmd_scan->add_option("--orders", orders_text, "order range lo..hi")->required();
    cmd_scan->add_option("command", scan_command, "critical | max-non-nice")->required();
    cmd_scan->add_option("--jobs", jobs, "worker threads");
    cmd_scan->add_option("--delta", delta, "delta for max-non-nice thresholds");
    add_common(cmd_scan, false);

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<AnalysisReport> reports;
    bool violation = false, truncated = false;

    auto emit = [&](const GroupSpec* g, const std::string& kind, OrderedJson verdict,
                    double ms, bool trunc = false) {
        AnalysisReport r;
        r.command = command_echo(argv, opt);
        r.group = g ? group_json(*g) : OrderedJson(nullptr);
        r.kind = kind;
        r.verdict = std::move(verdict);
        r.truncated = trunc;
        r.timing_ms = ms;
        truncated = truncated || trunc;
        reports.push_back(std::move(r));
    };

    try {
        if (*cmd_sumset) {
            GroupSpec g = opt.group();
            Timer t;
            MultisetSequence items = opt.items(g);
            ElementSet s = subset_sums(g, items);
            OrderedJson v;
            v["input"] = items.items();
            v["sums"] = members_json(s);
            v["sum_count"] = s.count();
            v["complete"] = s.is_full();
            emit(&g, "sumset", std::move(v), t.ms());
        } else if (*cmd_analyze) {
            GroupSpec g = opt.group();
            Timer t;
            MultisetSequence items = opt.items(g);
            ElementSet support = items.support(g.order());
            ElementSet s = subset_sums(g, items);
            OrderedJson v;
            v["input"] = items.items();
            v["complete"] = s.is_full();
            v["sums"] = members_json(s);
            v["sum_count"] = s.count();
            NicenessVerdict nice = is_nice(g, support);
            v["niceness"] = niceness_json(nice);
            if (!s.is_full()) {
                FactBoundsReport fb = fact_bounds_check(g, support);
                v["fact_bounds"] = fact_bounds_json(fb);
                if (!fb.all_ok) violation = true;
            } else {
                v["fact_bounds"] = nullptr;
            }
            emit(&g, "analyze", std::move(v), t.ms());
        } else if (*cmd_critical) {
            GroupSpec g = opt.group();
            Timer t;
            OrderedJson v = critical_verdict(g, opt.budget());
            bool trunc = v["truncated"].get<bool>();
            if (!trunc && !v["consistent"].get<bool>()) violation = true;
            emit(&g, "critical", std::move(v), t.ms(), trunc);
        } else if (*cmd_constants) {
            Timer t;
            ConstantsRecord c = compute_constants(epsilon);
            OrderedJson v;
            v["epsilon"] = round12(c.epsilon);
            v["C"] = round12(c.C);
            v["n_eps"] = c.n_eps;
            v["sanity_500"] = c.sanity_500;
            if (!c.sanity_500) violation = true;
            emit(nullptr, "constants", std::move(v), t.ms());
        } else if (*cmd_construct) {
            Timer t;
            ConstructionResult c;
            if (construct_name == "staircase") {
                c = staircase_example(cp);
            } else if (construct_name == "dir2-sharp") {
                c = dir2_sharp_example(cp, cq);
            } else if (construct_name == "fact1-extremal") {
                c = fact1_extremal_sequence(cp);
            } else if (construct_name == "coset-extremal") {
                c = coset_extremal_set(opt.group());
            } else {
                throw Error(Errc::usage, "unknown construction '" + construct_name + "'");
            }
            GroupSpec g = GroupSpec::make(c.group_factors);
            if (!c.valid()) violation = true;
            emit(&g, "construct", construction_json(g, c), t.ms());
        } else if (*cmd_verify) {
            if (property == "fact1") {
                std::vector<std::uint32_t> ps;
                if (vp) ps.push_back(vp);
                if (max_p)
                    for (std::uint32_t p = 2; p <= max_p; ++p) {
                        bool prime = p >= 2;
                        for (std::uint32_t d = 2; d * d <= p; ++d)
                            if (p % d == 0) prime = false;
                        if (prime) ps.push_back(p);
                    }
                if (ps.empty()) throw Error(Errc::usage, "fact1 needs --p or --max-p");
                for (auto p : ps) {
                    Timer t;
                    VerifierReport rep = verify_fact1(p);
                    if (!rep.ok()) violation = true;
                    GroupSpec g = GroupSpec::make({p});
                    emit(&g, "verify", verifier_json(rep), t.ms());
                }
            } else if (property == "half-plus-two" || property == "zero-sum") {
                std::vector<std::vector<std::uint32_t>> family;
                if (max_order)
                    family = abelian_groups_in_range(2, max_order);
                else
                    family.push_back(opt.group().factors());
                for (const auto& f : family) {
                    GroupSpec g = GroupSpec::make(f);
                    Timer t;
                    VerifierReport rep = property == "half-plus-two"
                                             ? verify_half_plus_two(g, opt.seed)
                                             : verify_zero_sum(g, opt.seed);
                    if (!rep.ok()) violation = true;
                    emit(&g, "verify", verifier_json(rep), t.ms());
                }
            } else if (property == "olson") {
                std::vector<std::vector<std::uint32_t>> family;
                if (max_order)
                    family = abelian_groups_in_range(2, max_order);
                else
                    family.push_back(opt.group().factors());
                for (const auto& f : family) {
                    GroupSpec g = GroupSpec::make(f);
                    Timer t;
                    OlsonReport rep = verify_olson_growth(g, max_l);
                    if (!rep.hard.ok()) violation = true;
                    if (strict_literal && rep.literal_violation_count > 0) violation = true;
                    OrderedJson v = verifier_json(rep.hard);
                    v["literal_violation_count"] = rep.literal_violation_count;
                    OrderedJson lits = OrderedJson::array();
                    for (std::size_t i = 0; i < rep.literal_findings.size() && i < 50; ++i)
                        lits.push_back(rep.literal_findings[i]);
                    v["literal_findings"] = std::move(lits);
                    emit(&g, "verify", std::move(v), t.ms());
                }
            } else if (property == "constants") {
                Timer t;
                ConstantsRecord c = compute_constants(epsilon);
                OrderedJson v;
                v["epsilon"] = round12(c.epsilon);
                v["C"] = round12(c.C);
                v["n_eps"] = c.n_eps;
                v["sanity_500"] = c.sanity_500;
                if (!c.sanity_500) violation = true;
                emit(nullptr, "verify", std::move(v), t.ms());
            } else if (property == "spread-lemma") {
                GroupSpec g = opt.group();
                Timer t;
                ElementSet s = opt.set_text.empty() ? ElementSet::full(g.order())
                                                    : parse_set(g, opt.set_text);
                SpreadResult r = sample_spread_subset(g, s, delta, opt.seed, max_attempts);
                OrderedJson v;
                v["delta"] = round12(delta);
                v["rho"] = round12(r.rho);
                v["target_size"] = r.target_size;
                v["attempts_used"] = r.attempts_used;
                v["success"] = r.spread.has_value();
                v["spread"] = r.spread ? members_json(*r.spread) : OrderedJson(nullptr);
                v["size_window_hits"] = r.size_window_hits;
                v["cap_failures"] = r.cap_failures;
                v["verify_failures"] = r.verify_failures;
                bool exhausted = !r.spread.has_value();
                emit(&g, "verify", std::move(v), t.ms(), exhausted);
            } else if (property == "subgroup-profile") {
                GroupSpec g = opt.group();
                Timer t;
                bool exhaustive = profile_mode == "exhaustive";
                if (!exhaustive && profile_mode != "sampled")
                    throw Error(Errc::usage, "--mode must be exhaustive or sampled");
                SubgroupProfile prof = profile_subgroup_theorem(
                    g, size_threshold, exhaustive, opt.seed, samples_per_size);
                OrderedJson v;
                v["size_threshold"] = prof.size_threshold;
                v["exhaustive"] = prof.exhaustive;
                v["instances"] = prof.instances;
                v["r_min"] = round12(prof.r_min);
                v["r_q1"] = round12(prof.r_q1);
                v["r_median"] = round12(prof.r_median);
                v["r_q3"] = round12(prof.r_q3);
                v["r_max"] = round12(prof.r_max);
                OrderedJson worst = OrderedJson::array();
                for (const auto& w : prof.worst) {
                    OrderedJson row;
                    row["ratio"] = round12(w.ratio);
                    row["set"] = w.set;
                    worst.push_back(std::move(row));
                }
                v["worst"] = std::move(worst);
                v["empirical"] = true;
                emit(&g, "verify", std::move(v), t.ms());
            } else {
                throw Error(Errc::usage, "unknown property '" + property + "'");
            }
        } else if (*cmd_scan) {
            auto dots = orders_text.find("..");
            if (dots == std::string::npos)
                throw Error(Errc::usage, "--orders must look like 4..24");
            const std::uint32_t lo =
                static_cast<std::uint32_t>(std::stoul(orders_text.substr(0, dots)));
            const std::uint32_t hi =
                static_cast<std::uint32_t>(std::stoul(orders_text.substr(dots + 2)));
            if (scan_command != "critical" && scan_command != "max-non-nice")
                throw Error(Errc::usage, "scan command must be critical or max-non-nice");

            std::unique_ptr<ScanCache> cache;
            if (!opt.cache_dir.empty() && !opt.no_cache)
                cache = std::make_unique<ScanCache>(opt.cache_dir);

            auto family = abelian_groups_in_range(lo, hi);
            // groups whose smallest prime factor is the order itself have no
            // composite structure; max-non-nice skips them
            if (scan_command == "max-non-nice") {
                std::erase_if(family, [](const std::vector<std::uint32_t>& f) {
                    GroupSpec g = GroupSpec::make(f);
                    return g.prime_factors().size() < 2;
                });
            }

            std::string params = scan_command + "|" + budget_params(opt);
            if (scan_command == "max-non-nice")
                params += "|delta=" + std::to_string(round12(delta));
            const std::string digest = parameter_digest(params);

            struct Row {
                AnalysisReport report;
                bool from_cache = false;
            };
            std::vector<Row> rows(family.size());
            std::atomic<std::size_t> next{0};
            std::atomic<bool> any_violation{false};

            auto worker = [&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= family.size()) return;
                    GroupSpec g = GroupSpec::make(family[i]);
                    Timer t;
                    OrderedJson v;
                    bool from_cache = false;
                    if (cache) {
                        auto hit = cache->lookup(g.canonical_key_string(), scan_command, digest);
                        if (hit) {
                            v = *hit;
                            from_cache = true;
                        }
                    }
                    if (!from_cache) {
                        v = scan_command == "critical"
                                ? critical_verdict(g, opt.budget())
                                : max_non_nice_verdict(g, opt.budget(), delta);
                        if (cache && !v["truncated"].get<bool>())
                            cache->append(g.canonical_key_string(), scan_command, digest, v);
                    }
                    if (scan_command == "critical" && !v["truncated"].get<bool>() &&
                        !v["consistent"].get<bool>())
                        any_violation = true;
                    Row row;
                    row.from_cache = from_cache;
                    row.report.command = command_echo(argv, opt);
                    row.report.group = group_json(g);
                    row.report.kind = scan_command;
                    row.report.truncated = v["truncated"].get<bool>();
                    row.report.cache_hit = from_cache;
                    row.report.verdict = std::move(v);
                    row.report.timing_ms = t.ms();
                    rows[i] = std::move(row);
                }
            };
            if (jobs <= 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }
            violation = violation || any_violation.load();
            for (auto& row : rows) {
                truncated = truncated || row.report.truncated;
                reports.push_back(std::move(row.report));
            }
        } else {
            err << app.help();
            return kExitUsage;
        }
    } catch (const Error& e) {
        // verified violations surface through report payloads; exceptions
        // here mean the request itself could not be served
        err << e.what() << "\n";
        return kExitUsage;
    }

    out << serialize_reports(reports, parse_format(opt.format));
    if (violation) return kExitViolation;
    if (truncated) return kExitBudget;
    return kExitOk;
}

} // namespace sumstruct
