// signvec: command-line front end for the signed-vector extremal toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 search budget exhausted,
// 3 invalid input.

#include "signvec/constructions.hpp"
#include "signvec/errors.hpp"
#include "signvec/formulas.hpp"
#include "signvec/report.hpp"
#include "signvec/result_cache.hpp"
#include "signvec/solver.hpp"
#include "signvec/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace signvec;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitTimeout = 2;
constexpr int kExitInvalid = 3;

struct Globals {
    std::string cache_path;
    std::uint64_t seed = 1;
    double budget = 60.0;
    std::string format = "json";
};

struct ProfileArgs {
    int n = 0, k = 0, l = 0;
    void attach(CLI::App* cmd, bool required) {
        auto* on = cmd->add_option("--n", n, "dimension");
        auto* ok = cmd->add_option("--k", k, "number of +1 coordinates");
        auto* ol = cmd->add_option("--l", l, "number of -1 coordinates");
        if (required) {
            on->required();
            ok->required();
            ol->required();
        }
        n_opt = on;
    }
    [[nodiscard]] bool given() const { return n_opt && n_opt->count() > 0; }
    [[nodiscard]] Profile profile() const { return {n, k, l}; }
    CLI::Option* n_opt = nullptr;
};

// Output sink: stdout, or a file when --out is given.
void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

std::string csv_of(const Json& obj) {
    std::string out = "key,value\n";
    for (const auto& [key, value] : obj.items())
        out += key + "," + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    return out;
}

std::string render(const Json& obj, const Globals& g) {
    return parse_report_format(g.format) == ReportFormat::Json ? obj.dump(2) + "\n" : csv_of(obj);
}

std::chrono::duration<double> budget_of(const Globals& g) {
    if (!(g.budget > 0)) throw InputError("--budget must be positive");
    return std::chrono::duration<double>(g.budget);
}

int cmd_enumerate(const ProfileArgs& pa, const std::string& out) {
    const auto p = pa.profile();
    p.validate();
    std::ostringstream ss;
    write_family(ss, enumerate_all(p));
    write_output(out, ss.str());
    return kExitOk;
}

int cmd_solve(const Globals& g, const std::string& target_text, const ProfileArgs& pa, bool no_pruning,
              const std::string& witness_path) {
    Target target;
    if (target_text == "g") target = Target::G;
    else if (target_text == "m") target = Target::M;
    else throw InputError("solve target must be g or m");
    const auto p = pa.profile();
    // Shifted pruning is only justified for g, so m always runs the plain search.
    const bool pruning = target == Target::G && !no_pruning;

    std::optional<ResultCache> cache;
    if (!g.cache_path.empty()) {
        cache = ResultCache::open(g.cache_path);
        if (!cache->warning().empty()) std::cerr << "warning: " << cache->warning() << "\n";
    }
    const CacheKey key{p, target, pruning};
    Json out;
    out["n"] = p.n;
    out["k"] = p.k;
    out["l"] = p.l;
    out["target"] = to_string(target);
    out["pruning"] = pruning;

    if (cache && witness_path.empty()) {
        if (auto hit = cache->lookup(key); hit && hit->status == SolveStatus::Exact) {
            out["value"] = hit->value;
            out["status"] = to_string(hit->status);
            out["cached"] = true;
            std::cout << render(out, g);
            return kExitOk;
        }
    }
    SolveOptions opts;
    opts.budget = budget_of(g);
    opts.shifted_pruning = pruning;
    const auto r = solve_extremal(p, target, opts);
    out["value"] = r.value;
    out["status"] = to_string(r.status);
    out["cached"] = false;
    out["nodes"] = r.nodes_explored;
    out["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed.count() * 1000.0);
    if (target == Target::G) {
        const auto b = g_bounds(p.n, p.k, p.l);
        out["lower_bound"] = to_text(b.lower);
        out["upper_bound"] = to_text(b.upper);
    }
    if (cache) {
        cache->record(key, r);
        cache->save();
    }
    if (!witness_path.empty()) write_family_file(witness_path, r.witness);
    std::cout << render(out, g);
    return r.status == SolveStatus::Exact ? kExitOk : kExitTimeout;
}

int cmd_construct(const Globals& g, const std::string& kind, const ProfileArgs& pa, const std::string& family_path,
                  int x, const std::string& out_path) {
    VectorFamily fam;
    if (kind == "ekr") {
        fam = ekr_family(pa.profile());
    } else if (kind == "split") {
        const auto p = pa.profile();
        p.validate();
        const int size = x >= 0 ? x : static_cast<int>(p_split(p.n, p.k, p.l).argmax_x);
        fam = split_family_prefix(p, size);
    } else if (kind == "inductive") {
        if (!family_path.empty()) {
            fam = inductive_extend(read_family_file(family_path));
        } else {
            // Chain upwards from the EKR family in the smallest dimension.
            const auto p = pa.profile();
            p.validate_for_g();
            fam = ekr_family({p.k + p.l, p.k, p.l});
            while (fam.profile().n < p.n) fam = inductive_extend(fam);
        }
    } else {
        throw InputError("construct kind must be ekr, inductive or split");
    }
    std::ostringstream ss;
    write_family(ss, fam);
    write_output(out_path, ss.str());
    if (!out_path.empty()) {
        Json info;
        info["kind"] = kind;
        info["n"] = fam.profile().n;
        info["k"] = fam.profile().k;
        info["l"] = fam.profile().l;
        info["size"] = fam.size();
        std::cout << render(info, g);
    }
    return kExitOk;
}

// CSV unless --format json was given.
int cmd_classify(const Globals& g, bool format_given, const std::string& family_path) {
    const auto fam = read_family_file(family_path);
    const bool json = format_given && parse_report_format(g.format) == ReportFormat::Json;
    Json rows = Json::array();
    std::string csv = "vector,kind,t,m,j,jprime,last,i_prime,i_count,in_b1_prime,condition_12\n";
    for (const auto& v : fam) {
        const auto c = classify_vector(v);
        const char* last = c.last == LastClass::Minus ? "-1" : c.last == LastClass::Zero ? "0" : "+1";
        const std::string ip = c.markers ? std::to_string(c.markers->i_prime) : "";
        const std::string ic = c.markers ? std::to_string(c.markers->i_count) : "";
        if (json) {
            Json row;
            row["vector"] = format_vector(v);
            row["kind"] = c.kind_text();
            row["t"] = c.t;
            row["m"] = c.m;
            row["j"] = c.j;
            row["jprime"] = c.jprime;
            row["last"] = last;
            if (c.markers) row["markers"] = {{"i_prime", c.markers->i_prime}, {"i_count", c.markers->i_count}};
            row["in_b1_prime"] = c.in_b1_prime;
            row["condition_12"] = c.condition_12;
            rows.push_back(std::move(row));
        } else {
            csv += format_vector(v) + "," + c.kind_text() + "," + std::to_string(c.t) + "," + std::to_string(c.m) +
                   "," + std::to_string(c.j) + "," + std::to_string(c.jprime) + "," + last + "," + ip + "," + ic +
                   "," + (c.in_b1_prime ? "true" : "false") + "," + (c.condition_12 ? "true" : "false") + "\n";
        }
    }
    std::cout << (json ? rows.dump(2) + "\n" : csv);
    return kExitOk;
}

struct FormulaArgs {
    long n = 0, k = 0, l = 0, t = 0, m = 0;
};

int cmd_formula(const Globals& g, const std::string& name, const FormulaArgs& a) {
    Json out;
    out["formula"] = name;
    const std::map<std::string, std::function<void()>> table = {
        {"binom", [&] { out["value"] = to_text(binom(a.n, a.k)); }},
        {"family-size", [&] { out["value"] = to_text(family_size(a.n, a.k, a.l)); }},
        {"g-closed", [&] { out["value"] = to_text(g_closed_l1(a.n, a.k)); }},
        {"g-bounds",
         [&] {
             const auto b = g_bounds(a.n, a.k, a.l);
             out["lower"] = to_text(b.lower);
             out["upper"] = to_text(b.upper);
         }},
        {"g-ekr",
         [&] {
             const auto e = g_ekr_value(a.n, a.k, a.l);
             out["value"] = to_text(e.value);
             out["in_exact_range"] = e.in_exact_range;
         }},
        {"increment",
         [&] {
             const auto i = increment_value(a.n, a.k, a.l);
             out["value"] = to_text(i.value);
             out["proven_range"] = i.proven_range;
             out["conjectured_threshold"] = to_text(i.conjectured_threshold);
         }},
        {"p-split",
         [&] {
             const auto s = p_split(a.n, a.k, a.l);
             out["value"] = to_text(s.value);
             out["argmax_x"] = s.argmax_x;
         }},
        {"p-increment",
         [&] {
             const auto r = p_increment_report(a.n, a.k, a.l);
             out["increment"] = to_text(r.increment);
             out["drop_minus"] = to_text(r.drop_minus);
             out["drop_plus"] = to_text(r.drop_plus);
             out["average"] = to_text(r.average);
             out["equals_max"] = r.equals_max;
             out["at_least_average"] = r.at_least_average;
             out["at_most_min"] = r.at_most_min;
         }},
        {"n0", [&] { out["value"] = to_text(n0_threshold(a.k, a.l)); }},
        {"count-x", [&] { out["value"] = to_text(count_X_tm(a.n, a.k, a.l, a.t, a.m)); }},
        {"count-y", [&] { out["value"] = to_text(count_Y_tm(a.n, a.k, a.l, a.t, a.m)); }},
        {"ratio-alpha",
         [&] {
             const auto r = ratio_and_alpha(a.n, a.k, a.l, a.t, a.m);
             out["ratio"] = to_text(r.ratio);
             out["alpha"] = r.alpha ? to_text(*r.alpha) : "undefined (n <= 3k)";
             out["coefficient"] = r.coefficient ? to_text(*r.coefficient) : "undefined (n <= 3k)";
         }},
        {"alpha", [&] { out["value"] = to_text(alpha_value(a.n, a.k, a.l)); }},
        {"coefficient", [&] { out["value"] = to_text(coefficient_value(a.n, a.k, a.l)); }},
        {"threshold", [&] { out["value"] = increment_threshold(a.k, a.l); }},
    };
    const auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [key, fn] : table) known += (known.empty() ? "" : ", ") + key;
        throw InputError("unknown formula \"" + name + "\"; known: " + known);
    }
    it->second();
    std::cout << render(out, g);
    return kExitOk;
}

int emit_suite_report(const Globals& g, const VerificationReport& rep, const std::string& out_path) {
    const auto fmt = parse_report_format(g.format);
    if (out_path.empty()) emit_report(std::cout, rep, fmt);
    else emit_report_file(out_path, rep, fmt);
    const auto s = rep.summary();
    std::cerr << rep.suite() << ": " << s.passed << "/" << s.total << " passed, " << s.failed_required
              << " required failures, " << s.informational << " informational\n";
    return rep.exit_code();
}

SuiteParams suite_params(const Globals& g, std::optional<ResultCache>& cache) {
    SuiteParams params;
    params.seed = g.seed;
    params.budget = budget_of(g);
    if (!g.cache_path.empty()) {
        cache = ResultCache::open(g.cache_path);
        if (!cache->warning().empty()) std::cerr << "warning: " << cache->warning() << "\n";
        params.cache = &*cache;
    }
    return params;
}

int cmd_verify(const Globals& g, const std::string& suite, const ProfileArgs& pa, std::size_t trials,
               const std::string& out_path) {
    (void)parse_report_format(g.format);
    std::optional<ResultCache> cache;
    auto params = suite_params(g, cache);
    params.trials = trials;
    if (pa.given()) params.profile = pa.profile();
    const auto rep = run_suite(suite, params);
    if (cache) cache->save();
    return emit_suite_report(g, rep, out_path);
}

int cmd_report(const Globals& g, const std::vector<std::string>& suites, const std::string& out_path) {
    (void)parse_report_format(g.format);
    std::optional<ResultCache> cache;
    const auto params = suite_params(g, cache);
    VerificationReport all("report");
    for (const auto& name : suites.empty() ? suite_names() : suites) {
        std::cerr << "running " << name << "\n";
        all.merge(run_suite(name, params));
    }
    if (cache) cache->save();
    return emit_suite_report(g, all, out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extremal families of {0,+1,-1} vectors: solver, constructions and verification suites"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--cache", g.cache_path, "JSON result cache");
    app.add_option("--seed", g.seed, "seed for randomized suites");
    app.add_option("--budget", g.budget, "search budget in seconds")->check(CLI::PositiveNumber);
    auto* format_opt = app.add_option("--format", g.format, "output format (classify defaults to csv)")
                           ->check(CLI::IsMember({"json", "csv"}));

    std::function<int()> action;

    auto* enumerate = app.add_subcommand("enumerate", "write every vector of V(n,k,l) as a family file");
    ProfileArgs enum_args;
    std::string enum_out;
    enum_args.attach(enumerate, true);
    enumerate->add_option("--out", enum_out, "output file (default stdout)");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(enum_args, enum_out); }; });

    auto* solve = app.add_subcommand("solve", "exact g(n,k,l) or m(n,k,l)");
    std::string target;
    ProfileArgs solve_args;
    bool no_pruning = false, deterministic = false;
    std::string witness_path;
    solve->add_option("target", target, "g or m")->required()->check(CLI::IsMember({"g", "m"}));
    solve_args.attach(solve, true);
    solve->add_flag("--no-shift-pruning", no_pruning, "search all families, not only shifted ones");
    solve->add_flag("--deterministic", deterministic, "sequential search (always the case)");
    solve->add_option("--witness", witness_path, "write an optimal family to this file");
    solve->callback([&] { action = [&] { return cmd_solve(g, target, solve_args, no_pruning, witness_path); }; });

    auto* construct = app.add_subcommand("construct", "build an ekr, inductive or split family");
    std::string kind, family_in, construct_out;
    ProfileArgs construct_args;
    int split_x = -1;
    construct->add_option("kind", kind, "ekr | inductive | split")->required()->check(
        CLI::IsMember({"ekr", "inductive", "split"}));
    construct_args.attach(construct, false);
    construct->add_option("--family", family_in, "inductive: extend this family file by one dimension");
    construct->add_option("--x", split_x, "split: |X| (default: a maximizer)");
    construct->add_option("--out", construct_out, "output file (default stdout)");
    construct->callback([&] {
        action = [&] {
            if (!(kind == "inductive" && !family_in.empty()) && !construct_args.given())
                throw InputError("construct " + kind + " needs --n --k --l");
            return cmd_construct(g, kind, construct_args, family_in, split_x, construct_out);
        };
    });

    auto* classify = app.add_subcommand("classify", "B1/B2 labels and suffix markers for each family member");
    std::string classify_in;
    classify->add_option("--family", classify_in, "family file")->required();
    classify->callback([&] { action = [&] { return cmd_classify(g, format_opt->count() > 0, classify_in); }; });

    auto* formula = app.add_subcommand("formula", "evaluate a closed form exactly");
    std::string formula_name;
    FormulaArgs fa;
    formula->add_option("name", formula_name, "formula name")->required();
    formula->add_option("--n", fa.n);
    formula->add_option("--k", fa.k);
    formula->add_option("--l", fa.l);
    formula->add_option("--t", fa.t);
    formula->add_option("--m", fa.m);
    formula->callback([&] { action = [&] { return cmd_formula(g, formula_name, fa); }; });

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    std::string suite;
    ProfileArgs verify_args;
    std::size_t trials = 1000;
    std::string verify_out;
    verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_args.attach(verify, false);
    verify->add_option("--trials", trials, "lemma3: number of random trials");
    verify->add_option("--out", verify_out, "report file (default stdout)");
    verify->callback([&] { action = [&] { return cmd_verify(g, suite, verify_args, trials, verify_out); }; });

    auto* report = app.add_subcommand("report", "run several suites into one report");
    std::vector<std::string> report_suites;
    std::string report_out;
    report->add_option("--suites", report_suites, "suites to run (default all)")
        ->delimiter(',')
        ->check(CLI::IsMember(suite_names()));
    report->add_option("--out", report_out, "report file (default stdout)");
    report->callback([&] { action = [&] { return cmd_report(g, report_suites, report_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        return action ? action() : kExitInvalid;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const DegenerateInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitInvalid;
}
