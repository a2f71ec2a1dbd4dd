// Command-line front end: enumerate T-paths, glue weak friezes, check
// frieze/weak-frieze/expansion properties, render patterns, build
// Conway-Coxeter friezes, and run randomized equivalence campaigns.
//
// Exit codes: 0 success (a check answering "no" is still success), 2 input
// validation, 3 gluing hypothesis violation.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frieze/frieze.hpp"

namespace {

using nlohmann::json;
using namespace frieze;

struct JobSpec {
    std::string input;
    std::string format = "json";
    int from = -1;
    int to = -1;
    bool check_weak = false;
    bool check_frieze = false;
    bool check_tpath = false;
    bool check_theorem_a = false;
    bool check_unimodular = false;
    std::uint64_t seed = 20240915;
    int jobs = 1;
    int repeat_columns = 1;
    int fuzz_count = 100;
    int fuzz_n = 8;
    std::string fuzz_semifield = "rational";
};

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json diagonal_json(Diagonal d) { return json::array({d.a, d.b}); }

// Runs fn(i) for i in [0, count) over `jobs` threads and returns the result
// with the smallest index, so the answer does not depend on scheduling.
template <typename Result, typename Fn>
std::optional<Result> parallel_first(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            if (auto r = fn(i)) return r;
        return std::nullopt;
    }
    std::vector<std::optional<std::pair<std::size_t, Result>>> hits(
        static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count;
                 i += static_cast<std::size_t>(jobs)) {
                if (auto r = fn(i)) {
                    hits[static_cast<std::size_t>(t)] = std::pair{i, *r};
                    return;
                }
            }
        });
    for (auto& w : workers) w.join();
    std::optional<std::pair<std::size_t, Result>> best;
    for (const auto& h : hits)
        if (h && (!best || h->first < best->first)) best = h;
    if (!best) return std::nullopt;
    return best->second;
}

template <Semifield K>
std::optional<std::pair<Diagonal, Diagonal>> frieze_witness_jobs(const DiagonalMap<K>& f,
                                                                 int jobs) {
    std::vector<Diagonal> ds = all_diagonals(f.polygon());
    using Hit = std::pair<Diagonal, Diagonal>;
    return parallel_first<Hit>(ds.size(), jobs, [&](std::size_t i) -> std::optional<Hit> {
        for (std::size_t j = i + 1; j < ds.size(); ++j)
            if (crosses(f.polygon(), ds[i], ds[j]) && !ptolemy_holds(f, ds[i], ds[j]))
                return Hit{ds[i], ds[j]};
        return std::nullopt;
    });
}

template <Semifield K>
std::optional<std::pair<int, int>> tpath_witness_jobs(const DiagonalMap<K>& f,
                                                      const Dissection& d, int jobs) {
    const int n = f.polygon().size();
    using Hit = std::pair<int, int>;
    return parallel_first<Hit>(static_cast<std::size_t>(n) * n, jobs,
                               [&](std::size_t idx) -> std::optional<Hit> {
                                   int a = static_cast<int>(idx) / n;
                                   int b = static_cast<int>(idx) % n;
                                   if (a == b) return std::nullopt;
                                   if (!(f.value(a, b) == tpath_sum(f, d, a, b)))
                                       return Hit{a, b};
                                   return std::nullopt;
                               });
}

template <Semifield K>
int run_tpaths(const JobSpec& spec, const PolygonSpec& ps, const json& doc) {
    const Polygon& p = ps.polygon;
    std::vector<TPath> paths = enumerate_tpaths(p, ps.dissection, spec.from, spec.to);
    std::optional<DiagonalMap<K>> f;
    if (doc.contains("values")) f = load_values<K>(ps, doc);

    if (spec.format == "svg") {
        std::cout << emit_svg<K>(p, ps.dissection, f ? &*f : nullptr, paths);
        return 0;
    }
    if (spec.format == "text") {
        for (const TPath& path : paths) {
            for (std::size_t i = 0; i < path.size(); ++i)
                std::cout << (i ? " " : "") << path[i];
            if (f) std::cout << "  weight " << tpath_weight(*f, path).str();
            std::cout << "\n";
        }
        std::cout << "count: " << paths.size() << "\n";
        if (f) std::cout << "sum: " << tpath_sum(*f, ps.dissection, spec.from, spec.to).str() << "\n";
        return 0;
    }
    json out{{"n", p.size()},
             {"from", spec.from},
             {"to", spec.to},
             {"dissection", dissection_to_json(ps.dissection)},
             {"paths", paths},
             {"count", paths.size()}};
    if (f) {
        json weights = json::array();
        for (const TPath& path : paths) weights.push_back(scalar_to_json<K>(tpath_weight(*f, path)));
        out["semifield"] = std::string{K::name()};
        out["weights"] = weights;
        out["sum"] = scalar_to_json<K>(tpath_sum(*f, ps.dissection, spec.from, spec.to));
    }
    emit(out);
    return 0;
}

template <Semifield K>
int run_glue(const JobSpec& spec, const PolygonSpec& ps, const json& doc) {
    auto pieces = load_pieces<K>(ps, doc);
    DiagonalMap<K> f = glue_many(ps.polygon, ps.dissection, pieces);
    if (spec.format == "svg") {
        std::cout << emit_svg<K>(ps.polygon, ps.dissection, &f, {});
        return 0;
    }
    if (spec.format == "text") {
        std::cout << emit_text(render_pattern(f), spec.repeat_columns);
        return 0;
    }
    emit(values_to_json(f, ps.dissection));
    return 0;
}

template <Semifield K>
int run_check(const JobSpec& spec, const PolygonSpec& ps, const json& doc) {
    DiagonalMap<K> f = load_values<K>(ps, doc);
    bool all = !spec.check_weak && !spec.check_frieze && !spec.check_tpath &&
               !spec.check_theorem_a && !spec.check_unimodular;
    json out = json::object();

    std::optional<bool> weak, tpath;
    if (all || spec.check_weak || spec.check_theorem_a) {
        auto w = weak_frieze_witness(f, ps.dissection);
        weak = !w.has_value();
        if (all || spec.check_weak) {
            json r{{"holds", *weak}};
            if (w) r["witness"] = json{{"d1", diagonal_json(w->first)},
                                       {"d2", diagonal_json(w->second)}};
            out["weak_frieze"] = r;
        }
    }
    if (all || spec.check_frieze) {
        auto w = frieze_witness_jobs(f, spec.jobs);
        json r{{"holds", !w.has_value()}};
        if (w) r["witness"] = json{{"d1", diagonal_json(w->first)},
                                   {"d2", diagonal_json(w->second)}};
        out["frieze"] = r;
    }
    if (all || spec.check_tpath || spec.check_theorem_a) {
        auto w = tpath_witness_jobs(f, ps.dissection, spec.jobs);
        tpath = !w.has_value();
        if (all || spec.check_tpath) {
            json r{{"holds", *tpath}};
            if (w)
                r["witness"] = json{{"from", w->first},
                                    {"to", w->second},
                                    {"value", scalar_to_json<K>(f.value(w->first, w->second))},
                                    {"sum", scalar_to_json<K>(tpath_sum(f, ps.dissection,
                                                                        w->first, w->second))}};
            out["tpath_formula"] = r;
        }
    }
    if (all || spec.check_theorem_a)
        out["theorem_a"] = json{{"weak", *weak}, {"tpath", *tpath}, {"agree", *weak == *tpath}};
    if (all || spec.check_unimodular) {
        UnimodularReport rep = check_unimodular(f);
        json r{{"holds", rep.ok()}, {"edges_unit", rep.edges_unit}};
        if (rep.bad_edge) r["bad_edge"] = diagonal_json(*rep.bad_edge);
        if (rep.witness) r["witness"] = diagonal_json(*rep.witness);
        out["unimodular"] = r;
    }
    emit(out);
    return 0;
}

template <Semifield K>
int run_pattern(const JobSpec& spec, const PolygonSpec& ps, const json& doc) {
    DiagonalMap<K> f = load_values<K>(ps, doc);
    if (spec.format == "text") {
        std::cout << emit_text(render_pattern(f), spec.repeat_columns);
        return 0;
    }
    if (spec.format == "svg") {
        std::cout << emit_svg<K>(ps.polygon, ps.dissection, &f, {});
        return 0;
    }
    emit(grid_to_json(render_pattern(f)));
    return 0;
}

int run_cc(const JobSpec& spec, const PolygonSpec& ps) {
    DiagonalMap<PositiveRational> f = cc_frieze(ps.polygon, ps.dissection);
    if (spec.format == "text") {
        std::cout << emit_text(render_pattern(f), spec.repeat_columns);
        return 0;
    }
    if (spec.format == "svg") {
        std::cout << emit_svg<PositiveRational>(ps.polygon, ps.dissection, &f, {});
        return 0;
    }
    emit(values_to_json(f, ps.dissection));
    return 0;
}

template <Semifield K>
int run_fuzz(const JobSpec& spec) {
    const int count = spec.fuzz_count;
    const int n = spec.fuzz_n;
    std::vector<json> disagreements(static_cast<std::size_t>(count));
    std::vector<char> perturbed_flags(static_cast<std::size_t>(count), 0);

    auto run_instance = [&](int i) {
        std::mt19937_64 rng{spec.seed + 1000003ull * static_cast<std::uint64_t>(i)};
        Polygon p{n};
        Dissection d = random_dissection(p, rng);
        DiagonalMap<K> f = random_glued_map<K>(p, d, rng);
        bool perturb = i % 2 == 1;
        if (perturb) {
            std::vector<Diagonal> candidates = crossing_diagonals(p, d);
            if (candidates.empty())
                perturb = false;
            else {
                Diagonal target = candidates[pick(rng, candidates.size())];
                f = f.with_value(target, perturbed(f.value(target)));
            }
        }
        perturbed_flags[static_cast<std::size_t>(i)] = perturb;
        EquivalenceReport rep = verify_equivalence(f, d);
        if (!rep.agree)
            disagreements[static_cast<std::size_t>(i)] =
                json{{"instance", i},
                     {"n", n},
                     {"dissection", dissection_to_json(d)},
                     {"weak", rep.weak},
                     {"tpath", rep.tpath}};
    };

    if (spec.jobs <= 1) {
        for (int i = 0; i < count; ++i) run_instance(i);
    } else {
        std::vector<std::thread> workers;
        for (int t = 0; t < spec.jobs; ++t)
            workers.emplace_back([&, t] {
                for (int i = t; i < count; i += spec.jobs) run_instance(i);
            });
        for (auto& w : workers) w.join();
    }

    json bad = json::array();
    int perturbed_count = 0;
    for (int i = 0; i < count; ++i) {
        if (!disagreements[static_cast<std::size_t>(i)].is_null())
            bad.push_back(disagreements[static_cast<std::size_t>(i)]);
        perturbed_count += perturbed_flags[static_cast<std::size_t>(i)];
    }
    emit(json{{"semifield", std::string{K::name()}},
              {"n", n},
              {"instances", count},
              {"perturbed", perturbed_count},
              {"seed", spec.seed},
              {"all_agree", bad.empty()},
              {"disagreements", bad}});
    return 0;
}

template <typename Fn>
int dispatch_semifield(const json& doc, Fn&& fn) {
    if (document_semifield(doc) == "tropical")
        return fn.template operator()<TropicalInt>();
    return fn.template operator()<PositiveRational>();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with friezes, weak friezes, and T-paths on polygon "
                 "dissections"};
    app.require_subcommand(1);
    JobSpec spec;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* opt = cmd->add_option("--input", spec.input, "input JSON file");
        if (needs_input) opt->required();
        cmd->add_option("--format", spec.format, "output format: json, text, or svg")
            ->check(CLI::IsMember({"json", "text", "svg"}));
        cmd->add_option("--jobs", spec.jobs, "worker threads for per-pair scans")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--repeat-columns", spec.repeat_columns,
                        "repeat pattern columns for visual periodicity")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* tpaths = app.add_subcommand("tpaths", "enumerate T-paths between two vertices");
    add_common(tpaths, true);
    tpaths->add_option("--from", spec.from, "start vertex")->required();
    tpaths->add_option("--to", spec.to, "end vertex")->required();

    CLI::App* glue = app.add_subcommand("glue", "glue per-cell pieces into a weak frieze");
    add_common(glue, true);

    CLI::App* check = app.add_subcommand("check", "evaluate frieze properties of a value map");
    add_common(check, true);
    check->add_flag("--weak", spec.check_weak, "weak frieze w.r.t. the dissection");
    check->add_flag("--frieze", spec.check_frieze, "Ptolemy relation at every crossing pair");
    check->add_flag("--tpath", spec.check_tpath, "T-path expansion formula");
    check->add_flag("--theorem-a", spec.check_theorem_a,
                    "weak frieze and T-path formula, checked independently");
    check->add_flag("--unimodular", spec.check_unimodular, "diamond rule (needs unit edges)");

    CLI::App* pattern = app.add_subcommand("pattern", "render the frieze pattern strip");
    add_common(pattern, true);

    CLI::App* cc = app.add_subcommand("cc", "integer frieze from a triangulation");
    add_common(cc, true);

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized weak-frieze/T-path equivalence runs");
    add_common(fuzz, false);
    fuzz->add_option("--count", spec.fuzz_count, "number of instances")->check(CLI::PositiveNumber);
    fuzz->add_option("--n", spec.fuzz_n, "polygon size")->check(CLI::Range(3, 64));
    fuzz->add_option("--seed", spec.seed, "campaign seed");
    fuzz->add_option("--semifield", spec.fuzz_semifield, "rational or tropical")
        ->check(CLI::IsMember({"rational", "tropical"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fuzz->parsed()) {
            if (spec.fuzz_semifield == "tropical") return run_fuzz<TropicalInt>(spec);
            return run_fuzz<PositiveRational>(spec);
        }
        json doc = load_json_file(spec.input);
        PolygonSpec ps = load_polygon_spec(doc);
        if (tpaths->parsed())
            return dispatch_semifield(doc, [&]<Semifield K>() { return run_tpaths<K>(spec, ps, doc); });
        if (glue->parsed())
            return dispatch_semifield(doc, [&]<Semifield K>() { return run_glue<K>(spec, ps, doc); });
        if (check->parsed())
            return dispatch_semifield(doc, [&]<Semifield K>() { return run_check<K>(spec, ps, doc); });
        if (pattern->parsed())
            return dispatch_semifield(doc,
                                      [&]<Semifield K>() { return run_pattern<K>(spec, ps, doc); });
        if (cc->parsed()) {
            require_semifield(doc, "rational");
            return run_cc(spec, ps);
        }
    } catch (const GlueMismatchError& e) {
        emit(json{{"error",
                   json{{"kind", "glue_mismatch"},
                        {"message", e.what()},
                        {"diagonal", diagonal_json(e.diagonal)}}}});
        return 3;
    } catch (const ValidationError& e) {
        emit(json{{"error", json{{"kind", "validation"}, {"message", e.what()}}}});
        return 2;
    } catch (const std::exception& e) {
        emit(json{{"error", json{{"kind", "internal"}, {"message", e.what()}}}});
        return 4;
    }
    return 0;
}
