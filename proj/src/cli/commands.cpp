#include <kneser/alternation.hpp>
#include <kneser/circular.hpp>
#include <kneser/cli.hpp>
#include <kneser/coloring.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/graph_io.hpp>
#include <kneser/stability.hpp>
#include <kneser/topology.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace kneser::cli
{
    using json = nlohmann::json;

    namespace
    {
        struct CommonOptions
        {
            std::uint64_t budget = unlimited_budget;
            int threads = 1;
            bool allow_inconclusive = false;
            std::string format;
            std::string certificate_dir;
            std::string manifest;
            bool verify_cache = false;
        };

        void add_common_options(CLI::App & app, CommonOptions & options, const std::string & default_format)
        {
            options.format = default_format;
            app.add_option("--budget", options.budget, "Search-node budget per solver call");
            app.add_option("--threads", options.threads, "Worker threads for instance grids")->check(CLI::PositiveNumber);
            app.add_flag("--allow-inconclusive", options.allow_inconclusive,
                "Exit 0 when the only non-passing results are inconclusive");
            app.add_option("--format", options.format, "Output format")->check(CLI::IsMember({"text", "json"}));
            app.add_option("--certificate-dir", options.certificate_dir, "Directory for certificate files");
            app.add_option("--manifest", options.manifest, "Write a run manifest to this path");
            app.add_flag("--verify-cache", options.verify_cache,
                "Recompute a deterministic 10% sample of cache hits and compare");
        }

        // One line of a verification table.
        struct Row
        {
            json params;
            std::string verdict = "pass";
            std::string claim;
            std::string summary;
            json details = json::object();
            std::map<std::string, std::string> certificates;
            std::uint64_t nodes = 0;
        };

        using Job = std::function<Row()>;

        auto run_jobs(const std::vector<Job> & jobs, int threads) -> std::vector<Row>
        {
            std::vector<Row> rows(jobs.size());
            std::vector<std::exception_ptr> errors(jobs.size());
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                for (std::size_t i; (i = next++) < jobs.size();) {
                    try {
                        rows[i] = jobs[i]();
                    }
                    catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            };
            auto count = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(jobs.size(), 1));
            if (count <= 1)
                worker();
            else {
                std::vector<std::thread> pool;
                for (std::size_t t = 0; t < count; ++t)
                    pool.emplace_back(worker);
                for (auto & thread : pool)
                    thread.join();
            }
            for (auto & error : errors)
                if (error)
                    std::rethrow_exception(error);
            return rows;
        }

        auto status_verdict(SearchStatus status) -> std::string
        {
            return status == SearchStatus::found ? "pass"
                : status == SearchStatus::exhausted ? "fail"
                                                    : "inconclusive";
        }

        auto combine(const std::vector<Row> & rows) -> std::string
        {
            bool inconclusive = false;
            for (const auto & row : rows) {
                if (row.verdict == "fail")
                    return "fail";
                if (row.verdict == "inconclusive")
                    inconclusive = true;
            }
            return inconclusive ? "inconclusive" : "pass";
        }

        auto instance_name(const StableInstance & i) -> std::string
        {
            return std::to_string(i.n) + "_" + std::to_string(i.k) + "_" + std::to_string(i.s);
        }

        auto instance_json(const StableInstance & i) -> json
        {
            return {{"n", i.n}, {"k", i.k}, {"s", i.s}};
        }

        auto bipartite_json(const ColorfulBipartite & b) -> json
        {
            return {{"left", b.left}, {"right", b.right}, {"left_colours", b.left_colours},
                {"right_colours", b.right_colours}};
        }

        auto mask_json(Mask m) -> json { return elements_of(m); }

        auto chi_claim(const StableInstance & i) -> std::string
        {
            return "chi(KG_" + std::to_string(i.s) + "(" + std::to_string(i.n) + "," + std::to_string(i.k)
                + ")) = n - s(k-1) = " + std::to_string(i.n - i.s * (i.k - 1));
        }

        // Result of a command before certificate paths are attached; this is what the cache stores.
        struct Outcome
        {
            json report;
            std::map<std::string, std::string> certificates;
        };

        auto outcome_to_json(const Outcome & o) -> json
        {
            return {{"report", o.report}, {"certificates", o.certificates}};
        }

        auto outcome_from_json(const json & j) -> Outcome
        {
            return {j.at("report"), j.at("certificates").get<std::map<std::string, std::string>>()};
        }

        auto rows_outcome(const std::string & command, const json & params, const std::vector<Row> & rows,
            const std::string & claim) -> Outcome
        {
            Outcome outcome;
            json instances = json::array();
            std::uint64_t nodes = 0;
            for (const auto & row : rows) {
                json certificate_names = json::array();
                for (const auto & [name, text] : row.certificates) {
                    outcome.certificates[name] = text;
                    certificate_names.push_back(name);
                }
                instances.push_back({{"params", row.params}, {"verdict", row.verdict}, {"claim", row.claim},
                    {"summary", row.summary}, {"details", row.details}, {"certificates", certificate_names},
                    {"nodes", row.nodes}});
                nodes += row.nodes;
            }
            auto verdict = combine(rows);
            outcome.report = {{"command", command}, {"params", params}, {"verdict", verdict},
                {"proven", verdict == "pass"}, {"certificate", nullptr}, {"paper_ref", claim},
                {"runtime_nodes", nodes}, {"version", tool_version}, {"format_version", format_version},
                {"instances", instances}};
            return outcome;
        }

        auto write_text_file(const std::filesystem::path & path, const std::string & text)
        {
            if (path.has_parent_path()) {
                std::error_code ec;
                std::filesystem::create_directories(path.parent_path(), ec);
            }
            std::ofstream out(path, std::ios::binary);
            out << text;
            if (! out)
                throw IoError("cannot write '" + path.string() + "'");
        }

        auto exit_for(const std::string & verdict, bool allow_inconclusive) -> int
        {
            if (verdict == "fail")
                return static_cast<int>(ExitCode::falsified);
            if (verdict == "inconclusive" && ! allow_inconclusive)
                return static_cast<int>(ExitCode::inconclusive);
            return static_cast<int>(ExitCode::pass);
        }

        // Cache lookup, certificate output, printing and manifest writing shared by solve and verify.
        auto finish(const std::string & command, const json & params, const CommonOptions & options,
            const std::function<Outcome()> & compute, std::ostream & out) -> int
        {
            auto started = std::chrono::steady_clock::now();
            json cache_params = params;
            cache_params["budget"] = options.budget == unlimited_budget ? json("unlimited") : json(options.budget);

            Outcome outcome;
            const char * cache_dir = std::getenv("KNESER_CACHE_DIR");
            if (cache_dir && *cache_dir) {
                ResultCache cache(cache_dir);
                auto key = ResultCache::key_for(command, cache_params);
                if (auto hit = cache.lookup(key)) {
                    outcome = outcome_from_json(*hit);
                    bool ci = options.verify_cache || std::getenv("KNESER_CACHE_VERIFY") != nullptr;
                    if (ci && ResultCache::sampled_for_verification(key)) {
                        auto fresh = compute();
                        if (outcome_to_json(fresh) != *hit)
                            throw IoError("cached result for '" + command + "' disagrees with a fresh computation");
                    }
                }
                else {
                    outcome = compute();
                    cache.store(key, outcome_to_json(outcome));
                }
            }
            else
                outcome = compute();

            auto report = outcome.report;
            json certificate_paths = json::array();
            if (! options.certificate_dir.empty()) {
                std::filesystem::path dir(options.certificate_dir);
                for (const auto & [name, text] : outcome.certificates) {
                    write_text_file(dir / name, text);
                    certificate_paths.push_back((dir / name).string());
                }
                if (report.contains("instances"))
                    for (auto & instance : report["instances"]) {
                        json paths = json::array();
                        for (const auto & name : instance["certificates"])
                            paths.push_back((dir / name.get<std::string>()).string());
                        instance["certificates"] = paths;
                    }
                if (certificate_paths.size() == 1)
                    report["certificate"] = certificate_paths[0];
                else if (! certificate_paths.empty())
                    report["certificate"] = options.certificate_dir;
            }

            if (options.format == "json")
                out << report.dump(2) << '\n';
            else if (report.contains("instances")) {
                out << report["command"].get<std::string>() << '\n';
                for (const auto & instance : report["instances"])
                    out << "  " << std::left << std::setw(13) << instance["verdict"].get<std::string>()
                        << std::setw(28) << instance["params"].dump() << ' ' << instance["summary"].get<std::string>()
                        << '\n';
                out << "verdict: " << report["verdict"].get<std::string>() << " (" << report["instances"].size()
                    << " instances, " << report["runtime_nodes"].get<std::uint64_t>() << " nodes)\n";
            }
            else {
                out << report["command"].get<std::string>() << ": " << report["value"].dump()
                    << (report["proven"].get<bool>() ? " (proven)" : " (inconclusive)") << '\n';
            }

            if (! options.manifest.empty()) {
                auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started);
                json manifest{{"command", command}, {"parameters", cache_params}, {"format_version", format_version},
                    {"version", tool_version}, {"wall_time_ms", elapsed.count()},
                    {"result_digest", sha256_hex(outcome.report.dump())}, {"certificates", certificate_paths},
                    {"report", report}};
                write_text_file(options.manifest, manifest.dump(2) + "\n");
            }

            std::string verdict = report.contains("verdict") ? report["verdict"].get<std::string>()
                : report["proven"].get<bool>()                ? "pass"
                                                              : "inconclusive";
            return exit_for(verdict, options.allow_inconclusive);
        }

        // ---------------------------------------------------------------- verify jobs

        auto stsable_jobs(int k_max, const std::vector<int> & s_values, int n_max, std::uint64_t budget)
            -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (int k = 1; k <= k_max; ++k)
                for (int s : s_values) {
                    if (s < 2 || s % 2 != 0)
                        throw PreconditionError("stsable verification needs even s >= 2");
                    for (int n = std::max((s + 2) * k - 2, s * k); n <= n_max; ++n)
                        jobs.push_back([=] {
                            auto r = verify_stsable(k, s, n, budget);
                            Row row;
                            row.params = {{"k", k}, {"s", s}, {"n", n}};
                            row.claim = "every 2-stable ((s/2)(k-1)+1)-subset of [n] contains an s-stable k-subset;"
                                        " salt under the identity is s(k-1)+1";
                            row.verdict = r.budget_exceeded ? "inconclusive" : r.pass() ? "pass" : "fail";
                            row.details = {{"subsets_checked", r.subsets_checked}, {"extraction_ok", r.extraction_ok},
                                {"salt_identity", r.salt_identity}, {"salt_expected", r.salt_expected}};
                            if (r.counterexample)
                                row.details["counterexample"] = mask_json(*r.counterexample);
                            row.summary = std::to_string(r.subsets_checked) + " subsets, salt "
                                + std::to_string(r.salt_identity) + "/" + std::to_string(r.salt_expected);
                            row.nodes = r.subsets_checked;
                            return row;
                        });
                }
            return jobs;
        }

        auto case2_jobs(const std::vector<int> & s_values) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (int s : s_values)
                jobs.push_back([=] {
                    if (s < 2 || s % 2 != 0)
                        throw PreconditionError("case2 verification needs even s >= 2");
                    int n = 2 * s + 2;
                    Row row;
                    row.params = {{"s", s}, {"n", n}};
                    row.claim = "a 2-stable (s/2+1)-subset of [2s+2] has a, a' with a - a' in {s, s+1, s+2}";
                    std::uint64_t checked = 0;
                    for (Mask set : two_stable_subsets(n, s / 2 + 1)) {
                        ++checked;
                        auto [a, b] = find_pair_case2(set, n, s);
                        int gap = ((a - b) % n + n) % n;
                        if (! contains(set, a) || ! contains(set, b) || gap < s || gap > s + 2) {
                            row.verdict = "fail";
                            row.details["counterexample"] = mask_json(set);
                            break;
                        }
                    }
                    row.details["subsets_checked"] = checked;
                    row.summary = std::to_string(checked) + " subsets";
                    row.nodes = checked;
                    return row;
                });
            return jobs;
        }

        auto colorful_jobs(const std::vector<StableInstance> & grid, int klm_max_palette, std::uint64_t budget)
            -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto instance : grid)
                jobs.push_back([=] {
                    auto g = stable_kneser_graph(instance.n, instance.k, instance.s);
                    int r = instance.n - instance.s * (instance.k - 1);
                    auto chi = chromatic_number(g, budget);
                    Row row;
                    row.params = instance_json(instance);
                    row.claim = chi_claim(instance) + "; every optimal colouring has a colorful K_{floor(t/2),ceil(t/2)}"
                                " with t = n - s(k-1)";
                    row.nodes = chi.nodes;
                    row.details["chi"] = chi.value;
                    if (chi.status != SearchStatus::found) {
                        row.verdict = "inconclusive";
                        row.summary = "chromatic number not settled";
                        return row;
                    }
                    if (chi.value != r)
                        row.verdict = "fail";
                    std::vector<std::pair<std::string, Coloring>> colourings{
                        {"solver", *chi.colouring}, {"min-element", min_element_coloring(instance.n, instance.k, instance.s)}};
                    json found = json::object();
                    for (const auto & [name, c] : colourings) {
                        row.certificates["colorful_" + instance_name(instance) + "_" + name + ".col"] =
                            colouring_certificate(g, c);
                        auto search = find_colorful_bipartite(g, c, r, budget);
                        row.nodes += search.nodes;
                        if (search.status != SearchStatus::found) {
                            if (row.verdict == "pass")
                                row.verdict = status_verdict(search.status);
                            found[name] = nullptr;
                            continue;
                        }
                        auto violation = colorful_bipartite_violation(g, c, *search.subgraph);
                        if (! violation.empty())
                            row.verdict = "fail";
                        found[name] = bipartite_json(*search.subgraph);
                    }
                    row.details["colorful"] = found;

                    int partitions = 0, partitions_found = 0;
                    if (r <= klm_max_palette)
                        for (const auto & [name, c] : colourings)
                            for (Mask a = 1; a + 1 < (Mask{1} << r); ++a) {
                                std::vector<int> left, right;
                                for (int colour = 1; colour <= r; ++colour)
                                    (contains(a, colour) ? left : right).push_back(colour);
                                auto search = find_klm_for_partition(g, c, left, right, budget);
                                row.nodes += search.nodes;
                                ++partitions;
                                if (search.status == SearchStatus::found)
                                    ++partitions_found;
                                else if (row.verdict == "pass")
                                    row.verdict = status_verdict(search.status);
                            }
                    row.details["klm_partitions"] = partitions;
                    row.details["klm_found"] = partitions_found;
                    row.summary = "chi " + std::to_string(chi.value) + ", colorful K with t=" + std::to_string(r)
                        + (partitions ? ", K_{l,m} " + std::to_string(partitions_found) + "/" + std::to_string(partitions) : "");
                    return row;
                });
            return jobs;
        }

        auto tight_cycle_jobs(const std::vector<StableInstance> & grid, int bipartite_max, std::uint64_t budget)
            -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto instance : grid)
                jobs.push_back([=] {
                    auto g = stable_kneser_graph(instance.n, instance.k, instance.s);
                    int r = instance.n - instance.s * (instance.k - 1);
                    auto chi = chromatic_number(g, budget);
                    Row row;
                    row.params = instance_json(instance);
                    row.claim = "every (n-s(k-1))-colouring of KG_s(n,k) has a tight cycle (n, s even)";
                    row.nodes = chi.nodes;
                    if (chi.status != SearchStatus::found) {
                        row.verdict = "inconclusive";
                        return row;
                    }
                    std::vector<std::pair<std::string, Coloring>> colourings{{"solver", Coloring(g, chi.colouring->colours(), r)},
                        {"min-element", min_element_coloring(instance.n, instance.k, instance.s)}};
                    for (const auto & [name, c] : colourings) {
                        auto cycle = find_tight_cycle(g, c, r);
                        row.nodes += cycle.arcs_examined;
                        if (! cycle.cycle || ! is_tight_cycle(g, c, r, *cycle.cycle))
                            row.verdict = "fail";
                        row.details[name] = cycle.cycle ? json(*cycle.cycle) : json(nullptr);
                    }
                    row.summary = "tight cycles in solver and min-element colourings";
                    return row;
                });

            jobs.push_back([] {
                // C5 has chi_c = 5/2 < 3, so some proper 3-colouring has no tight cycle
                auto g = cycle_graph(5);
                Row row;
                row.params = {{"graph", "c5"}, {"r", 3}};
                row.claim = "chi_c(C5) < 3: some proper 3-colouring of C5 has no tight cycle";
                int colourings = 0, without = 0;
                std::vector<int> c(5);
                for (int code = 0; code < 243; ++code) {
                    for (int v = 0, x = code; v < 5; ++v, x /= 3)
                        c[v] = x % 3 + 1;
                    if (! is_proper_colouring(g, c))
                        continue;
                    ++colourings;
                    if (! find_tight_cycle(g, Coloring(g, c, 3), 3).cycle)
                        ++without;
                }
                row.verdict = without > 0 ? "pass" : "fail";
                row.details = {{"proper_colourings", colourings}, {"without_tight_cycle", without}};
                row.summary = std::to_string(without) + " of " + std::to_string(colourings) + " colourings lack one";
                return row;
            });

            for (int r = 4; r <= bipartite_max; r += 2)
                jobs.push_back([r] {
                    // K_{r/2,r/2}: left vertices take the odd colours, right the even ones
                    int half = r / 2;
                    std::vector<Edge> edges;
                    for (int u = 0; u < half; ++u)
                        for (int v = half; v < r; ++v)
                            edges.emplace_back(u, v);
                    SimpleGraph g(r, edges);
                    std::vector<int> colours(r);
                    for (int i = 0; i < half; ++i) {
                        colours[i] = 2 * i + 1;
                        colours[half + i] = 2 * i + 2;
                    }
                    Coloring c(g, colours, r);
                    auto cycle = find_tight_cycle(g, c, r);
                    Row row;
                    row.params = {{"complete_bipartite", half}, {"r", r}};
                    row.claim = "K_{r/2,r/2} with colours alternating 1..r across the sides contains a tight cycle";
                    row.verdict = cycle.cycle && is_tight_cycle(g, c, r, *cycle.cycle) ? "pass" : "fail";
                    row.details["cycle"] = cycle.cycle ? json(*cycle.cycle) : json(nullptr);
                    row.summary = cycle.cycle ? "cycle of length " + std::to_string(cycle.cycle->size()) : "none";
                    return row;
                });
            return jobs;
        }

        auto chic_jobs(const std::vector<StableInstance> & grid, std::uint64_t budget) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto instance : grid)
                jobs.push_back([=] {
                    auto g = stable_kneser_graph(instance.n, instance.k, instance.s);
                    int r = instance.n - instance.s * (instance.k - 1);
                    auto result = circular_chromatic_number(g, budget);
                    Row row;
                    row.params = instance_json(instance);
                    row.claim = "chi_c(KG_s(n,k)) = n - s(k-1) for even n and even s";
                    row.nodes = result.nodes;
                    row.details = {{"value", result.value.to_string()}, {"chi", result.chromatic},
                        {"refuted", result.refutations.size()}};
                    json refutations = json::array();
                    for (const auto & f : result.refutations)
                        refutations.push_back({{"fraction", f.fraction.to_string()}, {"nodes", f.nodes}});
                    row.details["refutations"] = refutations;
                    if (result.status != SearchStatus::found) {
                        row.verdict = "inconclusive";
                        row.summary = "interval (" + (result.largest_refuted ? result.largest_refuted->to_string() : "?")
                            + ", " + result.value.to_string() + "]";
                        return row;
                    }
                    row.verdict = result.value == CircularNumber(r, 1) ? "pass" : "fail";
                    row.summary = "chi_c = " + result.value.to_string() + ", " + std::to_string(result.refutations.size())
                        + " fractions refuted";
                    row.certificates["chic_" + instance_name(instance) + ".cert"] = circular_certificate(g, result);
                    return row;
                });
            return jobs;
        }

        auto gale_jobs(const std::vector<StableInstance> & grid, std::uint64_t budget) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto instance : grid)
                jobs.push_back([=] {
                    auto cfg = gale_configuration(instance.n, instance.k, instance.s);
                    auto r = hemisphere_check(cfg, budget);
                    Row row;
                    row.params = instance_json(instance);
                    row.claim = "every open hemisphere of S^{n-s(k-1)-2} contains an s-stable k-subset";
                    row.verdict = r.budget_exceeded ? "inconclusive" : r.pass() ? "pass" : "fail";
                    row.nodes = r.patterns;
                    row.details = {{"d", r.d}, {"p", cfg.p}, {"within_hypothesis", cfg.within_hypothesis},
                        {"patterns", r.patterns}, {"realizable", r.realizable}, {"failures", r.failures},
                        {"constructions_ok", r.constructions_ok}, {"loosely_realizable", r.loosely_realizable},
                        {"loose_failures", r.loose_failures}};
                    if (r.counterexample) {
                        row.details["counterexample"] = r.counterexample->to_string();
                        row.certificates["gale_" + instance_name(instance) + "_counterexample.json"] =
                            json{{"params", row.params}, {"pattern", r.counterexample->to_string()}}.dump(2) + "\n";
                    }
                    row.summary = "d=" + std::to_string(r.d) + ", " + std::to_string(r.realizable)
                        + " realizable patterns, " + std::to_string(r.failures) + " failures";
                    return row;
                });
            return jobs;
        }

        auto threshold_jobs(int k_max, int s_max, int n_span, int induced_samples, std::uint64_t budget)
            -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (int k = 1; k <= k_max; ++k)
                for (int s = 1; s <= s_max; ++s)
                    jobs.push_back([=] {
                        Row row;
                        row.params = {{"k", k}, {"s", s}};
                        row.claim = "n >= 2k^2(k-1)+(s-1)k(k-1)+1 implies chi_c(KG_s(n,k)) = chi(KG_s(n,k)) via"
                                    " phi >= |V|/alpha_bar >= 2n";
                        auto threshold = threshold_report(s * k, k, s, false).stable_threshold;
                        int checked = 0, exact = 0;
                        for (int n = std::max(s * k, 2); n <= threshold + n_span; ++n) {
                            auto r = threshold_report(n, k, s, true, budget);
                            ++checked;
                            if (! r.chain_consistent) {
                                row.verdict = "fail";
                                row.details["chain_failure_n"] = n;
                                break;
                            }
                            if (r.exact_attempted) {
                                ++exact;
                                bool settled = (! r.circular || r.circular->status == SearchStatus::found)
                                    && r.free && (r.free->infinite || r.free->status == SearchStatus::found);
                                if (! r.exact_consistent) {
                                    row.verdict = "fail";
                                    row.details["exact_failure_n"] = n;
                                    break;
                                }
                                if (! settled && row.verdict == "pass")
                                    row.verdict = "inconclusive";
                                row.nodes += (r.circular ? r.circular->nodes : 0) + (r.free ? r.free->nodes : 0);
                            }
                        }
                        row.details["threshold"] = threshold;
                        row.details["n_checked"] = checked;
                        row.details["exact_instances"] = exact;
                        row.summary = "threshold " + std::to_string(threshold) + ", " + std::to_string(checked)
                            + " values of n, " + std::to_string(exact) + " exact";
                        return row;
                    });

            // the induced-subgraph theorem on sampled subgraphs above its vertex bound
            for (auto [n, k] : std::vector<std::pair<int, int>>{{8, 2}, {9, 2}})
                jobs.push_back([=, n = n, k = k] {
                    Row row;
                    row.params = {{"n", n}, {"k", k}, {"samples", induced_samples}};
                    row.claim = "induced subgraphs H of KG(n,k) with |V(H)| >= (2k^2(k-1)/n)C(n,k) satisfy"
                                " phi(H) >= 2n-2 > 2chi(H)";
                    auto g = kneser_graph(n, k);
                    auto bound = threshold_report(n, k, 1, false).induced_vertex_bound;
                    int minimum = static_cast<int>((bound.numerator() + bound.denominator() - 1) / bound.denominator());
                    std::mt19937_64 rng(0x5eed + n);
                    json samples = json::array();
                    for (int sample = 0; sample < induced_samples; ++sample) {
                        std::vector<int> vertices(g.order());
                        std::iota(vertices.begin(), vertices.end(), 0);
                        std::shuffle(vertices.begin(), vertices.end(), rng);
                        int size = minimum + static_cast<int>(rng() % (g.order() - minimum + 1));
                        vertices.resize(size);
                        std::sort(vertices.begin(), vertices.end());
                        auto h = g.induced_subgraph(vertices);
                        auto phi = free_chromatic_number(h, budget, h.order());
                        auto chi = chromatic_number(h, budget);
                        row.nodes += phi.nodes + chi.nodes;
                        bool settled = (phi.infinite || phi.status == SearchStatus::found) && chi.status == SearchStatus::found;
                        if (! settled) {
                            if (row.verdict == "pass")
                                row.verdict = "inconclusive";
                            continue;
                        }
                        bool ok = phi.infinite
                            || (static_cast<std::int64_t>(phi.value) * phi.alpha_bar >= h.order()
                                && phi.value >= 2 * n - 2 && phi.value >= 2 * chi.value);
                        if (! ok)
                            row.verdict = "fail";
                        samples.push_back({{"vertices", h.order()}, {"alpha_bar", phi.alpha_bar},
                            {"phi", phi.infinite ? json("infinity") : json(phi.value)}, {"chi", chi.value}});
                    }
                    row.details = {{"vertex_bound", minimum}, {"samples", samples}};
                    row.summary = std::to_string(samples.size()) + " induced subgraphs with >= " + std::to_string(minimum)
                        + " vertices";
                    return row;
                });
            return jobs;
        }

        auto hilton_milner_jobs(const std::vector<std::pair<int, int>> & grid, std::uint64_t budget) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto [n, k] : grid)
                jobs.push_back([=, n = n, k = k] {
                    auto r = hilton_milner_check(n, k, budget);
                    Row row;
                    row.params = {{"n", n}, {"k", k}};
                    row.claim = "independent sets of KG(n,k) of size >= C(n-1,k-1)-C(n-k-1,k-1)+2 share an element;"
                                " alpha_bar <= C(n-1,k-1)-C(n-k-1,k-1) <= kC(n-2,k-2)";
                    row.verdict = r.budget_exceeded ? "inconclusive" : r.pass() ? "pass" : "fail";
                    row.nodes = r.maximal_sets;
                    row.details = {{"bound", r.bound}, {"free_bound", r.free_bound}, {"relaxed_bound", r.relaxed_bound},
                        {"maximal_sets", r.maximal_sets}, {"large_sets", r.large_sets}, {"alpha_bar", r.alpha_bar}};
                    if (r.counterexample) {
                        json family = json::array();
                        for (Mask m : *r.counterexample)
                            family.push_back(mask_json(m));
                        row.details["counterexample"] = family;
                    }
                    row.summary = "bound " + std::to_string(r.bound) + ", " + std::to_string(r.large_sets)
                        + " large maximal sets, alpha_bar " + std::to_string(r.alpha_bar);
                    return row;
                });
            return jobs;
        }

        auto tucker_jobs(const std::vector<StableInstance> & grid, const std::vector<AlternationMode> & modes,
            std::uint64_t budget) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (auto instance : grid)
                for (auto mode : modes)
                    for (std::string colouring_name : {"min-element", "solver"})
                        jobs.push_back([=] {
                            auto h = stable_hypergraph(instance.n, instance.k, instance.s);
                            auto g = general_kneser_graph(h);
                            Coloring c;
                            Row row;
                            row.params = instance_json(instance);
                            row.params["mode"] = mode == AlternationMode::alt ? "alt" : "salt";
                            row.params["colouring"] = colouring_name;
                            row.claim = "the label map is antipodal without complementary edges, reaches |lambda| >= n,"
                                        " and its witness yields a colorful bipartite subgraph";
                            if (colouring_name == "solver") {
                                auto chi = chromatic_number(g, budget);
                                row.nodes += chi.nodes;
                                if (chi.status != SearchStatus::found) {
                                    row.verdict = "inconclusive";
                                    return row;
                                }
                                c = *chi.colouring;
                            }
                            else
                                c = min_element_coloring(instance.n, instance.k, instance.s);
                            std::vector<int> identity(instance.n);
                            std::iota(identity.begin(), identity.end(), 1);
                            LabelMap map(h, identity, c, mode);
                            auto report = verify_tucker_conditions(map);
                            row.nodes += report.pairs_checked;
                            row.details = {{"threshold", report.threshold}, {"antipodal", report.antipodal},
                                {"complementary_edge", report.complementary_edge.has_value()},
                                {"max_label", report.max_label}, {"pairs_checked", report.pairs_checked}};
                            if (! report.pass()) {
                                row.verdict = "fail";
                                row.summary = "Tucker conditions violated";
                                return row;
                            }
                            auto b = extract_colorful_from_witness(map, *report.witness);
                            auto cross = find_colorful_bipartite(g, c, map.target_size(), budget);
                            row.nodes += cross.nodes;
                            bool ok = colorful_bipartite_violation(g, c, b).empty()
                                && static_cast<int>(b.left.size() + b.right.size()) == std::max(map.target_size(), 0)
                                && cross.status == SearchStatus::found;
                            row.verdict = ok ? "pass" : "fail";
                            row.details["witness"] = report.witness->to_string();
                            row.details["bipartite"] = bipartite_json(b);
                            row.certificates["tucker_" + instance_name(instance) + "_" + row.params["mode"].get<std::string>()
                                + "_" + colouring_name + ".json"] =
                                json{{"params", row.params}, {"witness", report.witness->to_string()},
                                    {"label", map.evaluate(*report.witness)}, {"bipartite", bipartite_json(b)},
                                    {"colouring", c.colours()}}
                                    .dump(2)
                                + "\n";
                            row.summary = "max |lambda| " + std::to_string(report.max_label) + ", K_{"
                                + std::to_string(b.left.size()) + "," + std::to_string(b.right.size()) + "}";
                            return row;
                        });
            return jobs;
        }

        auto theorem_a_jobs(const std::vector<std::string> & inputs, std::uint64_t budget) -> std::vector<Job>
        {
            std::vector<Job> jobs;
            for (const auto & input : inputs)
                jobs.push_back([=] {
                    auto h = resolve_hypergraph(input);
                    auto strategy = h.ground_size() <= max_exhaustive_ground_size ? AlternationStrategy::exhaustive
                                                                                   : AlternationStrategy::heuristic;
                    auto bound = theorem_a_bound(h, strategy);
                    auto chi = chromatic_number(general_kneser_graph(h), budget);
                    Row row;
                    row.params = {{"hypergraph", input}};
                    row.claim = "chi(KG(H)) >= max(|V(H)| - alt(H), |V(H)| - salt(H) + 1)";
                    row.nodes = chi.nodes;
                    row.details = {{"bound", bound.value}, {"proven_bound", bound.proven}, {"alt", bound.alt.value},
                        {"salt", bound.salt.value}, {"chi", chi.value}};
                    if (chi.status != SearchStatus::found)
                        row.verdict = "inconclusive";
                    else
                        row.verdict = bound.value <= chi.value ? "pass" : "fail";
                    if (h.ground_size() <= max_defect_ground_size && chi.status == SearchStatus::found) {
                        auto cd = colorability_defect(h);
                        row.details["cd"] = cd.value;
                        if (cd.value > chi.value)
                            row.verdict = "fail";
                    }
                    row.summary = "bound " + std::to_string(bound.value) + " <= chi " + std::to_string(chi.value);
                    return row;
                });
            return jobs;
        }

        // ---------------------------------------------------------------- solve

        auto solve_outcome(const std::string & metric, const std::string & input, const std::string & strategy_name,
            std::uint64_t budget) -> Outcome
        {
            Outcome outcome;
            json value;
            bool proven = true;
            std::uint64_t nodes = 0;
            std::string claim;
            json details = json::object();
            std::string safe = input;
            for (auto & ch : safe)
                if (! std::isalnum(static_cast<unsigned char>(ch)))
                    ch = '_';

            if (metric == "alt" || metric == "salt" || metric == "cd") {
                auto h = resolve_hypergraph(input);
                if (metric == "cd") {
                    auto cd = colorability_defect(h);
                    value = cd.value;
                    details = {{"removed", mask_json(cd.removed)}, {"colour_class", mask_json(cd.colour_class)}};
                    claim = "colorability defect: fewest vertices whose removal leaves a 2-colourable hypergraph";
                }
                else {
                    auto mode = metric == "alt" ? AlternationMode::alt : AlternationMode::salt;
                    auto strategy = strategy_name == "identity"    ? AlternationStrategy::identity_only
                        : strategy_name == "heuristic"             ? AlternationStrategy::heuristic
                        : strategy_name == "exhaustive"            ? AlternationStrategy::exhaustive
                        : h.ground_size() <= max_exhaustive_ground_size ? AlternationStrategy::exhaustive
                                                                        : AlternationStrategy::heuristic;
                    auto report = alt_full(h, mode, strategy);
                    value = report.value;
                    proven = report.proven_minimum;
                    nodes = report.bijections_examined;
                    details = {{"witness_sigma", report.witness_sigma}, {"witness_vector", report.witness_vector.to_string()},
                        {"bijections_examined", report.bijections_examined}};
                    claim = metric == "alt" ? "alt(H): minimum over bijections of the largest admissible alternation"
                                            : "salt(H): minimum over bijections of the largest one-sided admissible alternation";
                    outcome.certificates[metric + "_" + safe + ".json"] = json{{"value", report.value},
                        {"sigma", report.witness_sigma}, {"vector", report.witness_vector.to_string()}}.dump(2) + "\n";
                }
            }
            else {
                auto g = resolve_graph(input);
                if (metric == "chi") {
                    auto r = chromatic_number(g, budget);
                    proven = r.status == SearchStatus::found;
                    value = proven ? json(r.value) : json{{"lower", r.lower_bound}, {"upper", r.upper_bound}};
                    nodes = r.nodes;
                    details = {{"clique", r.clique}};
                    json refutations = json::array();
                    for (auto [k, n] : r.refutations)
                        refutations.push_back({{"colours", k}, {"nodes", n}});
                    details["refutations"] = refutations;
                    claim = "exact chromatic number";
                    if (r.colouring)
                        outcome.certificates["chi_" + safe + ".col"] = colouring_certificate(g, *r.colouring);
                }
                else if (metric == "chic") {
                    auto r = circular_chromatic_number(g, budget);
                    proven = r.status == SearchStatus::found;
                    value = proven ? json(r.value.to_string())
                                   : json{{"above", r.largest_refuted ? json(r.largest_refuted->to_string()) : json(nullptr)},
                                         {"at_most", r.value.to_string()}};
                    nodes = r.nodes;
                    details = {{"chi", r.chromatic}, {"refuted", r.refutations.size()}};
                    claim = "exact circular chromatic number: minimum p/q with a homomorphism into K_{p/q}";
                    if (proven && r.homomorphism)
                        outcome.certificates["chic_" + safe + ".cert"] = circular_certificate(g, r);
                }
                else if (metric == "phi") {
                    auto r = free_chromatic_number(g, budget);
                    proven = r.infinite || r.status == SearchStatus::found;
                    value = r.infinite ? json("infinity") : proven ? json(r.value) : json{{"lower", r.lower_bound}};
                    nodes = r.nodes;
                    details = {{"alpha_bar", r.alpha_bar}};
                    if (r.blocking_vertex)
                        details["blocking_vertex"] = *r.blocking_vertex;
                    claim = "free chromatic number: fewest free independent sets partitioning V(G)";
                    if (proven)
                        outcome.certificates["phi_" + safe + ".cert"] = free_partition_certificate(r);
                }
                else if (metric == "alpha-free") {
                    auto r = max_free_independent_size(g, budget);
                    proven = r.status == SearchStatus::found;
                    value = r.value;
                    nodes = r.nodes;
                    details = {{"set", members(r.set)}};
                    if (r.witness)
                        details["witness_edge"] = {r.witness->first, r.witness->second};
                    claim = "largest free independent set";
                }
                else
                    throw PreconditionError("unknown metric '" + metric + "'");
            }
            outcome.report = {{"command", "solve " + metric}, {"params", {{"input", input}}}, {"value", value},
                {"proven", proven}, {"certificate", nullptr}, {"paper_ref", claim}, {"runtime_nodes", nodes},
                {"version", tool_version}, {"format_version", format_version}, {"details", details}};
            return outcome;
        }

        // ---------------------------------------------------------------- report

        auto report_command(const std::vector<std::string> & paths, const std::string & format, std::ostream & out) -> int
        {
            json rows = json::array();
            for (const auto & path : paths) {
                std::ifstream in(path);
                if (! in)
                    throw IoError("cannot open manifest '" + path + "'");
                auto manifest = json::parse(in, nullptr, false);
                if (manifest.is_discarded() || ! manifest.contains("report"))
                    throw IoError("'" + path + "' is not a run manifest");
                const auto & report = manifest["report"];
                if (report.contains("instances"))
                    for (const auto & instance : report["instances"])
                        rows.push_back({{"command", report["command"]}, {"instance", instance["params"]},
                            {"verdict", instance["verdict"]}, {"claim", instance["claim"]}});
                else
                    rows.push_back({{"command", report["command"]}, {"instance", report["params"]},
                        {"verdict", report["proven"].get<bool>() ? "pass" : "inconclusive"}, {"claim", report["paper_ref"]},
                        {"value", report["value"]}});
            }
            bool flagged = false;
            for (const auto & row : rows)
                flagged = flagged || row["verdict"] != "pass";
            if (format == "json")
                out << json{{"rows", rows}, {"flagged", flagged}}.dump(2) << '\n';
            else {
                out << std::left << std::setw(22) << "command" << std::setw(40) << "instance" << std::setw(14) << "verdict"
                    << "claim\n";
                for (const auto & row : rows)
                    out << std::setw(22) << row["command"].get<std::string>() << std::setw(40) << row["instance"].dump()
                        << std::setw(14) << (row["verdict"] == "pass" ? std::string("pass") : "! " + row["verdict"].get<std::string>())
                        << row["claim"].get<std::string>() << '\n';
            }
            return static_cast<int>(ExitCode::pass);
        }

        // ---------------------------------------------------------------- gen

        auto gen_command(const std::string & family, const std::vector<std::string> & params, bool allow_degenerate,
            const std::string & output, const std::string & manifest_path, std::ostream & out) -> int
        {
            auto number = [&](std::size_t i) {
                if (i >= params.size())
                    throw PreconditionError("gen " + family + ": missing parameter " + std::to_string(i + 1));
                try {
                    return std::stoi(params[i]);
                }
                catch (const std::exception &) {
                    throw PreconditionError("gen " + family + ": bad parameter '" + params[i] + "'");
                }
            };
            std::ostringstream text;
            json parameters = params;
            if (family == "kneser")
                write_graph(text, kneser_graph(number(0), number(1), {.allow_degenerate = allow_degenerate}));
            else if (family == "stable")
                write_graph(text, stable_kneser_graph(number(0), number(1), number(2)));
            else if (family == "circular")
                write_graph(text, circular_complete_graph(number(0), number(1)));
            else if (family == "hypergraph") {
                if (params.empty())
                    throw PreconditionError("gen hypergraph needs 'complete N K' or 'stable N K S'");
                std::vector<std::string> rest(params.begin() + 1, params.end());
                auto at = [&](std::size_t i) {
                    if (i >= rest.size())
                        throw PreconditionError("gen hypergraph: missing parameter");
                    return std::stoi(rest[i]);
                };
                if (params[0] == "complete")
                    write_hypergraph(text, complete_uniform_hypergraph(at(0), at(1)));
                else if (params[0] == "stable")
                    write_hypergraph(text, stable_hypergraph(at(0), at(1), at(2)));
                else
                    throw PreconditionError("unknown hypergraph kind '" + params[0] + "'");
            }
            else
                throw PreconditionError("unknown family '" + family + "'");

            if (output.empty())
                out << text.str();
            else {
                write_text_file(output, text.str());
                auto path = manifest_path.empty() ? output + ".manifest.json" : manifest_path;
                json report{{"command", "gen " + family}, {"params", parameters}, {"value", output}, {"proven", true},
                    {"certificate", output}, {"paper_ref", "generator output"}, {"runtime_nodes", 0},
                    {"version", tool_version}, {"format_version", format_version}};
                json manifest{{"command", "gen " + family}, {"parameters", parameters}, {"format_version", format_version},
                    {"version", tool_version}, {"wall_time_ms", 0}, {"result_digest", sha256_hex(text.str())},
                    {"certificates", json::array({output})}, {"report", report}};
                write_text_file(path, manifest.dump(2) + "\n");
            }
            return static_cast<int>(ExitCode::pass);
        }
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Kneser-type graph toolkit: generators, exact solvers and verification grids", "kneser"};
        app.require_subcommand(1);
        app.set_version_flag("--version", std::string(tool_version));

        // gen
        auto * gen = app.add_subcommand("gen", "Write a graph or hypergraph in the interchange format");
        std::string gen_family, gen_output, gen_manifest;
        std::vector<std::string> gen_params;
        bool allow_degenerate = false;
        gen->add_option("family", gen_family, "kneser | stable | circular | hypergraph")->required()
            ->check(CLI::IsMember({"kneser", "stable", "circular", "hypergraph"}));
        gen->add_option("params", gen_params, "Generator parameters");
        gen->add_option("-o,--output", gen_output, "Output file (stdout when omitted)");
        gen->add_option("--manifest", gen_manifest, "Manifest path (default <output>.manifest.json)");
        gen->add_flag("--allow-degenerate", allow_degenerate, "Permit KG(n,k) with n < 2k");

        // solve
        auto * solve = app.add_subcommand("solve", "Compute one invariant exactly");
        CommonOptions solve_options;
        add_common_options(*solve, solve_options, "json");
        std::string metric, input, strategy = "auto";
        solve->add_option("metric", metric, "chi | chic | phi | alpha-free | alt | salt | cd")->required()
            ->check(CLI::IsMember({"chi", "chic", "phi", "alpha-free", "alt", "salt", "cd"}));
        solve->add_option("input", input, "Built-in name or file")->required();
        solve->add_option("--strategy", strategy, "alt/salt: auto | exhaustive | identity | heuristic")
            ->check(CLI::IsMember({"auto", "exhaustive", "identity", "heuristic"}));

        // verify
        auto * verify = app.add_subcommand("verify", "Run a verification grid");
        verify->require_subcommand(1);
        CommonOptions verify_options;
        add_common_options(*verify, verify_options, "text");
        std::string grid = "";
        std::vector<int> instance;
        int k_max = 3, n_max = 12, s_max = 6, n_span = 12, klm_max_palette = 4, bipartite_max = 10, induced_samples = 4;
        std::vector<int> s_values{2, 4};
        std::string mode = "both";
        std::vector<std::string> hypergraphs{"hkneser:4:2", "hkneser:5:2", "hkneser:6:2", "hstable:6:2:2",
            "hkneser:6:3", "hstable:7:2:2"};
        std::vector<std::pair<int, int>> hm_grid{{5, 2}, {6, 2}, {7, 2}, {7, 3}};
        std::vector<int> hm_instance;

        auto * v_stsable = verify->add_subcommand("stsable", "2-stable subsets contain s-stable k-subsets");
        v_stsable->add_option("--k-max", k_max);
        v_stsable->add_option("--s", s_values)->expected(1, 16);
        v_stsable->add_option("--n-max", n_max);
        auto * v_case2 = verify->add_subcommand("case2", "Pairs at distance s, s+1 or s+2 when n = 2s+2");
        v_case2->add_option("--s", s_values)->expected(1, 16);
        auto * v_colorful = verify->add_subcommand("colorful", "Colorful bipartite subgraphs of optimal colourings");
        v_colorful->add_option("--grid", grid, "small | full | n:k:s");
        v_colorful->add_option("--klm-max-palette", klm_max_palette);
        auto * v_tight = verify->add_subcommand("tight-cycle", "Tight cycles in optimal colourings");
        v_tight->add_option("--grid", grid, "small | full | n:k:s");
        v_tight->add_option("--bipartite-max", bipartite_max);
        auto * v_chic = verify->add_subcommand("chic-stable", "Circular chromatic number of stable Kneser graphs");
        v_chic->add_option("--grid", grid, "small | full | n:k:s");
        auto * v_gale = verify->add_subcommand("gale", "Hemisphere lemma for the alternating moment curve");
        v_gale->add_option("instance", instance, "n k s")->expected(0, 3);
        v_gale->add_option("--grid", grid, "small | full | n:k:s");
        auto * v_thresholds = verify->add_subcommand("thresholds", "Threshold inequalities and their proof chains");
        v_thresholds->add_option("--k-max", k_max);
        v_thresholds->add_option("--s-max", s_max);
        v_thresholds->add_option("--n-span", n_span);
        v_thresholds->add_option("--induced-samples", induced_samples);
        auto * v_hm = verify->add_subcommand("hilton-milner", "Hilton-Milner bound and free independent sets");
        v_hm->add_option("instance", hm_instance, "n k")->expected(0, 2);
        auto * v_tucker = verify->add_subcommand("tucker", "Label map conditions and colorful extraction");
        v_tucker->add_option("--grid", grid, "tucker | n:k:s");
        v_tucker->add_option("--mode", mode)->check(CLI::IsMember({"alt", "salt", "both"}));
        auto * v_theorem_a = verify->add_subcommand("theorem-a", "chi(KG(H)) against the alternation bound");
        v_theorem_a->add_option("hypergraphs", hypergraphs, "Hypergraph names or files");

        for (auto * sub : verify->get_subcommands({}))
            sub->fallthrough();

        // report
        auto * report = app.add_subcommand("report", "Consolidate run manifests into one table");
        std::vector<std::string> manifests;
        std::string report_format = "text";
        report->add_option("manifests", manifests, "Manifest files");
        report->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : static_cast<int>(ExitCode::precondition);
        }

        try {
            if (*gen)
                return gen_command(gen_family, gen_params, allow_degenerate, gen_output, gen_manifest, out);
            if (*report)
                return report_command(manifests, report_format, out);
            if (*solve) {
                json params{{"metric", metric}, {"input", input}, {"strategy", strategy}};
                return finish("solve " + metric, params, solve_options,
                    [&] { return solve_outcome(metric, input, strategy, solve_options.budget); }, out);
            }

            auto & o = verify_options;
            auto grid_or = [&](const std::string & fallback) { return resolve_grid(grid.empty() ? fallback : grid); };
            std::string theorem;
            json params;
            std::vector<Job> jobs;
            std::string claim;
            if (*v_stsable) {
                theorem = "stsable";
                params = {{"k_max", k_max}, {"s", s_values}, {"n_max", n_max}};
                jobs = stsable_jobs(k_max, s_values, n_max, o.budget);
                claim = "2-stable ((s/2)(k-1)+1)-subsets of [n] contain s-stable k-subsets for n >= (s+2)k-2";
            }
            else if (*v_case2) {
                theorem = "case2";
                params = {{"s", s_values}};
                jobs = case2_jobs(s_values);
                claim = "2-stable (s/2+1)-subsets of [2s+2] contain a pair at distance s, s+1 or s+2";
            }
            else if (*v_colorful) {
                theorem = "colorful";
                auto g = grid_or("full");
                params = {{"grid", grid.empty() ? "full" : grid}, {"klm_max_palette", klm_max_palette}};
                jobs = colorful_jobs(g, klm_max_palette, o.budget);
                claim = "chi(KG_s(n,k)) = n - s(k-1), witnessed by colorful bipartite subgraphs";
            }
            else if (*v_tight) {
                theorem = "tight-cycle";
                params = {{"grid", grid.empty() ? "small" : grid}, {"bipartite_max", bipartite_max}};
                jobs = tight_cycle_jobs(grid_or("small"), bipartite_max, o.budget);
                claim = "every optimal colouring of KG_s(n,k) (n, s even) contains a tight cycle";
            }
            else if (*v_chic) {
                theorem = "chic-stable";
                params = {{"grid", grid.empty() ? "small" : grid}};
                jobs = chic_jobs(grid_or("small"), o.budget);
                claim = "chi_c(KG_s(n,k)) = n - s(k-1) for even n and even s";
            }
            else if (*v_gale) {
                theorem = "gale";
                std::vector<StableInstance> g;
                if (instance.size() == 3)
                    g = {{instance[0], instance[1], instance[2]}};
                else if (instance.empty())
                    g = grid_or("small");
                else
                    throw PreconditionError("verify gale expects three parameters n k s");
                json list = json::array();
                for (auto & i : g)
                    list.push_back(instance_json(i));
                params = {{"instances", list}};
                jobs = gale_jobs(g, o.budget);
                claim = "every open hemisphere of S^{n-s(k-1)-2} contains an s-stable k-subset";
            }
            else if (*v_thresholds) {
                theorem = "thresholds";
                params = {{"k_max", k_max}, {"s_max", s_max}, {"n_span", n_span}, {"induced_samples", induced_samples}};
                jobs = threshold_jobs(k_max, s_max, n_span, induced_samples, o.budget);
                claim = "threshold theorems: chi_c = chi once phi >= 2chi is forced by the vertex count";
            }
            else if (*v_hm) {
                theorem = "hilton-milner";
                auto g = hm_grid;
                if (hm_instance.size() == 2)
                    g = {{hm_instance[0], hm_instance[1]}};
                else if (! hm_instance.empty())
                    throw PreconditionError("verify hilton-milner expects two parameters n k");
                params = {{"instances", g}};
                jobs = hilton_milner_jobs(g, o.budget);
                claim = "Hilton-Milner: large intersecting families are stars";
            }
            else if (*v_tucker) {
                theorem = "tucker";
                std::vector<StableInstance> g = grid.empty() || grid == "tucker"
                    ? std::vector<StableInstance>{{6, 2, 2}, {8, 2, 2}}
                    : resolve_grid(grid);
                std::vector<AlternationMode> modes;
                if (mode != "salt")
                    modes.push_back(AlternationMode::alt);
                if (mode != "alt")
                    modes.push_back(AlternationMode::salt);
                params = {{"grid", grid.empty() ? "tucker" : grid}, {"mode", mode}};
                jobs = tucker_jobs(g, modes, o.budget);
                claim = "Tucker's lemma forces a colorful bipartite subgraph of size n - alt or n - salt + 1";
            }
            else if (*v_theorem_a) {
                theorem = "theorem-a";
                params = {{"hypergraphs", hypergraphs}};
                jobs = theorem_a_jobs(hypergraphs, o.budget);
                claim = "chi(KG(H)) >= max(|V(H)| - alt(H), |V(H)| - salt(H) + 1)";
            }
            auto command = "verify " + theorem;
            return finish(command, params, o,
                [&] { return rows_outcome(command, params, run_jobs(jobs, o.threads), claim); }, out);
        }
        catch (const CounterexampleError & e) {
            err << "counterexample: " << e.what() << '\n' << e.certificate() << '\n';
            return static_cast<int>(ExitCode::falsified);
        }
        catch (const PreconditionError & e) {
            err << "precondition: " << e.what() << '\n';
            return static_cast<int>(ExitCode::precondition);
        }
        catch (const FormatError & e) {
            err << "malformed input: " << e.what() << '\n';
            return static_cast<int>(ExitCode::io);
        }
        catch (const IoError & e) {
            err << "i/o: " << e.what() << '\n';
            return static_cast<int>(ExitCode::io);
        }
        catch (const std::logic_error & e) {
            err << "invariant violated: " << e.what() << '\n';
            return static_cast<int>(ExitCode::falsified);
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return static_cast<int>(ExitCode::io);
        }
    }
}
