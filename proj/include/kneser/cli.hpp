#pragma once

#include <kneser/circular.hpp>
#include <kneser/coloring.hpp>
#include <kneser/graph.hpp>
#include <kneser/hypergraph.hpp>

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kneser::cli
{
    inline constexpr int format_version = 1;
    inline constexpr std::string_view tool_version = "1.0.0";

    enum class ExitCode : int
    {
        pass = 0,
        falsified = 1,
        precondition = 2,
        inconclusive = 3,
        io = 4
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    auto sha256_hex(std::string_view data) -> std::string;

    /// Header "p <order> <palette> sha256 <digest of the colour lines>" then "c <v> <colour>" lines.
    auto colouring_certificate(const SimpleGraph & g, const Coloring & c) -> std::string;
    /// Parses and revalidates a colouring certificate against g (digest and properness).
    auto read_colouring_certificate(const SimpleGraph & g, std::string_view text) -> Coloring;

    /// "target p q", one "h <v> <image>" line per vertex, and one
    /// "refute p q exhausted <nodes>" line per smaller candidate fraction.
    auto circular_certificate(const SimpleGraph & g, const CircularResult & r) -> std::string;
    struct CircularCertificateCheck
    {
        bool homomorphism_ok = false;
        bool manifest_complete = false;
        /// Each listed refutation re-run and found exhausted again (only when replayed).
        bool refutations_replayed = false;
        CircularNumber target;
    };
    auto check_circular_certificate(const SimpleGraph & g, std::string_view text, bool replay) -> CircularCertificateCheck;

    /// One "f <witness u> <witness v> : <vertices>" line per class.
    auto free_partition_certificate(const FreeChromaticResult & r) -> std::string;

    /// Built-in names (petersen, c<N>, k<N>, kneser:n:k, stable:n:k:s, circular:p:q,
    /// and the hypergraph names, read as KG(H)) or a path to a graph or hypergraph file.
    auto resolve_graph(std::string_view name) -> SimpleGraph;
    /// hkneser:n:k, hstable:n:k:s, hedgeless:n, or a path to a hypergraph file.
    auto resolve_hypergraph(std::string_view name) -> Hypergraph;

    struct StableInstance
    {
        int n = 0, k = 0, s = 0;
    };
    /// "small": (6,2,2), (8,2,2), (8,3,2), (10,2,4); "full": small plus (12,2,4).
    auto resolve_grid(std::string_view name) -> std::vector<StableInstance>;

    /// Append-only JSON-lines store in <dir>/records.jsonl. Each record carries the
    /// sha256 of its result; a mismatch is reported as corruption, never repaired.
    class ResultCache
    {
    public:
        explicit ResultCache(std::filesystem::path directory);

        static auto key_for(std::string_view command, const nlohmann::json & params) -> std::string;
        auto lookup(const std::string & key) const -> std::optional<nlohmann::json>;
        void store(const std::string & key, const nlohmann::json & result) const;
        /// Deterministic 10% sample of keys re-checked against a fresh computation.
        static auto sampled_for_verification(const std::string & key) -> bool;

    private:
        std::filesystem::path _file;
    };

    /// Runs the command line (without the program name). Output goes to `out`,
    /// diagnostics to `err`; the return value is an ExitCode.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
