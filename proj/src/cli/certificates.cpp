#include <kneser/cli.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/homomorphism.hpp>

#include <set>
#include <sstream>

namespace kneser::cli
{
    namespace
    {
        auto colour_lines(const Coloring & c) -> std::string
        {
            std::ostringstream lines;
            for (int v = 0; v < c.size(); ++v)
                lines << "c " << v << ' ' << c[v] << '\n';
            return lines.str();
        }
    }

    auto colouring_certificate(const SimpleGraph & g, const Coloring & c) -> std::string
    {
        if (! is_proper_colouring(g, c.colours()))
            throw PreconditionError("refusing to certify an improper colouring");
        auto body = colour_lines(c);
        return "p " + std::to_string(g.order()) + ' ' + std::to_string(c.palette()) + " sha256 " + sha256_hex(body)
            + '\n' + body;
    }

    auto read_colouring_certificate(const SimpleGraph & g, std::string_view text) -> Coloring
    {
        std::istringstream in{std::string(text)};
        std::string line, tag, hash_tag, digest;
        int order = -1, palette = -1;
        if (! std::getline(in, line))
            throw FormatError("empty colouring certificate");
        std::istringstream header(line);
        if (! (header >> tag >> order >> palette >> hash_tag >> digest) || tag != "p" || hash_tag != "sha256")
            throw FormatError("colouring certificate header must be 'p <order> <palette> sha256 <digest>'");
        if (order != g.order())
            throw FormatError("colouring certificate is for a graph of order " + std::to_string(order));
        std::vector<int> colours(order, 0);
        std::string body;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            body += line + '\n';
            std::istringstream fields(line);
            int v = -1, colour = 0;
            if (! (fields >> tag >> v >> colour) || tag != "c" || v < 0 || v >= order)
                throw FormatError("bad colouring line '" + line + "'");
            colours[v] = colour;
        }
        if (sha256_hex(body) != digest)
            throw FormatError("colouring certificate digest mismatch");
        return Coloring(g, std::move(colours), palette);
    }

    auto circular_certificate(const SimpleGraph & g, const CircularResult & r) -> std::string
    {
        if (! r.homomorphism)
            throw PreconditionError("no homomorphism to certify");
        std::ostringstream out;
        out << "target " << r.value.p() << ' ' << r.value.q() << '\n';
        for (int v = 0; v < g.order(); ++v)
            out << "h " << v << ' ' << (*r.homomorphism)[v] << '\n';
        for (const auto & refutation : r.refutations)
            out << "refute " << refutation.fraction.p() << ' ' << refutation.fraction.q() << ' '
                << to_string(refutation.status) << ' ' << refutation.nodes << '\n';
        return out.str();
    }

    auto check_circular_certificate(const SimpleGraph & g, std::string_view text, bool replay)
        -> CircularCertificateCheck
    {
        CircularCertificateCheck check;
        std::istringstream in{std::string(text)};
        std::string line, tag;
        std::vector<int> map(g.order(), -1);
        std::vector<FractionRefutation> refutations;
        bool have_target = false;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            std::istringstream fields(line);
            fields >> tag;
            if (tag == "target") {
                std::int64_t p = 0, q = 0;
                if (! (fields >> p >> q))
                    throw FormatError("bad target line");
                check.target = CircularNumber(p, q);
                have_target = true;
            }
            else if (tag == "h") {
                int v = -1, image = -1;
                if (! (fields >> v >> image) || v < 0 || v >= g.order())
                    throw FormatError("bad homomorphism line '" + line + "'");
                map[v] = image;
            }
            else if (tag == "refute") {
                std::int64_t p = 0, q = 0;
                std::string status;
                std::uint64_t nodes = 0;
                if (! (fields >> p >> q >> status >> nodes) || status != "exhausted")
                    throw FormatError("bad refutation line '" + line + "'");
                refutations.push_back({CircularNumber(p, q), SearchStatus::exhausted, nodes});
            }
            else
                throw FormatError("unknown certificate line '" + line + "'");
        }
        if (! have_target)
            throw FormatError("certificate has no target line");
        if (g.order() == 0) {
            check.homomorphism_ok = check.manifest_complete = check.refutations_replayed = true;
            return check;
        }
        auto target = circular_complete_graph(static_cast<int>(check.target.p()), static_cast<int>(check.target.q()));
        check.homomorphism_ok = is_homomorphism(g, target, map);

        // every candidate below the target must be listed, in increasing order
        int chi = static_cast<int>((check.target.p() + check.target.q() - 1) / check.target.q());
        std::vector<CircularNumber> expected;
        for (const auto & fraction : candidate_fractions(chi, g.order()))
            if (fraction < check.target)
                expected.push_back(fraction);
        check.manifest_complete = expected.size() == refutations.size();
        for (std::size_t i = 0; check.manifest_complete && i < expected.size(); ++i)
            check.manifest_complete = expected[i] == refutations[i].fraction;
        // a homomorphism into K_{chi-1} would undercut the candidate range
        if (chi >= 2 && check.manifest_complete) {
            HomomorphismSearchOptions options;
            options.pin_component_roots = true;
            auto below = find_homomorphism(g, complete_graph(chi - 1), unlimited_budget, options);
            check.manifest_complete = below.status == SearchStatus::exhausted;
        }

        if (replay) {
            check.refutations_replayed = true;
            for (const auto & refutation : refutations) {
                auto p = refutation.fraction.p();
                std::vector<int> reflection(p);
                for (int x = 0; x < p; ++x)
                    reflection[x] = static_cast<int>((p - x) % p);
                auto again = find_homomorphism(g,
                    circular_complete_graph(static_cast<int>(p), static_cast<int>(refutation.fraction.q())),
                    unlimited_budget, {.pin_component_roots = true, .target_involution = std::move(reflection)});
                if (again.status != SearchStatus::exhausted || again.nodes != refutation.nodes)
                    check.refutations_replayed = false;
            }
        }
        return check;
    }

    auto free_partition_certificate(const FreeChromaticResult & r) -> std::string
    {
        std::ostringstream out;
        if (r.infinite) {
            out << "infinite " << r.blocking_vertex.value_or(-1) << '\n';
            return out.str();
        }
        out << "classes " << r.classes.size() << " alpha_bar " << r.alpha_bar << '\n';
        for (const auto & free_class : r.classes) {
            out << "f " << free_class.witness.first << ' ' << free_class.witness.second << " :";
            for (int v : free_class.vertices)
                out << ' ' << v;
            out << '\n';
        }
        return out.str();
    }
}
