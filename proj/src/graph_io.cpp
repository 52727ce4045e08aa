#include <kneser/errors.hpp>
#include <kneser/graph_io.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace kneser
{
    void write_graph(std::ostream & out, const SimpleGraph & g)
    {
        out << "p " << g.order() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << u << ' ' << v << '\n';
        if (g.has_labels())
            for (int v = 0; v < g.order(); ++v)
                out << "l " << v << ' ' << format_subset(g.label(v)) << '\n';
    }

    namespace
    {
        auto next_content_line(std::istream & in, std::string & line, int & line_number) -> bool
        {
            while (std::getline(in, line)) {
                ++line_number;
                if (line.empty() || line[0] == 'c' || line[0] == '#')
                    continue;
                return true;
            }
            return false;
        }

        [[noreturn]] void fail(int line_number, const std::string & message)
        {
            throw FormatError("line " + std::to_string(line_number) + ": " + message);
        }
    }

    auto read_graph(std::istream & in) -> SimpleGraph
    {
        std::string line;
        int line_number = 0;
        if (! next_content_line(in, line, line_number))
            fail(line_number, "missing 'p' header");
        std::istringstream header(line);
        std::string tag;
        long long order = -1, edge_count = -1;
        if (! (header >> tag >> order >> edge_count) || tag != "p" || order < 0 || edge_count < 0)
            fail(line_number, "expected 'p <order> <edge-count>'");

        std::vector<Edge> edges;
        std::vector<Mask> labels;
        std::vector<bool> labelled;
        while (next_content_line(in, line, line_number)) {
            std::istringstream fields(line);
            fields >> tag;
            if (tag == "e") {
                long long u = -1, v = -1;
                if (! (fields >> u >> v) || u < 0 || v < 0 || u >= order || v >= order || u == v)
                    fail(line_number, "bad edge line");
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
            else if (tag == "l") {
                long long v = -1;
                std::string subset;
                if (! (fields >> v) || v < 0 || v >= order)
                    fail(line_number, "bad label line");
                fields >> subset;
                if (labels.empty()) {
                    labels.assign(order, 0);
                    labelled.assign(order, false);
                }
                try {
                    labels[v] = parse_subset(subset);
                }
                catch (const FormatError & e) {
                    fail(line_number, e.what());
                }
                labelled[v] = true;
            }
            else
                fail(line_number, "unknown line tag '" + tag + "'");
        }
        if (static_cast<long long>(edges.size()) != edge_count)
            fail(line_number, "edge count mismatch: header says " + std::to_string(edge_count) + ", found "
                    + std::to_string(edges.size()));
        for (bool l : labelled)
            if (! l)
                fail(line_number, "labels must be given for every vertex or none");
        SimpleGraph g(static_cast<int>(order), edges, std::move(labels));
        if (static_cast<long long>(g.edge_count()) != edge_count)
            fail(line_number, "duplicate edges");
        return g;
    }

    void write_hypergraph(std::ostream & out, const Hypergraph & h)
    {
        out << "h " << h.ground_size() << ' ' << h.edge_count() << '\n';
        for (Mask e : h.edges()) {
            bool first = true;
            for (int v : elements_of(e)) {
                out << (first ? "" : " ") << v;
                first = false;
            }
            out << '\n';
        }
    }

    auto read_hypergraph(std::istream & in) -> Hypergraph
    {
        std::string line;
        int line_number = 0;
        if (! next_content_line(in, line, line_number))
            fail(line_number, "missing 'h' header");
        std::istringstream header(line);
        std::string tag;
        long long n = -1, m = -1;
        if (! (header >> tag >> n >> m) || tag != "h" || n < 0 || n > max_ground_size || m < 0)
            fail(line_number, "expected 'h <n> <edge-count>'");
        std::vector<Mask> edges;
        while (next_content_line(in, line, line_number)) {
            std::istringstream fields(line);
            Mask e = 0;
            long long v = 0, previous = 0;
            while (fields >> v) {
                if (v < 1 || v > n || v <= previous)
                    fail(line_number, "edge elements must be increasing within 1.." + std::to_string(n));
                e |= bit_of(static_cast<int>(v));
                previous = v;
            }
            if (! fields.eof())
                fail(line_number, "non-numeric edge element");
            if (e == 0)
                fail(line_number, "empty edge");
            edges.push_back(e);
        }
        if (static_cast<long long>(edges.size()) != m)
            fail(line_number, "edge count mismatch");
        try {
            return Hypergraph(static_cast<int>(n), std::move(edges));
        }
        catch (const PreconditionError & e) {
            throw FormatError(e.what());
        }
    }
}
