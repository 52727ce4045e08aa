#include <kneser/cli.hpp>
#include <kneser/errors.hpp>
#include <kneser/generators.hpp>
#include <kneser/graph_io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace kneser::cli
{
    namespace
    {
        auto split(std::string_view text, char separator) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (true) {
                auto end = text.find(separator, start);
                parts.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
                if (end == std::string_view::npos)
                    return parts;
                start = end + 1;
            }
        }

        auto to_int(std::string_view text, std::string_view whole) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw PreconditionError("bad number '" + std::string(text) + "' in '" + std::string(whole) + "'");
            return value;
        }

        // name:a:b... with exactly `count` integer parameters
        auto parameters(std::string_view name, std::size_t count) -> std::vector<int>
        {
            auto parts = split(name, ':');
            if (parts.size() != count + 1)
                throw PreconditionError("'" + std::string(name) + "' expects " + std::to_string(count) + " parameters");
            std::vector<int> values;
            for (std::size_t i = 1; i < parts.size(); ++i)
                values.push_back(to_int(parts[i], name));
            return values;
        }

        auto read_file(std::string_view path) -> std::string
        {
            std::ifstream in{std::string(path)};
            if (! in)
                throw IoError("cannot open '" + std::string(path) + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return text.str();
        }

        auto is_hypergraph_text(const std::string & text) -> bool
        {
            std::istringstream in(text);
            std::string line;
            while (std::getline(in, line))
                if (! line.empty() && line[0] != 'c' && line[0] != '#')
                    return line[0] == 'h';
            return false;
        }

        auto starts_with(std::string_view text, std::string_view prefix) -> bool
        {
            return text.substr(0, prefix.size()) == prefix;
        }

        auto builtin_hypergraph(std::string_view name) -> std::optional<Hypergraph>
        {
            if (starts_with(name, "hkneser:")) {
                auto p = parameters(name, 2);
                return complete_uniform_hypergraph(p[0], p[1]);
            }
            if (starts_with(name, "hstable:")) {
                auto p = parameters(name, 3);
                return stable_hypergraph(p[0], p[1], p[2]);
            }
            if (starts_with(name, "hedgeless:")) {
                auto p = parameters(name, 1);
                return Hypergraph(p[0], {});
            }
            return std::nullopt;
        }
    }

    auto resolve_hypergraph(std::string_view name) -> Hypergraph
    {
        if (auto h = builtin_hypergraph(name))
            return *h;
        auto text = read_file(name);
        std::istringstream in(text);
        return read_hypergraph(in);
    }

    auto resolve_graph(std::string_view name) -> SimpleGraph
    {
        if (name == "petersen")
            return petersen_graph();
        if (starts_with(name, "kneser:")) {
            auto p = parameters(name, 2);
            return kneser_graph(p[0], p[1]);
        }
        if (starts_with(name, "stable:")) {
            auto p = parameters(name, 3);
            return stable_kneser_graph(p[0], p[1], p[2]);
        }
        if (starts_with(name, "schrijver:")) {
            auto p = parameters(name, 2);
            return stable_kneser_graph(p[0], p[1], 2);
        }
        if (starts_with(name, "circular:")) {
            auto p = parameters(name, 2);
            return circular_complete_graph(p[0], p[1]);
        }
        if (auto h = builtin_hypergraph(name))
            return general_kneser_graph(*h);
        if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'k') && name.find_first_not_of("0123456789", 1) == std::string_view::npos) {
            int n = to_int(name.substr(1), name);
            return name[0] == 'c' ? cycle_graph(n) : complete_graph(n);
        }
        auto text = read_file(name);
        std::istringstream in(text);
        if (is_hypergraph_text(text))
            return general_kneser_graph(read_hypergraph(in));
        return read_graph(in);
    }

    auto resolve_grid(std::string_view name) -> std::vector<StableInstance>
    {
        std::vector<StableInstance> small{{6, 2, 2}, {8, 2, 2}, {8, 3, 2}, {10, 2, 4}};
        if (name == "small")
            return small;
        if (name == "full") {
            small.push_back({12, 2, 4});
            return small;
        }
        auto p = parameters(std::string("grid:") + std::string(name), 3);
        return {{p[0], p[1], p[2]}};
    }
}
