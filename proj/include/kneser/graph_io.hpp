#pragma once

#include <kneser/graph.hpp>
#include <kneser/hypergraph.hpp>

#include <iosfwd>

namespace kneser
{
    /// Graph interchange format:
    ///   p <order> <edge-count>
    ///   e <u> <v>          one per edge, 0-indexed, u < v, sorted
    ///   l <v> <subset>     optional labels, e.g. "l 3 1,4"
    /// Lines starting with 'c' or '#' are comments on input.
    void write_graph(std::ostream & out, const SimpleGraph & g);
    auto read_graph(std::istream & in) -> SimpleGraph;

    /// Hypergraph interchange format:
    ///   h <n> <edge-count>
    ///   <sorted element list>   one per edge, space separated
    void write_hypergraph(std::ostream & out, const Hypergraph & h);
    auto read_hypergraph(std::istream & in) -> Hypergraph;
}
