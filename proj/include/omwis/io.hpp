#pragma once

#include "omwis/core.hpp"

#include <iosfwd>
#include <map>
#include <string>

namespace omwis {

struct GraphFile {
    OrderedGraph graph;
    Weights weights;
    // "# omwis key=value ..." header lines
    std::map<std::string, std::string> meta;
};

// Format:
//   n m
//   [w_1 ... w_n]      optional, each p or p/q
//   u-v                m lines, 1-based
// '#' starts a comment.
auto read_graph(std::istream &in) -> GraphFile;
auto read_graph_file(const std::string &path) -> GraphFile;
void write_graph(std::ostream &out, const OrderedGraph &g, const Weights *w = nullptr,
                 const std::map<std::string, std::string> &meta = {});

// DIMACS CNF
struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses; // literals +-v, 1-based
};
auto read_cnf(std::istream &in) -> Cnf;
void write_cnf(std::ostream &out, const Cnf &f);

} // namespace omwis
