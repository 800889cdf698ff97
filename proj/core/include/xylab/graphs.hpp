#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace xylab {

using EdgeList = std::vector<std::pair<int, int>>;

enum class GraphKind { Reg3, Rnd2n };

/// Deterministic random graph on n (0-based) vertices:
///   Reg3  - 3-regular via the pairing model, resampling on loops/multi-edges
///   Rnd2n - 2n distinct edges sampled uniformly from all C(n,2) pairs
EdgeList random_graph(GraphKind kind, int n, std::uint64_t seed);

/// Edge-list text format: one "u v" pair per line, '#' comments, 0-based.
EdgeList read_edge_list(std::istream& in, int& n_out);
EdgeList read_edge_list_file(const std::string& path, int& n_out);
void write_edge_list(std::ostream& out, const EdgeList& edges, int n);

}  // namespace xylab
