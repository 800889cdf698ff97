#include "xylab/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "xylab/errors.hpp"

namespace xylab {

EdgeList random_graph(GraphKind kind, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (kind == GraphKind::Reg3) {
        if (n < 4 || (3 * n) % 2 != 0)
            throw validation_error("3-regular graphs need even 3n and n >= 4");
        // Pairing model: shuffle 3n stubs, pair consecutively, reject any
        // pairing with loops or repeated edges and retry.
        std::vector<int> stubs(static_cast<std::size_t>(3 * n));
        for (int i = 0; i < 3 * n; ++i) stubs[static_cast<std::size_t>(i)] = i / 3;
        for (int attempt = 0; attempt < 100000; ++attempt) {
            std::shuffle(stubs.begin(), stubs.end(), rng);
            std::set<std::pair<int, int>> edges;
            bool ok = true;
            for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
                const int u = stubs[i], v = stubs[i + 1];
                if (u == v || !edges.insert({std::min(u, v), std::max(u, v)}).second) ok = false;
            }
            if (ok) return EdgeList(edges.begin(), edges.end());
        }
        throw capacity_error("pairing model failed to produce a simple 3-regular graph");
    }
    // Rnd2n: sample 2n of the C(n,2) pairs without replacement.
    const long long total = static_cast<long long>(n) * (n - 1) / 2;
    if (2LL * n > total) throw validation_error("Rnd2n requires 2n <= C(n,2)");
    EdgeList all;
    all.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    // Partial Fisher-Yates for the first 2n entries.
    for (std::size_t i = 0; i < static_cast<std::size_t>(2 * n); ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
        std::swap(all[i], all[pick(rng)]);
    }
    all.resize(static_cast<std::size_t>(2 * n));
    std::sort(all.begin(), all.end());
    return all;
}

EdgeList read_edge_list(std::istream& in, int& n_out) {
    EdgeList edges;
    int maxv = -1;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::stringstream ss(line);
        int u, v;
        if (!(ss >> u)) continue;  // blank / comment-only line
        if (!(ss >> v)) throw parse_error("edge line needs two vertices", lineno);
        if (u < 0 || v < 0 || u == v) throw parse_error("invalid edge", lineno);
        edges.push_back({std::min(u, v), std::max(u, v)});
        maxv = std::max({maxv, u, v});
    }
    n_out = maxv + 1;
    return edges;
}

EdgeList read_edge_list_file(const std::string& path, int& n_out) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file: " + path);
    return read_edge_list(in, n_out);
}

void write_edge_list(std::ostream& out, const EdgeList& edges, int n) {
    out << "# " << n << " vertices, " << edges.size() << " edges (0-based)\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
}

}  // namespace xylab
