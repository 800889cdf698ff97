#include "xylab/embeddings.hpp"

#include <bit>
#include <cmath>

namespace xylab {

double ProblemInstance::energy(std::uint64_t x) const {
    auto zval = [&](int i) { return (x >> i) & 1 ? -1.0 : 1.0; };
    double e = const_term;
    for (int i = 0; i < n; ++i)
        if (h[static_cast<std::size_t>(i)] != 0.0) e += h[static_cast<std::size_t>(i)] * zval(i);
    for (const auto& [ij, c] : J) e += c * zval(ij.first) * zval(ij.second);
    return e;
}

SpectrumBounds exact_spectrum_bounds(const ProblemInstance& inst) {
    if (inst.n > 20) throw capacity_error("feasible-subspace enumeration limited to n <= 20");
    if (inst.k <= 0 || inst.k >= inst.n) throw validation_error("need 0 < k < n");
    SpectrumBounds b;
    bool first = true;
    // Gosper's hack over weight-k subsets of n bits.
    std::uint64_t x = (1ULL << inst.k) - 1;
    const std::uint64_t limit = 1ULL << inst.n;
    while (x < limit) {
        const double e = inst.energy(x);
        if (first || e < b.e_min) b.e_min = e;
        if (first || e > b.e_max) b.e_max = e;
        first = false;
        const std::uint64_t c = x & (~x + 1), r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    // Second pass for the argmin set with the 1e-9 degeneracy window.
    x = (1ULL << inst.k) - 1;
    while (x < limit) {
        if (std::abs(inst.energy(x) - b.e_min) < 1e-9) b.argmin.push_back(x);
        const std::uint64_t c = x & (~x + 1), r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    return b;
}

namespace {

/// Accumulates c * sigma^1_i = c (I - Z_i)/2.
void add_sigma1(ProblemInstance& inst, int i, double c) {
    inst.const_term += c / 2;
    inst.h[static_cast<std::size_t>(i)] -= c / 2;
}

/// Accumulates c * sigma^1_i sigma^1_j = c (I - Z_i - Z_j + Z_i Z_j)/4, i != j.
void add_sigma1_pair(ProblemInstance& inst, int i, int j, double c) {
    inst.const_term += c / 4;
    inst.h[static_cast<std::size_t>(i)] -= c / 4;
    inst.h[static_cast<std::size_t>(j)] -= c / 4;
    inst.J[{std::min(i, j), std::max(i, j)}] += c / 4;
}

}  // namespace

ProblemInstance embed_portfolio(const std::vector<double>& p,
                                const std::vector<std::vector<double>>& C, double q, int k) {
    const int n = static_cast<int>(p.size());
    if (C.size() != p.size()) throw validation_error("p and C dimensions differ");
    for (const auto& row : C)
        if (row.size() != p.size()) throw validation_error("C not square");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::abs(C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -
                         C[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) > 1e-12)
                throw validation_error("covariance matrix must be symmetric");
    ProblemInstance inst;
    inst.n = n;
    inst.k = k;
    inst.h.assign(static_cast<std::size_t>(n), 0.0);
    inst.label = "portfolio";
    for (int i = 0; i < n; ++i) add_sigma1(inst, i, -p[static_cast<std::size_t>(i)]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double c = q * C[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (c == 0.0) continue;
            if (a == b)
                add_sigma1(inst, a, c);  // (sigma^1)^2 = sigma^1
            else
                add_sigma1_pair(inst, a, b, c);
        }
    return inst;
}

ProblemInstance embed_graph_partition(const std::vector<std::pair<int, int>>& edges, int n) {
    if (n % 2 != 0) throw validation_error("graph partitioning requires even n");
    ProblemInstance inst;
    inst.n = n;
    inst.k = n / 2;
    inst.h.assign(static_cast<std::size_t>(n), 0.0);
    inst.label = "graph-partition";
    inst.const_term = static_cast<double>(edges.size()) / 2.0;
    // Per edge, 1/2 - (1/2) Z_i Z_j is the cut indicator, so the diagonal of
    // H equals the cut size (1-x)^T A x.
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw validation_error("bad edge");
        inst.J[{std::min(i, j), std::max(i, j)}] -= 0.5;
    }
    return inst;
}

ProblemInstance embed_sparsest_subgraph(const std::vector<std::pair<int, int>>& edges, int n,
                                        int k) {
    ProblemInstance inst;
    inst.n = n;
    inst.k = k;
    inst.h.assign(static_cast<std::size_t>(n), 0.0);
    inst.label = "sparsest-subgraph";
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw validation_error("bad edge");
        add_sigma1_pair(inst, i, j, 1.0);
    }
    return inst;
}

}  // namespace xylab
