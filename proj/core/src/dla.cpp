#include "xylab/dla.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "xylab/dense.hpp"

namespace xylab {

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::XY_path: return "xy-path";
        case Topology::XY_cycle: return "xy-cycle";
        case Topology::XY_clique: return "xy-clique";
        case Topology::XY_path_Z: return "xy-path-z";
        case Topology::XY_cycle_Z: return "xy-cycle-z";
        case Topology::XY_clique_Z: return "xy-clique-z";
        case Topology::XY_cycle_Z_ZZclique: return "xy-cycle-z-zz";
    }
    return "?";
}

bool topology_from_name(const std::string& name, Topology& out) {
    for (Topology t : {Topology::XY_path, Topology::XY_cycle, Topology::XY_clique,
                       Topology::XY_path_Z, Topology::XY_cycle_Z, Topology::XY_clique_Z,
                       Topology::XY_cycle_Z_ZZclique}) {
        if (name == topology_name(t)) {
            out = t;
            return true;
        }
    }
    return false;
}

namespace {

void check_pair(int n, int j, int k) {
    if (j < 1 || k < 1 || j > n || k > n || j == k)
        throw validation_error("invalid qubit pair");
}

std::uint64_t bit(int q) { return 1ULL << (q - 1); }

}  // namespace

LieElement xy_generator(int n, int j, int k) {
    check_pair(n, j, k);
    LieElement e(n);
    e.add_term(PauliWord{bit(j) | bit(k), 0}, 0.5);              // X_j X_k
    e.add_term(PauliWord{bit(j) | bit(k), bit(j) | bit(k)}, 0.5);  // Y_j Y_k
    return e;
}

LieElement z_generator(int n, int j) {
    if (j < 1 || j > n) throw validation_error("invalid qubit index");
    LieElement e(n);
    e.add_term(PauliWord{0, bit(j)}, 1.0);
    return e;
}

LieElement zz_generator(int n, int j, int k) {
    check_pair(n, j, k);
    LieElement e(n);
    e.add_term(PauliWord{0, bit(j) | bit(k)}, 1.0);
    return e;
}

GeneratorSet make_generators(Topology t, int n) {
    const bool cyclic = t == Topology::XY_cycle || t == Topology::XY_cycle_Z ||
                        t == Topology::XY_cycle_Z_ZZclique;
    const bool clique = t == Topology::XY_clique || t == Topology::XY_clique_Z;
    const bool with_z = t == Topology::XY_path_Z || t == Topology::XY_cycle_Z ||
                        t == Topology::XY_clique_Z || t == Topology::XY_cycle_Z_ZZclique;
    if (n < 2 || (cyclic && n < 3)) throw validation_error("n too small for topology");
    GeneratorSet gs{t, n, {}};
    if (clique) {
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gs.generators.push_back(xy_generator(n, j, k));
    } else {
        for (int j = 1; j < n; ++j) gs.generators.push_back(xy_generator(n, j, j + 1));
        if (cyclic) gs.generators.push_back(xy_generator(n, n, 1));
    }
    if (with_z)
        for (int j = 1; j <= n; ++j) gs.generators.push_back(z_generator(n, j));
    if (t == Topology::XY_cycle_Z_ZZclique)
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) gs.generators.push_back(zz_generator(n, j, k));
    return gs;
}

namespace {

/// Coordinate work space for the Gram-Schmidt loop: Pauli words discovered so
/// far are interned to column indices; each accepted basis element keeps a
/// dense coefficient row over the columns known at its acceptance time
/// (missing trailing columns are implicitly zero).
struct GsWorkspace {
    std::unordered_map<PauliWord, int, PauliWordHash> index;
    std::vector<PauliWord> words;
    std::vector<std::vector<double>> rows;

    int intern(const PauliWord& w) {
        auto [it, inserted] = index.try_emplace(w, static_cast<int>(words.size()));
        if (inserted) words.push_back(w);
        return it->second;
    }

    std::vector<double> coords(const LieElement& e) {
        for (const auto& [w, c] : e.terms()) intern(w);
        std::vector<double> v(words.size(), 0.0);
        for (const auto& [w, c] : e.terms()) v[static_cast<std::size_t>(index.at(w))] = c;
        return v;
    }

    // One projection sweep of v against all rows (modified Gram-Schmidt).
    void project_out(std::vector<double>& v) const {
        for (const auto& row : rows) {
            const std::size_t m = std::min(row.size(), v.size());
            double dot = 0.0;
            const double* a = row.data();
            const double* b = v.data();
            for (std::size_t i = 0; i < m; ++i) dot += a[i] * b[i];
            if (dot == 0.0) continue;
            double* out = v.data();
            for (std::size_t i = 0; i < m; ++i) out[i] -= dot * a[i];
        }
    }
};

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

DlaBasis build_dla(const GeneratorSet& gens, std::size_t max_dim, double tol) {
    if (gens.generators.empty()) throw validation_error("empty generator set");
    if (max_dim < gens.generators.size())
        throw validation_error("max_dim smaller than generator count");

    GsWorkspace ws;
    DlaBasis basis;

    // Adds e to the basis if it has a component outside the current span.
    auto try_add = [&](const LieElement& e) -> bool {
        if (e.is_zero()) return false;
        std::vector<double> v = ws.coords(e);
        const double n0 = norm2(v);
        ws.project_out(v);
        if (norm2(v) < 1e-6 * n0) ws.project_out(v);  // re-orthogonalization pass
        const double nr = norm2(v);
        if (nr <= tol) return false;
        if (basis.dim >= max_dim)
            throw dla_capacity_error("DLA dimension cap exceeded", basis);
        const double inv = 1.0 / nr;
        LieElement elem(e.n());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] *= inv;
            if (std::abs(v[i]) >= LieElement::kPrune)
                elem.add_term(ws.words[i], v[i]);
            else
                v[i] = 0.0;
        }
        ws.rows.push_back(std::move(v));
        basis.elements.push_back(std::move(elem));
        ++basis.dim;
        return true;
    };

    std::vector<std::size_t> front_idx;
    for (const auto& g : gens.generators)
        if (try_add(g)) front_idx.push_back(basis.dim - 1);

    while (!front_idx.empty()) {
        ++basis.rounds;
        std::vector<std::size_t> next;
        for (std::size_t ei : front_idx) {
            for (const auto& g : gens.generators) {
                const LieElement c = commutator(basis.elements[ei], g);
                if (try_add(c)) next.push_back(basis.dim - 1);
            }
        }
        front_idx = std::move(next);
    }
    basis.converged = true;
    return basis;
}

double projection_residual(const LieElement& e, const DlaBasis& basis) {
    LieElement r = e;
    for (const auto& b : basis.elements) {
        const double d = hs_inner(b, r);
        if (d != 0.0) {
            LieElement s = b;
            s *= d;
            r -= s;
        }
    }
    return hs_norm(r);
}

std::vector<LieElement> center(const DlaBasis& basis, const GeneratorSet& gens) {
    const auto dim = static_cast<Eigen::Index>(basis.dim);
    if (dim == 0) return {};
    // Stack coordinates of [b_i, g] for every generator g into one matrix
    // with (generator, word) row keys; its kernel gives the coefficient
    // vectors of central elements.
    struct Entry {
        int row, col;
        double v;
    };
    std::vector<Entry> entries;
    std::unordered_map<PauliWord, int, PauliWordHash> widx;
    std::unordered_map<std::uint64_t, int> rowkey;
    int rows = 0;
    for (std::size_t i = 0; i < basis.dim; ++i) {
        for (std::size_t gi = 0; gi < gens.generators.size(); ++gi) {
            const LieElement c = commutator(basis.elements[i], gens.generators[gi]);
            for (const auto& [w, co] : c.terms()) {
                auto [it, ins] = widx.try_emplace(w, static_cast<int>(widx.size()));
                (void)ins;
                const std::uint64_t key = (static_cast<std::uint64_t>(gi) << 32) |
                                          static_cast<std::uint64_t>(it->second);
                auto [rit, rins] = rowkey.try_emplace(key, rows);
                if (rins) ++rows;
                entries.push_back({rit->second, static_cast<int>(i), co});
            }
        }
    }
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(std::max(rows, 1), dim);
    for (const auto& e : entries) M(e.row, e.col) += e.v;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
    lu.setThreshold(1e-8);
    Eigen::MatrixXd ker = lu.kernel();
    std::vector<LieElement> out;
    if (lu.dimensionOfKernel() == 0) return out;
    for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        LieElement e(gens.n);
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (std::abs(ker(r, c)) < 1e-12) continue;
            LieElement s = basis.elements[static_cast<std::size_t>(r)];
            s *= ker(r, c);
            e += s;
        }
        const double nrm = hs_norm(e);
        if (nrm > 1e-9) {
            e *= 1.0 / nrm;
            out.push_back(std::move(e));
        }
    }
    return out;
}

int hamming_block_project(const DlaBasis& basis, int n, int k) {
    if (k < 0 || k > n) throw validation_error("Hamming weight out of range");
    if (n > 6) throw capacity_error("hamming_block_project dense route requires n <= 6");
    std::vector<std::uint64_t> sector;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x)
        if (std::popcount(x) == k) sector.push_back(x);
    const auto s = static_cast<Eigen::Index>(sector.size());
    if (basis.dim == 0 || s == 0) return 0;
    Eigen::MatrixXd rows(static_cast<Eigen::Index>(basis.dim), 2 * s * s);
    for (std::size_t bi = 0; bi < basis.dim; ++bi) {
        const DenseMatrix m = to_dense(basis.elements[bi]);
        DenseMatrix blk(s, s);
        for (Eigen::Index r = 0; r < s; ++r)
            for (Eigen::Index c = 0; c < s; ++c)
                blk(r, c) = m(static_cast<Eigen::Index>(sector[static_cast<std::size_t>(r)]),
                              static_cast<Eigen::Index>(sector[static_cast<std::size_t>(c)]));
        const std::complex<double> tr = blk.trace() / static_cast<double>(s);
        for (Eigen::Index d = 0; d < s; ++d) blk(d, d) -= tr;
        for (Eigen::Index r = 0; r < s; ++r)
            for (Eigen::Index c = 0; c < s; ++c) {
                rows(static_cast<Eigen::Index>(bi), 2 * (r * s + c)) = blk(r, c).real();
                rows(static_cast<Eigen::Index>(bi), 2 * (r * s + c) + 1) = blk(r, c).imag();
            }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(rows);
    qr.setThreshold(1e-8);
    return static_cast<int>(qr.rank());
}

unsigned long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (int i = 1; i <= k; ++i) {
        const unsigned long long num = static_cast<unsigned long long>(n - k + i);
        if (r > (~0ULL) / num) throw capacity_error("binomial overflow");
        r = r * num / static_cast<unsigned long long>(i);
    }
    return r;
}

unsigned long long expected_dim(Topology t, int n) {
    const auto un = static_cast<unsigned long long>(n);
    switch (t) {
        case Topology::XY_path:
            if (n < 2) throw validation_error("path needs n >= 2");
            return un * (un - 1) / 2;
        case Topology::XY_cycle:
            if (n < 3) throw validation_error("cycle needs n >= 3");
            return n % 2 == 0 ? un * (un - 1) : un * un - 1;
        case Topology::XY_path_Z:
            if (n < 2) throw validation_error("path needs n >= 2");
            return un * un;
        case Topology::XY_cycle_Z:
            if (n < 3) throw validation_error("cycle needs n >= 3");
            return 2 * un * un - 1;
        case Topology::XY_clique:
            if (n < 2) throw validation_error("clique needs n >= 2");
            return n % 2 == 1 ? (binomial(2 * n, n) - un - 1) / 2
                              : (binomial(2 * n, n) - un - 4) / 2;
        case Topology::XY_clique_Z:
            if (n < 2) throw validation_error("clique needs n >= 2");
            return binomial(2 * n, n) - un;
        case Topology::XY_cycle_Z_ZZclique:
            if (n < 3) throw validation_error("cycle needs n >= 3");
            return binomial(2 * n, n) - un + 1;
    }
    throw validation_error("unknown topology");
}

}  // namespace xylab
