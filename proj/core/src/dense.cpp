#include "xylab/dense.hpp"

namespace xylab {

namespace {

// Adds phase * W_w to `m`, where W_w is the canonical Hermitian word:
// <x| W_w |y> = i^{|x&z|} (-1)^{|z & y|} [x == y ^ w.x].
void accumulate_word(DenseMatrix& m, const PauliWord& w, std::complex<double> phase) {
    static constexpr std::complex<double> units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    phase *= units[std::popcount(w.x & w.z) & 3];
    const auto dim = static_cast<std::uint64_t>(m.rows());
    for (std::uint64_t y = 0; y < dim; ++y) {
        const double sign = parity64(w.z & y) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(y ^ w.x), static_cast<Eigen::Index>(y)) += sign * phase;
    }
}

}  // namespace

DenseMatrix to_dense(const PauliString& p) {
    if (p.n > kDenseLimit) throw capacity_error("dense limit exceeded");
    const Eigen::Index dim = Eigen::Index{1} << p.n;
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    accumulate_word(m, p.word, p.phase());
    return m;
}

DenseMatrix to_dense(const LieElement& a, int limit) {
    if (a.n() > limit || a.n() > kDenseLimit) throw capacity_error("dense limit exceeded");
    const Eigen::Index dim = Eigen::Index{1} << a.n();
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    for (const auto& [w, c] : a.terms())
        accumulate_word(m, w, std::complex<double>(0.0, c));  // c * i * W
    return m;
}

}  // namespace xylab
