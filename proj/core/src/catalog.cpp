#include "xylab/catalog.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <functional>

#include "xylab/dla.hpp"

namespace xylab {

namespace {

std::uint64_t bit(int q) { return 1ULL << (q - 1); }

void check_pair(int n, int j, int k) {
    if (j < 1 || k < 1 || j > n || k > n || j == k)
        throw validation_error("invalid qubit pair");
}

void check_ordered_pair(int n, int j, int k) {
    check_pair(n, j, k);
    if (j >= k) throw validation_error("pair must satisfy j < k");
}

enum class Letter { X, Y, Z };

std::uint64_t xmask(Letter l) { return l == Letter::Z ? 0 : 1; }
std::uint64_t zmask(Letter l) { return l == Letter::X ? 0 : 1; }

/// A_j Z ... Z B_k with Z's strictly between j and k.
PauliWord chain_word(Letter A, Letter B, int j, int k) {
    PauliWord w;
    w.x = xmask(A) * bit(j) | xmask(B) * bit(k);
    w.z = zmask(A) * bit(j) | zmask(B) * bit(k);
    for (int q = j + 1; q < k; ++q) w.z |= bit(q);
    return w;
}

/// Z ... Z A_j B_k Z ... Z with Z's outside [j,k].
PauliWord outer_word(int n, Letter A, Letter B, int j, int k) {
    PauliWord w;
    w.x = xmask(A) * bit(j) | xmask(B) * bit(k);
    w.z = zmask(A) * bit(j) | zmask(B) * bit(k);
    for (int q = 1; q < j; ++q) w.z |= bit(q);
    for (int q = k + 1; q <= n; ++q) w.z |= bit(q);
    return w;
}

/// Real sign of i^{e-1} for odd e: +1 when e = 1 mod 4, -1 when e = 3 mod 4.
double odd_power_sign(int e) { return (((e % 4) + 4) % 4) == 1 ? 1.0 : -1.0; }

}  // namespace

LieElement make_P(int n, int j, int k) {
    check_ordered_pair(n, j, k);
    const int c = 2 * ((k - j) / 2) + 1;
    const double mu = odd_power_sign(c) * 0.5;
    LieElement e(n);
    if ((k - j) % 2 == 1) {
        e.add_term(chain_word(Letter::X, Letter::X, j, k), mu);
        e.add_term(chain_word(Letter::Y, Letter::Y, j, k), mu);
    } else {
        e.add_term(chain_word(Letter::X, Letter::Y, j, k), mu);
        e.add_term(chain_word(Letter::Y, Letter::X, j, k), -mu);
    }
    return e;
}

LieElement make_Pminus(int n, int j, int k) {
    check_ordered_pair(n, j, k);
    const int m = n - k + j;
    const int c = 2 * ((m + 1) / 2) - 1;  // 2 ceil(m/2) - 1
    const double mu = odd_power_sign(c) * 0.5;
    LieElement e(n);
    if (m % 2 == 1) {
        e.add_term(outer_word(n, Letter::X, Letter::X, j, k), mu);
        e.add_term(outer_word(n, Letter::Y, Letter::Y, j, k), mu);
    } else {
        e.add_term(outer_word(n, Letter::X, Letter::Y, j, k), mu);
        e.add_term(outer_word(n, Letter::Y, Letter::X, j, k), -mu);
    }
    return e;
}

LieElement make_Q(int n, int j, int k) {
    check_ordered_pair(n, j, k);
    const int b = 2 * ((k - j) / 2) - 1;
    const double mu = odd_power_sign(b) * 0.5;
    LieElement e(n);
    if ((k - j) % 2 == 1) {
        e.add_term(chain_word(Letter::Y, Letter::X, j, k), mu);
        e.add_term(chain_word(Letter::X, Letter::Y, j, k), -mu);
    } else {
        e.add_term(chain_word(Letter::X, Letter::X, j, k), mu);
        e.add_term(chain_word(Letter::Y, Letter::Y, j, k), mu);
    }
    return e;
}

LieElement make_Qminus(int n, int j, int k) {
    check_ordered_pair(n, j, k);
    const int m = n - k + j;
    const int b = 2 * (m / 2) + 1;
    const double mu = odd_power_sign(b) * 0.5;
    LieElement e(n);
    if (m % 2 == 1) {
        e.add_term(outer_word(n, Letter::X, Letter::Y, j, k), mu);
        e.add_term(outer_word(n, Letter::Y, Letter::X, j, k), -mu);
    } else {
        e.add_term(outer_word(n, Letter::X, Letter::X, j, k), mu);
        e.add_term(outer_word(n, Letter::Y, Letter::Y, j, k), mu);
    }
    return e;
}

LieElement make_D(int n, int j, int k) {
    check_pair(n, j, k);
    LieElement e(n);
    e.add_term(PauliWord{0, bit(j)}, 0.5);
    e.add_term(PauliWord{0, bit(k)}, -0.5);
    return e;
}

LieElement make_Dminus(int n, int j, int k) {
    check_pair(n, j, k);
    const int d = 2 * (n / 2) + 1;
    const double mu = odd_power_sign(d) * 0.5;
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    LieElement e(n);
    e.add_term(PauliWord{0, all & ~bit(j)}, mu);
    e.add_term(PauliWord{0, all & ~bit(k)}, -mu);
    return e;
}

PauliString make_Zhat(int n) {
    PauliString p;
    p.n = n;
    p.word.z = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    p.phase_exp = ((n / 2) % 2 == 1) ? 2 : 0;  // (-1)^{floor(n/2)}
    return p;
}

LieElement make_Zplus(int n) {
    LieElement e(n);
    for (int j = 1; j <= n; ++j) e.add_term(PauliWord{0, bit(j)}, 1.0);
    return e;
}

LieElement make_ZZplus(int n) {
    LieElement e(n);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) e.add_term(PauliWord{0, bit(j) | bit(k)}, 1.0);
    return e;
}

LieElement sector_project(const LieElement& e, int sign) {
    if (sign != 1 && sign != -1) throw validation_error("sector sign must be +/-1");
    const PauliString zh = make_Zhat(e.n());
    const double zsign = (zh.phase_exp == 0) ? 1.0 : -1.0;
    LieElement ze = multiply_word(zh.word, e);
    ze *= 0.5 * zsign * sign;
    LieElement r = e;
    r *= 0.5;
    r += ze;
    return r;
}

namespace {

void check_sigma(int n, int j, int k, std::uint64_t sigma) {
    const std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    if ((sigma & ~all) != 0) throw validation_error("sigma outside qubit range");
    if (sigma & (bit(j) | bit(k))) throw validation_error("sigma overlaps the (j,k) pair");
}

}  // namespace

LieElement make_Psigma(int n, int j, int k, std::uint64_t sigma) {
    check_ordered_pair(n, j, k);
    check_sigma(n, j, k, sigma);
    const int s1 = std::popcount(sigma);
    const int c = 2 * ((s1 + 1) / 2) + 1;
    const double mu = odd_power_sign(c) * 0.25;  // (i^c/2) * (1/2 per pair term)
    LieElement e(n);
    if (s1 % 2 == 0) {  // XY pair: (X_j X_k + Y_j Y_k)/2
        e.add_term(PauliWord{bit(j) | bit(k), sigma}, mu);
        e.add_term(PauliWord{bit(j) | bit(k), sigma | bit(j) | bit(k)}, mu);
    } else {  // YX pair: (X_j Y_k - Y_j X_k)/2
        e.add_term(PauliWord{bit(j) | bit(k), sigma | bit(k)}, mu);
        e.add_term(PauliWord{bit(j) | bit(k), sigma | bit(j)}, -mu);
    }
    return e;
}

LieElement make_Pmusigma(int n, int j, int k,
                         const std::vector<std::pair<int, int>>& mu_pairs,
                         std::uint64_t sigma) {
    check_ordered_pair(n, j, k);
    std::uint64_t used = bit(j) | bit(k);
    for (auto [p, q] : mu_pairs) {
        check_pair(n, p, q);
        if ((used & (bit(p) | bit(q))) != 0)
            throw validation_error("mu pairs must be disjoint from each other and (j,k)");
        used |= bit(p) | bit(q);
    }
    if (sigma & used) throw validation_error("sigma overlaps a pair");
    check_sigma(n, j, k, sigma & ~used);

    const int s1 = std::popcount(sigma);
    // Generation from P_sigma trades one Z (sigma) for one YX pair (mu) per
    // step, so |sigma| + |mu| keeps the parity of the seed P_sigma, whose
    // first pair is XY exactly when that parity is even.
    const bool first_xy = (s1 + static_cast<int>(mu_pairs.size())) % 2 == 0;

    // Expand the product of pair factors over disjoint supports; each factor
    // contributes two Hermitian words with +/- 1/2 coefficients.
    struct Term {
        PauliWord w;
        double c;
    };
    std::vector<Term> terms;
    if (first_xy) {
        terms.push_back({PauliWord{bit(j) | bit(k), 0}, 0.5});
        terms.push_back({PauliWord{bit(j) | bit(k), bit(j) | bit(k)}, 0.5});
    } else {
        terms.push_back({PauliWord{bit(j) | bit(k), bit(k)}, 0.5});
        terms.push_back({PauliWord{bit(j) | bit(k), bit(j)}, -0.5});
    }
    for (auto [p, q] : mu_pairs) {  // YX_{p,q} = (X_p Y_q - Y_p X_q)/2
        std::vector<Term> next;
        next.reserve(terms.size() * 2);
        for (const auto& t : terms) {
            next.push_back({PauliWord{t.w.x | bit(p) | bit(q), t.w.z | bit(q)}, 0.5 * t.c});
            next.push_back({PauliWord{t.w.x | bit(p) | bit(q), t.w.z | bit(p)}, -0.5 * t.c});
        }
        terms = std::move(next);
    }
    LieElement e(n);
    for (const auto& t : terms) e.add_term(PauliWord{t.w.x, t.w.z | sigma}, 0.5 * t.c);
    return e;
}

double nested_generation_residual_P(int n, int j, int k) {
    check_ordered_pair(n, j, k);
    LieElement e = xy_generator(n, j, j + 1);
    for (int m = j + 1; m < k; ++m) e = commutator(e, xy_generator(n, m, m + 1));
    e -= make_P(n, j, k);
    return hs_norm(e);
}

double nested_generation_residual_Dminus_cycle(int n) {
    LieElement p = xy_generator(n, 1, 2);
    for (int m = 2; m < n; ++m) p = commutator(p, xy_generator(n, m, m + 1));
    LieElement fc = commutator(xy_generator(n, n, 1), p);
    fc *= 0.5;
    if (n % 2 == 1) fc -= make_Dminus(n, n, 1);
    return hs_norm(fc);
}

namespace {

using Family = std::function<LieElement(int, int)>;

struct RelationAccumulator {
    std::vector<RelationReport> reports;

    RelationReport& get(const std::string& name) {
        for (auto& r : reports)
            if (r.relation == name) return r;
        reports.push_back({name, 0, 0.0, true});
        return reports.back();
    }

    void record(const std::string& name, LieElement lhs, const LieElement& rhs) {
        lhs -= rhs;
        record_zero(name, lhs);
    }

    void record_zero(const std::string& name, const LieElement& diff) {
        RelationReport& r = get(name);
        ++r.instances;
        const double res = hs_norm(diff);
        r.max_residual = std::max(r.max_residual, res);
        r.pass = r.pass && res < 1e-12;
    }
};

LieElement scaled(LieElement e, double s) {
    e *= s;
    return e;
}

/// The common structure-constant table shared by every topology's (a, s, d)
/// triple (path uses only the first three):
///   [a_jk,a_kl]=a_jl  [a_jl,a_jk]=a_kl  [a_kl,a_jl]=a_jk
///   [s_jk,s_kl]=-a_jl [s_jl,s_jk]=a_kl  [s_kl,s_jl]=a_jk
///   [a_jk,s_kl]=s_jl  [s_jk,a_kl]=s_jl
///   [a_jk,s_jk]=2d_jk [d_jk,a_jk]=2s_jk [s_jk,d_jk]=2a_jk
///   [d_jk,a_kl]=-s_kl [a_jk,d_kl]=s_jk
///   [d_jr,a_jk]=s_jk (r!=j,k)   [d_rk,a_jk]=s_jk (r!=j,k)
///   disjoint index pairs commute.
void run_table(RelationAccumulator& acc, int n, const Family& a, const Family& s,
               const Family& d, bool a_only, const std::string& tag) {
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) {
                acc.record(tag + "SO1/SU1 [a_jk,a_kl]=a_jl", commutator(a(j, k), a(k, l)), a(j, l));
                acc.record(tag + "SO2/SU2 [a_jl,a_jk]=a_kl", commutator(a(j, l), a(j, k)), a(k, l));
                acc.record(tag + "SO3/SU3 [a_kl,a_jl]=a_jk", commutator(a(k, l), a(j, l)), a(j, k));
                if (a_only) continue;
                acc.record(tag + "SU4 [s_jk,s_kl]=-a_jl", commutator(s(j, k), s(k, l)),
                           scaled(a(j, l), -1.0));
                acc.record(tag + "SU5 [s_jl,s_jk]=a_kl", commutator(s(j, l), s(j, k)), a(k, l));
                acc.record(tag + "SU6 [s_kl,s_jl]=a_jk", commutator(s(k, l), s(j, l)), a(j, k));
                acc.record(tag + "SU mixed [a_jk,s_kl]=s_jl", commutator(a(j, k), s(k, l)),
                           s(j, l));
                acc.record(tag + "SU mixed [s_jk,a_kl]=s_jl", commutator(s(j, k), a(k, l)),
                           s(j, l));
                acc.record(tag + "SU10 [d_jk,a_kl]=-s_kl", commutator(d(j, k), a(k, l)),
                           scaled(s(k, l), -1.0));
                acc.record(tag + "SU12 [a_jk,d_kl]=s_jk", commutator(a(j, k), d(k, l)), s(j, k));
            }
    if (!a_only) {
        for (int j = 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                acc.record(tag + "SU7 [a_jk,s_jk]=2d_jk", commutator(a(j, k), s(j, k)),
                           scaled(d(j, k), 2.0));
                acc.record(tag + "SU8 [d_jk,a_jk]=2s_jk", commutator(d(j, k), a(j, k)),
                           scaled(s(j, k), 2.0));
                acc.record(tag + "SU9 [s_jk,d_jk]=2a_jk", commutator(s(j, k), d(j, k)),
                           scaled(a(j, k), 2.0));
                for (int r = 1; r <= n; ++r) {
                    if (r == j || r == k) continue;
                    acc.record(tag + "SU11 [d_jr,a_jk]=s_jk", commutator(d(j, r), a(j, k)),
                               s(j, k));
                    acc.record(tag + "SU13 [d_rk,a_jk]=s_jk", commutator(d(r, k), a(j, k)),
                               s(j, k));
                }
            }
    }
    // Disjoint supports commute.
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            for (int l = 1; l <= n; ++l)
                for (int m = l + 1; m <= n; ++m) {
                    if (l == j || l == k || m == j || m == k) continue;
                    acc.record_zero(tag + "disjoint [a_jk,a_lm]=0",
                                    commutator(a(j, k), a(l, m)));
                }
}

}  // namespace

std::vector<RelationReport> check_su_relations(int n, RelationTopology topo) {
    if (n < 3) throw validation_error("relation suite needs n >= 3");
    RelationAccumulator acc;
    switch (topo) {
        case RelationTopology::Path: {
            Family a = [n](int j, int k) { return make_P(n, j, k); };
            run_table(acc, n, a, a, a, /*a_only=*/true, "");
            break;
        }
        case RelationTopology::OddCycle: {
            if (n % 2 == 0) throw validation_error("odd-cycle relations need odd n");
            run_table(
                acc, n, [n](int j, int k) { return make_P(n, j, k); },
                [n](int j, int k) { return make_Pminus(n, std::min(j, k), std::max(j, k)); },
                [n](int j, int k) { return make_Dminus(n, j, k); }, false, "");
            break;
        }
        case RelationTopology::PathZ: {
            run_table(
                acc, n, [n](int j, int k) { return make_P(n, j, k); },
                [n](int j, int k) { return make_Q(n, std::min(j, k), std::max(j, k)); },
                [n](int j, int k) { return make_D(n, j, k); }, false, "");
            break;
        }
        case RelationTopology::CycleZ: {
            for (int sign : {1, -1}) {
                const std::string tag = sign > 0 ? "B+ " : "B- ";
                run_table(
                    acc, n,
                    [n, sign](int j, int k) { return sector_project(make_P(n, j, k), sign); },
                    [n, sign](int j, int k) {
                        return sector_project(make_Q(n, std::min(j, k), std::max(j, k)), sign);
                    },
                    [n, sign](int j, int k) { return sector_project(make_D(n, j, k), sign); },
                    false, tag);
            }
            // Opposite sectors commute elementwise.
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        for (int m = l + 1; m <= n; ++m) {
                            for (auto f : {&make_P, &make_Q, &make_D}) {
                                for (auto g : {&make_P, &make_Q, &make_D}) {
                                    acc.record_zero(
                                        "cross-sector [B+,B-]=0",
                                        commutator(sector_project((*f)(n, j, k), 1),
                                                   sector_project((*g)(n, l, m), -1)));
                                }
                            }
                        }
            break;
        }
    }
    return acc.reports;
}

std::vector<RelationReport> check_zhat_maps(int n) {
    if (n < 3) throw validation_error("Zhat suite needs n >= 3");
    RelationAccumulator acc;
    const PauliString zh = make_Zhat(n);
    const double zsign = (zh.phase_exp == 0) ? 1.0 : -1.0;
    const bool even = n % 2 == 0;

    {  // Involution: Zhat * Zhat = +1 * identity word.
        const PauliString sq = multiply(zh, zh);
        RelationReport& r = acc.get("Zhat involution");
        ++r.instances;
        r.pass = sq.word.is_identity() && sq.phase_exp == 0;
        r.max_residual = r.pass ? 0.0 : 1.0;
    }
    auto zhat_times = [&](const LieElement& e) {
        LieElement r = multiply_word(zh.word, e);
        r *= zsign;
        return r;
    };
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            const LieElement P = make_P(n, j, k), Q = make_Q(n, j, k);
            acc.record(even ? "Zhat*P=Pminus (even n)" : "Zhat*P=-Qminus (odd n)", zhat_times(P),
                       even ? make_Pminus(n, j, k) : scaled(make_Qminus(n, j, k), -1.0));
            acc.record(even ? "Zhat*Q=Qminus (even n)" : "Zhat*Q=Pminus (odd n)", zhat_times(Q),
                       even ? make_Qminus(n, j, k) : make_Pminus(n, j, k));
            acc.record("Zhat*D=Dminus", zhat_times(make_D(n, j, k)), make_Dminus(n, j, k));
            // Zhat commutes with every family element.
            bool commutes = true;
            for (const auto& [w, c] : P.terms()) commutes = commutes && !anticommute(zh.word, w);
            RelationReport& r = acc.get("[Zhat, P_jk] = 0");
            ++r.instances;
            r.pass = r.pass && commutes;
            if (!commutes) r.max_residual = 1.0;
            // (I +/- Zhat)/2 idempotent and mutually annihilating on elements.
            for (int sign : {1, -1}) {
                const LieElement pr = sector_project(P, sign);
                acc.record("sector projection idempotent", sector_project(pr, sign), pr);
                acc.record_zero("sector projections annihilate", sector_project(pr, -sign));
            }
        }
    return acc.reports;
}

unsigned long long count_clique_lower_bound(int n) {
    if (n < 2) throw validation_error("need n >= 2");
    unsigned long long count = 0;
    for (int l = 1; 2 * l <= n; ++l)
        count += binomial(n, 2 * l) * (1ULL << (n - 2 * l));

    if (n <= 5) {
        // Cross-check: one canonical P_{mu,sigma} per (even support, sigma)
        // choice; the collection must be linearly independent.
        std::vector<LieElement> elems;
        const std::uint64_t full = (1ULL << n) - 1;
        for (std::uint64_t S = 0; S <= full; ++S) {
            const int pop = std::popcount(S);
            if (pop < 2 || pop % 2 != 0) continue;
            std::vector<int> verts;
            for (int q = 1; q <= n; ++q)
                if (S & bit(q)) verts.push_back(q);
            std::vector<std::pair<int, int>> mu;
            for (std::size_t i = 2; i + 1 < verts.size(); i += 2)
                mu.push_back({verts[i], verts[i + 1]});
            // Iterate sigma over subsets of the complement of S.
            const std::uint64_t comp = full & ~S;
            std::uint64_t sigma = 0;
            while (true) {
                elems.push_back(make_Pmusigma(n, verts[0], verts[1], mu, sigma));
                if (sigma == comp) break;
                sigma = (sigma - comp) & comp;  // next subset of comp
            }
        }
        if (elems.size() != count)
            throw validation_error("clique lower-bound construction count mismatch");
        std::unordered_map<PauliWord, int, PauliWordHash> widx;
        for (const auto& e : elems)
            for (const auto& [w, c] : e.terms()) widx.try_emplace(w, static_cast<int>(widx.size()));
        Eigen::MatrixXd M = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(elems.size()),
                                                  static_cast<Eigen::Index>(widx.size()));
        for (std::size_t i = 0; i < elems.size(); ++i)
            for (const auto& [w, c] : elems[i].terms())
                M(static_cast<Eigen::Index>(i), widx.at(w)) = c;
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
        qr.setThreshold(1e-8);
        if (static_cast<unsigned long long>(qr.rank()) != count)
            throw validation_error("clique lower-bound rank check failed");
    }
    return count;
}

}  // namespace xylab
