#ifndef DGOP_TEST_HELPERS_HPP
#define DGOP_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "dgop/chain_complex.hpp"

namespace dgop_test {

using namespace dgop;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t seed) : g(seed) {}
    int upto(int n) { return n <= 0 ? 0 : static_cast<int>(g() % static_cast<uint64_t>(n)); }
    bool coin() { return (g() & 1) != 0; }
};

/// Random f.d. chain complex: a sum of spheres and disks followed by a random
/// invertible change of basis, so d² = 0 holds exactly and blocks are dense-ish.
inline ChainComplex random_complex(Field f, Rng& rng, int cells, Deg lo, Deg hi) {
    GradedVectorSpace v(f);
    struct Cell {
        bool disk;
        Deg top;
        int top_idx, bot_idx;
    };
    std::vector<Cell> cs;
    std::map<Deg, int> counts;
    for (int i = 0; i < cells; ++i) {
        bool disk = rng.coin();
        Deg top = lo + rng.upto(hi - lo + 1);
        if (disk && top == lo)
            disk = false;
        Cell c{disk, top, 0, 0};
        c.top_idx = counts[top]++;
        if (disk)
            c.bot_idx = counts[top - 1]++;
        cs.push_back(c);
    }
    std::map<Deg, int> seen;
    for (Deg d = lo; d <= hi; ++d)
        for (int i = 0; i < counts[d]; ++i)
            v.add(d, "x" + std::to_string(d) + "_" + std::to_string(i));
    LinearMap d(v, v, -1);
    for (auto& c : cs)
        if (c.disk)
            d.set(c.top, c.bot_idx, c.top_idx, Scalar::one(f));
    // random invertible T per degree (elementary ops), conjugate d
    LinearMap t(v, v, 0), tinv(v, v, 0);
    for (Deg deg : v.degrees()) {
        int n = v.dim(deg);
        DenseMat m(f, n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = Scalar::one(f);
        int ops = 2 * n;
        for (int k = 0; k < ops; ++k) {
            int i = rng.upto(n), j = rng.upto(n);
            if (i == j)
                continue;
            long long raw = f.is_rational() ? (rng.upto(5) - 2) : rng.upto(static_cast<int>(f.p));
            Scalar s = Scalar::of(f, raw);
            for (int c2 = 0; c2 < n; ++c2)
                m.at(i, c2) += s * m.at(j, c2);
        }
        // invert m
        DenseMat aug(f, n, 2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                aug.at(i, j) = m.at(i, j);
            aug.at(i, n + i) = Scalar::one(f);
        }
        rref(aug);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!m.at(i, j).is_zero())
                    t.set(deg, i, j, m.at(i, j));
                if (!aug.at(i, n + j).is_zero())
                    tinv.set(deg, i, j, aug.at(i, n + j));
            }
    }
    LinearMap dd = t.compose(d.compose(tinv));
    ChainComplex out(v, dd);
    out.validate();
    return out;
}

/// Independent elimination oracle (rightmost-pivot strategy, half-dense),
/// deliberately a separate code path from dgop::rref.
inline int oracle_rank(const std::vector<std::vector<Scalar>>& rows, Field f) {
    std::vector<std::vector<Scalar>> m = rows;
    int rank = 0;
    size_t ncols = m.empty() ? 0 : m[0].size();
    for (int c = static_cast<int>(ncols) - 1; c >= 0; --c) {
        int pr = -1;
        for (size_t r = rank; r < m.size(); ++r)
            if (!m[r][c].is_zero()) {
                pr = static_cast<int>(r);
                break;
            }
        if (pr < 0)
            continue;
        std::swap(m[pr], m[rank]);
        Scalar inv = m[rank][c].inverse();
        for (auto& x : m[rank])
            x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (static_cast<int>(r) == rank || m[r][c].is_zero())
                continue;
            Scalar factor = m[r][c];
            for (size_t j = 0; j < ncols; ++j)
                m[r][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Scalar>> block_rows(const ChainComplex& C, Deg d) {
    Field f = C.field();
    int rows = C.space.dim(d - 1), cols = C.space.dim(d);
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar::zero(f)));
    for (int j = 0; j < cols; ++j)
        for (auto& [i, s] : C.d.apply_basis(d, j).c)
            m[i][j] = s;
    return m;
}

/// Betti number oracle: dim ker(d_d) - rank(d_{d+1}) by independent elimination.
inline int oracle_betti(const ChainComplex& C, Deg d) {
    Field f = C.field();
    int n = C.space.dim(d);
    int r1 = oracle_rank(block_rows(C, d), f);
    int r2 = oracle_rank(block_rows(C, d + 1), f);
    return n - r1 - r2;
}

}  // namespace dgop_test

#endif
