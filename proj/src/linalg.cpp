#include "dgop/linalg.hpp"

namespace dgop {

std::vector<int> rref(DenseMat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0)
            continue;
        if (pr != r)
            for (int j = c; j < m.cols(); ++j)
                std::swap(m.at(pr, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (int j = c; j < m.cols(); ++j)
            m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero())
                continue;
            Scalar factor = m.at(i, c);
            for (int j = c; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(DenseMat m) {
    return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Scalar>> kernel_basis(DenseMat m) {
    Field f = m.field();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[c] = Scalar::one(f);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(DenseMat m, std::vector<Scalar> rhs) {
    if (static_cast<int>(rhs.size()) != m.rows())
        throw Error("solve: rhs size mismatch");
    Field f = m.field();
    DenseMat aug(f, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;  // inconsistent
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

RowSpace row_space(DenseMat gens) {
    auto pivots = rref(gens);
    std::vector<bool> is_pivot(gens.cols(), false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<int> nonpivots;
    for (int c = 0; c < gens.cols(); ++c)
        if (!is_pivot[c])
            nonpivots.push_back(c);
    return RowSpace{std::move(gens), std::move(pivots), std::move(nonpivots)};
}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
    for (size_t r = 0; r < pivots.size(); ++r) {
        int c = pivots[r];
        if (v[c].is_zero())
            continue;
        Scalar factor = v[c];
        for (int j = 0; j < rr.cols(); ++j)
            v[j] -= factor * rr.at(static_cast<int>(r), j);
    }
    return v;
}

}  // namespace dgop
