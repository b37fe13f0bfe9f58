#ifndef DGOP_LINALG_HPP
#define DGOP_LINALG_HPP

#include <optional>
#include <vector>

#include "dgop/scalar.hpp"

namespace dgop {

/// Dense matrix over an exact field, for Gaussian elimination at desk scale.
class DenseMat {
public:
    DenseMat(Field f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// In-place reduced row echelon form with leftmost-pivot rule.
/// Returns the pivot columns in order.
std::vector<int> rref(DenseMat& m);

int rank(DenseMat m);

/// Basis of the null space, one vector per free column, reduced echelon form.
std::vector<std::vector<Scalar>> kernel_basis(DenseMat m);

/// One solution of m x = rhs with free variables set to zero
/// (lexicographically-first pivot choice), or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(DenseMat m, std::vector<Scalar> rhs);

/// Row space membership data for quotients: given generating rows of a
/// subspace W of k^n, returns (rref rows, pivot columns). The classes of the
/// non-pivot coordinate vectors form a basis of the quotient.
struct RowSpace {
    DenseMat rr;
    std::vector<int> pivots;
    std::vector<int> nonpivots;

    /// Reduce v modulo the row space (normal form of the class of v).
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
};

RowSpace row_space(DenseMat gens);

}  // namespace dgop

#endif
