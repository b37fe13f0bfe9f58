#ifndef DGOP_LINEAR_MAP_HPP
#define DGOP_LINEAR_MAP_HPP

#include <map>
#include <utility>

#include "dgop/graded.hpp"
#include "dgop/linalg.hpp"

namespace dgop {

/// A homogeneous vector: coefficients on the basis of one degree.
struct HVec {
    Deg deg = 0;
    std::map<int, Scalar> c;

    bool is_zero() const { return c.empty(); }
    void add(int i, const Scalar& s);
};

/// A degree-homogeneous linear map between graded spaces, stored as sparse
/// blocks indexed by source degree. Absent block = zero.
class LinearMap {
public:
    LinearMap() = default;
    LinearMap(GradedVectorSpace src, GradedVectorSpace tgt, int degree)
        : src_(std::move(src)), tgt_(std::move(tgt)), degree_(degree) {}

    static LinearMap identity(const GradedVectorSpace& v);

    const GradedVectorSpace& source() const { return src_; }
    const GradedVectorSpace& target() const { return tgt_; }
    int degree() const { return degree_; }
    Field field() const { return src_.field(); }

    void set(Deg d, int row, int col, const Scalar& s);
    void add_to(Deg d, int row, int col, const Scalar& s);
    Scalar entry(Deg d, int row, int col) const;

    /// Image of the col-th basis vector of source degree d.
    HVec apply_basis(Deg d, int col) const;
    HVec apply(const HVec& v) const;

    /// this ∘ g (apply g first).
    LinearMap compose(const LinearMap& g) const;
    LinearMap plus(const LinearMap& o) const;
    LinearMap minus(const LinearMap& o) const;
    LinearMap scaled(const Scalar& s) const;
    LinearMap negated() const;

    bool is_zero() const;
    bool operator==(const LinearMap& o) const;
    bool operator!=(const LinearMap& o) const { return !(*this == o); }

    /// Dense block: rows = target basis at d + degree, cols = source basis at d.
    DenseMat dense_block(Deg d) const;

    const std::map<Deg, std::map<std::pair<int, int>, Scalar>>& blocks() const { return blocks_; }

private:
    GradedVectorSpace src_, tgt_;
    int degree_ = 0;
    std::map<Deg, std::map<std::pair<int, int>, Scalar>> blocks_;
};

}  // namespace dgop

#endif
