#include "dgop/linear_map.hpp"

namespace dgop {

void HVec::add(int i, const Scalar& s) {
    if (s.is_zero())
        return;
    auto it = c.find(i);
    if (it == c.end()) {
        c.emplace(i, s);
    } else {
        it->second += s;
        if (it->second.is_zero())
            c.erase(it);
    }
}

LinearMap LinearMap::identity(const GradedVectorSpace& v) {
    LinearMap m(v, v, 0);
    for (Deg d : v.degrees())
        for (int i = 0; i < v.dim(d); ++i)
            m.set(d, i, i, Scalar::one(v.field()));
    return m;
}

void LinearMap::set(Deg d, int row, int col, const Scalar& s) {
    if (col < 0 || col >= src_.dim(d) || row < 0 || row >= tgt_.dim(d + degree_))
        throw Error("LinearMap::set out of range at degree " + std::to_string(d));
    if (s.is_zero())
        blocks_[d].erase({row, col});
    else
        blocks_[d][{row, col}] = s;
}

void LinearMap::add_to(Deg d, int row, int col, const Scalar& s) {
    if (s.is_zero())
        return;
    if (col < 0 || col >= src_.dim(d) || row < 0 || row >= tgt_.dim(d + degree_))
        throw Error("LinearMap::add_to out of range at degree " + std::to_string(d));
    auto& blk = blocks_[d];
    auto it = blk.find({row, col});
    if (it == blk.end()) {
        blk.emplace(std::make_pair(row, col), s);
    } else {
        it->second += s;
        if (it->second.is_zero())
            blk.erase(it);
    }
}

Scalar LinearMap::entry(Deg d, int row, int col) const {
    auto bit = blocks_.find(d);
    if (bit == blocks_.end())
        return Scalar::zero(field());
    auto it = bit->second.find({row, col});
    return it == bit->second.end() ? Scalar::zero(field()) : it->second;
}

HVec LinearMap::apply_basis(Deg d, int col) const {
    HVec out;
    out.deg = d + degree_;
    auto bit = blocks_.find(d);
    if (bit == blocks_.end())
        return out;
    for (auto& [rc, s] : bit->second)
        if (rc.second == col)
            out.add(rc.first, s);
    return out;
}

HVec LinearMap::apply(const HVec& v) const {
    HVec out;
    out.deg = v.deg + degree_;
    auto bit = blocks_.find(v.deg);
    if (bit == blocks_.end())
        return out;
    for (auto& [rc, s] : bit->second) {
        auto it = v.c.find(rc.second);
        if (it != v.c.end())
            out.add(rc.first, s * it->second);
    }
    return out;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
    if (g.tgt_ != src_)
        throw Error("LinearMap::compose shape mismatch");
    LinearMap out(g.src_, tgt_, degree_ + g.degree_);
    for (auto& [d, blk] : g.blocks_) {
        auto hit = blocks_.find(d + g.degree_);
        if (hit == blocks_.end())
            continue;
        for (auto& [rc2, s2] : blk)
            for (auto& [rc1, s1] : hit->second)
                if (rc1.second == rc2.first)
                    out.add_to(d, rc1.first, rc2.second, s1 * s2);
    }
    return out;
}

LinearMap LinearMap::plus(const LinearMap& o) const {
    if (o.src_ != src_ || o.tgt_ != tgt_ || o.degree_ != degree_)
        throw Error("LinearMap::plus shape mismatch");
    LinearMap out = *this;
    for (auto& [d, blk] : o.blocks_)
        for (auto& [rc, s] : blk)
            out.add_to(d, rc.first, rc.second, s);
    return out;
}

LinearMap LinearMap::minus(const LinearMap& o) const {
    return plus(o.negated());
}

LinearMap LinearMap::scaled(const Scalar& s) const {
    LinearMap out(src_, tgt_, degree_);
    if (s.is_zero())
        return out;
    for (auto& [d, blk] : blocks_)
        for (auto& [rc, v] : blk)
            out.set(d, rc.first, rc.second, v * s);
    return out;
}

LinearMap LinearMap::negated() const {
    return scaled(-Scalar::one(field()));
}

bool LinearMap::is_zero() const {
    for (auto& [d, blk] : blocks_)
        if (!blk.empty())
            return false;
    return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
    if (src_ != o.src_ || tgt_ != o.tgt_ || degree_ != o.degree_)
        return false;
    return minus(o).is_zero();
}

DenseMat LinearMap::dense_block(Deg d) const {
    DenseMat m(field(), tgt_.dim(d + degree_), src_.dim(d));
    auto bit = blocks_.find(d);
    if (bit != blocks_.end())
        for (auto& [rc, s] : bit->second)
            m.at(rc.first, rc.second) = s;
    return m;
}

}  // namespace dgop
