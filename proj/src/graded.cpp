#include "dgop/graded.hpp"

#include <algorithm>

namespace dgop {

const std::vector<std::string> GradedVectorSpace::empty_labels_{};

void GradedVectorSpace::add(Deg d, const std::string& label) {
    auto& idx = index_[d];
    if (idx.count(label))
        throw Error("duplicate basis label '" + label + "' in degree " + std::to_string(d));
    idx[label] = static_cast<int>(basis_[d].size());
    basis_[d].push_back(label);
}

int GradedVectorSpace::dim(Deg d) const {
    auto it = basis_.find(d);
    return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

int GradedVectorSpace::total_dim() const {
    int n = 0;
    for (auto& [d, v] : basis_)
        n += static_cast<int>(v.size());
    return n;
}

std::vector<Deg> GradedVectorSpace::degrees() const {
    std::vector<Deg> ds;
    for (auto& [d, v] : basis_)
        if (!v.empty())
            ds.push_back(d);
    return ds;
}

Deg GradedVectorSpace::min_degree() const {
    if (basis_.empty())
        throw Error("min_degree of the zero space");
    return basis_.begin()->first;
}

Deg GradedVectorSpace::max_degree() const {
    if (basis_.empty())
        throw Error("max_degree of the zero space");
    return basis_.rbegin()->first;
}

const std::vector<std::string>& GradedVectorSpace::labels(Deg d) const {
    auto it = basis_.find(d);
    return it == basis_.end() ? empty_labels_ : it->second;
}

const std::string& GradedVectorSpace::label(Deg d, int i) const {
    auto& ls = labels(d);
    if (i < 0 || i >= static_cast<int>(ls.size()))
        throw Error("basis index out of range in degree " + std::to_string(d));
    return ls[i];
}

int GradedVectorSpace::index_of(Deg d, const std::string& label) const {
    auto it = index_.find(d);
    if (it == index_.end())
        return -1;
    auto jt = it->second.find(label);
    return jt == it->second.end() ? -1 : jt->second;
}

}  // namespace dgop
