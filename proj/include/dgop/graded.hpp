#ifndef DGOP_GRADED_HPP
#define DGOP_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "dgop/scalar.hpp"

namespace dgop {

using Deg = int;

/// Inclusive degree window [lo, hi] used to truncate unbounded constructions.
struct Window {
    Deg lo = -8;
    Deg hi = 8;

    bool contains(Deg d) const { return lo <= d && d <= hi; }
    std::string to_string() const { return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }
};

/// A finite-support graded vector space with an ordered named basis per degree.
class GradedVectorSpace {
public:
    GradedVectorSpace() = default;
    explicit GradedVectorSpace(Field f) : field_(f) {}

    Field field() const { return field_; }

    void add(Deg d, const std::string& label);

    int dim(Deg d) const;
    int total_dim() const;
    bool empty() const { return basis_.empty(); }
    std::vector<Deg> degrees() const;
    Deg min_degree() const;
    Deg max_degree() const;
    bool has(Deg d) const { return basis_.count(d) > 0; }

    const std::vector<std::string>& labels(Deg d) const;
    const std::string& label(Deg d, int i) const;
    /// Returns -1 when the label is absent in that degree.
    int index_of(Deg d, const std::string& label) const;

    bool operator==(const GradedVectorSpace& o) const {
        return field_ == o.field_ && basis_ == o.basis_;
    }
    bool operator!=(const GradedVectorSpace& o) const { return !(*this == o); }

private:
    Field field_;
    std::map<Deg, std::vector<std::string>> basis_;
    std::map<Deg, std::map<std::string, int>> index_;

    static const std::vector<std::string> empty_labels_;
};

}  // namespace dgop

#endif
