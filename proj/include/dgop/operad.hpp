#ifndef DGOP_OPERAD_HPP
#define DGOP_OPERAD_HPP

#include <set>
#include <tuple>

#include "dgop/symmetric_sequence.hpp"

namespace dgop {

/// Machine-readable verification report: named checks with witnesses.
struct Report {
    struct Entry {
        std::string check;
        std::string witness;
    };
    std::vector<Entry> failures;
    int checks_run = 0;

    bool pass() const { return failures.empty(); }
    void note(bool ok, const std::string& check, const std::string& witness) {
        ++checks_run;
        if (!ok)
            failures.push_back({check, witness});
    }
};

/// Thrown when a composite is evaluated on arguments whose image falls
/// outside the degree window of a truncated operad.
class TruncatedComposite : public Error {
public:
    explicit TruncatedComposite(const std::string& msg) : Error(msg) {}
};

/// A truncated dg operad stored by partial composites.
struct Operad {
    SymmetricSequence seq;
    HVec unit;  // element of seq.component[1] in degree 0

    /// composites[(n,i,m)]: tensor(comp[n], comp[m]) -> comp[n+m-1], present
    /// whenever n, m, n+m-1 are within the truncation and components nonzero.
    std::map<std::tuple<int, int, int>, LinearMap> composites;
    std::map<std::pair<int, int>, ChainComplex> pair_spaces;

    /// Basis pairs whose composite leaves the degree window; evaluating them
    /// throws TruncatedComposite.
    std::set<std::tuple<int, int, int, Deg, int, Deg, int>> undefined_pairs;

    int max_arity() const { return seq.max_arity; }
    Field field() const { return seq.field; }
    bool has_composite(int n, int i, int m) const;

    /// f ∘_i g on basis elements; the Koszul signs live in the stored matrix.
    HVec compose_basis(int n, int i, int m, Deg dn, int bn, Deg dm, int bm) const;
    HVec compose(int n, int i, int m, const HVec& f, const HVec& g) const;

    /// Derived total composition on a two-level element (gamma on basis input).
    void validate_shapes() const;
};

/// Builds the composites table entry source space.
ChainComplex operad_pair_space(const Operad& p, int n, int m);

/// Full axiom pack: d^2, Coxeter, unit, chain maps, equivariance, sequential
/// and parallel associativity, all exact within the truncation.
Report check_operad(const Operad& p);

/// End_V(n) = [V^{⊗n}, V] with composition of maps and place permutations.
Operad endomorphism_operad(const ChainComplex& v, int max_arity);

/// coEnd_V(n) = [V, V^{⊗n}].
Operad coendomorphism_operad(const ChainComplex& v, int max_arity);

/// A degree-0 arity-wise map of operads.
struct OperadMorphism {
    std::vector<LinearMap> maps;  // index = arity
    HVec apply(int n, const HVec& v) const;
};

OperadMorphism identity_morphism(const Operad& p);

/// Checks chain-map, unit, equivariance and composite compatibility; failures
/// carry named witnesses.
Report verify_operad_morphism(const Operad& p, const Operad& q, const OperadMorphism& phi);

}  // namespace dgop

#endif
