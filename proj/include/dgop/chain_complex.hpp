#ifndef DGOP_CHAIN_COMPLEX_HPP
#define DGOP_CHAIN_COMPLEX_HPP

#include "dgop/linear_map.hpp"

namespace dgop {

/// A chain complex: graded space with a degree -1 differential, d² = 0.
struct ChainComplex {
    GradedVectorSpace space;
    LinearMap d;

    ChainComplex() = default;
    explicit ChainComplex(GradedVectorSpace s) : space(s), d(s, s, -1) {}
    ChainComplex(GradedVectorSpace s, LinearMap diff) : space(std::move(s)), d(std::move(diff)) {}

    Field field() const { return space.field(); }
    /// Throws unless d has degree -1, matches the space, and d∘d = 0.
    void validate() const;

    bool operator==(const ChainComplex& o) const { return space == o.space && d == o.d; }
};

ChainComplex zero_complex(Field f);
/// The monoidal unit: the field in degree 0 with basis label "1".
ChainComplex unit_complex(Field f);
/// One-dimensional complex in degree k.
ChainComplex sphere_complex(Field f, Deg k, const std::string& label = "e");
/// Two-dimensional acyclic complex in degrees k, k-1 with d = id.
ChainComplex disk_complex(Field f, Deg k);

/// Koszul-signed tensor product; basis labels are pairs "(a,b)".
ChainComplex tensor(const ChainComplex& A, const ChainComplex& B);

/// Internal hom [A,B] with ∂f = d_B∘f - (-1)^{|f|} f∘d_A; labels "[a->b]".
ChainComplex hom_complex(const ChainComplex& A, const ChainComplex& B);

/// Direct sum with label prefixes to keep bases disjoint.
ChainComplex direct_sum(const ChainComplex& A, const ChainComplex& B,
                        const std::string& tag_a = "L.", const std::string& tag_b = "R.");

/// n-fold tensor power with a factorization table for slot-wise operations.
struct TensorPower {
    ChainComplex cx;
    int arity = 0;
    // basis index (per degree) -> list of n factors as (degree, index) into the base complex
    std::map<Deg, std::vector<std::vector<std::pair<Deg, int>>>> factors;
    std::map<Deg, std::map<std::vector<std::pair<Deg, int>>, int>> lookup;

    int index_of(Deg d, const std::vector<std::pair<Deg, int>>& fs) const;
};

TensorPower tensor_power(const ChainComplex& C, int n);

/// The hom-complex differential of a homogeneous map between complexes.
LinearMap hom_del(const LinearMap& f, const LinearMap& d_src, const LinearMap& d_tgt);

/// d_T∘f = (-1)^{|f|} f∘d_S, i.e. ∂f = 0.
bool is_chain_map(const LinearMap& f, const ChainComplex& src, const ChainComplex& tgt);

/// Place permutation on a tensor power with Koszul signs; sigma is 1-based,
/// slot i moves to slot sigma[i-1].
LinearMap place_permutation(const TensorPower& p, const std::vector<int>& sigma);

/// (id^{⊗(i-1)} ⊗ g ⊗ id^{⊗(n-i)}) ∘ f with Koszul evaluation signs, for
/// cooperations f: C -> C^{⊗n}, g: C -> C^{⊗m}; the result maps C -> C^{⊗(n+m-1)}.
LinearMap insert_at_slot(const TensorPower& pn, const TensorPower& pm, const TensorPower& pout,
                         const LinearMap& f, const LinearMap& g, int slot);

/// f^{⊗n} for a degree-0 map f: A -> B.
LinearMap tensor_power_map(const LinearMap& f, const TensorPower& pa, const TensorPower& pb);

/// Homology with chosen cycle representatives per degree.
struct Homology {
    GradedVectorSpace space;
    std::map<Deg, std::vector<HVec>> reps;
};

Homology homology(const ChainComplex& C);

std::map<Deg, int> betti_numbers(const ChainComplex& C);

/// Whether the chain map f induces an isomorphism on homology.
bool is_quasi_iso(const LinearMap& f, const ChainComplex& src, const ChainComplex& tgt);

/// Mapping cylinder factorization of a chain map f: W -> V into
/// W >-> Cyl ->> V with i a split mono, q a surjective homotopy equivalence.
struct Cylinder {
    ChainComplex cyl;
    LinearMap i;  // W -> Cyl
    LinearMap q;  // Cyl -> V
};

Cylinder mapping_cylinder(const LinearMap& f, const ChainComplex& W, const ChainComplex& V);

}  // namespace dgop

#endif
