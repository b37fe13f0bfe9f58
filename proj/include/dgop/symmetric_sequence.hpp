#ifndef DGOP_SYMMETRIC_SEQUENCE_HPP
#define DGOP_SYMMETRIC_SEQUENCE_HPP

#include "dgop/chain_complex.hpp"
#include "dgop/perm.hpp"

namespace dgop {

/// A dg symmetric sequence truncated at max_arity: per-arity chain complexes
/// with the S_n-action given on adjacent transpositions.
struct SymmetricSequence {
    Field field;
    int max_arity = 0;
    std::vector<ChainComplex> component;          // index = arity, 0..max_arity
    std::vector<std::vector<LinearMap>> action;   // action[n][i-1] = s_i on component[n]

    SymmetricSequence() = default;
    SymmetricSequence(Field f, int a);

    const ChainComplex& at(int n) const;
    bool zero_at(int n) const { return n > max_arity || component[n].space.empty(); }

    /// Action of an arbitrary permutation, composed from adjacent transpositions.
    LinearMap action_of(int n, const Perm& sigma) const;

    /// Chain-map, isomorphism and Coxeter-relation checks; throws on failure.
    void validate() const;
};

SymmetricSequence unit_sequence(Field f);
/// S^k(p): the regular representation k[S_p] in arity p, degree k.
SymmetricSequence sphere_sequence(Field f, Deg k, int p);
/// D^k(p): k[S_p] in degrees k-1 and k with the identity differential.
SymmetricSequence disk_sequence(Field f, Deg k, int p);

/// The composition product (M ∘ N) truncated to arities <= A, degrees in w.
/// Coinvariants over the block-permuting S_k-action are taken by Gaussian
/// elimination on span{v - s·v}; surviving representatives are the
/// lexicographically least members of each monomial orbit.
/// Throws on truncation overflow unless allow_truncation, in which case
/// out-of-window terms are dropped and noted.
SymmetricSequence compose_product(const SymmetricSequence& M, const SymmetricSequence& N, int A,
                                  Window w, bool allow_truncation = false,
                                  std::vector<std::string>* notes = nullptr);

/// Ordered tuples of disjoint subsets covering {1..n}; empty blocks allowed
/// only when with_empty is set. Deterministic order.
std::vector<std::vector<std::vector<int>>> ordered_partitions(int n, int k, bool with_empty);

/// One-dimensional trivial representation in arity p, degree k.
SymmetricSequence trivial_sequence(Field f, Deg k, int p);

/// Arity-wise direct sum with the blockwise action.
SymmetricSequence seq_direct_sum(const SymmetricSequence& a, const SymmetricSequence& b);

}  // namespace dgop

#endif
