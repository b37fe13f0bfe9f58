#ifndef DGOP_COALGEBRA_HPP
#define DGOP_COALGEBRA_HPP

#include <memory>

#include "dgop/free_operad.hpp"

namespace dgop {

/// A dg P-coalgebra in structural form: a cooperation C -> C^{⊗n} of degree
/// |e| for every basis element e of P(n), within the truncation.
struct PCoalgebra {
    std::shared_ptr<const Operad> operad;
    ChainComplex carrier;
    std::vector<TensorPower> powers;  // tensor powers of the carrier, 0..max_arity
    std::map<std::tuple<int, Deg, int>, LinearMap> coops;

    const LinearMap& coop(int n, Deg d, int idx) const;
    /// Linear extension of e -> Δ_e to an element of P(n).
    LinearMap coop_of(int n, const HVec& e) const;
    void set_coop(int n, Deg d, int idx, LinearMap m);
};

PCoalgebra make_pcoalgebra(std::shared_ptr<const Operad> op, ChainComplex carrier);

/// The three invariant packs: equivariance, chain compatibility, composite
/// compatibility, plus unit and shape checks. Failures carry named witnesses.
Report verify_pcoalgebra(const PCoalgebra& c);

/// Pullback of cooperations along a (verified) operad morphism P -> Q.
PCoalgebra restrict_along(const OperadMorphism& phi, std::shared_ptr<const Operad> p,
                          const PCoalgebra& c);

/// A coalgebra over a realized quasi-free operad, determined by the
/// cooperations of the generators (identity twist).
struct CellCoalgebra {
    std::shared_ptr<const RealizedOperad> operad;
    ChainComplex carrier;
    std::map<std::string, LinearMap> gen_coops;  // keyed by generator name

    /// Expands generator cooperations to the full table over all basis trees.
    PCoalgebra expand() const;
};

/// Cooperation of a tree with vertices labeled by qualified generator labels,
/// evaluated in the given generator structure.
LinearMap tree_cooperation(const CellCoalgebra& c, const TreeNode& t);
LinearMap tree_cooperation(const CellCoalgebra& c, const TreePoly& p, int arity, Deg degree);

/// Extends c along the cell (p, k, boundary): delta_new must satisfy
/// ∂(delta_new) = cooperation of the boundary polynomial (checked exactly;
/// the residual is reported on failure).
CellCoalgebra glue_cell_coalgebra(const CellCoalgebra& c, int p, Deg k, const TreePoly& boundary,
                                  const LinearMap& delta_new, int max_arity, Window w);

/// Drops the last-attached cell; exact inverse of glue_cell_coalgebra.
CellCoalgebra restrict_cell_coalgebra(const CellCoalgebra& c, int max_arity, Window w);

/// A_infinity coalgebra: Δ_n of degree n-2 on a graded carrier; Δ_1 is the
/// differential. Non-counital throughout.
struct AInftyCoalgebra {
    GradedVectorSpace carrier;
    std::vector<LinearMap> delta;  // index n = 1..N

    int top() const { return static_cast<int>(delta.size()) - 1; }
};

AInftyCoalgebra make_ainfty(GradedVectorSpace carrier, int top);

/// Evaluates, for every n <= N, the defining quadratic relation
///   sum_{r+s+t=n} (-1)^{r+st} (id^r ⊗ Δ_s ⊗ id^t) ∘ Δ_{r+1+t} = 0
/// on every basis vector. Witnesses name the violated (n, basis vector).
Report verify_ainfty(const AInftyCoalgebra& c, int top);

/// The isofibration lift: given a T(D^k(p))-structure on W (its top
/// cooperation delta_x_w), a strict T(S^{k-1}(p))-structure on V and an
/// equivariant quasi-isomorphism f, produces a T(D^k(p))-structure on V whose
/// restriction is strictly delta_y_v, together with an explicit homotopy
/// comparing it with the structure on W through f.
struct LiftResult {
    LinearMap lifted;  // degree-k cooperation V -> V^{⊗p}
    LinearMap h_tau;   // degree k+1 component of the homotopy, W -> V^{⊗p}
    LinearMap h_beta;  // degree k component, W -> V^{⊗p}
};

LiftResult lift_cell_structure(const ChainComplex& w, const LinearMap& delta_x_w,
                               const ChainComplex& v, const LinearMap& delta_y_v,
                               const LinearMap& f, int p, Deg k);

}  // namespace dgop

#endif
