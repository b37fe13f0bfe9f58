#ifndef DGOP_FREE_OPERAD_HPP
#define DGOP_FREE_OPERAD_HPP

#include "dgop/operad.hpp"
#include "dgop/tree.hpp"

namespace dgop {

/// One cell generator: name, arity, degree, and a boundary tree polynomial in
/// strictly earlier generators (trees reference generators by plain name; the
/// S_p-orbit basis elements are written name.wPERM).
struct GeneratorSpec {
    std::string name;
    int arity = 0;
    Deg degree = 0;
    TreePoly boundary;
};

struct QuasiFreePresentation {
    std::vector<GeneratorSpec> gens;
};

/// A free or quasi-free operad realized on its canonical tree basis.
struct RealizedOperad {
    Operad op;
    GenTable gens;
    std::map<std::string, TreePoly> boundaries;  // per generator label
    GenAction action;                            // label-level S-action
    Window window;
    bool exact = true;          // truncation-complete within (A, window)
    std::string provenance;     // human-readable truncation evidence

    /// Tree polynomial -> coordinates in the component of its arity.
    HVec to_hvec(int arity, const TreePoly& p) const;
    TreePoly to_poly(int arity, const HVec& v) const;
};

/// Free operad on a symmetric sequence: basis = canonical decorated trees,
/// grafting composition, derivation differential induced by d_M.
RealizedOperad free_operad(const SymmetricSequence& m, int max_arity, Window w);

/// Realization of a quasi-free presentation; checks d² = 0 on every basis
/// tree and throws if the presentation is inconsistent.
RealizedOperad realize(const QuasiFreePresentation& q, Field f, int max_arity, Window w);

/// Appends a cell; the boundary must be a cycle of arity p, degree k-1 for
/// the current differential (checked by realization).
QuasiFreePresentation attach_cell(const QuasiFreePresentation& q, int p, Deg k,
                                  const TreePoly& boundary, int check_arity_limit = -1,
                                  Window check_window = Window{-10, 10});

/// Independent route for free-operad dimensions: the iterated composition
/// recursion T = 1 ⊕ (M ∘ T) run to stabilization at the chain level.
std::map<int, std::map<Deg, int>> free_operad_dims_by_recursion(const SymmetricSequence& m,
                                                                int max_arity, Window w);

/// The standard quasi-free presentation with generators m2, m3, ..., mN of
/// degree n-2 and the quadratic boundaries of the coherence tower.
QuasiFreePresentation a_infinity_presentation(Field f, int top_arity);

}  // namespace dgop

#endif
