#ifndef DGOP_TREE_HPP
#define DGOP_TREE_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dgop/perm.hpp"
#include "dgop/scalar.hpp"
#include "dgop/graded.hpp"

namespace dgop {

/// A rooted tree with internal vertices labeled by generator names and leaves
/// labeled 1..n. Canonical form: children of every vertex sorted by minimal
/// leaf label; the vertex word is the pre-order traversal.
struct TreeNode {
    int leaf = 0;  // > 0 for leaves
    std::string gen;
    std::vector<TreeNode> children;

    bool is_leaf() const { return leaf > 0; }
    bool operator==(const TreeNode& o) const;
    bool operator<(const TreeNode& o) const;
};

struct GenInfo {
    int arity = 0;
    Deg degree = 0;
};

using GenTable = std::map<std::string, GenInfo>;

/// Action of a permutation on a generator label, expanded in the label basis.
using GenAction =
    std::function<std::vector<std::pair<std::string, Scalar>>(const std::string&, const Perm&)>;

std::string tree_string(const TreeNode& t);
TreeNode leaf_tree(int label);
int tree_num_leaves(const TreeNode& t);
Deg tree_degree(const TreeNode& t, const GenTable& gens);
int tree_num_vertices(const TreeNode& t);
/// Checks leaves are labeled bijectively by 1..n and arities match; throws.
void tree_validate(const TreeNode& t, const GenTable& gens);
int tree_min_leaf(const TreeNode& t);

struct TreeMono {
    TreeNode t;
    Scalar c;
};

/// Formal sum of canonical trees, deduplicated by canonical string.
struct TreePoly {
    std::map<std::string, TreeMono> terms;

    void add(const TreeNode& t, const Scalar& c);
    void add_poly(const TreePoly& p, const Scalar& scale);
    bool is_zero() const { return terms.empty(); }
};

/// Grafting t ∘_i s: leaf i of t is replaced by s, leaves renumbered, with the
/// Koszul sign from moving s's vertex word past the vertices after leaf i.
/// Both inputs canonical => output canonical.
TreeMono graft(const TreeNode& t, int i, const TreeNode& s, const GenTable& gens, Field f);

/// In-place vertex expansion: the vertex at pre-order position vpos (counting
/// internal vertices only, 0-based) is replaced by the canonical tree q of the
/// same arity, its children re-attached along q's leaves. Returns the spliced
/// tree and the interleaving Koszul sign.
TreeMono splice_vertex(const TreeNode& t, int vpos, const TreeNode& q, const GenTable& gens,
                       Field f);

/// Sort children canonically, acting on vertex labels via act; expands into a
/// polynomial when the action is not monomial.
TreePoly canonicalize(const TreeNode& planar, const GenTable& gens, const GenAction& act, Field f);

/// Leaf relabeling action sigma · t (leaf l -> sigma(l)) followed by
/// canonicalization.
TreePoly tree_leaf_action(const TreeNode& t, const Perm& sigma, const GenTable& gens,
                          const GenAction& act, Field f);

/// Derivation differential: vertices are expanded by their boundary
/// polynomials with pre-order Leibniz signs. boundary(label) must return
/// canonical trees of matching arity and degree |label| - 1.
TreePoly tree_derivation(const TreeNode& t, const GenTable& gens,
                         const std::function<const TreePoly&(const std::string&)>& boundary,
                         Field f);

/// All canonical trees on leaves {1..n} with at most max_vertices internal
/// vertices, every vertex labeled by a generator of matching arity.
std::vector<TreeNode> enumerate_trees(int n, const GenTable& gens, int max_vertices);

/// Parse "g(h(1,3),2)" / "1" back into a tree.
TreeNode parse_tree(const std::string& s);

}  // namespace dgop

#endif
