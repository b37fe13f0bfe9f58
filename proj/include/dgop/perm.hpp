#ifndef DGOP_PERM_HPP
#define DGOP_PERM_HPP

#include <string>
#include <vector>

namespace dgop {

/// Permutations of {1..n} stored as 1-based image sequences: p[i-1] = p(i).
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a∘b)(i) = a(b(i))
Perm perm_inverse(const Perm& p);
int perm_sign(const Perm& p);
Perm adjacent_transposition(int n, int i);  // swaps i, i+1

/// Factorization into adjacent transpositions: p = s_{f[0]} ∘ s_{f[1]} ∘ ...
std::vector<int> adjacent_factorization(Perm p);

/// Operadic block substitution u ∘_i v: input i of u is expanded into the
/// |v| inputs of v; outputs renumbered accordingly.
Perm block_substitution(const Perm& u, int i, const Perm& v);

/// All permutations of {1..n} in lexicographic order of image sequences.
std::vector<Perm> all_perms(int n);

std::string perm_label(const Perm& p);

}  // namespace dgop

#endif
