#include "dgop/perm.hpp"

#include <algorithm>

#include "dgop/scalar.hpp"

namespace dgop {

Perm perm_identity(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i)
        p[i] = i + 1;
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    if (a.size() != b.size())
        throw Error("perm_compose: size mismatch");
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        p[i] = a[b[i] - 1];
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        q[p[i] - 1] = static_cast<int>(i) + 1;
    return q;
}

int perm_sign(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j])
                ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

Perm adjacent_transposition(int n, int i) {
    if (i < 1 || i >= n)
        throw Error("adjacent_transposition: index out of range");
    Perm p = perm_identity(n);
    std::swap(p[i - 1], p[i]);
    return p;
}

std::vector<int> adjacent_factorization(Perm p) {
    // bubble sort to the identity, recording swaps
    std::vector<int> swaps;
    int n = static_cast<int>(p.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i < n; ++i)
            if (p[i - 1] > p[i]) {
                std::swap(p[i - 1], p[i]);
                swaps.push_back(i);
                changed = true;
            }
    }
    // swapping positions i,i+1 is right multiplication by s_i, so
    // p ∘ s_{f_1} ∘ ... ∘ s_{f_k} = id and p = s_{f_k} ∘ ... ∘ s_{f_1}
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

Perm block_substitution(const Perm& u, int i, const Perm& v) {
    int r = static_cast<int>(u.size()), s = static_cast<int>(v.size());
    if (i < 1 || i > r)
        throw Error("block_substitution: position out of range");
    Perm out(r + s - 1);
    int ui = u[i - 1];
    auto out_pos = [&](int w) { return w + (w > ui ? s - 1 : 0); };
    for (int j = 1; j <= r + s - 1; ++j) {
        if (j < i) {
            out[j - 1] = out_pos(u[j - 1]);
        } else if (j <= i + s - 1) {
            out[j - 1] = ui - 1 + v[j - i];
        } else {
            out[j - 1] = out_pos(u[j - s + 1 - 1]);
        }
    }
    return out;
}

std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = perm_identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string perm_label(const Perm& p) {
    std::string s = "w";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i && p.size() > 9)
            s += ".";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace dgop
