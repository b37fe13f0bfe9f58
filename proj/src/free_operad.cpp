#include "dgop/free_operad.hpp"

#include <algorithm>

namespace dgop {

HVec RealizedOperad::to_hvec(int arity, const TreePoly& p) const {
    HVec out;
    bool first = true;
    for (auto& [key, mono] : p.terms) {
        Deg d = tree_degree(mono.t, gens);
        if (first) {
            out.deg = d;
            first = false;
        } else if (out.deg != d) {
            throw Error("to_hvec: inhomogeneous tree polynomial");
        }
        int idx = op.seq.at(arity).space.index_of(d, key);
        if (idx < 0)
            throw Error("to_hvec: tree outside the realized basis: " + key);
        out.add(idx, mono.c);
    }
    return out;
}

TreePoly RealizedOperad::to_poly(int arity, const HVec& v) const {
    TreePoly p;
    for (auto& [i, c] : v.c)
        p.add(parse_tree(op.seq.at(arity).space.label(v.deg, i)), c);
    return p;
}

namespace {

struct BudgetInfo {
    int budget;
    bool finite;  // no arity<=1 generators: the operad is finite in each arity
};

BudgetInfo vertex_budget(const GenTable& gens, int n, Window w) {
    bool has1 = false;
    Deg min_abs1 = 0;
    int sign1 = 0;
    Deg max_abs_high = 0;
    for (auto& [name, info] : gens) {
        if (info.arity == 0)
            throw Error("free operad: arity-0 generators are not supported in tree bases");
        if (info.arity == 1) {
            if (info.degree == 0)
                throw Error("free operad: degree-0 arity-1 generator '" + name +
                            "' does not stabilize within a degree window");
            int s = info.degree > 0 ? 1 : -1;
            if (has1 && s != sign1)
                throw Error("free operad: arity-1 generators of mixed degree signs do not "
                            "stabilize within a degree window");
            has1 = true;
            sign1 = s;
            Deg a = std::abs(info.degree);
            min_abs1 = min_abs1 == 0 ? a : std::min(min_abs1, a);
        } else {
            max_abs_high = std::max(max_abs_high, std::abs(info.degree));
        }
    }
    if (!has1)
        return {std::max(0, n - 1), true};
    long long reach = std::max(std::abs(w.lo), std::abs(w.hi)) +
                      static_cast<long long>(std::max(0, n - 1)) * max_abs_high;
    int v1 = static_cast<int>(reach / min_abs1) + 1;
    return {std::max(0, n - 1) + v1, false};
}

struct Builder {
    GenTable gens;
    std::map<std::string, TreePoly> boundaries;
    GenAction act;
    Field field;

    const TreePoly& boundary_of(const std::string& g) const {
        static const TreePoly empty;
        auto it = boundaries.find(g);
        return it == boundaries.end() ? empty : it->second;
    }
};

RealizedOperad assemble(Builder b, int max_arity, Window w) {
    Field f = b.field;
    RealizedOperad r;
    r.gens = b.gens;
    r.action = b.act;
    r.window = w;
    r.op.seq = SymmetricSequence(f, max_arity);

    auto boundary_cb = [bp = &r](const std::string& g) -> const TreePoly& {
        static const TreePoly empty;
        auto it = bp->boundaries.find(g);
        return it == bp->boundaries.end() ? empty : it->second;
    };
    r.boundaries = std::move(b.boundaries);

    bool all_finite = true;
    std::vector<std::vector<TreeNode>> trees(max_arity + 1);
    for (int n = 1; n <= max_arity; ++n) {
        BudgetInfo bi = vertex_budget(r.gens, n, w);
        all_finite = all_finite && bi.finite;
        std::vector<TreeNode> all = enumerate_trees(n, r.gens, bi.budget);
        for (auto& t : all) {
            Deg d = tree_degree(t, r.gens);
            if (w.contains(d))
                trees[n].push_back(t);
            else if (bi.finite)
                throw Error("free operad: tree of degree " + std::to_string(d) +
                            " outside window " + w.to_string() +
                            " in arity " + std::to_string(n));
        }
    }
    r.exact = all_finite;
    r.provenance = all_finite
                       ? "exact: all generators have arity >= 2; every component complete"
                       : "degreewise-complete within window " + w.to_string() +
                             "; support continues beyond the window";

    // components
    for (int n = 1; n <= max_arity; ++n) {
        GradedVectorSpace v(f);
        for (auto& t : trees[n])
            v.add(tree_degree(t, r.gens), tree_string(t));
        LinearMap d(v, v, -1);
        for (auto& t : trees[n]) {
            Deg deg = tree_degree(t, r.gens);
            int col = v.index_of(deg, tree_string(t));
            TreePoly dt = tree_derivation(t, r.gens, boundary_cb, f);
            for (auto& [key, mono] : dt.terms) {
                int row = v.index_of(deg - 1, key);
                if (row < 0)
                    throw Error("free operad: differential leaves the window at " + key +
                                "; widen the degree window");
                d.add_to(deg, row, col, mono.c);
            }
        }
        r.op.seq.component[n] = ChainComplex(v, d);
    }

    // d² = 0 on every basis tree (detects inconsistent presentations)
    for (int n = 1; n <= max_arity; ++n) {
        const LinearMap& d = r.op.seq.component[n].d;
        if (!d.compose(d).is_zero())
            throw Error("free operad: d² != 0 in arity " + std::to_string(n) +
                        " (inconsistent presentation)");
    }

    // actions
    for (int n = 1; n <= max_arity; ++n) {
        const ChainComplex& c = r.op.seq.component[n];
        r.op.seq.action[n].clear();
        for (int i = 1; i < n; ++i) {
            Perm t = adjacent_transposition(n, i);
            LinearMap a(c.space, c.space, 0);
            for (auto& tr : trees[n]) {
                Deg deg = tree_degree(tr, r.gens);
                int col = c.space.index_of(deg, tree_string(tr));
                TreePoly img = tree_leaf_action(tr, t, r.gens, r.action, f);
                for (auto& [key, mono] : img.terms) {
                    int row = c.space.index_of(deg, key);
                    if (row < 0)
                        throw Error("free operad: action image missing: " + key);
                    a.add_to(deg, row, col, mono.c);
                }
            }
            r.op.seq.action[n].push_back(std::move(a));
        }
    }

    // unit
    r.op.unit.deg = 0;
    r.op.unit.add(r.op.seq.at(1).space.index_of(0, "1"), Scalar::one(f));

    // composites by grafting
    for (int n = 1; n <= max_arity; ++n)
        for (int m = 1; m <= max_arity; ++m) {
            if (n + m - 1 > max_arity)
                continue;
            const ChainComplex& cn = r.op.seq.at(n);
            const ChainComplex& cm = r.op.seq.at(m);
            const ChainComplex& co = r.op.seq.at(n + m - 1);
            ChainComplex pair = tensor(cn, cm);
            for (int i = 1; i <= n; ++i) {
                LinearMap cmp(pair.space, co.space, 0);
                for (auto& tf : trees[n]) {
                    Deg dn = tree_degree(tf, r.gens);
                    int bn = cn.space.index_of(dn, tree_string(tf));
                    for (auto& tg : trees[m]) {
                        Deg dm = tree_degree(tg, r.gens);
                        TreeMono res = graft(tf, i, tg, r.gens, f);
                        int row = co.space.index_of(dn + dm, tree_string(res.t));
                        if (row < 0) {
                            if (all_finite)
                                throw Error("free operad: graft image outside window; widen it");
                            int bm = cm.space.index_of(dm, tree_string(tg));
                            r.op.undefined_pairs.insert({n, i, m, dn, bn, dm, bm});
                            continue;
                        }
                        int col = pair.space.index_of(
                            dn + dm, "(" + tree_string(tf) + "," + tree_string(tg) + ")");
                        cmp.add_to(dn + dm, row, col, res.c);
                    }
                }
                r.op.composites[{n, i, m}] = std::move(cmp);
            }
            r.op.pair_spaces[{n, m}] = std::move(pair);
        }

    return r;
}

}  // namespace

RealizedOperad free_operad(const SymmetricSequence& m, int max_arity, Window w) {
    Field f = m.field;
    Builder b;
    b.field = f;
    // label -> (arity, deg, idx); labels must be unique across arities
    std::map<std::string, std::tuple<int, Deg, int>> where;
    for (int n = 0; n <= m.max_arity; ++n) {
        if (m.zero_at(n))
            continue;
        if (n == 0 && !m.zero_at(0))
            throw Error("free operad: arity-0 generators are not supported in tree bases");
        for (Deg d : m.at(n).space.degrees())
            for (int i = 0; i < m.at(n).space.dim(d); ++i) {
                const std::string& lbl = m.at(n).space.label(d, i);
                if (where.count(lbl))
                    throw Error("free operad: generator label '" + lbl +
                                "' appears in two arities; disambiguate labels");
                where[lbl] = {n, d, i};
                b.gens[lbl] = GenInfo{n, d};
            }
    }
    // boundaries: single-vertex expansions of d_M
    for (auto& [lbl, loc] : where) {
        auto [n, d, i] = loc;
        HVec dm = m.at(n).d.apply_basis(d, i);
        if (dm.is_zero())
            continue;
        TreePoly p;
        for (auto& [j, c] : dm.c) {
            TreeNode node;
            node.gen = m.at(n).space.label(d - 1, j);
            for (int l = 1; l <= n; ++l)
                node.children.push_back(leaf_tree(l));
            p.add(node, c);
        }
        b.boundaries[lbl] = std::move(p);
    }
    // action callback via M's action maps
    auto where_copy = where;
    SymmetricSequence mc = m;
    b.act = [mc, where_copy](const std::string& lbl,
                             const Perm& sigma) -> std::vector<std::pair<std::string, Scalar>> {
        auto it = where_copy.find(lbl);
        if (it == where_copy.end())
            throw Error("free operad action: unknown label " + lbl);
        auto [n, d, i] = it->second;
        HVec img = mc.action_of(n, sigma).apply_basis(d, i);
        std::vector<std::pair<std::string, Scalar>> out;
        for (auto& [j, c] : img.c)
            out.push_back({mc.at(n).space.label(d, j), c});
        return out;
    };
    return assemble(std::move(b), max_arity, w);
}

namespace {

// boundary trees may name generators plainly; qualify with the identity twist
TreeNode qualify_tree(const TreeNode& t, const std::vector<GeneratorSpec>& gens) {
    if (t.is_leaf())
        return t;
    TreeNode out = t;
    if (out.gen.find(".w") == std::string::npos) {
        for (auto& g : gens)
            if (g.name == out.gen) {
                out.gen = g.name + "." + perm_label(perm_identity(g.arity));
                break;
            }
    }
    for (auto& c : out.children)
        c = qualify_tree(c, gens);
    return out;
}

}  // namespace

RealizedOperad realize(const QuasiFreePresentation& q, Field f, int max_arity, Window w) {
    if (q.gens.empty())
        throw Error("realize: empty presentation; use unit_sequence instead");
    Builder b;
    b.field = f;
    // regular orbit labels name.wPERM; the action of sigma sends
    // name.wtau to name.w(tau ∘ sigma^{-1})
    for (auto& g : q.gens)
        for (auto& sigma : all_perms(g.arity))
            b.gens[g.name + "." + perm_label(sigma)] = GenInfo{g.arity, g.degree};
    b.act = [f](const std::string& lbl,
                const Perm& sigma) -> std::vector<std::pair<std::string, Scalar>> {
        size_t dot = lbl.rfind(".w");
        if (dot == std::string::npos)
            throw Error("realized action: malformed label " + lbl);
        std::string name = lbl.substr(0, dot);
        std::string ws = lbl.substr(dot + 2);
        Perm tau;
        for (char ch : ws)
            if (ch != '.')
                tau.push_back(ch - '0');
        Perm img = perm_compose(tau, perm_inverse(sigma));
        return {{name + "." + perm_label(img), Scalar::one(f)}};
    };

    // boundaries: d(name.wsigma) = sigma · boundary(name)
    GenTable gt = b.gens;
    for (auto& g : q.gens) {
        TreePoly base;
        for (auto& [key, mono] : g.boundary.terms) {
            TreeNode qt = qualify_tree(mono.t, q.gens);
            tree_validate(qt, gt);
            if (tree_num_leaves(qt) != g.arity)
                throw Error("realize: boundary arity mismatch for generator " + g.name);
            if (tree_degree(qt, gt) != g.degree - 1)
                throw Error("realize: boundary degree mismatch for generator " + g.name);
            base.add(qt, mono.c);
        }
        if (base.is_zero())
            continue;
        // name.wtau is the tau^{-1}-image of the identity generator, so its
        // boundary is the tau^{-1}-twist of the given one
        for (auto& sigma : all_perms(g.arity)) {
            TreePoly twisted;
            Perm tw = perm_inverse(sigma);
            for (auto& [key, mono] : base.terms) {
                TreePoly moved = tree_leaf_action(mono.t, tw, gt, b.act, f);
                twisted.add_poly(moved, mono.c);
            }
            b.boundaries[g.name + "." + perm_label(sigma)] = std::move(twisted);
        }
    }
    return assemble(std::move(b), max_arity, w);
}

QuasiFreePresentation attach_cell(const QuasiFreePresentation& q, int p, Deg k,
                                  const TreePoly& boundary, int check_arity_limit,
                                  Window check_window) {
    QuasiFreePresentation out = q;
    GeneratorSpec g;
    g.name = "x" + std::to_string(q.gens.size());
    for (auto& og : q.gens)
        if (og.name == g.name)
            g.name += "_";
    g.arity = p;
    g.degree = k;
    g.boundary = boundary;
    if (!boundary.is_zero()) {
        if (q.gens.empty())
            throw Error("attach_cell: nonzero boundary over the empty presentation");
        // realize the current stage and verify the boundary is a cycle
        Field f = boundary.terms.begin()->second.c.field();
        int limit = check_arity_limit > 0 ? check_arity_limit : p;
        Window w = check_window;
        w.lo = std::min(w.lo, k - 2);
        w.hi = std::max(w.hi, k);
        RealizedOperad r = realize(q, f, limit, w);
        for (auto& [key, mono] : boundary.terms) {
            TreeNode qt = qualify_tree(mono.t, q.gens);
            tree_validate(qt, r.gens);
            if (tree_num_leaves(qt) != p)
                throw Error("attach_cell: boundary arity != p");
            if (tree_degree(qt, r.gens) != k - 1)
                throw Error("attach_cell: boundary degree != k-1");
        }
        // evaluate d on the boundary polynomial
        TreePoly db;
        auto cb = [&r](const std::string& lbl) -> const TreePoly& {
            static const TreePoly empty;
            auto it = r.boundaries.find(lbl);
            return it == r.boundaries.end() ? empty : it->second;
        };
        for (auto& [key, mono] : boundary.terms) {
            TreeNode qt = qualify_tree(mono.t, q.gens);
            db.add_poly(tree_derivation(qt, r.gens, cb, f), mono.c);
        }
        if (!db.is_zero())
            throw Error("attach_cell: boundary is not a cycle for the current differential");
    }
    out.gens.push_back(std::move(g));
    return out;
}

std::map<int, std::map<Deg, int>> free_operad_dims_by_recursion(const SymmetricSequence& m,
                                                                int max_arity, Window w) {
    Field f = m.field;
    SymmetricSequence t = unit_sequence(f);
    std::map<int, std::map<Deg, int>> prev;
    for (int iter = 0; iter < 64; ++iter) {
        SymmetricSequence mt = compose_product(m, t, max_arity, w, true, nullptr);
        SymmetricSequence next = seq_direct_sum(unit_sequence(f), mt);
        std::map<int, std::map<Deg, int>> dims;
        for (int n = 0; n <= next.max_arity && n <= max_arity; ++n)
            for (Deg d : next.component[n].space.degrees())
                if (w.contains(d))
                    dims[n][d] = next.component[n].space.dim(d);
        if (dims == prev)
            return dims;
        prev = std::move(dims);
        t = std::move(next);
    }
    throw Error("free_operad_dims_by_recursion: tower did not stabilize");
}

QuasiFreePresentation a_infinity_presentation(Field f, int top_arity) {
    if (top_arity < 2)
        throw Error("a_infinity_presentation: top arity must be >= 2");
    QuasiFreePresentation q;
    for (int n = 2; n <= top_arity; ++n) {
        GeneratorSpec g;
        g.name = "m" + std::to_string(n);
        g.arity = n;
        g.degree = n - 2;
        // d(m_n) = sum over r+s+t=n, 2 <= s <= n-1 of
        //   (-1)^{n+r+st} m_{r+1+t} with m_s grafted at input r+1
        for (int s = 2; s <= n - 1; ++s)
            for (int r = 0; r + s <= n; ++r) {
                int tpart = n - r - s;
                int outer = r + 1 + tpart;
                TreeNode inner;
                inner.gen = "m" + std::to_string(s);
                for (int l = 1; l <= s; ++l)
                    inner.children.push_back(leaf_tree(r + l));
                TreeNode root;
                root.gen = "m" + std::to_string(outer);
                for (int l = 1; l <= r; ++l)
                    root.children.push_back(leaf_tree(l));
                root.children.push_back(inner);
                for (int l = r + s + 1; l <= n; ++l)
                    root.children.push_back(leaf_tree(l));
                long long e = static_cast<long long>(n) + r +
                              static_cast<long long>(s) * tpart;
                g.boundary.add(root, sign_pow(f, e));
            }
        q.gens.push_back(std::move(g));
    }
    return q;
}

}  // namespace dgop
