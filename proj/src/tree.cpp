#include "dgop/tree.hpp"

#include <algorithm>

namespace dgop {

bool TreeNode::operator==(const TreeNode& o) const {
    return leaf == o.leaf && gen == o.gen && children == o.children;
}

bool TreeNode::operator<(const TreeNode& o) const {
    return tree_string(*this) < tree_string(o);
}

std::string tree_string(const TreeNode& t) {
    if (t.is_leaf())
        return std::to_string(t.leaf);
    std::string s = t.gen + "(";
    for (size_t i = 0; i < t.children.size(); ++i) {
        if (i)
            s += ",";
        s += tree_string(t.children[i]);
    }
    return s + ")";
}

TreeNode leaf_tree(int label) {
    TreeNode t;
    t.leaf = label;
    return t;
}

int tree_num_leaves(const TreeNode& t) {
    if (t.is_leaf())
        return 1;
    int n = 0;
    for (auto& c : t.children)
        n += tree_num_leaves(c);
    return n;
}

Deg tree_degree(const TreeNode& t, const GenTable& gens) {
    if (t.is_leaf())
        return 0;
    auto it = gens.find(t.gen);
    if (it == gens.end())
        throw Error("unknown generator '" + t.gen + "'");
    Deg d = it->second.degree;
    for (auto& c : t.children)
        d += tree_degree(c, gens);
    return d;
}

int tree_num_vertices(const TreeNode& t) {
    if (t.is_leaf())
        return 0;
    int n = 1;
    for (auto& c : t.children)
        n += tree_num_vertices(c);
    return n;
}

static void collect_leaves(const TreeNode& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.leaf);
        return;
    }
    for (auto& c : t.children)
        collect_leaves(c, out);
}

void tree_validate(const TreeNode& t, const GenTable& gens) {
    std::function<void(const TreeNode&)> rec = [&](const TreeNode& node) {
        if (node.is_leaf())
            return;
        auto it = gens.find(node.gen);
        if (it == gens.end())
            throw Error("unknown generator '" + node.gen + "'");
        if (it->second.arity != static_cast<int>(node.children.size()))
            throw Error("arity mismatch at generator '" + node.gen + "'");
        for (auto& c : node.children)
            rec(c);
    };
    rec(t);
    std::vector<int> ls;
    collect_leaves(t, ls);
    std::sort(ls.begin(), ls.end());
    for (size_t i = 0; i < ls.size(); ++i)
        if (ls[i] != static_cast<int>(i) + 1)
            throw Error("leaves of tree are not 1..n: " + tree_string(t));
}

int tree_min_leaf(const TreeNode& t) {
    if (t.is_leaf())
        return t.leaf;
    int m = 1 << 30;
    for (auto& c : t.children)
        m = std::min(m, tree_min_leaf(c));
    return m;
}

void TreePoly::add(const TreeNode& t, const Scalar& c) {
    if (c.is_zero())
        return;
    std::string key = tree_string(t);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, TreeMono{t, c});
    } else {
        it->second.c += c;
        if (it->second.c.is_zero())
            terms.erase(it);
    }
}

void TreePoly::add_poly(const TreePoly& p, const Scalar& scale) {
    for (auto& [k, m] : p.terms)
        add(m.t, m.c * scale);
}

namespace {

// accumulates the degree of internal vertices strictly after leaf `target`
void post_leaf_degree(const TreeNode& t, int target, const GenTable& gens, bool& seen, Deg& acc) {
    if (t.is_leaf()) {
        if (t.leaf == target)
            seen = true;
        return;
    }
    if (seen)
        acc += gens.at(t.gen).degree;
    for (auto& c : t.children)
        post_leaf_degree(c, target, gens, seen, acc);
}

TreeNode relabel_leaves(const TreeNode& t, const std::function<int(int)>& f) {
    if (t.is_leaf())
        return leaf_tree(f(t.leaf));
    TreeNode out = t;
    for (auto& c : out.children)
        c = relabel_leaves(c, f);
    return out;
}

TreeNode graft_replace(const TreeNode& t, int i, const TreeNode& s) {
    if (t.is_leaf())
        return t.leaf == i ? s : t;
    TreeNode out = t;
    for (auto& c : out.children)
        c = graft_replace(c, i, s);
    return out;
}

}  // namespace

TreeMono graft(const TreeNode& t, int i, const TreeNode& s, const GenTable& gens, Field f) {
    int m = tree_num_leaves(s);
    if (m == 0)
        throw Error("graft: arity-0 subtrees are not supported in tree bases");
    bool seen = false;
    Deg post = 0;
    post_leaf_degree(t, i, gens, seen, post);
    TreeNode tt = relabel_leaves(t, [&](int l) { return l > i ? l + m - 1 : l; });
    TreeNode ss = relabel_leaves(s, [&](int l) { return l + i - 1; });
    Deg degs = tree_degree(s, gens);
    TreeNode res = graft_replace(tt, i, ss);
    return TreeMono{res, sign_pow(f, static_cast<long long>(degs) * post)};
}

namespace {

bool find_vertex(const TreeNode& t, int& counter, int vpos, std::vector<int>& path) {
    if (t.is_leaf())
        return false;
    if (counter == vpos)
        return true;
    ++counter;
    for (size_t ci = 0; ci < t.children.size(); ++ci) {
        path.push_back(static_cast<int>(ci));
        if (find_vertex(t.children[ci], counter, vpos, path))
            return true;
        path.pop_back();
    }
    return false;
}

const TreeNode& subtree_at(const TreeNode& t, const std::vector<int>& path) {
    const TreeNode* p = &t;
    for (int ci : path)
        p = &p->children[ci];
    return *p;
}

TreeNode with_subtree(const TreeNode& t, const std::vector<int>& path, size_t k, TreeNode sub) {
    if (k == path.size())
        return sub;
    TreeNode out = t;
    out.children[path[k]] = with_subtree(t.children[path[k]], path, k + 1, std::move(sub));
    return out;
}

// Koszul parity of interleaving q's vertex word with the attached child words:
// an odd q-vertex passes every odd child block attached at an earlier leaf
void interleave_walk(const TreeNode& q, const GenTable& gens, const std::vector<Deg>& tdegs,
                     long long& parity, int& odd_leaves_passed) {
    if (q.is_leaf()) {
        if (tdegs[q.leaf - 1] % 2 != 0)
            ++odd_leaves_passed;
        return;
    }
    if (gens.at(q.gen).degree % 2 != 0)
        parity += odd_leaves_passed;
    for (auto& c : q.children)
        interleave_walk(c, gens, tdegs, parity, odd_leaves_passed);
}

}  // namespace

TreeMono splice_vertex(const TreeNode& t, int vpos, const TreeNode& q, const GenTable& gens,
                       Field f) {
    int counter = 0;
    std::vector<int> path;
    if (!find_vertex(t, counter, vpos, path))
        throw Error("splice_vertex: vertex index out of range");
    const TreeNode& v = subtree_at(t, path);
    int k = static_cast<int>(v.children.size());
    if (tree_num_leaves(q) != k)
        throw Error("splice_vertex: arity mismatch");
    std::vector<Deg> tdegs(k);
    for (int j = 0; j < k; ++j)
        tdegs[j] = tree_degree(v.children[j], gens);
    long long parity = 0;
    int odd_passed = 0;
    interleave_walk(q, gens, tdegs, parity, odd_passed);

    std::function<TreeNode(const TreeNode&)> attach = [&](const TreeNode& node) -> TreeNode {
        if (node.is_leaf())
            return v.children[node.leaf - 1];
        TreeNode out = node;
        for (auto& c : out.children)
            c = attach(c);
        return out;
    };
    TreeNode replaced = attach(q);
    TreeNode res = with_subtree(t, path, 0, std::move(replaced));
    return TreeMono{res, sign_pow(f, parity)};
}

TreePoly canonicalize(const TreeNode& planar, const GenTable& gens, const GenAction& act, Field f) {
    TreePoly out;
    if (planar.is_leaf()) {
        out.add(planar, Scalar::one(f));
        return out;
    }
    std::vector<TreePoly> cps;
    for (auto& c : planar.children)
        cps.push_back(canonicalize(c, gens, act, f));
    std::vector<std::pair<std::vector<TreeNode>, Scalar>> combos{{{}, Scalar::one(f)}};
    for (auto& cp : cps) {
        std::vector<std::pair<std::vector<TreeNode>, Scalar>> next;
        for (auto& [pref, s] : combos)
            for (auto& [key, mono] : cp.terms) {
                auto np = pref;
                np.push_back(mono.t);
                next.push_back({np, s * mono.c});
            }
        combos = std::move(next);
    }
    int k = static_cast<int>(planar.children.size());
    for (auto& [children, coeff] : combos) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            return tree_min_leaf(children[a]) < tree_min_leaf(children[b]);
        });
        bool sorted = true;
        for (int i = 0; i < k; ++i)
            if (idx[i] != i)
                sorted = false;
        long long parity = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (idx[a] > idx[b] && tree_degree(children[idx[a]], gens) % 2 != 0 &&
                    tree_degree(children[idx[b]], gens) % 2 != 0)
                    parity ^= 1;
        // child at new slot j is the old child idx[j], so sigma^{-1}(j) = idx[j]
        Perm sigma_inv(k);
        for (int j = 0; j < k; ++j)
            sigma_inv[j] = idx[j] + 1;
        Perm sigma = perm_inverse(sigma_inv);
        std::vector<std::pair<std::string, Scalar>> labels;
        if (sorted)
            labels = {{planar.gen, Scalar::one(f)}};
        else
            labels = act(planar.gen, sigma);
        for (auto& [lbl, lc] : labels) {
            TreeNode node;
            node.gen = lbl;
            node.children.resize(k);
            for (int j = 0; j < k; ++j)
                node.children[j] = children[idx[j]];
            out.add(node, coeff * lc * sign_pow(f, parity));
        }
    }
    return out;
}

TreePoly tree_leaf_action(const TreeNode& t, const Perm& sigma, const GenTable& gens,
                          const GenAction& act, Field f) {
    TreeNode relabeled = relabel_leaves(t, [&](int l) { return sigma[l - 1]; });
    return canonicalize(relabeled, gens, act, f);
}

TreePoly tree_derivation(const TreeNode& t, const GenTable& gens,
                         const std::function<const TreePoly&(const std::string&)>& boundary,
                         Field f) {
    TreePoly out;
    std::vector<std::pair<std::string, Deg>> verts;  // pre-order labels with degree prefix
    {
        Deg acc = 0;
        std::function<void(const TreeNode&)> walk = [&](const TreeNode& node) {
            if (node.is_leaf())
                return;
            verts.push_back({node.gen, acc});
            acc += gens.at(node.gen).degree;
            for (auto& c : node.children)
                walk(c);
        };
        walk(t);
    }
    for (size_t vpos = 0; vpos < verts.size(); ++vpos) {
        const TreePoly& b = boundary(verts[vpos].first);
        if (b.is_zero())
            continue;
        Scalar leib = sign_pow(f, verts[vpos].second);
        for (auto& [key, mono] : b.terms) {
            TreeMono spliced = splice_vertex(t, static_cast<int>(vpos), mono.t, gens, f);
            out.add(spliced.t, spliced.c * mono.c * leib);
        }
    }
    return out;
}

namespace {

void block_partitions(const std::vector<int>& s, int k,
                      std::vector<std::vector<std::vector<int>>>& out) {
    int n = static_cast<int>(s.size());
    if (k > n || k < 1)
        return;
    std::vector<int> assign(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            if (used != k)
                return;
            std::vector<std::vector<int>> blocks(k);
            for (int i = 0; i < n; ++i)
                blocks[assign[i]].push_back(s[i]);
            out.push_back(std::move(blocks));
            return;
        }
        for (int b = 0; b <= std::min(used, k - 1); ++b) {
            assign[pos] = b;
            rec(pos + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
}

void trees_on(const std::vector<int>& s, const std::map<int, std::vector<std::string>>& by_arity,
              int budget, std::vector<TreeNode>& out) {
    if (s.size() == 1)
        out.push_back(leaf_tree(s[0]));
    if (budget <= 0)
        return;
    for (auto& [k, gens_k] : by_arity) {
        if (k < 1 || k > static_cast<int>(s.size()))
            continue;
        if (k == 1 && s.size() != 1)
            continue;  // arity-1 vertex has a single child carrying all leaves
        std::vector<std::vector<std::vector<int>>> parts;
        if (k == 1)
            parts.push_back({s});
        else
            block_partitions(s, k, parts);
        for (auto& blocks : parts) {
            std::vector<std::vector<TreeNode>> choices(static_cast<size_t>(k));
            for (int j = 0; j < k; ++j)
                trees_on(blocks[j], by_arity, budget - 1, choices[j]);
            std::vector<std::vector<TreeNode>> tuples{{}};
            for (int j = 0; j < k; ++j) {
                std::vector<std::vector<TreeNode>> next;
                for (auto& pre : tuples)
                    for (auto& c : choices[j]) {
                        auto np = pre;
                        np.push_back(c);
                        next.push_back(np);
                    }
                tuples = std::move(next);
            }
            for (auto& children : tuples) {
                int used = 1;
                for (auto& c : children)
                    used += tree_num_vertices(c);
                if (used > budget)
                    continue;
                for (auto& g : gens_k) {
                    TreeNode node;
                    node.gen = g;
                    node.children = children;
                    out.push_back(node);
                }
            }
        }
    }
}

}  // namespace

std::vector<TreeNode> enumerate_trees(int n, const GenTable& gens, int max_vertices) {
    std::map<int, std::vector<std::string>> by_arity;
    for (auto& [name, info] : gens) {
        if (info.arity == 0)
            throw Error("enumerate_trees: arity-0 generators are not supported in tree bases");
        by_arity[info.arity].push_back(name);
    }
    std::vector<TreeNode> out;
    if (n == 0)
        return out;
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i)
        s[i] = i + 1;
    trees_on(s, by_arity, max_vertices, out);
    std::sort(out.begin(), out.end(), [](const TreeNode& a, const TreeNode& b) {
        int va = tree_num_vertices(a), vb = tree_num_vertices(b);
        if (va != vb)
            return va < vb;
        return tree_string(a) < tree_string(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TreeNode parse_tree(const std::string& s) {
    size_t pos = 0;
    std::function<TreeNode()> rec = [&]() -> TreeNode {
        size_t start = pos;
        while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ',')
            ++pos;
        std::string token = s.substr(start, pos - start);
        if (pos < s.size() && s[pos] == '(') {
            TreeNode node;
            node.gen = token;
            ++pos;
            while (true) {
                node.children.push_back(rec());
                if (pos >= s.size())
                    throw Error("parse_tree: unbalanced parentheses");
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] == ')') {
                    ++pos;
                    break;
                }
                throw Error("parse_tree: unexpected character");
            }
            return node;
        }
        try {
            return leaf_tree(std::stoi(token));
        } catch (const std::exception&) {
            throw Error("parse_tree: invalid leaf '" + token + "'");
        }
    };
    TreeNode t = rec();
    if (pos != s.size())
        throw Error("parse_tree: trailing characters");
    return t;
}

}  // namespace dgop
