#include "dgop/symmetric_sequence.hpp"

#include <algorithm>

namespace dgop {

SymmetricSequence::SymmetricSequence(Field f, int a) : field(f), max_arity(a) {
    component.resize(a + 1, zero_complex(f));
    action.resize(a + 1);
    for (int n = 0; n <= a; ++n) {
        LinearMap z(component[n].space, component[n].space, 0);
        action[n].assign(std::max(0, n - 1), z);
    }
}

const ChainComplex& SymmetricSequence::at(int n) const {
    if (n < 0 || n > max_arity)
        throw Error("symmetric sequence: arity " + std::to_string(n) + " beyond truncation");
    return component[n];
}

LinearMap SymmetricSequence::action_of(int n, const Perm& sigma) const {
    if (static_cast<int>(sigma.size()) != n)
        throw Error("action_of: permutation size mismatch");
    LinearMap out = LinearMap::identity(component[n].space);
    for (int i : adjacent_factorization(sigma))
        out = out.compose(action[n][i - 1]);
    return out;
}

void SymmetricSequence::validate() const {
    for (int n = 0; n <= max_arity; ++n) {
        component[n].validate();
        const auto& acts = action[n];
        if (static_cast<int>(acts.size()) != std::max(0, n - 1))
            throw Error("validate: wrong number of transposition maps in arity " + std::to_string(n));
        LinearMap id = LinearMap::identity(component[n].space);
        for (int i = 1; i < n; ++i) {
            const LinearMap& s = acts[i - 1];
            if (!is_chain_map(s, component[n], component[n]))
                throw Error("validate: action map s_" + std::to_string(i) + " is not a chain map");
            if (!(s.compose(s) == id))
                throw Error("validate: s_i^2 != id in arity " + std::to_string(n));
        }
        for (int i = 1; i < n; ++i)
            for (int j = i + 2; j < n; ++j)
                if (!(acts[i - 1].compose(acts[j - 1]) == acts[j - 1].compose(acts[i - 1])))
                    throw Error("validate: commuting Coxeter relation fails in arity " + std::to_string(n));
        for (int i = 1; i + 1 < n; ++i) {
            LinearMap lhs = acts[i - 1].compose(acts[i].compose(acts[i - 1]));
            LinearMap rhs = acts[i].compose(acts[i - 1].compose(acts[i]));
            if (!(lhs == rhs))
                throw Error("validate: braid relation fails in arity " + std::to_string(n));
        }
    }
}

SymmetricSequence unit_sequence(Field f) {
    SymmetricSequence s(f, 1);
    s.component[1] = unit_complex(f);
    return s;
}

/// Regular representation k[S_p] in one degree; the action of tau sends the
/// basis vector sigma to sigma ∘ tau^{-1}.
static void add_regular_rep(SymmetricSequence& s, Deg k, int p, bool disk) {
    Field f = s.field;
    GradedVectorSpace v(f);
    auto perms = all_perms(p);
    for (auto& w : perms)
        v.add(k, perm_label(w) + (disk ? ".top" : ""));
    if (disk)
        for (auto& w : perms)
            v.add(k - 1, perm_label(w) + ".bot");
    LinearMap d(v, v, -1);
    if (disk)
        for (size_t i = 0; i < perms.size(); ++i)
            d.set(k, v.index_of(k - 1, perm_label(perms[i]) + ".bot"),
                  v.index_of(k, perm_label(perms[i]) + ".top"), Scalar::one(f));
    s.component[p] = ChainComplex(v, d);
    s.action[p].clear();
    for (int i = 1; i < p; ++i) {
        Perm t = adjacent_transposition(p, i);
        LinearMap a(v, v, 0);
        for (auto& w : perms) {
            Perm img = perm_compose(w, perm_inverse(t));
            if (disk) {
                a.set(k, v.index_of(k, perm_label(img) + ".top"),
                      v.index_of(k, perm_label(w) + ".top"), Scalar::one(f));
                a.set(k - 1, v.index_of(k - 1, perm_label(img) + ".bot"),
                      v.index_of(k - 1, perm_label(w) + ".bot"), Scalar::one(f));
            } else {
                a.set(k, v.index_of(k, perm_label(img)), v.index_of(k, perm_label(w)),
                      Scalar::one(f));
            }
        }
        s.action[p].push_back(a);
    }
}

SymmetricSequence sphere_sequence(Field f, Deg k, int p) {
    if (p < 0)
        throw Error("sphere_sequence: arity must be >= 0");
    SymmetricSequence s(f, p);
    add_regular_rep(s, k, p, false);
    return s;
}

SymmetricSequence disk_sequence(Field f, Deg k, int p) {
    if (p < 0)
        throw Error("disk_sequence: arity must be >= 0");
    SymmetricSequence s(f, p);
    add_regular_rep(s, k, p, true);
    return s;
}

std::vector<std::vector<std::vector<int>>> ordered_partitions(int n, int k, bool with_empty) {
    std::vector<std::vector<std::vector<int>>> out;
    if (k == 0) {
        if (n == 0)
            out.push_back({});
        return out;
    }
    // assignments {1..n} -> {1..k} in lexicographic order
    std::vector<int> assign(n, 1);
    while (true) {
        std::vector<std::vector<int>> blocks(k);
        for (int e = 1; e <= n; ++e)
            blocks[assign[e - 1] - 1].push_back(e);
        bool ok = with_empty || std::all_of(blocks.begin(), blocks.end(),
                                            [](const std::vector<int>& b) { return !b.empty(); });
        if (ok)
            out.push_back(blocks);
        int pos = n - 1;
        while (pos >= 0 && assign[pos] == k)
            assign[pos--] = 1;
        if (pos < 0)
            break;
        ++assign[pos];
    }
    return out;
}

SymmetricSequence trivial_sequence(Field f, Deg k, int p) {
    SymmetricSequence s(f, p);
    GradedVectorSpace v(f);
    v.add(k, "t");
    s.component[p] = ChainComplex(v);
    s.action[p].assign(std::max(0, p - 1), LinearMap::identity(v));
    return s;
}

SymmetricSequence seq_direct_sum(const SymmetricSequence& a, const SymmetricSequence& b) {
    if (a.field != b.field)
        throw Error("seq_direct_sum: field mismatch");
    SymmetricSequence s(a.field, std::max(a.max_arity, b.max_arity));
    for (int n = 0; n <= s.max_arity; ++n) {
        const ChainComplex& ca = n <= a.max_arity ? a.component[n] : zero_complex(a.field);
        const ChainComplex& cb = n <= b.max_arity ? b.component[n] : zero_complex(b.field);
        ChainComplex sum = direct_sum(ca, cb);
        s.component[n] = sum;
        s.action[n].clear();
        for (int i = 1; i < n; ++i) {
            LinearMap act(sum.space, sum.space, 0);
            auto copy_act = [&](const ChainComplex& c, const LinearMap& m, const std::string& tag) {
                if (c.space.empty())
                    return;
                for (auto& [deg, blk] : m.blocks())
                    for (auto& [rc, v] : blk)
                        act.add_to(deg, sum.space.index_of(deg, tag + c.space.label(deg, rc.first)),
                                   sum.space.index_of(deg, tag + c.space.label(deg, rc.second)), v);
            };
            if (n <= a.max_arity)
                copy_act(ca, a.action[n][i - 1], "L.");
            if (n <= b.max_arity)
                copy_act(cb, b.action[n][i - 1], "R.");
            s.action[n].push_back(std::move(act));
        }
    }
    return s;
}

namespace {

struct BigElem {
    int summand;
    Deg mdeg;
    int midx;
    std::vector<std::pair<Deg, int>> xs;
    Deg deg;
    std::string label;
};

struct Summand {
    int k;
    std::vector<std::vector<int>> blocks;
};

std::string block_string(const std::vector<int>& b) {
    std::string s = "{";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(b[i]);
    }
    return s + "}";
}

std::string elem_label(const SymmetricSequence& M, const SymmetricSequence& N, const Summand& sm,
                       const BigElem& e) {
    std::string s = "<" + M.at(sm.k).space.label(e.mdeg, e.midx);
    for (size_t i = 0; i < sm.blocks.size(); ++i) {
        int b = static_cast<int>(sm.blocks[i].size());
        s += "|" + block_string(sm.blocks[i]) + ":" + N.at(b).space.label(e.xs[i].first, e.xs[i].second);
    }
    return s + ">";
}

}  // namespace

SymmetricSequence compose_product(const SymmetricSequence& M, const SymmetricSequence& N, int A,
                                  Window w, bool allow_truncation,
                                  std::vector<std::string>* notes) {
    Field f = M.field;
    if (f != N.field)
        throw Error("compose_product: field mismatch");
    SymmetricSequence out(f, A);
    bool with_empty = !N.zero_at(0);

    for (int n = 0; n <= A; ++n) {
        // contributing summands
        std::vector<Summand> summands;
        for (int k = 0; k <= M.max_arity; ++k) {
            if (M.zero_at(k))
                continue;
            for (auto& blocks : ordered_partitions(n, k, with_empty)) {
                bool ok = true;
                for (auto& b : blocks)
                    if (N.zero_at(static_cast<int>(b.size()))) {
                        ok = false;
                        break;
                    }
                if (ok)
                    summands.push_back({k, blocks});
            }
        }

        // big direct-sum basis, grouped by degree
        std::map<Deg, std::vector<BigElem>> big;
        for (size_t si = 0; si < summands.size(); ++si) {
            const Summand& sm = summands[si];
            const ChainComplex& mc = M.at(sm.k);
            // iterate over m basis and block bases
            for (Deg md : mc.space.degrees()) {
                for (int mi = 0; mi < mc.space.dim(md); ++mi) {
                    std::vector<BigElem> partial{
                        {static_cast<int>(si), md, mi, {}, md, ""}};
                    for (auto& b : sm.blocks) {
                        const ChainComplex& nc = N.at(static_cast<int>(b.size()));
                        std::vector<BigElem> next;
                        for (auto& pe : partial)
                            for (Deg xd : nc.space.degrees())
                                for (int xi = 0; xi < nc.space.dim(xd); ++xi) {
                                    BigElem e = pe;
                                    e.xs.push_back({xd, xi});
                                    e.deg += xd;
                                    next.push_back(std::move(e));
                                }
                        partial = std::move(next);
                    }
                    for (auto& e : partial) {
                        if (!w.contains(e.deg)) {
                            if (!allow_truncation)
                                throw Error("compose_product: truncation overflow at arity " +
                                            std::to_string(n) + ", degree " + std::to_string(e.deg) +
                                            " outside window " + w.to_string());
                            if (notes)
                                notes->push_back("dropped arity " + std::to_string(n) + " degree " +
                                                 std::to_string(e.deg));
                            continue;
                        }
                        e.label = elem_label(M, N, summands[e.summand], e);
                        big[e.deg].push_back(std::move(e));
                    }
                }
            }
        }

        // deterministic column order: descending by (k, blocks, label) so that
        // elimination keeps the lexicographically least orbit members
        auto key_less = [&](const BigElem& a, const BigElem& b) {
            const Summand& sa = summands[a.summand];
            const Summand& sb = summands[b.summand];
            if (sa.k != sb.k)
                return sa.k < sb.k;
            if (sa.blocks != sb.blocks)
                return sa.blocks < sb.blocks;
            return a.label < b.label;
        };
        std::map<Deg, std::map<std::string, int>> col_of;  // label -> column
        for (auto& [deg, elems] : big) {
            std::sort(elems.begin(), elems.end(),
                      [&](const BigElem& a, const BigElem& b) { return key_less(b, a); });
            for (size_t c = 0; c < elems.size(); ++c)
                col_of[deg][elems[c].label] = static_cast<int>(c);
        }

        // the block-permuting S_k action on a big basis element
        auto act_adjacent = [&](const BigElem& e, int j) {
            // returns list of (label, coeff) of s_j · e
            std::vector<std::pair<BigElem, Scalar>> terms;
            const Summand& sm = summands[e.summand];
            int k = sm.k;
            Summand tgt = sm;
            std::swap(tgt.blocks[j - 1], tgt.blocks[j]);
            // locate target summand
            int ti = -1;
            for (size_t s2 = 0; s2 < summands.size(); ++s2)
                if (summands[s2].k == k && summands[s2].blocks == tgt.blocks) {
                    ti = static_cast<int>(s2);
                    break;
                }
            if (ti < 0)
                throw Error("compose_product: summand closure violated");
            Scalar koszul = sign_pow(
                f, static_cast<long long>(e.xs[j - 1].first) * e.xs[j].first);
            HVec mimg = M.action[k][j - 1].apply_basis(e.mdeg, e.midx);
            for (auto& [mi2, c] : mimg.c) {
                BigElem t;
                t.summand = ti;
                t.mdeg = e.mdeg;
                t.midx = mi2;
                t.xs = e.xs;
                std::swap(t.xs[j - 1], t.xs[j]);
                t.deg = e.deg;
                t.label = elem_label(M, N, summands[ti], t);
                terms.push_back({std::move(t), c * koszul});
            }
            return terms;
        };

        // relation rows per degree, then quotient
        std::map<Deg, RowSpace> quot;
        std::map<Deg, std::vector<int>> survivors;
        for (auto& [deg, elems] : big) {
            std::vector<std::vector<Scalar>> rows;
            for (auto& e : elems) {
                int k = summands[e.summand].k;
                for (int j = 1; j < k; ++j) {
                    std::vector<Scalar> row(elems.size(), Scalar::zero(f));
                    row[col_of[deg][e.label]] += Scalar::one(f);
                    for (auto& [t, c] : act_adjacent(e, j))
                        row[col_of[deg].at(t.label)] -= c;
                    rows.push_back(std::move(row));
                }
            }
            DenseMat gm(f, static_cast<int>(rows.size()), static_cast<int>(elems.size()));
            for (size_t r = 0; r < rows.size(); ++r)
                for (size_t c = 0; c < rows[r].size(); ++c)
                    gm.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
            RowSpace rs = row_space(std::move(gm));
            survivors[deg] = rs.nonpivots;
            quot.emplace(deg, std::move(rs));
        }

        // output basis: surviving representatives in ascending label-key order
        GradedVectorSpace vout(f);
        std::map<Deg, std::vector<int>> order;  // output position -> column
        for (auto& [deg, cols] : survivors) {
            std::vector<int> cs = cols;
            std::sort(cs.begin(), cs.end(), [&](int a, int b) {
                return key_less(big[deg][a], big[deg][b]);
            });
            for (int c : cs)
                vout.add(deg, big[deg][c].label);
            order[deg] = cs;
        }

        auto to_out = [&](Deg deg, const std::vector<Scalar>& full) {
            // full coordinates -> quotient normal form -> output HVec
            HVec v;
            v.deg = deg;
            if (!quot.count(deg))
                return v;
            auto nf = quot.at(deg).reduce(full);
            auto& cs = order.at(deg);
            for (size_t p = 0; p < cs.size(); ++p)
                if (!nf[cs[p]].is_zero())
                    v.add(static_cast<int>(p), nf[cs[p]]);
            return v;
        };

        // differential on representatives
        LinearMap dout(vout, vout, -1);
        for (auto& [deg, cs] : order) {
            for (size_t p = 0; p < cs.size(); ++p) {
                const BigElem& e = big[deg][cs[p]];
                const Summand& sm = summands[e.summand];
                std::vector<Scalar> image;
                if (big.count(deg - 1))
                    image.assign(big[deg - 1].size(), Scalar::zero(f));
                // d_M on m
                HVec dm = M.at(sm.k).d.apply_basis(e.mdeg, e.midx);
                for (auto& [mi2, c] : dm.c) {
                    BigElem t = e;
                    t.mdeg = e.mdeg - 1;
                    t.midx = mi2;
                    t.deg = e.deg - 1;
                    t.label = elem_label(M, N, sm, t);
                    if (!w.contains(t.deg)) {
                        if (!allow_truncation)
                            throw Error("compose_product: differential leaves window");
                        continue;
                    }
                    image[col_of[deg - 1].at(t.label)] += c;
                }
                // d_N on each block, Koszul over preceding letters
                long long pre = e.mdeg;
                for (size_t bi = 0; bi < sm.blocks.size(); ++bi) {
                    const ChainComplex& nc = N.at(static_cast<int>(sm.blocks[bi].size()));
                    HVec dx = nc.d.apply_basis(e.xs[bi].first, e.xs[bi].second);
                    Scalar sgn = sign_pow(f, pre);
                    for (auto& [xi2, c] : dx.c) {
                        BigElem t = e;
                        t.xs[bi] = {e.xs[bi].first - 1, xi2};
                        t.deg = e.deg - 1;
                        t.label = elem_label(M, N, sm, t);
                        if (!w.contains(t.deg)) {
                            if (!allow_truncation)
                                throw Error("compose_product: differential leaves window");
                            continue;
                        }
                        image[col_of[deg - 1].at(t.label)] += sgn * c;
                    }
                    pre += e.xs[bi].first;
                }
                if (image.empty())
                    continue;
                HVec img = to_out(deg - 1, image);
                for (auto& [row, s] : img.c)
                    dout.add_to(deg, row, static_cast<int>(p), s);
            }
        }

        // residual S_n action: relabel block contents, positions fixed
        std::vector<LinearMap> acts;
        for (int i = 1; i < n; ++i) {
            LinearMap a(vout, vout, 0);
            for (auto& [deg, cs] : order) {
                for (size_t p = 0; p < cs.size(); ++p) {
                    const BigElem& e = big[deg][cs[p]];
                    const Summand& sm = summands[e.summand];
                    Summand tgt = sm;
                    for (auto& b : tgt.blocks) {
                        for (auto& x : b) {
                            if (x == i)
                                x = i + 1;
                            else if (x == i + 1)
                                x = i;
                        }
                        std::sort(b.begin(), b.end());
                    }
                    int ti = -1;
                    for (size_t s2 = 0; s2 < summands.size(); ++s2)
                        if (summands[s2].k == sm.k && summands[s2].blocks == tgt.blocks) {
                            ti = static_cast<int>(s2);
                            break;
                        }
                    if (ti < 0)
                        throw Error("compose_product: residual action closure violated");
                    BigElem t = e;
                    t.summand = ti;
                    t.label = elem_label(M, N, summands[ti], t);
                    std::vector<Scalar> full(big[deg].size(), Scalar::zero(f));
                    full[col_of[deg].at(t.label)] = Scalar::one(f);
                    HVec img = to_out(deg, full);
                    for (auto& [row, s] : img.c)
                        a.add_to(deg, row, static_cast<int>(p), s);
                }
            }
            acts.push_back(std::move(a));
        }

        out.component[n] = ChainComplex(vout, dout);
        out.action[n] = std::move(acts);
    }
    return out;
}

}  // namespace dgop
