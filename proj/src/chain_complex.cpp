#include "dgop/chain_complex.hpp"

#include <algorithm>

namespace dgop {

void ChainComplex::validate() const {
    if (d.degree() != -1)
        throw Error("differential must have degree -1");
    if (d.source() != space || d.target() != space)
        throw Error("differential endpoints do not match the underlying space");
    if (!d.compose(d).is_zero())
        throw Error("d∘d != 0");
}

ChainComplex zero_complex(Field f) {
    return ChainComplex(GradedVectorSpace(f));
}

ChainComplex unit_complex(Field f) {
    GradedVectorSpace v(f);
    v.add(0, "1");
    return ChainComplex(v);
}

ChainComplex sphere_complex(Field f, Deg k, const std::string& label) {
    GradedVectorSpace v(f);
    v.add(k, label);
    return ChainComplex(v);
}

ChainComplex disk_complex(Field f, Deg k) {
    GradedVectorSpace v(f);
    v.add(k, "top");
    v.add(k - 1, "bot");
    LinearMap d(v, v, -1);
    d.set(k, 0, 0, Scalar::one(f));
    return ChainComplex(v, d);
}

static std::string pair_label(const std::string& a, const std::string& b) {
    return "(" + a + "," + b + ")";
}

ChainComplex tensor(const ChainComplex& A, const ChainComplex& B) {
    Field f = A.field();
    if (f != B.field())
        throw Error("tensor: field mismatch");
    GradedVectorSpace v(f);
    // ordering: source degree of A ascending, then A index, then B index
    struct Slot {
        Deg da, db;
        int ia, ib;
    };
    std::map<Deg, std::vector<Slot>> slots;
    for (Deg da : A.space.degrees())
        for (Deg db : B.space.degrees())
            for (int ia = 0; ia < A.space.dim(da); ++ia)
                for (int ib = 0; ib < B.space.dim(db); ++ib)
                    slots[da + db].push_back({da, db, ia, ib});
    for (auto& [d, ss] : slots)
        for (auto& s : ss)
            v.add(d, pair_label(A.space.label(s.da, s.ia), B.space.label(s.db, s.ib)));

    auto index_in = [&](Deg da, int ia, Deg db, int ib) {
        return v.index_of(da + db, pair_label(A.space.label(da, ia), B.space.label(db, ib)));
    };

    LinearMap d(v, v, -1);
    for (auto& [deg, ss] : slots) {
        for (size_t col = 0; col < ss.size(); ++col) {
            const Slot& s = ss[col];
            HVec dA = A.d.apply_basis(s.da, s.ia);
            for (auto& [j, coeff] : dA.c)
                d.add_to(deg, index_in(s.da - 1, j, s.db, s.ib), static_cast<int>(col), coeff);
            HVec dB = B.d.apply_basis(s.db, s.ib);
            Scalar sgn = sign_pow(f, s.da);
            for (auto& [j, coeff] : dB.c)
                d.add_to(deg, index_in(s.da, s.ia, s.db - 1, j), static_cast<int>(col), sgn * coeff);
        }
    }
    return ChainComplex(v, d);
}

ChainComplex hom_complex(const ChainComplex& A, const ChainComplex& B) {
    Field f = A.field();
    if (f != B.field())
        throw Error("hom_complex: field mismatch");
    GradedVectorSpace v(f);
    struct Slot {
        Deg da, db;
        int ia, ib;
    };
    std::map<Deg, std::vector<Slot>> slots;
    for (Deg da : A.space.degrees())
        for (Deg db : B.space.degrees())
            for (int ia = 0; ia < A.space.dim(da); ++ia)
                for (int ib = 0; ib < B.space.dim(db); ++ib)
                    slots[db - da].push_back({da, db, ia, ib});
    auto label = [&](Deg da, int ia, Deg db, int ib) {
        return "[" + A.space.label(da, ia) + "->" + B.space.label(db, ib) + "]";
    };
    for (auto& [d, ss] : slots)
        for (auto& s : ss)
            v.add(d, label(s.da, s.ia, s.db, s.ib));

    LinearMap d(v, v, -1);
    for (auto& [deg, ss] : slots) {
        for (size_t col = 0; col < ss.size(); ++col) {
            const Slot& s = ss[col];
            // ∂[a->b] = Σ coeff [a->b'] over d_B(b), minus (-1)^{deg} Σ <d_A a', a> [a'->b]
            HVec dB = B.d.apply_basis(s.db, s.ib);
            for (auto& [j, coeff] : dB.c) {
                int row = v.index_of(deg - 1, label(s.da, s.ia, s.db - 1, j));
                d.add_to(deg, row, static_cast<int>(col), coeff);
            }
            Scalar sgn = -sign_pow(f, deg);
            for (int ia2 = 0; ia2 < A.space.dim(s.da + 1); ++ia2) {
                HVec dA = A.d.apply_basis(s.da + 1, ia2);
                auto it = dA.c.find(s.ia);
                if (it == dA.c.end())
                    continue;
                int row = v.index_of(deg - 1, label(s.da + 1, ia2, s.db, s.ib));
                d.add_to(deg, row, static_cast<int>(col), sgn * it->second);
            }
        }
    }
    return ChainComplex(v, d);
}

ChainComplex direct_sum(const ChainComplex& A, const ChainComplex& B,
                        const std::string& tag_a, const std::string& tag_b) {
    Field f = A.field();
    if (f != B.field())
        throw Error("direct_sum: field mismatch");
    GradedVectorSpace v(f);
    std::vector<Deg> degs;
    for (Deg d : A.space.degrees())
        degs.push_back(d);
    for (Deg d : B.space.degrees())
        degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (Deg d : degs) {
        for (int i = 0; i < A.space.dim(d); ++i)
            v.add(d, tag_a + A.space.label(d, i));
        for (int i = 0; i < B.space.dim(d); ++i)
            v.add(d, tag_b + B.space.label(d, i));
    }
    LinearMap d(v, v, -1);
    auto copy_in = [&](const ChainComplex& C, const std::string& tag) {
        for (auto& [deg, blk] : C.d.blocks())
            for (auto& [rc, s] : blk) {
                int col = v.index_of(deg, tag + C.space.label(deg, rc.second));
                int row = v.index_of(deg - 1, tag + C.space.label(deg - 1, rc.first));
                d.add_to(deg, row, col, s);
            }
    };
    copy_in(A, tag_a);
    copy_in(B, tag_b);
    return ChainComplex(v, d);
}

int TensorPower::index_of(Deg d, const std::vector<std::pair<Deg, int>>& fs) const {
    auto it = lookup.find(d);
    if (it == lookup.end())
        return -1;
    auto jt = it->second.find(fs);
    return jt == it->second.end() ? -1 : jt->second;
}

TensorPower tensor_power(const ChainComplex& C, int n) {
    if (n < 0)
        throw Error("tensor_power: negative arity");
    TensorPower p;
    p.arity = n;
    if (n == 0) {
        p.cx = unit_complex(C.field());
        p.factors[0] = {{}};
        p.lookup[0][{}] = 0;
        return p;
    }
    if (n == 1) {
        p.cx = C;
        for (Deg d : C.space.degrees())
            for (int i = 0; i < C.space.dim(d); ++i) {
                p.factors[d].push_back({{d, i}});
                p.lookup[d][{{d, i}}] = i;
            }
        return p;
    }
    TensorPower prev = tensor_power(C, n - 1);
    p.cx = tensor(prev.cx, C);
    for (Deg dp : prev.cx.space.degrees()) {
        for (Deg dc : C.space.degrees()) {
            Deg d = dp + dc;
            for (int ip = 0; ip < prev.cx.space.dim(dp); ++ip)
                for (int ic = 0; ic < C.space.dim(dc); ++ic) {
                    std::string lbl =
                        pair_label(prev.cx.space.label(dp, ip), C.space.label(dc, ic));
                    int idx = p.cx.space.index_of(d, lbl);
                    std::vector<std::pair<Deg, int>> fs = prev.factors.at(dp)[ip];
                    fs.push_back({dc, ic});
                    if (static_cast<int>(p.factors[d].size()) <= idx)
                        p.factors[d].resize(idx + 1);
                    p.factors[d][idx] = fs;
                    p.lookup[d][fs] = idx;
                }
        }
    }
    return p;
}

LinearMap hom_del(const LinearMap& f, const LinearMap& d_src, const LinearMap& d_tgt) {
    return d_tgt.compose(f).minus(f.compose(d_src).scaled(sign_pow(f.field(), f.degree())));
}

bool is_chain_map(const LinearMap& f, const ChainComplex& src, const ChainComplex& tgt) {
    if (f.source() != src.space || f.target() != tgt.space)
        throw Error("is_chain_map: endpoint mismatch");
    return hom_del(f, src.d, tgt.d).is_zero();
}

LinearMap place_permutation(const TensorPower& p, const std::vector<int>& sigma) {
    int n = p.arity;
    if (static_cast<int>(sigma.size()) != n)
        throw Error("place_permutation: arity mismatch");
    Field f = p.cx.field();
    LinearMap out(p.cx.space, p.cx.space, 0);
    for (auto& [d, fss] : p.factors) {
        for (size_t col = 0; col < fss.size(); ++col) {
            const auto& fs = fss[col];
            // Koszul sign: product over inversions of the degrees of swapped letters
            long long parity = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (sigma[i] > sigma[j] && (fs[i].first % 2 != 0) && (fs[j].first % 2 != 0))
                        parity ^= 1;
            std::vector<std::pair<Deg, int>> out_fs(n);
            for (int i = 0; i < n; ++i)
                out_fs[sigma[i] - 1] = fs[i];
            int row = p.index_of(d, out_fs);
            out.add_to(d, row, static_cast<int>(col), sign_pow(f, parity));
        }
    }
    return out;
}

LinearMap insert_at_slot(const TensorPower& pn, const TensorPower& pm, const TensorPower& pout,
                         const LinearMap& f, const LinearMap& g, int slot) {
    int n = pn.arity, m = pm.arity;
    if (slot < 1 || slot > n)
        throw Error("insert_at_slot: slot out of range");
    if (pout.arity != n + m - 1)
        throw Error("insert_at_slot: output arity mismatch");
    Field fl = f.field();
    LinearMap out(f.source(), pout.cx.space, f.degree() + g.degree());
    for (auto& [d, blk] : f.blocks()) {
        for (auto& [rc, coeff] : blk) {
            Deg dn = d + f.degree();
            const auto& fs = pn.factors.at(dn)[rc.first];
            // Koszul: g (degree |g|) passes the first slot-1 letters
            long long pre = 0;
            for (int i = 0; i < slot - 1; ++i)
                pre += fs[i].first;
            Scalar sgn = sign_pow(fl, static_cast<long long>(g.degree()) * pre);
            HVec gi = g.apply_basis(fs[slot - 1].first, fs[slot - 1].second);
            for (auto& [k, gc] : gi.c) {
                const auto& gs = pm.factors.at(gi.deg)[k];
                std::vector<std::pair<Deg, int>> out_fs;
                out_fs.reserve(n + m - 1);
                for (int i = 0; i < slot - 1; ++i)
                    out_fs.push_back(fs[i]);
                for (auto& q : gs)
                    out_fs.push_back(q);
                for (int i = slot; i < n; ++i)
                    out_fs.push_back(fs[i]);
                Deg dout = dn + g.degree();
                int row = pout.index_of(dout, out_fs);
                if (row < 0)
                    throw Error("insert_at_slot: image outside truncation");
                out.add_to(d, row, rc.second, coeff * gc * sgn);
            }
        }
    }
    return out;
}

LinearMap tensor_power_map(const LinearMap& f, const TensorPower& pa, const TensorPower& pb) {
    if (f.degree() != 0)
        throw Error("tensor_power_map: only degree-0 maps supported");
    if (pa.arity != pb.arity)
        throw Error("tensor_power_map: arity mismatch");
    Field fl = f.field();
    LinearMap out(pa.cx.space, pb.cx.space, 0);
    for (auto& [d, fss] : pa.factors) {
        for (size_t col = 0; col < fss.size(); ++col) {
            const auto& fs = fss[col];
            // expand factorwise
            std::vector<std::pair<std::vector<std::pair<Deg, int>>, Scalar>> terms;
            terms.push_back({{}, Scalar::one(fl)});
            for (auto& [df, idx] : fs) {
                HVec im = f.apply_basis(df, idx);
                std::vector<std::pair<std::vector<std::pair<Deg, int>>, Scalar>> next;
                for (auto& [pref, s] : terms)
                    for (auto& [j, c] : im.c) {
                        auto np = pref;
                        np.push_back({df, j});
                        next.push_back({np, s * c});
                    }
                terms = std::move(next);
            }
            for (auto& [out_fs, s] : terms) {
                int row = pb.index_of(d, out_fs);
                if (row < 0)
                    throw Error("tensor_power_map: image index missing");
                out.add_to(d, row, static_cast<int>(col), s);
            }
        }
    }
    return out;
}

Homology homology(const ChainComplex& C) {
    Field f = C.field();
    Homology h;
    h.space = GradedVectorSpace(f);
    for (Deg d : C.space.degrees()) {
        int n = C.space.dim(d);
        auto Z = kernel_basis(C.d.dense_block(d));
        // boundary generators from degree d+1
        int m = C.space.dim(d + 1);
        std::vector<std::vector<Scalar>> gens;
        for (int j = 0; j < m; ++j) {
            HVec b = C.d.apply_basis(d + 1, j);
            std::vector<Scalar> row(n, Scalar::zero(f));
            for (auto& [i, s] : b.c)
                row[i] = s;
            gens.push_back(std::move(row));
        }
        // incrementally reduce cycles modulo boundaries + chosen classes
        DenseMat gm(f, static_cast<int>(gens.size()), n);
        for (size_t r = 0; r < gens.size(); ++r)
            for (int c = 0; c < n; ++c)
                gm.at(static_cast<int>(r), c) = gens[r][c];
        RowSpace rs = row_space(std::move(gm));
        std::vector<std::vector<Scalar>> chosen;  // normal forms of chosen classes
        int count = 0;
        for (auto& z : Z) {
            auto nf = rs.reduce(z);
            // reduce against previously chosen normal forms
            for (auto& prev : chosen) {
                int lead = -1;
                for (int c = 0; c < n; ++c)
                    if (!prev[c].is_zero()) {
                        lead = c;
                        break;
                    }
                if (lead >= 0 && !nf[lead].is_zero()) {
                    Scalar factor = nf[lead] / prev[lead];
                    for (int c = 0; c < n; ++c)
                        nf[c] -= factor * prev[c];
                }
            }
            bool zero = true;
            for (auto& s : nf)
                if (!s.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero)
                continue;
            // normalize leading entry to 1
            int lead = -1;
            for (int c = 0; c < n; ++c)
                if (!nf[c].is_zero()) {
                    lead = c;
                    break;
                }
            Scalar inv = nf[lead].inverse();
            for (int c = 0; c < n; ++c)
                nf[c] *= inv;
            chosen.push_back(nf);
            std::string lbl = "h" + std::to_string(d) + "." + std::to_string(count++);
            h.space.add(d, lbl);
            HVec rep;
            rep.deg = d;
            for (int c = 0; c < n; ++c)
                rep.add(c, z[c]);
            h.reps[d].push_back(rep);
        }
    }
    return h;
}

std::map<Deg, int> betti_numbers(const ChainComplex& C) {
    std::map<Deg, int> b;
    Homology h = homology(C);
    for (Deg d : h.space.degrees())
        b[d] = h.space.dim(d);
    return b;
}

bool is_quasi_iso(const LinearMap& f, const ChainComplex& src, const ChainComplex& tgt) {
    if (!is_chain_map(f, src, tgt) || f.degree() != 0)
        return false;
    Homology hs = homology(src), ht = homology(tgt);
    std::vector<Deg> degs;
    for (Deg d : hs.space.degrees())
        degs.push_back(d);
    for (Deg d : ht.space.degrees())
        degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    Field fl = f.field();
    for (Deg d : degs) {
        int ks = hs.space.dim(d), kt = ht.space.dim(d);
        if (ks != kt)
            return false;
        if (ks == 0)
            continue;
        // express images of source reps in target homology basis modulo boundaries
        int n = tgt.space.dim(d);
        int m = tgt.space.dim(d + 1);
        DenseMat sys(fl, n, kt + m);
        for (int j = 0; j < kt; ++j)
            for (auto& [i, s] : ht.reps.at(d)[j].c)
                sys.at(i, j) = s;
        for (int j = 0; j < m; ++j) {
            HVec b = tgt.d.apply_basis(d + 1, j);
            for (auto& [i, s] : b.c)
                sys.at(i, kt + j) = s;
        }
        DenseMat induced(fl, kt, ks);
        for (int j = 0; j < ks; ++j) {
            HVec im = f.apply(hs.reps.at(d)[j]);
            std::vector<Scalar> rhs(n, Scalar::zero(fl));
            for (auto& [i, s] : im.c)
                rhs[i] = s;
            auto sol = solve(sys, rhs);
            if (!sol)
                throw Error("is_quasi_iso: image of a cycle is not a cycle class");
            for (int i = 0; i < kt; ++i)
                induced.at(i, j) = (*sol)[i];
        }
        if (rank(induced) != ks)
            return false;
    }
    return true;
}

Cylinder mapping_cylinder(const LinearMap& f, const ChainComplex& W, const ChainComplex& V) {
    if (f.source() != W.space || f.target() != V.space || f.degree() != 0)
        throw Error("mapping_cylinder: f must be a degree-0 map W -> V");
    if (!is_chain_map(f, W, V))
        throw Error("mapping_cylinder: f is not a chain map");
    Field fl = f.field();
    GradedVectorSpace v(fl);
    std::vector<Deg> degs;
    for (Deg d : W.space.degrees()) {
        degs.push_back(d);
        degs.push_back(d + 1);
    }
    for (Deg d : V.space.degrees())
        degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
    for (Deg d : degs) {
        for (int i = 0; i < W.space.dim(d); ++i)
            v.add(d, "w." + W.space.label(d, i));
        for (int i = 0; i < W.space.dim(d - 1); ++i)
            v.add(d, "u." + W.space.label(d - 1, i));
        for (int i = 0; i < V.space.dim(d); ++i)
            v.add(d, "v." + V.space.label(d, i));
    }
    LinearMap d(v, v, -1);
    Scalar one = Scalar::one(fl);
    // D(w.x) = w.(dx);  D(u.y) = -w.y - u.(dy) + v.f(y);  D(v.z) = v.(dz)
    for (Deg deg : v.degrees()) {
        for (int i = 0; i < W.space.dim(deg); ++i) {
            int col = v.index_of(deg, "w." + W.space.label(deg, i));
            for (auto& [j, s] : W.d.apply_basis(deg, i).c)
                d.add_to(deg, v.index_of(deg - 1, "w." + W.space.label(deg - 1, j)), col, s);
        }
        for (int i = 0; i < W.space.dim(deg - 1); ++i) {
            int col = v.index_of(deg, "u." + W.space.label(deg - 1, i));
            d.add_to(deg, v.index_of(deg - 1, "w." + W.space.label(deg - 1, i)), col, -one);
            for (auto& [j, s] : W.d.apply_basis(deg - 1, i).c)
                d.add_to(deg, v.index_of(deg - 1, "u." + W.space.label(deg - 2, j)), col, -s);
            for (auto& [j, s] : f.apply_basis(deg - 1, i).c)
                d.add_to(deg, v.index_of(deg - 1, "v." + V.space.label(deg - 1, j)), col, s);
        }
        for (int i = 0; i < V.space.dim(deg); ++i) {
            int col = v.index_of(deg, "v." + V.space.label(deg, i));
            for (auto& [j, s] : V.d.apply_basis(deg, i).c)
                d.add_to(deg, v.index_of(deg - 1, "v." + V.space.label(deg - 1, j)), col, s);
        }
    }
    ChainComplex cyl(v, d);
    LinearMap i(W.space, v, 0), q(v, V.space, 0);
    for (Deg deg : W.space.degrees())
        for (int k = 0; k < W.space.dim(deg); ++k)
            i.set(deg, v.index_of(deg, "w." + W.space.label(deg, k)), k, one);
    for (Deg deg : v.degrees())
        for (int k = 0; k < v.dim(deg); ++k) {
            const std::string& lbl = v.label(deg, k);
            if (lbl.rfind("v.", 0) == 0) {
                q.set(deg, V.space.index_of(deg, lbl.substr(2)), k, one);
            } else if (lbl.rfind("w.", 0) == 0) {
                int iw = W.space.index_of(deg, lbl.substr(2));
                for (auto& [j, s] : f.apply_basis(deg, iw).c)
                    q.add_to(deg, j, k, s);
            }
        }
    return Cylinder{std::move(cyl), std::move(i), std::move(q)};
}

}  // namespace dgop
