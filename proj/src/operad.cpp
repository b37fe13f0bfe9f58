#include "dgop/operad.hpp"

namespace dgop {

bool Operad::has_composite(int n, int i, int m) const {
    return composites.count({n, i, m}) > 0;
}

HVec Operad::compose_basis(int n, int i, int m, Deg dn, int bn, Deg dm, int bm) const {
    auto it = composites.find({n, i, m});
    if (it == composites.end())
        throw Error("operad composite (" + std::to_string(n) + "," + std::to_string(i) + "," +
                    std::to_string(m) + ") outside truncation");
    if (undefined_pairs.count({n, i, m, dn, bn, dm, bm}))
        throw TruncatedComposite("composite leaves the degree window");
    const ChainComplex& src = pair_spaces.at({n, m});
    std::string lbl =
        "(" + seq.at(n).space.label(dn, bn) + "," + seq.at(m).space.label(dm, bm) + ")";
    int col = src.space.index_of(dn + dm, lbl);
    if (col < 0)
        throw Error("compose_basis: pair index missing");
    return it->second.apply_basis(dn + dm, col);
}

HVec Operad::compose(int n, int i, int m, const HVec& f, const HVec& g) const {
    HVec out;
    out.deg = f.deg + g.deg;
    for (auto& [bf, cf] : f.c)
        for (auto& [bg, cg] : g.c) {
            HVec term = compose_basis(n, i, m, f.deg, bf, g.deg, bg);
            for (auto& [r, s] : term.c)
                out.add(r, s * cf * cg);
        }
    return out;
}

void Operad::validate_shapes() const {
    if (unit.deg != 0)
        throw Error("operad unit must live in degree 0");
    for (auto& [i, s] : unit.c)
        if (i < 0 || i >= seq.at(1).space.dim(0))
            throw Error("operad unit index out of range");
}

ChainComplex operad_pair_space(const Operad& p, int n, int m) {
    return tensor(p.seq.at(n), p.seq.at(m));
}

namespace {

std::string basis_name(const SymmetricSequence& s, int n, Deg d, int i) {
    return "arity " + std::to_string(n) + " deg " + std::to_string(d) + " '" +
           s.at(n).space.label(d, i) + "'";
}

bool hvec_eq(const HVec& a, const HVec& b) {
    if (a.c.size() != b.c.size())
        return false;
    for (auto& [i, s] : a.c) {
        auto it = b.c.find(i);
        if (it == b.c.end() || it->second != s)
            return false;
    }
    return true;
}

HVec hvec_scale(const HVec& a, const Scalar& s) {
    HVec out;
    out.deg = a.deg;
    for (auto& [i, c] : a.c)
        out.add(i, c * s);
    return out;
}

}  // namespace

Report check_operad(const Operad& p) {
    Report rep;
    Field f = p.field();
    const SymmetricSequence& s = p.seq;

    try {
        s.validate();
        rep.note(true, "components-and-actions", "");
    } catch (const Error& e) {
        rep.note(false, "components-and-actions", e.what());
    }
    try {
        p.validate_shapes();
        rep.note(true, "unit-shape", "");
    } catch (const Error& e) {
        rep.note(false, "unit-shape", e.what());
    }

    int A = s.max_arity;

    // chain-map property of every composite
    for (auto& [key, m] : p.composites) {
        auto [n, i, mm] = key;
        const ChainComplex& src = p.pair_spaces.at({n, mm});
        bool ok = is_chain_map(m, src, s.at(n + mm - 1));
        rep.note(ok, "composite-chain-map",
                 "(n,i,m)=(" + std::to_string(n) + "," + std::to_string(i) + "," +
                     std::to_string(mm) + ")");
    }

    // unit laws
    for (int n = 1; n <= A; ++n) {
        if (s.zero_at(n))
            continue;
        for (Deg d : s.at(n).space.degrees())
            for (int b = 0; b < s.at(n).space.dim(d); ++b) {
                HVec v;
                v.deg = d;
                v.add(b, Scalar::one(f));
                try {
                    for (int i = 1; i <= n; ++i) {
                        if (!p.has_composite(n, i, 1))
                            continue;
                        HVec r = p.compose(n, i, 1, v, p.unit);
                        rep.note(hvec_eq(r, v), "unit-right",
                                 basis_name(s, n, d, b) + " at slot " + std::to_string(i));
                    }
                    if (p.has_composite(1, 1, n)) {
                        HVec r = p.compose(1, 1, n, p.unit, v);
                        rep.note(hvec_eq(r, v), "unit-left", basis_name(s, n, d, b));
                    }
                } catch (const TruncatedComposite&) {
                }
            }
    }

    // equivariance on adjacent transpositions
    for (int n = 1; n <= A; ++n) {
        if (s.zero_at(n))
            continue;
        for (int m = 1; m <= A; ++m) {
            if (s.zero_at(m) || n + m - 1 > A)
                continue;
            for (int i = 1; i <= n; ++i) {
                if (!p.has_composite(n, i, m))
                    continue;
                for (Deg dn : s.at(n).space.degrees())
                    for (int bn = 0; bn < s.at(n).space.dim(dn); ++bn)
                        for (Deg dm : s.at(m).space.degrees())
                            for (int bm = 0; bm < s.at(m).space.dim(dm); ++bm) {
                                HVec vf;
                                vf.deg = dn;
                                vf.add(bn, Scalar::one(f));
                                HVec vg;
                                vg.deg = dm;
                                vg.add(bm, Scalar::one(f));
                                // sigma-side: (sigma f) o_i g = (sigma o_i id_m)(f o_{sigma^{-1}(i)} g)
                                for (int a = 1; a < n; ++a)
                                    try {
                                        Perm sig = adjacent_transposition(n, a);
                                        HVec sf = s.action[n][a - 1].apply(vf);
                                        HVec lhs = p.compose(n, i, m, sf, vg);
                                        int ii = perm_inverse(sig)[i - 1];
                                        HVec inner = p.compose(n, ii, m, vf, vg);
                                        Perm big = block_substitution(sig, ii, perm_identity(m));
                                        HVec rhs = s.action_of(n + m - 1, big).apply(inner);
                                        rep.note(hvec_eq(lhs, rhs), "equivariance-outer",
                                                 basis_name(s, n, dn, bn) + " o_" +
                                                     std::to_string(i) + " " +
                                                     basis_name(s, m, dm, bm) + " s_" +
                                                     std::to_string(a));
                                    } catch (const TruncatedComposite&) {
                                    }
                                // tau-side: f o_i (tau g) = (id_n o_i tau)(f o_i g)
                                for (int a = 1; a < m; ++a)
                                    try {
                                        Perm tau = adjacent_transposition(m, a);
                                        HVec tg = s.action[m][a - 1].apply(vg);
                                        HVec lhs = p.compose(n, i, m, vf, tg);
                                        HVec inner = p.compose(n, i, m, vf, vg);
                                        Perm big = block_substitution(perm_identity(n), i, tau);
                                        HVec rhs = s.action_of(n + m - 1, big).apply(inner);
                                        rep.note(hvec_eq(lhs, rhs), "equivariance-inner",
                                                 basis_name(s, n, dn, bn) + " o_" +
                                                     std::to_string(i) + " " +
                                                     basis_name(s, m, dm, bm) + " s_" +
                                                     std::to_string(a));
                                    } catch (const TruncatedComposite&) {
                                    }
                            }
            }
        }
    }

    // associativity: sequential and parallel
    for (int n = 1; n <= A; ++n)
        for (int m = 1; m <= A; ++m)
            for (int l = 1; l <= A; ++l) {
                if (s.zero_at(n) || s.zero_at(m) || s.zero_at(l))
                    continue;
                if (n + m - 1 > A || n + m + l - 2 > A)
                    continue;
                for (Deg dn : s.at(n).space.degrees())
                    for (int bn = 0; bn < s.at(n).space.dim(dn); ++bn)
                        for (Deg dm : s.at(m).space.degrees())
                            for (int bm = 0; bm < s.at(m).space.dim(dm); ++bm)
                                for (Deg dl : s.at(l).space.degrees())
                                    for (int bl = 0; bl < s.at(l).space.dim(dl); ++bl) {
                                        HVec vf;
                                        vf.deg = dn;
                                        vf.add(bn, Scalar::one(f));
                                        HVec vg;
                                        vg.deg = dm;
                                        vg.add(bm, Scalar::one(f));
                                        HVec vh;
                                        vh.deg = dl;
                                        vh.add(bl, Scalar::one(f));
                                        for (int i = 1; i <= n; ++i) {
                                            if (!p.has_composite(n, i, m))
                                                continue;
                                            // sequential: (f o_i g) o_{i-1+j} h = f o_i (g o_j h)
                                            for (int j = 1; j <= m; ++j) {
                                                if (!p.has_composite(n + m - 1, i - 1 + j, l) ||
                                                    !p.has_composite(m, j, l))
                                                    continue;
                                                try {
                                                    HVec lhs =
                                                        p.compose(n + m - 1, i - 1 + j, l,
                                                                  p.compose(n, i, m, vf, vg), vh);
                                                    HVec rhs =
                                                        p.compose(n, i, l + m - 1, vf,
                                                                  p.compose(m, j, l, vg, vh));
                                                    rep.note(hvec_eq(lhs, rhs), "assoc-sequential",
                                                             basis_name(s, n, dn, bn) + " i=" +
                                                                 std::to_string(i) + " j=" +
                                                                 std::to_string(j));
                                                } catch (const TruncatedComposite&) {
                                                }
                                            }
                                            // parallel: i < j:
                                            // (f o_i g) o_{j+m-1} h = (-1)^{|g||h|} (f o_j h) o_i g
                                            for (int j = i + 1; j <= n; ++j) {
                                                if (!p.has_composite(n + m - 1, j + m - 1, l) ||
                                                    !p.has_composite(n, j, l) ||
                                                    !p.has_composite(n + l - 1, i, m))
                                                    continue;
                                                try {
                                                    HVec lhs =
                                                        p.compose(n + m - 1, j + m - 1, l,
                                                                  p.compose(n, i, m, vf, vg), vh);
                                                    HVec rhs = hvec_scale(
                                                        p.compose(n + l - 1, i, m,
                                                                  p.compose(n, j, l, vf, vh), vg),
                                                        sign_pow(f,
                                                                 static_cast<long long>(dm) * dl));
                                                    rep.note(hvec_eq(lhs, rhs), "assoc-parallel",
                                                             basis_name(s, n, dn, bn) + " i=" +
                                                                 std::to_string(i) + " j=" +
                                                                 std::to_string(j));
                                                } catch (const TruncatedComposite&) {
                                                }
                                            }
                                        }
                                    }
            }

    return rep;
}

namespace {

/// induced map on [A,B]: f -> beta ∘ f ∘ alpha, for degree-0 alpha, beta
LinearMap hom_induced(const ChainComplex& homc, const ChainComplex& a, const ChainComplex& b,
                      const LinearMap& alpha, const LinearMap& beta) {
    Field f = homc.field();
    LinearMap out(homc.space, homc.space, 0);
    for (Deg hd : homc.space.degrees()) {
        for (int hi = 0; hi < homc.space.dim(hd); ++hi) {
            const std::string& lbl = homc.space.label(hd, hi);
            // parse "[a->b]"
            size_t arrow = lbl.find("->");
            std::string la = lbl.substr(1, arrow - 1);
            std::string lb = lbl.substr(arrow + 2, lbl.size() - arrow - 3);
            // locate degrees
            for (Deg da : a.space.degrees()) {
                int ia = a.space.index_of(da, la);
                if (ia < 0)
                    continue;
                Deg db = da + hd;
                int ib = b.space.index_of(db, lb);
                if (ib < 0)
                    continue;
                HVec betab = beta.apply_basis(db, ib);
                // alpha^T: all a' with <alpha a', a> != 0
                for (Deg da2 : a.space.degrees()) {
                    if (da2 + alpha.degree() != da)
                        continue;
                    for (int ia2 = 0; ia2 < a.space.dim(da2); ++ia2) {
                        HVec im = alpha.apply_basis(da2, ia2);
                        auto it = im.c.find(ia);
                        if (it == im.c.end())
                            continue;
                        for (auto& [ib2, cb] : betab.c) {
                            std::string lbl2 = "[" + a.space.label(da2, ia2) + "->" +
                                               b.space.label(db + beta.degree(), ib2) + "]";
                            int row = homc.space.index_of(hd, lbl2);
                            if (row < 0)
                                throw Error("hom_induced: target basis missing");
                            out.add_to(hd, row, hi, it->second * cb);
                        }
                    }
                }
            }
        }
    }
    return out;
}

struct HomBasisElem {
    Deg da;
    int ia;
    Deg db;
    int ib;
};

// resolve "[a->b]" labels once per hom complex
std::map<Deg, std::vector<HomBasisElem>> hom_elements(const ChainComplex& homc,
                                                      const ChainComplex& a,
                                                      const ChainComplex& b) {
    std::map<Deg, std::vector<HomBasisElem>> out;
    for (Deg hd : homc.space.degrees()) {
        auto& v = out[hd];
        v.resize(homc.space.dim(hd));
        for (int hi = 0; hi < homc.space.dim(hd); ++hi) {
            const std::string& lbl = homc.space.label(hd, hi);
            size_t arrow = lbl.find("->");
            std::string la = lbl.substr(1, arrow - 1);
            std::string lb = lbl.substr(arrow + 2, lbl.size() - arrow - 3);
            bool found = false;
            for (Deg da : a.space.degrees()) {
                int ia = a.space.index_of(da, la);
                if (ia < 0)
                    continue;
                int ib = b.space.index_of(da + hd, lb);
                if (ib < 0)
                    continue;
                v[hi] = {da, ia, da + hd, ib};
                found = true;
                break;
            }
            if (!found)
                throw Error("hom_elements: cannot resolve " + lbl);
        }
    }
    return out;
}

Operad hom_operad(const ChainComplex& v, int max_arity, bool co) {
    Field f = v.field();
    Operad p;
    p.seq = SymmetricSequence(f, max_arity);
    std::vector<TensorPower> powers;
    for (int n = 0; n <= max_arity; ++n)
        powers.push_back(tensor_power(v, n));

    std::vector<std::map<Deg, std::vector<HomBasisElem>>> elems(max_arity + 1);
    for (int n = 0; n <= max_arity; ++n) {
        const ChainComplex& pw = powers[n].cx;
        ChainComplex h = co ? hom_complex(v, pw) : hom_complex(pw, v);
        p.seq.component[n] = h;
        elems[n] = co ? hom_elements(h, v, pw) : hom_elements(h, pw, v);
        // action: place permutation on the power side
        p.seq.action[n].clear();
        for (int i = 1; i < n; ++i) {
            Perm t = adjacent_transposition(n, i);
            LinearMap pp = place_permutation(powers[n], t);
            LinearMap a = co ? hom_induced(h, v, pw, LinearMap::identity(v.space), pp)
                             : hom_induced(h, pw, v, place_permutation(powers[n], perm_inverse(t)),
                                           LinearMap::identity(v.space));
            p.seq.action[n].push_back(std::move(a));
        }
    }

    // unit = identity in arity 1
    p.unit.deg = 0;
    {
        const ChainComplex& h1 = p.seq.component[1];
        for (Deg d : v.space.degrees())
            for (int i = 0; i < v.space.dim(d); ++i) {
                std::string lbl = "[" + v.space.label(d, i) + "->" + v.space.label(d, i) + "]";
                int idx = h1.space.index_of(0, lbl);
                if (idx < 0)
                    throw Error("hom_operad: identity basis element missing");
                p.unit.add(idx, Scalar::one(f));
            }
    }

    // partial composites
    for (int n = 1; n <= max_arity; ++n)
        for (int m = 1; m <= max_arity; ++m) {
            if (n + m - 1 > max_arity)
                continue;
            const ChainComplex& hn = p.seq.component[n];
            const ChainComplex& hm = p.seq.component[m];
            const ChainComplex& ho = p.seq.component[n + m - 1];
            ChainComplex pair = tensor(hn, hm);
            for (int i = 1; i <= n; ++i) {
                LinearMap cmp(pair.space, ho.space, 0);
                for (Deg dn : hn.space.degrees())
                    for (int bn = 0; bn < hn.space.dim(dn); ++bn)
                        for (Deg dm : hm.space.degrees())
                            for (int bm = 0; bm < hm.space.dim(dm); ++bm) {
                                const HomBasisElem& fe = elems[n].at(dn)[bn];
                                const HomBasisElem& ge = elems[m].at(dm)[bm];
                                // word of the n-side power element
                                const auto& fword =
                                    co ? powers[n].factors.at(fe.db)[fe.ib]
                                       : powers[n].factors.at(fe.da)[fe.ia];
                                const auto& gword =
                                    co ? powers[m].factors.at(ge.db)[ge.ib]
                                       : powers[m].factors.at(ge.da)[ge.ia];
                                // slot i factor must match g's v-side element
                                std::pair<Deg, int> gv =
                                    co ? std::make_pair(ge.da, ge.ia) : std::make_pair(ge.db, ge.ib);
                                if (fword[i - 1] != gv)
                                    continue;
                                // Koszul: g passes the first i-1 letters of the word
                                long long pre = 0;
                                for (int t = 0; t < i - 1; ++t)
                                    pre += fword[t].first;
                                Scalar sgn = sign_pow(f, static_cast<long long>(dm) * pre);
                                std::vector<std::pair<Deg, int>> zword;
                                for (int t = 0; t < i - 1; ++t)
                                    zword.push_back(fword[t]);
                                for (auto& q : gword)
                                    zword.push_back(q);
                                for (int t = i; t < n; ++t)
                                    zword.push_back(fword[t]);
                                Deg zdeg = 0;
                                for (auto& q : zword)
                                    zdeg += q.first;
                                int zidx = powers[n + m - 1].index_of(zdeg, zword);
                                if (zidx < 0)
                                    throw Error("hom_operad: composite word missing");
                                std::string zlbl =
                                    powers[n + m - 1].cx.space.label(zdeg, zidx);
                                std::string out_lbl, vin_lbl;
                                Deg vdeg;
                                if (co) {
                                    vin_lbl = v.space.label(fe.da, fe.ia);
                                    vdeg = fe.da;
                                    out_lbl = "[" + vin_lbl + "->" + zlbl + "]";
                                } else {
                                    vin_lbl = v.space.label(fe.db, fe.ib);
                                    vdeg = fe.db;
                                    out_lbl = "[" + zlbl + "->" + vin_lbl + "]";
                                }
                                int row = ho.space.index_of(dn + dm, out_lbl);
                                if (row < 0)
                                    throw Error("hom_operad: output basis missing");
                                std::string pair_lbl = "(" + hn.space.label(dn, bn) + "," +
                                                       hm.space.label(dm, bm) + ")";
                                int col = pair.space.index_of(dn + dm, pair_lbl);
                                cmp.add_to(dn + dm, row, col, sgn);
                            }
                p.composites[{n, i, m}] = std::move(cmp);
            }
            p.pair_spaces[{n, m}] = std::move(pair);
        }
    return p;
}

}  // namespace

Operad endomorphism_operad(const ChainComplex& v, int max_arity) {
    return hom_operad(v, max_arity, false);
}

Operad coendomorphism_operad(const ChainComplex& v, int max_arity) {
    return hom_operad(v, max_arity, true);
}

OperadMorphism identity_morphism(const Operad& p) {
    OperadMorphism phi;
    for (int n = 0; n <= p.max_arity(); ++n)
        phi.maps.push_back(LinearMap::identity(p.seq.at(n).space));
    return phi;
}

HVec OperadMorphism::apply(int n, const HVec& v) const {
    return maps.at(n).apply(v);
}

Report verify_operad_morphism(const Operad& p, const Operad& q, const OperadMorphism& phi) {
    Report rep;
    Field f = p.field();
    int A = std::min(p.max_arity(), q.max_arity());
    for (int n = 0; n <= A; ++n) {
        if (p.seq.zero_at(n))
            continue;
        const LinearMap& m = phi.maps.at(n);
        rep.note(m.degree() == 0 && m.source() == p.seq.at(n).space &&
                     m.target() == q.seq.at(n).space,
                 "morphism-shape", "arity " + std::to_string(n));
        rep.note(hom_del(m, p.seq.at(n).d, q.seq.at(n).d).is_zero(), "morphism-chain-map",
                 "arity " + std::to_string(n));
        for (int i = 1; i < n; ++i) {
            LinearMap lhs = phi.maps.at(n).compose(p.seq.action[n][i - 1]);
            LinearMap rhs = q.seq.action[n][i - 1].compose(phi.maps.at(n));
            rep.note(lhs == rhs, "morphism-equivariance",
                     "arity " + std::to_string(n) + " s_" + std::to_string(i));
        }
    }
    rep.note(hvec_eq(phi.apply(1, p.unit), q.unit), "morphism-unit", "");
    for (auto& [key, cmpP] : p.composites) {
        auto [n, i, m] = key;
        if (n > A || m > A || n + m - 1 > A)
            continue;
        if (!q.has_composite(n, i, m))
            continue;
        for (Deg dn : p.seq.at(n).space.degrees())
            for (int bn = 0; bn < p.seq.at(n).space.dim(dn); ++bn)
                for (Deg dm : p.seq.at(m).space.degrees())
                    for (int bm = 0; bm < p.seq.at(m).space.dim(dm); ++bm) {
                        HVec vf;
                        vf.deg = dn;
                        vf.add(bn, Scalar::one(f));
                        HVec vg;
                        vg.deg = dm;
                        vg.add(bm, Scalar::one(f));
                        HVec lhs = phi.apply(n + m - 1, p.compose(n, i, m, vf, vg));
                        HVec rhs = q.compose(n, i, m, phi.apply(n, vf), phi.apply(m, vg));
                        rep.note(hvec_eq(lhs, rhs), "morphism-composite",
                                 basis_name(p.seq, n, dn, bn) + " o_" + std::to_string(i) + " " +
                                     basis_name(p.seq, m, dm, bm));
                    }
    }
    return rep;
}

}  // namespace dgop
