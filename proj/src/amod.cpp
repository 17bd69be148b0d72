#include "cohopf/amod.hpp"

namespace cohopf {

namespace {

Comodule tensor_power(const Comodule& a, std::size_t k) {
    Comodule out = a;
    for (std::size_t i = 1; i < k; ++i) out = tensor_diagonal(out, a);
    return out;
}

// id^{⊗i} ⊗ mult ⊗ id^{⊗(nslots-2-i)} on A^{⊗nslots}
LinMap face_map(const ComoduleAlgebra& a, std::size_t nslots, std::size_t i) {
    const Field& f = a.field();
    LinMap acc = i == 0 ? a.mult : LinMap::identity(f, a.under.space);
    std::size_t pos = 1;
    std::size_t consumed = i == 0 ? 2 : 1;
    while (consumed < nslots) {
        if (pos == i) {
            acc = acc.tensor(a.mult);
            consumed += 2;
        } else {
            acc = acc.tensor(LinMap::identity(f, a.under.space));
            consumed += 1;
        }
        ++pos;
    }
    return acc;
}

// alternating sum of all n+1 adjacent multiplications on A^{⊗(n+2)}
LinMap bar_delta(const ComoduleAlgebra& a, std::size_t n) {
    LinMap d = face_map(a, n + 2, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        LinMap fi = face_map(a, n + 2, i);
        d = (i % 2 == 0) ? d + fi : d - fi;
    }
    return d;
}

}  // namespace

std::vector<std::string> validate_comodule_algebra(const ComoduleAlgebra& a) {
    std::vector<std::string> out = validate_comodule(a.under);
    const Field& f = a.field();
    LinMap id = LinMap::identity(f, a.under.space);
    if (a.mult.m.rows() != a.dim() || a.mult.m.cols() != a.dim() * a.dim() || a.unit.m.rows() != a.dim() ||
        a.unit.m.cols() != 1) {
        out.push_back("shape: mult/unit tables");
        return out;
    }
    if (!(a.mult * a.mult.tensor(id) == a.mult * id.tensor(a.mult))) out.push_back("mult not associative");
    if (!(a.mult * a.unit.tensor(id) == id) || !(a.mult * id.tensor(a.unit) == id)) out.push_back("unit law fails");
    Comodule AA = tensor_diagonal(a.under, a.under);
    if (!is_colinear(AA, a.under, LinMap(AA.space, a.under.space, a.mult.m)))
        out.push_back("mult not H-colinear");
    Comodule k = trivial_comodule(a.under.H);
    if (!is_colinear(k, a.under, LinMap(k.space, a.under.space, a.unit.m)))
        out.push_back("unit not H-colinear");
    return out;
}

ComoduleAlgebra algebra_from_hopf(HopfPtr H) {
    ComoduleAlgebra a;
    a.under = regular_comodule(H);
    a.mult = H->mult;
    a.unit = H->unit;
    return a;
}

ComoduleAlgebra trivial_algebra(HopfPtr H) {
    ComoduleAlgebra a;
    a.under = trivial_comodule(H);
    const Field& f = H->k;
    VectorSpace line = a.under.space;
    a.mult = LinMap(VectorSpace::tensor(line, line), line, Mat::identity(f, 1));
    a.unit = LinMap(VectorSpace::line(), line, Mat::identity(f, 1));
    return a;
}

std::vector<std::string> validate_amodule(const AModObject& m) {
    std::vector<std::string> out = validate_comodule(m.under);
    const ComoduleAlgebra& a = *m.A;
    const Field& f = m.field();
    if (m.action.m.rows() != m.dim() || m.action.m.cols() != a.dim() * m.dim()) {
        out.push_back("shape: action table");
        return out;
    }
    LinMap ida = LinMap::identity(f, a.under.space);
    LinMap idm = LinMap::identity(f, m.under.space);
    if (!(m.action * a.mult.tensor(idm) == m.action * ida.tensor(m.action)))
        out.push_back("action not associative");
    if (!(m.action * a.unit.tensor(idm) == idm)) out.push_back("action not unital");
    Comodule AM = tensor_diagonal(a.under, m.under);
    if (!is_colinear(AM, m.under, LinMap(AM.space, m.under.space, m.action.m)))
        out.push_back("action not H-colinear");
    return out;
}

bool is_amod_map(const AModMap& f) {
    if (f.src.A.get() != f.dst.A.get()) return false;
    if (!is_colinear(f.src.under, f.dst.under, f.f)) return false;
    LinMap ida = LinMap::identity(f.src.field(), f.src.A->under.space);
    return f.f * f.src.action == f.dst.action * ida.tensor(f.f);
}

AModObject regular_amodule(AlgebraPtr a) {
    AModObject m;
    m.A = a;
    m.under = a->under;
    m.action = a->mult;
    return m;
}

AModObject free_amodule(AlgebraPtr a, const Comodule& v) {
    AModObject m;
    m.A = a;
    m.under = tensor_diagonal(a->under, v);
    LinMap idv = LinMap::identity(a->field(), v.space);
    LinMap act = a->mult.tensor(idv);
    m.action = LinMap(VectorSpace::tensor(a->under.space, m.under.space), m.under.space, act.m);
    return m;
}

std::vector<LinMap> hom_amod_colinear(const AModObject& m, const AModObject& n) {
    const Field& f = m.field();
    const Hopf& H = *m.under.H;
    const std::size_t mm = m.dim(), nn = n.dim(), d = H.space.dim, da = m.A->dim();
    LinMap idh = LinMap::identity(f, H.space);
    Mat colin = probe_operator(f, nn, mm, nn * d, mm, [&](const Mat& fm) {
        return n.under.rho.m * fm - Mat::kron(fm, idh.m) * m.under.rho.m;
    });
    Mat alin = probe_operator(f, nn, mm, nn, da * mm, [&](const Mat& fm) {
        return fm * m.action.m - n.action.m * Mat::kron(Mat::identity(f, da), fm);
    });
    Mat K = kernel_basis(Mat::vcat(colin, alin));
    std::vector<LinMap> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Mat col(f, K.rows(), 1);
        for (std::size_t i = 0; i < K.rows(); ++i)
            if (!K.entry_zero(i, c)) col.set(i, 0, K.at(i, c));
        out.emplace_back(m.under.space, n.under.space, unvec(nn, mm, col));
    }
    return out;
}

HStarActionOnHomA homA_with_action(const AModObject& m, const AModObject& n) {
    if (m.A.get() != n.A.get()) throw std::logic_error("homA_with_action: different algebras");
    require_same_hopf(m.under, n.under);
    HStarActionOnHomA out;
    const Field& f = m.field();
    const Hopf& H = *m.under.H;
    const std::size_t mm = m.dim(), nn = n.dim(), d = H.space.dim, da = m.A->dim();

    Mat sys = probe_operator(f, nn, mm, nn, da * mm, [&](const Mat& fm) {
        return fm * m.action.m - n.action.m * Mat::kron(Mat::identity(f, da), fm);
    });
    Mat K = kernel_basis(sys);
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Mat col(f, K.rows(), 1);
        for (std::size_t i = 0; i < K.rows(); ++i)
            if (!K.entry_zero(i, c)) col.set(i, 0, K.at(i, c));
        out.homA.emplace_back(m.under.space, n.under.space, unvec(nn, mm, col));
    }

    // (x·f) = (id_N⊗x)∘(id_N⊗m_H)∘(ρ_N⊗id)∘(f⊗id)∘(id_M⊗S)∘ρ_M on all of Hom_k
    LinMap idm = LinMap::identity(f, m.under.space);
    LinMap idn = LinMap::identity(f, n.under.space);
    LinMap idh = LinMap::identity(f, H.space);
    auto act_on = [&](std::size_t k, const Mat& fm) {
        Mat e(f, 1, d);
        e.set_int(0, k, 1);
        LinMap evalk(H.space, VectorSpace::line(), e);
        LinMap fmap(m.under.space, n.under.space, fm);
        LinMap t = idn.tensor(evalk) * idn.tensor(H.mult) * n.under.rho.tensor(idh) * fmap.tensor(idh) *
                   idm.tensor(H.antipode) * m.under.rho;
        return t.m;
    };
    for (std::size_t k = 0; k < d; ++k)
        out.action_full.push_back(probe_operator(f, nn, mm, nn, mm, [&](const Mat& fm) { return act_on(k, fm); }));

    Mat basis(f, nn * mm, out.homA.size());
    for (std::size_t c = 0; c < out.homA.size(); ++c) {
        Mat v = vec_of(out.homA[c].m);
        for (std::size_t i = 0; i < v.rows(); ++i)
            if (!v.entry_zero(i, 0)) basis.set(i, c, v.at(i, 0));
    }
    out.closed = true;
    for (std::size_t k = 0; k < d && out.closed; ++k) {
        Mat coords(f, out.homA.size(), out.homA.size());
        SolveResult sr = solve(basis, out.action_full[k] * basis);
        if (!sr.consistent) { out.closed = false; break; }
        out.action.push_back(sr.particular);
    }
    if (!out.closed) out.action.clear();

    const std::size_t full = nn * mm;
    Mat eps_act(f, full, full);
    for (std::size_t k = 0; k < d; ++k) {
        Scalar c = H.counit.m.at(0, k);
        if (!c.is_zero()) eps_act = eps_act + out.action_full[k].scaled(c);
    }
    out.counit_identity = eps_act.is_identity();

    Hopf dual = dual_hopf(H);
    out.module_law = true;
    for (std::size_t a = 0; a < d && out.module_law; ++a)
        for (std::size_t b = 0; b < d && out.module_law; ++b) {
            Mat lhs = out.action_full[a] * out.action_full[b];
            Mat rhs(f, full, full);
            for (std::size_t c = 0; c < d; ++c) {
                Scalar coeff = dual.mult.m.at(c, a * d + b);
                if (!coeff.is_zero()) rhs = rhs + out.action_full[c].scaled(coeff);
            }
            if (!(lhs == rhs)) out.module_law = false;
        }

    // invariants {f in Hom_A : x·f = x(1)·f}; x(1) for x = e_k^* is unit[k]
    Mat inv_sys(f, 0, out.homA.size());
    bool first = true;
    for (std::size_t k = 0; k < d; ++k) {
        Mat blk = out.action_full[k] * basis - basis.scaled(H.unit.m.at(k, 0));
        inv_sys = first ? blk : Mat::vcat(inv_sys, blk);
        first = false;
    }
    Mat invK = kernel_basis(inv_sys);
    for (std::size_t c = 0; c < invK.cols(); ++c) {
        LinMap f_inv = LinMap::zero(f, n.under.space, m.under.space);
        for (std::size_t alpha = 0; alpha < out.homA.size(); ++alpha) {
            Scalar co = invK.at(alpha, c);
            if (!co.is_zero()) f_inv = f_inv + out.homA[alpha].scaled(co);
        }
        out.invariants.push_back(f_inv);
    }

    out.homAH = hom_amod_colinear(m, n);
    {
        Mat A(f, nn * mm, out.invariants.size()), B(f, nn * mm, out.homAH.size());
        for (std::size_t c = 0; c < out.invariants.size(); ++c) {
            Mat v = vec_of(out.invariants[c].m);
            for (std::size_t i = 0; i < v.rows(); ++i)
                if (!v.entry_zero(i, 0)) A.set(i, c, v.at(i, 0));
        }
        for (std::size_t c = 0; c < out.homAH.size(); ++c) {
            Mat v = vec_of(out.homAH[c].m);
            for (std::size_t i = 0; i < v.rows(); ++i)
                if (!v.entry_zero(i, 0)) B.set(i, c, v.at(i, 0));
        }
        out.invariants_match = subspace_equal(A, B);
    }
    return out;
}

std::optional<LinMap> total_integral(const ComoduleAlgebra& a) {
    const Hopf& H = *a.under.H;
    const Field& f = a.field();
    const std::size_t d = H.space.dim, da = a.dim();
    LinMap idh = LinMap::identity(f, H.space);
    Mat colin = probe_operator(f, da, d, da * d, d, [&](const Mat& phi) {
        return a.under.rho.m * phi - Mat::kron(phi, idh.m) * H.comult.m;
    });
    Mat unit_rows = probe_operator(f, da, d, da, 1, [&](const Mat& phi) { return phi * H.unit.m; });
    Mat A = Mat::vcat(colin, unit_rows);
    Mat B = Mat::vcat(Mat::zero(f, colin.rows(), 1), vec_of(a.unit.m));
    SolveResult sr = solve(A, B);
    if (!sr.consistent) return std::nullopt;
    return LinMap(H.space, a.under.space, unvec(da, d, sr.particular));
}

AmodSuspension suspend_amod(const AModObject& m, const IntegralData& integ) {
    AmodSuspension out;
    out.sus = suspend(m.under, integ);
    const Field& f = m.field();
    LinMap idh = LinMap::identity(f, m.under.H->space);
    LinMap ida = LinMap::identity(f, m.A->under.space);

    out.mh.A = m.A;
    out.mh.under = out.sus.mh;
    LinMap act_mh = m.action.tensor(idh);
    out.mh.action = LinMap(VectorSpace::tensor(m.A->under.space, out.sus.mh.space), out.sus.mh.space, act_mh.m);

    out.sigma.A = m.A;
    out.sigma.under = out.sus.sigma;
    LinMap act_sigma = out.sus.qd.projection * out.mh.action * ida.tensor(out.sus.qd.section);
    out.sigma.action =
        LinMap(VectorSpace::tensor(m.A->under.space, out.sus.sigma.space), out.sus.sigma.space, act_sigma.m);
    if (!(out.sus.qd.projection * out.mh.action == out.sigma.action * ida.tensor(out.sus.qd.projection)))
        throw std::logic_error("suspend_amod: action does not descend to the quotient");
    return out;
}

AmodCylinder mapping_cylinder_amod(const AModMap& f, const IntegralData& integ) {
    if (!is_amod_map(f)) throw std::logic_error("mapping_cylinder_amod: not an A-module map");
    AmodCylinder out;
    const AModObject& X = f.src;
    const AModObject& Y = f.dst;
    const Field& k = X.field();
    LinMap ida = LinMap::identity(k, X.A->under.space);

    AmodSuspension sx = suspend_amod(X, integ);
    out.sus = sx.sus;
    out.xh = sx.mh;
    SumComodule S = direct_sum(sx.mh.under, Y.under);
    LinMap act_S = S.i1 * sx.mh.action * ida.tensor(S.p1) + S.i2 * Y.action * ida.tensor(S.p2);

    LinMap rel = S.i1 * sx.sus.embed - S.i2 * f.f;
    QuotientComodule qc = quotient_comodule(S.sum, rel, "C_f");
    out.qd = qc.qd;
    out.cf.A = X.A;
    out.cf.under = qc.q;
    LinMap act_cf = qc.qd.projection * act_S * ida.tensor(qc.qd.section);
    out.cf.action = LinMap(VectorSpace::tensor(X.A->under.space, qc.q.space), qc.q.space, act_cf.m);
    if (!(qc.qd.projection * act_S == out.cf.action * ida.tensor(qc.qd.projection)))
        throw std::logic_error("mapping_cylinder_amod: action does not descend");

    out.inc_y = LinMap(Y.under.space, qc.q.space, (qc.qd.projection * S.i2).m);
    out.inc_xh = LinMap(sx.mh.under.space, qc.q.space, (qc.qd.projection * S.i1).m);
    out.proj_sigma =
        LinMap(qc.q.space, sx.sus.sigma.space, factor_through_quotient(sx.sus.project * S.p1, rel, qc.qd).m);
    LinMap idx = LinMap::identity(k, X.under.space);
    LinMap feps = f.f * idx.tensor(X.under.H->counit);
    out.retraction = LinMap(qc.q.space, Y.under.space, factor_through_quotient(feps * S.p1 + S.p2, rel, qc.qd).m);
    return out;
}

std::vector<BarStage> bar_stages(AlgebraPtr a, std::size_t n_max, const IntegralData& integ) {
    std::vector<BarStage> out;
    const Field& f = a->field();
    LinMap idh = LinMap::identity(f, a->under.H->space);

    auto bar_obj = [&](std::size_t n) { return free_amodule(a, tensor_power(a->under, n + 1)); };

    AModObject Cprev = regular_amodule(a);
    LinMap inc_xh_prev;
    std::vector<std::size_t> filtration{Cprev.dim()};

    for (std::size_t n = 0; n <= n_max; ++n) {
        BarStage st;
        st.n = n;

        AModObject Xbar;
        LinMap dbar;
        if (n == 0) {
            Xbar = bar_obj(0);
            dbar = bar_delta(*a, 0);
        } else {
            AModObject U = bar_obj(n);
            AModObject V = bar_obj(n - 1);
            LinMap w = bar_delta(*a, n);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                AmodSuspension su = suspend_amod(U, integ);
                AmodSuspension sv = suspend_amod(V, integ);
                w = suspend_map(su.sus, sv.sus, w);
                U = su.sigma;
                V = sv.sigma;
            }
            AmodSuspension sn = suspend_amod(U, integ);
            Xbar = sn.sigma;
            LinMap c = inc_xh_prev * w.tensor(idh);
            dbar = factor_through_quotient(c, sn.sus.embed, sn.sus.qd);
        }

        {
            AModObject U = bar_obj(n + 1);
            AModObject V = bar_obj(n);
            LinMap wnext = bar_delta(*a, n + 1);
            for (std::size_t j = 0; j < n; ++j) {
                AmodSuspension su = suspend_amod(U, integ);
                AmodSuspension sv = suspend_amod(V, integ);
                wnext = suspend_map(su.sus, sv.sus, wnext);
                U = su.sigma;
                V = sv.sigma;
            }
            st.dbar_square_zero = (dbar * wnext).is_zero();
        }

        AmodCylinder cyl = mapping_cylinder_amod({Xbar, Cprev, dbar}, integ);
        st.C = cyl.cf;
        st.C.under.name = "C" + std::to_string(n);
        st.inc_prev = cyl.inc_y;
        st.retr_prev = cyl.retraction;
        st.action_valid = validate_amodule(st.C).empty();
        filtration.push_back(st.C.dim());
        st.filtration_dims = filtration;
        st.subquotient_dims.push_back(filtration[0]);
        for (std::size_t i = 1; i < filtration.size(); ++i)
            st.subquotient_dims.push_back(filtration[i] - filtration[i - 1]);
        st.injective = is_injective(st.C.under).injective;
        out.push_back(st);

        Cprev = st.C;
        inc_xh_prev = cyl.inc_xh;
    }
    return out;
}

std::vector<std::string> validate_bialgebra_in_comod(const BialgebraInComod& b) {
    std::vector<std::string> out = validate_comodule_algebra(*b.alg);
    const Field& f = b.alg->field();
    const VectorSpace& A = b.alg->under.space;
    LinMap id = LinMap::identity(f, A);
    LinMap idk = LinMap::identity(f, VectorSpace::line());
    if (!(b.comult.tensor(id) * b.comult == id.tensor(b.comult) * b.comult))
        out.push_back("comult not coassociative");
    if (!(b.counit.tensor(id) * b.comult == id) || !(id.tensor(b.counit) * b.comult == id))
        out.push_back("counit law fails");
    LinMap tau = swap_map(f, A, A);
    if (!(b.comult * b.alg->mult ==
          b.alg->mult.tensor(b.alg->mult) * id.tensor(tau).tensor(id) * b.comult.tensor(b.comult)))
        out.push_back("comult not an algebra map");
    if (!(b.comult * b.alg->unit == b.alg->unit.tensor(b.alg->unit) * idk)) out.push_back("comult of unit fails");
    if (!(b.counit * b.alg->mult == b.counit.tensor(b.counit))) out.push_back("counit not an algebra map");
    if (b.antipode) {
        const LinMap& S = *b.antipode;
        LinMap eta_eps = b.alg->unit * b.counit;
        if (!(b.alg->mult * S.tensor(id) * b.comult == eta_eps) ||
            !(b.alg->mult * id.tensor(S) * b.comult == eta_eps))
            out.push_back("antipode axiom fails");
        if (rank_of(S.m) != A.dim) out.push_back("antipode not bijective");
        if (!is_colinear(b.alg->under, b.alg->under, S)) out.push_back("antipode not H-colinear");
    }
    return out;
}

FundamentalResult coinvariants_and_fundamental(const AModObject& m, const LinMap& acoaction,
                                               const BialgebraInComod& b) {
    FundamentalResult out;
    const Field& f = m.field();
    const VectorSpace& A = b.alg->under.space;
    LinMap ida = LinMap::identity(f, A);
    LinMap idm = LinMap::identity(f, m.under.space);

    bool coassoc = (b.comult.tensor(idm) * acoaction == ida.tensor(acoaction) * acoaction);
    bool counit = (b.counit.tensor(idm) * acoaction == idm);
    // Hopf-module compatibility: ρ(a·m) = a1 m(-1) ⊗ a2 m(0)
    LinMap tau = swap_map(f, A, A);
    LinMap lhs = acoaction * m.action;
    LinMap rhs = b.alg->mult.tensor(m.action) * ida.tensor(tau).tensor(idm) * b.comult.tensor(acoaction);
    out.hopf_module_ok = coassoc && counit && (lhs.m == rhs.m);
    if (!out.hopf_module_ok) return out;

    LinMap unit_insert = b.alg->unit.tensor(idm);  // M ≅ k⊗M -> A⊗M
    Mat K = kernel_basis((acoaction - unit_insert).m);
    LinMap incl(VectorSpace::make(K.cols(), "c"), m.under.space, K);
    out.coinv = sub_comodule(m.under, incl, m.under.name + "^coA");
    out.incl = LinMap(out.coinv.space, m.under.space, K);
    out.comparison =
        LinMap(VectorSpace::tensor(A, out.coinv.space), m.under.space, (m.action * ida.tensor(out.incl)).m);
    out.isomorphism = (out.comparison.m.rows() == out.comparison.m.cols()) &&
                      rank_of(out.comparison.m) == out.comparison.m.rows();
    return out;
}

}  // namespace cohopf
