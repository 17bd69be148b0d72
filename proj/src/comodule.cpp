#include "cohopf/comodule.hpp"

namespace cohopf {

std::vector<std::string> validate_comodule(const Comodule& c) {
    std::vector<std::string> out;
    const std::size_t m = c.space.dim, d = c.H->space.dim;
    if (c.rho.m.rows() != m * d || c.rho.m.cols() != m) {
        out.push_back("shape: coaction must be " + std::to_string(m * d) + "x" + std::to_string(m));
        return out;
    }
    const Field& f = c.field();
    LinMap idm = LinMap::identity(f, c.space);
    LinMap idh = LinMap::identity(f, c.H->space);
    if (!(idm.tensor(c.H->comult) * c.rho == c.rho.tensor(idh) * c.rho))
        out.push_back("coassociativity: (id⊗Δ)∘ρ != (ρ⊗id)∘ρ");
    if (!(idm.tensor(c.H->counit) * c.rho == idm))
        out.push_back("counit: (id⊗ε)∘ρ != id");
    return out;
}

bool same_hopf(const Comodule& a, const Comodule& b) { return a.H.get() == b.H.get(); }

void require_same_hopf(const Comodule& a, const Comodule& b) {
    if (!same_hopf(a, b)) throw std::logic_error("comodules are attached to different Hopf algebras");
}

Comodule trivial_comodule(HopfPtr H, std::size_t dim, const std::string& name) {
    Comodule c;
    c.name = name;
    c.H = H;
    c.space = dim == 1 ? VectorSpace::with_labels({name}) : VectorSpace::make(dim, name);
    Mat r(H->k, dim * H->space.dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t k = 0; k < H->space.dim; ++k) {
            Scalar u = H->unit.m.at(k, 0);
            if (!u.is_zero()) r.set(i * H->space.dim + k, i, u);
        }
    c.rho = LinMap(c.space, VectorSpace::tensor(c.space, H->space), std::move(r));
    return c;
}

Comodule regular_comodule(HopfPtr H) {
    Comodule c;
    c.name = H->name;
    c.H = H;
    c.space = H->space;
    c.rho = H->comult;
    return c;
}

Comodule cofree_on(const Comodule& m) {
    Comodule c;
    c.name = m.name + "⊗H(cofree)";
    c.H = m.H;
    c.space = VectorSpace::tensor(m.space, m.H->space);
    LinMap idv = LinMap::identity(m.field(), m.space);
    c.rho = idv.tensor(m.H->comult);
    return c;
}

Comodule tensor_diagonal(const Comodule& m, const Comodule& n) {
    require_same_hopf(m, n);
    const Field& f = m.field();
    const Hopf& H = *m.H;
    LinMap idm = LinMap::identity(f, m.space);
    LinMap idn = LinMap::identity(f, n.space);
    LinMap tau = swap_map(f, H.space, n.space);
    // (id_M ⊗ id_N ⊗ m_H)∘(id_M ⊗ τ_{H,N} ⊗ id_H)∘(ρ_M ⊗ ρ_N)
    LinMap rho = idm.tensor(idn).tensor(H.mult) * idm.tensor(tau).tensor(LinMap::identity(f, H.space)) *
                 m.rho.tensor(n.rho);
    Comodule c;
    c.name = m.name + "⊗" + n.name;
    c.H = m.H;
    c.space = VectorSpace::tensor(m.space, n.space);
    c.rho = LinMap(c.space, VectorSpace::tensor(c.space, H.space), rho.m);
    return c;
}

Comodule diag_with_regular(const Comodule& m) {
    Comodule c = tensor_diagonal(m, regular_comodule(m.H));
    c.name = m.name + "⊗H";
    return c;
}

bool is_colinear(const Comodule& src, const Comodule& dst, const LinMap& f) {
    LinMap idh = LinMap::identity(src.field(), src.H->space);
    return dst.rho * f == f.tensor(idh) * src.rho;
}

namespace {

std::vector<LinMap> kernel_as_maps(const Mat& sys, const VectorSpace& dom, const VectorSpace& cod) {
    Mat K = kernel_basis(sys);
    std::vector<LinMap> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Mat col(K.field(), K.rows(), 1);
        for (std::size_t i = 0; i < K.rows(); ++i)
            if (!K.entry_zero(i, c)) col.set(i, 0, K.at(i, c));
        out.emplace_back(dom, cod, unvec(cod.dim, dom.dim, col));
    }
    return out;
}

}  // namespace

std::vector<LinMap> hom_colinear(const Comodule& m, const Comodule& n) {
    require_same_hopf(m, n);
    const Field& f = m.field();
    LinMap idh = LinMap::identity(f, m.H->space);
    const std::size_t mm = m.dim(), nn = n.dim(), d = m.H->space.dim;
    Mat sys = probe_operator(f, nn, mm, nn * d, mm, [&](const Mat& fm) {
        return n.rho.m * fm - Mat::kron(fm, idh.m) * m.rho.m;
    });
    return kernel_as_maps(sys, m.space, n.space);
}

UntwistIso untwist_iso(const Comodule& m) {
    const Field& f = m.field();
    const Hopf& H = *m.H;
    LinMap idm = LinMap::identity(f, m.space);
    LinMap idh = LinMap::identity(f, H.space);
    Comodule diag = diag_with_regular(m);
    Comodule cof = cofree_on(m);
    LinMap fwd = idm.tensor(H.mult) * m.rho.tensor(idh);
    LinMap bwd = idm.tensor(H.mult) * idm.tensor(H.antipode).tensor(idh) * m.rho.tensor(idh);
    UntwistIso u;
    u.forward = ColinearMap{diag, cof, LinMap(diag.space, cof.space, fwd.m)};
    u.backward = ColinearMap{cof, diag, LinMap(cof.space, diag.space, bwd.m)};
    return u;
}

std::vector<Mat> hstar_action(const Comodule& m) {
    const std::size_t d = m.H->space.dim, n = m.dim();
    std::vector<Mat> act;
    act.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        Mat a(m.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar v = m.rho.m.at(i * d + k, j);
                if (!v.is_zero()) a.set(i, j, v);
            }
        act.push_back(std::move(a));
    }
    return act;
}

std::vector<LinMap> hom_hstar_linear(const Comodule& m, const Comodule& n) {
    require_same_hopf(m, n);
    const Field& f = m.field();
    auto am = hstar_action(m);
    auto an = hstar_action(n);
    const std::size_t mm = m.dim(), nn = n.dim(), d = m.H->space.dim;
    Mat sys(f, 0, nn * mm);
    bool first = true;
    for (std::size_t k = 0; k < d; ++k) {
        Mat blk = probe_operator(f, nn, mm, nn, mm, [&](const Mat& fm) { return an[k] * fm - fm * am[k]; });
        sys = first ? blk : Mat::vcat(sys, blk);
        first = false;
    }
    return kernel_as_maps(sys, m.space, n.space);
}

CofreeHomParam::CofreeHomParam(const Comodule& m, const Comodule& n) : m_(m), n_(n) {
    require_same_hopf(m, n);
    const Hopf& H = *m.H;
    const Field& f = m.field();
    const std::size_t d = H.space.dim;
    LinMap t = integral_element(H);
    // beta: H* -> H, x -> x·t = t(1)·x(t(2)); column l is e_l^*·t
    Mat beta(f, d, d);
    for (std::size_t b = 0; b < d; ++b) {
        Scalar tb = t.m.at(b, 0);
        if (tb.is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t l = 0; l < d; ++l) {
                Scalar c = H.comult.m.at(i * d + l, b);
                if (!c.is_zero()) beta.add_at(i, l, tb * c);
            }
    }
    SolveResult inv = solve(beta, Mat::identity(f, d));
    if (!inv.consistent || inv.nullity != 0)
        throw std::runtime_error("CofreeHomParam: integral element does not generate H over H*");
    beta_inv_ = inv.particular;
    act_n_ = hstar_action(n);

    const std::size_t mm = m.dim(), nn = n.dim();
    compose_rho_ = probe_operator(f, nn, mm, nn, mm, [&](const Mat& phi) { return (lift(phi) * m_.rho).m; });
}

LinMap CofreeHomParam::lift(const Mat& phi) const {
    const Hopf& H = *m_.H;
    const Field& f = m_.field();
    const std::size_t d = H.space.dim, mm = m_.dim(), nn = n_.dim();
    if (phi.rows() != nn || phi.cols() != mm) throw std::logic_error("CofreeHomParam::lift: phi shape");
    // g(v_j ⊗ e_k) = sum_l beta_inv[l,k]·(x_l · phi(v_j))
    Mat g(f, nn, mm * d);
    for (std::size_t k = 0; k < d; ++k) {
        Mat actk(f, nn, nn);
        for (std::size_t l = 0; l < d; ++l) {
            Scalar c = beta_inv_.at(l, k);
            if (!c.is_zero()) actk = actk + act_n_[l].scaled(c);
        }
        Mat col = actk * phi;
        for (std::size_t j = 0; j < mm; ++j)
            for (std::size_t i = 0; i < nn; ++i)
                if (!col.entry_zero(i, j)) g.set(i, j * d + k, col.at(i, j));
    }
    return LinMap(VectorSpace::tensor(m_.space, H.space), n_.space, std::move(g));
}

Mat CofreeHomParam::restrict(const LinMap& g) const {
    const Hopf& H = *m_.H;
    LinMap t = integral_element(H);
    LinMap idm = LinMap::identity(m_.field(), m_.space);
    return (g * idm.tensor(t)).m;
}

InjectivityResult is_injective(const Comodule& m) {
    InjectivityResult out;
    const Hopf& H = *m.H;
    const Field& f = m.field();
    Comodule cof = cofree_on(m);

    // Maschke averaging when Λ(1) != 0: r(m⊗h) = m0·Λ(S(m1)h)/Λ(1)
    IntegralData integ = cofrobenius_data(H);
    Scalar lam1 = (integ.lambda * H.unit).m.at(0, 0);
    if (!lam1.is_zero()) {
        LinMap idm = LinMap::identity(f, m.space);
        LinMap idh = LinMap::identity(f, H.space);
        LinMap lam_mul = integ.lambda * H.mult * H.antipode.tensor(idh);  // H⊗H -> k
        LinMap r = idm.tensor(lam_mul) * m.rho.tensor(idh);
        r = r.scaled(lam1.inverse());
        LinMap rr(cof.space, m.space, r.m);
        if ((rr * m.rho).m.is_identity() && is_colinear(cof, m, rr)) {
            out.injective = true;
            out.retraction = rr;
            return out;
        }
    }

    CofreeHomParam par(m, m);
    SolveResult sr = solve(par.compose_rho(), vec_of(Mat::identity(f, m.dim())));
    if (!sr.consistent) return out;
    out.injective = true;
    out.retraction = par.lift(unvec(m.dim(), m.dim(), sr.particular));
    return out;
}

Comodule sub_comodule(const Comodule& m, const LinMap& incl, const std::string& name) {
    const Field& f = m.field();
    LinMap idh = LinMap::identity(f, m.H->space);
    auto sol = factor_through_left(incl.tensor(idh), m.rho * incl);
    if (!sol) throw std::logic_error("sub_comodule: subspace is not a subcomodule");
    Comodule c;
    c.name = name.empty() ? m.name + "|sub" : name;
    c.H = m.H;
    c.space = incl.dom;
    c.rho = LinMap(c.space, VectorSpace::tensor(c.space, m.H->space), sol->h.m);
    auto bad = validate_comodule(c);
    if (!bad.empty()) throw std::logic_error("sub_comodule: restricted coaction invalid: " + bad.front());
    return c;
}

SumComodule direct_sum(const Comodule& a, const Comodule& b) {
    require_same_hopf(a, b);
    const Field& f = a.field();
    const std::size_t d = a.H->space.dim, na = a.dim(), nb = b.dim();
    SumComodule out;
    out.sum.name = a.name + "⊕" + b.name;
    out.sum.H = a.H;
    std::vector<std::string> labels = a.space.labels;
    labels.insert(labels.end(), b.space.labels.begin(), b.space.labels.end());
    out.sum.space = VectorSpace::with_labels(std::move(labels));
    Mat rho(f, (na + nb) * d, na + nb);
    for (std::size_t j = 0; j < na; ++j)
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar v = a.rho.m.at(i * d + k, j);
                if (!v.is_zero()) rho.set(i * d + k, j, v);
            }
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < nb; ++i)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar v = b.rho.m.at(i * d + k, j);
                if (!v.is_zero()) rho.set((na + i) * d + k, na + j, v);
            }
    out.sum.rho = LinMap(out.sum.space, VectorSpace::tensor(out.sum.space, a.H->space), std::move(rho));

    Mat i1(f, na + nb, na), i2(f, na + nb, nb), p1(f, na, na + nb), p2(f, nb, na + nb);
    for (std::size_t i = 0; i < na; ++i) { i1.set_int(i, i, 1); p1.set_int(i, i, 1); }
    for (std::size_t i = 0; i < nb; ++i) { i2.set_int(na + i, i, 1); p2.set_int(i, na + i, 1); }
    out.i1 = LinMap(a.space, out.sum.space, std::move(i1));
    out.i2 = LinMap(b.space, out.sum.space, std::move(i2));
    out.p1 = LinMap(out.sum.space, a.space, std::move(p1));
    out.p2 = LinMap(out.sum.space, b.space, std::move(p2));
    return out;
}

QuotientComodule quotient_comodule(const Comodule& m, const LinMap& j, const std::string& name) {
    const Field& f = m.field();
    QuotientComodule out;
    out.qd = quotient_and_section(j);
    LinMap idh = LinMap::identity(f, m.H->space);
    out.q.name = name.empty() ? m.name + "/im" : name;
    out.q.H = m.H;
    out.q.space = out.qd.quotient;
    LinMap rho_q = out.qd.projection.tensor(idh) * m.rho * out.qd.section;
    out.q.rho = LinMap(out.q.space, VectorSpace::tensor(out.q.space, m.H->space), rho_q.m);
    // independence of the section: projection⊗id ∘ ρ must descend
    if (!(out.qd.projection.tensor(idh) * m.rho == out.q.rho * out.qd.projection))
        throw std::logic_error("quotient_comodule: image of j is not a subcomodule");
    auto bad = validate_comodule(out.q);
    if (!bad.empty()) throw std::logic_error("quotient_comodule: induced coaction invalid");
    return out;
}

}  // namespace cohopf
