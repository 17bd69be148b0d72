#include "cohopf/homology.hpp"

namespace cohopf {

PlainAlgebra plain_of_hopf(const Hopf& h) { return PlainAlgebra{h.k, h.space, h.mult, h.unit}; }

namespace {

HopfPtr point_hopf(const Field& f) {
    Hopf h;
    h.name = "pt";
    h.k = f;
    h.space = VectorSpace::with_labels({"e"});
    VectorSpace line = VectorSpace::line();
    h.mult = LinMap(VectorSpace::tensor(h.space, h.space), h.space, Mat::identity(f, 1));
    h.unit = LinMap(line, h.space, Mat::identity(f, 1));
    h.comult = LinMap(h.space, VectorSpace::tensor(h.space, h.space), Mat::identity(f, 1));
    h.counit = LinMap(h.space, line, Mat::identity(f, 1));
    h.antipode = LinMap(h.space, h.space, Mat::identity(f, 1));
    return std::make_shared<Hopf>(h);
}

// id^{⊗i} ⊗ mult ⊗ id^{⊗(napow-2-i)} on A^{⊗napow}
LinMap face_mult(const PlainAlgebra& a, std::size_t napow, std::size_t i) {
    const Field& f = a.k;
    LinMap acc = i == 0 ? a.mult : LinMap::identity(f, a.space);
    std::size_t consumed = i == 0 ? 2 : 1;
    std::size_t pos = 1;
    while (consumed < napow) {
        if (pos == i) {
            acc = acc.tensor(a.mult);
            consumed += 2;
        } else {
            acc = acc.tensor(LinMap::identity(f, a.space));
            consumed += 1;
        }
        ++pos;
    }
    return acc;
}

}  // namespace

ParaCyclicComodule cyclic_bar(const PlainAlgebra& a, std::size_t N) {
    const Field& f = a.k;
    HopfPtr H = point_hopf(f);
    ParaCyclicComodule X;
    X.H = H;
    X.N = N;
    X.level.resize(N + 1);

    std::vector<VectorSpace> pow;
    pow.push_back(a.space);
    for (std::size_t n = 1; n <= N + 1; ++n) pow.push_back(VectorSpace::tensor(pow.back(), a.space));

    for (std::size_t n = 0; n <= N; ++n) {
        Comodule c = trivial_comodule(H, pow[n].dim, "X" + std::to_string(n));
        c.space = pow[n];
        Mat r = Mat::identity(f, pow[n].dim);
        c.rho = LinMap(c.space, VectorSpace::tensor(c.space, H->space), r);
        X.level[n].space = c;
    }
    for (std::size_t n = 0; n <= N; ++n) {
        const VectorSpace& Xn = X.level[n].space.space;
        // t rotates the last slot to the front; its inverse is t^n
        if (n == 0) {
            X.level[0].t = LinMap::identity(f, Xn);
        } else {
            std::vector<VectorSpace> slots(n + 1, a.space);
            std::vector<std::size_t> perm(n + 1);
            perm[0] = n;
            for (std::size_t j = 1; j <= n; ++j) perm[j] = j - 1;
            X.level[n].t = LinMap(Xn, Xn, slot_permutation(f, slots, perm).m);
        }
        LinMap tinv = LinMap::identity(f, Xn);
        for (std::size_t j = 0; j < n; ++j) tinv = tinv * X.level[n].t;
        X.level[n].tinv = tinv;
        if (n >= 1) {
            for (std::size_t i = 0; i < n; ++i)
                X.level[n].d.push_back(
                    LinMap(Xn, X.level[n - 1].space.space, face_mult(a, n + 1, i).m));
            // wrap-around face: rotate then multiply at the front
            LinMap dn = face_mult(a, n + 1, 0) * X.level[n].t;
            X.level[n].d.push_back(LinMap(Xn, X.level[n - 1].space.space, dn.m));
        }
        if (n + 1 <= N) {
            for (std::size_t i = 0; i <= n; ++i) {
                LinMap acc = LinMap::identity(f, pow[i]).tensor(a.unit);
                if (i + 1 <= n) acc = acc.tensor(LinMap::identity(f, pow[n - i - 1]));
                X.level[n].s.push_back(LinMap(Xn, X.level[n + 1].space.space, acc.m));
            }
        }
    }
    X.tag = CyclicTag::cyclic;
    return X;
}

LinMap hochschild_b_of(const ParaCyclicComodule& X, std::size_t n) {
    LinMap b = X.d(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        b = (i % 2 == 0) ? b + X.d(n, i) : b - X.d(n, i);
    }
    return b;
}

LinMap hochschild_b(const PlainAlgebra& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("hochschild_b: n must be >= 1");
    ParaCyclicComodule X = cyclic_bar(a, n);
    return hochschild_b_of(X, n);
}

LinMap connes_B(const ParaCyclicComodule& X, std::size_t n) {
    if (n + 1 > X.N) throw std::out_of_range("connes_B: degree n+1 outside the built range");
    const Field& f = X.H->k;
    // N = sum λ^i with λ_n = (-1)^n t_n
    LinMap lam_n = (n % 2 == 0) ? X.t(n) : -X.t(n);
    LinMap Nn = LinMap::identity(f, X.level[n].space.space);
    LinMap acc = Nn;
    for (std::size_t i = 1; i <= n; ++i) {
        acc = lam_n * acc;
        Nn = Nn + acc;
    }
    LinMap s_ext = X.t(n + 1) * X.s(n, n);
    LinMap lam_n1 = (n % 2 == 1) ? X.t(n + 1) : -X.t(n + 1);
    LinMap one_minus = LinMap::identity(f, X.level[n + 1].space.space) - lam_n1;
    return one_minus * s_ext * Nn;
}

std::vector<std::string> validate_mixed(const MixedComplex& mc) {
    std::vector<std::string> out;
    const std::size_t top = mc.dims.size() - 1;
    for (std::size_t n = 2; n <= top; ++n)
        if (!(mc.b[n - 1] * mc.b[n]).is_zero()) out.push_back("b^2 != 0 at degree " + std::to_string(n));
    for (std::size_t n = 0; n + 2 <= top; ++n)
        if (!(mc.B[n + 1] * mc.B[n]).is_zero()) out.push_back("B^2 != 0 at degree " + std::to_string(n));
    for (std::size_t n = 1; n + 1 <= top; ++n)
        if (!(mc.b[n + 1] * mc.B[n] + mc.B[n - 1] * mc.b[n]).is_zero())
            out.push_back("bB + Bb != 0 at degree " + std::to_string(n));
    if (top >= 1 && !(mc.b[1] * mc.B[0]).is_zero()) out.push_back("bB != 0 at degree 0");
    return out;
}

MixedComplex mixed_of_cyclic(const ParaCyclicComodule& X) {
    MixedComplex mc;
    mc.k = X.H->k;
    mc.b.resize(X.N + 1);
    mc.B.resize(X.N);
    for (std::size_t n = 0; n <= X.N; ++n) mc.dims.push_back(X.level[n].space.dim());
    for (std::size_t n = 1; n <= X.N; ++n) mc.b[n] = hochschild_b_of(X, n);
    for (std::size_t n = 0; n + 1 <= X.N; ++n) mc.B[n] = connes_B(X, n);
    return mc;
}

namespace {

// total differential D: Tot_n -> Tot_{n-1} with Tot_n = ⊕_{2p<=n} X_{n-2p}
Mat total_differential(const MixedComplex& mc, std::size_t n) {
    const Field& f = mc.k;
    std::vector<std::size_t> src, dst;
    for (std::size_t p = 0; 2 * p <= n; ++p) src.push_back(n - 2 * p);
    for (std::size_t p = 0; 2 * p <= n - 1; ++p) dst.push_back(n - 1 - 2 * p);
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> roff, coff;
    for (auto d : dst) {
        roff.push_back(rows);
        rows += mc.dims[d];
    }
    for (auto s : src) {
        coff.push_back(cols);
        cols += mc.dims[s];
    }
    Mat D(f, rows, cols);
    auto put = [&](std::size_t bi, std::size_t bj, const Mat& blk) {
        for (std::size_t i = 0; i < blk.rows(); ++i)
            for (std::size_t j = 0; j < blk.cols(); ++j)
                if (!blk.entry_zero(i, j)) D.set(roff[bi] + i, coff[bj] + j, blk.at(i, j));
    };
    for (std::size_t p = 0; p < src.size(); ++p) {
        std::size_t m = src[p];
        if (m >= 1) put(p, p, mc.b[m].m);          // vertical: same p
        if (p >= 1) put(p - 1, p, mc.B[m].m);      // horizontal: p-1
    }
    return D;
}

}  // namespace

std::vector<std::size_t> tot_homology(const MixedComplex& mc, std::size_t range) {
    const std::size_t top = mc.dims.size() - 1;
    if (range + 1 > top)
        throw std::out_of_range("tot_homology: range exceeds the built complex (need degree range+1)");
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n <= range; ++n) {
        std::size_t tot_n = 0;
        for (std::size_t p = 0; 2 * p <= n; ++p) tot_n += mc.dims[n - 2 * p];
        std::size_t rank_in = rank_of(total_differential(mc, n + 1));
        std::size_t ker = n == 0 ? tot_n : tot_n - rank_of(total_differential(mc, n));
        out.push_back(ker - rank_in);
    }
    return out;
}

Bicomplex build_bicomplex(const PlainAlgebra& a, std::size_t range) {
    Bicomplex bc;
    bc.k = a.k;
    bc.maxq = range + 1;
    bc.a = a;
    ParaCyclicComodule bar = cyclic_bar(a, bc.maxq + 1);
    for (std::size_t m = 0; m <= bc.maxq; ++m) {
        bc.vertical.push_back(m >= 1 ? hochschild_b_of(bar, m)
                                     : LinMap::zero(a.k, VectorSpace::with_labels({}), bar.level[0].space.space));
        bc.horizontal.push_back(connes_B(bar, m));
    }
    return bc;
}

std::vector<std::string> validate_bicomplex(const Bicomplex& bc) {
    std::vector<std::string> out;
    for (std::size_t m = 2; m <= bc.maxq; ++m)
        if (!(bc.vertical[m - 1] * bc.vertical[m]).is_zero())
            out.push_back("vertical squares: b^2 != 0 at " + std::to_string(m));
    for (std::size_t m = 0; m + 1 < bc.horizontal.size(); ++m)
        if (!(bc.horizontal[m + 1] * bc.horizontal[m]).is_zero())
            out.push_back("horizontal squares: B^2 != 0 at " + std::to_string(m));
    for (std::size_t m = 1; m < bc.maxq; ++m)
        if (!(bc.vertical[m + 1] * bc.horizontal[m] + bc.horizontal[m - 1] * bc.vertical[m]).is_zero())
            out.push_back("squares do not anticommute at " + std::to_string(m));
    return out;
}

std::vector<std::size_t> tot_homology(const Bicomplex& bc, std::size_t range) {
    MixedComplex mc;
    mc.k = bc.k;
    std::size_t da = bc.a.space.dim;
    std::size_t dim = da;
    for (std::size_t m = 0; m <= bc.maxq; ++m) {
        mc.dims.push_back(dim);
        dim *= da;
    }
    mc.b.resize(bc.maxq + 1);
    mc.B.resize(bc.maxq);
    for (std::size_t m = 1; m <= bc.maxq; ++m) mc.b[m] = bc.vertical[m];
    for (std::size_t m = 0; m < bc.maxq; ++m) mc.B[m] = bc.horizontal[m];
    return tot_homology(mc, range);
}

std::vector<std::size_t> hc_of_algebra(const PlainAlgebra& a, std::size_t range) {
    Bicomplex bc = build_bicomplex(a, range);
    auto issues = validate_bicomplex(bc);
    if (!issues.empty()) throw std::logic_error("hc_of_algebra: " + issues.front());
    return tot_homology(bc, range);
}

CyclicHomologyResult cyclic_from_cyclic_module(const ParaCyclicComodule& X) {
    CyclicHomologyResult out;
    out.mixed = mixed_of_cyclic(X);
    out.issues = validate_mixed(out.mixed);
    if (!out.issues.empty()) return out;
    if (X.N == 0) return out;
    out.hc = tot_homology(out.mixed, X.N - 1);
    out.reliable_max = X.N >= 2 ? X.N - 2 : 0;
    return out;
}

}  // namespace cohopf
