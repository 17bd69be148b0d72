#pragma once

#include <random>

#include "cohopf/comodule.hpp"

namespace testutil {

using namespace cohopf;

/// Group algebra kC_n: basis g^0..g^{n-1}, all group-like.
inline Hopf make_group_algebra(const Field& f, std::size_t n, const std::string& name) {
    Hopf h;
    h.name = name;
    h.k = f;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
    h.space = VectorSpace::with_labels(std::move(labels));
    VectorSpace hh = VectorSpace::tensor(h.space, h.space);
    VectorSpace line = VectorSpace::line();
    Mat mult(f, n, n * n), unit(f, n, 1), comult(f, n * n, n), counit(f, 1, n), ant(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mult.set_int((i + j) % n, i * n + j, 1);
        comult.set_int(i * n + i, i, 1);
        counit.set_int(0, i, 1);
        ant.set_int((n - i) % n, i, 1);
    }
    unit.set_int(0, 0, 1);
    h.mult = LinMap(hh, h.space, mult);
    h.unit = LinMap(line, h.space, unit);
    h.comult = LinMap(h.space, hh, comult);
    h.counit = LinMap(h.space, line, counit);
    h.antipode = LinMap(h.space, h.space, ant);
    return h;
}

inline HopfPtr qc2() { return std::make_shared<Hopf>(make_group_algebra(Field::rational(), 2, "QC2")); }
inline HopfPtr qc3() { return std::make_shared<Hopf>(make_group_algebra(Field::rational(), 3, "QC3")); }
inline HopfPtr f2c2() { return std::make_shared<Hopf>(make_group_algebra(Field::prime(2), 2, "F2C2")); }

/// The Hopf algebra whose comodules are F2C2-modules: the dual of the group
/// algebra (function algebra on C2).
inline HopfPtr f2c2_dual() {
    Hopf d = dual_hopf(make_group_algebra(Field::prime(2), 2, "F2C2"));
    d.name = "F2C2d";
    return std::make_shared<Hopf>(d);
}

inline HopfPtr qc2_dual() {
    Hopf d = dual_hopf(make_group_algebra(Field::rational(), 2, "QC2"));
    d.name = "QC2d";
    return std::make_shared<Hopf>(d);
}

/// Sweedler's 4-dimensional Hopf algebra, basis {1, g, x, gx}.
inline Hopf make_sweedler(const Field& f) {
    Hopf h;
    h.name = "SW4";
    h.k = f;
    h.space = VectorSpace::with_labels({"1", "g", "x", "gx"});
    VectorSpace hh = VectorSpace::tensor(h.space, h.space);
    VectorSpace line = VectorSpace::line();
    Mat mult(f, 4, 16), unit(f, 4, 1), comult(f, 16, 4), counit(f, 1, 4), ant(f, 4, 4);
    // products: rows indexed by target, cols by (a,b)
    auto set_prod = [&](std::size_t a, std::size_t b, std::size_t target, long c) {
        mult.set_int(target, a * 4 + b, c);
    };
    for (std::size_t y = 0; y < 4; ++y) { set_prod(0, y, y, 1); if (y != 0) set_prod(y, 0, y, 1); }
    set_prod(1, 1, 0, 1);   // g*g = 1
    set_prod(1, 2, 3, 1);   // g*x = gx
    set_prod(1, 3, 2, 1);   // g*gx = x
    set_prod(2, 1, 3, -1);  // x*g = -gx
    set_prod(3, 1, 2, -1);  // gx*g = -x
    // x*x = x*gx = gx*x = gx*gx = 0
    unit.set_int(0, 0, 1);
    auto set_co = [&](std::size_t src, std::size_t a, std::size_t b, long c) { comult.set_int(a * 4 + b, src, c); };
    set_co(0, 0, 0, 1);
    set_co(1, 1, 1, 1);
    set_co(2, 2, 0, 1);  // Δx = x⊗1 + g⊗x
    set_co(2, 1, 2, 1);
    set_co(3, 3, 1, 1);  // Δgx = gx⊗g + 1⊗gx
    set_co(3, 0, 3, 1);
    counit.set_int(0, 0, 1);
    counit.set_int(0, 1, 1);
    ant.set_int(0, 0, 1);
    ant.set_int(1, 1, 1);
    ant.set_int(3, 2, -1);  // S(x) = -gx
    ant.set_int(2, 3, 1);   // S(gx) = x
    h.mult = LinMap(hh, h.space, mult);
    h.unit = LinMap(line, h.space, unit);
    h.comult = LinMap(h.space, hh, comult);
    h.counit = LinMap(h.space, line, counit);
    h.antipode = LinMap(h.space, h.space, ant);
    return h;
}

inline HopfPtr sweedler() { return std::make_shared<Hopf>(make_sweedler(Field::rational())); }

/// One-dimensional comodule on a group-like basis vector g^i.
inline Comodule group_like_line(HopfPtr H, std::size_t i, const std::string& name) {
    Comodule c;
    c.name = name;
    c.H = H;
    c.space = VectorSpace::with_labels({name});
    Mat r(H->k, H->space.dim, 1);
    r.set_int(i, 0, 1);
    c.rho = LinMap(c.space, VectorSpace::tensor(c.space, H->space), r);
    return c;
}

inline Mat random_invertible(const Field& f, std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> dist(-2, 2);
    while (true) {
        Mat p(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p.set_int(i, j, dist(rng));
        if (rank_of(p) == n) return p;
    }
}

/// Random valid comodule: a direct sum of bundled pieces conjugated by a
/// random change of basis (stays a valid comodule by construction).
inline Comodule random_comodule(HopfPtr H, std::size_t max_dim, std::mt19937& rng) {
    std::vector<Comodule> pieces;
    pieces.push_back(trivial_comodule(H));
    pieces.push_back(regular_comodule(H));
    // direct sum until dim budget is reached
    std::size_t dim = 0;
    const Field& f = H->k;
    std::vector<Comodule> chosen;
    while (true) {
        const Comodule& p = pieces[rng() % pieces.size()];
        if (dim + p.dim() > max_dim) break;
        chosen.push_back(p);
        dim += p.dim();
        if (dim == max_dim || (rng() % 3 == 0 && dim > 0)) break;
    }
    if (chosen.empty()) chosen.push_back(trivial_comodule(H));
    dim = 0;
    for (auto& c : chosen) dim += c.dim();
    const std::size_t d = H->space.dim;
    Mat rho(f, dim * d, dim);
    std::size_t off = 0;
    for (auto& c : chosen) {
        for (std::size_t j = 0; j < c.dim(); ++j)
            for (std::size_t i = 0; i < c.dim(); ++i)
                for (std::size_t k = 0; k < d; ++k) {
                    Scalar v = c.rho.m.at(i * d + k, j);
                    if (!v.is_zero()) rho.set((off + i) * d + k, off + j, v);
                }
        off += c.dim();
    }
    Mat P = random_invertible(f, dim, rng);
    Mat Pinv = solve(P, Mat::identity(f, dim)).particular;
    Mat conj = Mat::kron(Pinv, Mat::identity(f, d)) * rho * P;
    Comodule out;
    out.name = "rand";
    out.H = H;
    out.space = VectorSpace::make(dim, "v");
    out.rho = LinMap(out.space, VectorSpace::tensor(out.space, H->space), conj);
    return out;
}

inline LinMap random_colinear(const Comodule& m, const Comodule& n, std::mt19937& rng) {
    auto basis = hom_colinear(m, n);
    LinMap f = LinMap::zero(m.field(), n.space, m.space);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (auto& b : basis) f = f + b.scaled(Scalar::from_int(m.field(), dist(rng)));
    return f;
}

}  // namespace testutil
