#pragma once

#include "testutil.hpp"

#include "cohopf/hopf_cyclic.hpp"

namespace fixtures {

using namespace cohopf;
using namespace testutil;

inline AlgebraPtr alg_of(HopfPtr H) { return std::make_shared<ComoduleAlgebra>(algebra_from_hopf(H)); }

inline BialgebraInComod bialg_of(HopfPtr H) {
    return BialgebraInComod{alg_of(H), H->comult, H->counit, H->antipode};
}

inline HopfPtr triv_hopf(const Field& f) {
    Hopf h;
    h.name = "TRIV";
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

/// Sweedler's algebra graded by x-degree as a comodule algebra over kC2,
/// with a two-dimensional stable module/comodule whose A-coaction has
/// noncommuting legs {g, x}.
struct GradedPair {
    HopfPtr H;
    AlgebraPtr A;
    StableModComod M;
};

inline GradedPair sweedler_graded_pair() {
    GradedPair out;
    out.H = qc2();
    const Field& f = out.H->k;
    Hopf sw = make_sweedler(f);

    ComoduleAlgebra a;
    a.under.name = "SW4";
    a.under.H = out.H;
    a.under.space = sw.space;
    // x-degree grading: |1| = |g| = 0, |x| = |gx| = 1
    Mat rho(f, 4 * 2, 4);
    rho.set_int(0 * 2 + 0, 0, 1);
    rho.set_int(1 * 2 + 0, 1, 1);
    rho.set_int(2 * 2 + 1, 2, 1);
    rho.set_int(3 * 2 + 1, 3, 1);
    a.under.rho = LinMap(a.under.space, VectorSpace::tensor(a.under.space, out.H->space), rho);
    a.mult = sw.mult;
    a.unit = sw.unit;
    out.A = std::make_shared<ComoduleAlgebra>(a);

    StableModComod m;
    m.A = out.A;
    m.under.name = "M2";
    m.under.H = out.H;
    m.under.space = VectorSpace::with_labels({"u", "v"});
    Mat mrho(f, 2 * 2, 2);
    mrho.set_int(0 * 2 + 0, 0, 1);  // u has degree 0
    mrho.set_int(1 * 2 + 1, 1, 1);  // v has degree 1
    m.under.rho = LinMap(m.under.space, VectorSpace::tensor(m.under.space, out.H->space), mrho);

    // action: g·u = u, g·v = -v, x·u = 2v, x·v = 0, gx·u = -2v, gx·v = 0
    Mat act(f, 2, 4 * 2);
    act.set_int(0, 0 * 2 + 0, 1);   // 1·u = u
    act.set_int(1, 0 * 2 + 1, 1);   // 1·v = v
    act.set_int(0, 1 * 2 + 0, 1);   // g·u = u
    act.set_int(1, 1 * 2 + 1, -1);  // g·v = -v
    act.set_int(1, 2 * 2 + 0, 2);   // x·u = 2v
    act.set_int(1, 3 * 2 + 0, -2);  // gx·u = -2v
    m.action = LinMap(VectorSpace::tensor(a.under.space, m.under.space), m.under.space, act);

    // A-coaction: u -> 1⊗u, v -> g⊗v + x⊗u
    Mat aco(f, 4 * 2, 2);
    aco.set_int(0 * 2 + 0, 0, 1);  // 1⊗u
    aco.set_int(1 * 2 + 1, 1, 1);  // g⊗v
    aco.set_int(2 * 2 + 0, 1, 1);  // x⊗u
    m.acoaction = LinMap(m.under.space, VectorSpace::tensor(a.under.space, m.under.space), aco);
    out.M = m;
    return out;
}

/// The function algebra on C2 over F2 as coefficients over itself, with the
/// trivial A-coaction (a stable pair giving the classical cyclic structure).
struct FnPair {
    HopfPtr H;
    AlgebraPtr A;
    BialgebraInComod B;
    StableModComod M;
};

inline FnPair f2c2d_pair() {
    FnPair out;
    out.H = f2c2_dual();
    out.A = alg_of(out.H);
    out.B = BialgebraInComod{out.A, out.H->comult, out.H->counit, out.H->antipode};
    out.M = algebra_coefficients(out.A);
    return out;
}

/// Corruption of the above: A-coaction replaced by the comultiplication,
/// which is not stable (mult∘Δ != id on the function algebra).
inline FnPair f2c2d_nonstable() {
    FnPair out = f2c2d_pair();
    out.M.acoaction = LinMap(out.M.under.space,
                             VectorSpace::tensor(out.A->under.space, out.M.under.space), out.H->comult.m);
    return out;
}

/// Small pseudo-para-cyclic module over F2 whose t is a nontrivial unipotent:
/// A = F2C2 with trivial H-coaction, M = k with the trivial character and
/// A-coaction 1 -> g⊗1 (stable, since the character kills the twist).
struct UnipotentFixture {
    HopfPtr H;
    AlgebraPtr A;
    StableModComod M;
};

inline UnipotentFixture unipotent_fixture() {
    UnipotentFixture out;
    const Field f2 = Field::prime(2);
    out.H = triv_hopf(f2);

    ComoduleAlgebra a;
    a.under = trivial_comodule(out.H, 2, "A");
    a.under.name = "F2C2t";
    Hopf grp = make_group_algebra(f2, 2, "F2C2");
    a.mult = LinMap(VectorSpace::tensor(a.under.space, a.under.space), a.under.space, grp.mult.m);
    a.unit = LinMap(VectorSpace::line(), a.under.space, grp.unit.m);
    out.A = std::make_shared<ComoduleAlgebra>(a);

    StableModComod m;
    m.A = out.A;
    m.under = trivial_comodule(out.H, 1, "k");
    Mat act(f2, 1, 2);
    act.set_int(0, 0, 1);
    act.set_int(0, 1, 1);  // trivial character
    m.action = LinMap(VectorSpace::tensor(a.under.space, m.under.space), m.under.space, act);
    Mat aco(f2, 2, 1);
    aco.set_int(1, 0, 1);  // 1 -> g⊗1
    m.acoaction = LinMap(m.under.space, VectorSpace::tensor(a.under.space, m.under.space), aco);
    out.M = m;
    return out;
}

}  // namespace fixtures
