#pragma once

#include "cohopf/comodule.hpp"

namespace cohopf {

struct StablyTrivialResult {
    bool trivial = false;
    LinMap witness;  // colinear g: (M⊗H, id⊗Δ) -> N with g∘ρ_M = f
};

/// A colinear map is stably trivial iff it factors through the canonical
/// injective embedding ρ: M -> M⊗H.
StablyTrivialResult stably_trivial(const ColinearMap& f);

struct StableHomSpace {
    std::vector<LinMap> ambient;          // basis of Hom^H(M,N)
    std::vector<LinMap> trivial;          // basis of Hom^H(M,N)_0
    std::size_t quotient_dim = 0;
};

StableHomSpace stable_hom(const Comodule& m, const Comodule& n);

struct StableEquivalenceResult {
    bool equivalence = false;
    LinMap inverse;            // g: N -> M
    LinMap witness_gf, witness_fg;  // factorization witnesses for g∘f - id, f∘g - id
};

StableEquivalenceResult is_stable_equivalence(const ColinearMap& f);

/// ΣM: cokernel of the unit embedding id⊗η: M -> (M⊗H, diagonal); the
/// embedding is colinear and A-linear, and equals ρ after untwisting.
struct Suspension {
    Comodule mh;       // (M⊗H, diagonal)
    Comodule sigma;    // ΣM
    LinMap embed;      // M -> M⊗H, colinear injective
    LinMap project;    // M⊗H -> ΣM, colinear surjective
    QuotientData qd;
};
Suspension suspend(const Comodule& m, const IntegralData& integ);

/// Functorial action on maps: Σf fits Σf ∘ project_X = project_Y ∘ (f⊗id).
LinMap suspend_map(const Suspension& sx, const Suspension& sy, const LinMap& f);

/// Σ^{-1}M: kernel of id⊗Λ': (M⊗H, diagonal) -> M, a colinear surjection by
/// the right-integral identity; section id⊗(x/Λ'(x)).
struct Desuspension {
    Comodule mh;
    Comodule sigma_inv;
    LinMap include;   // Σ^{-1}M -> M⊗H, colinear
    LinMap project;   // M⊗H -> M, colinear surjective (id⊗Λ')
    LinMap section;   // M -> M⊗H with project∘section = id (id⊗x/Λ'(x))
};
Desuspension desuspend(const Comodule& m, const IntegralData& integ);

/// Canonical comparison M -> Σ^{-1}ΣM built from the two exact sequences by
/// lifting project_Σ through id⊗Λ' (echelon-canonical lift).
ColinearMap desusp_susp_comparison(const Comodule& m, const IntegralData& integ);

struct Cylinder {
    Suspension sx;        // suspension data of the source
    Comodule cf;          // C_f
    LinMap inc_y;         // Y -> C_f, colinear; split by `retraction`
    LinMap inc_xh;        // X⊗H -> C_f, colinear
    LinMap proj_sigma;    // C_f -> ΣX, colinear
    LinMap retraction;    // C_f -> Y, k-linear (A-linear upstream): r∘inc_y = id
    QuotientData qd;      // splitting of X -> X⊗H ⊕ Y
};
Cylinder mapping_cylinder(const ColinearMap& f, const IntegralData& integ);

struct Cocylinder {
    Desuspension dy;      // desuspension data of the target
    Comodule pf;          // P_f
    LinMap incl_total;    // P_f -> X ⊕ Y⊗H
    LinMap proj_x;        // P_f -> X, colinear; split by `section`
    LinMap inc_desusp;    // Σ^{-1}Y -> P_f, colinear
    LinMap section;       // X -> P_f, k-linear: proj_x∘section = id
};
Cocylinder mapping_cocylinder(const ColinearMap& f, const IntegralData& integ);

struct Triangle {
    Comodule X, Y, Z, sigmaX;
    LinMap a, b, c;       // X->Y->Z->ΣX
    LinMap attach;        // X⊗H -> Z with attach∘embed = b∘a
    Suspension sx;
};
Triangle triangle_of(const ColinearMap& f, const IntegralData& integ);

struct TriangleReport {
    bool composites_stably_trivial = false;
    bool attach_consistent = false;
    bool cone_comparison_is_equivalence = false;
    bool ok() const { return composites_stably_trivial && attach_consistent && cone_comparison_is_equivalence; }
};
TriangleReport verify_triangle(const Triangle& t, const IntegralData& integ);

}  // namespace cohopf
