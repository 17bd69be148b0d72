#pragma once

#include <optional>

#include "cohopf/stable.hpp"

namespace cohopf {

/// Monoid object in the category of right H-comodules.
struct ComoduleAlgebra {
    Comodule under;  // A with its H-coaction
    LinMap mult;     // A⊗A -> A
    LinMap unit;     // k -> A

    const Field& field() const { return under.field(); }
    std::size_t dim() const { return under.dim(); }
};

using AlgebraPtr = std::shared_ptr<const ComoduleAlgebra>;

std::vector<std::string> validate_comodule_algebra(const ComoduleAlgebra& a);

/// A Hopf algebra is a comodule algebra over itself via Δ.
ComoduleAlgebra algebra_from_hopf(HopfPtr H);
/// The base field as a trivial comodule algebra.
ComoduleAlgebra trivial_algebra(HopfPtr H);

/// Left A-module object in comodules ("H-coequivariant A-module").
struct AModObject {
    AlgebraPtr A;
    Comodule under;
    LinMap action;  // A⊗M -> M

    const Field& field() const { return under.field(); }
    std::size_t dim() const { return under.dim(); }
};

std::vector<std::string> validate_amodule(const AModObject& m);

struct AModMap {
    AModObject src, dst;
    LinMap f;
};
bool is_amod_map(const AModMap& f);  // A-linear and H-colinear

AModObject regular_amodule(AlgebraPtr a);
/// A⊗V with action on the left factor and the diagonal coaction.
AModObject free_amodule(AlgebraPtr a, const Comodule& v);

/// Hom_A(M,N) with the H*-action (xf)(m) = x(f(m0)_1 · S(m1)) · f(m0)_0.
/// The action is assembled on all of Hom_k(M,N) (the contragredient comodule
/// structure); whether it preserves the subspace Hom_A is reported.
struct HStarActionOnHomA {
    std::vector<LinMap> homA;        // basis of Hom_A(M,N)
    std::vector<Mat> action_full;    // action on Hom_k coordinates, per dual basis vector
    bool closed = false;             // H*-action preserves Hom_A
    std::vector<Mat> action;         // coordinate matrices on homA, when closed
    bool module_law = false;         // act(x)act(y) = act(x·y)
    bool counit_identity = false;    // ε acts as the identity
    std::vector<LinMap> invariants;  // {f in Hom_A : x·f = x(1)·f}
    std::vector<LinMap> homAH;       // A-linear and colinear maps, directly
    bool invariants_match = false;   // equal subspaces
};
HStarActionOnHomA homA_with_action(const AModObject& m, const AModObject& n);

/// Basis of Hom_A^H(M,N), the A-linear colinear maps.
std::vector<LinMap> hom_amod_colinear(const AModObject& m, const AModObject& n);

/// Colinear unital map H -> A, when one exists.
std::optional<LinMap> total_integral(const ComoduleAlgebra& a);

struct AmodSuspension {
    AModObject mh;     // (M⊗H, diagonal) with the action on the M factor
    AModObject sigma;  // ΣM as an A-module object
    Suspension sus;    // the underlying comodule-level data
};
AmodSuspension suspend_amod(const AModObject& m, const IntegralData& integ);

struct AmodCylinder {
    AModObject xh;
    AModObject cf;
    Suspension sus;       // suspension data of the source
    QuotientData qd;
    LinMap inc_y, inc_xh, proj_sigma;
    LinMap retraction;    // A-linear retraction of inc_y
};
AmodCylinder mapping_cylinder_amod(const AModMap& f, const IntegralData& integ);

struct BarStage {
    std::size_t n = 0;
    AModObject C;
    std::vector<std::size_t> filtration_dims;   // dims of F^0 ⊂ ... ⊂ F^{n+1} = C_n
    std::vector<std::size_t> subquotient_dims;  // successive quotients, bottom first
    LinMap inc_prev;        // C_{n-1} -> C_n (A-linear, colinear)
    LinMap retr_prev;       // C_n -> C_{n-1} (A-linear), retr∘inc = id
    bool dbar_square_zero = false;  // δ̄_n ∘ Σ^n(δ_{n+1}) = 0
    bool injective = false;
    bool action_valid = false;
};

/// Truncated bar-resolution cofibrant replacement stages C_0..C_{n_max} for
/// M = A. Each stage is the A-equivariant mapping cylinder of δ̄_n.
std::vector<BarStage> bar_stages(AlgebraPtr a, std::size_t n_max, const IntegralData& integ);

/// Bialgebra object in comodules (comultiplication colinear for the diagonal).
struct BialgebraInComod {
    AlgebraPtr alg;
    LinMap comult;  // A -> A⊗A
    LinMap counit;  // A -> k
    std::optional<LinMap> antipode;
};
std::vector<std::string> validate_bialgebra_in_comod(const BialgebraInComod& b);

struct FundamentalResult {
    bool hopf_module_ok = false;
    Comodule coinv;      // M^{coA}
    LinMap incl;         // M^{coA} -> M
    LinMap comparison;   // A⊗M^{coA} -> M, a⊗m -> a·m
    bool isomorphism = false;
};

/// Coinvariants M^{coA} = {m : ρ_A(m) = 1⊗m} and the fundamental-theorem
/// comparison for a Hopf module (A-action plus left A-coaction).
FundamentalResult coinvariants_and_fundamental(const AModObject& m, const LinMap& acoaction,
                                               const BialgebraInComod& b);

}  // namespace cohopf
