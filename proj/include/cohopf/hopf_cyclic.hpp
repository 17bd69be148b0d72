#pragma once

#include "cohopf/amod.hpp"
#include "cohopf/cyclic_cat.hpp"

namespace cohopf {

/// Stable module/comodule over A: left action and left coaction composing to
/// the identity, both H-colinear.
struct StableModComod {
    AlgebraPtr A;
    Comodule under;    // right H-comodule M
    LinMap action;     // A⊗M -> M
    LinMap acoaction;  // M -> A⊗M, Sweedler output m^{(-1)} ⊗ m^{(0)}

    const Field& field() const { return under.field(); }
    std::size_t dim() const { return under.dim(); }
};

/// The T-operators consume the A-coaction but never the action, so the
/// action's colinearity can be waived (the counit action on k is not
/// colinear over a noncommutative-coaction A, yet the pair is usable).
std::vector<std::string> validate_stable_mod_comod(const StableModComod& m, bool require_stability = true,
                                                   bool require_action_colinear = true);

/// k with the trivial A-action (through the counit) and trivial A-coaction.
StableModComod trivial_coefficients(const BialgebraInComod& b);
/// A itself with action = mult and the trivial A-coaction.
StableModComod algebra_coefficients(AlgebraPtr a);

/// T_n(A,M) = A^{⊗(n+1)}⊗M with the diagonal H-coaction and the face,
/// degeneracy and cyclic operators twisted by the A-coaction of M.
ParaCyclicComodule build_T(AlgebraPtr a, const StableModComod& m, std::size_t N);

struct PseudoParaReport {
    std::vector<IdentityCheck> required;  // hold for every valid input
    std::vector<IdentityCheck> boundary;  // d_n t_n, s_0 t_n, t^{n+1}: may fail
    bool required_hold = false;
    bool boundary_all_hold = false;
    bool operators_colinear = false;
};
PseudoParaReport verify_pseudo_para_cyclic(const ParaCyclicComodule& T);

struct UpgradeResult {
    bool ok = false;
    bool stability_ok = false;
    bool antipode_ok = false;
    std::vector<IdentityCheck> failures;  // t tinv / t^{n+1} defects found
    ParaCyclicComodule T;                 // tagged cyclic with tinv when ok
};

/// Builds t^{-1} from the antipode of A and certifies t∘t^{-1} = id and
/// t^{n+1} = id exactly; refuses the upgrade otherwise.
UpgradeResult cyclic_structure(const ParaCyclicComodule& T, const BialgebraInComod& A, const StableModComod& m);

struct Coapprox {
    ParaCyclicComodule Q;           // largest operator-closed cyclic subcomodule
    std::vector<LinMap> inclusion;  // Q_n -> T_n
    std::vector<std::size_t> q_dims;
    std::vector<LinMap> universal;  // T_n -> Qhat_n, the largest cyclic quotient
    std::vector<std::size_t> qhat_dims;
    std::size_t sweeps = 0;
    bool top_provisional = true;    // s-closure is not imposed at the top degree
};

Coapprox coapproximation(const ParaCyclicComodule& T);

struct CharMapResult {
    Coapprox Qk, QA;
    std::vector<LinMap> chi_T;      // T_n(A,k) -> T_n(A,A), induced by the unit
    std::vector<LinMap> chi;        // restricted to the coapproximations
    bool image_in_QA = false;
    bool commutes = false;
    bool colinear = false;
    std::vector<std::size_t> coinv_dims;
    bool coinv_commutes = false;
};

/// Q^A(A,k) -> Q^A(A,A) induced by the unit map, with the operator
/// commutation certificates and the H-coinvariant restriction.
CharMapResult characteristic_map(const BialgebraInComod& A, std::size_t N);

struct VanishReport {
    bool applicable = false;
    std::vector<std::string> issues;
    std::vector<bool> injective;
    std::vector<std::size_t> stable_quotient;
    bool verdict = false;
};

/// For M carrying a compatible H-action (Hopf module over H): every T_n must
/// be an injective comodule with vanishing stable endomorphism quotient.
VanishReport hopf_module_vanishing_check(AlgebraPtr a, const StableModComod& m, const LinMap& h_action,
                                         std::size_t N);

}  // namespace cohopf
