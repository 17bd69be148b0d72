#pragma once

#include "cohopf/hopf.hpp"

namespace cohopf {

/// Finite-dimensional right H-comodule. Tensor index convention on M⊗H is
/// the same lexicographic one used for H⊗H: (i,k) -> i*dimH + k.
struct Comodule {
    std::string name;
    HopfPtr H;
    VectorSpace space;
    LinMap rho;  // M -> M⊗H

    const Field& field() const { return H->k; }
    std::size_t dim() const { return space.dim; }
};

struct ColinearMap {
    Comodule src, dst;
    LinMap f;
};

std::vector<std::string> validate_comodule(const Comodule& c);
bool same_hopf(const Comodule& a, const Comodule& b);
void require_same_hopf(const Comodule& a, const Comodule& b);

Comodule trivial_comodule(HopfPtr H, std::size_t dim = 1, const std::string& name = "k");
Comodule regular_comodule(HopfPtr H);                       // H with ρ = Δ
Comodule cofree_on(const Comodule& m);                      // (V⊗H, id⊗Δ), V the underlying space
Comodule diag_with_regular(const Comodule& m);              // (M⊗H, diagonal)
Comodule tensor_diagonal(const Comodule& m, const Comodule& n);

bool is_colinear(const Comodule& src, const Comodule& dst, const LinMap& f);

/// Basis of Hom^H(M, N).
std::vector<LinMap> hom_colinear(const Comodule& m, const Comodule& n);

struct UntwistIso {
    ColinearMap forward;   // (M⊗H, diag) -> (V⊗H, id⊗Δ): m⊗h -> m0 ⊗ m1·h
    ColinearMap backward;  // inverse: m⊗h -> m0 ⊗ S(m1)·h
};
UntwistIso untwist_iso(const Comodule& m);

/// Left H*-module structure induced by the coaction: x·m = (id⊗x)ρ(m).
/// One matrix per dual basis vector of H.
std::vector<Mat> hstar_action(const Comodule& m);

/// H*-linear maps M->N for the induced actions, computed directly.
std::vector<LinMap> hom_hstar_linear(const Comodule& m, const Comodule& n);

/// Parameterization of colinear maps out of the cofree comodule on M's
/// underlying space: every g in Hom^H((M⊗H, id⊗Δ), N) is lift(phi) for a
/// unique phi: V_M -> N, via the free generator t (integral element of H).
class CofreeHomParam {
public:
    CofreeHomParam(const Comodule& m, const Comodule& n);

    /// The colinear map cofree(M) -> N determined by phi (dimN x dimM).
    LinMap lift(const Mat& phi) const;
    /// Matrix of phi |-> lift(phi)∘ρ_M : Hom_k(V,N) -> Hom_k(M,N), vec coords.
    const Mat& compose_rho() const { return compose_rho_; }
    /// Recovers phi from a colinear g: phi = g∘(id⊗t).
    Mat restrict(const LinMap& g) const;

private:
    Comodule m_, n_;
    Mat beta_inv_;               // H -> H* change of coordinates
    std::vector<Mat> act_n_;     // H*-action on N
    Mat compose_rho_;
};

struct InjectivityResult {
    bool injective = false;
    LinMap retraction;  // colinear r: (M⊗H, id⊗Δ) -> M with r∘ρ = id, when injective
};

/// M is injective iff the canonical embedding ρ: M -> (M⊗H, id⊗Δ) admits a
/// colinear retraction. Uses the Maschke averaging retraction when Λ(1) != 0,
/// the cofree-hom solve otherwise.
InjectivityResult is_injective(const Comodule& m);

/// Restriction of a coaction to a subspace (columns of incl must span a
/// subcomodule; throws otherwise).
Comodule sub_comodule(const Comodule& m, const LinMap& incl, const std::string& name = "");

struct SumComodule {
    Comodule sum;
    LinMap i1, i2;  // inclusions
    LinMap p1, p2;  // projections
};
SumComodule direct_sum(const Comodule& a, const Comodule& b);

struct QuotientComodule {
    Comodule q;
    QuotientData qd;  // projection/section/retraction on underlying spaces
};

/// Quotient of m by the image of a colinear injection j: U -> M.
QuotientComodule quotient_comodule(const Comodule& m, const LinMap& j, const std::string& name = "");

}  // namespace cohopf
