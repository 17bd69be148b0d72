#pragma once

#include <optional>

#include "cohopf/comodule.hpp"

namespace cohopf {

enum class CyclicTag { pseudo_para, para, cyclic };

struct CyclicLevel {
    Comodule space;
    std::vector<LinMap> d;  // d_i: X_n -> X_{n-1}, 0 <= i <= n
    std::vector<LinMap> s;  // s_i: X_n -> X_{n+1}, 0 <= i <= n (absent at the top degree)
    LinMap t;               // t_n: X_n -> X_n
    std::optional<LinMap> tinv;
};

/// Graded family of comodules with simplicial/cyclic operator matrices,
/// built up to a degree bound N.
struct ParaCyclicComodule {
    HopfPtr H;
    std::size_t N = 0;
    std::vector<CyclicLevel> level;  // level[n], 0 <= n <= N
    CyclicTag tag = CyclicTag::pseudo_para;
    bool top_provisional = false;

    const LinMap& d(std::size_t n, std::size_t i) const;
    const LinMap& s(std::size_t n, std::size_t i) const;
    const LinMap& t(std::size_t n) const;
    const LinMap& tinv(std::size_t n) const;
};

// ---- morphism-word calculus -------------------------------------------

enum class CatTag { delta, lambda_plus, lambda_nat, lambda_infty, lambda };

struct Gen {
    enum Kind { d, s, t, tinv } kind;
    int i = 0;    // face/degeneracy index (unused for t)
    int deg = 0;  // degree of the module level the operator acts on
};

/// Operator-side word: tokens left-to-right compose right-to-left, i.e. the
/// rightmost generator is applied first. `d1@3` is the operator X_3 -> X_2.
struct MorphismWord {
    CatTag tag = CatTag::lambda;
    int src_degree = 0;  // degree the composite starts at
    int dst_degree = 0;
    std::vector<Gen> gens;
};

/// Canonical epi-mono-cyclic factorization, stored with the categorical
/// index conventions: faces strictly decreasing, degeneracies strictly
/// increasing, cyclic power at the target degree.
struct NormalForm {
    CatTag tag = CatTag::lambda;
    int src = 0, dst = 0;
    std::optional<long> t_power;  // absent for delta and lambda_plus
    std::vector<int> faces;
    std::vector<int> degens;

    bool operator==(const NormalForm& o) const {
        return tag == o.tag && src == o.src && dst == o.dst && t_power == o.t_power && faces == o.faces &&
               degens == o.degens;
    }
};

MorphismWord parse_word(std::string_view text, CatTag tag);
std::string word_str(const MorphismWord& w);
std::string normal_form_str(const NormalForm& nf);

/// Rewrites to the canonical form using the category's relations; counts the
/// individual relation applications in *steps when supplied.
NormalForm normalize(const MorphismWord& w, std::size_t* steps = nullptr);

MorphismWord word_of(const NormalForm& nf);

/// Concatenation w1∘w2 (degree-checked).
MorphismWord compose(const MorphismWord& w1, const MorphismWord& w2);

LinMap evaluate(const MorphismWord& w, const ParaCyclicComodule& X);
LinMap evaluate(const NormalForm& nf, const ParaCyclicComodule& X);

// ---- operator identity checks ------------------------------------------

struct IdentityCheck {
    std::string name;
    std::size_t degree = 0;
    bool holds = false;
};

std::vector<IdentityCheck> check_simplicial_identities(const ParaCyclicComodule& X);
/// The para-cyclic t-relations including both boundary cases.
std::vector<IdentityCheck> check_paracyclic_identities(const ParaCyclicComodule& X);
/// t_n^{n+1} = id and t∘t^{-1} = id when an inverse is present.
std::vector<IdentityCheck> check_cyclic_identities(const ParaCyclicComodule& X);

struct FromT {
    bool ok = false;
    ParaCyclicComodule X;
    std::vector<IdentityCheck> failures;
};

/// Generates d_i = t^i∘d_0∘t^{-i} and s_i = t^i∘s_0∘t^{-i} from degreewise
/// (d_0, s_0, invertible t) data and verifies the full para-cyclic relations.
FromT paracyclic_from_t(HopfPtr H, const std::vector<Comodule>& spaces, const std::vector<LinMap>& d0,
                        const std::vector<LinMap>& s0, const std::vector<LinMap>& t);

}  // namespace cohopf
