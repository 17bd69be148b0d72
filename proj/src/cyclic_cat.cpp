#include "cohopf/cyclic_cat.hpp"

#include <algorithm>
#include <sstream>

namespace cohopf {

const LinMap& ParaCyclicComodule::d(std::size_t n, std::size_t i) const {
    if (n > N || n == 0 || i >= level[n].d.size()) throw std::out_of_range("ParaCyclicComodule::d");
    return level[n].d[i];
}
const LinMap& ParaCyclicComodule::s(std::size_t n, std::size_t i) const {
    if (n > N || i >= level[n].s.size()) throw std::out_of_range("ParaCyclicComodule::s");
    return level[n].s[i];
}
const LinMap& ParaCyclicComodule::t(std::size_t n) const {
    if (n > N) throw std::out_of_range("ParaCyclicComodule::t");
    return level[n].t;
}
const LinMap& ParaCyclicComodule::tinv(std::size_t n) const {
    if (n > N || !level[n].tinv) throw std::out_of_range("ParaCyclicComodule::tinv");
    return *level[n].tinv;
}

namespace {

bool tag_has_t(CatTag tag) { return tag == CatTag::lambda_nat || tag == CatTag::lambda_infty || tag == CatTag::lambda; }
bool tag_has_tinv(CatTag tag) { return tag == CatTag::lambda_infty || tag == CatTag::lambda; }

void check_gen(CatTag tag, const Gen& g) {
    if (g.deg < 0) throw std::invalid_argument("malformed word: negative degree");
    switch (g.kind) {
        case Gen::d:
            if (g.deg < 1 || g.i < 0 || g.i > g.deg) throw std::invalid_argument("malformed word: face index range");
            // Λ₊ leaves out the last face at each degree
            if (tag == CatTag::lambda_plus && g.i == g.deg)
                throw std::invalid_argument("malformed word: last face is not in lambda_plus");
            break;
        case Gen::s:
            if (g.i < 0 || g.i > g.deg) throw std::invalid_argument("malformed word: degeneracy index range");
            break;
        case Gen::t:
            if (!tag_has_t(tag)) throw std::invalid_argument("malformed word: t not allowed in this category");
            break;
        case Gen::tinv:
            if (!tag_has_tinv(tag)) throw std::invalid_argument("malformed word: t^{-1} not allowed in this category");
            break;
    }
}

int gen_out_degree(const Gen& g) {
    switch (g.kind) {
        case Gen::d: return g.deg - 1;
        case Gen::s: return g.deg + 1;
        default: return g.deg;
    }
}

// fold state: categorical composite  faces ∘ degens ∘ τ^k  with domain cat_dom
struct FoldState {
    CatTag tag;
    int cat_dom = 0;
    long k = 0;
    std::vector<int> faces;   // strictly decreasing
    std::vector<int> degens;  // strictly increasing
    std::size_t steps = 0;

    void reduce_lambda() {
        if (tag == CatTag::lambda) {
            long m = cat_dom + 1;
            k = ((k % m) + m) % m;
        }
    }

    void merge_face(int a) {
        // pass the δ through the σ-block, right to left
        for (std::size_t idx = degens.size(); idx-- > 0;) {
            int j = degens[idx];
            ++steps;
            if (a == j || a == j + 1) {  // σ_j∘δ_a = id
                degens.erase(degens.begin() + static_cast<long>(idx));
                return;
            }
            if (a < j) {
                degens[idx] = j - 1;  // σ_j∘δ_a = δ_a∘σ_{j-1}
            } else {
                a -= 1;  // σ_j∘δ_a = δ_{a-1}∘σ_j
            }
        }
        std::size_t pos = faces.size();
        while (pos > 0 && faces[pos - 1] <= a) {
            ++steps;
            a += 1;  // δ_b∘δ_a = δ_{a+1}∘δ_b for b <= a
            --pos;
        }
        faces.insert(faces.begin() + static_cast<long>(pos), a);
    }

    void merge_degen(int b) {
        std::size_t pos = degens.size();
        while (pos > 0 && degens[pos - 1] >= b) {
            ++steps;
            degens[pos - 1] += 1;  // σ_a∘σ_b = σ_b∘σ_{a+1} for b <= a
            --pos;
        }
        degens.insert(degens.begin() + static_cast<long>(pos), b);
    }

    void append(const Gen& g) {
        check_gen(tag, g);
        if (g.deg != cat_dom) throw std::invalid_argument("malformed word: degree mismatch in composition");
        const int n = cat_dom;
        switch (g.kind) {
            case Gen::t:
                ++k;
                ++steps;
                reduce_lambda();
                return;
            case Gen::tinv:
                --k;
                ++steps;
                reduce_lambda();
                return;
            case Gen::d: {
                // τ_n∘δ_i = δ_{i-1}∘τ_{n-1} (i>0), τ_n∘δ_0 = δ_n
                long kk = k, kr = 0;
                int i = g.i;
                while (kk > 0) {
                    ++steps;
                    if (i > 0) { --i; ++kr; } else { i = n; }
                    --kk;
                }
                while (kk < 0) {
                    ++steps;
                    if (i < n) { ++i; --kr; } else { i = 0; }
                    ++kk;
                }
                k = kr;
                cat_dom = n - 1;
                reduce_lambda();
                merge_face(i);
                return;
            }
            case Gen::s: {
                // τ_n∘σ_i = σ_{i-1}∘τ_{n+1} (i>0), τ_n∘σ_0 = σ_n∘τ²_{n+1}
                long kk = k, kr = 0;
                int i = g.i;
                while (kk > 0) {
                    ++steps;
                    if (i > 0) { --i; ++kr; } else { i = n; kr += 2; }
                    --kk;
                }
                while (kk < 0) {
                    ++steps;
                    if (i < n) { ++i; --kr; } else { i = 0; kr -= 2; }
                    ++kk;
                }
                k = kr;
                cat_dom = n + 1;
                reduce_lambda();
                merge_degen(i);
                return;
            }
        }
    }
};

}  // namespace

MorphismWord parse_word(std::string_view text, CatTag tag) {
    MorphismWord w;
    w.tag = tag;
    std::vector<std::string> tokens;
    std::string s(text);
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t dot = s.find('.', pos);
        std::string piece = s.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
        std::size_t b = piece.find_first_not_of(" \t");
        std::size_t e = piece.find_last_not_of(" \t");
        if (b != std::string::npos) tokens.push_back(piece.substr(b, e - b + 1));
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    if (tokens.empty()) throw std::invalid_argument("empty word (use idN for the identity at degree N)");

    auto parse_int = [](const std::string& v) {
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed word token index");
        return std::stoi(v);
    };

    bool first = true;
    int cur = 0;
    for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
        const std::string& tk = *it;
        if (tk.rfind("id", 0) == 0) {
            int n = parse_int(tk.substr(2));
            if (first) {
                w.src_degree = n;
                cur = n;
                first = false;
            } else if (cur != n) {
                throw std::invalid_argument("malformed word: identity degree mismatch");
            }
            continue;
        }
        std::size_t at = tk.find('@');
        if (at == std::string::npos) throw std::invalid_argument("malformed word token (missing @degree): " + tk);
        std::string head = tk.substr(0, at);
        int deg = parse_int(tk.substr(at + 1));
        Gen g;
        g.deg = deg;
        if (head == "t") {
            g.kind = Gen::t;
        } else if (head == "tinv") {
            g.kind = Gen::tinv;
        } else if (head.size() > 1 && head[0] == 'd') {
            g.kind = Gen::d;
            g.i = parse_int(head.substr(1));
        } else if (head.size() > 1 && head[0] == 's') {
            g.kind = Gen::s;
            g.i = parse_int(head.substr(1));
        } else {
            throw std::invalid_argument("malformed word token: " + tk);
        }
        check_gen(tag, g);
        if (first) {
            w.src_degree = g.deg;
            cur = g.deg;
            first = false;
        }
        if (g.deg != cur) throw std::invalid_argument("malformed word: degree mismatch at token " + tk);
        cur = gen_out_degree(g);
        w.gens.insert(w.gens.begin(), g);
    }
    w.dst_degree = cur;
    return w;
}

std::string word_str(const MorphismWord& w) {
    if (w.gens.empty()) return "id" + std::to_string(w.src_degree);
    std::ostringstream os;
    for (std::size_t i = 0; i < w.gens.size(); ++i) {
        const Gen& g = w.gens[i];
        if (i) os << " . ";
        switch (g.kind) {
            case Gen::d: os << "d" << g.i; break;
            case Gen::s: os << "s" << g.i; break;
            case Gen::t: os << "t"; break;
            case Gen::tinv: os << "tinv"; break;
        }
        os << "@" << g.deg;
    }
    return os.str();
}

std::string normal_form_str(const NormalForm& nf) {
    std::ostringstream os;
    os << "[" << nf.dst << "]<-[" << nf.src << "] faces(";
    for (std::size_t i = 0; i < nf.faces.size(); ++i) os << (i ? "," : "") << nf.faces[i];
    os << ") degens(";
    for (std::size_t i = 0; i < nf.degens.size(); ++i) os << (i ? "," : "") << nf.degens[i];
    os << ")";
    if (nf.t_power) os << " t^" << *nf.t_power;
    return os.str();
}

NormalForm normalize(const MorphismWord& w, std::size_t* steps) {
    FoldState st;
    st.tag = w.tag;
    st.cat_dom = w.src_degree;
    int cur = w.src_degree;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        if (it->deg != cur) throw std::invalid_argument("malformed word: degree mismatch");
        st.append(*it);
        cur = gen_out_degree(*it);
    }
    st.reduce_lambda();
    NormalForm nf;
    nf.tag = w.tag;
    nf.src = w.src_degree;
    nf.dst = st.cat_dom;
    if (!w.gens.empty() && nf.dst != w.dst_degree)
        throw std::logic_error("normalize: internal degree bookkeeping error");
    if (tag_has_t(w.tag)) nf.t_power = st.k;
    nf.faces = st.faces;
    nf.degens = st.degens;
    if (steps) *steps = st.steps;
    return nf;
}

MorphismWord word_of(const NormalForm& nf) {
    MorphismWord w;
    w.tag = nf.tag;
    w.src_degree = nf.src;
    w.dst_degree = nf.dst;
    long k = nf.t_power.value_or(0);
    for (long j = 0; j < std::labs(k); ++j) {
        Gen g;
        g.kind = k > 0 ? Gen::t : Gen::tinv;
        g.deg = nf.dst;
        w.gens.push_back(g);
    }
    // categorical σ_{j_1}∘…∘σ_{j_l}: operator tokens s(j_l) … s(j_1), the
    // smallest index applied first at the lowest degree
    int base = nf.dst - static_cast<int>(nf.degens.size());
    for (std::size_t idx = 0; idx < nf.degens.size(); ++idx) {
        Gen g;
        g.kind = Gen::s;
        g.i = nf.degens[nf.degens.size() - 1 - idx];
        g.deg = base + static_cast<int>(nf.degens.size() - 1 - idx);
        w.gens.push_back(g);
    }
    // categorical δ_{i_1}∘…∘δ_{i_p}: the top face δ_{i_1} acts first at the
    // source degree; left-to-right tokens run d(i_p)@(base+1) … d(i_1)@src
    for (std::size_t idx = 0; idx < nf.faces.size(); ++idx) {
        Gen g;
        g.kind = Gen::d;
        g.i = nf.faces[nf.faces.size() - 1 - idx];
        g.deg = base + 1 + static_cast<int>(idx);
        w.gens.push_back(g);
    }
    return w;
}

MorphismWord compose(const MorphismWord& w1, const MorphismWord& w2) {
    if (w1.tag != w2.tag) throw std::invalid_argument("compose: category tags differ");
    if (w2.dst_degree != w1.src_degree) throw std::invalid_argument("compose: degree mismatch");
    MorphismWord w;
    w.tag = w1.tag;
    w.src_degree = w2.src_degree;
    w.dst_degree = w1.dst_degree;
    w.gens = w1.gens;
    w.gens.insert(w.gens.end(), w2.gens.begin(), w2.gens.end());
    return w;
}

LinMap evaluate(const MorphismWord& w, const ParaCyclicComodule& X) {
    if (w.src_degree < 0 || static_cast<std::size_t>(w.src_degree) > X.N)
        throw std::out_of_range("evaluate: degree outside the built range");
    const Field& f = X.H->k;
    LinMap acc = LinMap::identity(f, X.level[w.src_degree].space.space);
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        const Gen& g = *it;
        int outd = gen_out_degree(g);
        if (g.deg < 0 || outd < 0 || static_cast<std::size_t>(g.deg) > X.N || static_cast<std::size_t>(outd) > X.N)
            throw std::out_of_range("evaluate: degree outside the built range");
        std::size_t n = static_cast<std::size_t>(g.deg);
        switch (g.kind) {
            case Gen::d: acc = X.d(n, static_cast<std::size_t>(g.i)) * acc; break;
            case Gen::s: acc = X.s(n, static_cast<std::size_t>(g.i)) * acc; break;
            case Gen::t: acc = X.t(n) * acc; break;
            case Gen::tinv: acc = X.tinv(n) * acc; break;
        }
    }
    return acc;
}

LinMap evaluate(const NormalForm& nf, const ParaCyclicComodule& X) { return evaluate(word_of(nf), X); }

std::vector<IdentityCheck> check_simplicial_identities(const ParaCyclicComodule& X) {
    std::vector<IdentityCheck> out;
    for (std::size_t n = 2; n <= X.N; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                bool ok = X.d(n - 1, i) * X.d(n, j) == X.d(n - 1, j - 1) * X.d(n, i);
                out.push_back({"d" + std::to_string(i) + " d" + std::to_string(j), n, ok});
            }
    for (std::size_t n = 0; n + 2 <= X.N; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= j; ++i) {
                bool ok = X.s(n + 1, i) * X.s(n, j) == X.s(n + 1, j + 1) * X.s(n, i);
                out.push_back({"s" + std::to_string(i) + " s" + std::to_string(j), n, ok});
            }
    for (std::size_t n = 0; n + 1 <= X.N; ++n)
        for (std::size_t j = 0; j <= n; ++j)
            for (std::size_t i = 0; i <= n + 1; ++i) {
                LinMap lhs = X.d(n + 1, i) * X.s(n, j);
                bool ok;
                if (i == j || i == j + 1) {
                    ok = lhs.m.is_identity();
                } else if (i < j) {
                    ok = lhs == X.s(n - 1, j - 1) * X.d(n, i);
                } else {
                    ok = lhs == X.s(n - 1, j) * X.d(n, i - 1);
                }
                out.push_back({"d" + std::to_string(i) + " s" + std::to_string(j), n, ok});
            }
    return out;
}

std::vector<IdentityCheck> check_paracyclic_identities(const ParaCyclicComodule& X) {
    std::vector<IdentityCheck> out;
    for (std::size_t n = 1; n <= X.N; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            bool ok = X.d(n, i) * X.t(n) == X.t(n - 1) * X.d(n, i - 1);
            out.push_back({"d" + std::to_string(i) + " t = t d" + std::to_string(i - 1), n, ok});
        }
        bool ok0 = X.d(n, 0) * X.t(n) == X.d(n, n);
        out.push_back({"d0 t = dn", n, ok0});
    }
    for (std::size_t n = 0; n + 1 <= X.N; ++n) {
        for (std::size_t i = 1; i <= n; ++i) {
            bool ok = X.s(n, i) * X.t(n) == X.t(n + 1) * X.s(n, i - 1);
            out.push_back({"s" + std::to_string(i) + " t = t s" + std::to_string(i - 1), n, ok});
        }
        bool ok0 = X.s(n, 0) * X.t(n) == X.t(n + 1) * X.t(n + 1) * X.s(n, n);
        out.push_back({"s0 t = t^2 sn", n, ok0});
    }
    return out;
}

std::vector<IdentityCheck> check_cyclic_identities(const ParaCyclicComodule& X) {
    std::vector<IdentityCheck> out;
    for (std::size_t n = 0; n <= X.N; ++n) {
        LinMap p = X.t(n);
        for (std::size_t j = 0; j < n; ++j) p = p * X.t(n);
        out.push_back({"t^{n+1} = id", n, p.m.is_identity()});
        if (X.level[n].tinv) {
            bool ok = (X.t(n) * X.tinv(n)).m.is_identity() && (X.tinv(n) * X.t(n)).m.is_identity();
            out.push_back({"t tinv = id", n, ok});
        }
    }
    return out;
}

FromT paracyclic_from_t(HopfPtr H, const std::vector<Comodule>& spaces, const std::vector<LinMap>& d0,
                        const std::vector<LinMap>& s0, const std::vector<LinMap>& t) {
    FromT out;
    if (spaces.empty() || t.size() != spaces.size() || d0.size() + 1 != spaces.size() ||
        s0.size() + 1 != spaces.size())
        throw std::invalid_argument("paracyclic_from_t: need d0 at degrees 1..N, s0 at 0..N-1, t at 0..N");
    const std::size_t N = spaces.size() - 1;
    const Field& f = H->k;

    ParaCyclicComodule X;
    X.H = H;
    X.N = N;
    X.level.resize(N + 1);
    std::vector<LinMap> tinvs;
    for (std::size_t n = 0; n <= N; ++n) {
        SolveResult inv = solve(t[n].m, Mat::identity(f, spaces[n].dim()));
        if (!inv.consistent || inv.nullity != 0) throw std::invalid_argument("paracyclic_from_t: t not invertible");
        tinvs.emplace_back(spaces[n].space, spaces[n].space, inv.particular);
        X.level[n].space = spaces[n];
        X.level[n].t = t[n];
        X.level[n].tinv = tinvs[n];
    }
    for (std::size_t n = 0; n <= N; ++n) {
        if (n >= 1) {
            // d_i = t^i_{n-1} ∘ d_0 ∘ t^{-i}_n
            LinMap pre = LinMap::identity(f, spaces[n].space);
            LinMap post = LinMap::identity(f, spaces[n - 1].space);
            for (std::size_t i = 0; i <= n; ++i) {
                X.level[n].d.push_back(post * d0[n - 1] * pre);
                pre = pre * tinvs[n];
                post = X.level[n - 1].t * post;
            }
        }
        if (n + 1 <= N) {
            // s_i = t^i_{n+1} ∘ s_0 ∘ t^{-i}_n
            LinMap pre = LinMap::identity(f, spaces[n].space);
            LinMap post = LinMap::identity(f, spaces[n + 1].space);
            for (std::size_t i = 0; i <= n; ++i) {
                X.level[n].s.push_back(post * s0[n] * pre);
                pre = pre * tinvs[n];
                post = X.level[n + 1].t * post;
            }
        }
    }
    X.tag = CyclicTag::para;
    auto all = check_simplicial_identities(X);
    auto par = check_paracyclic_identities(X);
    all.insert(all.end(), par.begin(), par.end());
    for (auto& c : all)
        if (!c.holds) out.failures.push_back(c);
    out.ok = out.failures.empty();
    if (!out.ok) X.tag = CyclicTag::pseudo_para;
    out.X = std::move(X);
    return out;
}

}  // namespace cohopf
