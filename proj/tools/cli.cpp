#include <iostream>

#include "CLI11.hpp"

#include "cohopf/deffile.hpp"
#include "cohopf/homology.hpp"
#include "cohopf/report.hpp"
#include "cohopf/stable.hpp"

using namespace cohopf;

namespace {

struct Ctx {
    std::string file;
    std::string field_expect;
    bool verbose = false;
    int jobs = 0;
    std::string command_echo;
};

Materialized load(const Ctx& ctx) {
    Materialized m = build(parse_deffile_path(ctx.file));
    if (!ctx.field_expect.empty()) {
        Field want = ctx.field_expect == "rational" ? Field::rational()
                                                    : Field::prime(std::stoull(ctx.field_expect));
        if (!(want == m.field))
            throw DefError("file declares field " + m.field.str() + ", expected " + ctx.field_expect);
    }
    return m;
}

const Comodule& comodule_of(const Materialized& m, const std::string& name) {
    auto it = m.comodules.find(name);
    if (it != m.comodules.end()) return it->second;
    auto mod = m.modules.find(name);
    if (mod != m.modules.end()) return mod->second.under;
    auto sp = m.stablepairs.find(name);
    if (sp != m.stablepairs.end()) return sp->second.under;
    auto alg = m.algebras.find(name);
    if (alg != m.algebras.end()) return alg->second->under;
    throw DefError("no comodule named '" + name + "'");
}

IntegralData integ_of(const Comodule& c) { return cofrobenius_data(*c.H); }

int emit(const Report& r, int code) {
    std::cout << r.render();
    return code;
}

std::string join_names(const std::vector<IdentityCheck>& v, bool holds) {
    std::string s;
    for (const auto& c : v)
        if (c.holds == holds) {
            if (!s.empty()) s += "; ";
            s += c.name + " @" + std::to_string(c.degree);
        }
    return s.empty() ? "(none)" : s;
}

int cmd_validate(const Ctx& ctx, const std::string& object) {
    Materialized m = load(ctx);
    Report r(ctx.command_echo);
    bool all_ok = true;
    std::size_t checked = 0;
    auto note = [&](const std::string& name, const std::vector<std::string>& bad) {
        ++checked;
        if (bad.empty()) {
            r.line("valid: " + name);
        } else {
            all_ok = false;
            for (auto& b : bad) r.line("INVALID " + name + ": " + b);
        }
        r.kv(name + ".valid", bad.empty());
    };
    for (const auto& name : m.order) {
        if (!object.empty() && name != object) continue;
        if (auto it = m.hopfs.find(name); it != m.hopfs.end()) {
            auto rep = validate_hopf(*it->second);
            std::vector<std::string> bad;
            for (auto& f : rep) bad.push_back(f.axiom + ": " + f.detail);
            note(name, bad);
        } else if (auto c = m.comodules.find(name); c != m.comodules.end()) {
            note(name, validate_comodule(c->second));
        } else if (auto a = m.algebras.find(name); a != m.algebras.end()) {
            note(name, validate_comodule_algebra(*a->second));
        } else if (auto b = m.bialgebras.find(name); b != m.bialgebras.end()) {
            note(name, validate_bialgebra_in_comod(b->second));
        } else if (auto mo = m.modules.find(name); mo != m.modules.end()) {
            note(name, validate_amodule(mo->second));
        } else if (auto sp = m.stablepairs.find(name); sp != m.stablepairs.end()) {
            note(name, validate_stable_mod_comod(sp->second));
        }
    }
    if (!object.empty() && checked == 0) throw DefError("no object named '" + object + "'");
    r.kv("verdict", all_ok);
    return emit(r, all_ok ? 0 : 1);
}

int cmd_integral(const Ctx& ctx, const std::string& hopf) {
    Materialized m = load(ctx);
    Report r(ctx.command_echo);
    bool any = false;
    for (const auto& name : m.order) {
        auto it = m.hopfs.find(name);
        if (it == m.hopfs.end()) continue;
        if (!hopf.empty() && name != hopf) continue;
        any = true;
        auto basis = integral_space(*it->second);
        r.line(name + ": integral space dimension " + std::to_string(basis.size()));
        r.kv(name + ".dim", basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) r.kv(name + ".basis" + std::to_string(i), basis[i].m);
    }
    if (!any) throw DefError("no hopf block" + (hopf.empty() ? "" : " named '" + hopf + "'"));
    r.kv("verdict", true);
    return emit(r, 0);
}

int cmd_cofrobenius(const Ctx& ctx, const std::string& hopf) {
    Materialized m = load(ctx);
    Report r(ctx.command_echo);
    bool any = false;
    for (const auto& name : m.order) {
        auto it = m.hopfs.find(name);
        if (it == m.hopfs.end()) continue;
        if (!hopf.empty() && name != hopf) continue;
        any = true;
        IntegralData d = cofrobenius_data(*it->second);
        r.line(name + ": coFrobenius, x = " + it->second->space.labels[d.x_index]);
        r.kv(name + ".is_cofrobenius", d.is_cofrobenius);
        r.kv(name + ".lambda", d.lambda.m);
        r.kv(name + ".lambda_prime", d.lambda_prime.m);
        r.kv(name + ".x", it->second->space.labels[d.x_index]);
    }
    if (!any) throw DefError("no hopf block" + (hopf.empty() ? "" : " named '" + hopf + "'"));
    r.kv("verdict", true);
    return emit(r, 0);
}

int cmd_hom(const Ctx& ctx, const std::string& mn, const std::string& nn) {
    Materialized mat = load(ctx);
    const Comodule& M = comodule_of(mat, mn);
    const Comodule& N = comodule_of(mat, nn);
    auto basis = hom_colinear(M, N);
    Report r(ctx.command_echo);
    r.line("dim Hom^H(" + mn + ", " + nn + ") = " + std::to_string(basis.size()));
    r.kv("hom.dim", basis.size());
    if (ctx.verbose)
        for (std::size_t i = 0; i < basis.size(); ++i) r.kv("hom.basis" + std::to_string(i), basis[i].m);
    r.kv("verdict", true);
    return emit(r, 0);
}

int cmd_stable_hom(const Ctx& ctx, const std::string& mn, const std::string& nn) {
    Materialized mat = load(ctx);
    StableHomSpace sh = stable_hom(comodule_of(mat, mn), comodule_of(mat, nn));
    Report r(ctx.command_echo);
    r.line("ambient dim " + std::to_string(sh.ambient.size()) + ", stably trivial dim " +
           std::to_string(sh.trivial.size()) + ", quotient dim " + std::to_string(sh.quotient_dim));
    r.kv("ambient.dim", sh.ambient.size());
    r.kv("trivial.dim", sh.trivial.size());
    r.kv("quotient.dim", sh.quotient_dim);
    r.kv("verdict", true);
    return emit(r, 0);
}

int cmd_stable_equiv(const Ctx& ctx, const std::string& mapname) {
    Materialized mat = load(ctx);
    auto it = mat.maps.find(mapname);
    if (it == mat.maps.end()) throw DefError("no map named '" + mapname + "'");
    const Comodule& src = comodule_of(mat, it->second.source);
    const Comodule& dst = comodule_of(mat, it->second.target);
    if (!is_colinear(src, dst, it->second.f)) throw DefError("map '" + mapname + "' is not colinear");
    auto res = is_stable_equivalence({src, dst, it->second.f});
    Report r(ctx.command_echo);
    r.line(std::string("stable equivalence: ") + (res.equivalence ? "yes" : "no"));
    r.kv("stable_equivalence", res.equivalence);
    if (res.equivalence && ctx.verbose) r.kv("inverse", res.inverse.m);
    r.kv("verdict", res.equivalence);
    return emit(r, res.equivalence ? 0 : 1);
}

int cmd_suspend(const Ctx& ctx, const std::string& mn, bool inverse) {
    Materialized mat = load(ctx);
    const Comodule& M = comodule_of(mat, mn);
    IntegralData integ = integ_of(M);
    Report r(ctx.command_echo);
    if (!inverse) {
        Suspension s = suspend(M, integ);
        bool exact = rank_of(s.embed.m) == M.dim() && rank_of(s.project.m) == s.sigma.dim() &&
                     subspace_equal(kernel_basis(s.project.m), column_space_basis(s.embed.m));
        r.line("dim of the suspension of " + mn + " = " + std::to_string(s.sigma.dim()));
        r.kv("sigma.dim", s.sigma.dim());
        r.kv("sequence.exact", exact);
        r.kv("coaction", s.sigma.rho.m);
        r.kv("verdict", exact);
        return emit(r, exact ? 0 : 1);
    }
    Desuspension d = desuspend(M, integ);
    bool exact = rank_of(d.include.m) == d.sigma_inv.dim() && rank_of(d.project.m) == M.dim() &&
                 subspace_equal(kernel_basis(d.project.m), column_space_basis(d.include.m));
    r.line("dim of the desuspension of " + mn + " = " + std::to_string(d.sigma_inv.dim()));
    r.kv("sigma_inv.dim", d.sigma_inv.dim());
    r.kv("sequence.exact", exact);
    r.kv("coaction", d.sigma_inv.rho.m);
    r.kv("verdict", exact);
    return emit(r, exact ? 0 : 1);
}

int cmd_cylinder(const Ctx& ctx, const std::string& mapname, bool co) {
    Materialized mat = load(ctx);
    auto it = mat.maps.find(mapname);
    if (it == mat.maps.end()) throw DefError("no map named '" + mapname + "'");
    const Comodule& src = comodule_of(mat, it->second.source);
    const Comodule& dst = comodule_of(mat, it->second.target);
    if (!is_colinear(src, dst, it->second.f)) throw DefError("map '" + mapname + "' is not colinear");
    IntegralData integ = integ_of(src);
    Report r(ctx.command_echo);
    if (!co) {
        Cylinder c = mapping_cylinder({src, dst, it->second.f}, integ);
        bool split = (c.retraction * c.inc_y).m.is_identity();
        bool exact = (c.proj_sigma * c.inc_y).is_zero() &&
                     subspace_equal(kernel_basis(c.proj_sigma.m), column_space_basis(c.inc_y.m));
        bool composite_trivial = stably_trivial({src, c.cf, c.inc_y * it->second.f}).trivial;
        r.line("dim C_f = " + std::to_string(c.cf.dim()));
        r.kv("cf.dim", c.cf.dim());
        r.kv("splitting", split);
        r.kv("sequence.exact", exact);
        r.kv("composite.stably_trivial", composite_trivial);
        r.kv("verdict", split && exact && composite_trivial);
        return emit(r, split && exact && composite_trivial ? 0 : 1);
    }
    Cocylinder c = mapping_cocylinder({src, dst, it->second.f}, integ);
    bool split = (c.proj_x * c.section).m.is_identity();
    bool exact = (c.proj_x * c.inc_desusp).is_zero() &&
                 subspace_equal(kernel_basis(c.proj_x.m), column_space_basis(c.inc_desusp.m));
    r.line("dim P_f = " + std::to_string(c.pf.dim()));
    r.kv("pf.dim", c.pf.dim());
    r.kv("splitting", split);
    r.kv("sequence.exact", exact);
    r.kv("verdict", split && exact);
    return emit(r, split && exact ? 0 : 1);
}

int cmd_bar(const Ctx& ctx, const std::string& algname, std::size_t stages) {
    Materialized mat = load(ctx);
    auto it = mat.algebras.find(algname);
    if (it == mat.algebras.end()) throw DefError("no algebra named '" + algname + "'");
    IntegralData integ = cofrobenius_data(*it->second->under.H);
    auto result = bar_stages(it->second, stages, integ);
    Report r(ctx.command_echo);
    bool all_ok = true;
    for (const auto& st : result) {
        std::string dims;
        for (std::size_t i = 0; i < st.subquotient_dims.size(); ++i)
            dims += (i ? "," : "") + std::to_string(st.subquotient_dims[i]);
        r.line("C" + std::to_string(st.n) + ": dim " + std::to_string(st.C.dim()) + ", subquotients [" + dims +
               "], differential composite zero: " + (st.dbar_square_zero ? "yes" : "no") +
               ", injective: " + (st.injective ? "yes" : "no"));
        std::string key = "C" + std::to_string(st.n);
        r.kv(key + ".dim", st.C.dim());
        r.kv(key + ".subquotients", st.subquotient_dims);
        r.kv(key + ".dbar_square_zero", st.dbar_square_zero);
        r.kv(key + ".injective", st.injective);
        r.kv(key + ".split", (st.retr_prev * st.inc_prev).m.is_identity());
        if (!st.dbar_square_zero || !st.injective || !st.action_valid) all_ok = false;
    }
    r.kv("verdict", all_ok);
    return emit(r, all_ok ? 0 : 1);
}

int cmd_total_integral(const Ctx& ctx, const std::string& algname) {
    Materialized mat = load(ctx);
    auto it = mat.algebras.find(algname);
    if (it == mat.algebras.end()) throw DefError("no algebra named '" + algname + "'");
    auto phi = total_integral(*it->second);
    Report r(ctx.command_echo);
    r.line(std::string("total integral: ") + (phi ? "exists" : "absent"));
    r.kv("exists", static_cast<bool>(phi));
    if (phi && ctx.verbose) r.kv("phi", phi->m);
    r.kv("verdict", static_cast<bool>(phi));
    return emit(r, phi ? 0 : 1);
}

struct CyclicArgs {
    std::string algebra, pair;
    std::size_t maxdeg = 4;
};

int cmd_cyclic_build(const Ctx& ctx, const CyclicArgs& a) {
    Materialized mat = load(ctx);
    auto alg = mat.algebras.find(a.algebra);
    if (alg == mat.algebras.end()) throw DefError("no algebra named '" + a.algebra + "'");
    auto sp = mat.stablepairs.find(a.pair);
    if (sp == mat.stablepairs.end()) throw DefError("no stablepair named '" + a.pair + "'");
    ParaCyclicComodule T = build_T(alg->second, sp->second, a.maxdeg);
    auto rep = verify_pseudo_para_cyclic(T);
    Report r(ctx.command_echo);
    std::vector<std::size_t> dims;
    for (auto& l : T.level) dims.push_back(l.space.dim());
    r.line("built T up to degree " + std::to_string(a.maxdeg));
    r.kv("dims", dims);
    r.kv("operators_colinear", rep.operators_colinear);
    r.kv("verdict", rep.operators_colinear);
    return emit(r, rep.operators_colinear ? 0 : 1);
}

int cmd_cyclic_check(const Ctx& ctx, const CyclicArgs& a) {
    Materialized mat = load(ctx);
    auto alg = mat.algebras.find(a.algebra);
    if (alg == mat.algebras.end()) throw DefError("no algebra named '" + a.algebra + "'");
    auto sp = mat.stablepairs.find(a.pair);
    if (sp == mat.stablepairs.end()) throw DefError("no stablepair named '" + a.pair + "'");
    ParaCyclicComodule T = build_T(alg->second, sp->second, a.maxdeg);
    auto rep = verify_pseudo_para_cyclic(T);
    Report r(ctx.command_echo);
    r.line("required identities: " + std::string(rep.required_hold ? "all hold" : "FAILED"));
    r.line("boundary identities failing: " + join_names(rep.boundary, false));
    r.kv("required_hold", rep.required_hold);
    r.kv("operators_colinear", rep.operators_colinear);
    r.kv("boundary_all_hold", rep.boundary_all_hold);
    for (const auto& c : rep.boundary)
        r.kv("boundary." + c.name + ".deg" + std::to_string(c.degree), c.holds);
    r.kv("verdict", rep.required_hold && rep.operators_colinear);
    return emit(r, rep.required_hold && rep.operators_colinear ? 0 : 1);
}

int cmd_cyclic_upgrade(const Ctx& ctx, const std::string& bialg, const CyclicArgs& a) {
    Materialized mat = load(ctx);
    auto bi = mat.bialgebras.find(bialg);
    if (bi == mat.bialgebras.end()) throw DefError("no bialgebra named '" + bialg + "'");
    auto sp = mat.stablepairs.find(a.pair);
    if (sp == mat.stablepairs.end()) throw DefError("no stablepair named '" + a.pair + "'");
    ParaCyclicComodule T = build_T(bi->second.alg, sp->second, a.maxdeg);
    auto up = cyclic_structure(T, bi->second, sp->second);
    Report r(ctx.command_echo);
    r.line(std::string("upgrade to cyclic: ") + (up.ok ? "ok" : "REFUSED"));
    if (!up.ok)
        for (auto& c : up.failures) r.line("  failed: " + c.name + " at degree " + std::to_string(c.degree));
    r.kv("stability_ok", up.stability_ok);
    r.kv("antipode_ok", up.antipode_ok);
    r.kv("upgraded", up.ok);
    r.kv("verdict", up.ok);
    return emit(r, up.ok ? 0 : 1);
}

int cmd_coapprox(const Ctx& ctx, const CyclicArgs& a) {
    Materialized mat = load(ctx);
    auto alg = mat.algebras.find(a.algebra);
    if (alg == mat.algebras.end()) throw DefError("no algebra named '" + a.algebra + "'");
    auto sp = mat.stablepairs.find(a.pair);
    if (sp == mat.stablepairs.end()) throw DefError("no stablepair named '" + a.pair + "'");
    ParaCyclicComodule T = build_T(alg->second, sp->second, a.maxdeg);
    Coapprox ca = coapproximation(T);
    std::vector<std::size_t> tdims;
    for (auto& l : T.level) tdims.push_back(l.space.dim());
    Report r(ctx.command_echo);
    r.line("largest cyclic subcomodule dims per degree (top degree provisional)");
    r.kv("t.dims", tdims);
    r.kv("q.dims", ca.q_dims);
    r.kv("qhat.dims", ca.qhat_dims);
    r.kv("sweeps", ca.sweeps);
    r.kv("top_provisional", ca.top_provisional);
    Coapprox again = coapproximation(ca.Q);
    bool idem = again.q_dims == ca.q_dims;
    r.kv("idempotent", idem);
    r.kv("verdict", idem);
    return emit(r, idem ? 0 : 1);
}

int cmd_charmap(const Ctx& ctx, const std::string& bialg, std::size_t maxdeg) {
    Materialized mat = load(ctx);
    auto bi = mat.bialgebras.find(bialg);
    if (bi == mat.bialgebras.end()) throw DefError("no bialgebra named '" + bialg + "'");
    auto cm = characteristic_map(bi->second, maxdeg);
    Report r(ctx.command_echo);
    r.line(std::string("characteristic map: image in Q(A,A) ") + (cm.image_in_QA ? "yes" : "no") +
           ", commutes " + (cm.commutes ? "yes" : "no"));
    r.kv("qk.dims", cm.Qk.q_dims);
    r.kv("qa.dims", cm.QA.q_dims);
    r.kv("image_in_QA", cm.image_in_QA);
    r.kv("commutes", cm.commutes);
    r.kv("colinear", cm.colinear);
    r.kv("coinv.dims", cm.coinv_dims);
    r.kv("coinv_commutes", cm.coinv_commutes);
    bool ok = cm.image_in_QA && cm.commutes && cm.colinear && cm.coinv_commutes;
    r.kv("verdict", ok);
    return emit(r, ok ? 0 : 1);
}

int cmd_hc(const Ctx& ctx, const std::string& algname, std::size_t range) {
    Materialized mat = load(ctx);
    auto it = mat.algebras.find(algname);
    if (it == mat.algebras.end()) throw DefError("no algebra named '" + algname + "'");
    PlainAlgebra a{mat.field, it->second->under.space, it->second->mult, it->second->unit};
    auto hc = hc_of_algebra(a, range);
    Report r(ctx.command_echo);
    std::string row;
    for (std::size_t i = 0; i < hc.size(); ++i) row += (i ? "," : "") + std::to_string(hc[i]);
    r.line("HC_0.." + std::to_string(range) + " = " + row);
    r.kv("hc", hc);
    r.kv("verdict", true);
    return emit(r, 0);
}

CatTag tag_of(const std::string& s) {
    if (s == "delta") return CatTag::delta;
    if (s == "lambda_plus") return CatTag::lambda_plus;
    if (s == "lambda_nat") return CatTag::lambda_nat;
    if (s == "lambda_infty") return CatTag::lambda_infty;
    if (s == "lambda") return CatTag::lambda;
    throw DefError("unknown category tag '" + s + "' (delta|lambda_plus|lambda_nat|lambda_infty|lambda)");
}

int cmd_word_normalize(const Ctx& ctx, const std::string& expr, const std::string& tag) {
    MorphismWord w = parse_word(expr, tag_of(tag));
    std::size_t steps = 0;
    NormalForm nf = normalize(w, &steps);
    Report r(ctx.command_echo);
    r.line("normal form: " + normal_form_str(nf));
    r.line("as a word: " + word_str(word_of(nf)));
    r.kv("normal_form", normal_form_str(nf));
    r.kv("word", word_str(word_of(nf)));
    r.kv("steps", steps);
    r.kv("verdict", true);
    return emit(r, 0);
}

int cmd_word_eval(const Ctx& ctx, const std::string& module, const std::string& expr, const std::string& tag) {
    Materialized mat = load(ctx);
    auto it = mat.cyclicmodules.find(module);
    if (it == mat.cyclicmodules.end()) throw DefError("no cyclicmodule named '" + module + "'");
    MorphismWord w = parse_word(expr, tag_of(tag));
    LinMap value = evaluate(w, it->second);
    NormalForm nf = normalize(w);
    LinMap value_nf = evaluate(nf, it->second);
    Report r(ctx.command_echo);
    bool sound = value == value_nf;
    r.line("evaluated a word X_" + std::to_string(w.src_degree) + " -> X_" + std::to_string(w.dst_degree));
    r.kv("matrix", value.m);
    r.kv("normal_form", normal_form_str(nf));
    r.kv("normalize_sound", sound);
    r.kv("verdict", sound);
    return emit(r, sound ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cohopf: exact computer algebra for finite-dimensional Hopf algebras,\n"
                 "comodule stable categories, and cyclic homology"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_option("--jobs", ctx.jobs, "parallel worker threads (1 disables the OpenMP kernels)");
    app.add_flag("--verbose", ctx.verbose, "include witness matrices in reports");
    app.add_option("--field", ctx.field_expect, "assert the file's base field: 'rational' or a prime");

    std::string object, hopf, m_name, n_name, map_name, alg_name, bialg_name, word_expr, module_name;
    std::string tag = "lambda";
    std::size_t stages = 3, maxdeg = 4, range = 4;
    CyclicArgs cargs;

    auto* v = app.add_subcommand("validate", "check every axiom of the objects in a definition file");
    v->add_option("file", ctx.file)->required();
    v->add_option("--object", object, "only this object");

    auto* in = app.add_subcommand("integral", "basis of the space of left integrals");
    in->add_option("file", ctx.file)->required();
    in->add_option("--hopf", hopf, "only this Hopf algebra");

    auto* cf = app.add_subcommand("cofrobenius", "normalized integral, right integral and the chosen x");
    cf->add_option("file", ctx.file)->required();
    cf->add_option("--hopf", hopf, "only this Hopf algebra");

    auto* ho = app.add_subcommand("hom", "basis of the colinear maps M -> N");
    ho->add_option("file", ctx.file)->required();
    ho->add_option("M", m_name)->required();
    ho->add_option("N", n_name)->required();

    auto* sh = app.add_subcommand("stable-hom", "stable hom space dimensions");
    sh->add_option("file", ctx.file)->required();
    sh->add_option("M", m_name)->required();
    sh->add_option("N", n_name)->required();

    auto* se = app.add_subcommand("stable-equiv", "decide whether a bundled map is a stable equivalence");
    se->add_option("file", ctx.file)->required();
    se->add_option("map", map_name)->required();

    auto* su = app.add_subcommand("suspend", "suspension of a comodule");
    su->add_option("file", ctx.file)->required();
    su->add_option("M", m_name)->required();

    auto* de = app.add_subcommand("desuspend", "desuspension of a comodule");
    de->add_option("file", ctx.file)->required();
    de->add_option("M", m_name)->required();

    auto* cy = app.add_subcommand("cylinder", "mapping cylinder of a bundled map");
    cy->add_option("file", ctx.file)->required();
    cy->add_option("map", map_name)->required();

    auto* cc = app.add_subcommand("cocylinder", "mapping cocylinder of a bundled map");
    cc->add_option("file", ctx.file)->required();
    cc->add_option("map", map_name)->required();

    auto* ba = app.add_subcommand("bar", "truncated bar-resolution stages of an algebra");
    ba->add_option("file", ctx.file)->required();
    ba->add_option("algebra", alg_name)->required();
    ba->add_option("--stages", stages, "highest stage to build");

    auto* ti = app.add_subcommand("total-integral", "colinear unital map H -> A, when one exists");
    ti->add_option("file", ctx.file)->required();
    ti->add_option("algebra", alg_name)->required();

    auto* cyc = app.add_subcommand("cyclic", "the pseudo-para-cyclic module T(A,M)");
    cyc->require_subcommand(1);
    auto* cb = cyc->add_subcommand("build", "build T and check operator colinearity");
    auto* ck = cyc->add_subcommand("check", "verify the simplicial and para-cyclic identities");
    auto* cu = cyc->add_subcommand("upgrade", "build the inverse cyclic operator and certify cyclicity");
    for (auto* sc : {cb, ck}) {
        sc->add_option("file", ctx.file)->required();
        sc->add_option("algebra", cargs.algebra)->required();
        sc->add_option("pair", cargs.pair)->required();
        sc->add_option("--max-degree", cargs.maxdeg);
    }
    cu->add_option("file", ctx.file)->required();
    cu->add_option("bialgebra", bialg_name)->required();
    cu->add_option("pair", cargs.pair)->required();
    cu->add_option("--max-degree", cargs.maxdeg);

    auto* ca = app.add_subcommand("coapprox", "largest cyclic subcomodule and the cyclic quotient of T");
    ca->add_option("file", ctx.file)->required();
    ca->add_option("algebra", cargs.algebra)->required();
    ca->add_option("pair", cargs.pair)->required();
    ca->add_option("--max-degree", cargs.maxdeg);

    auto* ch = app.add_subcommand("charmap", "characteristic map Q(A,k) -> Q(A,A)");
    ch->add_option("file", ctx.file)->required();
    ch->add_option("bialgebra", bialg_name)->required();
    ch->add_option("--max-degree", maxdeg);

    auto* hc = app.add_subcommand("hc", "cyclic homology of an algebra via the (b,B)-bicomplex");
    hc->add_option("file", ctx.file)->required();
    hc->add_option("algebra", alg_name)->required();
    hc->add_option("--range", range, "highest degree to report");

    auto* wo = app.add_subcommand("word", "morphism-word calculus for the cyclic categories");
    wo->require_subcommand(1);
    auto* wn = wo->add_subcommand("normalize", "canonical form of a word; tokens like d1@3 compose right to left");
    wn->add_option("expr", word_expr)->required();
    wn->add_option("--tag", tag, "delta|lambda_plus|lambda_nat|lambda_infty|lambda");
    auto* we = wo->add_subcommand("eval", "evaluate a word against a bundled cyclicmodule");
    we->add_option("file", ctx.file)->required();
    we->add_option("module", module_name)->required();
    we->add_option("expr", word_expr)->required();
    we->add_option("--tag", tag, "delta|lambda_plus|lambda_nat|lambda_infty|lambda");

    CLI11_PARSE(app, argc, argv);

    if (ctx.jobs == 1) parallel::set_enabled(false);
    if (ctx.jobs > 1) parallel::set_threads(ctx.jobs);

    std::ostringstream echo;
    for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];
    ctx.command_echo = echo.str();

    try {
        if (v->parsed()) return cmd_validate(ctx, object);
        if (in->parsed()) return cmd_integral(ctx, hopf);
        if (cf->parsed()) return cmd_cofrobenius(ctx, hopf);
        if (ho->parsed()) return cmd_hom(ctx, m_name, n_name);
        if (sh->parsed()) return cmd_stable_hom(ctx, m_name, n_name);
        if (se->parsed()) return cmd_stable_equiv(ctx, map_name);
        if (su->parsed()) return cmd_suspend(ctx, m_name, false);
        if (de->parsed()) return cmd_suspend(ctx, m_name, true);
        if (cy->parsed()) return cmd_cylinder(ctx, map_name, false);
        if (cc->parsed()) return cmd_cylinder(ctx, map_name, true);
        if (ba->parsed()) return cmd_bar(ctx, alg_name, stages);
        if (ti->parsed()) return cmd_total_integral(ctx, alg_name);
        if (cyc->parsed()) {
            if (cb->parsed()) return cmd_cyclic_build(ctx, cargs);
            if (ck->parsed()) return cmd_cyclic_check(ctx, cargs);
            if (cu->parsed()) return cmd_cyclic_upgrade(ctx, bialg_name, cargs);
        }
        if (ca->parsed()) return cmd_coapprox(ctx, cargs);
        if (ch->parsed()) return cmd_charmap(ctx, bialg_name, maxdeg);
        if (hc->parsed()) return cmd_hc(ctx, alg_name, range);
        if (wo->parsed()) {
            if (wn->parsed()) return cmd_word_normalize(ctx, word_expr, tag);
            if (we->parsed()) return cmd_word_eval(ctx, module_name, word_expr, tag);
        }
    } catch (const std::invalid_argument& e) {
        std::cout << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DefError& e) {
        std::cout << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
