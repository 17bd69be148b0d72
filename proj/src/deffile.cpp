#include "cohopf/deffile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cohopf {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

std::vector<std::string> split_dot(const std::string& s, std::size_t line) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = s.find('.', pos);
        if (dot == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, dot - pos));
        pos = dot + 1;
    }
    for (auto& p : out)
        if (p.empty()) throw DefError(line, "empty label in '" + s + "'");
    return out;
}

void check_label(const std::string& l, std::size_t line) {
    if (l.empty()) throw DefError(line, "empty basis label");
    if (l.find_first_of(".:{}#@>") != std::string::npos)
        throw DefError(line, "label '" + l + "' contains a reserved character");
}

// parses "<in> -> <out> : <coeff>" tails; in/out may be dotted pairs or absent
Entry parse_entry(const std::vector<std::string>& toks, std::size_t from, std::size_t line, bool has_in,
                  bool has_out) {
    Entry e;
    std::size_t i = from;
    if (has_in) {
        if (i >= toks.size()) throw DefError(line, "missing input labels");
        e.in = split_dot(toks[i++], line);
    }
    if (has_out) {
        if (i >= toks.size() || toks[i] != "->") throw DefError(line, "expected '->'");
        ++i;
        if (i >= toks.size()) throw DefError(line, "missing output labels");
        e.out = split_dot(toks[i++], line);
    }
    if (i >= toks.size() || toks[i] != ":") throw DefError(line, "expected ': coefficient'");
    ++i;
    if (i != toks.size() - 1) throw DefError(line, "expected a single coefficient");
    e.coeff = toks[i];
    return e;
}

std::string entry_str(const std::string& key, const Entry& e, bool has_in, bool has_out) {
    std::string s = "  " + key + " ";
    if (e.deg >= 0) s = "  " + key + "@" + std::to_string(e.deg) + " ";
    if (has_in) {
        for (std::size_t i = 0; i < e.in.size(); ++i) s += (i ? "." : "") + e.in[i];
        s += " ";
    }
    if (has_out) {
        s += "-> ";
        for (std::size_t i = 0; i < e.out.size(); ++i) s += (i ? "." : "") + e.out[i];
        s += " ";
    }
    s += ": " + e.coeff;
    return s;
}

struct EntrySorter {
    const std::map<std::string, std::size_t>* in_index;
    // lexicographic on (deg, input labels, output labels)
    bool operator()(const Entry& a, const Entry& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.in != b.in) return a.in < b.in;
        return a.out < b.out;
    }
};

}  // namespace

DefFile parse_deffile(const std::string& text) {
    DefFile df;
    bool field_seen = false;
    std::istringstream is(text);
    std::string raw;
    std::size_t lineno = 0;

    Block* open = nullptr;
    auto require_open = [&](const char* what) -> Block& {
        if (!open) throw DefError(lineno, std::string(what) + " outside of a block");
        return *open;
    };

    while (std::getline(is, raw)) {
        ++lineno;
        std::string s = raw;
        std::size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        auto toks = split_ws(s);
        if (toks.empty()) continue;

        if (toks[0] == "field") {
            if (field_seen) throw DefError(lineno, "duplicate field declaration");
            if (toks.size() == 2 && toks[1] == "rational") {
                df.field = Field::rational();
            } else if (toks.size() == 3 && toks[1] == "prime") {
                try {
                    df.field = Field::prime(std::stoull(toks[2]));
                } catch (const std::exception&) {
                    throw DefError(lineno, "bad prime field modulus '" + toks[2] + "'");
                }
            } else {
                throw DefError(lineno, "expected 'field rational' or 'field prime p'");
            }
            field_seen = true;
            continue;
        }

        if (toks.size() == 3 && toks[2] == "{") {
            if (open) throw DefError(lineno, "nested block");
            if (!field_seen) throw DefError(lineno, "field declaration must precede blocks");
            check_label(toks[1], lineno);
            const std::string& kind = toks[0];
            const std::string& name = toks[1];
            if (kind == "hopf")
                df.blocks.emplace_back(HopfDef{name, {}, {}, {}, {}, {}, {}});
            else if (kind == "comodule")
                df.blocks.emplace_back(ComoduleDef{name, "", {}, {}});
            else if (kind == "algebra")
                df.blocks.emplace_back(AlgebraDef{name, "", {}, {}, {}, {}});
            else if (kind == "bialgebra")
                df.blocks.emplace_back(BialgebraDef{name, "", {}, {}, {}});
            else if (kind == "module")
                df.blocks.emplace_back(ModuleDef{name, "", {}, {}, {}});
            else if (kind == "stablepair")
                df.blocks.emplace_back(StablePairDef{name, "", {}, {}, {}, {}});
            else if (kind == "map")
                df.blocks.emplace_back(MapDef{name, "", "", {}});
            else if (kind == "cyclicmodule")
                df.blocks.emplace_back(CyclicModuleDef{name, "", 0, {}, {}, {}});
            else
                throw DefError(lineno, "unknown block kind '" + kind + "'");
            open = &df.blocks.back();
            continue;
        }

        if (toks.size() == 1 && toks[0] == "}") {
            if (!open) throw DefError(lineno, "unmatched '}'");
            open = nullptr;
            continue;
        }

        Block& blk = require_open(("'" + toks[0] + "'").c_str());
        const std::string& key = toks[0];

        auto basis_list = [&](std::vector<std::string>& dst) {
            if (!dst.empty()) throw DefError(lineno, "duplicate basis line");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                check_label(toks[i], lineno);
                dst.push_back(toks[i]);
            }
            if (dst.empty()) throw DefError(lineno, "empty basis");
        };
        auto ref = [&](std::string& dst) {
            if (toks.size() != 2) throw DefError(lineno, "expected a single name");
            if (!dst.empty()) throw DefError(lineno, "duplicate reference");
            dst = toks[1];
        };

        if (auto* h = std::get_if<HopfDef>(&blk)) {
            if (key == "basis") basis_list(h->basis);
            else if (key == "mult") h->mult.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "unit") h->unit.push_back(parse_entry(toks, 1, lineno, false, true));
            else if (key == "comult") h->comult.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "counit") h->counit.push_back(parse_entry(toks, 1, lineno, true, false));
            else if (key == "antipode") h->antipode.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in hopf block");
        } else if (auto* c = std::get_if<ComoduleDef>(&blk)) {
            if (key == "hopf") ref(c->hopf);
            else if (key == "basis") basis_list(c->basis);
            else if (key == "coaction") c->coaction.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in comodule block");
        } else if (auto* a = std::get_if<AlgebraDef>(&blk)) {
            if (key == "hopf") ref(a->hopf);
            else if (key == "basis") basis_list(a->basis);
            else if (key == "coaction") a->coaction.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "mult") a->mult.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "unit") a->unit.push_back(parse_entry(toks, 1, lineno, false, true));
            else throw DefError(lineno, "unknown key '" + key + "' in algebra block");
        } else if (auto* b = std::get_if<BialgebraDef>(&blk)) {
            if (key == "algebra") ref(b->algebra);
            else if (key == "comult") b->comult.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "counit") b->counit.push_back(parse_entry(toks, 1, lineno, true, false));
            else if (key == "antipode") b->antipode.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in bialgebra block");
        } else if (auto* m = std::get_if<ModuleDef>(&blk)) {
            if (key == "algebra") ref(m->algebra);
            else if (key == "basis") basis_list(m->basis);
            else if (key == "coaction") m->coaction.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "action") m->action.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in module block");
        } else if (auto* sp = std::get_if<StablePairDef>(&blk)) {
            if (key == "algebra") ref(sp->algebra);
            else if (key == "basis") basis_list(sp->basis);
            else if (key == "coaction") sp->coaction.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "action") sp->action.push_back(parse_entry(toks, 1, lineno, true, true));
            else if (key == "acoaction") sp->acoaction.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in stablepair block");
        } else if (auto* mp = std::get_if<MapDef>(&blk)) {
            if (key == "source") ref(mp->source);
            else if (key == "target") ref(mp->target);
            else if (key == "entry") mp->entries.push_back(parse_entry(toks, 1, lineno, true, true));
            else throw DefError(lineno, "unknown key '" + key + "' in map block");
        } else if (auto* cm = std::get_if<CyclicModuleDef>(&blk)) {
            std::size_t at = key.find('@');
            std::string head = at == std::string::npos ? key : key.substr(0, at);
            int deg = -1;
            if (at != std::string::npos) {
                try {
                    deg = std::stoi(key.substr(at + 1));
                } catch (const std::exception&) {
                    throw DefError(lineno, "bad degree suffix in '" + key + "'");
                }
                if (deg < 0) throw DefError(lineno, "negative degree");
            }
            if (head == "hopf") ref(cm->hopf);
            else if (head == "maxdeg") {
                if (toks.size() != 2) throw DefError(lineno, "expected 'maxdeg N'");
                cm->maxdeg = std::stoul(toks[1]);
            } else if (head == "basis") {
                if (deg < 0) throw DefError(lineno, "basis needs a degree: basis@N");
                std::vector<std::string> labels;
                for (std::size_t i = 1; i < toks.size(); ++i) {
                    check_label(toks[i], lineno);
                    labels.push_back(toks[i]);
                }
                if (labels.empty()) throw DefError(lineno, "empty basis");
                if (cm->basis.count(deg)) throw DefError(lineno, "duplicate basis for degree");
                cm->basis[deg] = labels;
            } else if (head == "coaction") {
                if (deg < 0) throw DefError(lineno, "coaction needs a degree: coaction@N");
                Entry e = parse_entry(toks, 1, lineno, true, true);
                e.deg = deg;
                cm->coaction.push_back(e);
            } else if (head == "op") {
                if (toks.size() < 2) throw DefError(lineno, "op needs a generator token");
                std::string g = toks[1];
                std::size_t gat = g.find('@');
                if (gat == std::string::npos) throw DefError(lineno, "op token needs @degree");
                std::string ghead = g.substr(0, gat);
                int gdeg = std::stoi(g.substr(gat + 1));
                CyclicModuleDef::Op op;
                op.deg = gdeg;
                if (ghead == "t") op.kind = 't';
                else if (ghead == "tinv") op.kind = 'i';
                else if (ghead.size() > 1 && ghead[0] == 'd') { op.kind = 'd'; op.i = std::stoi(ghead.substr(1)); }
                else if (ghead.size() > 1 && ghead[0] == 's') { op.kind = 's'; op.i = std::stoi(ghead.substr(1)); }
                else throw DefError(lineno, "bad op token '" + g + "'");
                Entry e = parse_entry(toks, 2, lineno, true, true);
                // group entries under an existing op with the same signature
                bool found = false;
                for (auto& existing : cm->ops)
                    if (existing.kind == op.kind && existing.i == op.i && existing.deg == op.deg) {
                        existing.entries.push_back(e);
                        found = true;
                        break;
                    }
                if (!found) {
                    op.entries.push_back(e);
                    cm->ops.push_back(op);
                }
            } else {
                throw DefError(lineno, "unknown key '" + key + "' in cyclicmodule block");
            }
        }
    }
    if (open) throw DefError(lineno, "unterminated block");
    if (!field_seen) throw DefError(1, "missing field declaration");
    return df;
}

DefFile parse_deffile_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DefError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_deffile(ss.str());
}

namespace {

void sort_entries(std::vector<Entry>& v) { std::stable_sort(v.begin(), v.end(), EntrySorter{nullptr}); }

void put_entries(std::ostringstream& os, const std::string& key, std::vector<Entry> v, bool has_in, bool has_out) {
    sort_entries(v);
    for (auto& e : v) os << entry_str(key, e, has_in, has_out) << "\n";
}

}  // namespace

std::string serialize(const DefFile& df) {
    std::ostringstream os;
    os << "field " << (df.field.kind == FieldKind::rational ? "rational" : "prime " + std::to_string(df.field.p))
       << "\n";
    for (const auto& blk : df.blocks) {
        os << "\n";
        if (auto* h = std::get_if<HopfDef>(&blk)) {
            os << "hopf " << h->name << " {\n  basis";
            for (auto& l : h->basis) os << " " << l;
            os << "\n";
            put_entries(os, "unit", h->unit, false, true);
            put_entries(os, "mult", h->mult, true, true);
            put_entries(os, "comult", h->comult, true, true);
            put_entries(os, "counit", h->counit, true, false);
            put_entries(os, "antipode", h->antipode, true, true);
            os << "}\n";
        } else if (auto* c = std::get_if<ComoduleDef>(&blk)) {
            os << "comodule " << c->name << " {\n  hopf " << c->hopf << "\n  basis";
            for (auto& l : c->basis) os << " " << l;
            os << "\n";
            put_entries(os, "coaction", c->coaction, true, true);
            os << "}\n";
        } else if (auto* a = std::get_if<AlgebraDef>(&blk)) {
            os << "algebra " << a->name << " {\n  hopf " << a->hopf << "\n  basis";
            for (auto& l : a->basis) os << " " << l;
            os << "\n";
            put_entries(os, "coaction", a->coaction, true, true);
            put_entries(os, "unit", a->unit, false, true);
            put_entries(os, "mult", a->mult, true, true);
            os << "}\n";
        } else if (auto* b = std::get_if<BialgebraDef>(&blk)) {
            os << "bialgebra " << b->name << " {\n  algebra " << b->algebra << "\n";
            put_entries(os, "comult", b->comult, true, true);
            put_entries(os, "counit", b->counit, true, false);
            put_entries(os, "antipode", b->antipode, true, true);
            os << "}\n";
        } else if (auto* m = std::get_if<ModuleDef>(&blk)) {
            os << "module " << m->name << " {\n  algebra " << m->algebra << "\n  basis";
            for (auto& l : m->basis) os << " " << l;
            os << "\n";
            put_entries(os, "coaction", m->coaction, true, true);
            put_entries(os, "action", m->action, true, true);
            os << "}\n";
        } else if (auto* sp = std::get_if<StablePairDef>(&blk)) {
            os << "stablepair " << sp->name << " {\n  algebra " << sp->algebra << "\n  basis";
            for (auto& l : sp->basis) os << " " << l;
            os << "\n";
            put_entries(os, "coaction", sp->coaction, true, true);
            put_entries(os, "action", sp->action, true, true);
            put_entries(os, "acoaction", sp->acoaction, true, true);
            os << "}\n";
        } else if (auto* mp = std::get_if<MapDef>(&blk)) {
            os << "map " << mp->name << " {\n  source " << mp->source << "\n  target " << mp->target << "\n";
            put_entries(os, "entry", mp->entries, true, true);
            os << "}\n";
        } else if (auto* cm = std::get_if<CyclicModuleDef>(&blk)) {
            os << "cyclicmodule " << cm->name << " {\n  hopf " << cm->hopf << "\n  maxdeg " << cm->maxdeg << "\n";
            for (auto& [deg, labels] : cm->basis) {
                os << "  basis@" << deg;
                for (auto& l : labels) os << " " << l;
                os << "\n";
            }
            put_entries(os, "coaction", cm->coaction, true, true);
            auto ops = cm->ops;
            std::stable_sort(ops.begin(), ops.end(), [](const CyclicModuleDef::Op& a, const CyclicModuleDef::Op& b) {
                if (a.deg != b.deg) return a.deg < b.deg;
                if (a.kind != b.kind) return a.kind < b.kind;
                return a.i < b.i;
            });
            for (auto& op : ops) {
                std::string tok;
                if (op.kind == 't') tok = "t";
                else if (op.kind == 'i') tok = "tinv";
                else tok = std::string(1, op.kind) + std::to_string(op.i);
                tok += "@" + std::to_string(op.deg);
                auto entries = op.entries;
                sort_entries(entries);
                for (auto& e : entries) {
                    os << "  op " << tok << " ";
                    for (std::size_t i = 0; i < e.in.size(); ++i) os << (i ? "." : "") << e.in[i];
                    os << " -> ";
                    for (std::size_t i = 0; i < e.out.size(); ++i) os << (i ? "." : "") << e.out[i];
                    os << " : " << e.coeff << "\n";
                }
            }
            os << "}\n";
        }
    }
    return os.str();
}

namespace {

std::size_t label_index(const std::vector<std::string>& basis, const std::string& l, const std::string& ctx) {
    auto it = std::find(basis.begin(), basis.end(), l);
    if (it == basis.end()) throw DefError(ctx + ": unknown basis label '" + l + "'");
    return static_cast<std::size_t>(it - basis.begin());
}

Scalar coeff_of(const Field& f, const std::string& c, const std::string& ctx) {
    auto s = Scalar::parse(f, c);
    if (!s) throw DefError(ctx + ": bad coefficient '" + c + "'");
    return *s;
}

// assembles a table from entries; conventions: inputs index columns
// (lexicographically for pairs), outputs index rows
Mat table(const Field& f, const std::vector<Entry>& entries, const std::vector<std::vector<std::string>>& in_bases,
          const std::vector<std::vector<std::string>>& out_bases, const std::string& ctx) {
    std::size_t cols = 1, rows = 1;
    for (auto& b : in_bases) cols *= b.size();
    for (auto& b : out_bases) rows *= b.size();
    Mat m(f, rows, cols);
    for (auto& e : entries) {
        if (e.in.size() != in_bases.size() || e.out.size() != out_bases.size())
            throw DefError(ctx + ": entry arity mismatch");
        std::size_t col = 0;
        for (std::size_t i = 0; i < in_bases.size(); ++i)
            col = col * in_bases[i].size() + label_index(in_bases[i], e.in[i], ctx);
        std::size_t row = 0;
        for (std::size_t i = 0; i < out_bases.size(); ++i)
            row = row * out_bases[i].size() + label_index(out_bases[i], e.out[i], ctx);
        if (!m.entry_zero(row, col)) throw DefError(ctx + ": duplicate entry");
        m.set(row, col, coeff_of(f, e.coeff, ctx));
    }
    return m;
}

}  // namespace

Materialized build(const DefFile& df) {
    Materialized out;
    out.field = df.field;
    const Field& f = df.field;

    auto hopf_of = [&](const std::string& name, const std::string& ctx) -> HopfPtr {
        auto it = out.hopfs.find(name);
        if (it == out.hopfs.end()) throw DefError(ctx + ": unknown hopf '" + name + "'");
        return it->second;
    };
    auto algebra_of = [&](const std::string& name, const std::string& ctx) -> AlgebraPtr {
        auto it = out.algebras.find(name);
        if (it == out.algebras.end()) throw DefError(ctx + ": unknown algebra '" + name + "'");
        return it->second;
    };

    for (const auto& blk : df.blocks) {
        if (auto* h = std::get_if<HopfDef>(&blk)) {
            if (out.hopfs.count(h->name)) throw DefError(h->name + ": duplicate name");
            Hopf hh;
            hh.name = h->name;
            hh.k = f;
            hh.space = VectorSpace::with_labels(h->basis);
            VectorSpace pair = VectorSpace::tensor(hh.space, hh.space);
            VectorSpace line = VectorSpace::line();
            hh.mult = LinMap(pair, hh.space, table(f, h->mult, {h->basis, h->basis}, {h->basis}, h->name));
            hh.unit = LinMap(line, hh.space, table(f, h->unit, {}, {h->basis}, h->name));
            hh.comult = LinMap(hh.space, pair, table(f, h->comult, {h->basis}, {h->basis, h->basis}, h->name));
            hh.counit = LinMap(hh.space, line, table(f, h->counit, {h->basis}, {}, h->name));
            hh.antipode = LinMap(hh.space, hh.space, table(f, h->antipode, {h->basis}, {h->basis}, h->name));
            out.hopfs[h->name] = std::make_shared<Hopf>(std::move(hh));
            out.order.push_back(h->name);
        } else if (auto* c = std::get_if<ComoduleDef>(&blk)) {
            if (out.comodules.count(c->name)) throw DefError(c->name + ": duplicate name");
            HopfPtr H = hopf_of(c->hopf, c->name);
            Comodule cm;
            cm.name = c->name;
            cm.H = H;
            cm.space = VectorSpace::with_labels(c->basis);
            cm.rho = LinMap(cm.space, VectorSpace::tensor(cm.space, H->space),
                            table(f, c->coaction, {c->basis}, {c->basis, H->space.labels}, c->name));
            out.comodules[c->name] = std::move(cm);
            out.order.push_back(c->name);
        } else if (auto* a = std::get_if<AlgebraDef>(&blk)) {
            if (out.algebras.count(a->name)) throw DefError(a->name + ": duplicate name");
            HopfPtr H = hopf_of(a->hopf, a->name);
            ComoduleAlgebra ca;
            ca.under.name = a->name;
            ca.under.H = H;
            ca.under.space = VectorSpace::with_labels(a->basis);
            ca.under.rho = LinMap(ca.under.space, VectorSpace::tensor(ca.under.space, H->space),
                                  table(f, a->coaction, {a->basis}, {a->basis, H->space.labels}, a->name));
            ca.mult = LinMap(VectorSpace::tensor(ca.under.space, ca.under.space), ca.under.space,
                             table(f, a->mult, {a->basis, a->basis}, {a->basis}, a->name));
            ca.unit = LinMap(VectorSpace::line(), ca.under.space, table(f, a->unit, {}, {a->basis}, a->name));
            out.algebras[a->name] = std::make_shared<ComoduleAlgebra>(std::move(ca));
            out.order.push_back(a->name);
        } else if (auto* b = std::get_if<BialgebraDef>(&blk)) {
            if (out.bialgebras.count(b->name)) throw DefError(b->name + ": duplicate name");
            AlgebraPtr alg = algebra_of(b->algebra, b->name);
            const auto& basis = alg->under.space.labels;
            BialgebraInComod bi;
            bi.alg = alg;
            bi.comult = LinMap(alg->under.space, VectorSpace::tensor(alg->under.space, alg->under.space),
                               table(f, b->comult, {basis}, {basis, basis}, b->name));
            bi.counit = LinMap(alg->under.space, VectorSpace::line(), table(f, b->counit, {basis}, {}, b->name));
            if (!b->antipode.empty())
                bi.antipode = LinMap(alg->under.space, alg->under.space,
                                     table(f, b->antipode, {basis}, {basis}, b->name));
            out.bialgebras[b->name] = std::move(bi);
            out.order.push_back(b->name);
        } else if (auto* m = std::get_if<ModuleDef>(&blk)) {
            if (out.modules.count(m->name)) throw DefError(m->name + ": duplicate name");
            AlgebraPtr alg = algebra_of(m->algebra, m->name);
            HopfPtr H = alg->under.H;
            AModObject mo;
            mo.A = alg;
            mo.under.name = m->name;
            mo.under.H = H;
            mo.under.space = VectorSpace::with_labels(m->basis);
            mo.under.rho = LinMap(mo.under.space, VectorSpace::tensor(mo.under.space, H->space),
                                  table(f, m->coaction, {m->basis}, {m->basis, H->space.labels}, m->name));
            mo.action = LinMap(VectorSpace::tensor(alg->under.space, mo.under.space), mo.under.space,
                               table(f, m->action, {alg->under.space.labels, m->basis}, {m->basis}, m->name));
            out.modules[m->name] = std::move(mo);
            out.order.push_back(m->name);
        } else if (auto* sp = std::get_if<StablePairDef>(&blk)) {
            if (out.stablepairs.count(sp->name)) throw DefError(sp->name + ": duplicate name");
            AlgebraPtr alg = algebra_of(sp->algebra, sp->name);
            HopfPtr H = alg->under.H;
            StableModComod sm;
            sm.A = alg;
            sm.under.name = sp->name;
            sm.under.H = H;
            sm.under.space = VectorSpace::with_labels(sp->basis);
            sm.under.rho = LinMap(sm.under.space, VectorSpace::tensor(sm.under.space, H->space),
                                  table(f, sp->coaction, {sp->basis}, {sp->basis, H->space.labels}, sp->name));
            sm.action = LinMap(VectorSpace::tensor(alg->under.space, sm.under.space), sm.under.space,
                               table(f, sp->action, {alg->under.space.labels, sp->basis}, {sp->basis}, sp->name));
            sm.acoaction =
                LinMap(sm.under.space, VectorSpace::tensor(alg->under.space, sm.under.space),
                       table(f, sp->acoaction, {sp->basis}, {alg->under.space.labels, sp->basis}, sp->name));
            out.stablepairs[sp->name] = std::move(sm);
            out.order.push_back(sp->name);
        } else if (auto* mp = std::get_if<MapDef>(&blk)) {
            if (out.maps.count(mp->name)) throw DefError(mp->name + ": duplicate name");
            auto s = out.comodules.find(mp->source);
            auto t = out.comodules.find(mp->target);
            if (s == out.comodules.end()) throw DefError(mp->name + ": unknown source comodule");
            if (t == out.comodules.end()) throw DefError(mp->name + ": unknown target comodule");
            MapFixture mf;
            mf.source = mp->source;
            mf.target = mp->target;
            mf.f = LinMap(s->second.space, t->second.space,
                          table(f, mp->entries, {s->second.space.labels}, {t->second.space.labels}, mp->name));
            out.maps[mp->name] = std::move(mf);
            out.order.push_back(mp->name);
        } else if (auto* cm = std::get_if<CyclicModuleDef>(&blk)) {
            if (out.cyclicmodules.count(cm->name)) throw DefError(cm->name + ": duplicate name");
            HopfPtr H = hopf_of(cm->hopf, cm->name);
            ParaCyclicComodule X;
            X.H = H;
            X.N = cm->maxdeg;
            X.level.resize(cm->maxdeg + 1);
            for (std::size_t n = 0; n <= cm->maxdeg; ++n) {
                auto it = cm->basis.find(static_cast<int>(n));
                if (it == cm->basis.end())
                    throw DefError(cm->name + ": missing basis@" + std::to_string(n));
                Comodule lvl;
                lvl.name = cm->name + "@" + std::to_string(n);
                lvl.H = H;
                lvl.space = VectorSpace::with_labels(it->second);
                std::vector<Entry> co;
                for (auto& e : cm->coaction)
                    if (e.deg == static_cast<int>(n)) co.push_back(e);
                lvl.rho = LinMap(lvl.space, VectorSpace::tensor(lvl.space, H->space),
                                 table(f, co, {it->second}, {it->second, H->space.labels}, cm->name));
                X.level[n].space = lvl;
            }
            for (std::size_t n = 0; n <= cm->maxdeg; ++n) {
                if (n >= 1) X.level[n].d.resize(n + 1, LinMap());
                if (n + 1 <= cm->maxdeg) X.level[n].s.resize(n + 1, LinMap());
            }
            for (auto& op : cm->ops) {
                std::size_t n = static_cast<std::size_t>(op.deg);
                if (n > cm->maxdeg) throw DefError(cm->name + ": op degree out of range");
                const auto& src = cm->basis.at(op.deg);
                auto mk = [&](int target_deg) {
                    const auto& dst = cm->basis.at(target_deg);
                    return LinMap(X.level[n].space.space, X.level[target_deg].space.space,
                                  table(f, op.entries, {src}, {dst}, cm->name));
                };
                if (op.kind == 'd') {
                    if (n == 0 || op.i < 0 || static_cast<std::size_t>(op.i) > n)
                        throw DefError(cm->name + ": face index out of range");
                    X.level[n].d[op.i] = mk(static_cast<int>(n) - 1);
                } else if (op.kind == 's') {
                    if (n + 1 > cm->maxdeg || op.i < 0 || static_cast<std::size_t>(op.i) > n)
                        throw DefError(cm->name + ": degeneracy index out of range");
                    X.level[n].s[op.i] = mk(static_cast<int>(n) + 1);
                } else if (op.kind == 't') {
                    X.level[n].t = mk(static_cast<int>(n));
                } else {
                    X.level[n].tinv = mk(static_cast<int>(n));
                }
            }
            // verify every operator slot was filled
            for (std::size_t n = 0; n <= cm->maxdeg; ++n) {
                if (X.level[n].t.m.rows() == 0) throw DefError(cm->name + ": missing t@" + std::to_string(n));
                for (std::size_t i = 0; i < X.level[n].d.size(); ++i)
                    if (X.level[n].d[i].m.rows() == 0)
                        throw DefError(cm->name + ": missing d" + std::to_string(i) + "@" + std::to_string(n));
                for (std::size_t i = 0; i < X.level[n].s.size(); ++i)
                    if (X.level[n].s[i].m.rows() == 0)
                        throw DefError(cm->name + ": missing s" + std::to_string(i) + "@" + std::to_string(n));
            }
            out.cyclicmodules[cm->name] = std::move(X);
            out.order.push_back(cm->name);
        }
    }
    return out;
}

}  // namespace cohopf
