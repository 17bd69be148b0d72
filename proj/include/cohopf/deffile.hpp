#pragma once

#include <map>
#include <variant>

#include "cohopf/hopf_cyclic.hpp"

namespace cohopf {

/// Parse error with position information.
struct DefError : std::runtime_error {
    std::size_t line = 0;
    DefError(std::size_t line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    explicit DefError(const std::string& msg) : std::runtime_error(msg) {}
};

/// One sparse table entry: input labels -> output labels : coefficient.
struct Entry {
    std::vector<std::string> in, out;
    std::string coeff;
    int deg = -1;  // cyclicmodule entries carry a degree
};

struct HopfDef {
    std::string name;
    std::vector<std::string> basis;
    std::vector<Entry> mult, unit, comult, counit, antipode;
};

struct ComoduleDef {
    std::string name, hopf;
    std::vector<std::string> basis;
    std::vector<Entry> coaction;
};

struct AlgebraDef {
    std::string name, hopf;
    std::vector<std::string> basis;
    std::vector<Entry> coaction, mult, unit;
};

struct BialgebraDef {
    std::string name, algebra;
    std::vector<Entry> comult, counit, antipode;
};

struct ModuleDef {
    std::string name, algebra;
    std::vector<std::string> basis;
    std::vector<Entry> coaction, action;
};

struct StablePairDef {
    std::string name, algebra;
    std::vector<std::string> basis;
    std::vector<Entry> coaction, action, acoaction;
};

struct MapDef {
    std::string name, source, target;
    std::vector<Entry> entries;
};

struct CyclicModuleDef {
    std::string name, hopf;
    std::size_t maxdeg = 0;
    std::map<int, std::vector<std::string>> basis;  // per degree
    std::vector<Entry> coaction;                    // with deg set
    struct Op {
        char kind;  // 'd', 's', 't', 'i' (t inverse)
        int i = 0;
        int deg = 0;
        std::vector<Entry> entries;
    };
    std::vector<Op> ops;
};

using Block = std::variant<HopfDef, ComoduleDef, AlgebraDef, BialgebraDef, ModuleDef, StablePairDef, MapDef,
                           CyclicModuleDef>;

struct DefFile {
    Field field;
    std::vector<Block> blocks;
};

DefFile parse_deffile(const std::string& text);
DefFile parse_deffile_path(const std::string& path);

/// Canonical formatter: parse∘serialize is a fixed point, byte for byte.
std::string serialize(const DefFile& df);

struct MapFixture {
    std::string source, target;
    LinMap f;
};

/// Resolved engine objects, keyed by block name.
struct Materialized {
    Field field;
    std::vector<std::string> order;  // block names in declaration order
    std::map<std::string, HopfPtr> hopfs;
    std::map<std::string, Comodule> comodules;
    std::map<std::string, AlgebraPtr> algebras;
    std::map<std::string, BialgebraInComod> bialgebras;
    std::map<std::string, AModObject> modules;
    std::map<std::string, StableModComod> stablepairs;
    std::map<std::string, MapFixture> maps;
    std::map<std::string, ParaCyclicComodule> cyclicmodules;
};

Materialized build(const DefFile& df);

}  // namespace cohopf
