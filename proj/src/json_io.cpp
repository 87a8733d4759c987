#include "kalu/json_io.hpp"

#include <utility>

namespace kalu {

namespace {

std::string join(const CondVector& v) {
    std::string out;
    for (size_t a = 0; a < v.size(); ++a) {
        if (a) out += ',';
        out += std::to_string(v[a]);
    }
    return out;
}

CondVector split_ints(const std::string& s, const std::string& what) {
    CondVector out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        const size_t comma = s.find(',', start);
        const std::string piece = s.substr(start, comma - start);
        size_t used = 0;
        try {
            out.push_back(std::stoi(piece, &used));
        } catch (const std::exception&) {
            throw validation_error("bad integer '" + piece + "' in " + what);
        }
        if (used != piece.size())
            throw validation_error("bad integer '" + piece + "' in " + what);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Integer integer_from(const Json& j, const std::string& context) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
            throw validation_error("bad coefficient '" + j.get<std::string>() + "' in " + context);
        }
    }
    throw validation_error("coefficient in " + context + " must be a decimal string");
}

}  // namespace

std::string dump(const Json& j) { return j.dump(); }

const Json& require_field(const Json& j, const std::string& name) {
    if (!j.is_object()) throw validation_error("expected an object with field '" + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw validation_error("missing field '" + name + "'");
    return *it;
}

int int_field(const Json& j, const std::string& name) {
    const Json& f = require_field(j, name);
    if (!f.is_number_integer()) throw validation_error("field '" + name + "' must be an integer");
    return f.get<int>();
}

std::vector<int> int_vector(const Json& j, const std::string& context) {
    if (!j.is_array()) throw validation_error(context + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const Json& item : j) {
        if (!item.is_number_integer())
            throw validation_error(context + " must contain only integers");
        out.push_back(item.get<int>());
    }
    return out;
}

std::vector<int> vector_field(const Json& j, const std::string& name) {
    return int_vector(require_field(j, name), "field '" + name + "'");
}

Json to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, c.str()}));
    return arr;
}

IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw validation_error("a polynomial must be an array of [exponent, coefficient] pairs");
    IntPoly out;
    for (const Json& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
            throw validation_error("a polynomial term must be an [exponent, coefficient] pair");
        out.add_term(item[0].get<int>(), integer_from(item[1], "polynomial term"));
    }
    return out;
}

Json to_json(const SchubertDatum& d) {
    return Json{{"k", d.k}, {"l", d.l}, {"I", d.I}, {"J", d.J}};
}

SchubertDatum datum_from_json(const Json& j) {
    return SchubertDatum{int_field(j, "k"), int_field(j, "l"),
                         vector_field(j, "I"), vector_field(j, "J")};
}

Json to_json(const EssentialPair& e) {
    return Json{{"positions", e.positions}, {"I", e.i_bar}, {"J", e.j_bar}, {"p", e.p_bar}};
}

Json to_json(const FiberReport& r) {
    return Json{{"a", to_json(r.a)},     {"dim_f", r.dim_f}, {"h_g", to_json(r.h_g)},
                {"dim_g", r.dim_g},      {"m", r.m},         {"b_form", r.b_form},
                {"epsilon", r.epsilon}};
}

Json to_json(const Cell& c) {
    return Json{{"a", to_json(c.a)}, {"r", to_json(c.r)}, {"g", to_json(c.g)},
                {"b", to_json(c.b)}, {"m", c.m}};
}

Cell cell_from_json(const Json& j) {
    Cell c;
    c.a = poly_from_json(require_field(j, "a"));
    c.r = poly_from_json(require_field(j, "r"));
    c.g = poly_from_json(require_field(j, "g"));
    c.b = poly_from_json(require_field(j, "b"));
    c.m = int_field(j, "m");
    return c;
}

Json to_json(const SmallnessReport& r) {
    return Json{{"pi_small", r.pi_small},
                {"xi_small", r.xi_small},
                {"pi_failing", r.pi_failing},
                {"xi_failing", r.xi_failing}};
}

Json to_json(const DecompositionReport& r) {
    Json entries = Json::array();
    for (const DecompositionEntry& e : r.entries) {
        Json mults = Json::array();
        for (const auto& [shift, count] : e.multiplicities)
            mults.push_back(Json::array({shift, count.str()}));
        entries.push_back(Json{{"q", e.q}, {"g", to_json(e.g)}, {"multiplicities", mults}});
    }
    return Json{{"datum", to_json(r.datum)}, {"dim", r.dim}, {"entries", entries}};
}

Json to_json(const ScanRow& row) {
    return Json{{"q", row.q},       {"m", row.m},
                {"dim_f", row.dim_f}, {"relevant", row.relevant},
                {"g", to_json(row.g)}, {"silent", row.silent}};
}

Json to_json(const std::vector<ScanRow>& rows) {
    Json arr = Json::array();
    for (const ScanRow& row : rows) arr.push_back(to_json(row));
    return arr;
}

Json to_json(const VerifyReport& r) {
    return Json{{"mode", r.mode},
                {"passed", r.passed},
                {"checked", r.checked},
                {"failures", r.failures}};
}

std::string pair_key(const PairKey& key) {
    return join(key.first) + "|" + join(key.second);
}

PairKey pair_key_from_text(const std::string& s) {
    const size_t bar = s.find('|');
    if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
        throw validation_error("bad pair key '" + s + "'");
    return {split_ints(s.substr(0, bar), "pair key"),
            split_ints(s.substr(bar + 1), "pair key")};
}

Json to_json(const KaLuTable& table) {
    Json cells = Json::object();
    for (const auto& [key, c] : table.cells()) cells[pair_key(key)] = to_json(c);
    Json aliases = Json::object();
    for (const auto& [key, target] : table.aliases()) aliases[pair_key(key)] = pair_key(target);
    return Json{{"datum", to_json(table.context().datum)},
                {"base", to_json(table.context().base)},
                {"cells", cells},
                {"aliases", aliases}};
}

void load_table(KaLuTable& table, const Json& j) {
    const SchubertDatum datum = datum_from_json(require_field(j, "datum"));
    const Json& base = require_field(j, "base");
    EssentialPair pair;
    pair.positions = vector_field(base, "positions");
    pair.i_bar = vector_field(base, "I");
    pair.j_bar = vector_field(base, "J");
    pair.p_bar = vector_field(base, "p");
    if (datum != table.context().datum || pair != table.context().base)
        throw validation_error("stored table was computed for a different variety");

    std::map<PairKey, Cell> cells;
    const Json& jc = require_field(j, "cells");
    if (!jc.is_object()) throw validation_error("field 'cells' must be an object");
    for (const auto& [key, value] : jc.items())
        cells.emplace(pair_key_from_text(key), cell_from_json(value));

    std::map<PairKey, PairKey> aliases;
    const Json& ja = require_field(j, "aliases");
    if (!ja.is_object()) throw validation_error("field 'aliases' must be an object");
    for (const auto& [key, value] : ja.items()) {
        if (!value.is_string()) throw validation_error("alias targets must be pair keys");
        aliases.emplace(pair_key_from_text(key), pair_key_from_text(value.get<std::string>()));
    }
    table.adopt(std::move(cells), std::move(aliases));
}

}  // namespace kalu
