#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "lusym/ggp.hpp"
#include "lusym/rep.hpp"
#include "lusym/symbol.hpp"
#include "lusym/theta.hpp"

namespace lusym::io {

using json = nlohmann::ordered_json;

// Grammar errors carry the offending position for diagnostics.
struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

inline std::vector<int> parse_int_list(const std::string& s, std::size_t base) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected digit", base + i);
        std::size_t j = i;
        long v = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            v = v * 10 + (s[j] - '0');
            if (v > 1000000)
                throw ParseError("entry too large", base + i);
            ++j;
        }
        out.push_back(static_cast<int>(v));
        i = j;
        if (i < s.size()) {
            if (s[i] != ',')
                throw ParseError("expected ','", base + i);
            ++i;
            if (i == s.size())
                throw ParseError("trailing ','", base + i - 1);
        }
    }
    return out;
}

} // namespace detail

// Partition grammar: comma-separated parts; "-" or "[]" (or nothing) for the
// zero partition.
inline std::string format_partition(const Partition& p) {
    if (p.empty())
        return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.length(); ++i)
        os << (i ? "," : "") << p.parts()[i];
    return os.str();
}

inline Partition parse_partition(const std::string& s, std::size_t base = 0) {
    if (s.empty() || s == "-" || s == "[]")
        return {};
    try {
        return Partition(detail::parse_int_list(s, base));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), base);
    }
}

// Bipartition grammar: "upper|lower".
inline std::string format_bipartition(const Bipartition& b) {
    return format_partition(b.upper) + "|" + format_partition(b.lower);
}

inline Bipartition parse_bipartition(const std::string& s) {
    auto bar = s.find('|');
    if (bar == std::string::npos)
        throw ParseError("bipartition needs 'upper|lower'", s.size());
    return {parse_partition(s.substr(0, bar), 0),
            parse_partition(s.substr(bar + 1), bar + 1)};
}

// Symbol grammar (bit-exact): "top;bottom", rows as comma-separated
// decreasing naturals, "-" for an empty row. E.g. "2,1,0;-".
inline std::string format_symbol(const Symbol& s) {
    auto row = [](const std::vector<int>& r) {
        if (r.empty())
            return std::string("-");
        std::ostringstream os;
        for (std::size_t i = 0; i < r.size(); ++i)
            os << (i ? "," : "") << r[i];
        return os.str();
    };
    return row(s.top()) + ";" + row(s.bottom());
}

inline Symbol parse_symbol(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos)
        throw ParseError("symbol needs 'top;bottom'", s.size());
    auto parse_row = [&](const std::string& r, std::size_t base) -> std::vector<int> {
        if (r == "-")
            return {};
        if (r.empty())
            throw ParseError("empty row must be written '-'", base);
        return detail::parse_int_list(r, base);
    };
    try {
        return Symbol(parse_row(s.substr(0, semi), 0),
                      parse_row(s.substr(semi + 1), semi + 1));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

inline json symbol_to_json(const Symbol& s) {
    return json{{"top", s.top()}, {"bottom", s.bottom()}};
}

inline Symbol symbol_from_json(const json& j) {
    if (j.is_string())
        return parse_symbol(j.get<std::string>());
    return Symbol(j.at("top").get<std::vector<int>>(),
                  j.at("bottom").get<std::vector<int>>());
}

inline json group_to_json(const GroupTag& g) {
    json j{{"kind", kind_name(g.kind)}, {"n", g.n}};
    if (g.eps)
        j["eps"] = std::string(1, sign_char(*g.eps));
    return j;
}

inline GroupKind parse_kind(const std::string& s) {
    if (s == "Sp") return GroupKind::Sp;
    if (s == "OEven") return GroupKind::OEven;
    if (s == "OOdd") return GroupKind::OOdd;
    throw std::invalid_argument("group kind must be Sp, OEven or OOdd; got " + s);
}

inline GroupTag group_from_json(const json& j) {
    GroupTag g;
    g.kind = parse_kind(j.at("kind").get<std::string>());
    g.n = j.at("n").get<int>();
    if (j.contains("eps"))
        g.eps = parse_sign(j.at("eps").get<std::string>());
    return g;
}

inline json rho_to_json(const RhoDatum& r) {
    json arr = json::array();
    for (const auto& [id, l] : r.labels()) {
        json e{{"id", l.id},
               {"card", l.card},
               {"unitary", l.unitary},
               {"neg", l.neg},
               {"central", std::string(1, sign_char(l.central))},
               {"partition", format_partition(r.part(id))}};
        arr.push_back(std::move(e));
    }
    return arr;
}

inline RhoDatum rho_from_json(const json& arr, bool cuspidal = false) {
    RhoDatum r;
    for (const auto& e : arr) {
        OrbitLabel l;
        l.id = e.at("id").get<std::string>();
        l.card = e.at("card").get<int>();
        l.unitary = e.at("unitary").get<bool>();
        l.neg = e.at("neg").get<std::string>();
        l.central = parse_sign(e.at("central").get<std::string>());
        r.declare(l);
    }
    for (const auto& e : arr) {
        Partition p = parse_partition(e.at("partition").get<std::string>());
        if (!p.empty())
            r.set_part(e.at("id").get<std::string>(), p);
    }
    r.set_cuspidal_flag(cuspidal);
    return r;
}

inline json irrep_to_json(const Irrep& p) {
    json j;
    j["group"] = group_to_json(p.group);
    j["rho"] = rho_to_json(p.rho);
    j["lambda1"] = format_symbol(p.lambda1);
    j["lambdam1"] = format_symbol(p.lambdam1);
    if (p.iota)
        j["iota"] = std::string(1, sign_char(*p.iota));
    if (p.rho.cuspidal_flag())
        j["rho_cuspidal"] = true;
    return j;
}

inline Irrep irrep_from_json(const json& j) {
    Irrep p;
    p.group = group_from_json(j.at("group"));
    bool cusp = j.value("rho_cuspidal", false);
    if (j.contains("rho"))
        p.rho = rho_from_json(j.at("rho"), cusp);
    p.lambda1 = symbol_from_json(j.at("lambda1"));
    p.lambdam1 = symbol_from_json(j.at("lambdam1"));
    if (j.contains("iota"))
        p.iota = parse_sign(j.at("iota").get<std::string>());
    return p;
}

inline json tuple_to_json(const LusztigTuple& t) {
    json j;
    j["rho"] = rho_to_json(t.rho);
    j["lambda1"] = format_symbol(t.l1);
    j["lambdam1"] = format_symbol(t.lm1);
    if (t.iota)
        j["iota"] = std::string(1, sign_char(*t.iota));
    return j;
}

inline json tagged_tuple_to_json(const TaggedTuple& t) {
    json j = tuple_to_json(t.data);
    j["group"] = group_to_json(t.group);
    return j;
}

} // namespace lusym::io
