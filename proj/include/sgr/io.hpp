#pragma once

#include <string>

#include <json.hpp>

#include "sgr/classify.hpp"
#include "sgr/criteria.hpp"
#include "sgr/gluing.hpp"
#include "sgr/search.hpp"
#include "sgr/semigroup.hpp"

namespace sgr {

using json = nlohmann::ordered_json;

inline json degree_json(Deg d) { return d; }
inline json degree_json(const Vec& d) { return json(d); }

template <class D>
json to_json(const BettiTable<D>& t) {
    json degrees = json::object();
    for (int i = 1; i <= t.pd(); ++i) {
        json level = json::array();
        for (const D& d : t.at(i)) level.push_back(degree_json(d));
        degrees[std::to_string(i)] = level;
    }
    return json{{"pd", t.pd()}, {"degrees", degrees}};
}

template <class D>
json to_json(const Witness<D>& w) {
    json j{{"i", w.index},
           {"a", degree_json(w.a)},
           {"b", degree_json(w.b)},
           {"diff", degree_json(w.diff)}};
    if (w.duplicate)
        j["certificate"] = "duplicate";
    else if (w.certificate)
        j["certificate"] = json(*w.certificate);
    else
        j["certificate"] = nullptr;
    return j;
}

template <class D>
json to_json(const Verdict<D>& v) {
    json ws = json::array();
    for (const auto& w : v.witnesses) ws.push_back(to_json(w));
    return json{{"holds", v.holds}, {"witnesses", ws}};
}

inline json to_json(const GluingSpec& g) {
    return json{{"s1", g.s1.generators()}, {"s2", g.s2.generators()},
                {"a", g.a},               {"b", g.b},
                {"glued", g.glued.generators()}, {"alpha", g.alpha}};
}

inline json to_json(const ExtensionSpec<NumericalSemigroup>& e) {
    return json{{"base", e.base.generators()}, {"ell", e.ell},   {"m", e.m},
                {"u", e.u},                    {"extended", e.extended.generators()},
                {"alpha", e.alpha}};
}

inline json to_json(const ExtensionSpec<AffineSemigroup>& e) {
    return json{{"base", e.base.generators()}, {"ell", e.ell},   {"m", e.m},
                {"u", e.u},                    {"extended", e.extended.generators()},
                {"alpha", e.alpha}};
}

inline json to_json(const GapData& gd) {
    return json{{"gaps", gd.gaps},
                {"frobenius", gd.frobenius},
                {"genus", gd.genus},
                {"pseudo_frobenius", gd.pseudo_frobenius}};
}

inline json to_json(const HerzogData& h) {
    json cross = json::object();
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != q)
                cross[std::to_string(p + 1) + std::to_string(q + 1)] = h.cross[p][q];
    return json{{"alpha", h.alpha}, {"cross", cross}, {"d", h.d}, {"b", h.b}};
}

inline json to_json(const BresinskyData& b) {
    json cross{{"21", b.c21}, {"31", b.c31}, {"32", b.c32}, {"42", b.c42},
               {"13", b.c13}, {"43", b.c43}, {"14", b.c14}, {"24", b.c24}};
    return json{{"alpha", b.alpha},
                {"cross", cross},
                {"m", b.m},
                {"d", b.d},
                {"generators", b.semigroup.generators()}};
}

inline json to_json(const SearchWindow& w) {
    return json{{"a_max", w.a_max}, {"b_max", w.b_max}, {"rationale", w.rationale}};
}

}  // namespace sgr
