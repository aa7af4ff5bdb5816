#ifndef HIRZ_SERIALIZE_HPP_
#define HIRZ_SERIALIZE_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hirz/bundle_family.hpp"
#include "hirz/chow_ring.hpp"
#include "hirz/hilbert_component.hpp"
#include "hirz/scroll_invariants.hpp"

namespace hirz {

using json = nlohmann::ordered_json;

inline json to_json(const DivisorClass& d) { return json::array({d.a, d.c}); }

inline json to_json(const CohomologyTable& t) {
    return json{{"h0", t.h0}, {"h1", t.h1}, {"h2", t.h2}, {"chi", t.chi}};
}

inline json to_json(const ThreefoldCohomology& h) { return json::array({h.h0, h.h1, h.h2, h.h3}); }

inline json to_json(const FamilyParams& p) { return json{{"e", p.e()}, {"b", p.b()}, {"t", p.t()}}; }

/// [[num, den] x 4], ascending degree.
inline json to_json(const RationalCubic& poly) {
    json out = json::array();
    for (const Rational& q : poly.coefficients()) out.push_back(json::array({q.num(), q.den()}));
    return out;
}

inline RationalCubic rational_cubic_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw DomainError("hilbert polynomial must be a 4-element array");
    std::array<Rational, 4> coeffs{};
    for (std::size_t i = 0; i < 4; ++i) coeffs[i] = Rational(j[i].at(0).get<Int>(), j[i].at(1).get<Int>());
    return RationalCubic(coeffs);
}

inline json to_json(const IntersectionNumbers& in) {
    return json{{"L3", in.L3},   {"KL2", in.KL2}, {"K2L", in.K2L}, {"K3", in.K3},
                {"c2L", in.c2L}, {"Kc2", in.Kc2}, {"c3", in.c3}};
}

inline json to_json(const HypothesisFlags& f) {
    return json{{"paper_regime", f.paper_regime}, {"v1", f.v1}, {"v2", f.v2}, {"v3", f.v3}};
}

inline json to_json(const UniformityEvidence& ev, std::pair<Int, Int> type) {
    return json{{"uniform", ev.uniform},
                {"r", ev.r},
                {"ell3", ev.ell3},
                {"ell2", ev.ell2},
                {"splitting_type", json::array({type.first, type.second})}};
}

namespace detail {
template <class T>
json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, ThreefoldCohomology>) return to_json(*v);
    else return *v;
}
} // namespace detail

inline json to_json(const HilbertReport& r) {
    json j{{"params", to_json(r.params)},
           {"flags", to_json(r.flags)},
           {"n", r.n},
           {"d", r.d},
           {"chiN", r.chiN},
           {"dim_component", detail::optional_json(r.dim_component)},
           {"hN", detail::optional_json(r.hN)},
           {"hTX", detail::optional_json(r.hTX)},
           {"chiTX", detail::optional_json(r.chiTX)},
           {"codim_scroll_locus", detail::optional_json(r.codim_scroll_locus)}};
    if (!r.hN) j["chiN_note"] = "Euler characteristic only";
    return j;
}

inline json to_json(const ScrollReport& r, const CohomologyTable& hE, const IntersectionNumbers& in) {
    return json{{"n", r.n},
                {"d", r.d},
                {"c1", to_json(r.chern.c1)},
                {"c2", r.chern.c2},
                {"bundle_cohomology", to_json(hE)},
                {"h_of_L", to_json(r.h_of_L)},
                {"intersection_numbers", to_json(in)},
                {"hilbert_polynomial", to_json(r.hilbert_poly)}};
}

/// One line of the parameter grid.
struct TableRow {
    FamilyParams params;
    Int n = 0;
    Int d = 0;
    Int c2 = 0;
    Int r = 0;
    Int ell2 = 0;
    Int ell3 = 0;
    Int h0E = 0;
    bool paper_regime = false;
    std::optional<Int> dim;
    std::optional<Int> codim;
};

inline constexpr const char* kTableHeader =
    "e,b,t,n,d,c2,r,ell2,ell3,h0E,paper_regime,dim_or_blank,codim_or_blank";

inline std::string csv_line(const TableRow& row) {
    auto opt = [](const std::optional<Int>& v) { return v ? std::to_string(*v) : std::string(); };
    std::string s;
    for (Int v : {row.params.e(), row.params.b(), row.params.t(), row.n, row.d, row.c2, row.r, row.ell2,
                  row.ell3, row.h0E})
        s += std::to_string(v) + ",";
    s += row.paper_regime ? "true" : "false";
    s += "," + opt(row.dim) + "," + opt(row.codim);
    return s;
}

inline json to_json(const TableRow& row) {
    return json{{"e", row.params.e()}, {"b", row.params.b()},   {"t", row.params.t()},
                {"n", row.n},          {"d", row.d},            {"c2", row.c2},
                {"r", row.r},          {"ell2", row.ell2},      {"ell3", row.ell3},
                {"h0E", row.h0E},      {"paper_regime", row.paper_regime},
                {"dim", detail::optional_json(row.dim)},
                {"codim", detail::optional_json(row.codim)}};
}

} // namespace hirz

#endif // HIRZ_SERIALIZE_HPP_
