#ifndef HIRZ_COMMANDS_HPP_
#define HIRZ_COMMANDS_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include "hirz/bundle_family.hpp"
#include "hirz/hilbert_component.hpp"
#include "hirz/scroll_invariants.hpp"
#include "hirz/serialize.hpp"
#include "hirz/surface_lattice.hpp"
#include "hirz/verify.hpp"

namespace hirz::cli {

/* Front-end commands. Each writes its rendering to `out`, diagnostics to
 * `err`, and returns the process exit code:
 *   0 success, 1 invalid parameters, 2 vanishing hypotheses unsatisfied,
 *   3 internal-consistency or identity failure. */

enum class OutputFormat { plain, json, csv };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "plain") return OutputFormat::plain;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw DomainError("unknown format '" + s + "' (expected plain, json or csv)");
}

inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const HypothesisError& ex) {
        err << "error: " << ex.what() << "\n";
        for (const auto& flag : ex.failing_flags()) err << "  failing: " << flag << "\n";
        return ex.exit_code();
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return ex.exit_code();
    } catch (const std::exception& ex) {
        err << "internal error: " << ex.what() << "\n";
        return static_cast<int>(ErrorClass::consistency);
    }
}

namespace detail {

inline const char* yes_no(bool v) { return v ? "yes" : "no"; }

inline std::string opt_str(const std::optional<Int>& v) { return v ? std::to_string(*v) : "-"; }

inline std::string h_str(const ThreefoldCohomology& h) {
    return "(" + std::to_string(h.h0) + ", " + std::to_string(h.h1) + ", " + std::to_string(h.h2) + ", " +
           std::to_string(h.h3) + ")";
}

inline TableRow table_row(const FamilyParams& p) {
    const UniformityEvidence ev = is_uniform(p);
    TableRow row{p,     embedding_dimension(p), scroll_degree(p), chern(p).c2, ev.r, ev.ell2, ev.ell3,
                 bundle_cohomology(p).h0, p.paper_regime(), std::nullopt, std::nullopt};
    if (row.paper_regime) {
        const HilbertReport hr = component_dimension(p);
        row.dim = hr.dim_component;
        row.codim = hr.codim_scroll_locus;
    }
    return row;
}

inline void plain_hilbert(std::ostream& out, const HilbertReport& hr) {
    out << "hilbert scheme:\n"
        << "  flags: paper_regime=" << yes_no(hr.flags.paper_regime) << " v1=" << yes_no(hr.flags.v1)
        << " v2=" << yes_no(hr.flags.v2) << " v3=" << yes_no(hr.flags.v3) << "\n"
        << "  chi(N) = " << hr.chiN << (hr.hN ? "" : "  (Euler characteristic only)") << "\n";
    if (hr.hN) out << "  h^i(N) = " << h_str(*hr.hN) << "\n";
    if (hr.hTX) out << "  h^i(T_X) = " << h_str(*hr.hTX) << ", chi(T_X) = " << *hr.chiTX << "\n";
    out << "  dim component = " << opt_str(hr.dim_component) << "\n"
        << "  codim scroll locus = " << opt_str(hr.codim_scroll_locus) << "\n";
}

} // namespace detail

inline int cmd_report(Int e, Int b, Int t, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const FamilyParams p = validate_params(e, b, t);
        const ScrollReport sr = scroll_report(p);
        const CohomologyTable hE = bundle_cohomology(p);
        const IntersectionNumbers in = intersection_numbers(p);
        const UniformityEvidence ev = is_uniform(p);
        const auto type = splitting_type(p);
        const SplitBundle split = build_split(p);
        const Surface s = p.surface();
        const std::optional<HilbertReport> hr =
            p.paper_regime() ? std::optional<HilbertReport>(component_dimension(p)) : std::nullopt;

        switch (fmt) {
        case OutputFormat::json: {
            json j{{"params", to_json(p)},
                   {"scroll", to_json(sr, hE, in)},
                   {"uniformity", to_json(ev, type)}};
            if (hr) j["hilbert"] = to_json(*hr);
            json checks = json::array({"chern presentations agree", "h0(E) closed form",
                                       "d = c1^2 - c2 = xi^3", "intersection numbers closed forms",
                                       "P(m) = chi(Sym^m E)", "uniformity l-tests"});
            if (hr) checks.push_back("euler sequence identity");
            j["checks"] = checks;
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            out << kTableHeader << "\n" << csv_line(detail::table_row(p)) << "\n";
            break;
        case OutputFormat::plain:
            out << "params: e=" << e << " b=" << b << " t=" << t << "\n"
                << "n = " << sr.n << "\n"
                << "d = " << sr.d << "\n"
                << "c1(E) = " << sr.chern.c1.str() << ", c2(E) = " << sr.chern.c2 << "\n"
                << "A = " << split.A.str() << ", B = " << split.B.str() << "\n"
                << "r = " << ev.r << ", splitting type = (" << type.first << "," << type.second
                << "), l(d1=3) = " << ev.ell3 << ", l(d1=2) = " << ev.ell2 << ", uniform = "
                << detail::yes_no(ev.uniform) << "\n"
                << "h^i(A) = " << cohomology(s, split.A) << "\n"
                << "h^i(B) = " << cohomology(s, split.B) << "\n"
                << "h^i(E) = " << hE << "\n"
                << "h^i(X, L) = " << detail::h_str(sr.h_of_L) << "\n"
                << "intersection numbers: L^3=" << in.L3 << " KL^2=" << in.KL2 << " K^2L=" << in.K2L
                << " K^3=" << in.K3 << " c2L=" << in.c2L << " Kc2=" << in.Kc2 << " c3=" << in.c3 << "\n"
                << "P(m) = " << sr.hilbert_poly.str() << "\n";
            if (hr) detail::plain_hilbert(out, *hr);
            break;
        }
        return 0;
    });
}

/// b defaults to 2e+3+t; `force_b` overrides it and the report is flag-gated.
inline int cmd_hilbert(Int e, Int t, std::optional<Int> force_b, OutputFormat fmt, std::ostream& out,
                       std::ostream& err) {
    return guarded(err, [&] {
        if (e < 0) throw DomainError("e >= 0 violated: e = " + std::to_string(e));
        const Int b = force_b ? *force_b : 2 * e + 3 + t;
        const FamilyParams p = validate_params(e, b, t);
        const HilbertReport hr = force_b ? hilbert_report(p) : component_dimension(p);
        if (!hr.flags.vanishing()) hirz::detail::require(hr.flags, false, "hilbert at " + p.str());

        switch (fmt) {
        case OutputFormat::json: {
            json j{{"params", to_json(p)},
                   {"scroll", json{{"n", hr.n}, {"d", hr.d}}},
                   {"hilbert", to_json(hr)},
                   {"uniformity", to_json(is_uniform(p), splitting_type(p))},
                   {"checks", json::array({"chi(N) closed forms", "euler sequence identity"})}};
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv: {
            out << "e,b,t,n,d,chiN,dim,codim,hTX0,hTX1,chiTX\n";
            out << e << "," << b << "," << t << "," << hr.n << "," << hr.d << "," << hr.chiN << ","
                << (hr.dim_component ? std::to_string(*hr.dim_component) : "") << ","
                << (hr.codim_scroll_locus ? std::to_string(*hr.codim_scroll_locus) : "") << ","
                << (hr.hTX ? std::to_string(hr.hTX->h0) : "") << ","
                << (hr.hTX ? std::to_string(hr.hTX->h1) : "") << ","
                << (hr.chiTX ? std::to_string(*hr.chiTX) : "") << "\n";
            break;
        }
        case OutputFormat::plain:
            out << "params: e=" << e << " b=" << b << " t=" << t << "\n"
                << "n = " << hr.n << ", d = " << hr.d << "\n"
                << "dim = " << detail::opt_str(hr.dim_component) << "\n"
                << "codim = " << detail::opt_str(hr.codim_scroll_locus) << "\n";
            detail::plain_hilbert(out, hr);
            break;
        }
        return 0;
    });
}

inline int cmd_cohomology(Int e, Int a, Int c, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Surface s(e);
        const DivisorClass D{a, c};
        const CohomologyTable h = cohomology(s, D);
        switch (fmt) {
        case OutputFormat::json:
            out << json{{"params", json{{"e", e}, {"a", a}, {"c", c}}}, {"cohomology", to_json(h)}}.dump(2)
                << "\n";
            break;
        case OutputFormat::csv:
            out << "e,a,c,h0,h1,h2,chi\n"
                << e << "," << a << "," << c << "," << h.h0 << "," << h.h1 << "," << h.h2 << "," << h.chi << "\n";
            break;
        case OutputFormat::plain:
            out << "F_" << e << ", D = " << D.str() << "\n"
                << "h0 = " << h.h0 << "\nh1 = " << h.h1 << "\nh2 = " << h.h2 << "\nchi = " << h.chi << "\n";
            break;
        }
        return 0;
    });
}

inline int cmd_table(Int e_max, Int t_max, bool paper_regime_only, OutputFormat fmt, std::ostream& out,
                     std::ostream& err) {
    return guarded(err, [&] {
        std::vector<TableRow> rows;
        for (const FamilyParams& p : parameter_grid(e_max, t_max, paper_regime_only))
            rows.push_back(detail::table_row(p));

        if (fmt == OutputFormat::json) {
            json arr = json::array();
            for (const auto& row : rows) arr.push_back(to_json(row));
            out << json{{"e_max", e_max}, {"t_max", t_max}, {"rows", arr}}.dump(2) << "\n";
        } else {
            // plain output is the CSV itself
            out << kTableHeader << "\n";
            for (const auto& row : rows) out << csv_line(row) << "\n";
        }
        return 0;
    });
}

inline int cmd_verify(Int e_max, Int t_max, Fault fault, OutputFormat fmt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (e_max < 0 || t_max < 0) throw DomainError("grid bounds must be >= 0");
        const VerifyResult res = run_verification({e_max, t_max, 12, fault});
        if (fmt == OutputFormat::json) {
            json failures = json::array();
            for (const auto& f : res.failures) failures.push_back(json{{"identity", f.identity}, {"at", f.detail}});
            out << json{{"checks", res.checks}, {"failures", failures}, {"ok", res.ok()}}.dump(2) << "\n";
        } else {
            for (const auto& f : res.failures) out << "FAIL  " << f.identity << "  [" << f.detail << "]\n";
            out << res.checks << " identities checked, " << res.failures.size() << " failed\n";
        }
        return res.ok() ? 0 : static_cast<int>(ErrorClass::consistency);
    });
}

} // namespace hirz::cli

#endif // HIRZ_COMMANDS_HPP_
