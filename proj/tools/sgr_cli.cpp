// Command-line front end: per-object reports, SIFRE checks, gluing and
// extension construction, and exhaustive searches over provably complete
// candidate windows.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgr/io.hpp"
#include "sgr/sgr.hpp"

namespace {

using sgr::Deg;
using sgr::json;

struct CommonOpts {
    bool as_json = false;
    bool strict_minimal = false;
    std::string out_file;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--json", opts.as_json, "emit JSON instead of text");
    cmd->add_flag("--strict-minimal", opts.strict_minimal,
                  "reject non-minimal generator input instead of reducing it");
    cmd->add_option("--out", opts.out_file, "append results to an NDJSON file, resume on rerun");
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Resume-and-skip store: one JSON object per line, keyed by input hash.
std::optional<json> lookup_result(const std::string& file, const std::string& key) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.value("key", "") == key) return j["result"];
    }
    return std::nullopt;
}

void append_result(const std::string& file, const std::string& key, const json& result) {
    std::ofstream out(file, std::ios::app);
    out << json{{"key", key}, {"result", result}}.dump() << "\n";
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int run(int argc, char** argv) {
    CLI::App app{"graded Betti degrees, gluings and strongly indispensable resolutions "
                 "of semigroup rings"};
    app.require_subcommand(1);

    std::string gens_text, affine_text, s1_text, s2_text, check = "sifre", cross_text, u_text;
    Deg arg_a = 0, arg_b = 0, arg_m = 0, arg_ell = 2, arg_mmax = 0;
    int arg_n = 2, arg_depth = 2;
    CommonOpts oinfo, obetti, osifre, oglue, oextend, oherzog, obres, oci, osx, osg;

    auto* cinfo = app.add_subcommand("info", "generators, gaps, Frobenius number, symmetry");
    cinfo->add_option("--gens", gens_text);
    cinfo->add_option("--affine-gens", affine_text);
    add_common(cinfo, oinfo);

    auto* cbetti = app.add_subcommand("betti", "graded Betti degrees via divisor complexes");
    cbetti->add_option("--gens", gens_text)->required();
    add_common(cbetti, obetti);

    auto* csifre = app.add_subcommand("sifre", "pairwise-difference SIFRE test");
    csifre->add_option("--gens", gens_text)->required();
    add_common(csifre, osifre);

    auto* cglue = app.add_subcommand("glue", "construct a numerical gluing and check it");
    cglue->add_option("--s1", s1_text)->required();
    cglue->add_option("--s2", s2_text)->required();
    cglue->add_option("--a", arg_a)->required();
    cglue->add_option("--b", arg_b)->required();
    cglue->add_option("--check", check)->check(CLI::IsMember({"sifre", "unique", "none"}));
    add_common(cglue, oglue);

    auto* cextend = app.add_subcommand("extend", "construct an extension and check it");
    cextend->add_option("--gens", gens_text)->required();
    cextend->add_option("--m", arg_m)->required();
    cextend->add_option("--ell", arg_ell);
    add_common(cextend, oextend);

    auto* cherzog = app.add_subcommand("herzog", "minimal-relation data of a 3-generated "
                                                 "non-symmetric semigroup");
    cherzog->add_option("--gens", gens_text)->required();
    add_common(cherzog, oherzog);

    auto* cbres = app.add_subcommand("bresinsky", "4-generated symmetric semigroup from "
                                                  "Bresinsky parameters");
    cbres->add_option("--cross", cross_text,
                      "c21,c31,c32,c42,c13,c43,c14,c24")->required();
    cbres->add_option("--u", u_text, "check the extension with m = sum u_p m_p");
    add_common(cbres, obres);

    auto* cci = app.add_subcommand("ci-family", "recursive complete-intersection family");
    cci->add_option("--n", arg_n);
    cci->add_option("--u", u_text)->required();
    cci->add_option("--depth", arg_depth);
    add_common(cci, oci);

    auto* csx = app.add_subcommand("search-extensions",
                                   "all extension degrees m admitting a SIFRE");
    csx->add_option("--gens", gens_text)->required();
    csx->add_option("--m-max", arg_mmax, "override the complete window bound");
    add_common(csx, osx);

    auto* csg = app.add_subcommand("search-gluings", "all gluing pairs (a,b) admitting a SIFRE");
    csg->add_option("--s1", s1_text)->required();
    csg->add_option("--s2", s2_text)->required();
    add_common(csg, osg);

    CLI11_PARSE(app, argc, argv);

    if (cinfo->parsed()) {
        if (!affine_text.empty()) {
            sgr::AffineSemigroup s(sgr::parse_affine_generator_list(affine_text),
                                   oinfo.strict_minimal);
            json j{{"ambient_dim", s.ambient_dim()}, {"generators", s.generators()}};
            std::ostringstream os;
            os << "affine semigroup in N^" << s.ambient_dim() << ", generators "
               << sgr::format_affine_generator_list(s.generators()) << "\n";
            emit(j, oinfo.as_json, os.str());
            return 0;
        }
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), oinfo.strict_minimal);
        json j{{"generators", s.generators()}, {"content", s.content()}};
        std::ostringstream os;
        os << "generators " << sgr::format_generator_list(s.generators()) << ", content "
           << s.content() << "\n";
        if (s.content() == 1) {
            auto gd = s.gap_data();
            j["gaps"] = gd.gaps;
            j["frobenius"] = gd.frobenius;
            j["genus"] = gd.genus;
            j["pseudo_frobenius"] = gd.pseudo_frobenius;
            j["symmetry"] = to_string(s.symmetry_class());
            os << "frobenius " << gd.frobenius << ", genus " << gd.genus << ", "
               << to_string(s.symmetry_class()) << "\n";
            os << "gaps " << sgr::format_generator_list(gd.gaps) << "\n";
            os << "pseudo-Frobenius " << sgr::format_generator_list(gd.pseudo_frobenius) << "\n";
        }
        emit(j, oinfo.as_json, os.str());
        return 0;
    }

    if (cbetti->parsed()) {
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), obetti.strict_minimal);
        auto t = sgr::betti_table(s);
        std::ostringstream os;
        os << "pd " << t.pd() << "\n";
        for (int i = 1; i <= t.pd(); ++i)
            os << "B" << i << " = {" << sgr::format_generator_list(t.at(i)) << "}\n";
        emit(sgr::to_json(t), obetti.as_json, os.str());
        return 0;
    }

    if (csifre->parsed()) {
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), osifre.strict_minimal);
        auto t = sgr::betti_table(s);
        auto v = sgr::is_sifre(t, s);
        json j{{"generators", s.generators()}, {"betti", sgr::to_json(t)},
               {"verdict", sgr::to_json(v)}};
        std::ostringstream os;
        os << (v.holds ? "SIFRE holds" : "SIFRE fails") << "\n";
        for (const auto& w : v.witnesses)
            os << "  witness i=" << w.index << " a=" << w.a << " b=" << w.b
               << (w.duplicate ? " duplicate" : (" diff=" + std::to_string(w.diff))) << "\n";
        emit(j, osifre.as_json, os.str());
        return v.holds ? 0 : 1;
    }

    if (cglue->parsed()) {
        sgr::NumericalSemigroup s1(sgr::parse_generator_list(s1_text), oglue.strict_minimal);
        sgr::NumericalSemigroup s2(sgr::parse_generator_list(s2_text), oglue.strict_minimal);
        auto g = sgr::glue_numerical(s1, s2, arg_a, arg_b);
        auto t1 = sgr::betti_table(s1);
        auto t2 = sgr::betti_table(s2);
        json j{{"gluing", sgr::to_json(g)},
               {"betti", sgr::to_json(sgr::glued_betti(g))}};
        bool holds = true;
        std::ostringstream os;
        os << "glued " << sgr::format_generator_list(g.glued.generators()) << ", alpha "
           << g.alpha << "\n";
        if (check != "none") {
            auto v = check == "sifre" ? sgr::gluing_has_sifre(g, t1, t2)
                                      : sgr::gluing_unique_presentation(g, t1, t2);
            holds = v.holds;
            j["check"] = check;
            j["verdict"] = sgr::to_json(v);
            os << check << ": " << (holds ? "holds" : "fails") << "\n";
        }
        emit(j, oglue.as_json, os.str());
        return holds ? 0 : 1;
    }

    if (cextend->parsed()) {
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), oextend.strict_minimal);
        auto e = sgr::extend(s, arg_m, arg_ell);
        auto t = sgr::betti_table(s);
        auto v = sgr::extension_has_sifre(e, t);
        json j{{"extension", sgr::to_json(e)},
               {"betti", sgr::to_json(sgr::extension_betti(e, t))},
               {"verdict", sgr::to_json(v)}};
        std::ostringstream os;
        os << "extended " << sgr::format_generator_list(e.extended.generators()) << ", alpha "
           << e.alpha << "\n"
           << "sifre: " << (v.holds ? "holds" : "fails") << "\n";
        emit(j, oextend.as_json, os.str());
        return v.holds ? 0 : 1;
    }

    if (cherzog->parsed()) {
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), oherzog.strict_minimal);
        auto h = sgr::herzog_data(s);
        auto coeffs = sgr::sifre_extension_coefficients(h);
        json j = sgr::to_json(h);
        json hits = json::array();
        std::ostringstream os;
        os << "alpha " << h.alpha[0] << "," << h.alpha[1] << "," << h.alpha[2] << "\n";
        for (int p = 0; p < 3; ++p)
            for (int q = 0; q < 3; ++q)
                if (p != q)
                    os << "alpha" << p + 1 << q + 1 << " = " << h.cross[p][q] << "\n";
        os << "d " << h.d[0] << "," << h.d[1] << "," << h.d[2] << "  b " << h.b[0] << ","
           << h.b[1] << "\n";
        if (coeffs.empty()) {
            os << "no SIFRE extension (some alpha_pq = 1)\n";
        } else {
            for (const auto& u : coeffs) {
                Deg m = 0;
                for (int p = 0; p < 3; ++p) m += u[static_cast<std::size_t>(p)] * h.m[static_cast<std::size_t>(p)];
                hits.push_back(json{{"u", u}, {"m", m}});
                os << "u = (" << sgr::format_generator_list(u) << "), m = " << m << "\n";
            }
        }
        j["sifre_extensions"] = hits;
        emit(j, oherzog.as_json, os.str());
        return 0;
    }

    if (cbres->parsed()) {
        auto c = sgr::parse_generator_list(cross_text);
        if (c.size() != 8) throw sgr::ConstraintViolation();
        auto b = sgr::bresinsky_semigroup(c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]);
        json j = sgr::to_json(b);
        std::ostringstream os;
        os << "m = " << b.m[0] << "," << b.m[1] << "," << b.m[2] << "," << b.m[3] << "\n";
        int rc = 0;
        if (!u_text.empty()) {
            auto uu = sgr::parse_generator_list(u_text);
            if (uu.size() != 4) throw sgr::ConstraintViolation();
            bool ok = sgr::bresinsky_extension_has_sifre(b, {uu[0], uu[1], uu[2], uu[3]});
            j["extension_has_sifre"] = ok;
            os << "extension with u = (" << u_text << "): " << (ok ? "holds" : "fails") << "\n";
            rc = ok ? 0 : 1;
        }
        emit(j, obres.as_json, os.str());
        return rc;
    }

    if (cci->parsed()) {
        auto u = sgr::parse_generator_list(u_text);
        auto steps = sgr::ci_family(static_cast<std::size_t>(arg_n), u, arg_depth);
        json j = json::array();
        std::ostringstream os;
        bool all_hold = true;
        for (std::size_t k = 0; k < steps.size(); ++k) {
            const auto& st = steps[k];
            auto v = sgr::is_sifre(st.table, st.semigroup);
            all_hold = all_hold && v.holds;
            j.push_back(json{{"j", k + 1},
                             {"generators", st.semigroup.generators()},
                             {"a_j", st.a_j},
                             {"betti", sgr::to_json(st.table)},
                             {"sifre", v.holds}});
            os << "E" << k + 1 << ": generators "
               << sgr::format_affine_generator_list(st.semigroup.generators()) << ", sifre "
               << (v.holds ? "holds" : "fails") << "\n";
        }
        emit(j, oci.as_json, os.str());
        return all_hold ? 0 : 1;
    }

    if (csx->parsed()) {
        sgr::NumericalSemigroup s(sgr::parse_generator_list(gens_text), osx.strict_minimal);
        const std::string key = std::to_string(
            fnv1a("search-extensions|" + sgr::format_generator_list(s.generators()) + "|" +
                  std::to_string(arg_mmax)));
        json j;
        if (!osx.out_file.empty()) {
            if (auto cached = lookup_result(osx.out_file, key)) j = *cached;
        }
        if (j.is_null()) {
            auto res = sgr::search_extensions(s, arg_mmax);
            json hits = json::array();
            for (const auto& h : res.hits) hits.push_back(json{{"m", h.m}, {"u", h.u}});
            j = json{{"generators", s.generators()},
                     {"m_max", res.m_max},
                     {"ell", "any ell >= 2 with gcd(ell, m) = 1"},
                     {"hits", hits}};
            if (!osx.out_file.empty()) append_result(osx.out_file, key, j);
        }
        std::ostringstream os;
        os << "window m <= " << j["m_max"] << "\n";
        for (const auto& h : j["hits"])
            os << "m = " << h["m"] << ", u = (" << h["u"].dump()
               << "), any ell >= 2 with gcd(ell, m) = 1\n";
        os << j["hits"].size() << " extension degree(s) admit a SIFRE\n";
        emit(j, osx.as_json, os.str());
        return 0;
    }

    if (csg->parsed()) {
        sgr::NumericalSemigroup s1(sgr::parse_generator_list(s1_text), osg.strict_minimal);
        sgr::NumericalSemigroup s2(sgr::parse_generator_list(s2_text), osg.strict_minimal);
        const std::string key = std::to_string(
            fnv1a("search-gluings|" + sgr::format_generator_list(s1.generators()) + "|" +
                  sgr::format_generator_list(s2.generators())));
        json j;
        if (!osg.out_file.empty()) {
            if (auto cached = lookup_result(osg.out_file, key)) j = *cached;
        }
        if (j.is_null()) {
            auto res = sgr::search_gluings(s1, s2);
            auto pairs_json = [](const std::vector<std::pair<Deg, Deg>>& ps) {
                json a = json::array();
                for (auto [x, y] : ps) a.push_back(json::array({x, y}));
                return a;
            };
            j = json{{"s1", s1.generators()},
                     {"s2", s2.generators()},
                     {"window", sgr::to_json(res.window)},
                     {"sifre", pairs_json(res.sifre)},
                     {"unique_presentation_only", pairs_json(res.unique_only)},
                     {"neither", pairs_json(res.neither)},
                     {"no_admissible_a", res.no_admissible_a}};
            if (!osg.out_file.empty()) append_result(osg.out_file, key, j);
        }
        std::ostringstream os;
        os << "window a <= " << j["window"]["a_max"] << ", b <= " << j["window"]["b_max"] << "\n";
        auto fmt = [&os](const char* label, const json& ps) {
            os << label << ":";
            for (const auto& p : ps) os << " (" << p[0] << "," << p[1] << ")";
            os << "\n";
        };
        fmt("sifre", j["sifre"]);
        fmt("unique-presentation only", j["unique_presentation_only"]);
        if (j["no_admissible_a"].get<bool>())
            os << "certified: no admissible a exists over the complete window\n";
        emit(j, osg.as_json, os.str());
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sgr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
