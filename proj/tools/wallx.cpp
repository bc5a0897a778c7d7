// wallx: batch front end for the toric quiver wall-crossing engine.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wallx/json_io.hpp"
#include "wallx/selftest.hpp"

namespace {

using namespace wallx;

struct GeomOpts {
    std::string geom;
    int N0 = 0, N1 = -1;
    std::string sigma;
};

void add_geometry_options(CLI::App* cmd, GeomOpts& o) {
    cmd->add_option("--geom", o.geom, "builtin name (conifold, c3, example12) or geometry JSON file");
    cmd->add_option("--N0", o.N0, "bottom row length");
    cmd->add_option("--N1", o.N1, "top row length");
    cmd->add_option("--sigma", o.sigma, "sigma as a JSON file or inline list x2:y,x2:y,...");
}

std::vector<SigmaEntry> parse_sigma_inline(const std::string& s) {
    std::vector<SigmaEntry> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail("BadShape", "sigma entries look like x2:y");
        out.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
    }
    return out;
}

Geometry resolve_geometry(const GeomOpts& o) {
    const bool by_name = !o.geom.empty();
    const bool by_flags = !o.sigma.empty() || o.N1 >= 0 || o.N0 > 0;
    if (by_name == by_flags)
        fail("BadShape", "exactly one geometry source: --geom, or --N0/--N1/--sigma");
    if (by_name) {
        if (o.geom == "conifold") return geometry_conifold();
        if (o.geom == "c3") return geometry_c3();
        if (o.geom == "example12") return geometry_example12();
        std::ifstream in(o.geom);
        if (!in) fail("BadShape", "cannot open geometry file or unknown builtin '" + o.geom + "'");
        Json j;
        in >> j;
        return geometry_from_json(j);
    }
    if (o.sigma.empty() || o.N1 < 0 || o.N0 < 1)
        fail("BadShape", "--N0, --N1 and --sigma are all required");
    std::ifstream in(o.sigma);
    if (in) {
        Json j;
        in >> j;
        std::vector<SigmaEntry> sig;
        for (const auto& e : j)
            sig.push_back({e.at("x2").get<int>(), e.at("y").get<int>()});
        return parse_geometry(o.N0, o.N1, sig);
    }
    return parse_geometry(o.N0, o.N1, parse_sigma_inline(o.sigma));
}

Zeta parse_zeta(const std::string& s, int N) {
    Zeta z;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) z.push_back(parse_rat(item));
    if ((int)z.size() != N)
        fail("BadShape", "zeta needs " + std::to_string(N) + " entries, got " +
                             std::to_string(z.size()));
    return z;
}

int parse_divisor_index(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return std::stoi(s);
    if (s.substr(slash + 1) != "2") fail("IndexOutOfRange", "half-integer index must be p/2");
    return std::stoi(s.substr(0, slash));  // already doubled
}

DivisorKind parse_kind(const std::string& s) {
    if (s == "E+") return DivisorKind::EPlus;
    if (s == "E-") return DivisorKind::EMinus;
    if (s == "F+") return DivisorKind::FPlus;
    if (s == "F-") return DivisorKind::FMinus;
    if (s == "Fplus_total" || s == "F+total") return DivisorKind::FPlusTotal;
    if (s == "G+") return DivisorKind::GPlus;
    if (s == "G-") return DivisorKind::GMinus;
    if (s == "H") return DivisorKind::H;
    if (s == "I") return DivisorKind::I;
    fail("IndexOutOfRange", "unknown divisor kind '" + s + "'");
}

ZMode parse_mode(const std::string& s) {
    if (s == "relative_to_cyclic") return ZMode::RelativeToCyclic;
    if (s == "relative_to_trivial") return ZMode::RelativeToTrivial;
    if (s == "absolute_with_oracle") return ZMode::AbsoluteWithOracle;
    if (s == "absolute_with_dtpt") return ZMode::AbsoluteWithDtpt;
    fail("BadMode", "unknown mode '" + s + "'");
}

void print_divisor_text(std::ostream& os, const Divisor& d) {
    for (auto v : d.row1) os << v << " ";
    os << "\n";
    for (auto v : d.row0) os << v << " ";
    os << "\n";
}

std::optional<std::string> cache_dir_from_env(bool no_cache) {
    if (no_cache) return std::nullopt;
    if (const char* dir = std::getenv("WALLX_CACHE_DIR")) return std::string(dir);
    return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric quiver wall-crossing computations"};
    app.require_subcommand(1);
    int degree_limit = 12;
    bool no_cache = false;
    std::string format = "json";
    app.add_option("--degree-limit", degree_limit, "hard cap on series degree (default 12)");
    app.add_flag("--no-cache", no_cache, "ignore WALLX_CACHE_DIR");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    GeomOpts go;
    std::string kind_s, index_s, zeta_s, mode_s = "relative_to_cyclic", flavor_s = "euler";
    std::string efile, ffile;
    int degree = 4, roots_N = 0;
    long long max_height = 6;
    bool naive = false;

    auto* c_div = app.add_subcommand("divisors", "toric divisor coefficient matrices");
    add_geometry_options(c_div, go);
    c_div->add_option("--kind", kind_s, "E+ E- F+ F- Fplus_total G+ G- H I")->required();
    c_div->add_option("--index", index_s, "k for F/I, p/2 for E/G/H");

    auto* c_quiv = app.add_subcommand("quiver", "quiver with superpotential");
    add_geometry_options(c_quiv, go);

    auto* c_roots = app.add_subcommand("roots", "positive real roots");
    add_geometry_options(c_roots, go);
    c_roots->add_option("--N", roots_N, "rank (alternative to a geometry)");
    c_roots->add_option("--max-height", max_height, "height bound");

    auto* c_path = app.add_subcommand("path", "chamber path of a stability parameter");
    add_geometry_options(c_path, go);
    c_path->add_option("--zeta", zeta_s, "comma list of rationals p/q")->required();

    auto* c_zfun = app.add_subcommand("zfun", "counting generating function");
    add_geometry_options(c_zfun, go);
    c_zfun->add_option("--zeta", zeta_s)->required();
    c_zfun->add_option("--degree", degree);
    c_zfun->add_option("--mode", mode_s,
                       "relative_to_cyclic|relative_to_trivial|absolute_with_oracle|absolute_with_dtpt");
    c_zfun->add_option("--flavor", flavor_s, "euler or signed");

    auto* c_zpt = app.add_subcommand("zpt", "stable-pair MacMahon product, graded by (n, beta)");
    add_geometry_options(c_zpt, go);
    c_zpt->add_option("--degree", degree);

    auto* c_gv = app.add_subcommand("gv", "genus-0 BPS counts");
    add_geometry_options(c_gv, go);

    auto* c_cry = app.add_subcommand("crystal", "molten-crystal enumeration (cyclic chamber)");
    add_geometry_options(c_cry, go);
    c_cry->add_option("--degree", degree);
    c_cry->add_flag("--naive", naive, "subset-filter enumerator (validation only)");

    auto* c_ext = app.add_subcommand("ext", "hom/ext dimensions between modules");
    add_geometry_options(c_ext, go);
    c_ext->add_option("--E", efile, "module JSON file")->required();
    c_ext->add_option("--F", ffile, "module JSON file")->required();

    auto* c_self = app.add_subcommand("selftest", "run the acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        std::ostream& os = std::cout;
        if (c_self->parsed()) {
            bool all = true;
            for (const auto& r : wallx::selftest::run_acceptance()) {
                all = all && r.pass;
                os << r.id << (r.pass ? " PASS " : " FAIL ") << "(" << (long)r.ms << " ms) "
                   << r.detail << "\n";
            }
            return all ? 0 : 2;
        }

        if (degree > degree_limit)
            fail("BadShape", "degree exceeds the configured limit " + std::to_string(degree_limit));

        const Geometry g = resolve_geometry(go);
        if (c_div->parsed()) {
            const DivisorKind kind = parse_kind(kind_s);
            const int idx = index_s.empty() ? 0 : parse_divisor_index(index_s);
            const Divisor d = divisor(g, kind, idx);
            if (format == "text")
                print_divisor_text(os, d);
            else
                os << Json{{"kind", kind_s}, {"index", index_s}, {"divisor", divisor_to_json(d)}}
                          .dump(2)
                   << "\n";
        } else if (c_quiv->parsed()) {
            os << quiver_to_json(build_quiver(g)).dump(2) << "\n";
        } else if (c_roots->parsed()) {
            const int N = roots_N > 0 ? roots_N : g.N;
            Json out = Json::array();
            for (const auto& r : positive_real_roots(N, max_height)) {
                Json jr{{"alpha", r.v},
                        {"a", r.a},
                        {"b", r.b},
                        {"n", r.n},
                        {"family", r.family == Root::PlusFamily ? "alpha+n*delta" : "n*delta-alpha"},
                        {"height", r.height()}};
                if (N == g.N) jr["epsilon"] = epsilon_sign(g, r.v);
                out.push_back(jr);
            }
            os << out.dump(2) << "\n";
        } else if (c_path->parsed()) {
            os << chamber_path_to_json(chamber_path(g, parse_zeta(zeta_s, g.N))).dump(2) << "\n";
        } else if (c_zfun->parsed()) {
            const Zeta z = parse_zeta(zeta_s, g.N);
            const ZMode mode = parse_mode(mode_s);
            if (flavor_s != "euler" && flavor_s != "signed")
                fail("BadMode", "flavor must be euler or signed");
            const auto cache = cache_dir_from_env(no_cache);
            const Series s = flavor_s == "euler" ? z_eu(g, z, degree, mode, cache)
                                                 : z_signed(g, z, degree, mode, cache);
            os << Json{{"series", series_to_json(s)},
                       {"provenance", provenance_to_json(make_provenance(g, mode_s, flavor_s))}}
                      .dump(2)
               << "\n";
        } else if (c_zpt->parsed()) {
            os << Json{{"result", graded_table_to_json(z_pt_macmahon(g, degree))},
                       {"provenance",
                        provenance_to_json(make_provenance(g, "pt_macmahon", "signed"))}}
                      .dump(2)
               << "\n";
        } else if (c_gv->parsed()) {
            Json rows = Json::array();
            for (const auto& e : gv_invariants(g))
                rows.push_back(Json{{"g", 0}, {"a", e.a}, {"b", e.b}, {"n0", e.n0}});
            if (format == "text") {
                for (const auto& e : gv_invariants(g))
                    os << "n_{0,[" << e.a << "," << e.b << "]} = " << e.n0 << "\n";
            } else {
                os << Json{{"gv", rows}, {"geometry_hash", g.hash()}}.dump(2) << "\n";
            }
        } else if (c_cry->parsed()) {
            const auto cache = cache_dir_from_env(no_cache);
            const Series s = naive ? enumerate_molten_naive(g, degree)
                                   : enumerate_molten_cached(g, degree, cache);
            os << Json{{"series", series_to_json(s)},
                       {"provenance",
                        provenance_to_json(make_provenance(g, "cyclic_oracle", "euler"))}}
                      .dump(2)
               << "\n";
        } else if (c_ext->parsed()) {
            const Quiver q = build_quiver(g);
            auto load = [&](const std::string& path) {
                std::ifstream in(path);
                if (!in) fail("BadShape", "cannot open module file " + path);
                Json j;
                in >> j;
                return rep_from_json(q, j);
            };
            const Rep E = load(efile), F = load(ffile);
            const auto e = hom_ext(q, E, F);
            Json out{{"hom", e.hom}, {"ext1", e.ext1}};
            if (!E.framed) {
                out["ext2"] = e.ext2;
                out["ext3"] = e.ext3;
            }
            os << out.dump(2) << "\n";
        }
        return 0;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
