// motivic: exact E-polynomial calculator for Hilbert schemes, generalized
// Kummer schemes, and torsion-sheaf stacks over abelian fibrations.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "motivic/json_io.hpp"
#include "motivic/kummer.hpp"
#include "motivic/partitions.hpp"
#include "motivic/torsion.hpp"

namespace {

using namespace motivic;

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    return std::stoi(v);
}

struct Caps {
    int max_n = env_cap("MOTIVIC_MAX_N", 8);
    int max_order = env_cap("MOTIVIC_MAX_ORDER", 10);
    int max_d = env_cap("MOTIVIC_MAX_D", 4);
};

void check_n(const Caps& caps, int n) {
    if (n < 0 || n > caps.max_n)
        throw LimitExceeded("n = " + std::to_string(n) + " exceeds the cap " +
                            std::to_string(caps.max_n) + " (override with MOTIVIC_MAX_N)");
}
void check_order(const Caps& caps, int order) {
    if (order < 0 || order > caps.max_order)
        throw LimitExceeded("order = " + std::to_string(order) + " exceeds the cap " +
                            std::to_string(caps.max_order) +
                            " (override with MOTIVIC_MAX_ORDER)");
}
void check_d(const Caps& caps, int d) {
    if (d < 1 || d > caps.max_d)
        throw LimitExceeded("d = " + std::to_string(d) + " exceeds the cap " +
                            std::to_string(caps.max_d) + " (override with MOTIVIC_MAX_D)");
}

std::string checks_string(const ojson& checks) {
    std::string s;
    for (const auto& [k, v] : checks.items()) {
        if (!s.empty()) s += " ";
        s += k + "=" + v.dump();
    }
    return s;
}

void emit(const std::vector<ojson>& records, const std::string& format) {
    if (format == "json") {
        ojson arr = ojson::array();
        for (const auto& r : records) arr.push_back(r);
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "n,euler,chi_y,class,checks\n";
        for (const auto& r : records) {
            auto str = [&](const char* key) -> std::string {
                return r.contains(key) ? r[key].get<std::string>() : std::string();
            };
            std::cout << (r.contains("n") ? r["n"].dump() : "") << ","
                      << (r.contains("euler") ? r["euler"].dump() : "") << ",\""
                      << str("chi_y_str") << "\",\"" << str("class_str") << "\",\""
                      << (r.contains("checks") ? checks_string(r["checks"]) : "") << "\"\n";
        }
        return;
    }
    for (const auto& r : records) {
        if (r.contains("n")) std::cout << "n=" << r["n"].get<long>();
        if (r.contains("p")) std::cout << "p=" << r["p"].get<long>() << " q=" << r["q"].get<long>();
        if (r.contains("euler")) std::cout << "  euler=" << r["euler"].get<long>();
        if (r.contains("value")) std::cout << "  value=" << r["value"].get<long>();
        std::cout << "\n";
        if (r.contains("class_str")) std::cout << "  class: " << r["class_str"].get<std::string>() << "\n";
        if (r.contains("chi_y_str")) std::cout << "  chi_y: " << r["chi_y_str"].get<std::string>() << "\n";
        if (r.contains("checks") && !r["checks"].empty())
            std::cout << "  checks: " << checks_string(r["checks"]) << "\n";
    }
}

// Table and csv output carry the pretty strings; json stays schema-exact.
void strip_table_fields(std::vector<ojson>& records, const std::string& format) {
    if (format != "json") return;
    for (auto& r : records) {
        r.erase("class_str");
        r.erase("chi_y_str");
    }
}

GeometrySpec geometry_for(const std::string& fiber, int g) {
    GeometrySpec geom = load_geometry(fiber);
    geom.g = g;
    return geom;
}

ojson class_record(int n, const EPoly& cls, const ojson& checks) {
    ojson r;
    r["n"] = n;
    r["class"] = class_to_json(cls);
    r["chi_y"] = ylaurent_to_json(chi_y(cls));
    r["euler"] = static_cast<long>(euler(cls).get_si());
    r["checks"] = checks;
    r["class_str"] = to_string(cls);
    r["chi_y_str"] = to_string(chi_y(cls));
    return r;
}

int run_selftest() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    GeometrySpec ab2 = load_geometry("point");
    ab2.g = 2;
    const EPoly k2 = kummer_class(ab2, WData::surface(), 2).cls;
    EPoly k3_diamond = EPoly::one();
    k3_diamond.add_term(4, 0, 1);
    k3_diamond.add_term(0, 4, 1);
    k3_diamond.add_term(2, 2, 20);
    k3_diamond.add_term(4, 4, 1);
    check("kummer K3 diamond", k2 == k3_diamond && euler(k2) == 24);

    const ESeries a = h2_series(5);
    check("plethystic round trip", pleth_exp(pleth_log(a)) == a);
    check("power_exp route agreement",
          power_exp(a, curve_class(1)) == power_exp_zeta(a, curve_class(1)));

    bool sym_ok = true;
    for (int i = 0; i <= 5; ++i)
        sym_ok = sym_ok && (zeta_series(curve_class(2), 5).at(i) == sym_class(curve_class(2), i));
    check("zeta vs Macdonald", sym_ok);

    GeometrySpec k3e = load_geometry("k3");
    k3e.g = 1;
    bool vir_ok = true;
    for (int i = 1; i <= 3; ++i)
        vir_ok = vir_ok && (chi_y(kummer_vir_class(k3e, i).cls) == chi_y_kummer_vir(k3e, i));
    check("virtual 3-fold closed form", vir_ok);

    GeometrySpec ell = load_geometry("point");
    ell.g = 1;
    bool tor_ok = true;
    for (int i = 1; i <= 4; ++i)
        tor_ok = tor_ok && (torsion_kummer_chi_y_expand(ell, i, TorsionKind::curve) ==
                            torsion_kummer_chi_y(ell, i, TorsionKind::curve));
    check("torsion curve 1/(y-1)", tor_ok);

    check("gulbrandsen identity", gulbrandsen_identity_holds(k3e, 3, 5));

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact E-polynomial calculator for Hilbert schemes, generalized Kummer "
                 "schemes, and torsion-sheaf stacks over abelian fibrations"};
    app.require_subcommand(1);
    Caps caps;

    std::string fiber = "point", format = "table", kind = "surface";
    int g = 0, n = -1, n_max = -1, order = -1, d = -1, p = -1, q = -1;
    bool virt = false, normalized = false, euler_only = false;

    auto add_common = [&](CLI::App* cmd, bool needs_g) {
        cmd->add_option("--fiber", fiber, "fiber preset or JSON diamond file");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        if (needs_g) cmd->add_option("--g", g, "abelian base dimension");
    };

    CLI::App* hilb = app.add_subcommand("hilbert", "absolute Hilbert-scheme series (g = 0)");
    add_common(hilb, false);
    hilb->add_option("--n-max", n_max, "largest number of points")->required();
    hilb->add_option("--order", order, "series truncation order");
    hilb->add_flag("--virtual", virt, "virtual 3-fold series");
    hilb->add_flag("--euler-only", euler_only, "Euler-level series");
    hilb->add_option("--d", d, "dimension for --euler-only");

    CLI::App* kum = app.add_subcommand("kummer", "generalized Kummer classes (surfaces)");
    add_common(kum, true);
    kum->add_option("--n", n, "number of points");
    kum->add_option("--n-max", n_max, "compute n = 0..n-max");
    kum->add_flag("--euler-only", euler_only, "Euler number via solved w_k");
    kum->add_option("--d", d, "dimension for --euler-only");

    CLI::App* kvir = app.add_subcommand("kummer-vir", "virtual Kummer classes (3-folds)");
    add_common(kvir, true);
    kvir->add_option("--n", n, "number of points");
    kvir->add_option("--n-max", n_max, "compute n = 0..n-max");
    kvir->add_flag("--normalized", normalized, "normalized classes L^{(3n-g)/2} [K_n]_vir");

    CLI::App* tor = app.add_subcommand("torsion", "torsion-sheaf stack expansions");
    add_common(tor, true);
    tor->add_option("--kind", kind, "curve | surface | threefold")
        ->check(CLI::IsMember({"curve", "surface", "threefold"}));
    tor->add_option("--n", n, "length of the sheaves");
    tor->add_option("--n-max", n_max, "compute n = 1..n-max");

    CLI::App* etab = app.add_subcommand("euler-table", "Euler characteristics chi(K_n)");
    add_common(etab, true);
    etab->add_option("--d", d, "total dimension")->required();
    etab->add_option("--n-max", n_max, "largest n")->required();

    CLI::App* shodge = app.add_subcommand("stable-hodge", "stable Hodge numbers of K~_n");
    add_common(shodge, true);
    shodge->add_option("--p", p, "Hodge index p");
    shodge->add_option("--q", q, "Hodge index q");

    CLI::App* self = app.add_subcommand("selftest", "run the built-in invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<ojson> records;

        if (hilb->parsed()) {
            check_n(caps, n_max);
            const int N = order >= 0 ? order : n_max;
            check_order(caps, N);
            if (N < n_max) throw ModeMismatch("hilbert: order must be >= n-max");
            GeometrySpec geom = geometry_for(fiber, 0);
            if (euler_only && d >= 1) check_d(caps, d);
            WData w = euler_only ? WData::euler_only(d >= 1 ? d : geom.r, N)
                      : virt     ? WData::threefold_virtual()
                                 : WData::surface();
            const ESeries series = hilb_series(geom, w, N);
            ojson checks;
            if (!euler_only) {
                const ESeries punctual = virt ? h3vir_series(N) : h2_series(N);
                checks["two_route_match"] =
                    (power_exp(punctual, geom.fiberE) == power_exp_zeta(punctual, geom.fiberE));
            }
            for (int i = 0; i <= n_max; ++i) records.push_back(class_record(i, series.at(i), checks));
        } else if (kum->parsed()) {
            const int lo = n >= 0 ? n : 0;
            const int hi = n >= 0 ? n : n_max;
            if (hi < 0) throw ModeMismatch("kummer: provide --n or --n-max");
            check_n(caps, hi);
            GeometrySpec geom = geometry_for(fiber, g);
            if (euler_only) {
                const int dd = d >= 1 ? d : geom.dim();
                check_d(caps, dd);
                WData w = WData::euler_only(dd, std::max(hi, 1));
                for (int i = lo; i <= hi; ++i) {
                    KummerResult res = kummer_class(geom, w, i);
                    ojson r;
                    r["n"] = i;
                    r["euler"] = static_cast<long>(euler(res.cls).get_si());
                    records.push_back(std::move(r));
                }
            } else {
                for (int i = lo; i <= hi; ++i) {
                    KummerResult res = kummer_class(geom, WData::surface(), i);
                    ojson checks;
                    if (geom.g >= 1 && i >= 1) {
                        checks["chi_y_closed_form_match"] =
                            (chi_y(res.cls) == chi_y_kummer_surface(geom, i));
                    } else if (geom.g == 0) {
                        checks["hilbert_route_match"] =
                            (res.cls == hilb_series(geom, WData::surface(), hi).at(i));
                    }
                    records.push_back(class_record(i, res.cls, checks));
                }
            }
        } else if (kvir->parsed()) {
            const int lo = n >= 0 ? n : 0;
            const int hi = n >= 0 ? n : n_max;
            if (hi < 0) throw ModeMismatch("kummer-vir: provide --n or --n-max");
            check_n(caps, hi);
            GeometrySpec geom = geometry_for(fiber, g);
            for (int i = lo; i <= hi; ++i) {
                KummerResult res = kummer_vir_class(geom, i, normalized);
                ojson checks;
                if (geom.g >= 1 && i >= 1 && !normalized)
                    checks["chi_y_closed_form_match"] = (chi_y(res.cls) == chi_y_kummer_vir(geom, i));
                if (normalized) {
                    const HodgeReport rep = hodge_property_check(res);
                    checks["diamond"] = rep.diamond;
                    checks["symmetry"] = rep.symmetry;
                    if (rep.projective_checked) {
                        checks["duality"] = rep.duality;
                        checks["lefschetz"] = rep.lefschetz;
                    }
                }
                records.push_back(class_record(i, res.cls, checks));
            }
        } else if (tor->parsed()) {
            const int lo = n >= 0 ? n : 1;
            const int hi = n >= 0 ? n : n_max;
            if (hi < 0) throw ModeMismatch("torsion: provide --n or --n-max");
            check_n(caps, hi);
            GeometrySpec geom = geometry_for(fiber, g);
            const TorsionKind tk = kind == "curve"     ? TorsionKind::curve
                                   : kind == "surface" ? TorsionKind::surface
                                                       : TorsionKind::threefold_vir;
            for (int i = lo; i <= hi; ++i) {
                const auto terms = torsion_series(geom, i, tk);
                const YRational closed = torsion_kummer_chi_y(geom, i, tk);
                ojson r;
                r["n"] = i;
                ojson jterms = ojson::array();
                for (const auto& t : terms) {
                    ojson jt;
                    jt["scalar"]["num"] = class_to_json(t.scalar.num);
                    jt["scalar"]["den_lpow"] = exponent_string(t.scalar.den_lpow2);
                    jt["scalar"]["den_factors"] = t.scalar.den_factors;
                    ojson jfs = ojson::array();
                    for (const auto& f : t.factors) {
                        ojson jf;
                        jf["mult"] = f.mult;
                        ojson js = ojson::array();
                        for (const auto& s : f.syms) {
                            ojson one;
                            one["b"] = s.b;
                            one["base"] = class_to_json(s.base);
                            js.push_back(std::move(one));
                        }
                        jf["syms"] = std::move(js);
                        jfs.push_back(std::move(jf));
                    }
                    jt["factors"] = std::move(jfs);
                    jterms.push_back(std::move(jt));
                }
                r["terms"] = std::move(jterms);
                r["chi_y"]["num"] = ylaurent_to_json(closed.num);
                r["chi_y"]["den"] = ylaurent_to_json(closed.den);
                ojson checks;
                checks["closed_form_match"] = (torsion_kummer_chi_y_expand(geom, i, tk) == closed);
                r["checks"] = checks;
                r["chi_y_str"] = to_string(closed);
                records.push_back(std::move(r));
            }
        } else if (etab->parsed()) {
            check_d(caps, d);
            check_n(caps, n_max);
            GeometrySpec geom = geometry_for(fiber, g);
            const std::vector<long> w = solve_wk(d, std::max(n_max, 1));
            for (int i = 1; i <= n_max; ++i) {
                ojson r;
                r["n"] = i;
                r["euler"] = static_cast<long>(euler_kummer(geom, w, i).get_si());
                records.push_back(std::move(r));
            }
        } else if (shodge->parsed()) {
            GeometrySpec geom = geometry_for(fiber, g);
            const int pl = p >= 0 ? p : 0, ph = p >= 0 ? p : 2;
            const int ql = q >= 0 ? q : 0, qh = q >= 0 ? q : 2;
            std::map<int, EPoly> ktilde; // normalized classes, shared by the sweep
            auto ktilde_at = [&](int i) -> const EPoly& {
                auto it = ktilde.find(i);
                if (it == ktilde.end())
                    it = ktilde.emplace(i, kummer_vir_class(geom, i, true).cls).first;
                return it->second;
            };
            for (int pi = pl; pi <= ph; ++pi)
                for (int qi = ql; qi <= qh; ++qi) {
                    const mpz_class v = stable_hodge(geom, pi, qi);
                    const int n0 = 2 * std::max(pi, qi) + 1;
                    ojson checks;
                    checks["consecutive_match"] = (v == hodge_number(ktilde_at(n0), pi, qi) &&
                                                   v == hodge_number(ktilde_at(n0 + 1), pi, qi));
                    ojson r;
                    r["p"] = pi;
                    r["q"] = qi;
                    r["value"] = static_cast<long>(v.get_si());
                    r["checks"] = checks;
                    records.push_back(std::move(r));
                }
        } else if (self->parsed()) {
            return run_selftest();
        }

        strip_table_fields(records, format);
        emit(records, format);
        for (const auto& r : records)
            if (r.contains("checks"))
                for (const auto& [k, v] : r["checks"].items())
                    if (v.is_boolean() && !v.get<bool>()) {
                        std::cerr << "check failed: " << k << "\n";
                        return 1;
                    }
        return 0;
    } catch (const NotDivisible& e) {
        std::cerr << "hard failure: " << e.what() << "\n";
        return 1;
    } catch (const NonIntegralResult& e) {
        std::cerr << "hard failure: " << e.what() << "\n";
        return 1;
    } catch (const NonIntegralSolution& e) {
        std::cerr << "hard failure: " << e.what() << "\n";
        return 1;
    } catch (const NotStabilized& e) {
        std::cerr << "hard failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
