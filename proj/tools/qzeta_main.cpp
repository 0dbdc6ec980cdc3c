// qzeta: spectral-dimension toolkit for quantized compact simple Lie groups
// and quantized irreducible flag manifolds. All commands are deterministic;
// exact quantities print as rational strings, numeric ones as decimal strings
// at the requested precision.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

#include "qzeta/closed_forms.hpp"
#include "qzeta/json_io.hpp"
#include "qzeta/spectral.hpp"

using namespace qzeta;

namespace {

constexpr const char* kZeroModeNote =
    "trivial representation (chi = 0) excluded from all zeta sums";

Rat parse_decimal_rat(const std::string& s) {
    if (s.find('/') != std::string::npos || s.find('.') == std::string::npos)
        return parse_rat(s);
    auto dotpos = s.find('.');
    std::string digits = s.substr(0, dotpos) + s.substr(dotpos + 1);
    std::string den = "1" + std::string(s.size() - dotpos - 1, '0');
    return parse_rat(digits + "/" + den);
}

std::vector<long> parse_labels(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
    return out;
}

struct GroupArgs {
    std::string type;
    int rank = 0;

    RootSystem build() const { return build_root_system(lie_type_from_name(type), rank); }
    void attach(CLI::App* cmd, bool required = true) {
        auto* t = cmd->add_option("--type", type, "Lie type: A, B, C, D, E6, E7");
        cmd->add_option("--rank", rank, "rank r (ignored for E6/E7)");
        if (required) t->required();
    }
};

struct SpaceArgs {
    std::string space;
    std::string params;
    bool allow_degenerate = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--space", space, "flag space: AIII, BDI, CI, DIII, EIII, EVII");
        cmd->add_option("--params", params,
                        "family parameters: p,q for AIII; p for BDI; r for CI/DIII");
        cmd->add_flag("--allow-degenerate", allow_degenerate,
                      "relax the classification ranges (outside the catalog)");
    }

    FlagSpace build() const {
        FlagFamily fam = flag_family_from_name(space);
        std::vector<long> ps = params.empty() ? std::vector<long>{} : parse_labels(params);
        FlagParams fp;
        switch (fam) {
            case FlagFamily::AIII:
                if (ps.size() != 2) throw CLI::ValidationError("--params", "AIII needs p,q");
                fp.p = ps[0];
                fp.q = ps[1];
                break;
            case FlagFamily::BDI:
                if (ps.size() != 1) throw CLI::ValidationError("--params", "BDI needs p");
                fp.p = ps[0];
                break;
            case FlagFamily::CI:
            case FlagFamily::DIII:
                if (ps.size() != 1) throw CLI::ValidationError("--params", "CI/DIII need r");
                fp.r = ps[0];
                break;
            default:
                if (!ps.empty()) throw CLI::ValidationError("--params", "EIII/EVII take none");
                break;
        }
        return build_flag(fam, fp, allow_degenerate);
    }
};

struct Lambda0Arg {
    std::string spec = "fundamental";

    void attach(CLI::App* cmd) {
        cmd->add_option("--lambda0", spec,
                        "fixed representation: fundamental, adjoint, or labels=n1,n2,...");
    }
    bool is_choice() const { return spec == "fundamental" || spec == "adjoint"; }
    Lambda0Choice choice() const {
        if (spec == "fundamental") return Lambda0Choice::Fundamental;
        if (spec == "adjoint") return Lambda0Choice::Adjoint;
        throw CLI::ValidationError("--lambda0", "expected fundamental/adjoint");
    }
    Weight weight(const RootSystem& rs) const {
        if (is_choice()) return lambda0_weight(rs, choice());
        if (spec.rfind("labels=", 0) == 0)
            return rs.weight_from_labels(parse_labels(spec.substr(7)));
        throw CLI::ValidationError("--lambda0", "expected fundamental/adjoint/labels=...");
    }
};

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_coeff_row(const char* label, const std::vector<Rat>& computed,
                     const std::vector<Rat>& closed, int& mismatches) {
    bool ok = computed == closed;
    mismatches += ok ? 0 : 1;
    std::cout << label << ": computed [";
    for (std::size_t i = 0; i < computed.size(); ++i)
        std::cout << (i ? " " : "") << computed[i].get_str();
    std::cout << "] closed-form [";
    for (std::size_t i = 0; i < closed.size(); ++i)
        std::cout << (i ? " " : "") << closed[i].get_str();
    std::cout << "] " << (ok ? "MATCH" : "MISMATCH") << "\n";
}

int run_group_tables(const RootSystem& rs) {
    int mismatches = 0;
    std::cout << "# coefficient tables for " << rs.name() << "\n";
    print_coeff_row("(Lambda, 2rho)", rs.coeffs_against(scale(rs.rho(), Rat(2))),
                    closed_forms::weyl_vector_pairing(rs.type(), rs.rank()), mismatches);
    print_coeff_row("(Lambda, Lambda_F)", rs.coeffs_against(rs.fundamental_rep_weight()),
                    closed_forms::fundamental_pairing(rs.type(), rs.rank()), mismatches);
    print_coeff_row("(Lambda, theta)", rs.coeffs_against(rs.theta()),
                    closed_forms::adjoint_pairing(rs.type(), rs.rank()), mismatches);
    return mismatches;
}

int run_space_tables(const FlagSpace& fs, const std::string& which) {
    SphericalCoeffs fund = spherical_coeffs(fs, Lambda0Choice::Fundamental);
    SphericalCoeffs adj = spherical_coeffs(fs, Lambda0Choice::Adjoint);
    int mismatches = 0;
    std::cout << "# spherical coefficient tables for " << fs.name << "\n";
    print_coeff_row("(Lambda_S, 2rho)", adj.a_S,
                    closed_forms::spherical_weyl_pairing(fs.family, fs.params), mismatches);
    if (which.empty() || which == "fundamental")
        print_coeff_row("(Lambda_S, Lambda_F)", fund.b_S,
                        closed_forms::spherical_fundamental_pairing(fs.family, fs.params),
                        mismatches);
    if (which.empty() || which == "adjoint")
        print_coeff_row("(Lambda_S, theta)", adj.b_S,
                        closed_forms::spherical_adjoint_pairing(fs.family, fs.params),
                        mismatches);
    QdimAsymReport rep = check_qdim_asym(fs);
    std::cout << "(2/theta^2) max a_S = " << rep.lhs.get_str() << ", d = " << rep.classical_dim
              << " " << (rep.ok ? "MATCH" : "MISMATCH") << "\n";
    if (!rep.ok) ++mismatches;
    return mismatches;
}

std::vector<ProductFactor> parse_factors(const std::vector<std::string>& specs) {
    std::vector<ProductFactor> out;
    for (const auto& f : specs) {
        auto colon = f.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--factor", "expected TYPE:RANK");
        ProductFactor pf;
        pf.type = lie_type_from_name(f.substr(0, colon));
        pf.rank = std::stoi(f.substr(colon + 1));
        out.push_back(pf);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral zeta toolkit for quantized groups and flag manifolds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string q_str = "0.5";
    unsigned digits = QContext::kDefaultDigits;
    app.add_option("--q", q_str, "deformation parameter in (0,1)")->capture_default_str();
    app.add_option("--digits", digits, "working precision in decimal digits")
        ->capture_default_str();

    // dump-roots
    auto* cmd_dump = app.add_subcommand("dump-roots", "exact root-system data as JSON");
    GroupArgs dump_group;
    dump_group.attach(cmd_dump);

    // weights
    auto* cmd_weights = app.add_subcommand("weights", "weight system of V(Lambda) as JSON");
    GroupArgs weights_group;
    weights_group.attach(cmd_weights);
    std::string weights_labels;
    long weights_cap = kDefaultDimensionCap;
    cmd_weights->add_option("--labels", weights_labels, "Dynkin labels n1,n2,...")->required();
    cmd_weights->add_option("--dim-cap", weights_cap, "dimension cap")->capture_default_str();

    // qdim
    auto* cmd_qdim = app.add_subcommand("qdim", "quantum dimension of V(Lambda)");
    GroupArgs qdim_group;
    qdim_group.attach(cmd_qdim);
    std::string qdim_labels;
    cmd_qdim->add_option("--labels", qdim_labels, "Dynkin labels n1,n2,...")->required();

    // chi
    auto* cmd_chi = app.add_subcommand("chi", "Casimir eigenvalue chi_Lambda(C_t)");
    GroupArgs chi_group;
    chi_group.attach(cmd_chi);
    Lambda0Arg chi_l0;
    chi_l0.attach(cmd_chi);
    std::string chi_labels, chi_t = "1";
    cmd_chi->add_option("--labels", chi_labels, "Dynkin labels of Lambda")->required();
    cmd_chi->add_option("--t", chi_t, "positive rational t")->capture_default_str();

    // tables
    auto* cmd_tables = app.add_subcommand("tables", "reproduce the coefficient tables");
    GroupArgs tables_group;
    tables_group.attach(cmd_tables, /*required=*/false);
    SpaceArgs tables_space;
    tables_space.attach(cmd_tables);
    std::string tables_l0;
    cmd_tables->add_option("--lambda0", tables_l0,
                           "restrict the spherical b-table: fundamental or adjoint");

    // spaces
    auto* cmd_spaces = app.add_subcommand("spaces", "flag-space catalog");
    cmd_spaces->require_subcommand(1);
    auto* cmd_spaces_list = cmd_spaces->add_subcommand("list", "catalog table");
    auto* cmd_spaces_coeffs =
        cmd_spaces->add_subcommand("coeffs", "spherical coefficients as JSON");
    SpaceArgs coeffs_space;
    coeffs_space.attach(cmd_spaces_coeffs);
    Lambda0Arg coeffs_l0;
    coeffs_l0.attach(cmd_spaces_coeffs);

    // specdim
    auto* cmd_specdim = app.add_subcommand("specdim", "closed-form spectral dimension");
    GroupArgs specdim_group;
    specdim_group.attach(cmd_specdim, /*required=*/false);
    SpaceArgs specdim_space;
    specdim_space.attach(cmd_specdim);
    Lambda0Arg specdim_l0;
    specdim_l0.attach(cmd_specdim);
    std::string specdim_t = "1";
    std::vector<std::string> specdim_factors;
    cmd_specdim->add_option("--t", specdim_t, "positive rational t")->capture_default_str();
    cmd_specdim->add_option("--factor", specdim_factors,
                            "product factor TYPE:RANK (repeatable)");

    // zeta
    auto* cmd_zeta = app.add_subcommand("zeta", "truncated zeta series");
    GroupArgs zeta_group;
    zeta_group.attach(cmd_zeta, /*required=*/false);
    SpaceArgs zeta_space;
    zeta_space.attach(cmd_zeta);
    Lambda0Arg zeta_l0;
    zeta_l0.attach(cmd_zeta);
    std::string zeta_t = "1", zeta_s, zeta_from, zeta_to, zeta_step;
    long zeta_N = 40;
    cmd_zeta->add_option("--t", zeta_t, "positive rational t")->capture_default_str();
    cmd_zeta->add_option("--s", zeta_s, "evaluation point (decimal or rational)");
    cmd_zeta->add_option("--s-from", zeta_from, "sweep start");
    cmd_zeta->add_option("--s-to", zeta_to, "sweep end");
    cmd_zeta->add_option("--s-step", zeta_step, "sweep step");
    cmd_zeta->add_option("--N", zeta_N, "per-direction truncation bound")->capture_default_str();

    // abscissa
    auto* cmd_abs = app.add_subcommand("abscissa", "numeric abscissa of convergence");
    GroupArgs abs_group;
    abs_group.attach(cmd_abs, /*required=*/false);
    SpaceArgs abs_space;
    abs_space.attach(cmd_abs);
    Lambda0Arg abs_l0;
    abs_l0.attach(cmd_abs);
    std::string abs_t = "1", abs_lo = "0.5", abs_hi, abs_tol = "1/1000", abs_mode = "exact";
    std::vector<std::string> abs_factors;
    long abs_rawN = 25;
    cmd_abs->add_option("--t", abs_t, "positive rational t")->capture_default_str();
    cmd_abs->add_option("--lo", abs_lo, "bracket lower end")->capture_default_str();
    cmd_abs->add_option("--hi", abs_hi, "bracket upper end")->required();
    cmd_abs->add_option("--tol", abs_tol, "bisection tolerance")->capture_default_str();
    cmd_abs->add_option("--mode", abs_mode, "exact or raw")->capture_default_str();
    cmd_abs->add_option("--factor", abs_factors, "product factor TYPE:RANK (repeatable)");
    cmd_abs->add_option("--raw-N0", abs_rawN, "base box for raw growth detection")
        ->capture_default_str();

    // weyl-law
    auto* cmd_weyl = app.add_subcommand("weyl-law", "Weyl-law table across the catalog");
    std::string weyl_t = "1/4", weyl_l0 = "adjoint";
    bool weyl_numeric = false;
    cmd_weyl->add_option("--t", weyl_t, "positive rational t")->capture_default_str();
    cmd_weyl->add_option("--lambda0", weyl_l0, "adjoint (default) or fundamental")
        ->capture_default_str();
    cmd_weyl->add_flag("--numeric", weyl_numeric, "confirm by bisection on the exact predicate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_dump) {
            print_json(root_system_json(dump_group.build()));
        } else if (*cmd_weights) {
            RootSystem rs = weights_group.build();
            WeightSystem ws =
                weight_system(rs, rs.weight_from_labels(parse_labels(weights_labels)), weights_cap);
            print_json(weight_system_json(rs, ws));
        } else if (*cmd_qdim) {
            QContext ctx(q_str, digits);
            RootSystem rs = qdim_group.build();
            Weight lam = rs.weight_from_labels(parse_labels(qdim_labels));
            Json j;
            j["type"] = rs.name();
            j["labels"] = qdim_labels;
            j["q"] = q_str;
            j["qdim"] = qdim(ctx, rs, lam).str(digits);
            j["exponent"] = qdim_exponent(rs, lam).get_str();
            print_json(j);
        } else if (*cmd_chi) {
            QContext ctx(q_str, digits);
            RootSystem rs = chi_group.build();
            CasimirSpec spec(rs, chi_l0.weight(rs), parse_rat(chi_t));
            Weight lam = rs.weight_from_labels(parse_labels(chi_labels));
            Json j;
            j["type"] = rs.name();
            j["lambda0"] = chi_l0.spec;
            j["t"] = spec.t().get_str();
            j["labels"] = chi_labels;
            j["q"] = q_str;
            j["chi"] = spec.chi(ctx, lam).str(digits);
            j["exponent"] = spec.chi_exponent(lam).get_str();
            print_json(j);
        } else if (*cmd_tables) {
            int mismatches = 0;
            if (!tables_group.type.empty()) mismatches += run_group_tables(tables_group.build());
            if (!tables_space.space.empty())
                mismatches += run_space_tables(tables_space.build(), tables_l0);
            if (tables_group.type.empty() && tables_space.space.empty())
                throw CLI::ValidationError("tables", "need --type or --space");
            return mismatches == 0 ? 0 : 1;
        } else if (*cmd_spaces) {
            if (*cmd_spaces_list) {
                std::printf("%-12s %-6s %-3s %-4s\n", "name", "G", "n", "d");
                for (const FlagSpace& fs : default_catalog())
                    std::printf("%-12s %-6s %-3d %-4ld\n", fs.name.c_str(),
                                fs.ambient.name().c_str(), fs.num_spherical(), fs.classical_dim);
            } else if (*cmd_spaces_coeffs) {
                FlagSpace fs = coeffs_space.build();
                SphericalCoeffs sc = spherical_coeffs(fs, coeffs_l0.weight(fs.ambient));
                Json j = spherical_coeffs_json(fs, sc);
                j["lambda0"] = coeffs_l0.spec;
                print_json(j);
            }
        } else if (*cmd_specdim) {
            Rat t = parse_rat(specdim_t);
            Json j;
            Rat p;
            if (!specdim_factors.empty()) {
                auto factors = parse_factors(specdim_factors);
                for (auto& f : factors) {
                    f.lambda0 = specdim_l0.choice();
                    f.t = t;
                }
                p = spectral_dim_product(factors);
                j["kind"] = "product";
            } else if (!specdim_space.space.empty()) {
                FlagSpace fs = specdim_space.build();
                p = spectral_dim_flag(fs, specdim_l0.weight(fs.ambient), t);
                j["kind"] = "flag";
                j["space"] = fs.name;
            } else if (!specdim_group.type.empty()) {
                RootSystem rs = specdim_group.build();
                p = spectral_dim_group(rs, specdim_l0.weight(rs), t);
                j["kind"] = "group";
                j["type"] = rs.name();
            } else {
                throw CLI::ValidationError("specdim", "need --type, --space or --factor");
            }
            j["lambda0"] = specdim_l0.spec;
            j["t"] = t.get_str();
            j["p"] = p.get_str();
            print_json(j);
        } else if (*cmd_zeta) {
            QContext ctx(q_str, digits);
            Rat t = parse_rat(zeta_t);
            std::optional<ZetaSeries> series;
            std::string kind, name;
            if (!zeta_space.space.empty()) {
                FlagSpace fs = zeta_space.build();
                series = ZetaSeries::flag(ctx, fs, zeta_l0.choice(), t);
                kind = "flag";
                name = fs.name;
            } else if (!zeta_group.type.empty()) {
                RootSystem rs = zeta_group.build();
                series = ZetaSeries::group(ctx, rs, zeta_l0.choice(), t);
                kind = "group";
                name = rs.name();
            } else {
                throw CLI::ValidationError("zeta", "need --type or --space");
            }
            if (!zeta_from.empty()) {
                if (zeta_to.empty() || zeta_step.empty())
                    throw CLI::ValidationError("zeta", "sweep needs --s-from --s-to --s-step");
                Rat s = parse_decimal_rat(zeta_from);
                Rat to = parse_decimal_rat(zeta_to);
                Rat step = parse_decimal_rat(zeta_step);
                if (step <= 0) throw CLI::ValidationError("--s-step", "must be positive");
                std::cout << "s,zeta_N,tail_bound\n";
                for (; s <= to; s += step) {
                    ZetaValue v = zeta_truncated(*series, s, zeta_N);
                    std::cout << to_real(s).str(digits) << "," << v.value.str(digits) << ","
                              << (v.tail_finite ? v.tail_bound.str(digits) : std::string("inf"))
                              << "\n";
                }
            } else {
                if (zeta_s.empty()) throw CLI::ValidationError("zeta", "need --s or a sweep");
                Rat s = parse_decimal_rat(zeta_s);
                ZetaValue v = zeta_truncated(*series, s, zeta_N);
                Json j;
                j["kind"] = kind;
                j["name"] = name;
                j["lambda0"] = zeta_l0.spec;
                j["t"] = t.get_str();
                j["q"] = q_str;
                j["s"] = s.get_str();
                j["N"] = zeta_N;
                j["value"] = v.value.str(digits);
                j["tail_finite"] = v.tail_finite;
                j["tail_bound"] = v.tail_finite ? v.tail_bound.str(digits) : "inf";
                j["terms_summed"] = v.terms_summed;
                j["note"] = kZeroModeNote;
                print_json(j);
            }
        } else if (*cmd_abs) {
            QContext ctx(q_str, digits);
            Rat t = parse_rat(abs_t);
            std::optional<ZetaSeries> series;
            Json j;
            if (!abs_factors.empty()) {
                auto factors = parse_factors(abs_factors);
                for (auto& f : factors) {
                    f.lambda0 = abs_l0.choice();
                    f.t = t;
                }
                series = ZetaSeries::product(ctx, factors);
                j["kind"] = "product";
            } else if (!abs_space.space.empty()) {
                FlagSpace fs = abs_space.build();
                series = ZetaSeries::flag(ctx, fs, abs_l0.choice(), t);
                j["kind"] = "flag";
                j["name"] = fs.name;
            } else if (!abs_group.type.empty()) {
                RootSystem rs = abs_group.build();
                series = ZetaSeries::group(ctx, rs, abs_l0.choice(), t);
                j["kind"] = "group";
                j["name"] = rs.name();
            } else {
                throw CLI::ValidationError("abscissa", "need --type, --space or --factor");
            }
            AbscissaMode mode =
                abs_mode == "raw" ? AbscissaMode::RawGrowth : AbscissaMode::Exact;
            Rat est = estimate_abscissa(*series, parse_decimal_rat(abs_lo),
                                        parse_decimal_rat(abs_hi), parse_decimal_rat(abs_tol),
                                        mode, abs_rawN);
            j["lambda0"] = abs_l0.spec;
            j["t"] = t.get_str();
            j["mode"] = abs_mode;
            j["estimate"] = to_real(est).str(digits);
            j["closed_form"] = series->closed_form_dimension().get_str();
            j["note"] = kZeroModeNote;
            print_json(j);
        } else if (*cmd_weyl) {
            Rat t = parse_rat(weyl_t);
            bool fundamental = (weyl_l0 == "fundamental");
            int mismatches = 0;
            std::printf("%-12s %-5s %-12s %-12s %s\n", "name", "d", "p", "expected",
                        weyl_numeric ? "verdict numeric" : "verdict");
            for (const FlagSpace& fs : default_catalog()) {
                if (fundamental && fs.family != FlagFamily::AIII && fs.family != FlagFamily::CI &&
                    fs.family != FlagFamily::DIII)
                    continue;
                Rat p = spectral_dim_flag(
                    fs, fundamental ? Lambda0Choice::Fundamental : Lambda0Choice::Adjoint, t);
                Rat expected = Rat(fs.classical_dim) / ((fundamental ? 2 : 4) * t);
                bool ok = (p == expected);
                mismatches += ok ? 0 : 1;
                std::string numeric;
                if (weyl_numeric) {
                    QContext ctx(q_str, digits);
                    ZetaSeries series = ZetaSeries::flag(
                        ctx, fs, fundamental ? Lambda0Choice::Fundamental : Lambda0Choice::Adjoint,
                        t);
                    Rat est = estimate_abscissa(series, p / 2, 2 * p, Rat(1, 1000));
                    numeric = " " + to_real(est).str(8);
                }
                std::printf("%-12s %-5ld %-12s %-12s %s%s\n", fs.name.c_str(), fs.classical_dim,
                            p.get_str().c_str(), expected.get_str().c_str(),
                            ok ? "MATCH" : "MISMATCH", numeric.c_str());
            }
            return mismatches == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
