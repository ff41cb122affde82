// abpauli: spectra, resolvents, eigenfunctions, scattering tables and
// symmetry checks for the Aharonov-Bohm Pauli extensions.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "abp/dirac.hpp"
#include "abp/ext_io.hpp"
#include "abp/grid.hpp"
#include "abp/resolvent.hpp"
#include "abp/scattering.hpp"
#include "abp/symmetry.hpp"

namespace {

using nlohmann::json;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonOpts {
    double alpha = 0.5;
    std::string ext_spec = "friedrichs";
    double tol = 1e-10;
    std::string out = "-";
    std::string format = "csv";
    int workers = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool needs_ext = true) {
    cmd->add_option("--alpha", c.alpha, "AB flux (reduced mod 1 with the winding logged)")
        ->required();
    if (needs_ext)
        cmd->add_option("--ext", c.ext_spec,
                        "extension: friedrichs | krein | inline JSON | path to JSON file");
    cmd->add_option("--tol", c.tol, "truncation tolerance");
    cmd->add_option("--out", c.out, "output path ('-' for stdout)");
    cmd->add_option("--format", c.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", c.workers, "parallel workers (0 = all cores)");
}

abp::FluxAlpha resolve_flux(const CommonOpts& c) {
    const auto red = abp::reduce_flux(c.alpha);
    if (red.winding != 0)
        std::fprintf(stderr, "note: flux reduced to alpha=%.17g (winding %ld)\n", red.flux.alpha,
                     red.winding);
    return red.flux;
}

abp::ExtensionParam resolve_ext(const CommonOpts& c) {
    if (c.ext_spec == "friedrichs") return abp::ExtensionParam::friedrichs();
    if (c.ext_spec == "krein") return abp::ExtensionParam::theta(abp::Matrix4::Zero());
    if (!c.ext_spec.empty() && c.ext_spec.front() == '{') return abp::ext_from_json_text(c.ext_spec);
    return abp::ext_from_json_file(c.ext_spec);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw abp::domain_error("cannot open output file " + path);
    out << text;
}

json charge_json(const abp::Charge4& q) {
    json re = json::array(), im = json::array();
    for (int i = 0; i < 4; ++i) {
        re.push_back(q(i).real());
        im.push_back(q(i).imag());
    }
    return json{{"re", re}, {"im", im}};
}

// ---------------------------------------------------------------- spectrum

struct SpectrumOpts {
    CommonOpts common;
    double mu_min = 1e-8;
    double mu_max = 1e8;
};

void run_spectrum(const SpectrumOpts& o) {
    const auto flux = resolve_flux(o.common);
    const auto ext = resolve_ext(o.common);
    const auto records = abp::point_spectrum(flux, ext, o.mu_min, o.mu_max, o.common.tol);
    const auto resonance = abp::zero_resonance(flux, ext);

    if (o.common.format == "csv") {
        std::string text = "mu,eigenvalue,multiplicity\n";
        for (const auto& r : records)
            text += fmt(r.mu) + "," + fmt(-r.mu) + "," + std::to_string(r.multiplicity) + "\n";
        if (resonance)
            text += "# resonances: dimension " + std::to_string(resonance->charges.size()) + "\n";
        else
            text += "# resonances: none\n";
        write_text(o.common.out, text);
        return;
    }

    json j;
    j["spectrum"] = json::array();
    for (const auto& r : records) {
        json rec{{"mu", r.mu}, {"eigenvalue", -r.mu}, {"multiplicity", r.multiplicity}};
        rec["kernel_basis"] = json::array();
        for (const auto& q : r.kernel_basis) rec["kernel_basis"].push_back(charge_json(q));
        j["spectrum"].push_back(rec);
    }
    if (resonance) {
        j["resonances"]["dimension"] = resonance->charges.size();
        j["resonances"]["charges"] = json::array();
        for (const auto& q : resonance->charges) j["resonances"]["charges"].push_back(charge_json(q));
    } else {
        j["resonances"]["dimension"] = 0;
    }
    write_text(o.common.out, j.dump(2) + "\n");
}

// ----------------------------------------------------------------- scatter

struct ScatterOpts {
    CommonOpts common;
    double energy = 1.0;
    int omega_grid = 64;
    double exclude_forward = 1e-3;
    std::string sign = "minus";
};

void run_scatter(const ScatterOpts& o) {
    const auto flux = resolve_flux(o.common);
    const auto ext = resolve_ext(o.common);
    const abp::Side side = o.sign == "plus" ? abp::Side::plus : abp::Side::minus;
    const abp::WaveVector kv(std::sqrt(o.energy), 0.0);

    std::vector<double> omegas;
    for (int i = 1; i < o.omega_grid; ++i) {
        const double w = 2.0 * M_PI * i / o.omega_grid;
        const double fwd = std::min(w, 2.0 * M_PI - w);
        if (fwd < o.exclude_forward) continue;
        // Theta amplitudes carry the Abel pole at omega_pm + pi; for the
        // plus family that sits at theta = pi instead of forward.
        if (!ext.is_friedrichs() && side == abp::Side::plus &&
            std::abs(w - M_PI) < o.exclude_forward)
            continue;
        omegas.push_back(w);
    }

    // 2 pi * far-field coefficient; for the Friedrichs kind this is exactly
    // the closed-form amplitude whose modulus squared is the cross section.
    auto amplitude = [&](double w, abp::Spin si, abp::Spin so) -> abp::cplx {
        if (ext.is_friedrichs())
            return si == so ? abp::friedrichs_amplitude(flux, o.energy, w) : 0.0;
        return 2.0 * M_PI * abp::theta_amplitude(flux, ext, kv, side, si, so, w);
    };

    struct Row {
        double omega;
        abp::cplx f[4];
    };
    const auto rows = abp::grid::map_parallel<Row>(
        omegas.size(),
        [&](std::size_t i) {
            Row r;
            r.omega = omegas[i];
            int k = 0;
            for (auto si : {abp::Spin::up, abp::Spin::down})
                for (auto so : {abp::Spin::up, abp::Spin::down})
                    r.f[k++] = amplitude(omegas[i], si, so);
            return r;
        },
        o.common.workers);

    static const char* pair_names[4] = {"uu", "ud", "du", "dd"};
    if (o.common.format == "csv") {
        std::string text = "omega";
        for (auto* p : pair_names)
            text += std::string(",re_f_") + p + ",im_f_" + p + ",dsigma_" + p;
        text += "\n";
        for (const auto& r : rows) {
            text += fmt(r.omega);
            for (int k = 0; k < 4; ++k)
                text += "," + fmt(r.f[k].real()) + "," + fmt(r.f[k].imag()) + "," +
                        fmt(std::norm(r.f[k]));
            text += "\n";
        }
        write_text(o.common.out, text);
        return;
    }
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json row{{"omega", r.omega}};
        for (int k = 0; k < 4; ++k) {
            row[pair_names[k]] = {{"re", r.f[k].real()},
                                  {"im", r.f[k].imag()},
                                  {"dsigma", std::norm(r.f[k])}};
        }
        j["rows"].push_back(row);
    }
    write_text(o.common.out, j.dump(2) + "\n");
}

// ------------------------------------------------------------------ eigfun

struct EigfunOpts {
    CommonOpts common;
    std::string field = "theta";  // theta | friedrichs | bound | single-layer
    double k = 1.0;
    double omega = 0.0;
    std::string sign = "plus";
    std::string spin = "up";
    double r_min = 0.0, r_max = 5.0;
    int r_count = 32, theta_count = 16;
    double mu_min = 1e-8, mu_max = 1e8;
    int bound_index = 0, charge_index = 0, channel = 0;
    double z_re = -1.0, z_im = 0.0;
};

void run_eigfun(const EigfunOpts& o) {
    const auto flux = resolve_flux(o.common);
    const auto ext = resolve_ext(o.common);
    const abp::Side side = o.sign == "plus" ? abp::Side::plus : abp::Side::minus;
    const abp::Spin spin = o.spin == "up" ? abp::Spin::up : abp::Spin::down;
    if (o.r_count < 1 || o.theta_count < 1)
        throw abp::domain_error("eigfun: grid counts must be positive");

    std::function<abp::Spinor(const abp::PolarPoint&)> field;
    if (o.field == "theta") {
        const abp::WaveVector kv(o.k, o.omega);
        field = [=](const abp::PolarPoint& x) {
            return abp::theta_eigenfunction(flux, ext, spin, kv, side, x, o.common.tol);
        };
    } else if (o.field == "friedrichs") {
        const abp::WaveVector kv(o.k, o.omega);
        field = [=](const abp::PolarPoint& x) {
            return abp::friedrichs_eigenfunction(flux, spin, kv, side, x, o.common.tol);
        };
    } else if (o.field == "bound") {
        const auto records = abp::point_spectrum(flux, ext, o.mu_min, o.mu_max, o.common.tol);
        if (o.bound_index < 0 || o.bound_index >= (int)records.size())
            throw abp::domain_error("eigfun: bound state index out of range");
        const auto rec = records[o.bound_index];
        if (o.charge_index < 0 || o.charge_index >= (int)rec.kernel_basis.size())
            throw abp::domain_error("eigfun: charge index out of range");
        const abp::Charge4 q = rec.kernel_basis[o.charge_index];
        field = [=](const abp::PolarPoint& x) { return abp::bound_state(flux, ext, rec, q, x); };
    } else if (o.field == "single-layer") {
        const abp::SpectralPoint z(abp::cplx(o.z_re, o.z_im));
        abp::Charge4 q = abp::Charge4::Zero();
        if (o.channel < 0 || o.channel > 3) throw abp::domain_error("eigfun: channel out of range");
        q(o.channel) = 1.0;
        field = [=](const abp::PolarPoint& x) { return abp::single_layer(flux, z, q, x); };
    } else {
        throw abp::domain_error("eigfun: unknown field kind " + o.field);
    }

    const std::size_t n = (std::size_t)o.r_count * o.theta_count;
    struct Row {
        double r, theta;
        abp::Spinor v;
    };
    const auto rows = abp::grid::map_parallel<Row>(
        n,
        [&](std::size_t idx) {
            const int ir = (int)(idx / o.theta_count);
            const int it = (int)(idx % o.theta_count);
            const double r = o.r_count == 1 ? o.r_min
                                            : o.r_min + (o.r_max - o.r_min) * ir / (o.r_count - 1);
            const double th = 2.0 * M_PI * it / o.theta_count;
            Row row;
            row.r = r;
            row.theta = th;
            row.v = field(abp::PolarPoint(r, th));
            return row;
        },
        o.common.workers);

    if (o.common.format == "csv") {
        std::string text = "r,theta,re_up,im_up,re_down,im_down\n";
        for (const auto& r : rows)
            text += fmt(r.r) + "," + fmt(r.theta) + "," + fmt(r.v(0).real()) + "," +
                    fmt(r.v(0).imag()) + "," + fmt(r.v(1).real()) + "," + fmt(r.v(1).imag()) + "\n";
        write_text(o.common.out, text);
        return;
    }
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"r", r.r},
                             {"theta", r.theta},
                             {"up", {{"re", r.v(0).real()}, {"im", r.v(0).imag()}}},
                             {"down", {{"re", r.v(1).real()}, {"im", r.v(1).imag()}}}});
    write_text(o.common.out, j.dump(2) + "\n");
}

// ------------------------------------------------------------------ kernel

struct KernelOpts {
    CommonOpts common;
    double z_re = -1.0, z_im = 0.0;
    double xp_r = 1.0, xp_theta = 0.0;
    double r_min = 0.1, r_max = 5.0;
    int r_count = 32, theta_count = 8;
};

void run_kernel(const KernelOpts& o) {
    const auto flux = resolve_flux(o.common);
    const auto ext = resolve_ext(o.common);
    const abp::SpectralPoint z(abp::cplx(o.z_re, o.z_im));
    const abp::PolarPoint xp(o.xp_r, o.xp_theta);

    const std::size_t n = (std::size_t)o.r_count * o.theta_count;
    struct Row {
        double r, theta;
        abp::KernelValue k;
    };
    const auto rows = abp::grid::map_parallel<Row>(
        n,
        [&](std::size_t idx) {
            const int ir = (int)(idx / o.theta_count);
            const int it = (int)(idx % o.theta_count);
            const double r = o.r_count == 1 ? o.r_min
                                            : o.r_min + (o.r_max - o.r_min) * ir / (o.r_count - 1);
            const double th = 2.0 * M_PI * it / o.theta_count;
            Row row;
            row.r = r;
            row.theta = th;
            row.k = abp::krein_kernel(flux, ext, z, abp::PolarPoint(r, th), xp, o.common.tol);
            return row;
        },
        o.common.workers);

    std::string text = "r,theta,re_uu,im_uu,re_ud,im_ud,re_du,im_du,re_dd,im_dd\n";
    for (const auto& r : rows) {
        text += fmt(r.r) + "," + fmt(r.theta);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                text += "," + fmt(r.k(a, b).real()) + "," + fmt(r.k(a, b).imag());
        text += "\n";
    }
    write_text(o.common.out, text);
}

// ---------------------------------------------------------------- symcheck

struct SymcheckOpts {
    CommonOpts common;
    std::string s_json;
    std::string t_json;
    bool antilinear = false;
    std::string beta_path;
    double eta3 = 0.0, zeta = 0.0, lambda = 1.0;
};

void run_symcheck(const SymcheckOpts& o) {
    abp::Matrix2 s;
    abp::Matrix2r t;
    try {
        const json js = json::parse(o.s_json);
        const json jt = json::parse(o.t_json);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                s(r, c) = abp::cplx(js["re"].at(r).at(c).get<double>(),
                                    js.contains("im") ? js["im"].at(r).at(c).get<double>() : 0.0);
                t(r, c) = jt.at(r).at(c).get<double>();
            }
    } catch (const json::exception& e) {
        throw abp::domain_error(std::string("symcheck: bad matrix JSON: ") + e.what());
    }

    const auto pauli = abp::classify_pauli(s, t, o.antilinear);
    const auto dirac = abp::classify_dirac(s, t, o.antilinear);
    json j;
    j["antilinear"] = o.antilinear;
    j["pauli"] = {{"admissible", pauli.admissible},
                  {"potential_sign", pauli.potential_sign},
                  {"field_sign", pauli.field_sign},
                  {"reason", pauli.reason}};
    j["dirac"] = {{"admissible", dirac.admissible},
                  {"potential_sign", dirac.potential_sign},
                  {"field_sign", dirac.field_sign},
                  {"reason", dirac.reason}};

    if (!o.beta_path.empty()) {
        const auto flux = resolve_flux(o.common);
        const auto ext = abp::ext_from_json_file(o.beta_path);
        const abp::Matrix4 beta = ext.kind() == abp::ExtensionParam::Kind::beta
                                      ? ext.matrix()
                                      : abp::beta_from_theta(flux, abp::theta_of(flux, ext));
        j["beta_invariant"] = abp::beta_invariance(flux, beta, o.eta3, o.zeta, o.lambda);
    }
    write_text(o.common.out, j.dump(2) + "\n");
}

// ------------------------------------------------------------------- dirac

struct DiracOpts {
    CommonOpts common;
    double gamma = 0.0;
    double mu_re = 1.0, mu_im = 0.0;
};

void run_dirac(const DiracOpts& o) {
    const auto flux = resolve_flux(o.common);
    const auto traces = abp::dirac_traces(flux, abp::cplx(o.mu_re, o.mu_im), o.gamma);
    const auto sys = abp::dirac_square_charges(o.gamma);

    auto cj = [](abp::cplx v) { return json{{"re", v.real()}, {"im", v.imag()}}; };
    json j;
    j["gamma"] = o.gamma;
    j["traces"] = {{"c_up_minus_alpha", cj(traces.c_up_minus_alpha)},
                   {"c_up_alpha_m1", cj(traces.c_up_alpha_m1)},
                   {"c_down_minus_alpha", cj(traces.c_down_minus_alpha)},
                   {"c_down_alpha_m1", cj(traces.c_down_alpha_m1)}};
    j["membership_self"] = abp::dirac_membership(flux, o.gamma, traces);
    j["square_charges"] = {{"pole", sys.pole},
                           {"determinant", cj(sys.determinant)},
                           {"only_trivial", sys.only_trivial}};
    write_text(o.common.out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Aharonov-Bohm Pauli extensions: spectra, scattering, symmetries"};
    app.require_subcommand(1);

    SpectrumOpts sp;
    auto* c_sp = app.add_subcommand("spectrum", "negative eigenvalues and zero-energy resonances");
    add_common(c_sp, sp.common);
    c_sp->add_option("--mu-min", sp.mu_min, "lower end of the -mu scan");
    c_sp->add_option("--mu-max", sp.mu_max, "upper end of the -mu scan");

    ScatterOpts sc;
    auto* c_sc = app.add_subcommand("scatter", "amplitudes and differential cross sections");
    add_common(c_sc, sc.common);
    c_sc->add_option("--energy", sc.energy, "energy lambda = k^2")->required();
    c_sc->add_option("--omega-grid", sc.omega_grid, "number of angular grid points");
    c_sc->add_option("--exclude-forward", sc.exclude_forward,
                     "half-width of the excluded forward cone (rad)");
    c_sc->add_option("--sign", sc.sign, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));

    EigfunOpts ef;
    auto* c_ef = app.add_subcommand("eigfun", "field grids for eigenfunctions and layers");
    add_common(c_ef, ef.common);
    c_ef->add_option("--field", ef.field, "theta | friedrichs | bound | single-layer");
    c_ef->add_option("--k", ef.k, "wave number");
    c_ef->add_option("--omega", ef.omega, "incidence direction");
    c_ef->add_option("--sign", ef.sign, "plus | minus")->check(CLI::IsMember({"plus", "minus"}));
    c_ef->add_option("--spin", ef.spin, "up | down")->check(CLI::IsMember({"up", "down"}));
    c_ef->add_option("--r-min", ef.r_min);
    c_ef->add_option("--r-max", ef.r_max);
    c_ef->add_option("--r-count", ef.r_count);
    c_ef->add_option("--theta-count", ef.theta_count);
    c_ef->add_option("--mu-min", ef.mu_min);
    c_ef->add_option("--mu-max", ef.mu_max);
    c_ef->add_option("--bound-index", ef.bound_index);
    c_ef->add_option("--charge-index", ef.charge_index);
    c_ef->add_option("--channel", ef.channel, "flat channel index for unit charges");
    c_ef->add_option("--z-re", ef.z_re);
    c_ef->add_option("--z-im", ef.z_im);

    KernelOpts kn;
    auto* c_kn = app.add_subcommand("kernel", "resolvent kernel grid against a fixed point");
    add_common(c_kn, kn.common);
    c_kn->add_option("--z-re", kn.z_re);
    c_kn->add_option("--z-im", kn.z_im);
    c_kn->add_option("--xp-r", kn.xp_r);
    c_kn->add_option("--xp-theta", kn.xp_theta);
    c_kn->add_option("--r-min", kn.r_min);
    c_kn->add_option("--r-max", kn.r_max);
    c_kn->add_option("--r-count", kn.r_count);
    c_kn->add_option("--theta-count", kn.theta_count);

    SymcheckOpts sy;
    auto* c_sy = app.add_subcommand("symcheck", "classify (S,T) transformations");
    add_common(c_sy, sy.common, false);
    c_sy->add_option("--s-json", sy.s_json, "2x2 complex S as {\"re\":[[..]],\"im\":[[..]]}")
        ->required();
    c_sy->add_option("--t-json", sy.t_json, "2x2 real T as [[..],[..]]")->required();
    c_sy->add_flag("--antilinear", sy.antilinear);
    c_sy->add_option("--beta", sy.beta_path, "extension JSON for the invariance check");
    c_sy->add_option("--eta3", sy.eta3);
    c_sy->add_option("--zeta", sy.zeta, "rotation angle");
    c_sy->add_option("--lambda", sy.lambda);

    DiracOpts di;
    auto* c_di = app.add_subcommand("dirac", "Dirac boundary traces and charge relations");
    add_common(c_di, di.common, false);
    c_di->add_option("--gamma", di.gamma, "Dirac extension parameter")->required();
    c_di->add_option("--mu-re", di.mu_re);
    c_di->add_option("--mu-im", di.mu_im);

    try {
        app.parse(argc, argv);
        if (*c_sp) run_spectrum(sp);
        if (*c_sc) run_scatter(sc);
        if (*c_ef) run_eigfun(ef);
        if (*c_kn) run_kernel(kn);
        if (*c_sy) run_symcheck(sy);
        if (*c_di) run_dirac(di);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const abp::numerical_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const abp::domain_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
