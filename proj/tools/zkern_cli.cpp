#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "zkern/diagonal.hpp"
#include "zkern/fredholm.hpp"
#include "zkern/kernels.hpp"
#include "zkern/monodromy.hpp"
#include "zkern/prediction.hpp"
#include "zkern/specfun.hpp"
#include "zkern/spectral.hpp"
#include "zkern/verify.hpp"

namespace {

using cplx = std::complex<double>;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string g17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void put_complex(std::ostream& os, cplx v) {
    os << g17(v.real()) << ',' << g17(v.imag());
}

void put_matrix(std::ostream& os, const Eigen::Matrix2cd& m) {
    put_complex(os, m(0, 0));
    os << ',';
    put_complex(os, m(0, 1));
    os << ',';
    put_complex(os, m(1, 0));
    os << ',';
    put_complex(os, m(1, 1));
}

struct Opts {
    std::string kernel = "sine";
    double gamma = 1.0;
    double alpha = 0.0;
    double a = 0.0;
    double b = HUGE_VAL;
    double zeta = HUGE_VAL;
    std::string zeta_grid;
    int nodes = 64;
    int steps = 2000;
    std::string zstr;
    std::string wstr;
    std::vector<double> eps;
    double x = 1.0;
    double t = 2.0;
    std::string out;
    bool json = false;
    std::string profile_csv;
    std::string modulus_csv;
    double const_logr = HUGE_VAL;
    double ell = 1.0;
    std::vector<double> coeffs_re;
    std::vector<double> coeffs_im;
    std::string grid;
};

bool given(double v) { return v != HUGE_VAL; }

cplx parse_point(const std::string& s, const char* flag) {
    double re = 0.0, im = 0.0;
    if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) != 2)
        throw UsageError(std::string(flag) + " expects re,im");
    return {re, im};
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0.0, stop = 0.0, step = 0.0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0.0 ||
        stop < start)
        throw UsageError("grid expects start:stop:step with positive step");
    std::vector<double> g;
    const int count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (int k = 0; k < count; ++k) g.push_back(start + step * k);
    return g;
}

std::vector<double> zeta_values(const Opts& o) {
    if (!o.zeta_grid.empty() && given(o.zeta)) throw UsageError("pass --zeta or --zeta-grid, not both");
    if (!o.zeta_grid.empty()) return parse_grid(o.zeta_grid);
    if (given(o.zeta)) return {o.zeta};
    throw UsageError("need --zeta or --zeta-grid");
}

zkern::KernelProfile build_profile(const Opts& o) {
    if (o.kernel == "sine") return zkern::sine_profile(o.gamma);
    if (o.kernel == "bessel") return zkern::bessel_sqrtarg_profile(o.alpha, o.gamma);
    if (o.kernel == "bessel-plain") return zkern::bessel_profile(o.alpha, o.gamma);
    if (o.kernel == "gaussian") return zkern::gaussian_profile();
    if (o.kernel == "airy") return zkern::airy_profile();
    if (o.kernel == "custom") {
        if (o.profile_csv.empty()) throw UsageError("kernel custom needs --profile-csv");
        return zkern::custom_profile_csv(o.profile_csv);
    }
    throw UsageError("unknown kernel: " + o.kernel);
}

zkern::KernelProfile build_zclass_profile(const Opts& o) {
    zkern::KernelProfile p = build_profile(o);
    if (p.kind != zkern::KernelKind::zclass)
        throw UsageError("this command needs a symbol-based kernel (sine, bessel, custom)");
    return p;
}

std::pair<double, double> det_interval(const Opts& o, const zkern::KernelProfile& prof,
                                       double zeta) {
    if (prof.kind == zkern::KernelKind::gaussian)
        return {zeta, given(o.b) ? o.b : std::max(zeta + 4.0, 6.5)};
    if (prof.kind == zkern::KernelKind::airy)
        return {zeta, given(o.b) ? o.b : zeta + zkern::airy_truncation_length(zeta)};
    return {o.a, zeta};
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int run_det(const Opts& o) {
    const zkern::KernelProfile prof = build_profile(o);
    std::vector<double> zg;
    if (prof.kind == zkern::KernelKind::zclass && o.zeta_grid.empty() && !given(o.zeta) &&
        given(o.b)) {
        zg = {o.b};
    } else {
        zg = zeta_values(o);
    }
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "zeta,logdet,det\n";
    for (double z : zg) {
        const auto [l, r] = det_interval(o, prof, z);
        const double ld = zkern::log_det(zkern::discretize(prof, l, r, o.nodes));
        os << g17(z) << ',' << g17(ld) << ',' << g17(std::exp(ld)) << '\n';
    }
    return 0;
}

int run_sigma(const Opts& o) {
    const zkern::KernelProfile prof = build_zclass_profile(o);
    const std::vector<double> zg = zeta_values(o);
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "zeta,s11_re,s11_im,s12_re,s12_im,s21_re,s21_im,s22_re,s22_im,"
          "m11_re,m11_im,m12_re,m12_im,m21_re,m21_im,m22_re,m22_im\n";
    for (double z : zg) {
        const Eigen::Matrix2cd s = zkern::sigma1_at(prof, o.a, z, o.nodes);
        const Eigen::Matrix2cd m = zkern::m_matrix(s);
        os << g17(z) << ',';
        put_matrix(os, s);
        os << ',';
        put_matrix(os, m);
        os << '\n';
    }
    return 0;
}

int run_density(const Opts& o) {
    const zkern::KernelProfile prof = build_zclass_profile(o);
    const std::vector<double> zg = zeta_values(o);
    const double right = given(o.b) ? o.b : zg.back();
    const zkern::DensityField field =
        zkern::density_field(zkern::sigma1_density(prof, o.a, right, o.nodes));
    const auto fd = zkern::density_fd(prof, o.a, right, zg, o.nodes);
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "zeta,t11_re,t11_im,t12_re,t12_im,t21_re,t21_im,t22_re,t22_im,"
          "f11_re,f11_im,f12_re,f12_im,f21_re,f21_im,f22_re,f22_im,residual\n";
    for (std::size_t j = 0; j < zg.size(); ++j) {
        const Eigen::Matrix2cd c = field.at(zg[j]);
        const Eigen::Matrix2cd d = fd[j].d;
        os << g17(zg[j]) << ',';
        put_matrix(os, c);
        os << ',';
        put_matrix(os, d);
        os << ',' << g17((c - d).cwiseAbs().maxCoeff()) << '\n';
    }
    return 0;
}

int run_monodromy(const Opts& o) {
    const zkern::KernelProfile prof = build_zclass_profile(o);
    if (!given(o.b)) throw UsageError("need --b");
    if (o.zstr.empty()) throw UsageError("need --z re,im");
    const cplx z = parse_point(o.zstr, "--z");
    const zkern::DensityField field =
        zkern::density_field(zkern::sigma1_density(prof, o.a, o.b, o.nodes));
    const Eigen::Matrix2cd W = zkern::transfer(field, o.a, o.b, z, o.steps).W;
    const Eigen::Matrix2cd Wc = zkern::transfer(field, o.a, o.b, std::conj(z), o.steps).W;
    const Eigen::Matrix2cd J = zkern::jmatrix();
    const double junit = (Wc.adjoint() * J * W - J).cwiseAbs().maxCoeff();
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "z_re,z_im,w11_re,w11_im,w12_re,w12_im,w21_re,w21_im,w22_re,w22_im,"
          "det_re,det_im,junitarity\n";
    put_complex(os, z);
    os << ',';
    put_matrix(os, W);
    os << ',';
    put_complex(os, W.determinant());
    os << ',' << g17(junit) << '\n';
    return 0;
}

int run_jump(const Opts& o) {
    const zkern::KernelProfile prof = build_zclass_profile(o);
    if (!given(o.b)) throw UsageError("need --b");
    if (o.eps.empty()) throw UsageError("need --eps list");
    if (!(o.x > o.a && o.x < o.b)) throw UsageError("--x must lie inside (a, b)");
    const zkern::DensityField field =
        zkern::density_field(zkern::sigma1_density(prof, o.a, o.b, o.nodes));
    const cplx psi = prof.phi(o.x) * prof.phi(o.x) / 2.0;
    const Eigen::Matrix2cd Rsq = zkern::zclass_jmodule(psi).Rsq;
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "eps,residual\n";
    for (double e : o.eps) {
        const auto [wp, wm] = zkern::boundary_pair(field, o.a, o.b, o.x, e, o.steps);
        os << g17(e) << ',' << g17(zkern::jump_residual(wp, wm, Rsq)) << '\n';
    }
    return 0;
}

int run_diz(const Opts& o) {
    const std::vector<double> zg = zeta_values(o);
    const auto recs = zkern::diz_residual(o.gamma, zg, o.nodes);
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "zeta,lhs,rhs,residual\n";
    for (const auto& r : recs)
        os << g17(r.zeta) << ',' << g17(r.lhs) << ',' << g17(r.rhs) << ',' << g17(r.residual)
           << '\n';
    return 0;
}

int run_outer(const Opts& o) {
    zkern::ModulusProfile prof;
    if (!o.modulus_csv.empty()) {
        prof = zkern::modulus_from_csv(o.modulus_csv);
    } else if (given(o.const_logr)) {
        if (!given(o.b)) throw UsageError("need --b for a constant modulus");
        prof = zkern::modulus_const(o.a, o.b, o.const_logr);
    } else {
        throw UsageError("need --modulus-csv or --const-logr");
    }
    if (o.zstr.empty()) throw UsageError("need --z re,im");
    const cplx z = parse_point(o.zstr, "--z");
    const cplx w = o.wstr.empty() ? cplx(0.0, 1.0) : parse_point(o.wstr, "--w");
    const cplx val = zkern::outer_transfer(prof, z);
    const double margin = (z.imag() > 0.0 && w.imag() > 0.0)
                              ? zkern::maximality_margin(prof, z, w)
                              : std::nan("");
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "z_re,z_im,w_re,w_im,modulus,margin\n";
    put_complex(os, z);
    os << ',';
    put_complex(os, val);
    os << ',' << g17(std::abs(val)) << ',' << g17(margin) << '\n';
    return 0;
}

int run_diag(const Opts& o) {
    zkern::PolySample p;
    if (o.coeffs_re.empty()) throw UsageError("need --coeffs");
    if (!o.coeffs_im.empty() && o.coeffs_im.size() != o.coeffs_re.size())
        throw UsageError("--coeffs-im must match --coeffs in length");
    for (std::size_t k = 0; k < o.coeffs_re.size(); ++k)
        p.coeffs.push_back({o.coeffs_re[k], o.coeffs_im.empty() ? 0.0 : o.coeffs_im[k]});
    p.ell = o.ell;
    p.alpha = o.alpha;
    std::vector<double> grid;
    if (!o.grid.empty())
        grid = parse_grid(o.grid);
    else
        grid = {0.25 * p.ell, 0.5 * p.ell, 0.75 * p.ell};
    const zkern::GenPoly back = zkern::frac_power_gen(
        zkern::frac_power_gen(zkern::gen_from_poly(p), p.alpha, 1), p.alpha, -1);
    Output out(o.out);
    std::ostream& os = out.stream();
    os << "x,similarity,roundtrip\n";
    for (double x : grid) {
        const double sim = zkern::similarity_residual(p, {x});
        const double rt = std::abs(zkern::gen_eval(back, x) - zkern::poly_eval(p, x));
        os << g17(x) << ',' << g17(sim) << ',' << g17(rt) << '\n';
    }
    return 0;
}

int run_cd(const Opts& o) {
    Output out(o.out);
    std::ostream& os = out.stream();
    if (o.kernel == "airy") {
        const zkern::KernelProfile prof = zkern::airy_profile();
        const double direct = zkern::kernel_eval(prof, o.x, o.t);
        const double integral = zkern::airy_cd(o.x, o.t);
        os << "x,t,direct,integral,residual\n";
        os << g17(o.x) << ',' << g17(o.t) << ',' << g17(direct) << ',' << g17(integral) << ','
           << g17(std::abs(direct - integral)) << '\n';
        return 0;
    }
    if (o.kernel == "bessel") {
        const zkern::KernelProfile sq = zkern::bessel_sqrtarg_profile(o.alpha, o.gamma);
        const zkern::KernelProfile pl = zkern::bessel_profile(o.alpha, o.gamma);
        const double adopted = zkern::kernel_eval(sq, o.x, o.t);
        const double plain = zkern::kernel_eval(pl, o.x, o.t);
        const double integral = zkern::bessel_cd(o.x, o.t, o.alpha, o.gamma);
        os << "x,t,adopted,plain,integral,adopted_residual,plain_residual\n";
        os << g17(o.x) << ',' << g17(o.t) << ',' << g17(adopted) << ',' << g17(plain) << ','
           << g17(integral) << ',' << g17(std::abs(adopted - integral)) << ','
           << g17(std::abs(plain - integral)) << '\n';
        return 0;
    }
    throw UsageError("cd needs --kernel bessel or --kernel airy");
}

int run_verify(const Opts& o) {
    const zkern::VerifyReport rep = zkern::run_verification();
    Output out(o.out);
    out.stream() << zkern::report_json(rep) << '\n';
    return rep.all_passed() ? 0 : 1;
}

void add_common(CLI::App* cmd, Opts& o) {
    cmd->add_option("--kernel", o.kernel, "sine, bessel, bessel-plain, gaussian, airy, custom");
    cmd->add_option("--gamma", o.gamma, "coupling constant");
    cmd->add_option("--alpha", o.alpha, "order / similarity exponent");
    cmd->add_option("--a", o.a, "left endpoint");
    cmd->add_option("--b", o.b, "right endpoint");
    cmd->add_option("--zeta", o.zeta, "single zeta value");
    cmd->add_option("--zeta-grid", o.zeta_grid, "start:stop:step");
    cmd->add_option("--nodes", o.nodes, "quadrature nodes");
    cmd->add_option("--steps", o.steps, "product-integral steps");
    cmd->add_option("--z", o.zstr, "complex point re,im");
    cmd->add_option("--eps", o.eps, "epsilon list")->delimiter(',');
    cmd->add_option("--out", o.out, "write to file instead of stdout");
    cmd->add_flag("--json", o.json, "JSON output where supported");
    cmd->add_option("--profile-csv", o.profile_csv, "samples for --kernel custom");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integrable-kernel determinants, spectral densities, and transfer matrices"};
    app.require_subcommand(1);
    Opts o;

    CLI::App* det = app.add_subcommand("det", "Fredholm determinant over a zeta grid");
    add_common(det, o);
    CLI::App* sigma = app.add_subcommand("sigma", "spectral function and its M-matrix");
    add_common(sigma, o);
    CLI::App* density = app.add_subcommand("density", "spectral density via both routes");
    add_common(density, o);
    CLI::App* monodromy = app.add_subcommand("monodromy", "transfer matrix at a point");
    add_common(monodromy, o);
    CLI::App* jump = app.add_subcommand("jump", "two-sided boundary residual table");
    add_common(jump, o);
    jump->add_option("--x", o.x, "interior point");
    CLI::App* diz = app.add_subcommand("diz", "log-determinant derivative identity table");
    add_common(diz, o);
    CLI::App* outer = app.add_subcommand("outer", "maximal scalar factor from a modulus");
    add_common(outer, o);
    outer->add_option("--modulus-csv", o.modulus_csv, "boundary modulus samples, header x,R");
    outer->add_option("--const-logr", o.const_logr, "constant log R on [a, b]");
    outer->add_option("--w", o.wstr, "competitor zero re,im");
    CLI::App* diag = app.add_subcommand("diag", "triangular-model similarity residuals");
    add_common(diag, o);
    diag->add_option("--ell", o.ell, "interval length");
    diag->add_option("--coeffs", o.coeffs_re, "real parts of coefficients")->delimiter(',');
    diag->add_option("--coeffs-im", o.coeffs_im, "imaginary parts")->delimiter(',');
    diag->add_option("--grid", o.grid, "evaluation grid start:stop:step");
    CLI::App* cd = app.add_subcommand("cd", "kernel vs integral-form residuals");
    add_common(cd, o);
    cd->add_option("--x", o.x, "first argument");
    cd->add_option("--t", o.t, "second argument");
    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    add_common(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(det)) return run_det(o);
        if (app.got_subcommand(sigma)) return run_sigma(o);
        if (app.got_subcommand(density)) return run_density(o);
        if (app.got_subcommand(monodromy)) return run_monodromy(o);
        if (app.got_subcommand(jump)) return run_jump(o);
        if (app.got_subcommand(diz)) return run_diz(o);
        if (app.got_subcommand(outer)) return run_outer(o);
        if (app.got_subcommand(diag)) return run_diag(o);
        if (app.got_subcommand(cd)) return run_cd(o);
        if (app.got_subcommand(verify)) return run_verify(o);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}
