#include "tcsim/experiments.hpp"

#include "tcsim/qop.hpp"

#include <fftw3.h>

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace tcsim::experiments {

using lindblad::CollapseOp;
using lindblad::Liouvillian;

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
    workers = std::max(1, std::min(workers, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

namespace {

std::vector<CollapseOp> dressed_collapse(const SystemParams& sys, double theta) {
    const int nf = sys.n_fock;
    const dressed::DressedRates r = dressed::dressed_rates(sys.gamma, sys.gamma_phi, theta);
    std::vector<CollapseOp> c;
    c.push_back({sys.kappa, qop::cavity_destroy(nf)});
    c.push_back({r.gamma_minus,
                 qop::qubit_op(dressed::dressed_qubit_op(qop::sigma_minus(), theta), nf)});
    c.push_back({r.gamma_plus,
                 qop::qubit_op(dressed::dressed_qubit_op(qop::sigma_plus(), theta), nf)});
    c.push_back({0.5 * r.gamma_phi_tilde,
                 qop::qubit_op(dressed::dressed_qubit_op(qop::sigma_z(), theta), nf)});
    return c;
}

Mat gtilde_projector(double theta, int n_fock) {
    const Eigen::Matrix2cd u = dressed::dressing_unitary(theta);
    Mat p = Mat::Zero(2, 2);
    Eigen::Vector2cd g = u.col(0);  // U|g>
    p = g * g.adjoint();
    return qop::qubit_op(p, n_fock);
}

struct ThetaDrive {
    double omega_x, omega_z, omega_rabi;
    bool sideband_on;
};

// Grid-endpoint protocol: theta=0 stabilizes |g> by natural decay alone
// (sideband off); theta=pi needs no Rabi drive, only flux modulation, with
// |omega_z| fixed to the nominal Rabi magnitude.
ThetaDrive theta_drive(double theta, double omega_x_fixed) {
    constexpr double edge = 1e-12;
    if (theta <= edge) return {0.0, omega_x_fixed, omega_x_fixed, false};
    if (theta >= pi - edge) return {0.0, -omega_x_fixed, omega_x_fixed, true};
    const double omega_rabi = omega_x_fixed / std::sin(theta);
    return {omega_x_fixed, omega_rabi * std::cos(theta), omega_rabi, true};
}

}  // namespace

Table stabilization_sweep(const SystemParams& sys, const DriveSettings& base,
                          const std::vector<double>& thetas, const SweepOptions& opts) {
    Table t;
    t.columns = {"theta_rad",  "omega_x_hz", "omega_z_hz",     "omega_rabi_hz",
                 "delta_hz",   "g_eff_hz",   "P_gtilde_ME",    "P_weak",
                 "P_strong",   "P_main",     "purity",         "theta_measured",
                 "theta_corrected", "n_bar", "P_gtilde_full",  "purity_full"};
    const int n = int(thetas.size());
    t.rows.assign(n, std::vector<double>(t.columns.size(), 0.0));
    t.row_errors.assign(n, "");

    parallel_for(n, opts.workers, [&](int i) {
        try {
            const double theta = thetas[i];
            if (theta < 0 || theta > pi + 1e-12)
                throw std::invalid_argument("theta outside [0, pi]");
            const ThetaDrive td = theta_drive(theta, base.omega_x);
            const double g_eff = td.sideband_on ? base.omega_b * std::pow(std::sin(theta / 2), 2)
                                                : 0.0;
            const double omega_b = td.sideband_on ? base.omega_b : 0.0;

            DriveSettings drv = base;
            drv.omega_x = td.omega_x;
            drv.omega_z = td.omega_z;
            drv.omega_b = omega_b;
            drv.delta = td.omega_rabi + 2.0 * sys.chi * std::cos(theta);

            const auto collapse = dressed_collapse(sys, theta);
            const Mat proj = gtilde_projector(theta, sys.n_fock);
            const Mat n_op = qop::cavity_op(qop::number(sys.n_fock));

            // Primary model: resonant dressed-frame interaction.
            const Mat smt = qop::qubit_op(dressed::dressed_qubit_op(qop::sigma_minus(), theta),
                                          sys.n_fock);
            const Mat a = qop::cavity_destroy(sys.n_fock);
            Mat h = 0.5 * drv.omega_x * qop::qubit_op(qop::sigma_x(), sys.n_fock) +
                    0.5 * drv.omega_z * qop::qubit_op(qop::sigma_z(), sys.n_fock) +
                    drv.delta * (a.adjoint() * a) +
                    sys.chi * (a.adjoint() * a * qop::qubit_op(qop::sigma_z(), sys.n_fock));
            Mat h_int = g_eff * (a.adjoint() * smt);
            h += h_int + h_int.adjoint();

            const auto ss = lindblad::steady_state(lindblad::build_liouvillian(h, collapse));
            const lindblad::BlochVector b = lindblad::bloch_vector(ss.rho);
            const double n_bar = qop::expect(n_op, ss.rho).real();
            const double p_me = qop::expect(proj, ss.rho).real();

            // Full blue-sideband operator, for comparison.
            const Mat h_full = ham::h_blue_rotating(sys, drv);
            const auto ss_full =
                lindblad::steady_state(lindblad::build_liouvillian(h_full, collapse));
            const lindblad::BlochVector b_full = lindblad::bloch_vector(ss_full.rho);
            const double p_full = qop::expect(proj, ss_full.rho).real();

            const dressed::DressedRates rates =
                dressed::dressed_rates(sys.gamma, sys.gamma_phi, theta);
            auto& row = t.rows[i];
            row[0] = theta;
            row[1] = angular_to_hz(drv.omega_x);
            row[2] = angular_to_hz(drv.omega_z);
            row[3] = angular_to_hz(td.omega_rabi);
            row[4] = angular_to_hz(drv.delta);
            row[5] = angular_to_hz(g_eff);
            row[6] = p_me;
            row[7] = dressed::pop_weak_coupling(rates, g_eff, sys.kappa);
            row[8] = dressed::pop_strong_coupling(rates, sys.kappa);
            row[9] = dressed::pop_main_text(rates, g_eff, sys.kappa);
            row[10] = b.purity;
            row[11] = lindblad::stabilization_angle(b);
            row[12] = dressed::corrected_angle(theta, sys.chi, n_bar, drv.omega_x, drv.omega_z);
            row[13] = n_bar;
            row[14] = p_full;
            row[15] = b_full.purity;
        } catch (const std::exception& e) {
            t.row_errors[i] = e.what();
        }
    });
    return t;
}

Table interaction_comparison(const SystemParams& sys, const DriveSettings& drv,
                             const std::vector<double>& thetas,
                             const std::vector<Interaction>& kinds, const SweepOptions& opts) {
    Table t;
    t.columns = {"theta_rad", "baseline"};
    for (Interaction k : kinds) {
        switch (k) {
            case Interaction::Blue: t.columns.push_back("P_blue"); break;
            case Interaction::Red: t.columns.push_back("P_red"); break;
            case Interaction::Longitudinal: t.columns.push_back("P_longitudinal"); break;
            case Interaction::Purple: t.columns.push_back("P_purple"); break;
        }
    }
    const double omega_rabi = drv.rabi_frequency();
    if (omega_rabi <= 0)
        throw std::invalid_argument("interaction_comparison: Rabi frequency is zero");
    const double coupling = drv.omega_b;

    const int n = int(thetas.size());
    t.rows.assign(n, std::vector<double>(t.columns.size(), 0.0));
    t.row_errors.assign(n, "");

    parallel_for(n, opts.workers, [&](int i) {
        try {
            const double theta = thetas[i];
            const int nf = sys.n_fock;
            const Mat a = qop::cavity_destroy(nf);
            const Mat sp = qop::qubit_op(qop::sigma_plus(), nf);
            const Mat sm = qop::qubit_op(qop::sigma_minus(), nf);
            const Mat sz = qop::qubit_op(qop::sigma_z(), nf);
            const Mat sy = qop::qubit_op(qop::sigma_y(), nf);
            const Mat sx = qop::qubit_op(qop::sigma_x(), nf);

            const double delta = omega_rabi + 2.0 * sys.chi * std::cos(theta);
            const Mat h0 = 0.5 * omega_rabi * std::sin(theta) * sx +
                           0.5 * omega_rabi * std::cos(theta) * sz +
                           delta * (a.adjoint() * a);
            const auto collapse = dressed_collapse(sys, theta);
            const Mat proj = gtilde_projector(theta, nf);
            const dressed::DressedRates r =
                dressed::dressed_rates(sys.gamma, sys.gamma_phi, theta);
            const double denom = r.gamma_minus + r.gamma_plus;
            t.rows[i][0] = theta;
            t.rows[i][1] = denom > 0 ? r.gamma_minus / denom : 1.0;

            for (size_t k = 0; k < kinds.size(); ++k) {
                Mat h_int;
                switch (kinds[k]) {
                    case Interaction::Blue:
                        h_int = coupling * (a.adjoint() * sp + a * sm);
                        break;
                    case Interaction::Red:
                        h_int = coupling * (a.adjoint() * sm + a * sp);
                        break;
                    case Interaction::Longitudinal:
                        h_int = coupling * ((a.adjoint() + a) * sz);
                        break;
                    case Interaction::Purple:
                        h_int = coupling * ((a.adjoint() + a) * sy);
                        break;
                }
                const auto ss =
                    lindblad::steady_state(lindblad::build_liouvillian(h0 + h_int, collapse));
                t.rows[i][2 + k] = qop::expect(proj, ss.rho).real();
            }
        } catch (const std::exception& e) {
            t.row_errors[i] = e.what();
        }
    });
    return t;
}

namespace {

// Direct dense evaluation of the master-equation right-hand side with the
// time-dependent probe term; cheaper than a superoperator matvec at these
// dimensions and reused across every step of a cell.
struct ProbeRhs {
    Mat h0, a, ad;
    std::vector<std::pair<double, Mat>> collapse;  // (rate, op)
    std::vector<Mat> cdc;                          // op†op per collapse
    double eps, delta_p;
    int d;
    mutable Mat rho, h, tmp, drho;

    ProbeRhs(const Mat& h0_, const Mat& a_, std::vector<CollapseOp> cols, double eps_,
             double delta_p_)
        : h0(h0_), a(a_), ad(a_.adjoint()), eps(eps_), delta_p(delta_p_), d(int(h0_.rows())) {
        for (auto& c : cols) {
            if (c.rate <= 0) continue;
            cdc.push_back(c.op.adjoint() * c.op);
            collapse.emplace_back(c.rate, std::move(c.op));
        }
        rho.resize(d, d);
        h.resize(d, d);
        tmp.resize(d, d);
        drho.resize(d, d);
    }

    void operator()(double t, const Vec& y, Vec& dy) const {
        rho = Eigen::Map<const Mat>(y.data(), d, d);
        const Complex ph = std::exp(Complex(0, -delta_p * t));
        h = h0 + eps * (ph * ad + std::conj(ph) * a);
        drho.noalias() = h * rho;
        drho -= (drho.adjoint()).eval();
        drho *= Complex(0, -1);
        for (size_t k = 0; k < collapse.size(); ++k) {
            const double rate = collapse[k].first;
            const Mat& c = collapse[k].second;
            tmp.noalias() = c * rho;
            drho.noalias() += rate * (tmp * c.adjoint());
            tmp.noalias() = cdc[k] * rho;
            drho -= (0.5 * rate) * tmp;
            tmp.noalias() = rho * cdc[k];
            drho -= (0.5 * rate) * tmp;
        }
        dy = Eigen::Map<const Vec>(drho.data(), d * d);
    }
};

}  // namespace

Table spectroscopy_map(const SystemParams& sys, const DriveSettings& drv,
                       const std::vector<double>& probe_offsets,
                       const std::vector<double>& mod_offsets,
                       const SpectroscopyOptions& opts) {
    if (sys.kappa <= 0) throw std::invalid_argument("spectroscopy_map: kappa must be positive");
    if (drv.probe_eps <= 0 || drv.probe_eps > 0.5 * sys.kappa)
        throw std::invalid_argument("spectroscopy_map: probe must satisfy 0 < eps << kappa");

    Table t;
    t.columns = {"mod_offset_hz", "probe_offset_hz", "amplitude"};
    const int np = int(probe_offsets.size()), nm = int(mod_offsets.size());
    const int n = np * nm;
    t.rows.assign(n, std::vector<double>(3, 0.0));
    t.row_errors.assign(n, "");

    parallel_for(n, opts.workers, [&](int cell) {
        const int im = cell / np, ip = cell % np;
        const double dmod = mod_offsets[im], dprobe = probe_offsets[ip];
        t.rows[cell][0] = angular_to_hz(dmod);
        t.rows[cell][1] = angular_to_hz(dprobe);
        try {
            DriveSettings frame = drv;
            frame.omega_x = frame.omega_z = 0.0;
            frame.phase_phi = 0.0;
            frame.delta = -dmod;  // in-frame cavity detuning omega_q + omega_r - omega_d
            const Mat h0 = ham::h_blue_rotating(sys, frame);
            const Mat a = qop::cavity_destroy(sys.n_fock);
            const double delta_p = dprobe - dmod;

            ProbeRhs rhs(h0, a, dressed_collapse(sys, 0.0), drv.probe_eps, delta_p);
            const int d = 2 * sys.n_fock;
            Vec y = qop::vectorize(
                qop::projector(qop::qubit_cavity_ket(0, 0, sys.n_fock)));

            auto f = [&rhs](double tt, const Vec& v, Vec& dv) { rhs(tt, v, dv); };
            const double t_settle = opts.settle_over_kappa / sys.kappa;
            double tcur = 0.0;
            lindblad::integrate_rk45(f, tcur, t_settle, y, opts.integrator);
            tcur = t_settle;

            const double period = two_pi / std::max(std::abs(delta_p), sys.kappa);
            auto average_period = [&](double t0) {
                double acc = 0.0;
                const int m = opts.samples_per_period;
                for (int s = 1; s <= m; ++s) {
                    const double tnext = t0 + period * s / m;
                    lindblad::integrate_rk45(f, tcur, tnext, y, opts.integrator);
                    tcur = tnext;
                    const Mat rho = qop::unvectorize(y, d);
                    acc += std::abs((a * rho).trace());
                }
                return acc / m;
            };

            double prev = average_period(tcur);
            bool converged = false;
            for (int k = 1; k < opts.max_periods; ++k) {
                const double cur = average_period(tcur);
                const double scale = std::max(std::abs(cur), 1e-12);
                if (std::abs(cur - prev) <= opts.converge_rel * scale) {
                    prev = cur;
                    converged = true;
                    break;
                }
                prev = cur;
            }
            if (!converged) t.row_errors[cell] = "periodic steady state not converged";
            t.rows[cell][2] = prev;
        } catch (const std::exception& e) {
            t.row_errors[cell] = e.what();
        }
    });
    return t;
}

lindblad::EvolutionResult vacuum_rabi_trace(const SystemParams& sys, double g_eff,
                                            const std::vector<double>& times,
                                            const lindblad::IntegratorOptions& opts) {
    const Mat h = ham::h_red_rotating(sys, g_eff, -sys.chi);
    std::vector<CollapseOp> collapse;
    if (sys.kappa > 0) collapse.push_back({sys.kappa, qop::cavity_destroy(sys.n_fock)});
    if (sys.gamma > 0)
        collapse.push_back({sys.gamma, qop::qubit_op(qop::sigma_minus(), sys.n_fock)});
    if (sys.gamma_phi > 0)
        collapse.push_back({0.5 * sys.gamma_phi, qop::qubit_op(qop::sigma_z(), sys.n_fock)});
    const auto liou = lindblad::build_liouvillian(h, collapse);
    const auto rho0 =
        lindblad::density_from_ket(qop::qubit_cavity_ket(1, 0, sys.n_fock));
    return lindblad::propagate(liou, rho0, times, opts);
}

double dominant_frequency(double dt, const std::vector<double>& samples) {
    const int n = int(samples.size());
    if (n < 8 || dt <= 0) throw std::invalid_argument("dominant_frequency: bad inputs");
    double mean = 0.0;
    for (double v : samples) mean += v;
    mean /= n;

    const int npad = 8 * n;
    std::vector<double> in(npad, 0.0);
    for (int i = 0; i < n; ++i) in[i] = samples[i] - mean;
    std::vector<fftw_complex> out(npad / 2 + 1);

    static std::mutex plan_mutex;  // fftw planning is not thread-safe
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        plan = fftw_plan_dft_r2c_1d(npad, in.data(), out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(plan_mutex);
        fftw_destroy_plan(plan);
    }

    const int nbins = npad / 2 + 1;
    int kmax = 1;
    double vmax = 0.0;
    auto mag = [&](int k) { return std::hypot(out[k][0], out[k][1]); };
    for (int k = 1; k < nbins - 1; ++k) {
        const double v = mag(k);
        if (v > vmax) {
            vmax = v;
            kmax = k;
        }
    }
    double dk = 0.0;
    if (kmax > 1 && kmax < nbins - 2) {
        const double y1 = mag(kmax - 1), y2 = mag(kmax), y3 = mag(kmax + 1);
        const double den = y1 - 2 * y2 + y3;
        if (den != 0.0) dk = 0.5 * (y1 - y3) / den;
    }
    return two_pi * (kmax + dk) / (npad * dt);
}

double g_from_number_splitting(double chi, double delta, double alpha) {
    if (alpha == 0.0) throw std::invalid_argument("g_from_number_splitting: alpha is zero");
    const double radicand = 2.0 * chi * delta * (delta + alpha) / alpha;
    if (radicand < 0)
        throw InvalidDispersiveRegime("g_from_number_splitting: negative radicand");
    return std::sqrt(radicand);
}

double chi_from_coupling(double g, double delta, double alpha) {
    const double den = 2.0 * delta * (delta + alpha);
    if (den == 0.0) throw std::invalid_argument("chi_from_coupling: zero detuning denominator");
    return g * g * alpha / den;
}

RabiCalibration rabi_rate_calibration(const std::vector<std::array<double, 2>>& samples) {
    const int n = int(samples.size());
    if (n < 2) throw std::invalid_argument("rabi_rate_calibration: need at least 2 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& s : samples) {
        sx += s[0];
        sy += s[1];
        sxx += s[0] * s[0];
        sxy += s[0] * s[1];
    }
    const double det = n * sxx - sx * sx;
    const double scale = std::max(sxx, 1.0e-300);
    if (std::abs(det) <= 1e-12 * n * scale)
        throw std::invalid_argument("rabi_rate_calibration: rank-deficient fit "
                                    "(abscissae not distinct)");
    const double slope = (n * sxy - sx * sy) / det;
    const double intercept = (sy - slope * sx) / n;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = s[1] - (slope * s[0] + intercept);
        ss += r * r;
    }
    return {0.5 * slope, intercept, std::sqrt(ss / n)};
}

}  // namespace tcsim::experiments
