#include "tcsim/hamiltonians.hpp"

#include "tcsim/dressed.hpp"
#include "tcsim/qop.hpp"

#include <doctest.h>

#include <cmath>

using namespace tcsim;
using namespace tcsim::ham;

namespace {

SystemParams device_system() {
    SystemParams s;
    s.omega_q = two_pi * 4.343e9;
    s.omega_r = two_pi * 5.439e9;
    s.chi = 0.0;
    s.kappa = two_pi * 1.6e6;
    s.gamma = two_pi * 7.6e3;
    s.gamma_phi = two_pi * 3.0e3;
    s.n_fock = 4;
    return s;
}

Vec kron_vec(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

// <e~ 0| H_int |g~ 1> via the explicit dressing transformation.
Complex dressed_matrix_element(const Mat& h_int, double theta, int n_fock) {
    const Eigen::Matrix2cd u = dressed::dressing_unitary(theta);
    Vec gt(2), et(2);
    gt << u(0, 0), u(1, 0);
    et << u(0, 1), u(1, 1);
    Vec fock0 = Vec::Zero(n_fock), fock1 = Vec::Zero(n_fock);
    fock0(0) = 1;
    fock1(1) = 1;
    const Vec e0 = kron_vec(et, fock0);
    const Vec g1 = kron_vec(gt, fock1);
    return e0.adjoint() * (h_int * g1);
}

}  // namespace

TEST_SUITE_BEGIN("hamiltonians");

TEST_CASE("static Hamiltonian spectrum") {
    SystemParams s = device_system();
    SUBCASE("uncoupled spectrum is omega_q/2 offsets plus the photon ladder") {
        const Mat h = h_static(s, 0.0, 0.0);
        const auto eig = qop::eig_hermitian(h);
        std::vector<double> want;
        for (int q : {0, 1})
            for (int n = 0; n < s.n_fock; ++n)
                want.push_back((q ? 0.5 : -0.5) * s.omega_q + n * s.omega_r);
        std::sort(want.begin(), want.end());
        for (int k = 0; k < 2 * s.n_fock; ++k)
            CHECK(eig.values(k) == doctest::Approx(want[k]).epsilon(1e-12));
    }

    SUBCASE("Jaynes-Cummings doublet at resonance") {
        s.omega_r = s.omega_q;
        const double g = two_pi * 40e6;
        const auto eig = qop::eig_hermitian(h_static(s, g, 0.0));
        // single-excitation doublet sits right above the ground state
        CHECK(eig.values(2) - eig.values(1) == doctest::Approx(2 * g).epsilon(1e-10));
    }

    SUBCASE("construction matches a naive basis-state loop") {
        const double gr = two_pi * 12e6, gb = two_pi * 74e6;
        const Mat h = h_static(s, gr, gb);
        const int nf = s.n_fock;
        Mat ref = Mat::Zero(2 * nf, 2 * nf);
        auto idx = [nf](int q, int n) { return q * nf + n; };
        for (int q = 0; q < 2; ++q)
            for (int n = 0; n < nf; ++n) {
                ref(idx(q, n), idx(q, n)) = n * s.omega_r + (q ? 0.5 : -0.5) * s.omega_q;
                // -g_r (a† s- + a s+)
                if (q == 1 && n + 1 < nf)
                    ref(idx(0, n + 1), idx(1, n)) -= gr * std::sqrt(n + 1.0);
                if (q == 0 && n > 0) ref(idx(1, n - 1), idx(0, n)) -= gr * std::sqrt(double(n));
                // -g_b (a† s+ + a s-)
                if (q == 0 && n + 1 < nf)
                    ref(idx(1, n + 1), idx(0, n)) -= gb * std::sqrt(n + 1.0);
                if (q == 1 && n > 0) ref(idx(0, n - 1), idx(1, n)) -= gb * std::sqrt(double(n));
            }
        CHECK((h - ref).cwiseAbs().maxCoeff() < 1e-12 * h.cwiseAbs().maxCoeff());
        CHECK(qop::is_hermitian(h));
    }
}

TEST_CASE("red-sideband rotating frame") {
    SystemParams s = device_system();
    const double g = two_pi * 40e6;

    SUBCASE("resonant splitting is 2g") {
        // the n-excitation manifolds split by 2g sqrt(n); the single-photon
        // doublet at +-g is the avoided crossing of |e0> and |g1>
        const auto eig = qop::eig_hermitian(h_red_rotating(s, g, 0.0));
        const int d = 2 * s.n_fock;
        for (double target : {-g, g}) {
            double closest = 1e300;
            for (int k = 0; k < d; ++k)
                closest = std::min(closest, std::abs(eig.values(k) - target));
            CHECK(closest < 1e-9 * g);
        }
    }

    SUBCASE("closed-system transfer completes at t = pi/2g") {
        // expm oracle: P_e(t) = cos^2(gt), full transfer at 6.25 ns for
        // g/2pi = 40 MHz.
        const Mat h = h_red_rotating(s, g, 0.0);
        const auto eig = qop::eig_hermitian(h);
        const Vec e0 = qop::qubit_cavity_ket(1, 0, s.n_fock);
        const Mat pe = qop::qubit_op((qop::identity(2) + qop::sigma_z()) / 2.0, s.n_fock);
        for (double t : {1e-9, 3e-9, 6.25e-9}) {
            Vec phases(2 * s.n_fock);
            for (int k = 0; k < 2 * s.n_fock; ++k)
                phases(k) = std::exp(Complex(0, -eig.values(k) * t));
            const Vec psi = eig.vectors * phases.asDiagonal() * eig.vectors.adjoint() * e0;
            const double p = (psi.adjoint() * (pe * psi))(0).real();
            CHECK(p == doctest::Approx(std::pow(std::cos(g * t), 2)).epsilon(1e-9));
        }
    }

    SUBCASE("dispersive term shifts the crossing") {
        s.chi = -two_pi * 1e6;
        const Mat h = h_red_rotating(s, 0.0, -s.chi);
        // with detuning = -chi the |e0> and |g1> energies coincide
        const Vec e0 = qop::qubit_cavity_ket(1, 0, s.n_fock);
        const Vec g1 = qop::qubit_cavity_ket(0, 1, s.n_fock);
        const Complex ee = e0.adjoint() * (h * e0);
        const Complex gg = g1.adjoint() * (h * g1);
        CHECK(std::abs(ee - gg) < 1e-3);
    }
}

TEST_CASE("blue-sideband rotating frame") {
    SystemParams s = device_system();
    s.chi = 0.0;
    DriveSettings drv;
    drv.omega_b = two_pi * 0.5e6;
    drv.delta = two_pi * 9e6;

    SUBCASE("diagonal when only detunings act; |g0> is the ground state") {
        DriveSettings d0;
        d0.omega_z = two_pi * 9e6;
        d0.delta = two_pi * 9e6;
        const Mat h = h_blue_rotating(s, d0);
        CHECK((h - Mat(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() < 1e-9);
        const auto eig = qop::eig_hermitian(h);
        const Vec g0 = qop::qubit_cavity_ket(0, 0, s.n_fock);
        CHECK(std::abs((g0.adjoint() * (h * g0))(0).real() - eig.values(0)) < 1e-6);
    }

    SUBCASE("dressed matrix element is Omega_b sin^2(theta/2)") {
        const Mat a = qop::cavity_destroy(s.n_fock);
        const Mat sp = qop::qubit_op(qop::sigma_plus(), s.n_fock);
        const Mat sm = qop::qubit_op(qop::sigma_minus(), s.n_fock);
        const Mat h_int = drv.omega_b * (a.adjoint() * sp + a * sm);
        for (double theta : {0.3, 1.2, 2.4, pi}) {
            const Complex el = dressed_matrix_element(h_int, theta, s.n_fock);
            CHECK(std::abs(el) ==
                  doctest::Approx(drv.omega_b * std::pow(std::sin(theta / 2), 2))
                      .epsilon(1e-10));
        }
    }

    SUBCASE("photon number is conserved without the sideband") {
        DriveSettings d0 = drv;
        d0.omega_b = 0.0;
        d0.omega_x = two_pi * 9e6;
        const Mat h = h_blue_rotating(s, d0);
        const Mat n = qop::cavity_op(qop::number(s.n_fock));
        CHECK((h * n - n * h).cwiseAbs().maxCoeff() < 1e-3);
    }

    SUBCASE("every builder returns a Hermitian operator") {
        DriveSettings d1 = drv;
        d1.omega_x = two_pi * 9e6;
        d1.phase_phi = 0.77;
        d1.omega_p_sb = two_pi * 1e6;
        s.chi = -two_pi * 1e6;
        for (const Mat& h :
             {h_blue_rotating(s, d1), h_purple_rotating(s, d1), h_longitudinal(s, two_pi * 1e6, d1),
              h_red_rotating(s, two_pi * 40e6, two_pi * 1e6), h_static(s, two_pi * 12e6, two_pi * 74e6)})
            CHECK(qop::is_hermitian(h));
    }
}

TEST_CASE("purple sideband") {
    SystemParams s = device_system();
    const int nf = s.n_fock;
    DriveSettings drv;
    drv.omega_p_sb = two_pi * 1e6;
    drv.delta = two_pi * 100e6;

    SUBCASE("(a†+a) sigma_y equals i[(a†+a)s- - (a†+a)s+]") {
        const Mat a = qop::cavity_destroy(nf);
        const Mat lhs = (a.adjoint() + a) * qop::qubit_op(qop::sigma_y(), nf);
        const Mat rhs = Complex(0, 1) * ((a.adjoint() + a) * qop::qubit_op(qop::sigma_minus(), nf) -
                                         (a.adjoint() + a) * qop::qubit_op(qop::sigma_plus(), nf));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-15);
    }

    SUBCASE("dressed matrix element is theta-independent") {
        const Mat h_int = h_purple_rotating(s, drv) -
                          h_purple_rotating(s, [] {
                              DriveSettings d;
                              d.delta = two_pi * 100e6;
                              return d;
                          }());
        for (double theta : {0.0, pi / 4, pi / 2, 3 * pi / 4, pi}) {
            const Complex el = dressed_matrix_element(h_int, theta, nf);
            CHECK(std::abs(std::abs(el) - drv.omega_p_sb) < 1e-12 * drv.omega_p_sb);
        }
    }

    SUBCASE("phase pi/2 in the dressed ladder combination reproduces sigma_y up to sign") {
        // e^{i phi} s~+ + e^{-i phi} s~- at phi = pi/2 equals i(s~+ - s~-),
        // which is theta-independent and equals -sigma_y in this basis
        // ordering (+sigma_y at phi = -pi/2).
        for (double theta : {0.0, 0.9, 2.1}) {
            const Mat spt = dressed::dressed_qubit_op(qop::sigma_plus(), theta);
            const Mat smt = dressed::dressed_qubit_op(qop::sigma_minus(), theta);
            const Mat plus = Complex(0, 1) * spt + Complex(0, -1) * smt;
            CHECK((plus + qop::sigma_y()).cwiseAbs().maxCoeff() < 1e-14);
            const Mat minus = Complex(0, -1) * spt + Complex(0, 1) * smt;
            CHECK((minus - qop::sigma_y()).cwiseAbs().maxCoeff() < 1e-14);
        }
    }

    SUBCASE("purple is the equal-weight two-tone combination of red and blue") {
        // phased drive tones: red at +pi/2 and blue at -pi/2, equal weights
        const Mat a = qop::cavity_destroy(nf);
        const Mat sp = qop::qubit_op(qop::sigma_plus(), nf);
        const Mat sm = qop::qubit_op(qop::sigma_minus(), nf);
        const Complex i_unit(0, 1);
        const Mat red_phased = i_unit * (a.adjoint() * sm) - i_unit * (a * sp);
        const Mat blue_phased = -i_unit * (a.adjoint() * sp) + i_unit * (a * sm);
        const Mat purple = (a.adjoint() + a) * qop::qubit_op(qop::sigma_y(), nf);
        CHECK((purple - (red_phased + blue_phased)).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("longitudinal interaction") {
    SystemParams s = device_system();
    const int nf = s.n_fock;
    DriveSettings drv;
    drv.delta = two_pi * 100e6;
    const double omega_l = two_pi * 1e6;
    const Mat a = qop::cavity_destroy(nf);
    const Mat h_int = omega_l * ((a.adjoint() + a) * qop::qubit_op(qop::sigma_z(), nf));

    SUBCASE("element vanishes at theta = pi and scales as |sin theta|") {
        CHECK(std::abs(dressed_matrix_element(h_int, pi, nf)) < 1e-9 * omega_l);
        for (double theta : {0.5, pi / 2, 2.5}) {
            const Complex el = dressed_matrix_element(h_int, theta, nf);
            CHECK(std::abs(el) ==
                  doctest::Approx(omega_l * std::abs(std::sin(theta))).epsilon(1e-10));
        }
    }

    SUBCASE("zero strength leaves no qubit-cavity block") {
        const Mat h = h_longitudinal(s, 0.0, drv);
        const Mat n = qop::cavity_op(qop::number(nf));
        CHECK((h * n - n * h).cwiseAbs().maxCoeff() < 1e-4);
    }
}

TEST_CASE("optimal detunings") {
    SystemParams s = device_system();
    DriveSettings drv;
    drv.omega_x = two_pi * 9e6;

    SUBCASE("chi = 0 gives delta = Omega_R") {
        const auto d = optimal_detunings(s, drv, pi / 2);
        CHECK(d.delta == doctest::Approx(drv.rabi_frequency()));
        CHECK(d.omega_1 == doctest::Approx(s.omega_q));
        CHECK(d.omega_2 == doctest::Approx(s.omega_q + s.omega_r - drv.rabi_frequency()));
    }

    SUBCASE("theta = pi with a pure detuning drive") {
        s.chi = -two_pi * 1e6;
        DriveSettings d2;
        d2.omega_x = 0.0;
        d2.omega_z = -two_pi * 9e6;
        const auto d = optimal_detunings(s, d2, pi);
        CHECK(d.delta == doctest::Approx(two_pi * 9e6 - 2 * s.chi));
    }
}

TEST_CASE("validity guard flags strong drives and slow Rabi frequencies") {
    SystemParams s = device_system();
    DriveSettings drv;
    drv.omega_x = 0.1 * s.omega_q;
    CHECK(!rwa_validity_warnings(s, drv).empty());

    DriveSettings slow;
    slow.omega_x = 5.0 * s.gamma;
    CHECK(!rwa_validity_warnings(s, slow).empty());

    DriveSettings fine;
    fine.omega_x = two_pi * 9e6;
    CHECK(rwa_validity_warnings(s, fine).empty());
}

TEST_SUITE_END();
