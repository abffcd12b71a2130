#include "tcsim/dressed.hpp"

#include "tcsim/qop.hpp"

#include <doctest.h>

#include <Eigen/Dense>

#include <random>

using namespace tcsim;
using namespace tcsim::dressed;

TEST_SUITE_BEGIN("dressed");

TEST_CASE("dressing unitary endpoints and unitarity") {
    CHECK((dressing_unitary(0.0) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() == 0.0);

    const Eigen::Matrix2cd upi = dressing_unitary(pi);
    CHECK(std::abs(upi(0, 1) - Complex(1)) < 1e-15);
    CHECK(std::abs(upi(1, 0) - Complex(-1)) < 1e-15);

    for (double theta : {0.3, 1.1, 2.7}) {
        const Eigen::Matrix2cd u = dressing_unitary(theta);
        CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("lab lowering operator decomposes in the dressed basis") {
    // sigma- = (s~z/2) sin t - s~+ sin^2(t/2) + s~- cos^2(t/2); at t = pi/2
    // the coefficients are (1/2, -1/2, 1/2).
    for (double theta : {pi / 2, 0.4, 2.2}) {
        const double c2 = std::pow(std::cos(theta / 2), 2);
        const double s2 = std::pow(std::sin(theta / 2), 2);
        const Mat szt = dressed_qubit_op(qop::sigma_z(), theta);
        const Mat spt = dressed_qubit_op(qop::sigma_plus(), theta);
        const Mat smt = dressed_qubit_op(qop::sigma_minus(), theta);
        const Mat rhs = 0.5 * std::sin(theta) * szt - s2 * spt + c2 * smt;
        CHECK((qop::sigma_minus() - rhs).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("dressed rates at the trivial angles") {
    auto r0 = dressed_rates(1.0, 1.0, 0.0);
    CHECK(r0.gamma_minus == doctest::Approx(1.0));
    CHECK(r0.gamma_plus == doctest::Approx(0.0));
    CHECK(r0.gamma_phi_tilde == doctest::Approx(1.0));

    auto rpi = dressed_rates(1.0, 0.0, pi);
    CHECK(rpi.gamma_minus == doctest::Approx(0.0));
    CHECK(rpi.gamma_plus == doctest::Approx(1.0));
    CHECK(rpi.gamma_phi_tilde == doctest::Approx(0.0));

    auto rh = dressed_rates(0.0, 2.0, pi / 2);
    CHECK(rh.gamma_minus == doctest::Approx(1.0));
    CHECK(rh.gamma_plus == doctest::Approx(1.0));
    CHECK(rh.gamma_phi_tilde == doctest::Approx(0.0));
}

TEST_CASE("rate sum identity and swap symmetry") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        const double gamma = 2 * u(rng), gamma_phi = 2 * u(rng), theta = pi * u(rng);
        const auto r = dressed_rates(gamma, gamma_phi, theta);
        const double c2 = std::pow(std::cos(theta / 2), 2),
                     s2 = std::pow(std::sin(theta / 2), 2);
        const double sum = gamma * (c2 * c2 + s2 * s2) +
                           gamma_phi * std::pow(std::sin(theta), 2);
        CHECK(std::abs(r.gamma_minus + r.gamma_plus - sum) < 1e-12 * std::max(1.0, sum));

        const auto mirrored = dressed_rates(gamma, 0.0, pi - theta);
        const auto bare = dressed_rates(gamma, 0.0, theta);
        CHECK(std::abs(mirrored.gamma_minus - bare.gamma_plus) < 1e-12);
        CHECK(std::abs(mirrored.gamma_plus - bare.gamma_minus) < 1e-12);
    }
}

TEST_CASE("excitation rate peaks at theta = pi when gamma > gamma_phi") {
    const double gamma = 1.0, gamma_phi = 0.3;
    double best = -1, best_theta = -1;
    for (int i = 0; i <= 200; ++i) {
        const double theta = pi * i / 200;
        const double gp = dressed_rates(gamma, gamma_phi, theta).gamma_plus;
        if (gp > best) {
            best = gp;
            best_theta = theta;
        }
    }
    CHECK(best_theta == doctest::Approx(pi));
}

TEST_CASE("golden rule limits") {
    auto zero = golden_rule_rate(0.0, 1.0, 0.0, 0.0);
    CHECK(zero.lorentzian == 0.0);
    CHECK(zero.saturating == 0.0);

    const double kappa = 1.0, g = 0.01;
    auto weak = golden_rule_rate(g, kappa, 0.5, 0.5);
    CHECK(weak.lorentzian == doctest::Approx(4 * g * g / kappa));
    CHECK(weak.saturating / weak.lorentzian == doctest::Approx(1.0 / (1 + 4 * g * g)));

    auto strong = golden_rule_rate(10.0, 1.0, 0.0, 0.0);
    CHECK(strong.saturating == doctest::Approx(400.0 / 401.0));
    CHECK(strong.saturating < 1.0);  // bounded by kappa
}

TEST_CASE("weak-coupling population against the four-level rate oracle") {
    // Levels (g~0, e~0, g~1, e~1) with kappa photon loss, gamma+/- qubit
    // flips and the one-way golden-rule transfer e~0 -> g~1.
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const double kappa = 1.0, gm = 0.2 * u(rng), gp = 0.2 * u(rng), g = 0.1 * u(rng);
        const double rate = 4 * g * g / kappa;
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        auto add = [&](int from, int to, double r) {
            m(to, from) += r;
            m(from, from) -= r;
        };
        add(0, 1, gp);   // g~0 -> e~0
        add(1, 0, gm);
        add(2, 3, gp);   // g~1 -> e~1
        add(3, 2, gm);
        add(2, 0, kappa);
        add(3, 1, kappa);
        add(1, 2, rate);  // golden-rule transfer
        Eigen::Matrix<double, 5, 4> a;
        a.topRows(4) = m;
        a.row(4).setOnes();
        Eigen::Matrix<double, 5, 1> b = Eigen::Matrix<double, 5, 1>::Zero();
        b(4) = 1.0;
        const Eigen::Vector4d p = a.colPivHouseholderQr().solve(b);

        const DressedRates r{gm, gp, 0.0};
        CHECK(pop_weak_coupling(r, g, kappa) == doctest::Approx(p(0) + p(2)).epsilon(1e-10));
    }
}

TEST_CASE("population formula limits") {
    const DressedRates r{0.3, 0.1, 0.0};
    CHECK(pop_weak_coupling(r, 0.0, 1.0) == doctest::Approx(0.75));
    const DressedRates pure_decay{0.3, 0.0, 0.0};
    CHECK(pop_weak_coupling(pure_decay, 0.5, 1.0) == doctest::Approx(1.0));

    CHECK(pop_strong_coupling(r, 1e9) == doctest::Approx(1.0));
    const DressedRates sym{0.2, 0.2, 0.0};
    CHECK(pop_strong_coupling(sym, 0.0) == doctest::Approx(0.5));

    // Gamma = 0 reduces the main-text form to the undriven balance.
    CHECK(pop_main_text(r, 0.0, 1.0) == doctest::Approx(pop_weak_coupling(r, 0.0, 1.0)));
    const DressedRates north{0.5, 0.0, 0.0};  // theta = 0
    CHECK(pop_main_text(north, 1e-6, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("population formulas coincide at g = 0 and weak form is monotone") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const DressedRates r{0.3 * u(rng), 0.3 * u(rng), 0.0};
        const double kappa = 1.0;
        CHECK(pop_weak_coupling(r, 0, kappa) ==
              doctest::Approx(pop_main_text(r, 0, kappa)).epsilon(1e-12));
        double prev = 0.0;
        for (int i = 0; i <= 40; ++i) {
            const double g = 0.5 * i / 40;
            const double p = pop_weak_coupling(r, g, kappa);
            if (i > 0) CHECK(p >= prev - 1e-12);
            prev = p;
        }
        // the two asymptotes need not meet at large g
        CHECK(pop_weak_coupling(r, 50.0, kappa) != doctest::Approx(pop_strong_coupling(r, kappa)));
    }
}

TEST_CASE("corrected angle and photon ceiling") {
    CHECK(corrected_angle(0.7, 0.0, 0.3, 1.0, 0.5) ==
          doctest::Approx(std::acos(0.5 / std::hypot(1.0, 0.5))));
    CHECK(corrected_angle(0.7, -0.1, 0.0, 1.0, 0.5) ==
          doctest::Approx(std::acos(0.5 / std::hypot(1.0, 0.5))));

    const DressedRates none{0.4, 0.0, 0.0};
    CHECK(nbar_max(none, 1.0) == doctest::Approx(0.0));
    const DressedRates r{0.001, 0.002, 0.0};
    CHECK(nbar_max(r, 1.0) == doctest::Approx(0.002 / 1.003));
}

TEST_CASE("axis from drive settings") {
    DriveSettings drv;
    drv.omega_x = 1.0;
    drv.omega_z = 0.0;
    CHECK(StabilizationAxis::from_drive(drv).theta == doctest::Approx(pi / 2));
    drv.omega_z = -1e9;
    drv.omega_x = 0.0;
    CHECK(StabilizationAxis::from_drive(drv).theta == doctest::Approx(pi));
}

TEST_SUITE_END();
