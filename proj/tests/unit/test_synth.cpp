#include <cmath>

#include "doctest.h"
#include "sp2q/synth.hpp"
#include "testutil.hpp"

using namespace sp2q;
using testutil::TestRng;

namespace {

const cd I(0.0, 1.0);

Mat2 exp_pauli(double x, const Mat2& p) {
    return cd(std::cos(x)) * Mat2::identity() + cd(0.0, std::sin(x)) * p;
}

Mat2 euler_rebuild(const EulerFactors& f, const Mat2& axis2, const Mat2& axis3) {
    return std::polar(1.0, f.delta) * exp_pauli(0.5 * f.a, axis3) * exp_pauli(0.5 * f.b, axis2) *
           exp_pauli(0.5 * f.c, axis3);
}

// Builds a two-qubit unitary whose polarization blocks have exactly the
// requested singular angles; lets the tests dial in degeneracies.
Mat4 gate_with_angles(double th1, double th2, TestRng& rng) {
    const Mat2 x = testutil::haar_unitary<2>(rng);
    const Mat2 xbar = testutil::haar_unitary<2>(rng);
    const Mat2 dm{{std::polar(1.0, -th1), cd(0), cd(0), std::polar(1.0, -th2)}};
    const Mat2 dp{{std::polar(1.0, th1), cd(0), cd(0), std::polar(1.0, th2)}};
    const Mat2 vr = xbar * dm * x.adjoint();
    const Mat2 vl = xbar * dp * x.adjoint();
    return assemble_from_vs(testutil::haar_unitary<2>(rng), testutil::haar_unitary<2>(rng), vr, vl);
}

double frame_residual(const Mat4& s) {
    const SingularFrame f = singular_frame(s);
    const Blocks b = blocks(s);

    auto outer = [](const Mat2& kets, const Mat2& bras, const std::array<double, 2>& w) {
        Mat2 m;
        for (int k = 0; k < 2; ++k)
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c)
                    m(r, c) += cd(w[static_cast<std::size_t>(k)]) * kets(r, k) * std::conj(bras(c, k));
        return m;
    };

    double res = 0.0;
    res = std::max(res, frobenius_distance(b.srr, outer(f.psibar, f.psi, f.cos_angles)));
    res = std::max(res, frobenius_distance(b.sll, outer(f.chibar, f.chi, f.cos_angles)));
    res = std::max(res, frobenius_distance(I * b.srl, outer(f.psibar, f.chi, f.sin_angles)));
    res = std::max(res, frobenius_distance(I * b.slr, outer(f.chibar, f.psi, f.sin_angles)));
    return res;
}

double orthonormality_defect(const Mat2& pair) {
    return frobenius_distance(pair.adjoint() * pair, Mat2::identity());
}

double roundtrip(const Mat4& u) {
    return frobenius_distance(assemble_two_qubit(compile_two_qubit(u)), u);
}

}  // namespace

TEST_SUITE_BEGIN("synth");

TEST_CASE("euler factors of the identity are all zero") {
    const EulerFactors f = euler_su2(Mat2::identity(), pauli_tau(2), pauli_tau(3));
    CHECK(f.delta == 0.0);
    CHECK(f.a == 0.0);
    CHECK(f.b == 0.0);
    CHECK(f.c == 0.0);
}

TEST_CASE("single-axis rotation goes entirely into the leading angle") {
    const Mat2 u = exp_pauli(M_PI / 4, pauli_tau(3));
    const EulerFactors f = euler_su2(u, pauli_tau(2), pauli_tau(3));
    CHECK(f.delta == doctest::Approx(0.0));
    CHECK(f.a == doctest::Approx(M_PI / 2));
    CHECK(f.b == doctest::Approx(0.0));
    CHECK(f.c == 0.0);
}

TEST_CASE("euler factors rebuild the input") {
    SUBCASE("qwp(pi/3) on the polarization axes") {
        const Mat2 u = qwp(WavePlateAngle(M_PI / 3));
        const EulerFactors f = euler_su2(u, pauli_sigma(3), pauli_sigma(2));
        CHECK(frobenius_distance(euler_rebuild(f, pauli_sigma(3), pauli_sigma(2)), u) < 1e-12);
    }
    SUBCASE("random unitaries on both axis pairs") {
        TestRng rng(43);
        for (int k = 0; k < 300; ++k) {
            const Mat2 u = testutil::haar_unitary<2>(rng);
            const EulerFactors ft = euler_su2(u, pauli_tau(2), pauli_tau(3));
            CHECK(frobenius_distance(euler_rebuild(ft, pauli_tau(2), pauli_tau(3)), u) < 1e-10);
            CHECK(ft.b >= 0.0);
            CHECK(ft.b <= M_PI);
            CHECK(ft.delta > -M_PI);
            CHECK(ft.delta <= M_PI);

            const EulerFactors fs = euler_su2(u, pauli_sigma(3), pauli_sigma(2));
            CHECK(frobenius_distance(euler_rebuild(fs, pauli_sigma(3), pauli_sigma(2)), u) < 1e-10);
        }
    }
    SUBCASE("gimbal-locked inputs, b = 0 and b = pi") {
        TestRng rng(47);
        for (int k = 0; k < 100; ++k) {
            const Mat2 diag{{std::polar(1.0, rng.angle()), cd(0), cd(0), std::polar(1.0, rng.angle())}};
            const EulerFactors f0 = euler_su2(diag, pauli_tau(2), pauli_tau(3));
            CHECK(f0.b == doctest::Approx(0.0));
            CHECK(f0.c == 0.0);
            CHECK(frobenius_distance(euler_rebuild(f0, pauli_tau(2), pauli_tau(3)), diag) < 1e-12);

            const double ph = rng.angle();
            const Mat2 anti{{cd(0), std::polar(1.0, ph), -std::polar(1.0, -ph), cd(0)}};
            const EulerFactors f1 = euler_su2(anti, pauli_tau(2), pauli_tau(3));
            CHECK(f1.b == doctest::Approx(M_PI));
            CHECK(f1.c == 0.0);
            CHECK(frobenius_distance(euler_rebuild(f1, pauli_tau(2), pauli_tau(3)), anti) < 1e-12);
        }
    }
    SUBCASE("non-unitary input rejected") {
        CHECK_THROWS(euler_su2(cd(2.0) * Mat2::identity(), pauli_tau(2), pauli_tau(3)));
    }
}

TEST_CASE("compile_spatial") {
    const MZConfig id = compile_spatial(Mat2::identity());
    CHECK(id.phi1.radians() == 0.0);
    CHECK(id.phi2.radians() == 0.0);
    CHECK(id.vphi1.radians() == 0.0);
    CHECK(id.vphi2.radians() == 0.0);

    CHECK(frobenius_distance(assemble_mz(compile_spatial(beam_splitter())), beam_splitter()) < 1e-12);

    TestRng rng(53);
    for (int k = 0; k < 100; ++k) {
        const Mat2 u = testutil::haar_unitary<2>(rng);
        CHECK(frobenius_distance(assemble_mz(compile_spatial(u)), u) < 1e-10);
    }
}

TEST_CASE("compile_polarization") {
    const StationConfig id = compile_polarization(Mat2::identity());
    CHECK(id.phase.radians() == doctest::Approx(0.0));
    CHECK(frobenius_distance(station_unitary(id), Mat2::identity()) < 1e-12);

    // polarization-dependent phase shifter
    for (double x : {0.3, 1.1, -0.7}) {
        const Mat2 target{{std::polar(1.0, -x), cd(0), cd(0), std::polar(1.0, x)}};
        CHECK(frobenius_distance(station_unitary(compile_polarization(target)), target) < 1e-12);
    }

    TestRng rng(59);
    for (int k = 0; k < 100; ++k) {
        const Mat2 u = testutil::haar_unitary<2>(rng);
        CHECK(frobenius_distance(station_unitary(compile_polarization(u)), u) < 1e-10);
    }
}

TEST_CASE("singular frame of the identity is canonical") {
    const SingularFrame f = singular_frame(Mat4::identity());
    CHECK(f.cos_angles[0] == doctest::Approx(1.0));
    CHECK(f.cos_angles[1] == doctest::Approx(1.0));
    CHECK(frobenius_distance(f.psi, Mat2::identity()) < 1e-12);
    CHECK(frobenius_distance(f.psibar, Mat2::identity()) < 1e-12);
    CHECK(frobenius_distance(f.chi, Mat2::identity()) < 1e-12);
    CHECK(frobenius_distance(f.chibar, Mat2::identity()) < 1e-12);
}

TEST_CASE("singular frame reconstructs degenerate named-gate patterns") {
    // cnot with spatial control: S_RR = 1, S_LL = sigma1, off blocks zero
    Mat4 cnot;
    cnot(0, 0) = cnot(1, 1) = 1.0;
    cnot(2, 3) = cnot(3, 2) = 1.0;
    const SingularFrame f = singular_frame(cnot);
    CHECK(f.cos_angles[0] == doctest::Approx(1.0));
    CHECK(f.cos_angles[1] == doctest::Approx(1.0));
    CHECK(frame_residual(cnot) < 1e-12);

    // Bell gate: all four blocks proportional to unitaries, angles at 45 deg
    const Mat4 bell = cd(1.0 / std::sqrt(2.0)) * (Mat4::identity() - I * kron(pauli_tau(2), pauli_sigma(1)));
    const SingularFrame fb = singular_frame(bell);
    CHECK(fb.cos_angles[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(fb.cos_angles[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(frame_residual(bell) < 1e-12);

    // swap of the two ports: S_RR = S_LL = 0
    const Mat4 crossed = kron(mirror_pair(), qwp(WavePlateAngle(0.4)));
    CHECK(singular_frame(crossed).cos_angles[0] == doctest::Approx(0.0));
    CHECK(frame_residual(crossed) < 1e-12);
}

TEST_CASE("singular frame reconstructs random gates") {
    TestRng rng(61);
    for (int k = 0; k < 200; ++k) {
        const Mat4 s = testutil::haar_unitary<4>(rng);
        const SingularFrame f = singular_frame(s);
        CHECK(f.cos_angles[0] >= f.cos_angles[1]);
        CHECK(f.cos_angles[0] <= 1.0);
        CHECK(f.cos_angles[1] >= 0.0);
        CHECK(frame_residual(s) < 1e-9);
        CHECK(orthonormality_defect(f.psi) < 1e-10);
        CHECK(orthonormality_defect(f.psibar) < 1e-10);
        CHECK(orthonormality_defect(f.chi) < 1e-10);
        CHECK(orthonormality_defect(f.chibar) < 1e-10);
    }
}

TEST_CASE("singular frame survives adversarial angle spectra") {
    TestRng rng(67);
    const double cases[][2] = {
        {1e-2, 1e-2},   {1e-5, 1e-5},        {1e-8, 1e-8},    {1e-12, 1e-12},
        {M_PI / 4, M_PI / 4}, {M_PI / 2 - 1e-5, M_PI / 2 - 1e-5}, {M_PI / 2, M_PI / 2},
        {0.3, 0.3 + 1e-4},    {0.3, 0.3 + 1e-8},  {1e-5, 2e-5},    {M_PI / 4, M_PI / 4 + 1e-9},
        {0.0, 1e-6},    {M_PI / 2, M_PI / 2 - 1e-6}, {0.0, M_PI / 2}, {0.7853, 0.7855}};
    for (const auto& c : cases) {
        for (int rep = 0; rep < 10; ++rep) {
            const Mat4 s = gate_with_angles(c[0], c[1], rng);
            CAPTURE(c[0]);
            CAPTURE(c[1]);
            CHECK(frame_residual(s) < 1e-9);
            CHECK(roundtrip(s) < 1e-8);
        }
    }
}

TEST_CASE("degenerate blocks with a non-scalar unitary factor") {
    // S_RR = cos(phi) sigma1: both singular values coincide while the
    // polar part is far from the identity.
    TestRng rng(71);
    for (double phi : {0.5, 1e-3, 1e-6, 1e-9, M_PI / 2 - 1e-3}) {
        const Mat2 one = Mat2::identity();
        const Mat2 vr = std::polar(1.0, phi) * one;
        const Mat2 vl = std::polar(1.0, -phi) * one;
        const Mat4 s = assemble_from_vs(pauli_sigma(1), one, vr, vl);
        CAPTURE(phi);
        CHECK(frame_residual(s) < 1e-9);
        CHECK(roundtrip(s) < 1e-8);
    }
    (void)rng;
}

TEST_CASE("decompose_vs returns unitaries whose assembly matches") {
    SUBCASE("identity constraints") {
        const VsDecomposition d = decompose_vs(Mat4::identity());
        const Mat2 one = Mat2::identity();
        CHECK(frobenius_distance(cd(0.5) * (d.v2 * (d.vr + d.vl) * d.v1), one) < 1e-10);
        CHECK(frobenius_distance(cd(0.5) * (d.vr + d.vl), one) < 1e-10);
        CHECK(frobenius_distance(d.vr, d.vl) < 1e-10);
    }
    SUBCASE("Bell gate witness") {
        const Mat4 bell =
            cd(1.0 / std::sqrt(2.0)) * (Mat4::identity() - I * kron(pauli_tau(2), pauli_sigma(1)));
        const VsDecomposition d = decompose_vs(bell);
        CHECK(frobenius_distance(assemble_from_vs(d.v1, d.v2, d.vr, d.vl), bell) < 1e-10);
    }
    SUBCASE("random gates") {
        TestRng rng(73);
        for (int k = 0; k < 500; ++k) {
            const Mat4 s = testutil::haar_unitary<4>(rng);
            const VsDecomposition d = decompose_vs(s);
            CHECK(is_unitary(d.v1, 1e-10));
            CHECK(is_unitary(d.v2, 1e-10));
            CHECK(is_unitary(d.vr, 1e-10));
            CHECK(is_unitary(d.vl, 1e-10));
            CHECK(frobenius_distance(assemble_from_vs(d.v1, d.v2, d.vr, d.vl), s) < 1e-9);
        }
    }
}

TEST_CASE("compile_two_qubit round trip") {
    CHECK(roundtrip(Mat4::identity()) < 1e-10);

    const Mat4 wh = cd(0.5) * kron(pauli_tau(1) + pauli_tau(3), pauli_sigma(1) + pauli_sigma(3));
    CHECK(is_unitary(wh, 1e-12));
    CHECK(roundtrip(wh) < 1e-8);

    TestRng rng(79);
    for (int k = 0; k < 300; ++k) {
        CHECK(roundtrip(testutil::haar_unitary<4>(rng)) < 1e-8);
    }

    CHECK_THROWS(compile_two_qubit(cd(1.5) * Mat4::identity()));
}

TEST_SUITE_END();
