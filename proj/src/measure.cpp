#include "sp2q/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace sp2q {

namespace {

void require_density_shape(const Mat4& rho) {
    rho.require_finite();
    if (!is_hermitian(rho, 1e-10)) throw std::invalid_argument("density matrix is not Hermitian");
    if (std::abs(rho.trace() - cd(1.0)) > 1e-10)
        throw std::invalid_argument("density matrix trace is not 1");
}

}  // namespace

DensityMat DensityMat::checked(const Mat4& rho) {
    require_density_shape(rho);
    DensityMat d(rho);
    if (!d.is_positive()) throw std::invalid_argument("density matrix has a negative eigenvalue");
    return d;
}

DensityMat DensityMat::from_reconstruction(const Mat4& rho) {
    require_density_shape(rho);
    return DensityMat(rho);
}

double DensityMat::min_eigenvalue() const { return eigvals_hermitian_4x4(rho_)[3]; }

std::array<double, 4> detection_probabilities(const DensityMat& rho, const Mat4& s) {
    if (!is_unitary(s, 1e-10))
        throw std::invalid_argument("detection_probabilities: gate is not unitary");
    const Mat4 mapped = s * rho.matrix() * s.adjoint();
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[static_cast<std::size_t>(k)] = std::max(0.0, mapped(k, k).real());
    return p;
}

CountTable sample_counts(const std::array<double, 4>& probs, std::uint64_t shots, std::uint64_t seed) {
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("sample_counts: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("sample_counts: probabilities must sum to 1");

    std::array<double, 4> cdf{};
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        acc += probs[static_cast<std::size_t>(k)];
        cdf[static_cast<std::size_t>(k)] = acc;
    }
    cdf[3] = 1.0;  // the last bucket absorbs rounding

    CountTable t;
    t.shots = shots;
    SplitMix64 rng(seed);
    for (std::uint64_t n = 0; n < shots; ++n) {
        const double u = rng.uniform();
        int k = 0;
        while (k < 3 && u >= cdf[static_cast<std::size_t>(k)]) ++k;
        ++t.counts[static_cast<std::size_t>(k)];
    }
    return t;
}

AbEstimate estimate_abs(const CountTable& counts) {
    if (counts.shots == 0) throw std::invalid_argument("estimate_abs: no shots");
    const double n = static_cast<double>(counts.shots);
    std::array<double, 4> f{};
    for (int k = 0; k < 4; ++k)
        f[static_cast<std::size_t>(k)] = static_cast<double>(counts.counts[static_cast<std::size_t>(k)]) / n;
    // detector (Rv, Rh, Lv, Lh) carries (tau3, sigma3) = (+,+), (+,-), (-,+), (-,-)
    return AbEstimate{f[0] + f[1] - f[2] - f[3], f[0] - f[1] + f[2] - f[3], f[0] - f[1] - f[2] + f[3]};
}

AbEstimate exact_abs(const DensityMat& rho, const ObservablePair& pair) {
    auto expect = [&rho](const Mat4& op) { return (rho.matrix() * op).trace().real(); };
    return AbEstimate{expect(pair.a), expect(pair.b), expect(pair.a * pair.b)};
}

DensityMat tomography_reconstruct(const std::array<MeasuredBasis, 5>& runs) {
    for (int k = 1; k <= 5; ++k) {
        const ObservablePair expected = observable_pair(k);
        const MeasuredBasis& run = runs[static_cast<std::size_t>(k - 1)];
        if (frobenius_distance(run.pair.a, expected.a) > 1e-10 ||
            frobenius_distance(run.pair.b, expected.b) > 1e-10)
            throw std::invalid_argument("tomography_reconstruct: runs must carry the five canonical pairs");
    }

    PauliCoefficients c{};
    // rows 1..3 measure (tau_k, sigma_k, tau_k sigma_k) directly
    for (int k = 1; k <= 3; ++k) {
        const MeasuredBasis& run = runs[static_cast<std::size_t>(k - 1)];
        c(k, 0) = run.mean_a;
        c(0, k) = run.mean_b;
        c(k, k) = run.mean_ab;
    }
    // row 4: A = tau1 sigma2, B = tau2 sigma3, AB = -tau3 sigma1
    c(1, 2) = runs[3].mean_a;
    c(2, 3) = runs[3].mean_b;
    c(3, 1) = -runs[3].mean_ab;
    // row 5: A = tau2 sigma1, B = tau3 sigma2, AB = -tau1 sigma3
    c(2, 1) = runs[4].mean_a;
    c(3, 2) = runs[4].mean_b;
    c(1, 3) = -runs[4].mean_ab;

    Mat4 rho = cd(0.25) * Mat4::identity();
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
            if (j == 0 && k == 0) continue;
            rho += cd(0.25 * c(j, k)) * kron(pauli_tau(j), pauli_sigma(k));
        }
    return DensityMat::from_reconstruction(rho);
}

TomographyResult tomography_pipeline(const DensityMat& rho, std::uint64_t shots_per_basis,
                                     std::uint64_t seed) {
    const std::array<GateName, 5> gates{GateName::Tomo1, GateName::Tomo2, GateName::Tomo3,
                                        GateName::Tomo4, GateName::Tomo5};

    // one sub-seed per basis, drawn from the master stream
    SplitMix64 master(seed);
    std::array<std::uint64_t, 5> sub_seeds{};
    for (auto& s : sub_seeds) s = master.next_u64();

    std::array<MeasuredBasis, 5> runs{};
    for (int k = 0; k < 5; ++k) {
        const std::size_t uk = static_cast<std::size_t>(k);
        const ObservablePair pair = observable_pair(k + 1);
        if (shots_per_basis == 0) {
            const AbEstimate e = exact_abs(rho, pair);
            runs[uk] = MeasuredBasis{pair, e.mean_a, e.mean_b, e.mean_ab};
        } else {
            const auto probs = detection_probabilities(rho, gate(gates[uk]));
            const CountTable t = sample_counts(probs, shots_per_basis, sub_seeds[uk]);
            const AbEstimate e = estimate_abs(t);
            runs[uk] = MeasuredBasis{pair, e.mean_a, e.mean_b, e.mean_ab};
        }
    }

    DensityMat out = tomography_reconstruct(runs);
    PauliCoefficients c{};
    for (int j = 0; j <= 3; ++j)
        for (int k = 0; k <= 3; ++k) {
            if (j == 0 && k == 0) continue;
            c(j, k) = (out.matrix() * kron(pauli_tau(j), pauli_sigma(k))).trace().real();
        }
    return TomographyResult{out, c, out.is_positive(), shots_per_basis, seed};
}

}  // namespace sp2q
