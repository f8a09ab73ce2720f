#ifndef SP2Q_MEASURE_HPP
#define SP2Q_MEASURE_HPP

#include <array>
#include <cstdint>

#include "sp2q/gates.hpp"
#include "sp2q/mat.hpp"

namespace sp2q {

/// SplitMix64: the project's seedable generator.  Pure 64-bit integer
/// arithmetic, so identical seeds give identical streams on every
/// platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// 4x4 density operator: Hermitian, unit trace.  Inputs are also
/// required to be positive semidefinite; linear-inversion outputs may
/// carry small negative eigenvalues, which are reported rather than
/// rejected.
class DensityMat {
  public:
    /// Full validation: Hermitian and unit trace within 1e-10,
    /// eigenvalues >= -1e-10.  Throws std::invalid_argument otherwise.
    static DensityMat checked(const Mat4& rho);

    /// For reconstruction results: validates Hermiticity and trace only.
    static DensityMat from_reconstruction(const Mat4& rho);

    static DensityMat pure(const StateVec& v) { return checked(projector(v)); }

    const Mat4& matrix() const { return rho_; }
    double min_eigenvalue() const;
    bool is_positive(double tol = 1e-10) const { return min_eigenvalue() >= -tol; }

  private:
    explicit DensityMat(const Mat4& rho) : rho_(rho) {}
    Mat4 rho_;
};

/// Detector clicks over the four standard outcomes (Rv, Rh, Lv, Lh).
struct CountTable {
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t shots = 0;
};

/// The 15 expectation values <tau_j sigma_k>, (j,k) != (0,0).
struct PauliCoefficients {
    std::array<std::array<double, 4>, 4> c{};  // c[0][0] unused

    double& operator()(int j, int k) { return c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)]; }
    double operator()(int j, int k) const {
        return c[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
};

/// p_k = <k| s rho s^dag |k> over the standard basis.
std::array<double, 4> detection_probabilities(const DensityMat& rho, const Mat4& s);

/// Multinomial draw by inverse CDF, one uniform per shot.  Deterministic
/// for a given (probs, shots, seed) triple.
CountTable sample_counts(const std::array<double, 4>& probs, std::uint64_t shots, std::uint64_t seed);

/// Frequency estimates of <A>, <B>, <AB> after the measurement gate has
/// mapped A to tau3 and B to sigma3.
struct AbEstimate {
    double mean_a, mean_b, mean_ab;
};
AbEstimate estimate_abs(const CountTable& counts);

/// One measured basis: the observable pair and the three estimates.
struct MeasuredBasis {
    ObservablePair pair;
    double mean_a, mean_b, mean_ab;
};

/// Linear inversion from the five canonical bases.  The runs must carry
/// the five observable pairs in table order.
DensityMat tomography_reconstruct(const std::array<MeasuredBasis, 5>& runs);

struct TomographyResult {
    DensityMat rho;
    PauliCoefficients coefficients;
    bool positive;
    std::uint64_t shots_per_basis;
    std::uint64_t seed;
};

/// Five-basis tomography.  shots_per_basis = 0 runs in analytic mode
/// (exact expectation values, no sampling).
TomographyResult tomography_pipeline(const DensityMat& rho, std::uint64_t shots_per_basis,
                                     std::uint64_t seed);

/// Expectation values tr(rho A), tr(rho B), tr(rho AB) computed
/// directly; reference path for the sampled estimates.
AbEstimate exact_abs(const DensityMat& rho, const ObservablePair& pair);

}  // namespace sp2q

#endif
