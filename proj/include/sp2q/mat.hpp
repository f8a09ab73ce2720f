#ifndef SP2Q_MAT_HPP
#define SP2Q_MAT_HPP

#include <array>
#include <complex>
#include <cstddef>

namespace sp2q {

using cd = std::complex<double>;

/// Dense, fixed-size complex matrix, row-major.
///
/// Mat2 lives on a single qubit: basis order (v, h) for polarization
/// or (R, L) for the spatial alternative.  Mat4 lives on the combined
/// photon with basis order (Rv, Rh, Lv, Lh); the spatial index is the
/// slow one.
template <int N>
struct Mat {
    std::array<cd, static_cast<std::size_t>(N) * N> e{};

    static constexpr int dim = N;

    static Mat identity();
    static Mat zero() { return Mat{}; }

    cd& operator()(int r, int c) { return e[static_cast<std::size_t>(r) * N + c]; }
    const cd& operator()(int r, int c) const { return e[static_cast<std::size_t>(r) * N + c]; }

    Mat adjoint() const;
    cd trace() const;
    double frobenius_norm() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat& operator+=(const Mat& o);

    friend Mat operator*(cd s, const Mat& m) {
        Mat r;
        for (std::size_t k = 0; k < m.e.size(); ++k) r.e[k] = s * m.e[k];
        return r;
    }
    Mat operator-() const { return cd(-1.0) * *this; }

    /// Throws std::invalid_argument if any entry is NaN or infinite.
    void require_finite() const;
};

using Mat2 = Mat<2>;
using Mat4 = Mat<4>;

/// Pure 2-qubit state: four amplitudes in (Rv, Rh, Lv, Lh) order.
struct StateVec {
    std::array<cd, 4> amps{};

    cd& operator[](int k) { return amps[static_cast<std::size_t>(k)]; }
    const cd& operator[](int k) const { return amps[static_cast<std::size_t>(k)]; }

    double norm() const;
    /// Rescales to unit norm; throws on zero or non-finite input.
    static StateVec normalized(const std::array<cd, 4>& amps);
};

cd inner(const StateVec& bra, const StateVec& ket);
StateVec apply(const Mat4& m, const StateVec& v);
/// |v><v| as a matrix.
Mat4 projector(const StateVec& v);

/// Kronecker product, spatial factor slow: out[2i+k, 2j+l] = a[i,j] * b[k,l].
Mat4 kron(const Mat2& spatial, const Mat2& polarization);

/// Pauli operators for the spatial (R, L) qubit; k = 0 is the identity.
Mat2 pauli_tau(int k);
/// Pauli operators for the polarization (v, h) qubit; k = 0 is the identity.
Mat2 pauli_sigma(int k);

template <int N>
bool is_unitary(const Mat<N>& m, double tol);
template <int N>
bool is_hermitian(const Mat<N>& m, double tol);

/// min over phi of ||a - e^{i phi} b||_F
///   = sqrt(||a||_F^2 + ||b||_F^2 - 2 |tr(a^dag b)|).
template <int N>
double dist_up_to_phase(const Mat<N>& a, const Mat<N>& b);

template <int N>
double frobenius_distance(const Mat<N>& a, const Mat<N>& b);

/// Eigensystem of a Hermitian 2x2 matrix.
///
/// Eigenvalues descending; eigenvectors are the matching orthonormal
/// columns of `vectors`.  Deterministic phase convention: in each
/// eigenvector the largest-magnitude component (first on ties) is made
/// real positive.  If the matrix is within 1e-10 of a multiple of the
/// identity the canonical basis is returned.
struct Eig2 {
    std::array<double, 2> values;
    Mat2 vectors;
};
Eig2 eig_hermitian_2x2(const Mat2& h);

/// Eigenvalues (descending) of a Hermitian 4x4 matrix, via cyclic Jacobi.
std::array<double, 4> eigvals_hermitian_4x4(const Mat4& h);

}  // namespace sp2q

#endif
