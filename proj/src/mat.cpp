#include "sp2q/mat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sp2q {

namespace {

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

template <int N>
Mat<N> Mat<N>::identity() {
    Mat m;
    for (int k = 0; k < N; ++k) m(k, k) = 1.0;
    return m;
}

template <int N>
Mat<N> Mat<N>::adjoint() const {
    Mat m;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
}

template <int N>
cd Mat<N>::trace() const {
    cd t = 0.0;
    for (int k = 0; k < N; ++k) t += (*this)(k, k);
    return t;
}

template <int N>
double Mat<N>::frobenius_norm() const {
    double s = 0.0;
    for (const cd& z : e) s += std::norm(z);
    return std::sqrt(s);
}

template <int N>
Mat<N> Mat<N>::operator+(const Mat& o) const {
    Mat m;
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] = e[k] + o.e[k];
    return m;
}

template <int N>
Mat<N> Mat<N>::operator-(const Mat& o) const {
    Mat m;
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] = e[k] - o.e[k];
    return m;
}

template <int N>
Mat<N> Mat<N>::operator*(const Mat& o) const {
    Mat m;
    for (int r = 0; r < N; ++r)
        for (int k = 0; k < N; ++k) {
            const cd a = (*this)(r, k);
            if (a == cd(0.0)) continue;
            for (int c = 0; c < N; ++c) m(r, c) += a * o(k, c);
        }
    return m;
}

template <int N>
Mat<N>& Mat<N>::operator+=(const Mat& o) {
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.e[k];
    return *this;
}

template <int N>
void Mat<N>::require_finite() const {
    for (const cd& z : e)
        if (!finite(z)) throw std::invalid_argument("matrix entry is not finite");
}

template struct Mat<2>;
template struct Mat<4>;

double StateVec::norm() const {
    double s = 0.0;
    for (const cd& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

StateVec StateVec::normalized(const std::array<cd, 4>& amps) {
    StateVec v{amps};
    for (const cd& a : amps)
        if (!finite(a)) throw std::invalid_argument("state amplitude is not finite");
    const double n = v.norm();
    if (n < 1e-300) throw std::invalid_argument("cannot normalize the zero state");
    // already-normalized input passes through bit-exactly
    if (std::abs(n - 1.0) > 1e-12)
        for (cd& a : v.amps) a /= n;
    return v;
}

cd inner(const StateVec& bra, const StateVec& ket) {
    cd s = 0.0;
    for (int k = 0; k < 4; ++k) s += std::conj(bra[k]) * ket[k];
    return s;
}

StateVec apply(const Mat4& m, const StateVec& v) {
    StateVec out;
    for (int r = 0; r < 4; ++r) {
        cd s = 0.0;
        for (int c = 0; c < 4; ++c) s += m(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

Mat4 projector(const StateVec& v) {
    Mat4 p;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) p(r, c) = v[r] * std::conj(v[c]);
    return p;
}

Mat4 kron(const Mat2& spatial, const Mat2& polarization) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = spatial(i, j) * polarization(k, l);
    return m;
}

namespace {

Mat2 pauli(int k) {
    switch (k) {
        case 0: return Mat2::identity();
        case 1: return Mat2{{cd(0), cd(1), cd(1), cd(0)}};
        case 2: return Mat2{{cd(0), cd(0, -1), cd(0, 1), cd(0)}};
        case 3: return Mat2{{cd(1), cd(0), cd(0), cd(-1)}};
        default: throw std::out_of_range("Pauli index must be in 0..3");
    }
}

}  // namespace

Mat2 pauli_tau(int k) { return pauli(k); }
Mat2 pauli_sigma(int k) { return pauli(k); }

template <int N>
bool is_unitary(const Mat<N>& m, double tol) {
    return frobenius_distance(m.adjoint() * m, Mat<N>::identity()) <= tol;
}

template <int N>
bool is_hermitian(const Mat<N>& m, double tol) {
    return frobenius_distance(m, m.adjoint()) <= tol;
}

template <int N>
double dist_up_to_phase(const Mat<N>& a, const Mat<N>& b) {
    // The minimizing phase is arg tr(a^dag b); evaluating the difference
    // at that phase avoids the cancellation that the closed form
    // sqrt(||a||^2 + ||b||^2 - 2|tr(a^dag b)|) hits near zero distance.
    const cd overlap = (a.adjoint() * b).trace();
    const cd phase = std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : cd(1.0);
    return frobenius_distance(a, phase * b);
}

template <int N>
double frobenius_distance(const Mat<N>& a, const Mat<N>& b) {
    return (a - b).frobenius_norm();
}

template bool is_unitary<2>(const Mat2&, double);
template bool is_unitary<4>(const Mat4&, double);
template bool is_hermitian<2>(const Mat2&, double);
template bool is_hermitian<4>(const Mat4&, double);
template double dist_up_to_phase<2>(const Mat2&, const Mat2&);
template double dist_up_to_phase<4>(const Mat4&, const Mat4&);
template double frobenius_distance<2>(const Mat2&, const Mat2&);
template double frobenius_distance<4>(const Mat4&, const Mat4&);

namespace {

// Multiplies a unit column so that its largest-magnitude component
// (first on ties) becomes real positive.
void fix_column_phase(Mat2& vecs, int col) {
    const int k = std::abs(vecs(0, col)) >= std::abs(vecs(1, col)) ? 0 : 1;
    const double mag = std::abs(vecs(k, col));
    if (mag < 1e-300) return;
    const cd ph = std::conj(vecs(k, col)) / mag;
    vecs(0, col) *= ph;
    vecs(1, col) *= ph;
}

}  // namespace

Eig2 eig_hermitian_2x2(const Mat2& h) {
    if (!is_hermitian(h, 1e-10)) throw std::invalid_argument("eig_hermitian_2x2: input is not Hermitian");

    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const cd b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));

    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    Eig2 out;
    out.values = {mid + rad, mid - rad};

    Mat2 shifted = h;
    shifted(0, 0) -= out.values[0];
    shifted(1, 1) -= out.values[0];
    if (shifted.frobenius_norm() <= 1e-10) {
        out.vectors = Mat2::identity();
        return out;
    }

    // (b, l1 - a) and (l1 - d, conj(b)) both solve (h - l1) v = 0;
    // keep the better conditioned one.
    const cd c1x = b, c1y = cd(out.values[0] - a);
    const cd c2x = cd(out.values[0] - d), c2y = std::conj(b);
    const double n1 = std::norm(c1x) + std::norm(c1y);
    const double n2 = std::norm(c2x) + std::norm(c2y);
    cd vx = n1 >= n2 ? c1x : c2x;
    cd vy = n1 >= n2 ? c1y : c2y;
    const double n = std::sqrt(std::norm(vx) + std::norm(vy));
    vx /= n;
    vy /= n;

    Mat2 vecs;
    vecs(0, 0) = vx;
    vecs(1, 0) = vy;
    vecs(0, 1) = -std::conj(vy);
    vecs(1, 1) = std::conj(vx);
    fix_column_phase(vecs, 0);
    fix_column_phase(vecs, 1);
    out.vectors = vecs;
    return out;
}

std::array<double, 4> eigvals_hermitian_4x4(const Mat4& h) {
    if (!is_hermitian(h, 1e-8)) throw std::invalid_argument("eigvals_hermitian_4x4: input is not Hermitian");

    Mat4 a = cd(0.5) * (h + h.adjoint());
    const double scale = std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
                const cd beta = a(p, q);
                if (std::abs(beta) <= 1e-18 * scale) continue;
                const double phi = std::arg(beta);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * std::abs(beta), app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);

                // Plane rotation J: diag phase to make the pivot real,
                // then a real Jacobi rotation; a <- J^dag a J.
                Mat4 j = Mat4::identity();
                j(p, p) = c;
                j(p, q) = -s;
                j(q, p) = s * std::polar(1.0, -phi);
                j(q, q) = c * std::polar(1.0, -phi);
                a = j.adjoint() * a * j;
            }
    }

    std::array<double, 4> vals{a(0, 0).real(), a(1, 1).real(), a(2, 2).real(), a(3, 3).real()};
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    return vals;
}

}  // namespace sp2q
