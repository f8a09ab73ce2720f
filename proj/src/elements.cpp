#include "sp2q/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace sp2q {

namespace {

// Wrap into (upper - period, upper].
double wrap(double x, double period, double upper) {
    if (!std::isfinite(x)) throw std::invalid_argument("angle is not finite");
    double y = std::remainder(x, period);
    if (y <= upper - period) y += period;
    if (y > upper) y -= period;
    return y;
}

}  // namespace

WavePlateAngle::WavePlateAngle(double radians) : theta_(wrap(radians, M_PI, M_PI / 2)) {}

PhaseAngle::PhaseAngle(double radians) : phi_(wrap(radians, 2 * M_PI, M_PI)) {}

Mat2 beam_splitter() {
    const double s = 1.0 / std::sqrt(2.0);
    return Mat2{{cd(s), cd(0, s), cd(0, s), cd(s)}};
}

Mat2 mirror_pair() { return Mat2{{cd(0), cd(0, -1), cd(0, -1), cd(0)}}; }

Mat2 phase_shifter(Port port, PhaseAngle phi) {
    const cd f = std::polar(1.0, phi.radians());
    Mat2 m = Mat2::identity();
    const int k = port == Port::R ? 0 : 1;
    m(k, k) = f;
    return m;
}

Mat2 qwp(WavePlateAngle theta) {
    const double s = std::sin(2.0 * theta.radians());
    const double c = std::cos(2.0 * theta.radians());
    const double r = 1.0 / std::sqrt(2.0);
    return Mat2{{cd(r, -r * c), cd(0, -r * s), cd(0, -r * s), cd(r, r * c)}};
}

Mat2 hwp(WavePlateAngle theta) {
    const double s = std::sin(2.0 * theta.radians());
    const double c = std::cos(2.0 * theta.radians());
    return Mat2{{cd(0, -c), cd(0, -s), cd(0, -s), cd(0, c)}};
}

Mat2 pol_triple(WavePlateAngle alpha, WavePlateAngle beta, WavePlateAngle gamma) {
    return qwp(gamma) * hwp(beta) * qwp(alpha);
}

}  // namespace sp2q
