#ifndef SP2Q_ELEMENTS_HPP
#define SP2Q_ELEMENTS_HPP

#include "sp2q/mat.hpp"

namespace sp2q {

/// Wave-plate orientation, radians from the vertical axis.
/// Normalized to (-pi/2, pi/2]; the plate action has period pi.
struct WavePlateAngle {
    explicit WavePlateAngle(double radians);
    double radians() const { return theta_; }

  private:
    double theta_;
};

/// Phase-shifter setting, radians, normalized to (-pi, pi].
struct PhaseAngle {
    explicit PhaseAngle(double radians);
    double radians() const { return phi_; }

  private:
    double phi_;
};

enum class Port { R, L };

/// Symmetric beam splitter: (1/sqrt2) (1 + i tau1).
Mat2 beam_splitter();

/// Joint action of the two interferometer mirrors: -i tau1.
Mat2 mirror_pair();

/// Phase shifter in one spatial port: diag(e^{i phi}, 1) for R,
/// diag(1, e^{i phi}) for L.
Mat2 phase_shifter(Port port, PhaseAngle phi);

/// Quarter-wave plate at angle theta from vertical (Jones matrix).
Mat2 qwp(WavePlateAngle theta);

/// Half-wave plate: -i [sigma1 sin 2theta + sigma3 cos 2theta].
Mat2 hwp(WavePlateAngle theta);

/// QWP-HWP-QWP sandwich: qwp(gamma) * hwp(beta) * qwp(alpha).
/// Realizes any SU(2) polarization change up to a phase.
Mat2 pol_triple(WavePlateAngle alpha, WavePlateAngle beta, WavePlateAngle gamma);

}  // namespace sp2q

#endif
