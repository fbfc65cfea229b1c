#include "qho/drive.hpp"

#include <cmath>
#include <stdexcept>

namespace qho {

void validate(const OscillatorParams& osc) {
    if (!std::isfinite(osc.omega0) || osc.omega0 <= 0.0)
        throw std::invalid_argument("omega0: must be finite and > 0");
}

void validate(const DriveParams& p) {
    if (!std::isfinite(p.amplitude) || p.amplitude < 0.0)
        throw std::invalid_argument("amplitude: must be finite and >= 0");
    if (!std::isfinite(p.mass) || p.mass <= 0.0)
        throw std::invalid_argument("mass: must be finite and > 0");
    if (!std::isfinite(p.phase))
        throw std::invalid_argument("phase: must be finite");
    if (!std::isfinite(p.drive_freq))
        throw std::invalid_argument("drive_freq: must be finite");
}

double drive_force(const DriveParams& p, double t) {
    validate(p);
    if (!std::isfinite(t)) throw std::invalid_argument("t: must be finite");
    return p.amplitude * std::cos(p.drive_freq * t + p.phase) / std::sqrt(2.0 * p.mass);
}

}  // namespace qho
