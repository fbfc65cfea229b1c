#pragma once

#include <numbers>

namespace qho {

/// Oscillator with angular frequency omega0 > 0. Units use hbar = 1.
struct OscillatorParams {
    double omega0 = 1.0;
};

/// Sinusoidal force F(t) = amplitude * cos(drive_freq * t + phase) / sqrt(2 * mass).
/// The defaults (amplitude = sqrt(2), mass = 1, phase = 0) give F(t) = cos(drive_freq * t).
struct DriveParams {
    double amplitude = std::numbers::sqrt2;
    double mass = 1.0;
    double phase = 0.0;
    double drive_freq = 1.0;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const OscillatorParams& osc);
void validate(const DriveParams& p);

/// F(t) as defined above. Requires amplitude >= 0, mass > 0, finite fields.
double drive_force(const DriveParams& p, double t);

}  // namespace qho
