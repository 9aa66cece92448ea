#pragma once

#include <array>
#include <complex>
#include <string>

#include "dazzle/grid.hpp"

namespace dazzle {

/// How the five half-ring pupil phase is evaluated.
///
/// kHalfRingField (default): phase of the analytic pupil field of five
/// half-ring targets, arg(Q0 + i*S) with odd harmonics 1,3,...,2M-1 and
/// the Jacobi-Anger sign alternation. This is the variant that actually
/// suppresses the focal peak by ~1e3.
///
/// kHalfRingLiteral: atan(S/Q0) with harmonics 3,5,...,2M+1 and no sign
/// alternation. Kept for reference; its bounded (-pi/2, pi/2) phase leaves
/// most of the light undiffracted (peak ratio ~0.7).
enum class HalfRingMode { kHalfRingField, kHalfRingLiteral };

struct OpticsConfig {
    double lambda_b = 633e-9;       // background wavelength [m]
    double lambda_l = 633e-9;       // laser wavelength [m]
    double focal_length = 0.11;     // [m]
    double aperture_width = 3.83e-3; // W_a [m]
    double pupil_pitch_u = 3.74e-6; // [m]
    double pupil_pitch_v = 3.74e-6; // [m]
    int pupil_dims_u = 4096;
    int pupil_dims_v = 4096;
    std::array<double, 5> ring_radii{13.6, 91.8, 6.3, 10.3, 4.2};
    std::array<double, 5> ring_angles{1.86, 1.09, 1.15, 1.21, 1.22};
    int harmonic_count = 17;
    int supergauss_order = 50;
    HalfRingMode phase_mode = HalfRingMode::kHalfRingField;
    // Ring radii enter through z = ring_unit_scale * 2*pi*xi*r_n/W_a. The
    // factor 2 reads W_a in the ring argument as the aperture radius; see
    // the README notes on the width conventions.
    double ring_unit_scale = 2.0;

    void validate() const; // throws ConfigError
};

struct PupilField {
    Grid<std::complex<double>> values;
    double pitch_u = 0.0;
    double pitch_v = 0.0;
};

struct Psf {
    Grid<double> values;
    double pitch = 0.0;      // grid pitch [m]
    double wavelength = 0.0; // [m]
    bool energy_normalized = false;
};

/// Super-Gaussian aperture transmittance, exp(-(4(u^2+v^2)/W_a^2)^order).
double super_gauss_aperture(double u, double v, const OpticsConfig& cfg);

/// Five half-ring pupil phase at polar pupil point (xi, phi). xi >= 0.
double five_half_ring_phase(double xi, double phi, const OpticsConfig& cfg);

/// Sample A*exp(i*phi) on the centered pupil grid. use_phase=false gives
/// the uncoded (phase-free) field.
PupilField build_pupil_field(const OpticsConfig& cfg, bool use_phase);

/// |centered DFT|^2 of the pupil field, energy-normalized to unit sum.
/// Focal pitch follows the Fraunhofer grid relation lambda*f/(N_u*du).
Psf compute_psf(const PupilField& field, double wavelength, const OpticsConfig& cfg);

/// Ideal point spread function sampled on an arbitrary centered grid,
/// |2 J1(k rho W_a/f) / (k rho W_a/f)|^2, energy-normalized.
Psf airy_psf(const OpticsConfig& cfg, double wavelength, int rows, int cols, double pitch);

/// Bicubic resample onto target pitch (center-anchored), clamped at zero
/// and re-normalized to unit energy.
Psf resample_psf(const Psf& psf, double target_pitch);

/// max(coded)/max(uncoded). LSR for a point source; BSR analog for scenes.
double suppression_ratio(const Psf& coded, const Psf& uncoded);

/// Side (pixels, odd) of the smallest centered square holding the given
/// energy fraction. The 99.9% value is the support W_h used for padding.
int psf_support_side(const Psf& psf, double energy_fraction = 0.999);

/// Centered crop to an odd side, re-normalized to unit energy.
Psf crop_psf(const Psf& psf, int side);

} // namespace dazzle
