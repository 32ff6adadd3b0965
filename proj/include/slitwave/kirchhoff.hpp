#ifndef SLITWAVE_KIRCHHOFF_HPP
#define SLITWAVE_KIRCHHOFF_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "slitwave/core.hpp"
#include "slitwave/slitmodes.hpp"

namespace slitwave {

/// Integral over one slit extent of e^{-i q s} sin(p pi s / L), s in [0, L], for odd p.
///
/// Evaluated as 2 mu cos(qL/2) e^{-iqL/2} / (mu^2 - q^2) with mu = p pi / L, after
/// rewriting cos(qL/2) against the nearer resonance as a sinc of (|q| - mu) L / 2.
/// That form is exact at q = +-mu (value -+ i L / 2) and loses no digits near it.
cplx aperture_integral(int p, double L, double q);

/// cos^2(alpha) - sin^2(beta), the radicand of the obliquity term.
double obliquity_radicand(const ObservationDirection &dir) noexcept;

/// i kz + (i k - 1/R) sqrt(cos^2 alpha - sin^2 beta), principal square root.
cplx obliquity_bracket(const AxialWavenumber &kz, const ObservationDirection &dir,
                       const WaveSpec &w, double R);

/// sum_{q=0}^{N-1} e^{-i k sin(beta) q pitch}
cplx grating_factor(double sin_beta, double k, double pitch, int slits);

struct DiffractionAmplitude {
    Vec3c phi{};
    double alpha = 0.0;
    double beta = 0.0;
    double distance = 0.0;
    int slits = 1;
    std::size_t modes_used = 0;
    // set when cos^2(alpha) < sin^2(beta) and the obliquity root is imaginary
    bool imaginary_obliquity = false;
};

double intensity(const Vec3c &phi) noexcept;
double intensity(const DiffractionAmplitude &amp) noexcept;

/// Far-field model of one geometry at fixed alpha and screen distance.
///
/// The (m, n) double sum is reduced once per m: every beta-independent factor
/// (coefficient, transmission, x-aperture integral, kz) is summed over n, leaving
/// a single sum over m of the y-aperture integral per beta. The amplitude is
/// linear in A, so the model stores the scalar for unit amplitude.
class FarFieldModel {
public:
    FarFieldModel(const ValidatedGeometry &vg, double alpha, double distance,
                  const TruncationPolicy &trunc, unsigned threads = 1);

    /// -e^{ikR} / (4 pi R)
    cplx prefactor() const noexcept { return prefactor_; }

    /// Per-row weight s1_m + (ik - 1/R) sqrt(cos^2 alpha - sin^2 beta) s0_m for every kept y-harmonic.
    /// The single-slit scalar is prefactor() * sum_m weight_m * aperture_integral(p_m, a, k sin beta).
    std::vector<cplx> row_weights(double beta) const;
    /// y-harmonic (2m+1) for each kept row, in the order of row_weights().
    std::vector<int> row_harmonics() const;

    cplx single_slit_scalar(double beta) const;
    cplx multi_slit_scalar(double beta) const;

    DiffractionAmplitude single_slit(double beta, const PolarizationAmplitude &A) const;
    DiffractionAmplitude multi_slit(double beta, const PolarizationAmplitude &A) const;

    std::size_t modes_used() const noexcept { return modes_used_; }
    bool empty() const noexcept { return rows_.empty(); }
    const ValidatedGeometry &geometry() const noexcept { return vg_; }
    double alpha() const noexcept { return alpha_; }
    double distance() const noexcept { return distance_; }

private:
    struct Row {
        int harmonic;
        cplx s0; // sum_n c T Ix
        cplx s1; // sum_n c T Ix i kz
    };

    cplx obliquity_root(double beta) const noexcept;
    DiffractionAmplitude make_amplitude(double beta, cplx scalar, int slits,
                                        const PolarizationAmplitude &A) const;

    ValidatedGeometry vg_;
    double alpha_;
    double distance_;
    cplx prefactor_;
    std::vector<Row> rows_;
    std::size_t modes_used_ = 0;
};

/// Single slit (N treated as 1) at the given direction.
DiffractionAmplitude single_slit_amplitude(const ObservationDirection &dir, const ValidatedGeometry &vg,
                                           const PolarizationAmplitude &A, double R,
                                           const TruncationPolicy &trunc);

/// N slits at pitch a + d: the single-slit amplitude times the grating factor.
DiffractionAmplitude multi_slit_amplitude(const ObservationDirection &dir, const ValidatedGeometry &vg,
                                          const PolarizationAmplitude &A, double R,
                                          const TruncationPolicy &trunc);

/// Infinite-length slit; throws ValidationError for a finite length.
DiffractionAmplitude infinite_length_amplitude(const ObservationDirection &dir,
                                               const ValidatedGeometry &vg,
                                               const PolarizationAmplitude &A, double R,
                                               const TruncationPolicy &trunc);

/// |Phi(beta)|^2 of the N-slit amplitude at every beta, evaluated in parallel.
std::vector<double> scan_intensity(const FarFieldModel &model, const PolarizationAmplitude &A,
                                   std::span<const double> betas, unsigned threads);

} // namespace slitwave

#endif
