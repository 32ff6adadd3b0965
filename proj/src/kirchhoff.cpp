#include "slitwave/kirchhoff.hpp"

#include <cmath>

#include "slitwave/parallel.hpp"

namespace slitwave {

namespace {

constexpr cplx kI{0.0, 1.0};

double sinc(double x) noexcept {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Unchecked aperture integral used in the inner loops.
cplx aperture(int p, double L, double q) noexcept {
    const double mu = p * kPi / L;
    const double aq = std::abs(q);
    const double half = 0.5 * (aq - mu) * L;
    const double sign = ((p - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
    const double mag = mu * sign * L * sinc(half) / (mu + aq);
    const double ph = -0.5 * aq * L;
    const cplx v{mag * std::cos(ph), mag * std::sin(ph)};
    return q < 0.0 ? std::conj(v) : v;
}

} // namespace

cplx aperture_integral(int p, double L, double q) {
    if (p < 1 || p % 2 == 0)
        throw ValidationError{"aperture harmonic must be odd and positive"};
    if (!(L > 0.0) || !std::isfinite(L))
        throw ValidationError{"aperture length must be positive"};
    if (!std::isfinite(q))
        throw ValidationError{"spatial frequency must be finite"};
    return aperture(p, L, q);
}

double obliquity_radicand(const ObservationDirection &dir) noexcept {
    const double ca = std::cos(dir.alpha());
    return ca * ca - dir.sin_beta() * dir.sin_beta();
}

cplx obliquity_bracket(const AxialWavenumber &kz, const ObservationDirection &dir,
                       const WaveSpec &w, double R) {
    const cplx root = std::sqrt(cplx{obliquity_radicand(dir), 0.0});
    return kI * kz.kz + cplx{-1.0 / R, w.wavenumber()} * root;
}

cplx grating_factor(double sin_beta, double k, double pitch, int slits) {
    cplx sum{0.0, 0.0};
    for (int q = 0; q < slits; ++q) {
        const double ph = -k * sin_beta * q * pitch;
        sum += cplx{std::cos(ph), std::sin(ph)};
    }
    return sum;
}

double intensity(const Vec3c &phi) noexcept {
    return std::norm(phi[0]) + std::norm(phi[1]) + std::norm(phi[2]);
}

double intensity(const DiffractionAmplitude &amp) noexcept { return intensity(amp.phi); }

FarFieldModel::FarFieldModel(const ValidatedGeometry &vg, double alpha, double distance,
                             const TruncationPolicy &trunc, unsigned threads)
    : vg_{vg}, alpha_{alpha}, distance_{distance} {
    trunc.validate();
    if (!(distance > 0.0) || !std::isfinite(distance))
        throw ValidationError{"screen distance must be positive"};
    if (!std::isfinite(alpha))
        throw ValidationError{"alpha must be finite"};

    const SlitGeometry &g = vg.geometry;
    const double k = vg.wave.wavenumber();
    const double R = distance;
    prefactor_ = -std::exp(kI * k * R) / (4.0 * kPi * R);

    const int cap = trunc.max_mode_index;
    const bool strip = g.length.is_infinite();
    const int n_cap = strip ? 0 : cap;
    const double scale = strip ? 4.0 / kPi : 16.0 / (kPi * kPi);

    std::vector<cplx> x_integral(n_cap + 1, cplx{1.0, 0.0});
    if (!strip) {
        const double qx = k * std::sin(alpha);
        for (int n = 0; n <= n_cap; ++n)
            x_integral[n] = aperture(2 * n + 1, g.length.value(), qx);
    }

    std::vector<Row> all(cap + 1);
    std::vector<std::size_t> kept(cap + 1, 0);
    detail::parallel_for(static_cast<std::size_t>(cap + 1), threads, [&](std::size_t mi) {
        const int m = static_cast<int>(mi);
        Row row{2 * m + 1, {0.0, 0.0}, {0.0, 0.0}};
        std::size_t count = 0;
        for (int n = 0; n <= n_cap; ++n) {
            const AxialWavenumber kz = axial_wavenumber(ModeIndex{m, n}, g, vg.wave);
            const cplx t = g.thickness == 0.0 ? cplx{1.0, 0.0} : std::exp(kI * kz.kz * g.thickness);
            const double rel = 1.0 / ((2.0 * m + 1.0) * (strip ? 1.0 : 2.0 * n + 1.0));
            if (!detail::mode_admitted(kz.kind, rel, std::abs(t), scale * rel, trunc))
                continue;
            const cplx w = (scale * rel) * t * x_integral[n];
            row.s0 += w;
            row.s1 += w * kI * kz.kz;
            ++count;
        }
        all[mi] = row;
        kept[mi] = count;
    });
    for (int m = 0; m <= cap; ++m) {
        if (kept[m] == 0)
            continue;
        rows_.push_back(all[m]);
        modes_used_ += kept[m];
    }
}

cplx FarFieldModel::obliquity_root(double beta) const noexcept {
    const double ca = std::cos(alpha_);
    const double sb = std::sin(beta);
    return std::sqrt(cplx{ca * ca - sb * sb, 0.0});
}

std::vector<cplx> FarFieldModel::row_weights(double beta) const {
    const cplx b = cplx{-1.0 / distance_, vg_.wave.wavenumber()} * obliquity_root(beta);
    std::vector<cplx> out;
    out.reserve(rows_.size());
    for (const Row &r : rows_)
        out.push_back(r.s1 + b * r.s0);
    return out;
}

std::vector<int> FarFieldModel::row_harmonics() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const Row &r : rows_)
        out.push_back(r.harmonic);
    return out;
}

cplx FarFieldModel::single_slit_scalar(double beta) const {
    if (rows_.empty())
        return cplx{0.0, 0.0};
    const double a = vg_.geometry.width;
    const double q = vg_.wave.wavenumber() * std::sin(beta);
    const cplx b = cplx{-1.0 / distance_, vg_.wave.wavenumber()} * obliquity_root(beta);
    cplx sum{0.0, 0.0};
    for (const Row &r : rows_)
        sum += (r.s1 + b * r.s0) * aperture(r.harmonic, a, q);
    return prefactor_ * sum;
}

cplx FarFieldModel::multi_slit_scalar(double beta) const {
    const cplx single = single_slit_scalar(beta);
    if (vg_.geometry.slits == 1)
        return single;
    return single * grating_factor(std::sin(beta), vg_.wave.wavenumber(), vg_.pitch, vg_.geometry.slits);
}

DiffractionAmplitude FarFieldModel::make_amplitude(double beta, cplx scalar, int slits,
                                                   const PolarizationAmplitude &A) const {
    DiffractionAmplitude amp;
    for (std::size_t j = 0; j < 3; ++j)
        amp.phi[j] = A.components[j] * scalar;
    amp.alpha = alpha_;
    amp.beta = beta;
    amp.distance = distance_;
    amp.slits = slits;
    amp.modes_used = modes_used_;
    const double ca = std::cos(alpha_);
    const double sb = std::sin(beta);
    amp.imaginary_obliquity = ca * ca - sb * sb < 0.0;
    return amp;
}

DiffractionAmplitude FarFieldModel::single_slit(double beta, const PolarizationAmplitude &A) const {
    return make_amplitude(beta, single_slit_scalar(beta), 1, A);
}

DiffractionAmplitude FarFieldModel::multi_slit(double beta, const PolarizationAmplitude &A) const {
    return make_amplitude(beta, multi_slit_scalar(beta), vg_.geometry.slits, A);
}

DiffractionAmplitude single_slit_amplitude(const ObservationDirection &dir, const ValidatedGeometry &vg,
                                           const PolarizationAmplitude &A, double R,
                                           const TruncationPolicy &trunc) {
    return FarFieldModel{vg, dir.alpha(), R, trunc}.single_slit(dir.beta(), A);
}

DiffractionAmplitude multi_slit_amplitude(const ObservationDirection &dir, const ValidatedGeometry &vg,
                                          const PolarizationAmplitude &A, double R,
                                          const TruncationPolicy &trunc) {
    return FarFieldModel{vg, dir.alpha(), R, trunc}.multi_slit(dir.beta(), A);
}

DiffractionAmplitude infinite_length_amplitude(const ObservationDirection &dir,
                                               const ValidatedGeometry &vg,
                                               const PolarizationAmplitude &A, double R,
                                               const TruncationPolicy &trunc) {
    if (!vg.geometry.length.is_infinite())
        throw ValidationError{"infinite_length_amplitude needs an infinite slit length"};
    return single_slit_amplitude(dir, vg, A, R, trunc);
}

std::vector<double> scan_intensity(const FarFieldModel &model, const PolarizationAmplitude &A,
                                   std::span<const double> betas, unsigned threads) {
    std::vector<double> out(betas.size());
    const double a2 = A.norm() * A.norm();
    detail::parallel_for(betas.size(), threads, [&](std::size_t i) {
        out[i] = a2 * std::norm(model.multi_slit_scalar(betas[i]));
    });
    return out;
}

} // namespace slitwave
