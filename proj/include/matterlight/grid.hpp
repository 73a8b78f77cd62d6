#pragma once

#include <cmath>
#include <complex>

#include <unsupported/Eigen/FFT>

#include "matterlight/constants.hpp"
#include "matterlight/types.hpp"

namespace mlt {

/// Uniform periodic 1D grid; point n is identified with point 0.
template <typename Scalar = Real>
struct Grid1DT {
    Scalar x_min = 0;
    Scalar x_max = 0;
    Index n = 0;

    Grid1DT() = default;
    Grid1DT(Scalar xmin, Scalar xmax, Index npts) : x_min(xmin), x_max(xmax), n(npts) {
        if (n <= 0 || (n & (n - 1)) != 0)
            throw ConfigError("Grid1D: n must be a power of two");
        if (!(x_max > x_min)) throw ConfigError("Grid1D: x_max must be > x_min");
    }

    Scalar length() const { return x_max - x_min; }
    Scalar dx() const { return length() / static_cast<Scalar>(n); }
    Scalar dk() const { return Scalar(2) * kPi / length(); }
    Scalar x(Index i) const { return x_min + dx() * static_cast<Scalar>(i); }

    ArrayX<Scalar> coordinates() const {
        ArrayX<Scalar> out(n);
        for (Index i = 0; i < n; ++i) out[i] = x(i);
        return out;
    }

    /// Wavenumbers in FFT bin order: 0, dk, ..., -2dk, -dk.
    ArrayX<Scalar> wavenumbers() const {
        ArrayX<Scalar> out(n);
        const Scalar d = dk();
        for (Index i = 0; i < n; ++i)
            out[i] = d * static_cast<Scalar>(i < n / 2 ? i : i - n);
        return out;
    }

    bool operator==(const Grid1DT& o) const {
        return x_min == o.x_min && x_max == o.x_max && n == o.n;
    }
    bool operator!=(const Grid1DT& o) const { return !(*this == o); }
};

using Grid1D = Grid1DT<Real>;

enum class FieldKind { AtomicBeam, OpticalProbe, Condensate };

inline const char* to_string(FieldKind k) {
    switch (k) {
        case FieldKind::AtomicBeam: return "atomic-beam";
        case FieldKind::OpticalProbe: return "optical-probe";
        case FieldKind::Condensate: return "condensate";
    }
    return "?";
}

/// Complex envelope on a grid. `carrier` records the plane-wave factor
/// exp(i*carrier*x) analytically removed from the stored values.
template <typename Scalar = Real>
struct ComplexFieldT {
    Grid1DT<Scalar> grid;
    ArrayXc<Scalar> values;
    Scalar carrier = 0;
    FieldKind kind = FieldKind::AtomicBeam;

    ComplexFieldT() = default;
    ComplexFieldT(Grid1DT<Scalar> g, FieldKind k, Scalar carr)
        : grid(g), values(ArrayXc<Scalar>::Zero(g.n)), carrier(carr), kind(k) {}
    ComplexFieldT(Grid1DT<Scalar> g, ArrayXc<Scalar> v, FieldKind k, Scalar carr)
        : grid(g), values(std::move(v)), carrier(carr), kind(k) {
        if (values.size() != grid.n)
            throw ConfigError("ComplexField: values length must equal grid.n");
    }
};

using ComplexField = ComplexFieldT<Real>;

template <typename Scalar>
Scalar norm2(const ComplexFieldT<Scalar>& f) {
    return f.values.abs2().sum() * f.grid.dx();
}

template <typename Scalar>
void require_compatible(const ComplexFieldT<Scalar>& f, const ComplexFieldT<Scalar>& g) {
    if (f.grid != g.grid) throw NumericsError("field operation: grid mismatch");
    if (f.carrier != g.carrier) throw NumericsError("field operation: carrier mismatch");
    if (f.kind != g.kind) throw NumericsError("field operation: field kind mismatch");
}

/// Discrete <f,g> = sum conj(f)*g*dx.
template <typename Scalar>
std::complex<Scalar> inner_product(const ComplexFieldT<Scalar>& f, const ComplexFieldT<Scalar>& g) {
    require_compatible(f, g);
    return (f.values.conjugate() * g.values).sum() * f.grid.dx();
}

/// Normalized Gaussian envelope exp(-(x-center)^2/(2 width^2)) with
/// norm^2 = amplitude^2 on the grid; second moment of |f|^2 is width^2/2.
template <typename Scalar>
ComplexFieldT<Scalar> gaussian_envelope(const Grid1DT<Scalar>& grid, Scalar center, Scalar width,
                                        Scalar amplitude, FieldKind kind = FieldKind::AtomicBeam,
                                        Scalar carrier = 0) {
    if (!(width > Scalar(3) * grid.dx()))
        throw ConfigError("gaussian_envelope: width under-resolved (need width > 3*dx)");
    const Scalar dist = std::min(std::abs(center - grid.x_min), std::abs(grid.x_max - center));
    const Scalar tail = std::exp(-dist * dist / (Scalar(2) * width * width));
    if (tail > Scalar(1e-10))
        throw ConfigError("gaussian_envelope: support does not fit in the domain (boundary tail too large)");
    ComplexFieldT<Scalar> f(grid, kind, carrier);
    for (Index i = 0; i < grid.n; ++i) {
        const Scalar u = (grid.x(i) - center) / width;
        f.values[i] = std::exp(-u * u / Scalar(2));
    }
    const Scalar nrm = std::sqrt(norm2(f));
    f.values *= amplitude / nrm;
    return f;
}

/// Forward/inverse transform plans plus scratch, reused across steps.
/// Not shareable between threads; each worker owns one.
class SpectralWorkspace {
  public:
    /// Unnormalized forward transform (sum convention).
    void fwd(const ArrayXcd& in, ArrayXcd& out) {
        resize(in.size());
        buf_in_ = in.matrix();
        fft_.fwd(buf_out_, buf_in_);
        out = buf_out_.array();
    }
    /// Inverse with 1/n so that inv(fwd(f)) = f.
    void inv(const ArrayXcd& in, ArrayXcd& out) {
        resize(in.size());
        buf_in_ = in.matrix();
        fft_.inv(buf_out_, buf_in_);
        out = buf_out_.array();
    }
    /// In-place multiply by a spectral phase table: f <- IFFT(phase * FFT(f)).
    void apply_spectral_phase(ArrayXcd& f, const ArrayXcd& phase) {
        ArrayXcd hat(f.size());
        fwd(f, hat);
        hat *= phase;
        inv(hat, f);
    }

  private:
    void resize(Index n) {
        if (buf_in_.size() != n) {
            buf_in_.resize(n);
            buf_out_.resize(n);
        }
    }
    Eigen::FFT<Real> fft_;
    Eigen::VectorXcd buf_in_, buf_out_;
};

/// Unitary-convention spectral coefficients, F_m = (1/sqrt(n)) sum f_j e^{-2pi i jm/n}.
/// Parseval: sum |F|^2 dx = norm2(f).
struct SpectralField {
    Grid1D grid;
    ArrayXcd coeffs;  // FFT bin order, matching grid.wavenumbers()

    Real norm2() const { return coeffs.abs2().sum() * grid.dx(); }
};

inline SpectralField fourier_forward(const ComplexField& f, SpectralWorkspace& ws) {
    SpectralField s;
    s.grid = f.grid;
    ws.fwd(f.values, s.coeffs);
    s.coeffs /= std::sqrt(static_cast<Real>(f.grid.n));
    return s;
}

inline ComplexField fourier_inverse(const SpectralField& s, SpectralWorkspace& ws,
                                    FieldKind kind = FieldKind::AtomicBeam, Real carrier = 0) {
    ComplexField f(s.grid, kind, carrier);
    ArrayXcd scaled = s.coeffs * std::sqrt(static_cast<Real>(s.grid.n));
    ws.inv(scaled, f.values);
    return f;
}

/// Spectral translation f(x) -> f(x - shift); exact for band-limited fields.
inline ComplexField translate_field(const ComplexField& f, Real shift, SpectralWorkspace& ws) {
    if (!(std::abs(shift) < f.grid.length()))
        throw NumericsError("translate_field: |shift| must be smaller than the domain length");
    ComplexField out = f;
    if (shift == 0.0) return out;
    const ArrayXr k = f.grid.wavenumbers();
    ArrayXcd phase(k.size());
    for (Index i = 0; i < k.size(); ++i)
        phase[i] = std::exp(Complex(0, -k[i] * shift));
    ws.apply_spectral_phase(out.values, phase);
    return out;
}

}  // namespace mlt
