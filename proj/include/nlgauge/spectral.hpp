#ifndef NLGAUGE_SPECTRAL_HPP
#define NLGAUGE_SPECTRAL_HPP

#include "nlgauge/field.hpp"

namespace nlg {

/// Spectral (Fourier collocation) derivative of the given order along one
/// axis. Exact to rounding for fields band-limited on the grid. For even
/// grid sizes the Nyquist mode is zeroed on odd orders (standard
/// convention; keeps real fields real).
ComplexField derivative(const ComplexField& f, int order, int axis = 0);
RealField derivative(const RealField& f, int order, int axis = 0);

ComplexField laplacian(const ComplexField& f);
RealField laplacian(const RealField& f);

VectorField gradient(const RealField& f);
RealField divergence(const VectorField& v);

/// Zeroes every Fourier mode with |k index| > kcut on any axis. kcut < 0
/// leaves the field untouched. Used both as a dealiasing rule and as the
/// fixed-band projection of the verification pipeline.
ComplexField band_limit(const ComplexField& f, int kcut);
RealField band_limit(const RealField& f, int kcut);

/// Circular shift of a 1D field: returns g with g(x) = f(x - s), evaluated
/// spectrally (exact for band-limited f, any real s).
RealField shift(const RealField& f, double s);

} // namespace nlg

#endif
