#ifndef NLGAUGE_FIELD_HPP
#define NLGAUGE_FIELD_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "nlgauge/errors.hpp"

namespace nlg {

using complex_t = std::complex<double>;

/// Uniform periodic grid, 1D or 2D. Axis 0 is the slow (outer) index.
struct GridSpec {
    int dim = 1;
    std::array<int, 2> n = {0, 1};
    std::array<double, 2> dx = {0.0, 0.0};

    static GridSpec line(int n, double dx) {
        validate_axis(n, dx);
        GridSpec g;
        g.dim = 1;
        g.n = {n, 1};
        g.dx = {dx, 0.0};
        return g;
    }

    static GridSpec plane(int nx, int ny, double dx, double dy) {
        validate_axis(nx, dx);
        validate_axis(ny, dy);
        GridSpec g;
        g.dim = 2;
        g.n = {nx, ny};
        g.dx = {dx, dy};
        return g;
    }

    /// Tensor grid of two 1D grids (axis 0 from a, axis 1 from b).
    static GridSpec product(const GridSpec& a, const GridSpec& b) {
        if (a.dim != 1 || b.dim != 1)
            throw PreconditionError("product grid needs two 1D grids");
        return plane(a.n[0], b.n[0], a.dx[0], b.dx[0]);
    }

    std::size_t size() const {
        return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(n[1]);
    }
    double length(int axis) const { return n[axis] * dx[axis]; }
    std::size_t index(int i0, int i1 = 0) const {
        return static_cast<std::size_t>(i0) * n[1] + i1;
    }
    double coord(int axis, int i) const { return i * dx[axis]; }

    bool operator==(const GridSpec& o) const {
        return dim == o.dim && n == o.n && dx == o.dx;
    }

private:
    static void validate_axis(int n, double dx) {
        if (n < 16) throw PreconditionError("grid needs at least 16 points per axis");
        if (!(dx > 0.0)) throw PreconditionError("grid spacing must be positive");
    }
};

/// Immutable-by-convention sampled field; operations return new fields.
template <class T>
struct Field {
    GridSpec grid;
    std::vector<T> values;

    Field() = default;
    explicit Field(const GridSpec& g, T fill = T{})
        : grid(g), values(g.size(), fill) {}
    Field(const GridSpec& g, std::vector<T> v) : grid(g), values(std::move(v)) {
        if (values.size() != grid.size())
            throw PreconditionError("sample count does not match grid");
    }

    T& at(int i0, int i1 = 0) { return values[grid.index(i0, i1)]; }
    const T& at(int i0, int i1 = 0) const { return values[grid.index(i0, i1)]; }
    std::size_t size() const { return values.size(); }
};

using RealField = Field<double>;
using ComplexField = Field<complex_t>;
using WaveField = ComplexField;

/// One real component per axis (only comp[0] is meaningful in 1D).
struct VectorField {
    GridSpec grid;
    std::array<RealField, 2> comp;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : grid(g) {
        for (int a = 0; a < g.dim; ++a) comp[a] = RealField(g);
    }
};

inline RealField real_part(const ComplexField& f) {
    RealField r(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) r.values[i] = f.values[i].real();
    return r;
}

inline ComplexField to_complex(const RealField& f) {
    ComplexField c(f.grid);
    for (std::size_t i = 0; i < f.size(); ++i) c.values[i] = f.values[i];
    return c;
}

inline double max_abs(const RealField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return m;
}

inline double max_abs(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f.values) m = std::max(m, std::abs(v));
    return m;
}

inline double max_abs_diff(const RealField& a, const RealField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::fabs(a.values[i] - b.values[i]));
    return m;
}

inline double max_abs_diff(const ComplexField& a, const ComplexField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

inline bool all_finite(const ComplexField& f) {
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

} // namespace nlg

#endif
