#include "nlgauge/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace nlg {

namespace {

// FFTW planning is not thread safe and plans are cheap to cache, so all
// transforms go through one mutex-guarded cache of (nx, ny, sign) plans,
// each owning its scratch buffers. Execution copies in and out; the grids
// used here are small enough that the copies are immaterial.
class TransformCache {
public:
    void execute(const GridSpec& g, int sign, const complex_t* in,
                 complex_t* out) {
        std::lock_guard<std::mutex> lock(mutex_);
        Entry& e = entry(g, sign);
        auto* buf_in = reinterpret_cast<complex_t*>(e.in);
        for (std::size_t i = 0; i < g.size(); ++i) buf_in[i] = in[i];
        fftw_execute(e.plan);
        auto* buf_out = reinterpret_cast<complex_t*>(e.out);
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = buf_out[i];
    }

    static TransformCache& instance() {
        static TransformCache cache;
        return cache;
    }

    ~TransformCache() {
        for (auto& [key, e] : plans_) {
            fftw_destroy_plan(e.plan);
            fftw_free(e.in);
            fftw_free(e.out);
        }
    }

private:
    struct Entry {
        fftw_complex* in = nullptr;
        fftw_complex* out = nullptr;
        fftw_plan plan = nullptr;
    };

    Entry& entry(const GridSpec& g, int sign) {
        Key key{g.n[0], g.n[1], sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        Entry e;
        const std::size_t count = g.size();
        e.in = fftw_alloc_complex(count);
        e.out = fftw_alloc_complex(count);
        if (g.dim == 1 || g.n[1] == 1) {
            e.plan = fftw_plan_dft_1d(g.n[0], e.in, e.out, sign, FFTW_ESTIMATE);
        } else {
            e.plan = fftw_plan_dft_2d(g.n[0], g.n[1], e.in, e.out, sign,
                                      FFTW_ESTIMATE);
        }
        return plans_.emplace(key, e).first->second;
    }

    using Key = std::tuple<int, int, int>;
    std::map<Key, Entry> plans_;
    std::mutex mutex_;
};

// Integer mode index for position j on an n-point axis: 0..n/2, then
// negative frequencies.
inline int mode_index(int j, int n) { return (j <= n / 2) ? j : j - n; }

ComplexField forward(const ComplexField& f) {
    ComplexField out(f.grid);
    TransformCache::instance().execute(f.grid, FFTW_FORWARD, f.values.data(),
                                       out.values.data());
    const double inv = 1.0 / static_cast<double>(f.size());
    for (auto& v : out.values) v *= inv;
    return out;
}

ComplexField backward(const ComplexField& f) {
    ComplexField out(f.grid);
    TransformCache::instance().execute(f.grid, FFTW_BACKWARD, f.values.data(),
                                       out.values.data());
    return out;
}

// Multiplies spectrum by (i k_phys)^order along one axis.
void apply_derivative_weights(ComplexField& spec, int order, int axis) {
    const GridSpec& g = spec.grid;
    const int n = g.n[axis];
    const double k0 = 2.0 * M_PI / g.length(axis);
    std::vector<complex_t> w(n);
    for (int j = 0; j < n; ++j) {
        int m = mode_index(j, n);
        if (n % 2 == 0 && j == n / 2 && order % 2 != 0) {
            w[j] = 0.0; // Nyquist mode has no well-defined odd derivative
            continue;
        }
        w[j] = std::pow(complex_t(0.0, m * k0), order);
    }
    for (int i0 = 0; i0 < g.n[0]; ++i0)
        for (int i1 = 0; i1 < g.n[1]; ++i1)
            spec.values[g.index(i0, i1)] *= w[axis == 0 ? i0 : i1];
}

} // namespace

ComplexField derivative(const ComplexField& f, int order, int axis) {
    if (order < 1 || order > 6)
        throw PreconditionError("derivative order must be in 1..6");
    if (axis < 0 || axis >= f.grid.dim)
        throw PreconditionError("derivative axis out of range");
    ComplexField spec = forward(f);
    apply_derivative_weights(spec, order, axis);
    return backward(spec);
}

RealField derivative(const RealField& f, int order, int axis) {
    return real_part(derivative(to_complex(f), order, axis));
}

ComplexField laplacian(const ComplexField& f) {
    ComplexField spec = forward(f);
    ComplexField acc(f.grid);
    for (int a = 0; a < f.grid.dim; ++a) {
        ComplexField s = spec;
        apply_derivative_weights(s, 2, a);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc.values[i] += s.values[i];
    }
    return backward(acc);
}

RealField laplacian(const RealField& f) {
    return real_part(laplacian(to_complex(f)));
}

VectorField gradient(const RealField& f) {
    VectorField v(f.grid);
    for (int a = 0; a < f.grid.dim; ++a) v.comp[a] = derivative(f, 1, a);
    return v;
}

RealField divergence(const VectorField& v) {
    RealField out(v.grid);
    for (int a = 0; a < v.grid.dim; ++a) {
        RealField d = derivative(v.comp[a], 1, a);
        for (std::size_t i = 0; i < out.size(); ++i)
            out.values[i] += d.values[i];
    }
    return out;
}

ComplexField band_limit(const ComplexField& f, int kcut) {
    if (kcut < 0) return f;
    ComplexField spec = forward(f);
    const GridSpec& g = f.grid;
    for (int i0 = 0; i0 < g.n[0]; ++i0) {
        for (int i1 = 0; i1 < g.n[1]; ++i1) {
            bool keep = std::abs(mode_index(i0, g.n[0])) <= kcut;
            if (g.dim == 2)
                keep = keep && std::abs(mode_index(i1, g.n[1])) <= kcut;
            if (!keep) spec.values[g.index(i0, i1)] = 0.0;
        }
    }
    return backward(spec);
}

RealField band_limit(const RealField& f, int kcut) {
    if (kcut < 0) return f;
    return real_part(band_limit(to_complex(f), kcut));
}

RealField shift(const RealField& f, double s) {
    if (f.grid.dim != 1) throw PreconditionError("shift expects a 1D field");
    ComplexField spec = forward(to_complex(f));
    const int n = f.grid.n[0];
    const double k0 = 2.0 * M_PI / f.grid.length(0);
    for (int j = 0; j < n; ++j) {
        int m = mode_index(j, n);
        spec.values[j] *= std::exp(complex_t(0.0, -m * k0 * s));
    }
    return real_part(backward(spec));
}

} // namespace nlg
