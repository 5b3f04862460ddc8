#include "hwcm/spectral/nonlinear.hpp"

#include "hwcm/errors.hpp"

#include <fftw3.h>

#include <map>
#include <string>

namespace hwcm {

namespace {

struct FftwBuffer {
    fftw_complex* ptr = nullptr;
    explicit FftwBuffer(std::size_t count)
        : ptr(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * count))) {
        if (ptr == nullptr) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    cplx* data() { return reinterpret_cast<cplx*>(ptr); }
};

} // namespace

struct FftNonlinear::Impl {
    int n;
    int m;
    std::size_t count;
    // phi_x, phi_y, omega_x, omega_y, rho_x, rho_y
    std::vector<std::unique_ptr<FftwBuffer>> buf;
    fftw_plan synth = nullptr;
    fftw_plan analyse = nullptr;

    explicit Impl(int n_) : n(n_), m(2 * n_), count(static_cast<std::size_t>(m) * m) {
        for (int i = 0; i < 6; ++i) buf.push_back(std::make_unique<FftwBuffer>(count));
        // The FFTW planner is not thread safe.
#pragma omp critical(fftw_planner)
        {
            synth = fftw_plan_dft_2d(m, m, buf[0]->ptr, buf[0]->ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
            analyse = fftw_plan_dft_2d(m, m, buf[0]->ptr, buf[0]->ptr, FFTW_FORWARD, FFTW_ESTIMATE);
        }
        if (synth == nullptr || analyse == nullptr) throw std::runtime_error("FFTW planning failed");
    }

    ~Impl() {
#pragma omp critical(fftw_planner)
        {
            fftw_destroy_plan(synth);
            fftw_destroy_plan(analyse);
        }
    }

    void backward(FftwBuffer& b) { fftw_execute_dft(synth, b.ptr, b.ptr); }
    void forward(FftwBuffer& b) { fftw_execute_dft(analyse, b.ptr, b.ptr); }
};

FftNonlinear::FftNonlinear(int n) : impl_(std::make_unique<Impl>(n)) {}
FftNonlinear::~FftNonlinear() = default;
FftNonlinear::FftNonlinear(FftNonlinear&&) noexcept = default;
FftNonlinear& FftNonlinear::operator=(FftNonlinear&&) noexcept = default;

int FftNonlinear::n() const { return impl_->n; }

NonlinearPair FftNonlinear::evaluate(const StateVector& state, bool dealias) const {
    Impl& im = *impl_;
    if (state.n() != im.n) {
        throw DomainError("FFT evaluator built for n=" + std::to_string(im.n) + ", state has n=" +
                          std::to_string(state.n()));
    }
    require_same_lattice(state.phi, state.rho);
    cplx* px = im.buf[0]->data();
    cplx* py = im.buf[1]->data();
    cplx* wx = im.buf[2]->data();
    cplx* wy = im.buf[3]->data();
    cplx* rx = im.buf[4]->data();
    cplx* ry = im.buf[5]->data();
    const cplx I{0.0, 1.0};
    for (std::size_t i = 0; i < im.count; ++i) {
        const ModeIndex k = state.phi.mode_at(i);
        cplx phi = state.phi.data()[i];
        cplx rho = state.rho.data()[i];
        if (dealias && !dealias_keep(k, im.n)) {
            phi = 0.0;
            rho = 0.0;
        }
        const cplx ikx = I * static_cast<double>(k.kx);
        const cplx iky = I * static_cast<double>(k.ky);
        const cplx omega = static_cast<double>(k.k2()) * phi;
        px[i] = ikx * phi;
        py[i] = iky * phi;
        wx[i] = ikx * omega;
        wy[i] = iky * omega;
        rx[i] = ikx * rho;
        ry[i] = iky * rho;
    }
    for (auto& b : im.buf) im.backward(*b);
    for (std::size_t i = 0; i < im.count; ++i) {
        const cplx b1 = px[i] * wy[i] - py[i] * wx[i];
        const cplx b2 = px[i] * ry[i] - py[i] * rx[i];
        px[i] = b1;
        py[i] = b2;
    }
    im.forward(*im.buf[0]);
    im.forward(*im.buf[1]);

    NonlinearPair out{SpectralField(im.n), SpectralField(im.n)};
    const double scale = 1.0 / static_cast<double>(im.count);
    for (std::size_t i = 0; i < im.count; ++i) {
        const ModeIndex k = out.vorticity.mode_at(i);
        if (dealias && !dealias_keep(k, im.n)) continue;
        out.vorticity.data()[i] = scale * px[i];
        out.density.data()[i] = scale * py[i];
    }
    return out;
}

namespace {

// FFTW plans are per-thread cached by lattice size.
FftNonlinear& cached_evaluator(int n) {
    thread_local std::map<int, FftNonlinear> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, FftNonlinear(n)).first;
    return it->second;
}

struct PlainTransform {
    int m;
    FftwBuffer buffer;
    fftw_plan synth = nullptr;
    fftw_plan analyse = nullptr;
    explicit PlainTransform(int n) : m(2 * n), buffer(static_cast<std::size_t>(m) * m) {
#pragma omp critical(fftw_planner)
        {
            synth = fftw_plan_dft_2d(m, m, buffer.ptr, buffer.ptr, FFTW_BACKWARD, FFTW_ESTIMATE);
            analyse = fftw_plan_dft_2d(m, m, buffer.ptr, buffer.ptr, FFTW_FORWARD, FFTW_ESTIMATE);
        }
    }
    ~PlainTransform() {
#pragma omp critical(fftw_planner)
        {
            fftw_destroy_plan(synth);
            fftw_destroy_plan(analyse);
        }
    }
};

PlainTransform& cached_transform(int n) {
    thread_local std::map<int, std::unique_ptr<PlainTransform>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<PlainTransform>(n);
    return *slot;
}

} // namespace

NonlinearPair nonlinear_terms_fft(const StateVector& state, bool dealias) {
    return cached_evaluator(state.n()).evaluate(state, dealias);
}

std::vector<cplx> to_physical(const SpectralField& f) {
    auto& t = cached_transform(f.n());
    std::copy(f.data().begin(), f.data().end(), t.buffer.data());
    fftw_execute(t.synth);
    return {t.buffer.data(), t.buffer.data() + f.size()};
}

SpectralField from_physical(std::span<const cplx> values, int n) {
    SpectralField out(n);
    if (values.size() != out.size()) throw DomainError("physical grid size does not match lattice");
    auto& t = cached_transform(n);
    std::copy(values.begin(), values.end(), t.buffer.data());
    fftw_execute(t.analyse);
    const double scale = 1.0 / static_cast<double>(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = scale * t.buffer.data()[i];
    return out;
}

} // namespace hwcm
