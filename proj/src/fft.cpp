#include "dazzle/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace dazzle {

namespace {

// The FFTW planner is not thread-safe; executing distinct plans is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanGuard {
    fftw_plan plan = nullptr;
    ~PlanGuard() {
        if (plan) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fftw_destroy_plan(plan);
        }
    }
};

void fft2_inplace(Grid<std::complex<double>>& g, int sign) {
    PlanGuard guard;
    auto* ptr = reinterpret_cast<fftw_complex*>(g.data.data());
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        guard.plan = fftw_plan_dft_2d(g.rows, g.cols, ptr, ptr, sign, FFTW_ESTIMATE);
    }
    if (!guard.plan) throw NumericError("fftw plan creation failed");
    fftw_execute(guard.plan);
}

} // namespace

int next_fast_len(int n) {
    if (n <= 1) return 1;
    for (;; ++n) {
        int m = n;
        for (int f : {2, 3, 5, 7})
            while (m % f == 0) m /= f;
        if (m == 1) return n;
    }
}

Grid<std::complex<double>> fft2(const Grid<std::complex<double>>& in) {
    Grid<std::complex<double>> out = in;
    fft2_inplace(out, FFTW_FORWARD);
    return out;
}

Grid<std::complex<double>> fft2(const Grid<double>& in) {
    Grid<std::complex<double>> tmp(in.rows, in.cols);
    for (size_t i = 0; i < in.data.size(); ++i) tmp.data[i] = in.data[i];
    fft2_inplace(tmp, FFTW_FORWARD);
    return tmp;
}

Grid<double> ifft2_real(const Grid<std::complex<double>>& in, double* max_imag) {
    Grid<std::complex<double>> tmp = in;
    fft2_inplace(tmp, FFTW_BACKWARD);
    const double scale = 1.0 / (static_cast<double>(in.rows) * in.cols);
    Grid<double> out(in.rows, in.cols);
    double worst = 0.0;
    for (size_t i = 0; i < tmp.data.size(); ++i) {
        out.data[i] = tmp.data[i].real() * scale;
        worst = std::max(worst, std::abs(tmp.data[i].imag()) * scale);
    }
    if (max_imag) *max_imag = worst;
    return out;
}

Grid<double> fft_convolve_full(const Grid<double>& image, const Grid<double>& kernel) {
    if (image.empty() || kernel.empty())
        throw ConfigError("fft_convolve_full: empty input");
    const int out_rows = image.rows + kernel.rows - 1;
    const int out_cols = image.cols + kernel.cols - 1;
    const int R = next_fast_len(out_rows);
    const int C = next_fast_len(out_cols);

    Grid<std::complex<double>> a(R, C), b(R, C);
    for (int r = 0; r < image.rows; ++r)
        for (int c = 0; c < image.cols; ++c) a(r, c) = image(r, c);
    for (int r = 0; r < kernel.rows; ++r)
        for (int c = 0; c < kernel.cols; ++c) b(r, c) = kernel(r, c);

    fft2_inplace(a, FFTW_FORWARD);
    fft2_inplace(b, FFTW_FORWARD);
    for (size_t i = 0; i < a.data.size(); ++i) a.data[i] *= b.data[i];
    fft2_inplace(a, FFTW_BACKWARD);

    const double scale = 1.0 / (static_cast<double>(R) * C);
    Grid<double> out(out_rows, out_cols);
    for (int r = 0; r < out_rows; ++r)
        for (int c = 0; c < out_cols; ++c) out(r, c) = a(r, c).real() * scale;
    return out;
}

Grid<double> intensity_spectrum_centered(const Grid<std::complex<double>>& field) {
    Grid<std::complex<double>> tmp = ifftshift(field);
    fft2_inplace(tmp, FFTW_FORWARD);
    Grid<double> out(field.rows, field.cols);
    for (size_t i = 0; i < tmp.data.size(); ++i) out.data[i] = std::norm(tmp.data[i]);
    return fftshift(out);
}

Grid<std::complex<double>> otf_from_kernel(const Grid<double>& kernel, int rows, int cols) {
    if (kernel.rows > rows || kernel.cols > cols)
        throw ConfigError("otf_from_kernel: kernel larger than target grid");
    Grid<double> padded(rows, cols, 0.0);
    // Kernel center pixel (kr/2, kc/2) goes to (0,0) with circular wrap.
    const int cr = kernel.rows / 2, cc = kernel.cols / 2;
    for (int r = 0; r < kernel.rows; ++r) {
        const int rr = ((r - cr) % rows + rows) % rows;
        for (int c = 0; c < kernel.cols; ++c) {
            const int cc2 = ((c - cc) % cols + cols) % cols;
            padded(rr, cc2) = kernel(r, c);
        }
    }
    return fft2(padded);
}

} // namespace dazzle
