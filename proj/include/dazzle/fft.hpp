#pragma once

#include <complex>

#include "dazzle/grid.hpp"

namespace dazzle {

/// Smallest n' >= n with only factors {2,3,5,7}; keeps FFTW on fast paths.
int next_fast_len(int n);

/// Full linear convolution, output dims = image + kernel - 1.
/// Zero-padded FFT multiply; no circular wraparound.
Grid<double> fft_convolve_full(const Grid<double>& image, const Grid<double>& kernel);

/// |DFT|^2 of a field sampled on a centered grid; both the input origin and
/// the output DC bin sit at (rows/2, cols/2).
Grid<double> intensity_spectrum_centered(const Grid<std::complex<double>>& field);

/// Forward 2-D DFT (unnormalized), complex output.
Grid<std::complex<double>> fft2(const Grid<std::complex<double>>& in);
Grid<std::complex<double>> fft2(const Grid<double>& in);

/// Inverse 2-D DFT scaled by 1/(rows*cols); returns the real part and
/// optionally reports the largest |imag| residue seen.
Grid<double> ifft2_real(const Grid<std::complex<double>>& in, double* max_imag = nullptr);

/// Transfer function of a centered kernel on an arbitrary (larger) grid:
/// zero-pad, roll the kernel center to (0,0), forward transform.
Grid<std::complex<double>> otf_from_kernel(const Grid<double>& kernel, int rows, int cols);

} // namespace dazzle
