#pragma once

#include <span>

#include "uncertlab/common.hpp"

namespace uncertlab::detail {

// In-place unnormalized DFT, forward = exp(-2*pi*i*j*k/n) convention.
// Backed by cached FFTW plans; safe to call concurrently on distinct buffers.
void fft_inplace(std::span<Complex> data, bool inverse);

}  // namespace uncertlab::detail
