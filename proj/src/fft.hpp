#pragma once

#include <complex>
#include <vector>

namespace circle_sobolev::detail {

// Unnormalized in-place DFTs: forward uses e^{-2 pi i jk/N}, backward e^{+...}.
void fft_forward(std::vector<std::complex<double>>& data);
void fft_backward(std::vector<std::complex<double>>& data);

}  // namespace circle_sobolev::detail
