// core/include/augeval/fft.h

// Copyright 2026 The Augeval Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AUGEVAL_FFT_H_
#define AUGEVAL_FFT_H_

#include <complex>
#include <vector>

namespace augeval {

// In-place DFT of any length (radix-2 when the length is a power of two,
// Bluestein otherwise). The inverse includes the 1/n scale, so
// fft(ifft(x)) == x up to rounding. No shared state: safe to call
// concurrently from many threads.
void fft_inplace(std::vector<std::complex<double>>* data, bool inverse);

inline void fft(std::vector<std::complex<double>>* data) { fft_inplace(data, false); }
inline void ifft(std::vector<std::complex<double>>* data) { fft_inplace(data, true); }

}  // namespace augeval

#endif  // AUGEVAL_FFT_H_
