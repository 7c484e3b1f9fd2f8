// Copyright (c) the PSWA Codec Project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSWA_TENSOR_H_
#define PSWA_TENSOR_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pswa/rng.h"

namespace pswa {

// Dense f32 tensor, row-major, innermost axis last. Every reduction over it
// in this project runs in ascending index order with an f32 accumulator;
// together with -ffp-contract=off that makes results independent of worker
// count and identical between the serial and wavefront decoders.
struct Tensor {
  std::vector<int> shape;
  std::vector<float> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(size_t(numel()), 0.0f);
  }

  int64_t numel() const {
    int64_t n = 1;
    for (int e : shape) n *= e;
    return n;
  }
  int dim(int i) const { return shape[size_t(i)]; }
  int rank() const { return int(shape.size()); }

  float& at2(int i, int j) { return data[size_t(i) * shape[1] + j]; }
  float at2(int i, int j) const { return data[size_t(i) * shape[1] + j]; }
  float* row(int i) { return data.data() + size_t(i) * shape.back(); }
  const float* row(int i) const {
    return data.data() + size_t(i) * shape.back();
  }

  bool all_finite() const;
  bool same_bytes(const Tensor& o) const;
};

// The mask sentinel: most negative finite f32. exp(sentinel - max)
// underflows to exactly 0 without producing inf - inf NaNs.
float mask_sentinel();

// c[m,p] = sum_k a[m,k] * b[k,p], ascending k, f32 accumulator.
// Throws std::invalid_argument on shape mismatch.
Tensor matmul(const Tensor& a, const Tensor& b);

// Row-wise softmax. Per row: subtract the max, exponentiate, divide by the
// ascending-index sum. A row whose every entry is the mask sentinel is
// fully masked and comes back all zero.
Tensor softmax_rows(const Tensor& x);

// y_i = gain_i * x_i / sqrt(mean(x^2) + eps). Operates on flat vectors.
void rmsnorm(const float* x, const float* gain, int d, float* out);
inline constexpr float kRmsNormEps = 1e-5f;

// down( silu(gate(x)) ⊙ up(x) ). Weight matrices are (d,f),(d,f),(f,d).
void swiglu_ffn(const float* x, const Tensor& w_gate, const Tensor& w_up,
                const Tensor& w_down, int d, int f, float* out);

// Hidden width for a SwiGLU FFN: 8/3 * d rounded to a multiple of 8.
int ffn_hidden_dim(int d);

// Cross-correlation on (C,H,W) with (O,C,kh,kw) kernels, zero padding,
// ascending (c,ky,kx) accumulation. kh,kw odd.
Tensor conv2d(const Tensor& x, const Tensor& k, int stride, int pad);

// Nearest-neighbor x2 upsampling of a (C,H,W) tensor.
Tensor upsample_nearest2(const Tensor& x);

enum class InitScheme { kScaledNormal, kZeros, kOnes };

// Deterministic init. kScaledNormal draws with std = 1/sqrt(fan_in).
Tensor init_tensor(Rng& rng, std::vector<int> shape, InitScheme scheme,
                   int fan_in);

}  // namespace pswa

#endif  // PSWA_TENSOR_H_
