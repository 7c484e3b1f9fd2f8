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

#include "pswa/tensor.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "pswa/det_math.h"
#include "pswa/threading.h"

namespace pswa {

bool Tensor::all_finite() const {
  for (float v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool Tensor::same_bytes(const Tensor& o) const {
  return shape == o.shape &&
         std::memcmp(data.data(), o.data.data(),
                     data.size() * sizeof(float)) == 0;
}

float mask_sentinel() { return std::numeric_limits<float>::lowest(); }

Tensor matmul(const Tensor& a, const Tensor& b) {
  if (a.rank() != 2 || b.rank() != 2 || a.dim(1) != b.dim(0))
    throw std::invalid_argument("matmul: shape mismatch");
  const int m = a.dim(0), k = a.dim(1), p = b.dim(1);
  Tensor c({m, p});
  parallel_for(0, m, [&](int64_t i) {
    const float* arow = a.data.data() + size_t(i) * k;
    float* crow = c.data.data() + size_t(i) * p;
    for (int j = 0; j < p; ++j) {
      float acc = 0.0f;
      const float* bcol = b.data.data() + j;
      for (int t = 0; t < k; ++t) acc += arow[t] * bcol[size_t(t) * p];
      crow[j] = acc;
    }
  });
  return c;
}

Tensor softmax_rows(const Tensor& x) {
  if (x.rank() != 2) throw std::invalid_argument("softmax_rows: rank != 2");
  const int m = x.dim(0), k = x.dim(1);
  const float sentinel = mask_sentinel();
  Tensor y({m, k});
  for (int i = 0; i < m; ++i) {
    const float* in = x.row(i);
    float* out = y.data.data() + size_t(i) * k;
    float mx = sentinel;
    for (int j = 0; j < k; ++j) mx = in[j] > mx ? in[j] : mx;
    if (mx == sentinel) continue;  // fully masked row stays zero
    float sum = 0.0f;
    for (int j = 0; j < k; ++j) {
      out[j] = det::exp_f32(in[j] - mx);
      sum += out[j];
    }
    for (int j = 0; j < k; ++j) out[j] /= sum;
  }
  return y;
}

void rmsnorm(const float* x, const float* gain, int d, float* out) {
  float ss = 0.0f;
  for (int i = 0; i < d; ++i) ss += x[i] * x[i];
  float inv = 1.0f / std::sqrt(ss / float(d) + kRmsNormEps);
  for (int i = 0; i < d; ++i) out[i] = gain[i] * x[i] * inv;
}

int ffn_hidden_dim(int d) {
  // 8/3 * d, to the nearest multiple of 8.
  int units = int(std::lround(double(d) / 3.0));
  return 8 * (units < 1 ? 1 : units);
}

void swiglu_ffn(const float* x, const Tensor& w_gate, const Tensor& w_up,
                const Tensor& w_down, int d, int f, float* out) {
  if (w_gate.dim(0) != d || w_gate.dim(1) != f || w_up.dim(0) != d ||
      w_up.dim(1) != f || w_down.dim(0) != f || w_down.dim(1) != d)
    throw std::invalid_argument("swiglu_ffn: shape mismatch");
  std::vector<float> h(size_t(f));
  for (int j = 0; j < f; ++j) {
    float g = 0.0f, u = 0.0f;
    const float* wg = w_gate.data.data() + j;
    const float* wu = w_up.data.data() + j;
    for (int i = 0; i < d; ++i) {
      g += x[i] * wg[size_t(i) * f];
      u += x[i] * wu[size_t(i) * f];
    }
    h[size_t(j)] = det::silu_f32(g) * u;
  }
  for (int i = 0; i < d; ++i) {
    float acc = 0.0f;
    const float* wd = w_down.data.data() + i;
    for (int j = 0; j < f; ++j) acc += h[size_t(j)] * wd[size_t(j) * d];
    out[i] = acc;
  }
}

Tensor conv2d(const Tensor& x, const Tensor& k, int stride, int pad) {
  if (x.rank() != 3 || k.rank() != 4 || k.dim(1) != x.dim(0))
    throw std::invalid_argument("conv2d: shape mismatch");
  const int c = x.dim(0), h = x.dim(1), w = x.dim(2);
  const int o = k.dim(0), kh = k.dim(2), kw = k.dim(3);
  if (kh % 2 == 0 || kw % 2 == 0)
    throw std::invalid_argument("conv2d: kernel extents must be odd");
  const int oh = (h + 2 * pad - kh) / stride + 1;
  const int ow = (w + 2 * pad - kw) / stride + 1;
  Tensor y({o, oh, ow});
  parallel_for(0, int64_t(o) * oh, [&](int64_t idx) {
    const int oc = int(idx / oh), oy = int(idx % oh);
    for (int ox = 0; ox < ow; ++ox) {
      float acc = 0.0f;
      for (int ic = 0; ic < c; ++ic) {
        for (int ky = 0; ky < kh; ++ky) {
          const int iy = oy * stride - pad + ky;
          if (iy < 0 || iy >= h) continue;
          for (int kx = 0; kx < kw; ++kx) {
            const int ix = ox * stride - pad + kx;
            if (ix < 0 || ix >= w) continue;
            acc += x.data[(size_t(ic) * h + iy) * w + ix] *
                   k.data[((size_t(oc) * c + ic) * kh + ky) * kw + kx];
          }
        }
      }
      y.data[(size_t(oc) * oh + oy) * ow + ox] = acc;
    }
  });
  return y;
}

Tensor upsample_nearest2(const Tensor& x) {
  if (x.rank() != 3) throw std::invalid_argument("upsample: rank != 3");
  const int c = x.dim(0), h = x.dim(1), w = x.dim(2);
  Tensor y({c, 2 * h, 2 * w});
  for (int ic = 0; ic < c; ++ic) {
    for (int iy = 0; iy < 2 * h; ++iy) {
      const float* src = x.data.data() + (size_t(ic) * h + iy / 2) * w;
      float* dst = y.data.data() + (size_t(ic) * 2 * h + iy) * (2 * w);
      for (int ix = 0; ix < 2 * w; ++ix) dst[ix] = src[ix / 2];
    }
  }
  return y;
}

Tensor init_tensor(Rng& rng, std::vector<int> shape, InitScheme scheme,
                   int fan_in) {
  Tensor t(std::move(shape));
  switch (scheme) {
    case InitScheme::kZeros:
      break;
    case InitScheme::kOnes:
      for (float& v : t.data) v = 1.0f;
      break;
    case InitScheme::kScaledNormal: {
      const float std = 1.0f / std::sqrt(float(fan_in < 1 ? 1 : fan_in));
      for (float& v : t.data) v = rng.next_normal() * std;
      break;
    }
  }
  return t;
}

}  // namespace pswa
