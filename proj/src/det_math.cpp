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

#include "pswa/det_math.h"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

namespace pswa::det {

namespace {

// 2^k for integer k, built from exponent bits (exact).
double pow2i(int k) {
  if (k < -1074) return 0.0;
  if (k > 1023) return std::numeric_limits<double>::infinity();
  if (k < -1022) {
    // Subnormal: set the mantissa bit directly.
    uint64_t bits = uint64_t(1) << (52 + (k + 1022));
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
  }
  uint64_t bits = uint64_t(k + 1023) << 52;
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kInvLn2 = 1.44269504088896338700e+00;

}  // namespace

double exp(double x) {
  if (x != x) return x;
  if (x > 709.782712893384) return std::numeric_limits<double>::infinity();
  if (x < -745.1332191019412) return 0.0;
  // x = k*ln2 + r, |r| <= ln2/2.
  double kd = x * kInvLn2;
  int k = int(kd >= 0.0 ? kd + 0.5 : kd - 0.5);
  double r = (x - k * kLn2Hi) - k * kLn2Lo;
  // Taylor for e^r on |r| <= 0.3466; degree 13 keeps the error below 1 ulp
  // of the final f64 for our purposes (we only promise determinism, and
  // accuracy ~1e-16 relative).
  double r2 = r * r;
  double p = 1.0 / 6227020800.0;           // 1/13!
  p = p * r + 1.0 / 479001600.0;           // 1/12!
  p = p * r + 1.0 / 39916800.0;            // 1/11!
  p = p * r + 1.0 / 3628800.0;             // 1/10!
  p = p * r + 1.0 / 362880.0;              // 1/9!
  p = p * r + 1.0 / 40320.0;               // 1/8!
  p = p * r + 1.0 / 5040.0;                // 1/7!
  p = p * r + 1.0 / 720.0;                 // 1/6!
  p = p * r + 1.0 / 120.0;                 // 1/5!
  p = p * r + 1.0 / 24.0;                  // 1/4!
  p = p * r + 1.0 / 6.0;                   // 1/3!
  double er = 1.0 + r + 0.5 * r2 + r2 * r * p;
  return er * pow2i(k);
}

double log(double x) {
  if (x != x) return x;
  if (x < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x == std::numeric_limits<double>::infinity()) return x;
  // Decompose x = m * 2^e with m in [sqrt(1/2), sqrt(2)).
  uint64_t bits;
  std::memcpy(&bits, &x, 8);
  int e = 0;
  if (bits < (uint64_t(1) << 52)) {  // subnormal: normalize first
    x *= 0x1p54;
    e -= 54;
    std::memcpy(&bits, &x, 8);
  }
  e += int((bits >> 52) & 0x7FF) - 1023;
  bits = (bits & 0x000FFFFFFFFFFFFFULL) | (uint64_t(1023) << 52);
  double m;
  std::memcpy(&m, &bits, 8);
  if (m > 1.4142135623730951) {
    m *= 0.5;
    e += 1;
  }
  // log(m) = 2 atanh(s), s = (m-1)/(m+1); polynomial in s^2 (fdlibm Lg1..Lg7).
  double f = m - 1.0;
  double s = f / (2.0 + f);
  double z = s * s;
  double w = z * z;
  double t1 = w * (3.999999999940941908e-01 +
                   w * (2.222219843214978396e-01 +
                        w * 1.531383769920937332e-01));
  double t2 = z * (6.666666666666735130e-01 +
                   w * (2.857142874366239149e-01 +
                        w * (1.818357216161805012e-01 +
                             w * 1.479819860511658591e-01)));
  double hfsq = 0.5 * f * f;
  double r = t2 + t1;
  return e * kLn2Hi - ((hfsq - (s * (hfsq + r) + e * kLn2Lo)) - f);
}

double erf(double x) {
  // Abramowitz & Stegun 7.1.26, |error| < 1.5e-7. Plenty for building
  // 16-bit CDF tables; what matters is that it is the same everywhere.
  double ax = x < 0.0 ? -x : x;
  double t = 1.0 / (1.0 + 0.3275911 * ax);
  double poly = t * (0.254829592 +
                     t * (-0.284496736 +
                          t * (1.421413741 +
                               t * (-1.453152027 + t * 1.061405429))));
  double y = 1.0 - poly * det::exp(-ax * ax);
  return x < 0.0 ? -y : y;
}

double normal_cdf(double x) {
  return 0.5 * (1.0 + erf(x * 0.7071067811865475244));
}

float exp_f32(float x) { return float(det::exp(double(x))); }

float silu_f32(float x) {
  double xd = double(x);
  return float(xd / (1.0 + det::exp(-xd)));
}

float tanh_f32(float x) {
  double xd = double(x);
  double ax = xd < 0.0 ? -xd : xd;
  if (ax > 20.0) return x < 0.0f ? -1.0f : 1.0f;
  double e2 = det::exp(2.0 * ax);
  double y = 1.0 - 2.0 / (e2 + 1.0);
  return float(xd < 0.0 ? -y : y);
}

float softplus_f32(float x) {
  double xd = double(x);
  if (xd > 30.0) return x;
  if (xd < -30.0) return float(det::exp(xd));
  return float(det::log(1.0 + det::exp(xd)));
}

}  // namespace pswa::det
