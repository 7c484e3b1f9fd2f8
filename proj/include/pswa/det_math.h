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

#ifndef PSWA_DET_MATH_H_
#define PSWA_DET_MATH_H_

// Transcendental functions evaluated with plain IEEE-754 add/mul/div only
// (Cody-Waite reductions + fixed polynomials), so every platform produces
// identical bits. libm's exp/log/tanh are NOT guaranteed to, and a single
// ulp in an activation changes sigma, the CDF index, and then the stream.

namespace pswa::det {

double exp(double x);
double log(double x);
double erf(double x);

// Standard normal CDF, Phi(x) = (1 + erf(x/sqrt(2)))/2.
double normal_cdf(double x);

// f32 activations, computed in f64 internally.
float exp_f32(float x);
float silu_f32(float x);      // x / (1 + e^-x)
float tanh_f32(float x);
float softplus_f32(float x);  // log(1 + e^x)

}  // namespace pswa::det

#endif  // PSWA_DET_MATH_H_
