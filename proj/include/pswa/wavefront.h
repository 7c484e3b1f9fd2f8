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

#ifndef PSWA_WAVEFRONT_H_
#define PSWA_WAVEFRONT_H_

#include <string>
#include <vector>

namespace pswa {

struct Pos {
  int y = 0;
  int x = 0;
  bool operator==(const Pos&) const = default;
};

// Spatial decode step of a latent position. Anti-diagonal y+x is constant
// along a wavefront; every s-th diagonal shares a step, so the grid decodes
// in s steps regardless of resolution.
inline int step_of(Pos p, int s) { return (p.y + p.x) % s; }

enum class MaskKind {
  kSpatialSelf,     // key step <= query step
  kAccumulator,     // key step <  query step
  kTemporalCausal,  // key frame < query frame
  kChannelBlockLt,  // key group <= query group
};

// Single predicate shared by encode and decode. For kTemporalCausal the
// "positions" are frame indices carried in .y.
bool mask_allows(MaskKind kind, Pos query, Pos key, int s);

// All positions with step t, raster order. This is the canonical symbol
// order for entropy coding within one step.
std::vector<Pos> positions_of_step(int h, int w, int s, int t);

// Block-lower-triangular channel-mixing mask: entry (i_out, j_in) is true
// iff block(i_out) >= block(j_in). Multiplied into the mixing weight it
// acts as a masked 1x1 convolution over channel groups.
std::vector<uint8_t> channel_mask(int n_groups, int group_dim);

struct ScheduleReport {
  bool ok = true;
  int sequential_steps = 0;  // s * n_groups, independent of H and W
  std::string first_violation;
  std::vector<std::string> lines;
};

// Checks that the (s, window, N) schedule is decodable: accumulator edges go
// strictly backward in step, spatial-self edges never go forward, and the
// canonical decode order is a topological order of the symbol dependency
// graph.
ScheduleReport validate_schedule(int h, int w, int s, int wh, int ww,
                                 int n_groups);

}  // namespace pswa

#endif  // PSWA_WAVEFRONT_H_
