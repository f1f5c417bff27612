// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Seeded generators for PSD instances.
//
// The random source is std::mt19937_64 (the 64-bit Mersenne Twister, whose
// state transition and tempering are fixed by the C++ standard) seeded with
// the user's 64-bit seed. Bounded integers are drawn as
//   lo + (x mod (hi - lo + 1))
// from one raw 64-bit output x, with no rejection step, so any
// implementation of MT19937-64 reproduces the same instances.

#ifndef HLCERT_GENERATOR_HPP_
#define HLCERT_GENERATOR_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "hlcert/matrix.hpp"

namespace hlcert {

class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform-ish integer in [lo, hi] (see the header comment).
  long UniformInt(long lo, long hi);
  bool Coin() { return (Next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorSpec {
  std::uint64_t seed = 0;
  int n = 1;
  std::vector<int> rank_profile;
  int entry_bound = 2;

  void Validate() const;
};

// One matrix per entry of the rank profile, each B B* with B an n x r
// Gaussian-integer matrix of full column rank and entries in
// [-entry_bound, entry_bound] (real and imaginary parts). B is redrawn until
// it has full rank; gives up with std::runtime_error after 1000 draws.
std::vector<HermitianMatrix> GeneratePsd(const GeneratorSpec& spec);

// B B* with B drawn as in GeneratePsd, using an existing stream.
HermitianMatrix RandomPsd(Prng& rng, int n, int rank, int entry_bound);

// A family whose subset sums have correlated kernels: matrix i is supported
// on a random coordinate subspace of dimension between ranks[i] and n, and
// the whole family is then moved by one random unimodular congruence. This
// makes rank deficits of subset sums (and hence failing HL criteria) common.
std::vector<HermitianMatrix> RandomStructuredFamily(Prng& rng, int n,
                                                    const std::vector<int>& ranks,
                                                    int entry_bound);

// Uniformly random rank profile entries in [0, n], skewed toward n.
std::vector<int> RandomRankProfile(Prng& rng, int n, int count);

// Random Hermitian (not necessarily PSD) matrix with entries in
// [-entry_bound, entry_bound].
HermitianMatrix RandomHermitian(Prng& rng, int n, int entry_bound);

}  // namespace hlcert

#endif  // HLCERT_GENERATOR_HPP_
