// Copyright 2026 The EGS Authors
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

#ifndef EGS_KERNELS_H_
#define EGS_KERNELS_H_

#include <cstddef>
#include <cstdint>

// Word-array kernels used by terminal-set bitsets. Each operation has a
// scalar reference implementation and an AVX2 variant; the dispatcher picks
// one at first use based on the running CPU.
namespace egs {
namespace kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  void (*and_words)(const uint64_t* a, const uint64_t* b, uint64_t* out,
                    size_t n);
  void (*or_words)(const uint64_t* a, const uint64_t* b, uint64_t* out,
                   size_t n);
  bool (*equal_words)(const uint64_t* a, const uint64_t* b, size_t n);
  bool (*intersects_words)(const uint64_t* a, const uint64_t* b, size_t n);
  // True iff every bit of a is set in b.
  bool (*subset_words)(const uint64_t* a, const uint64_t* b, size_t n);
  size_t (*popcount_words)(const uint64_t* a, size_t n);
};

const KernelTable& ScalarKernels();
// Returns nullptr when the binary was built without AVX2 support or the CPU
// lacks it.
const KernelTable* Avx2Kernels();

// The table selected for this process.
const KernelTable& Active();
Isa ActiveIsa();
// Overrides the selection. Requesting kAvx2 on a machine without it falls
// back to scalar and returns false.
bool SelectIsa(Isa isa);

}  // namespace kernels
}  // namespace egs

#endif  // EGS_KERNELS_H_
