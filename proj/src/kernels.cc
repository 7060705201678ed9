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

#include "egs/kernels.h"

#include <atomic>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define EGS_HAVE_X86 1
#endif

namespace egs {
namespace kernels {
namespace {

void ScalarAnd(const uint64_t* a, const uint64_t* b, uint64_t* out,
               size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] & b[i];
}

void ScalarOr(const uint64_t* a, const uint64_t* b, uint64_t* out, size_t n) {
  for (size_t i = 0; i < n; ++i) out[i] = a[i] | b[i];
}

bool ScalarEqual(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool ScalarIntersects(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool ScalarSubset(const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

size_t ScalarPopcount(const uint64_t* a, size_t n) {
  size_t c = 0;
  for (size_t i = 0; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

constexpr KernelTable kScalarTable = {ScalarAnd,        ScalarOr,
                                      ScalarEqual,      ScalarIntersects,
                                      ScalarSubset,     ScalarPopcount};

#ifdef EGS_HAVE_X86

__attribute__((target("avx2"))) void Avx2And(const uint64_t* a,
                                             const uint64_t* b, uint64_t* out,
                                             size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] & b[i];
}

__attribute__((target("avx2"))) void Avx2Or(const uint64_t* a,
                                            const uint64_t* b, uint64_t* out,
                                            size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) out[i] = a[i] | b[i];
}

__attribute__((target("avx2"))) bool Avx2Equal(const uint64_t* a,
                                               const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i x = _mm256_xor_si256(va, vb);
    if (!_mm256_testz_si256(x, x)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

__attribute__((target("avx2"))) bool Avx2Intersects(const uint64_t* a,
                                                    const uint64_t* b,
                                                    size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < n; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

__attribute__((target("avx2"))) bool Avx2Subset(const uint64_t* a,
                                                const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc(vb, va) is 1 iff (~vb & va) == 0.
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

// AVX2 has no vector popcount; this uses the nibble-lookup method.
__attribute__((target("avx2"))) size_t Avx2Popcount(const uint64_t* a,
                                                    size_t n) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                       1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                  _mm256_shuffle_epi8(lookup, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
  }
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  size_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) c += __builtin_popcountll(a[i]);
  return c;
}

constexpr KernelTable kAvx2Table = {Avx2And,        Avx2Or,
                                    Avx2Equal,      Avx2Intersects,
                                    Avx2Subset,     Avx2Popcount};

bool CpuHasAvx2() { return __builtin_cpu_supports("avx2"); }

#else

bool CpuHasAvx2() { return false; }

#endif  // EGS_HAVE_X86

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* Detect() {
  const KernelTable* avx2 = Avx2Kernels();
  return avx2 != nullptr ? avx2 : &kScalarTable;
}

}  // namespace

const KernelTable& ScalarKernels() { return kScalarTable; }

const KernelTable* Avx2Kernels() {
#ifdef EGS_HAVE_X86
  if (CpuHasAvx2()) return &kAvx2Table;
#endif
  return nullptr;
}

const KernelTable& Active() {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = Detect();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

Isa ActiveIsa() {
  return &Active() == &kScalarTable ? Isa::kScalar : Isa::kAvx2;
}

bool SelectIsa(Isa isa) {
  if (isa == Isa::kAvx2) {
    const KernelTable* avx2 = Avx2Kernels();
    if (avx2 == nullptr) {
      g_active.store(&kScalarTable, std::memory_order_release);
      return false;
    }
    g_active.store(avx2, std::memory_order_release);
    return true;
  }
  g_active.store(&kScalarTable, std::memory_order_release);
  return true;
}

}  // namespace kernels
}  // namespace egs
