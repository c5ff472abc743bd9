// Copyright 2026 The polymatch developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//      http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Carry-less multiplication kernel. This translation unit is compiled with
// -mpclmul on x86-64; callers must gate on clmul_available(), which does a
// runtime CPU check, so the rest of the library can be built for a generic
// target.

#include "polymatch/poly.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define POLYMATCH_HAVE_CLMUL_TU 1
#include <wmmintrin.h>
#endif

namespace polymatch {

bool clmul_available() {
#if defined(POLYMATCH_HAVE_CLMUL_TU) && defined(__GNUC__)
  static const bool ok = __builtin_cpu_supports("pclmul");
  return ok;
#else
  return false;
#endif
}

namespace detail {

#ifdef POLYMATCH_HAVE_CLMUL_TU

void mul_words_clmul(std::uint64_t* out, const std::uint64_t* a,
                     const std::uint64_t* b, std::size_t n_words) {
  for (std::size_t i = 0; i < n_words; ++i) {
    if (a[i] == 0) continue;
    const __m128i ai = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
    const std::size_t jmax = n_words - i;
    for (std::size_t j = 0; j < jmax; ++j) {
      if (b[j] == 0) continue;
      const __m128i bj = _mm_cvtsi64_si128(static_cast<long long>(b[j]));
      const __m128i prod = _mm_clmulepi64_si128(ai, bj, 0x00);
      out[i + j] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
      if (i + j + 1 < n_words) {
        out[i + j + 1] ^= static_cast<std::uint64_t>(
            _mm_cvtsi128_si64(_mm_srli_si128(prod, 8)));
      }
    }
  }
}

#else

void mul_words_clmul(std::uint64_t*, const std::uint64_t*, const std::uint64_t*,
                     std::size_t) {
  // Unreachable: clmul_available() is false on this target.
}

#endif

}  // namespace detail
}  // namespace polymatch
