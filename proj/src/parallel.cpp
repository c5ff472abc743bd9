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

#include "polymatch/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polymatch {

void apply_thread_cap_from_env() {
#ifdef _OPENMP
  const char* env = std::getenv("POLYMATCH_THREADS");
  if (env == nullptr || *env == '\0') return;
  int cap = 0;
  try {
    cap = std::stoi(env);
  } catch (...) {
    return;
  }
  if (cap < 1) cap = 1;
  if (cap > omp_get_max_threads()) cap = omp_get_max_threads();
  omp_set_num_threads(cap);
#endif
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace polymatch
