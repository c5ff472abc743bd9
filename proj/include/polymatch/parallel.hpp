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

#ifndef POLYMATCH_PARALLEL_H
#define POLYMATCH_PARALLEL_H

namespace polymatch {

/// Applies the POLYMATCH_THREADS cap to the OpenMP runtime. Outputs are
/// deterministic regardless of the worker count; the cap only bounds
/// resource usage. Call once at program start.
void apply_thread_cap_from_env();

/// Number of workers parallel regions will use (1 when OpenMP is absent).
int worker_count();

}  // namespace polymatch

#endif
