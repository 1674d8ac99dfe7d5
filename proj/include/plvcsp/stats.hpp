// Copyright 2026 The plvcsp Authors
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

#pragma once

#include <atomic>
#include <cstdint>

namespace plvcsp {

// Call counters shared by the parallel kernels.
struct CallCounters {
  std::atomic<std::uint64_t> enumeration_feasibility{0};  // sign-branch tests
  std::atomic<std::uint64_t> containment_feasibility{0};  // cell vs. piece tests
  std::atomic<std::uint64_t> bound_lps{0};                // inf/sup LPs per cell
  std::atomic<std::uint64_t> cells{0};

  std::uint64_t feasibility_calls() const {
    return enumeration_feasibility.load() + containment_feasibility.load();
  }
};

inline void bump(std::atomic<std::uint64_t>* counter) {
  if (counter != nullptr) counter->fetch_add(1, std::memory_order_relaxed);
}

}  // namespace plvcsp
