// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leakc/threads.h"

#include <atomic>
#include <thread>

namespace leakc {
namespace {

std::atomic<unsigned> g_thread_limit{0};

}  // namespace

void SetThreadLimit(unsigned limit) { g_thread_limit.store(limit); }

unsigned ThreadLimit() {
  const unsigned limit = g_thread_limit.load();
  if (limit != 0) return limit;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace leakc
