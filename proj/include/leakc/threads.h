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

#ifndef LEAKC_THREADS_H_
#define LEAKC_THREADS_H_

namespace leakc {

// Caps the worker threads used by type-class and trial evaluation.
// 0 selects std::thread::hardware_concurrency(). Results never depend on it.
void SetThreadLimit(unsigned limit);
unsigned ThreadLimit();

}  // namespace leakc

#endif  // LEAKC_THREADS_H_
