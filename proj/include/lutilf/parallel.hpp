// Copyright 2026 The lutilf Authors
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

#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace lutilf {

// Runs body(begin, end) over disjoint chunks of [0, count). threads <= 0 picks the
// hardware concurrency.
template <typename Body>
void parallel_for(int count, int threads, Body&& body)
{
  if (threads <= 0)
  {
    threads = int(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1)
  {
    body(0, count);
    return;
  }

  std::vector<std::jthread> workers;
  workers.reserve(std::size_t(threads));
  const int chunk = (count + threads - 1) / threads;
  for (int begin = 0; begin < count; begin += chunk)
  {
    const int end = std::min(count, begin + chunk);
    workers.emplace_back([&body, begin, end] { body(begin, end); });
  }
}

}   // namespace lutilf
