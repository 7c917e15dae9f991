// SPDX-License-Identifier: Apache-2.0
//
// risnf - near-field RIS placement and capacity simulator
// Copyright (C) 2026 The risnf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace risnf
{

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Indices are claimed
/// dynamically; callers write results into slot i, so output order never depends
/// on scheduling. The first exception thrown by fn is rethrown after all workers
/// have joined.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn &&fn)
{
    if (count == 0)
        return;
    jobs = std::clamp<std::size_t>(jobs, 1, count);
    if (jobs == 1)
    {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                {
                    try
                    {
                        fn(i);
                    }
                    catch (...)
                    {
                        std::lock_guard lock(failure_mutex);
                        if (!failure)
                            failure = std::current_exception();
                    }
                }
            });
    }
    if (failure)
        std::rethrow_exception(failure);
}

/// Worker count to use when the caller passes 0.
inline std::size_t default_jobs()
{
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

} // namespace risnf
