// Copyright 2026 The Homport Authors
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
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace homport::detail {

/// Worker budget: hardware concurrency, capped by the HOMPORT_THREADS
/// environment variable when set to a positive integer.
inline unsigned worker_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HOMPORT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) {
            n = std::min<unsigned>(n, static_cast<unsigned>(cap));
        }
    }
    return n;
}

/// Splits [0, total) into at most `workers` contiguous chunks of near-equal
/// size, in order. Empty chunks are dropped.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total,
                                                                        unsigned workers) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    if (total == 0 || workers == 0) {
        return chunks;
    }
    const std::uint64_t w = std::min<std::uint64_t>(workers, total);
    std::uint64_t begin = 0;
    for (std::uint64_t k = 0; k < w; ++k) {
        const std::uint64_t end = begin + total / w + (k < total % w ? 1 : 0);
        chunks.emplace_back(begin, end);
        begin = end;
    }
    return chunks;
}

/// Runs `work(chunk_index, begin, end)` over a deterministic partition of
/// [0, total). Chunk 0 runs on the calling thread. Results must be combined
/// by the caller in chunk order to stay bit-stable at a fixed worker count.
template <typename Fn>
void run_partitioned(std::uint64_t total, unsigned workers, Fn&& work) {
    const auto chunks = split_range(total, workers);
    if (chunks.empty()) {
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(chunks.size() - 1);
    for (std::size_t c = 1; c < chunks.size(); ++c) {
        pool.emplace_back([&work, &chunks, c] { work(c, chunks[c].first, chunks[c].second); });
    }
    work(0, chunks[0].first, chunks[0].second);
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace homport::detail
