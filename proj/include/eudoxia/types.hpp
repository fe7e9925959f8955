#pragma once

#include <cstdint>

namespace eudoxia {

// One tick is 10 microseconds of simulated time.
using Tick = std::uint64_t;
inline constexpr std::uint64_t kTicksPerSecond = 100000;

using PipelineId = std::uint64_t;
using ContainerId = std::uint64_t;
using PoolId = std::uint32_t;
using Millicores = std::int64_t;
using Mebibytes = std::int64_t;

// A CPU/RAM amount: container grants, requests, pool balances.
struct Grant {
    Millicores cpu = 0;
    Mebibytes ram = 0;

    friend bool operator==(const Grant&, const Grant&) = default;
};

}  // namespace eudoxia
