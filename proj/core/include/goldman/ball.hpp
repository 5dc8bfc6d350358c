#pragma once

#include "goldman/hplane.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace goldman::detail {

/// One reduced word of the group ball together with its holonomy matrix.
/// Words live in a shared arena to keep the hot loop compact.
struct BallEntry {
    double m[4];
    std::uint32_t begin;
    std::uint32_t len;
};

struct Ball {
    int radius = 0;
    std::string arena;
    std::vector<BallEntry> entries;  // shortlex order, entry 0 is the identity

    std::string_view word(const BallEntry& e) const {
        return std::string_view(arena).substr(e.begin, e.len);
    }
};

/// Lazily built, shared across SurfaceRep copies. Thread-safe.
struct BallCache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const Ball>> by_radius;
};

}  // namespace goldman::detail
