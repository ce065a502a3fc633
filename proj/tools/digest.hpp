#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace emodes::cli {

// FNV-1a 64-bit content hash; enough to identify inputs in reports.
inline std::string fnv1a64_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 0x00000100000001B3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

}  // namespace emodes::cli
