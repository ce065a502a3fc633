#include "emodes/info.hpp"

#include <cctype>

namespace emodes::info {

BitFileStats bit_stats_from_text(std::string_view text) {
    std::uint64_t lambda = 0;
    std::uint64_t ones = 0;
    for (char ch : text) {
        if (ch == '0') {
            ++lambda;
        } else if (ch == '1') {
            ++lambda;
            ++ones;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            continue;
        } else {
            throw std::runtime_error("bit_stats_from_text: unexpected symbol '" +
                                     std::string(1, ch) + "' (expected '0', '1' or whitespace)");
        }
    }
    if (lambda == 0)
        throw std::domain_error("bit_stats_from_text: empty bitstream");
    return BitFileStats(lambda, ones);
}

BitFileStats bit_stats_from_bytes(std::span<const unsigned char> bytes) {
    if (bytes.empty())
        throw std::domain_error("bit_stats_from_bytes: empty input");
    std::uint64_t ones = 0;
    for (unsigned char byte : bytes)
        for (int bit = 7; bit >= 0; --bit)
            ones += (byte >> bit) & 1u;
    return BitFileStats(8 * static_cast<std::uint64_t>(bytes.size()), ones);
}

}  // namespace emodes::info
