// Small numeric helpers: pairwise summation and round-trip formatting.

#pragma once

#include <charconv>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <system_error>

namespace oqb {

using complex = std::complex<double>;

// Pairwise (cascade) summation. The reduction tree depends only on the length,
// so results are reproducible regardless of how the terms were produced.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
    constexpr std::size_t block = 16;
    if (terms.size() <= block) {
        T acc{};
        for (const T& x : terms) acc += x;
        return acc;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

// 17 significant digits: lossless for IEEE doubles.
inline std::string format_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value,
                                   std::chars_format::general, 17);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

} // namespace oqb
