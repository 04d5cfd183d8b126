// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "temporient/kernels.hpp"

namespace temporient::kernels {

namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

// Bit i of the 256-lane block is mask 256*block + i; word j holds lanes
// 64j..64j+63.
__m256i lane_vector(std::uint32_t e, std::uint64_t block) {
    if (e < 6) return _mm256_set1_epi64x(static_cast<long long>(kLanePattern[e]));
    if (e == 6) return _mm256_set_epi64x(-1, 0, -1, 0);
    if (e == 7) return _mm256_set_epi64x(-1, -1, 0, 0);
    return ((block >> (e - 8)) & 1u) ? _mm256_set1_epi64x(-1) : _mm256_setzero_si256();
}

struct Lane {
    __m256i v;
};

template <class Visit>
void run_blocks(const TermSet& ts, Visit visit) {
    const std::uint64_t n = 1ull << ts.edges;
    std::vector<Lane> lanes(2 * ts.edges);
    const __m256i ones = _mm256_set1_epi64x(-1);
    for (std::uint64_t block = 0; block * 256 < n; ++block) {
        for (std::uint32_t e = 0; e < ts.edges; ++e) {
            lanes[2 * e + 1].v = lane_vector(e, block);
            lanes[2 * e].v = _mm256_xor_si256(lanes[2 * e + 1].v, ones);
        }
        __m256i viol = _mm256_setzero_si256();
        for (const auto& t : ts.terms) {
            __m256i acc = lanes[2 * t.edge[0] + t.forward[0]].v;
            for (int i = 1; i < t.size; ++i) acc = _mm256_and_si256(acc, lanes[2 * t.edge[i] + t.forward[i]].v);
            viol = _mm256_or_si256(viol, acc);
        }
        alignas(32) std::uint64_t words[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(words), _mm256_xor_si256(viol, ones));
        const std::uint64_t remaining = n - block * 256;
        for (std::uint64_t j = 0; j < 4; ++j) {
            if (j * 64 >= remaining) words[j] = 0;
            else if (remaining - j * 64 < 64) words[j] &= (1ull << (remaining - j * 64)) - 1;
        }
        if (!visit(block, words)) return;
    }
}

}  // namespace

std::optional<std::uint64_t> first_valid_avx2(const TermSet& ts) {
    std::optional<std::uint64_t> found;
    run_blocks(ts, [&](std::uint64_t block, const std::uint64_t* words) {
        for (std::uint64_t j = 0; j < 4; ++j) {
            if (words[j]) {
                found = block * 256 + j * 64 + static_cast<std::uint64_t>(std::countr_zero(words[j]));
                return false;
            }
        }
        return true;
    });
    return found;
}

std::uint64_t count_valid_avx2(const TermSet& ts) {
    std::uint64_t count = 0;
    run_blocks(ts, [&](std::uint64_t, const std::uint64_t* words) {
        for (int j = 0; j < 4; ++j) count += static_cast<std::uint64_t>(std::popcount(words[j]));
        return true;
    });
    return count;
}

}  // namespace temporient::kernels
