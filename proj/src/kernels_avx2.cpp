#include "totlab/kernels.hpp"

#if defined(TOTLAB_HAVE_AVX2)

#include <immintrin.h>

namespace totlab::simd {

namespace {

// 4 lanes of u32 widened to u64.
inline __m256i load4_u64(const std::uint32_t* p) {
    return _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

}  // namespace

void sq_lt_2ab_avx2(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* c,
                    std::size_t n, std::uint32_t guard, std::vector<std::size_t>& fails) {
    std::size_t i = 0;
    const __m256i guard64 = _mm256_set1_epi64x(static_cast<long long>(guard));
    for (; i + 4 <= n; i += 4) {
        __m256i av = load4_u64(a + i);
        __m256i bv = load4_u64(b + i);
        __m256i cv = load4_u64(c + i);
        // All operands < 2^31, so mul_epu32 on the low halves is exact and
        // every value stays below 2^63: signed 64-bit compares are safe.
        __m256i csq = _mm256_mul_epu32(cv, cv);
        __m256i rhs = _mm256_slli_epi64(_mm256_mul_epu32(av, bv), 1);
        __m256i active = _mm256_cmpgt_epi64(cv, guard64);
        __m256i ok = _mm256_cmpgt_epi64(rhs, csq);  // csq < rhs
        __m256i bad = _mm256_andnot_si256(ok, active);
        int mask = _mm256_movemask_pd(_mm256_castsi256_pd(bad));
        while (mask != 0) {
            int lane = __builtin_ctz(static_cast<unsigned>(mask));
            fails.push_back(i + static_cast<std::size_t>(lane));
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i) {
        if (c[i] <= guard) continue;
        std::uint64_t lhs = std::uint64_t(c[i]) * c[i];
        std::uint64_t rhs = 2 * (std::uint64_t(a[i]) * b[i]);
        if (!(lhs < rhs)) fails.push_back(i);
    }
}

void lt_2a_avx2(const std::uint32_t* a, const std::uint32_t* c, std::size_t n,
                std::vector<std::size_t>& fails) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i av = load4_u64(a + i);
        __m256i cv = load4_u64(c + i);
        __m256i rhs = _mm256_slli_epi64(av, 1);
        __m256i ok = _mm256_cmpgt_epi64(rhs, cv);  // c < 2a
        int mask = ~_mm256_movemask_pd(_mm256_castsi256_pd(ok)) & 0xF;
        while (mask != 0) {
            int lane = __builtin_ctz(static_cast<unsigned>(mask));
            fails.push_back(i + static_cast<std::size_t>(lane));
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i) {
        if (!(std::uint64_t(c[i]) < 2 * std::uint64_t(a[i]))) fails.push_back(i);
    }
}

}  // namespace totlab::simd

#endif  // TOTLAB_HAVE_AVX2
