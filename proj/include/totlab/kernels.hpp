#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace totlab::simd {

// Data-parallel inner loops for the bulk inequality scans. Inputs are prime
// arrays with every value < 2^31, so all intermediates fit in 64 bits:
// c^2 < 2^62 and 2*a*b < 2^63.
//
// Scalar versions are the reference; vector variants must match them
// exactly and are selected at runtime (override with TOTLAB_SIMD=scalar).

// Appends i to fails where c[i] > guard and NOT (c[i]^2 < 2*a[i]*b[i]).
using SqLt2abFn = void (*)(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* c,
                           std::size_t n, std::uint32_t guard, std::vector<std::size_t>& fails);

// Appends i to fails where NOT (c[i] < 2*a[i]).
using Lt2aFn = void (*)(const std::uint32_t* a, const std::uint32_t* c, std::size_t n,
                        std::vector<std::size_t>& fails);

void sq_lt_2ab_scalar(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* c,
                      std::size_t n, std::uint32_t guard, std::vector<std::size_t>& fails);
void lt_2a_scalar(const std::uint32_t* a, const std::uint32_t* c, std::size_t n,
                  std::vector<std::size_t>& fails);

#if defined(TOTLAB_HAVE_AVX2)
void sq_lt_2ab_avx2(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* c,
                    std::size_t n, std::uint32_t guard, std::vector<std::size_t>& fails);
void lt_2a_avx2(const std::uint32_t* a, const std::uint32_t* c, std::size_t n,
                std::vector<std::size_t>& fails);
#endif

enum class Mode { scalar, avx2 };

bool avx2_supported();
Mode active_mode();
void set_mode(Mode m);        // throws OutOfRange if unsupported
std::string mode_name(Mode m);

// Dispatched entry points (set once at startup from CPU detection and the
// TOTLAB_SIMD environment variable).
extern SqLt2abFn sq_lt_2ab;
extern Lt2aFn lt_2a;

}  // namespace totlab::simd
