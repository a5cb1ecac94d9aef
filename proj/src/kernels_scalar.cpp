#include "totlab/kernels.hpp"

namespace totlab::simd {

void sq_lt_2ab_scalar(const std::uint32_t* a, const std::uint32_t* b, const std::uint32_t* c,
                      std::size_t n, std::uint32_t guard, std::vector<std::size_t>& fails) {
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] <= guard) continue;
        std::uint64_t lhs = std::uint64_t(c[i]) * c[i];
        std::uint64_t rhs = 2 * (std::uint64_t(a[i]) * b[i]);
        if (!(lhs < rhs)) fails.push_back(i);
    }
}

void lt_2a_scalar(const std::uint32_t* a, const std::uint32_t* c, std::size_t n,
                  std::vector<std::size_t>& fails) {
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::uint64_t(c[i]) < 2 * std::uint64_t(a[i]))) fails.push_back(i);
    }
}

}  // namespace totlab::simd
