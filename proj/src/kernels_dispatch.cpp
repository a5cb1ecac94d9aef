#include "totlab/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "totlab/error.hpp"

namespace totlab::simd {

SqLt2abFn sq_lt_2ab = sq_lt_2ab_scalar;
Lt2aFn lt_2a = lt_2a_scalar;

namespace {

Mode g_mode = Mode::scalar;

void apply(Mode m) {
    g_mode = m;
    switch (m) {
        case Mode::scalar:
            sq_lt_2ab = sq_lt_2ab_scalar;
            lt_2a = lt_2a_scalar;
            break;
        case Mode::avx2:
#if defined(TOTLAB_HAVE_AVX2)
            sq_lt_2ab = sq_lt_2ab_avx2;
            lt_2a = lt_2a_avx2;
#endif
            break;
    }
}

struct Init {
    Init() {
        Mode m = avx2_supported() ? Mode::avx2 : Mode::scalar;
        if (const char* env = std::getenv("TOTLAB_SIMD")) {
            if (std::strcmp(env, "scalar") == 0) m = Mode::scalar;
            else if (std::strcmp(env, "avx2") == 0 && avx2_supported()) m = Mode::avx2;
            // "auto" or anything else keeps the detected mode
        }
        apply(m);
    }
};

Init g_init;

}  // namespace

bool avx2_supported() {
#if defined(TOTLAB_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Mode active_mode() { return g_mode; }

void set_mode(Mode m) {
    if (m == Mode::avx2 && !avx2_supported()) fail(Errc::out_of_range, "avx2 not supported on this CPU");
    apply(m);
}

std::string mode_name(Mode m) { return m == Mode::avx2 ? "avx2" : "scalar"; }

}  // namespace totlab::simd
