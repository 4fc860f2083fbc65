#include "streameval/simd/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace streameval::simd {
namespace {

struct Selection {
    const Kernels* kernels;
    const char* name;
};

Selection resolve(std::string_view request) {
    if (request == "scalar") return {&scalar_kernels(), "scalar"};
    if (request == "avx2") {
        const Kernels* k = avx2_kernels();
        if (!k) throw std::runtime_error("simd backend 'avx2' not available on this CPU/build");
        return {k, "avx2"};
    }
    if (request == "auto" || request.empty()) {
        if (const Kernels* k = avx2_kernels()) return {k, "avx2"};
        return {&scalar_kernels(), "scalar"};
    }
    throw std::runtime_error("unknown simd backend '" + std::string(request) +
                             "' (expected scalar, avx2 or auto)");
}

Selection& current() {
    static Selection sel = [] {
        const char* env = std::getenv("STREAMEVAL_SIMD");
        return resolve(env ? env : "auto");
    }();
    return sel;
}

}  // namespace

const Kernels& active() { return *current().kernels; }

std::string_view active_name() { return current().name; }

void force_backend(std::string_view name) { current() = resolve(name); }

}  // namespace streameval::simd
