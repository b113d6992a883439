#include <cstdlib>
#include <string>

#include "desitter/errors.hpp"
#include "desitter/kernels.hpp"

namespace desitter::kernels {

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if (defined(__x86_64__) || defined(_M_X64)) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

KernelTable kernels_for(Backend b) {
  if (!backend_available(b)) {
    throw ArgumentError("kernel backend '" + std::string(backend_name(b)) +
                        "' is not available on this machine");
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::avx2) {
    return {Backend::avx2, &avx2::lf_update, &avx2::max_char_speed};
  }
#endif
  return {Backend::scalar, &scalar::lf_update, &scalar::max_char_speed};
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out{Backend::scalar};
  if (backend_available(Backend::avx2)) out.push_back(Backend::avx2);
  return out;
}

namespace {

KernelTable resolve() {
  if (const char* env = std::getenv("DESITTER_KERNEL")) {
    const std::string want(env);
    if (want == "scalar") return kernels_for(Backend::scalar);
    if (want == "avx2") return kernels_for(Backend::avx2);
  }
  return kernels_for(backend_available(Backend::avx2) ? Backend::avx2 : Backend::scalar);
}

}  // namespace

const KernelTable& active() {
  static const KernelTable table = resolve();
  return table;
}

}  // namespace desitter::kernels
