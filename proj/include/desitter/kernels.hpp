#pragma once

// Data-parallel inner loops of the Lax-Friedrichs scheme. Every backend must
// produce bitwise-identical results to the scalar reference: the SIMD variants
// evaluate the same operations in the same order and never contract a*b + c
// into a fused multiply-add.

#include <span>
#include <string_view>
#include <vector>

#include "desitter/model.hpp"

namespace desitter::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

/// Inputs of one cell update. v_ext and b_ext carry one ghost on each side
/// (size n + 2); lambda_r holds Lambda * r_j for the n interior cells.
struct LfStencil {
  std::span<const double> v_ext;
  std::span<const double> b_ext;
  std::span<const double> lambda_r;
  double c2 = 1.0;
  double dt = 0.0;
  double dr = 0.0;
  SourceForm form = SourceForm::conservative;
};

using LfUpdateFn = void (*)(const LfStencil&, std::span<double> out);
/// max_j |b_j v_j| over equally sized spans.
using MaxSpeedFn = double (*)(std::span<const double> v, std::span<const double> b);

struct KernelTable {
  Backend backend;
  LfUpdateFn lf_update;
  MaxSpeedFn max_char_speed;
};

namespace scalar {
void lf_update(const LfStencil& s, std::span<double> out);
double max_char_speed(std::span<const double> v, std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void lf_update(const LfStencil& s, std::span<double> out);
double max_char_speed(std::span<const double> v, std::span<const double> b);
}  // namespace avx2
#endif

/// True when the CPU and the build both support the backend.
bool backend_available(Backend b);

/// Kernel table for a specific backend; throws ArgumentError if unavailable.
KernelTable kernels_for(Backend b);

/// Best available backend, unless DESITTER_KERNEL=scalar|avx2 overrides it.
/// Resolved once per process.
const KernelTable& active();

/// Backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

}  // namespace desitter::kernels
