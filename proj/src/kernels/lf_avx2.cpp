// Compiled with -mavx2 only (no -mfma); see CMakeLists.txt.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "desitter/kernels.hpp"

namespace desitter::kernels::avx2 {

namespace {

template <SourceForm Form>
void lf_update_impl(const LfStencil& s, std::span<double> out) {
  const double coef = s.dt / (2.0 * s.dr);
  const double* v = s.v_ext.data();
  const double* b = s.b_ext.data();
  const double* lr = s.lambda_r.data();
  double* o = out.data();
  const std::size_t n = out.size();

  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d c2 = _mm256_set1_pd(s.c2);
  const __m256d vcoef = _mm256_set1_pd(coef);
  const __m256d vdt = _mm256_set1_pd(s.dt);

  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vm = _mm256_loadu_pd(v + j);
    const __m256d vc = _mm256_loadu_pd(v + j + 1);
    const __m256d vp = _mm256_loadu_pd(v + j + 2);
    const __m256d avg = _mm256_mul_pd(half, _mm256_add_pd(vm, vp));
    const __m256d fm = _mm256_mul_pd(_mm256_mul_pd(vm, vm), half);
    const __m256d fp = _mm256_mul_pd(_mm256_mul_pd(vp, vp), half);
    __m256d diff;
    if constexpr (Form == SourceForm::nonconservative) {
      diff = _mm256_mul_pd(_mm256_loadu_pd(b + j + 1), _mm256_sub_pd(fp, fm));
    } else {
      diff = _mm256_sub_pd(_mm256_mul_pd(_mm256_loadu_pd(b + j + 2), fp),
                           _mm256_mul_pd(_mm256_loadu_pd(b + j), fm));
    }
    const __m256d vc2 = _mm256_mul_pd(vc, vc);
    __m256d bracket;
    if constexpr (Form == SourceForm::conservative) {
      bracket = _mm256_sub_pd(c2, _mm256_mul_pd(two, vc2));
    } else {
      bracket = _mm256_sub_pd(c2, vc2);
    }
    const __m256d src = _mm256_mul_pd(_mm256_loadu_pd(lr + j), bracket);
    const __m256d res = _mm256_add_pd(_mm256_sub_pd(avg, _mm256_mul_pd(vcoef, diff)),
                                      _mm256_mul_pd(vdt, src));
    _mm256_storeu_pd(o + j, res);
  }

  // Tail: identical operation order to the scalar reference.
  for (; j < n; ++j) {
    const double vm = v[j];
    const double vc = v[j + 1];
    const double vp = v[j + 2];
    const double avg = 0.5 * (vm + vp);
    const double fm = (vm * vm) * 0.5;
    const double fp = (vp * vp) * 0.5;
    double diff;
    if constexpr (Form == SourceForm::nonconservative) {
      diff = b[j + 1] * (fp - fm);
    } else {
      diff = b[j + 2] * fp - b[j] * fm;
    }
    const double vc2 = vc * vc;
    double src;
    if constexpr (Form == SourceForm::conservative) {
      src = lr[j] * (s.c2 - 2.0 * vc2);
    } else {
      src = lr[j] * (s.c2 - vc2);
    }
    o[j] = (avg - coef * diff) + s.dt * src;
  }
}

}  // namespace

void lf_update(const LfStencil& s, std::span<double> out) {
  switch (s.form) {
    case SourceForm::conservative:
      return lf_update_impl<SourceForm::conservative>(s, out);
    case SourceForm::nonconservative:
      return lf_update_impl<SourceForm::nonconservative>(s, out);
    case SourceForm::paper_literal:
      return lf_update_impl<SourceForm::paper_literal>(s, out);
  }
}

double max_char_speed(std::span<const double> v, std::span<const double> b) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n = v.size();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(b.data() + j), _mm256_loadu_pd(v.data() + j));
    acc = _mm256_max_pd(acc, _mm256_andnot_pd(sign_mask, prod));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; j < n; ++j) {
    m = std::max(m, std::abs(b[j] * v[j]));
  }
  return m;
}

}  // namespace desitter::kernels::avx2
