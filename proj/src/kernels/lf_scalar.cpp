#include <algorithm>
#include <cmath>

#include "desitter/kernels.hpp"

namespace desitter::kernels::scalar {

namespace {

template <SourceForm Form>
void lf_update_impl(const LfStencil& s, std::span<double> out) {
  const double coef = s.dt / (2.0 * s.dr);
  const double* v = s.v_ext.data();
  const double* b = s.b_ext.data();
  const std::size_t n = out.size();
  for (std::size_t j = 0; j < n; ++j) {
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
      src = s.lambda_r[j] * (s.c2 - 2.0 * vc2);
    } else {
      src = s.lambda_r[j] * (s.c2 - vc2);
    }
    out[j] = (avg - coef * diff) + s.dt * src;
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
  double m = 0.0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    m = std::max(m, std::abs(b[j] * v[j]));
  }
  return m;
}

}  // namespace desitter::kernels::scalar
