// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
//
// Reference scalar kernels.  These are deliberately written as plain loops:
// they define correct behavior, and the vector backends are validated against
// them amplitude-for-amplitude.

#include "pfz/simd/kernels.hpp"

namespace pfz::simd {
namespace {

void s_apply_1q(cplx* a, int n_qubits, int target, const cplx* m) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  for (std::size_t base = 0; base < dim; base += 2 * s) {
    for (std::size_t off = 0; off < s; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + s;
      const cplx a0 = a[i0], a1 = a[i1];
      a[i0] = m[0] * a0 + m[1] * a1;
      a[i1] = m[2] * a0 + m[3] * a1;
    }
  }
}

void s_apply_1q_diag(cplx* a, int n_qubits, int target, cplx d0, cplx d1) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  for (std::size_t i = 0; i < dim; ++i) a[i] *= (i & s) ? d1 : d0;
}

void s_apply_2q(cplx* a, int n_qubits, int q0, int q1, const cplx* m) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  const std::size_t mask = s0 | s1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const cplx a00 = a[i], a01 = a[i + s1], a10 = a[i + s0], a11 = a[i + s0 + s1];
    a[i] = m[0] * a00 + m[1] * a01 + m[2] * a10 + m[3] * a11;
    a[i + s1] = m[4] * a00 + m[5] * a01 + m[6] * a10 + m[7] * a11;
    a[i + s0] = m[8] * a00 + m[9] * a01 + m[10] * a10 + m[11] * a11;
    a[i + s0 + s1] = m[12] * a00 + m[13] * a01 + m[14] * a10 + m[15] * a11;
  }
}

void s_apply_2q_diag(cplx* a, int n_qubits, int q0, int q1, const cplx* d) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  for (std::size_t i = 0; i < dim; ++i) {
    const int idx = ((i & s0) ? 2 : 0) | ((i & s1) ? 1 : 0);
    a[i] *= d[idx];
  }
}

double s_norm_sq(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

double s_expect_z(const cplx* a, int n_qubits, int target) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double p = std::norm(a[i]);
    acc += (i & s) ? -p : p;
  }
  return acc;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet ks{"scalar",       s_apply_1q, s_apply_1q_diag,
                            s_apply_2q,     s_apply_2q_diag,
                            s_norm_sq,      s_expect_z};
  return ks;
}

}  // namespace pfz::simd
