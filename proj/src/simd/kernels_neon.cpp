// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
//
// NEON statevector kernels for aarch64.  A 128-bit register holds one
// complex<double> as [re, im]; complex multiply is one swap, one multiply
// and one fma against precomputed [-ci, ci] masks.

#include "pfz/simd/kernels.hpp"

#if defined(__aarch64__)
#define PFZ_AARCH64 1
#include <arm_neon.h>
#endif

namespace pfz::simd {

#if defined(PFZ_AARCH64)

namespace {

struct CScalar {
  float64x2_t re;   // [cr, cr]
  float64x2_t im;   // [-ci, ci]
};

inline CScalar make_c(cplx c) {
  return {vdupq_n_f64(c.real()),
          vcombine_f64(vdup_n_f64(-c.imag()), vdup_n_f64(c.imag()))};
}

// u * c
inline float64x2_t cmul(float64x2_t u, const CScalar& c) {
  const float64x2_t t = vmulq_f64(vextq_f64(u, u, 1), c.im);
  return vfmaq_f64(t, u, c.re);
}

void n_apply_1q(cplx* a, int n_qubits, int target, const cplx* m) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  const CScalar m0 = make_c(m[0]), m1 = make_c(m[1]), m2 = make_c(m[2]), m3 = make_c(m[3]);
  for (std::size_t base = 0; base < dim; base += 2 * s) {
    for (std::size_t off = 0; off < s; ++off) {
      double* p0 = p + 2 * (base + off);
      double* p1 = p0 + 2 * s;
      const float64x2_t v0 = vld1q_f64(p0);
      const float64x2_t v1 = vld1q_f64(p1);
      vst1q_f64(p0, vaddq_f64(cmul(v0, m0), cmul(v1, m1)));
      vst1q_f64(p1, vaddq_f64(cmul(v0, m2), cmul(v1, m3)));
    }
  }
}

void n_apply_1q_diag(cplx* a, int n_qubits, int target, cplx d0, cplx d1) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  const CScalar c0 = make_c(d0), c1 = make_c(d1);
  for (std::size_t i = 0; i < dim; ++i) {
    double* pi = p + 2 * i;
    vst1q_f64(pi, cmul(vld1q_f64(pi), (i & s) ? c1 : c0));
  }
}

void n_apply_2q(cplx* a, int n_qubits, int q0, int q1, const cplx* m) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  const std::size_t mask = s0 | s1;
  CScalar mm[16];
  for (int k = 0; k < 16; ++k) mm[k] = make_c(m[k]);
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    double* p00 = p + 2 * i;
    double* p01 = p + 2 * (i + s1);
    double* p10 = p + 2 * (i + s0);
    double* p11 = p + 2 * (i + s0 + s1);
    const float64x2_t v00 = vld1q_f64(p00), v01 = vld1q_f64(p01);
    const float64x2_t v10 = vld1q_f64(p10), v11 = vld1q_f64(p11);
    double* dst[4] = {p00, p01, p10, p11};
    for (int r = 0; r < 4; ++r) {
      float64x2_t acc = cmul(v00, mm[4 * r]);
      acc = vaddq_f64(acc, cmul(v01, mm[4 * r + 1]));
      acc = vaddq_f64(acc, cmul(v10, mm[4 * r + 2]));
      acc = vaddq_f64(acc, cmul(v11, mm[4 * r + 3]));
      vst1q_f64(dst[r], acc);
    }
  }
}

void n_apply_2q_diag(cplx* a, int n_qubits, int q0, int q1, const cplx* d) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  const CScalar c[4] = {make_c(d[0]), make_c(d[1]), make_c(d[2]), make_c(d[3])};
  for (std::size_t i = 0; i < dim; ++i) {
    const int idx = ((i & s0) ? 2 : 0) | ((i & s1) ? 1 : 0);
    double* pi = p + 2 * i;
    vst1q_f64(pi, cmul(vld1q_f64(pi), c[idx]));
  }
}

double n_norm_sq(const cplx* a, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(a);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t v = vld1q_f64(p + 2 * i);
    acc = vfmaq_f64(acc, v, v);
  }
  return vaddvq_f64(acc);
}

double n_expect_z(const cplx* a, int n_qubits, int target) {
  const double* p = reinterpret_cast<const double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    const float64x2_t v = vld1q_f64(p + 2 * i);
    if (i & s) {
      acc = vfmsq_f64(acc, v, v);
    } else {
      acc = vfmaq_f64(acc, v, v);
    }
  }
  return vaddvq_f64(acc);
}

}  // namespace

bool neon_available() { return true; }

const KernelSet& neon_kernels() {
  static const KernelSet ks{"neon",       n_apply_1q, n_apply_1q_diag,
                            n_apply_2q,   n_apply_2q_diag,
                            n_norm_sq,    n_expect_z};
  return ks;
}

#else  // !PFZ_AARCH64

bool neon_available() { return false; }
const KernelSet& neon_kernels() { return scalar_kernels(); }

#endif

}  // namespace pfz::simd
