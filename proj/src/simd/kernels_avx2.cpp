// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
//
// AVX2+FMA statevector kernels.  This translation unit is the only one built
// with -mavx2 -mfma; callers must check avx2_available() before selecting it.
//
// Layout notes: a 256-bit register holds two complex<double> amplitudes as
// [re0, im0, re1, im1].  The fmaddsub trick gives complex multiply in three
// instructions.  When the lowest target stride is 1 the amplitude pairs are
// adjacent within one register, so those paths use 128-bit lane broadcasts
// instead of the stride-2 main path.

#include "pfz/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define PFZ_X86 1
#include <immintrin.h>
#endif

namespace pfz::simd {

#if defined(PFZ_X86)

namespace {

// v * c for two complex lanes, c broadcast.
inline __m256d cmul_bcast(__m256d v, double cr, double ci) {
  const __m256d t = _mm256_mul_pd(_mm256_permute_pd(v, 0x5), _mm256_set1_pd(ci));
  return _mm256_fmaddsub_pd(v, _mm256_set1_pd(cr), t);
}

// Elementwise complex multiply of two-complex vectors u and w.
inline __m256d cmul(__m256d u, __m256d w) {
  const __m256d wr = _mm256_movedup_pd(w);
  const __m256d wi = _mm256_permute_pd(w, 0xF);
  const __m256d t = _mm256_mul_pd(_mm256_permute_pd(u, 0x5), wi);
  return _mm256_fmaddsub_pd(u, wr, t);
}

// [m_a, m_b] packed as one register (column of a small matrix).
inline __m256d pack2(cplx a, cplx b) {
  return _mm256_setr_pd(a.real(), a.imag(), b.real(), b.imag());
}

inline __m256d dup_lo(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x00); }
inline __m256d dup_hi(__m256d v) { return _mm256_permute2f128_pd(v, v, 0x11); }

void a_apply_1q(cplx* a, int n_qubits, int target, const cplx* m) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  if (s >= 2) {
    const double m0r = m[0].real(), m0i = m[0].imag();
    const double m1r = m[1].real(), m1i = m[1].imag();
    const double m2r = m[2].real(), m2i = m[2].imag();
    const double m3r = m[3].real(), m3i = m[3].imag();
    for (std::size_t base = 0; base < dim; base += 2 * s) {
      for (std::size_t off = 0; off < s; off += 2) {
        double* p0 = p + 2 * (base + off);
        double* p1 = p0 + 2 * s;
        const __m256d v0 = _mm256_loadu_pd(p0);
        const __m256d v1 = _mm256_loadu_pd(p1);
        const __m256d r0 = _mm256_add_pd(cmul_bcast(v0, m0r, m0i), cmul_bcast(v1, m1r, m1i));
        const __m256d r1 = _mm256_add_pd(cmul_bcast(v0, m2r, m2i), cmul_bcast(v1, m3r, m3i));
        _mm256_storeu_pd(p0, r0);
        _mm256_storeu_pd(p1, r1);
      }
    }
  } else {
    // Target is the least significant bit: each register holds one (a0, a1)
    // pair.  new = a0*[m00,m10] + a1*[m01,m11].
    const __m256d col0 = pack2(m[0], m[2]);
    const __m256d col1 = pack2(m[1], m[3]);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(p + 2 * i);
      const __m256d r = _mm256_add_pd(cmul(dup_lo(v), col0), cmul(dup_hi(v), col1));
      _mm256_storeu_pd(p + 2 * i, r);
    }
  }
}

void a_apply_1q_diag(cplx* a, int n_qubits, int target, cplx d0, cplx d1) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  if (s >= 2) {
    for (std::size_t base = 0; base < dim; base += 2 * s) {
      for (std::size_t off = 0; off < s; off += 2) {
        double* p0 = p + 2 * (base + off);
        double* p1 = p0 + 2 * s;
        _mm256_storeu_pd(p0, cmul_bcast(_mm256_loadu_pd(p0), d0.real(), d0.imag()));
        _mm256_storeu_pd(p1, cmul_bcast(_mm256_loadu_pd(p1), d1.real(), d1.imag()));
      }
    }
  } else {
    const __m256d dv = pack2(d0, d1);
    for (std::size_t i = 0; i < dim; i += 2) {
      _mm256_storeu_pd(p + 2 * i, cmul(_mm256_loadu_pd(p + 2 * i), dv));
    }
  }
}

void a_apply_2q(cplx* a, int n_qubits, int q0, int q1, const cplx* m) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  const std::size_t hi = s0 > s1 ? s0 : s1;
  const std::size_t lo = s0 > s1 ? s1 : s0;
  if (lo >= 2) {
    for (std::size_t bh = 0; bh < dim; bh += 2 * hi) {
      for (std::size_t bl = bh; bl < bh + hi; bl += 2 * lo) {
        for (std::size_t off = 0; off < lo; off += 2) {
          const std::size_t i = bl + off;
          double* p00 = p + 2 * i;
          double* p01 = p + 2 * (i + s1);
          double* p10 = p + 2 * (i + s0);
          double* p11 = p + 2 * (i + s0 + s1);
          const __m256d v00 = _mm256_loadu_pd(p00);
          const __m256d v01 = _mm256_loadu_pd(p01);
          const __m256d v10 = _mm256_loadu_pd(p10);
          const __m256d v11 = _mm256_loadu_pd(p11);
          for (int r = 0; r < 4; ++r) {
            const cplx* row = m + 4 * r;
            __m256d acc = cmul_bcast(v00, row[0].real(), row[0].imag());
            acc = _mm256_add_pd(acc, cmul_bcast(v01, row[1].real(), row[1].imag()));
            acc = _mm256_add_pd(acc, cmul_bcast(v10, row[2].real(), row[2].imag()));
            acc = _mm256_add_pd(acc, cmul_bcast(v11, row[3].real(), row[3].imag()));
            double* dst = (r == 0) ? p00 : (r == 1) ? p01 : (r == 2) ? p10 : p11;
            _mm256_storeu_pd(dst, acc);
          }
        }
      }
    }
  } else {
    // Lowest stride is 1: the s1==1 (or s0==1) pair sits inside one register.
    // Registers va = (x00, x01), vb = (x10, x11) where the "01" bit is the
    // stride-1 target; columns are packed per output register.
    const bool q1_low = (s1 == 1);
    // Index of matrix column for each of (x00, x01, x10, x11) given which
    // target owns the low bit.
    const int c00 = 0, c01 = q1_low ? 1 : 2, c10 = q1_low ? 2 : 1, c11 = 3;
    const std::size_t sHigh = q1_low ? s0 : s1;
    const int r0 = 0, r1 = q1_low ? 1 : 2, r2 = q1_low ? 2 : 1, r3 = 3;
    const __m256d colA0 = pack2(m[4 * r0 + c00], m[4 * r1 + c00]);
    const __m256d colA1 = pack2(m[4 * r0 + c01], m[4 * r1 + c01]);
    const __m256d colA2 = pack2(m[4 * r0 + c10], m[4 * r1 + c10]);
    const __m256d colA3 = pack2(m[4 * r0 + c11], m[4 * r1 + c11]);
    const __m256d colB0 = pack2(m[4 * r2 + c00], m[4 * r3 + c00]);
    const __m256d colB1 = pack2(m[4 * r2 + c01], m[4 * r3 + c01]);
    const __m256d colB2 = pack2(m[4 * r2 + c10], m[4 * r3 + c10]);
    const __m256d colB3 = pack2(m[4 * r2 + c11], m[4 * r3 + c11]);
    for (std::size_t bh = 0; bh < dim; bh += 2 * sHigh) {
      for (std::size_t i = bh; i < bh + sHigh; i += 2) {
        double* pa = p + 2 * i;
        double* pb = p + 2 * (i + sHigh);
        const __m256d va = _mm256_loadu_pd(pa);
        const __m256d vb = _mm256_loadu_pd(pb);
        const __m256d x00 = dup_lo(va), x01 = dup_hi(va);
        const __m256d x10 = dup_lo(vb), x11 = dup_hi(vb);
        __m256d ra = _mm256_add_pd(cmul(x00, colA0), cmul(x01, colA1));
        ra = _mm256_add_pd(ra, _mm256_add_pd(cmul(x10, colA2), cmul(x11, colA3)));
        __m256d rb = _mm256_add_pd(cmul(x00, colB0), cmul(x01, colB1));
        rb = _mm256_add_pd(rb, _mm256_add_pd(cmul(x10, colB2), cmul(x11, colB3)));
        _mm256_storeu_pd(pa, ra);
        _mm256_storeu_pd(pb, rb);
      }
    }
  }
}

void a_apply_2q_diag(cplx* a, int n_qubits, int q0, int q1, const cplx* d) {
  double* p = reinterpret_cast<double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s0 = std::size_t{1} << (n_qubits - 1 - q0);
  const std::size_t s1 = std::size_t{1} << (n_qubits - 1 - q1);
  const std::size_t lo = s0 < s1 ? s0 : s1;
  if (lo >= 2) {
    // Neither target owns the lowest bit: both lanes of a register share one
    // diagonal entry.
    for (std::size_t i = 0; i < dim; i += 2) {
      const int idx = ((i & s0) ? 2 : 0) | ((i & s1) ? 1 : 0);
      double* pi = p + 2 * i;
      _mm256_storeu_pd(pi, cmul_bcast(_mm256_loadu_pd(pi), d[idx].real(), d[idx].imag()));
    }
  } else {
    // One target has stride 1: its bit alternates inside each register.
    const int low_sel = (s1 == 1) ? 1 : 2;   // matrix-index bit of the stride-1 target
    const int high_sel = 3 - low_sel;        // bit of the other target
    const std::size_t sh = (s1 == 1) ? s0 : s1;
    const __m256d dv0 = pack2(d[0], d[low_sel]);
    const __m256d dv1 = pack2(d[high_sel], d[high_sel | low_sel]);
    for (std::size_t i = 0; i < dim; i += 2) {
      double* pi = p + 2 * i;
      const __m256d dv = (i & sh) ? dv1 : dv0;
      _mm256_storeu_pd(pi, cmul(_mm256_loadu_pd(pi), dv));
    }
  }
}

double a_norm_sq(const cplx* a, std::size_t n) {
  const double* p = reinterpret_cast<const double*>(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  double out = buf[0] + buf[1] + buf[2] + buf[3];
  for (; i < n; ++i) out += std::norm(a[i]);
  return out;
}

double a_expect_z(const cplx* a, int n_qubits, int target) {
  const double* p = reinterpret_cast<const double*>(a);
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t s = std::size_t{1} << (n_qubits - 1 - target);
  __m256d acc = _mm256_setzero_pd();
  if (s >= 2) {
    for (std::size_t base = 0; base < dim; base += 2 * s) {
      for (std::size_t off = 0; off < s; off += 2) {
        const __m256d v0 = _mm256_loadu_pd(p + 2 * (base + off));
        const __m256d v1 = _mm256_loadu_pd(p + 2 * (base + off + s));
        acc = _mm256_fmadd_pd(v0, v0, acc);
        acc = _mm256_fnmadd_pd(v1, v1, acc);
      }
    }
  } else {
    const __m256d sign = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
    for (std::size_t i = 0; i < dim; i += 2) {
      const __m256d v = _mm256_loadu_pd(p + 2 * i);
      acc = _mm256_fmadd_pd(_mm256_mul_pd(v, sign), v, acc);
    }
  }
  alignas(32) double buf[4];
  _mm256_store_pd(buf, acc);
  return buf[0] + buf[1] + buf[2] + buf[3];
}

}  // namespace

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelSet& avx2_kernels() {
  static const KernelSet ks{"avx2",       a_apply_1q, a_apply_1q_diag,
                            a_apply_2q,   a_apply_2q_diag,
                            a_norm_sq,    a_expect_z};
  return ks;
}

#else  // !PFZ_X86

bool avx2_available() { return false; }
const KernelSet& avx2_kernels() { return scalar_kernels(); }

#endif

}  // namespace pfz::simd
