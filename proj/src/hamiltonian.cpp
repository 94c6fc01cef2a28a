// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors

#include "pfz/hamiltonian.hpp"

#include <bit>
#include <istream>
#include <sstream>

#include "pfz/errors.hpp"

namespace pfz {

namespace {

void check_sites(int n, int max_sites) {
  if (n < 1) throw DimensionOverflow("n_sites must be >= 1");
  if (n > max_sites) {
    throw DimensionOverflow("n_sites " + std::to_string(n) + " exceeds dense cap " +
                            std::to_string(max_sites));
  }
}

inline int bit_of(std::size_t state, int q, int n) {
  return static_cast<int>((state >> (n - 1 - q)) & 1u);
}

// sz eigenvalue of qubit q in basis state `state`; bit 0 = |0> = +1.
inline double sz_of(std::size_t state, int q, int n) {
  return bit_of(state, q, n) ? -1.0 : 1.0;
}

// Adds J (sx sx + sy sy) + J_z (sz sz) on bond (q_a, q_b).
// In the product basis (sx sx + sy sy) connects |01> <-> |10> with weight 2.
void add_bond(MatC& H, int q_a, int q_b, double j, double j_z, int n) {
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t mask = (std::size_t{1} << (n - 1 - q_a)) | (std::size_t{1} << (n - 1 - q_b));
  for (std::size_t s = 0; s < dim; ++s) {
    const int ba = bit_of(s, q_a, n), bb = bit_of(s, q_b, n);
    H(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) +=
        j_z * (ba == bb ? 1.0 : -1.0);
    if (ba != bb && j != 0.0) {
      const std::size_t t = s ^ mask;
      H(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) += 2.0 * j;
    }
  }
}

}  // namespace

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::Periodic: return "periodic";
    case Boundary::Open: return "open";
    case Boundary::JwBoundary: return "jw";
  }
  return "?";
}

Boundary boundary_from_string(const std::string& s) {
  if (s == "periodic") return Boundary::Periodic;
  if (s == "open") return Boundary::Open;
  if (s == "jw" || s == "jwboundary" || s == "jw_boundary") return Boundary::JwBoundary;
  throw ConfigError("unknown boundary: " + s);
}

MatC build_magnetization(int n_sites, int max_sites) {
  check_sites(n_sites, max_sites);
  const std::size_t dim = std::size_t{1} << n_sites;
  MatC m = MatC::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    const int down = std::popcount(s);
    m(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) =
        static_cast<double>(n_sites - 2 * down);
  }
  return m;
}

MatC build_xxz(const SpinChainSpec& spec, int max_sites) {
  if (spec.boundary == Boundary::JwBoundary) {
    throw ConfigError("build_xxz requires Periodic or Open boundary");
  }
  const int n = spec.n_sites;
  check_sites(n, max_sites);
  const std::size_t dim = std::size_t{1} << n;
  MatC H = MatC::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (int i = 0; i + 1 < n; ++i) add_bond(H, i, i + 1, spec.coupling_xy, spec.coupling_z, n);
  // The wrap-around bond exists only for rings of at least 3 sites; at n = 2
  // it would duplicate the (0,1) bond.
  if (spec.boundary == Boundary::Periodic && n >= 3) {
    add_bond(H, n - 1, 0, spec.coupling_xy, spec.coupling_z, n);
  }
  if (spec.field_real != 0.0) {
    for (std::size_t s = 0; s < dim; ++s) {
      double m = 0.0;
      for (int q = 0; q < n; ++q) m += sz_of(s, q, n);
      H(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) += spec.field_real * m;
    }
  }
  return H;
}

MatC build_xy_jw_boundary(const SpinChainSpec& spec, int max_sites) {
  if (spec.boundary != Boundary::JwBoundary) {
    throw ConfigError("build_xy_jw_boundary requires JwBoundary");
  }
  if (spec.coupling_z != 0.0) throw ConfigError("JW boundary chain requires coupling_z = 0");
  const int n = spec.n_sites;
  if (n < 2) throw DimensionOverflow("JW boundary chain requires n_sites >= 2");
  check_sites(n, max_sites);
  const double j = spec.coupling_xy;
  const std::size_t dim = std::size_t{1} << n;
  MatC H = MatC::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (int i = 0; i + 1 < n; ++i) add_bond(H, i, i + 1, j, 0.0, n);

  // Boundary term 2J (s+_0 sz_1 ... sz_{n-2} s-_{n-1} + h.c.).
  // s+ = |0><1| raises the spin (clears the bit); the string contributes the
  // product of sz over the interior sites.
  const std::size_t bit0 = std::size_t{1} << (n - 1);
  const std::size_t bitL = 1;
  for (std::size_t s = 0; s < dim; ++s) {
    if ((s & bit0) && !(s & bitL)) {  // site 0 down, site n-1 up
      double string = 1.0;
      for (int q = 1; q < n - 1; ++q) string *= sz_of(s, q, n);
      const std::size_t t = (s ^ bit0) ^ bitL;
      H(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(s)) += 2.0 * j * string;
      H(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) += 2.0 * j * string;
    }
  }
  if (spec.field_real != 0.0) {
    for (std::size_t s = 0; s < dim; ++s) {
      double m = 0.0;
      for (int q = 0; q < n; ++q) m += sz_of(s, q, n);
      H(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) += spec.field_real * m;
    }
  }
  return H;
}

MatC build_ising_ring(int n_sites, double j_z, int max_sites) {
  check_sites(n_sites, max_sites);
  const int n = n_sites;
  const std::size_t dim = std::size_t{1} << n;
  MatC H = MatC::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t s = 0; s < dim; ++s) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      e += j_z * sz_of(s, i, n) * sz_of(s, (i + 1) % n, n);
    }
    H(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = e;
  }
  return H;
}

SpinChainSpec spec_from_config(std::istream& in) {
  SpinChainSpec spec;
  std::string line;
  bool saw_any = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) return std::string{};
      const auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) continue;
    saw_any = true;
    try {
      if (key == "n_sites") spec.n_sites = std::stoi(val);
      else if (key == "j") spec.coupling_xy = std::stod(val);
      else if (key == "jz") spec.coupling_z = std::stod(val);
      else if (key == "hr") spec.field_real = std::stod(val);
      else if (key == "boundary") spec.boundary = boundary_from_string(val);
      else throw ConfigError("unknown spin-chain config key: " + key);
    } catch (const std::invalid_argument&) {
      throw ConfigError("bad value for key " + key + ": " + val);
    } catch (const std::out_of_range&) {
      throw ConfigError("out-of-range value for key " + key + ": " + val);
    }
  }
  if (!saw_any) throw ConfigError("empty spin-chain config");
  if (spec.n_sites < 1) throw ConfigError("n_sites must be >= 1");
  return spec;
}

SpinChainSpec spec_from_config_string(const std::string& text) {
  std::istringstream in(text);
  return spec_from_config(in);
}

std::string spec_to_config(const SpinChainSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  out << "n_sites = " << spec.n_sites << "\n"
      << "j = " << spec.coupling_xy << "\n"
      << "jz = " << spec.coupling_z << "\n"
      << "hr = " << spec.field_real << "\n"
      << "boundary = " << to_string(spec.boundary) << "\n";
  return out.str();
}

}  // namespace pfz
