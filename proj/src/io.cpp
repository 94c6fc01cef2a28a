// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#include "pfz/io.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "pfz/errors.hpp"
#include "pfz/util.hpp"

namespace pfz {

std::string to_string(Plane p) {
  switch (p) {
    case Plane::FieldH:
      return "field_h";
    case Plane::FugacityZ:
      return "fugacity_z";
    case Plane::InverseTemperature:
      return "inverse_temperature";
  }
  return "unknown";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Analytic:
      return "analytic";
    case Provenance::PolynomialOracle:
      return "polynomial_oracle";
    case Provenance::CircuitSweep:
      return "circuit_sweep";
  }
  return "unknown";
}

std::string to_string(FugacityConvention c) {
  return c == FugacityConvention::ZPlus2BetaH ? "z_plus_2bh" : "z_minus_2bh";
}

Plane plane_from_string(const std::string& s) {
  if (s == "field_h") return Plane::FieldH;
  if (s == "fugacity_z") return Plane::FugacityZ;
  if (s == "inverse_temperature") return Plane::InverseTemperature;
  throw ConfigError("unknown plane: " + s);
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "analytic") return Provenance::Analytic;
  if (s == "polynomial_oracle") return Provenance::PolynomialOracle;
  if (s == "circuit_sweep") return Provenance::CircuitSweep;
  throw ConfigError("unknown provenance: " + s);
}

FugacityConvention convention_from_string(const std::string& s) {
  if (s == "z_plus_2bh") return FugacityConvention::ZPlus2BetaH;
  if (s == "z_minus_2bh") return FugacityConvention::ZMinus2BetaH;
  throw ConfigError("unknown fugacity convention: " + s);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("PFZ_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                  int n_threads) {
  if (n <= 0) return;
  const int workers = std::min<std::int64_t>(resolve_threads(n_threads), n);
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto body = [&]() {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_metadata(std::ostream& os,
                    const std::vector<std::pair<std::string, std::string>>& kv) {
  for (const auto& [key, value] : kv) os << "# " << key << ": " << value << "\n";
}

void write_zero_set(std::ostream& os, const ZeroSet& zs) {
  std::vector<std::pair<std::string, std::string>> meta = {
      {"plane", to_string(zs.plane)},
      {"provenance", to_string(zs.provenance)},
  };
  if (zs.plane == Plane::FugacityZ) meta.emplace_back("convention", to_string(zs.convention));
  write_metadata(os, meta);
  os << "re,im\n";
  for (const cplx& z : zs.zeros) {
    os << format_double(z.real()) << "," << format_double(z.imag()) << "\n";
  }
}

namespace {

std::string trimmed(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ZeroSet read_zero_set(std::istream& is) {
  ZeroSet zs;
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    const std::string t = trimmed(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const std::size_t colon = t.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = trimmed(t.substr(1, colon - 1));
      const std::string value = trimmed(t.substr(colon + 1));
      if (key == "plane") {
        zs.plane = plane_from_string(value);
      } else if (key == "provenance") {
        zs.provenance = provenance_from_string(value);
      } else if (key == "convention") {
        zs.convention = convention_from_string(value);
      }
      continue;
    }
    if (!header_seen && t.find("re") == 0) {
      header_seen = true;
      continue;
    }
    const std::size_t comma = t.find(',');
    if (comma == std::string::npos) {
      throw ConfigError("read_zero_set: expected `re,im` row, got: " + t);
    }
    try {
      const double re = std::stod(t.substr(0, comma));
      const double im = std::stod(t.substr(comma + 1));
      zs.zeros.emplace_back(re, im);
    } catch (const std::exception&) {
      throw ConfigError("read_zero_set: malformed row: " + t);
    }
  }
  return zs;
}

void write_trace(std::ostream& os, const CoherenceTrace& trace) {
  write_metadata(os, {{"n_sites", std::to_string(trace.n_sites)},
                      {"beta", format_double(trace.beta)},
                      {"h_r", format_double(trace.h_r)}});
  os << "theta,re,im,stderr_re,stderr_im,n_re,n_im,retention\n";
  for (const CoherencePoint& p : trace.points) {
    os << format_double(p.theta) << "," << format_double(p.L.real()) << ","
       << format_double(p.L.imag()) << "," << format_double(p.stderr_re) << ","
       << format_double(p.stderr_im) << "," << p.n_re << "," << p.n_im << ","
       << format_double(p.retention) << "\n";
  }
}

void write_fisher_trace(std::ostream& os, const FisherTrace& trace) {
  write_metadata(os, {{"n_sites", std::to_string(trace.n_sites)},
                      {"beta_r", format_double(trace.beta_r)}});
  os << "beta_i,re,im\n";
  for (const FisherPoint& p : trace.points) {
    os << format_double(p.beta_i) << "," << format_double(p.L.real()) << ","
       << format_double(p.L.imag()) << "\n";
  }
}

void write_grid(std::ostream& os, const CoherenceGrid& grid) {
  write_metadata(os, {{"plane", to_string(grid.plane)},
                      {"nx", std::to_string(grid.xs.size())},
                      {"ny", std::to_string(grid.ys.size())}});
  os << "x,y,re,im,abs\n";
  for (std::size_t iy = 0; iy < grid.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < grid.xs.size(); ++ix) {
      const cplx v = grid.L(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix));
      os << format_double(grid.xs[ix]) << "," << format_double(grid.ys[iy]) << ","
         << format_double(v.real()) << "," << format_double(v.imag()) << ","
         << format_double(std::abs(v)) << "\n";
    }
  }
}

}  // namespace pfz
