// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pfz {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using VecD = Eigen::VectorXd;

// Complex magnetic field h = h_r + i h_i, in energy units.
struct ComplexField {
  double h_r = 0.0;
  double h_i = 0.0;
  cplx value() const { return {h_r, h_i}; }
};

// Which complex plane a set of partition-function zeros lives in.
enum class Plane { FieldH, FugacityZ, InverseTemperature };

// How the zeros were obtained.
enum class Provenance { Analytic, PolynomialOracle, CircuitSweep };

// Fugacity convention: the literature uses both z = exp(+2 beta h) and
// z = exp(-2 beta h).  A ZeroSet records which convention its FugacityZ
// values use instead of silently normalizing; for field-symmetric models
// the two sets coincide.  Ignored for the other planes.
enum class FugacityConvention { ZPlus2BetaH, ZMinus2BetaH };

struct ZeroSet {
  std::vector<cplx> zeros;
  Plane plane = Plane::FugacityZ;
  Provenance provenance = Provenance::Analytic;
  FugacityConvention convention = FugacityConvention::ZPlus2BetaH;
};

std::string to_string(Plane p);
std::string to_string(Provenance p);
std::string to_string(FugacityConvention c);
Plane plane_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);
FugacityConvention convention_from_string(const std::string& s);

}  // namespace pfz
