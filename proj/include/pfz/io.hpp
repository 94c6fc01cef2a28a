// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pfz/exact.hpp"
#include "pfz/fisher.hpp"
#include "pfz/leeyang.hpp"
#include "pfz/types.hpp"

namespace pfz {

// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

// `# key: value` comment lines recognized by the readers below.
void write_metadata(std::ostream& os,
                    const std::vector<std::pair<std::string, std::string>>& kv);

// CSV with metadata comments for plane, provenance and convention, then a
// `re,im` header and one zero per line.
void write_zero_set(std::ostream& os, const ZeroSet& zs);
ZeroSet read_zero_set(std::istream& is);

void write_trace(std::ostream& os, const CoherenceTrace& trace);
void write_fisher_trace(std::ostream& os, const FisherTrace& trace);

// Long-form CSV: x,y,re,im,abs per grid point.
void write_grid(std::ostream& os, const CoherenceGrid& grid);

}  // namespace pfz
