#pragma once

#include <iosfwd>
#include <string>

#include "rom_mis/geometry.hpp"

namespace rommis {

/// Line-oriented text format.
///
///   line 1:  d n [K]
///   then n object lines:
///     boxes:         lo_1 hi_1 ... lo_d hi_d            (2d columns)
///     sigma objects: lo_1 hi_1 ... lo_d hi_d sigma inlo_1 inhi_1 ... inlo_d inhi_d
///
/// Every rational is written as `p` or `p/q` in decimal; the round trip is
/// bit-exact. The two object kinds are told apart by column count.
void write_instance(std::ostream& os, const Instance& inst);
Instance read_instance(std::istream& is);

void save_instance(const std::string& path, const Instance& inst);
Instance load_instance(const std::string& path);

} // namespace rommis
