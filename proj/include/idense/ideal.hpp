/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <string>

#include "idense/index_set.hpp"

namespace idense {

// The two shipped admissible ideals on the naturals: the finite sets, and
// the sets of natural density zero.
enum class Ideal { Fin, NatDensityZero };

inline std::string to_string(Ideal i) {
  return i == Ideal::Fin ? "fin" : "natdens";
}

bool in_ideal(Ideal i, const IndexSet& k);

// F(I) membership: the complement lies in the ideal.
bool in_filter(Ideal i, const IndexSet& k);

}  // namespace idense
