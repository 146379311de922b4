// Copyright 2026 The entevo authors
// SPDX-License-Identifier: Apache-2.0

#ifndef ENTEVO_SERIALIZATION_HPP
#define ENTEVO_SERIALIZATION_HPP

#include <string>

#include "entevo/channels.hpp"
#include "entevo/roof.hpp"

namespace entevo {

// JSON interchange format shared by the library and the CLI. Complex
// entries serialize as two-element arrays [re, im]; matrices as row-major
// nested arrays; objects carry a "kind" discriminator plus explicit "d",
// "f" and "trace_preserving" fields. Parsers validate invariants and throw
// std::invalid_argument on malformed input.

std::string serialize(const PureState& chi, int indent = 2);
std::string serialize(const DensityMatrix& rho, int indent = 2);
std::string serialize(const KrausChannel& ch, int indent = 2);

PureState parse_pure_state(const std::string& json);
DensityMatrix parse_density_matrix(const std::string& json);
KrausChannel parse_kraus_channel(const std::string& json);

/// Accepts either a pure_state (projected) or a density_matrix document.
DensityMatrix parse_state_as_density(const std::string& json);

}  // namespace entevo

#endif  // ENTEVO_SERIALIZATION_HPP
