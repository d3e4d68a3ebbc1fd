#pragma once

#include <optional>

#include "motzeta/witt.hpp"

namespace motzeta {

// Finds the minimal-degree rational Witt vector whose ghost sequence matches
// every provided count; minimality is total degree first, then denominator
// degree. A candidate with d = max(deg num, deg den) is only accepted when
// 2(d+1) <= counts.order(), so the data overdetermines the fit; returns
// nullopt (no rational fit) otherwise. Requires at least 2 counts.
std::optional<WittVector> reconstruct_zeta(const GhostSequence& counts);

}  // namespace motzeta
