#pragma once

// Seeded property checks of T(M,p) shared by the command line tool.

#include <cstdint>

#include "trilocal/report.hpp"
#include "trilocal/t_ring.hpp"

namespace trilocal {

/// Relations (+), (a), (b), (id) on random m, m', a, b; ρ_A, ρ_B unital
/// morphisms; ρ_M(a m b) = ρ_A(a) ρ_M(m) ρ_B(b); normal forms reparse.
Report verify_presentation(const FamilyPtr& family, std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

/// family_iso is additive, multiplicative and unital on random pairs, and
/// oracle equality agrees with t_eq (half of the pairs are equal by construction).
Report verify_oracle(const FamilyPtr& family, std::uint64_t seed = kDefaultSeed, std::size_t samples = 1000);

}  // namespace trilocal
