#pragma once

// σ⁻¹N = σ⁻¹R ⊗_R N ≅ (L; L) for a triple N = (N_A, N_B, f), where L is the
// left T-module
//   coker( T⊗_A M⊗_B N_B  --(1⊗f ; g⊗1)-->  T⊗_A N_A ⊕ T⊗_B N_B ),
// g(t ⊗ m) = -t·x_m. Supported when T is Z (regular over Z), Z[1/k]
// (scaled) or Q[x] (double over Q).

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "trilocal/euclidean.hpp"
#include "trilocal/report.hpp"
#include "trilocal/triangular.hpp"

namespace trilocal {

/// Relation rows over T; generators are the N_A generators followed by the N_B generators.
struct PresentationMatrix {
  using Storage = std::variant<Matrix<mpz_class>, Matrix<KadicFraction>, Matrix<Polynomial>>;

  std::string ring;  ///< "Z", "Z[1/k]" or "Q[x]"
  std::size_t gens = 0;
  Storage rels;
  mpz_class kadic_base = 0;  ///< k when the ring is Z[1/k]

  std::size_t relation_count() const;
  std::vector<std::vector<std::string>> rows() const;
};

struct LInvariants {
  std::vector<std::string> torsion;  ///< non-unit invariant factors, divisibility chain
  std::size_t free_rank = 0;
};

/// Sign of g. `standard` is g(t⊗m) = -t x_m; `flipped` is the negative control.
enum class GSign { standard, flipped };

/// Throws UnsupportedError for families without a Euclidean/PID T.
PresentationMatrix build_L(const TripleModule& n, GSign sign = GSign::standard);
LInvariants l_invariants(const PresentationMatrix& p);

/// Checks the maps α: L -> (T T)⊗_R N and β back: both well defined, and
/// βα, αβ identities on `samples` random elements, all modulo relations.
/// (T T)⊗_R N is presented independently from a presentation of N as a
/// left R-module, base changed along rho_matrix.
Report verify_alpha_beta(const TripleModule& n, const PresentationMatrix& L, std::size_t samples = 100,
                         std::uint64_t seed = kDefaultSeed);

struct LocalizedModule {
  PresentationMatrix L;
  LInvariants invariants;
  /// α on generators: row i is the image of L-generator i among the
  /// 2(n_A+n_B) generators (e_c ⊗ g_l, index 2l + c) of (T T)⊗_R N.
  IntMatrix alpha;
  /// β on generators: row 2l + c is the image in L.
  IntMatrix beta;
  Report alpha_beta;
};

LocalizedModule localize_module(const TripleModule& n, std::size_t samples = 100, std::uint64_t seed = kDefaultSeed);

/// Name of T for the family ("Z", "Z[1/k]", "Q[x]"), or nullopt when unsupported.
std::optional<std::string> module_localization_ring(const Family& family);

}  // namespace trilocal
