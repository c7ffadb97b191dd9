#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lfg/group_algo.hpp"

namespace lfg::omni {

using group::Elem;
using group::Hom;
using group::Perm;
using group::PermGroup;
using group::Subgroup;

/// H with an embedding i: F -> H and a surjection Psi: H -> G, Psi o i = psi.
struct LiftWitness
{
  PermGroup H;
  Hom i;
  Hom Psi;
};

/// H = F + G, i(f) = (f, psi(f)), Psi = second projection. Verified before
/// return; throws std::logic_error if verification fails.
LiftWitness lift_hom(const Hom &psi);
bool verify_lift(const LiftWitness &w, const Hom &psi);

/// Single-generator extension problem inside a finite stage Gamma.
struct OmniQuery
{
  PermGroup Gamma;
  PermGroup F; ///< on Gamma's ground set, generated by elements of Gamma
  PermGroup G;
  Hom psi;     ///< F -> G, injective
  Perm g;      ///< G = <psi(F), g>

  /// Throws std::invalid_argument if F is not inside Gamma, psi is not an
  /// injective hom F -> G, or <psi(F), g> != G.
  static OmniQuery make(PermGroup Gamma, std::vector<Perm> f_gens, PermGroup G,
                        std::vector<Perm> psi_images, Perm g);
};

struct OmniWitness
{
  Subgroup H;       ///< in Gamma's enumeration
  PermGroup H_group; ///< generated by F's generators first
  Hom Psi;          ///< H -> G, surjective, agrees with psi on F
};

/// Exhaustive search over H <= Gamma with F <= H and |H| <= bound, in
/// subgroup order, and over homomorphisms H -> G extending psi. nullopt
/// means no witness exists within the bound.
std::optional<OmniWitness> omni_check(const OmniQuery &q, std::size_t bound);
bool verify_omni(const OmniQuery &q, const OmniWitness &w);

struct OmniRow
{
  std::size_t f_order = 0;
  std::size_t g_order = 0;
  std::string psi;         ///< generator images of F as G element indices
  bool witnessed = false;
  std::size_t h_order = 0; ///< 0 when not witnessed
  std::size_t bound = 0;
  std::string note;        ///< F index, G name, "h-coord" marker

  bool operator==(const OmniRow &) const = default;
};

struct OmniReport
{
  std::string gamma;
  std::size_t gamma_order = 0;
  std::size_t max_f = 0, max_g = 0, bound = 0;
  std::vector<OmniRow> rows;

  bool all_witnessed() const;
  bool operator==(const OmniReport &) const = default;
};

struct AuditOptions
{
  std::size_t max_f = 4;
  std::size_t max_g = 10;
  /// Largest H searched; 0 means |Gamma|.
  std::size_t bound = 0;
  /// For a D-stage A + H: degree of A. Rows whose F has trivial A-part are
  /// marked "h-coord".
  std::optional<std::size_t> a_degree;
};

/// Every F <= Gamma with |F| <= max_f, every catalog group G with
/// |G| <= max_g generated by psi(F) and one more element, and every
/// embedding psi: F -> G up to Aut(G).
OmniReport omni_audit(const PermGroup &Gamma, const std::string &gamma_name, const AuditOptions &opts);

void write_report(std::ostream &out, const OmniReport &r);
std::string format_report(const OmniReport &r);
/// Throws ParseError.
OmniReport parse_report(const std::string &text);

} // namespace lfg::omni
