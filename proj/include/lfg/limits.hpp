#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfg/group_algo.hpp"
#include "lfg/lazy_stage.hpp"
#include "lfg/perm_group.hpp"

namespace lfg::limits {

using group::Hom;
using group::Perm;
using group::PermGroup;

/// Finite truncation G_0 -> G_1 -> ... -> G_d of a direct system with
/// injective connecting maps.
class DirectSystem
{
public:
  /// Throws std::invalid_argument unless maps[i] goes from stages[i] to
  /// stages[i+1] and is injective.
  static DirectSystem make(std::vector<PermGroup> stages, std::vector<Hom> maps);

  std::size_t depth() const { return stages_.size() - 1; }
  const PermGroup &stage(std::size_t i) const { return stages_.at(i); }
  const Hom &map(std::size_t i) const { return maps_.at(i); }
  const std::vector<PermGroup> &stages() const { return stages_; }

  /// Image of x in G_to along the composed maps; from <= to.
  Perm push(const Perm &x, std::size_t from, std::size_t to) const;

private:
  std::vector<PermGroup> stages_;
  std::vector<Hom> maps_;
};

/// Stage-tagged representative of an element of the limit.
struct LimitElement
{
  std::size_t stage = 0;
  Perm value;
};

/// Throws std::out_of_range for a stage beyond the system's depth and
/// std::invalid_argument if the value is not in its stage.
LimitElement limit_element(const DirectSystem &sys, std::size_t stage, Perm value);
LimitElement limit_identity(const DirectSystem &sys);
bool limit_eq(const LimitElement &x, const LimitElement &y, const DirectSystem &sys);
LimitElement limit_multiply(const LimitElement &x, const LimitElement &y, const DirectSystem &sys);

// ---------------------------------------------------------------------------
// D(A, H, f)

/// A, simple non-abelian H_0..H_d and injective f_i : A + H_i -> H_{i+1}.
/// Maps out of stages whose A + H_i is too large to enumerate are held
/// lazily in `lazy`.
struct DTower
{
  PermGroup A;
  std::vector<PermGroup> H;
  std::vector<Hom> f;
  std::optional<LazyStage> lazy;

  std::size_t depth() const { return f.size() + (lazy ? 1 : 0); }
};

/// H_{i+1} is the alternating group on |A + H_i| + 2 points and
/// f_i = cayley_embedding_even(A + H_i). Depth 2 is supported with a lazy
/// top stage; larger depths are rejected. Throws BudgetError when an
/// explicit ground set exceeds `point_budget`.
DTower make_cayley_tower(const PermGroup &A, const PermGroup &H0, std::size_t depth,
                         std::size_t point_budget = Budgets{}.points);

/// The system G_i = A + H_i with phi_i(s, t) = (s, f_i(s, t)), over the
/// explicitly represented stages.
struct DSystem
{
  DirectSystem system;
  PermGroup A;
  std::vector<PermGroup> H;
};

DSystem build_D(const DTower &tower);

/// First coordinate of the stage value.
Perm project_pi(const LimitElement &x, const DSystem &D);
bool s_membership(const LimitElement &x, const DSystem &D);

/// The set {e_A} x H_i as element indices of G_i, enumerated.
std::vector<group::Elem> kernel_of_pi(const DSystem &D, std::size_t stage);

struct QuotientReport
{
  std::size_t group_order = 0;
  std::size_t kernel_order = 0;
  PermGroup quotient;            ///< action of G_i on the cosets of ker(pi)
  std::optional<Hom> iso_to_A;   ///< brute-verified
};

QuotientReport quotient_is_A(const DSystem &D, std::size_t stage);

enum class Absorption { Contains, DoesNotContain, DeferredToNextStage, InconclusiveAtBoundary };

std::string to_string(Absorption a);

struct AbsorptionReport
{
  Absorption status = Absorption::DoesNotContain;
  std::size_t closure_order = 0;
  bool h_coordinate_trivial = false;
  /// For deferred reports: the image one stage up has nontrivial H-part.
  bool next_stage_h_nontrivial = false;
};

/// Normal closure of g in G_i checked for containing {e_A} x H_i. Throws
/// std::invalid_argument for the identity.
AbsorptionReport check_normal_absorption(const DSystem &D, std::size_t stage, const Perm &g);

} // namespace lfg::limits
