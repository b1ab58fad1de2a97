#pragma once

// Hopf isomorphism checks: explicit generator maps and the per-family
// invariant criteria.

#include "primehopf/winding.hpp"

#include <optional>
#include <string>

namespace primehopf {

enum class IsoKind { HopfIsomorphic, NotIsomorphic, Undecided };

std::string iso_kind_name(IsoKind k);

struct IsoVerdict {
  IsoKind verdict = IsoKind::Undecided;
  std::optional<AlgebraMap> witness;
  std::optional<AlgebraMap> inverse;
  std::string reason;
};

/// Checks that phi respects the relations, Delta, epsilon and S on atoms.
/// With a candidate inverse psi, bijectivity is certified by psi o phi = id
/// and phi o psi = id; otherwise the verdict stays undecided.
IsoVerdict hopf_iso_check(const AlgebraMap& phi, const std::optional<AlgebraMap>& psi);

/// Decides isomorphism between members of the families from their
/// parameters, attaching a checked witness map when isomorphic.
IsoVerdict family_iso(const PresentationPtr& a, const PresentationPtr& b);

/// The parameter criterion alone (no witness construction).
bool family_iso_criterion(const PresentationPtr& a, const PresentationPtr& b);

}  // namespace primehopf
