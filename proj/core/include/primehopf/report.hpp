#pragma once

// Invariant reports and the per-presentation verification suite.

#include "primehopf/iso.hpp"
#include "primehopf/twistor.hpp"

#include <string>
#include <vector>

namespace primehopf {

struct InvariantReport {
  std::string family;
  FamilySpec spec;
  std::string label;
  long io = 0;
  long im = 0;
  long pi_degree = 0;
  std::vector<std::string> h_l0_gens, h_r0_gens, h0_gens, jiq_gens;
  std::string dichotomy;
  std::string integral_character;
};

InvariantReport invariant_report(const PresentationPtr& h);

struct SuiteCheck {
  std::string area;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  long window = 0;  // 0: min(default window, 8)
  std::size_t random_count = 30;
  std::uint64_t seed = 20240601;
  bool twistor = true;
};

struct SuiteResult {
  std::string label;
  long window = 0;
  std::vector<SuiteCheck> checks;
  bool all_pass() const;
  std::size_t failures() const;
};

/// Hopf axioms, group-likes, skew-primitives, io / im, gradings, fixed rings,
/// strong grading, J_iq, PI-degree and the twistor for one presentation.
SuiteResult run_suite(const PresentationPtr& h, const SuiteOptions& opt = {});

/// The group-like a used for the reported (a, 1)-skew-primitives and the
/// expected basis of that space.
std::pair<Element, std::vector<Element>> expected_skew_primitives(const PresentationPtr& h);

}  // namespace primehopf
