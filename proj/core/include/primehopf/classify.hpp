#pragma once

// The classification oracle: which families realize a given (io, im,
// primitive / group-like) triple.

#include "primehopf/presentation.hpp"

#include <string>
#include <vector>

namespace primehopf {

enum class Dichotomy { Primitive, Grouplike, Any };

std::string dichotomy_name(Dichotomy d);
Dichotomy parse_dichotomy(std::string_view text);

struct ClassificationQuery {
  long io = 1;
  long im = 1;
  Dichotomy dichotomy = Dichotomy::Any;
};

struct FamilyTemplate {
  Family family = Family::PolynomialLine;
  std::string name;        // e.g. "H(n,t,xi), gcd(t,n) = 1"
  std::string dichotomy;   // "primitive" or "grouplike"
  /// Concrete members used for round-trip checks (xi = z(n), small w).
  std::vector<FamilySpec> instances;
};

struct Classification {
  ClassificationQuery query;
  /// "classified" or "open" (1 < im < io, outside the known range).
  std::string status;
  std::vector<FamilyTemplate> families;
  std::string note;
};

/// Throws std::invalid_argument when io < 1, im < 1 or im does not divide io.
Classification classify(const ClassificationQuery& q, int max_w = 8);

}  // namespace primehopf
