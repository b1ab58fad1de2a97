#pragma once

// Text and JSON renderings of the library's result types.  JSON keys keep
// insertion order.

#include "primehopf/classify.hpp"
#include "primehopf/report.hpp"

#include <string>
#include <vector>

namespace primehopf {

std::string to_json(const Presentation& h);
std::string to_text(const Presentation& h);

std::string to_json(const AxiomReport& r);
std::string to_text(const AxiomReport& r);

std::string to_json(const InvariantReport& r);
std::string to_text(const InvariantReport& r);

std::string to_json(const GrouplikeSearch& g);
std::string to_text(const GrouplikeSearch& g);

std::string to_json(const TwistorAlgebra& T);
std::string to_text(const TwistorAlgebra& T);

std::string to_json(const IsoVerdict& v);
std::string to_text(const IsoVerdict& v);

std::string to_json(const Classification& c);
std::string to_text(const Classification& c);

std::string to_json(const SuiteResult& s);
std::string to_text(const SuiteResult& s);

/// A titled list of elements, e.g. a skew-primitive basis.
std::string elements_json(const std::string& title, const std::vector<Element>& elems);
std::string elements_text(const std::string& title, const std::vector<Element>& elems);

}  // namespace primehopf
