#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylinv/registry.hpp"

namespace weylinv {

/// Integer coefficients indexed by cohomological degree.
struct GradedSeries {
  std::vector<std::int64_t> coeffs;

  std::int64_t at(int degree) const {
    return degree >= 0 && degree < static_cast<int>(coeffs.size()) ? coeffs[degree] : 0;
  }
  bool operator==(const GradedSeries&) const = default;
};

/// Integer univariate polynomial in t as degree -> coefficient pairs.
using IntPoly = std::vector<std::pair<int, std::int64_t>>;
IntPoly parse_int_poly(const std::string& text);

/// numerator / prod (1 - t^d), expanded through max_degree.
GradedSeries expand_rational(const IntPoly& numerator, const std::vector<int>& denominators,
                             int max_degree);

/// Named closed forms of poincare.txt: "generators" is the numerator-over-
/// six-factors form, "module" the two-part form summed over module pieces.
GradedSeries closed_form_series(const std::string& form, int max_degree);
std::vector<std::string> closed_form_names();

/// A free module over a polynomial ring, tensored with a common polynomial
/// factor.  Generators are products of named elements written "a*b".
struct ModuleFamily {
  std::vector<std::string> generators;
  std::vector<std::string> coefficient_ring;
};

struct Presentation {
  std::string name;
  std::vector<ModuleFamily> families;
  std::vector<std::string> common;
};

/// y22-family free over Z3[x4,x8,y10], y26-family over Z3[x8,y10].
Presentation y22_family_presentation();
/// The same with the y22 and y26 families exchanged.
Presentation y26_family_presentation();

int generator_degree(const std::string& product, const Registry& reg);  // cohomological
Poly generator_h_value(const std::string& product, const Registry& reg);
GradedSeries presentation_series(const Presentation& p, const Registry& reg, int max_degree);

/// "0 1 2 3 0 0" style weights for t x4 x8 y10 h12 h16; "inf" is infinite.
WeightAssignment parse_weights(const std::string& text);
const WeightAssignment& weight_w();
const WeightAssignment& weight_v();

struct GrImageCheck {
  std::string id;
  std::string cite;
  std::string element;
  std::string weights;
  std::string image_text;
  Poly expected;  // image with h18 replaced by its own leading form
  Poly actual;    // leading form of the element
  bool ok() const { return expected == actual; }
};
std::vector<GrImageCheck> gr_image_checks(const Registry& reg);

struct SupportCheck {
  std::vector<std::pair<std::string, Poly>> leading_forms;
  std::vector<std::pair<std::string, std::string>> collisions;  // equal supports
  bool ok() const { return collisions.empty(); }
};
SupportCheck module_generator_supports(const Presentation& p, const WeightAssignment& w,
                                       const Registry& reg);

}  // namespace weylinv
