#pragma once

// Bounded coefficient functions V(x), Q(x): construction, the nonnegative
// shift V - min V, the superlevel-set hypothesis 0 < meas{Q > lambda0} < inf,
// and pointwise clipping min{Q, lambda0}.

#include <array>
#include <string>
#include <vector>

#include "nlslab/grid.hpp"

namespace nlslab {

enum class PotentialKind { Zero, Constant, GaussianWell, Plateau };

struct PotentialTerm {
  PotentialKind kind = PotentialKind::Zero;
  double value = 0.0;                    // constant value / well depth / plateau height
  double width = 1.0;                    // gaussian width or plateau radius
  std::array<double, 2> center{0.0, 0.0};
};

// A potential is a sum of terms. The one-line text form is
//   zero | constant(value=c) | gaussian-well(depth=d, width=w, center=x[:y])
//        | plateau(height=h, radius=r, center=x[:y])
// joined by '+'.
struct PotentialSpec {
  std::vector<PotentialTerm> terms;

  static PotentialSpec zero();
  static PotentialSpec constant(double c);
  static PotentialSpec gaussian_well(double depth, double width, std::array<double, 2> center = {0, 0});
  static PotentialSpec plateau(double height, double radius, std::array<double, 2> center = {0, 0});
  PotentialSpec operator+(const PotentialSpec& other) const;

  static PotentialSpec parse(const std::string& text);
  std::string to_string() const;
};

struct HypothesisReport {
  double lambda0 = 0.0;
  double superlevel_measure = 0.0;
  bool q_nonneg = false;
  bool satisfied = false;
};

RealField eval_potential(const PotentialSpec& spec, const Grid& g);

// Returns (V - min V, min V). The returned field has exact zero minimum.
std::pair<RealField, double> shift_nonneg(const RealField& v);

// Cell-counting measure of {Q > lambda0}; "finite" on the box means the
// superlevel set is not the whole box.
HypothesisReport check_hypothesis(const RealField& q, double lambda0);

RealField clip_min(const RealField& q, double lambda0);

}  // namespace nlslab
