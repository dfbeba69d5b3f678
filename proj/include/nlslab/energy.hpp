#pragma once

// Constrained energy functionals on the L2 sphere:
//   order=second:  E(u) = 1/2 int |grad u|^2 + 1/2 int V|u|^2 - 1/p int Q|u|^p
//   order=fourth:  E(u) = 1/2 int |Lap u|^2  + 1/2 int V|u|^2 - 1/p int Q|u|^p
// with the S/T decomposition built from the shifted potential Vt = V - min V
// and the clipped coefficient min{Q, lambda0}.

#include "nlslab/grid.hpp"
#include "nlslab/potentials.hpp"

namespace nlslab {

enum class Order { Second, Fourth };

struct EnergyModel {
  Order order = Order::Second;
  double p = 4.0;
  Grid grid;
  RealField V;
  RealField Q;
  double lambda0 = 1.0;
  bool supercritical_override = false;
};

// Subcritical range: 2 < p < 2 + 4/n (second), 2 < p < 2 + 8/n (fourth).
double critical_exponent(Order order, int n);
bool is_subcritical(Order order, int n, double p);

// Validates exponent range (unless override), grid agreement and lambda0 > 0.
EnergyModel make_model(Order order, double p, RealField V, RealField Q, double lambda0,
                       bool supercritical_override = false);

struct EnergyBreakdown {
  double kinetic = 0.0;    // 1/2 int |grad u|^2  or  1/2 int |Lap u|^2
  double potential = 0.0;  // 1/2 int V |u|^2
  double nonlinear = 0.0;  // -1/p int Q |u|^p
  double total = 0.0;
  double s_part = 0.0;     // int (1/2 |u|^2 Vt - 1/p |u|^p min{Q, lambda0})
  double t_part = 0.0;     // -1/p int |u|^p (Q - lambda0)^+
};

double mass(const ComplexField& u);

EnergyBreakdown energy(const EnergyModel& model, const ComplexField& u);

// First variation 2*dE/d(conj u):
//   second: -Lap u + V u - Q |u|^(p-2) u
//   fourth:  Lap^2 u + V u - Q |u|^(p-2) u
// Central differences of energy() along h match Re inner(gradient, h).
ComplexField gradient(const EnergyModel& model, const ComplexField& u);

// |grad u|_2 (second) or |Lap u|_2 (fourth), computed spectrally.
double kinetic_norm(const EnergyModel& model, const ComplexField& u);

// Exponent of t in the nonlinear side of the coercivity bound:
// n(p-2)/2 (second) or n(p-2)/4 (fourth). Subcritical iff < 2.
double gn_kinetic_exponent(const EnergyModel& model);

// Certified-form lower bound 1/2 t^2 - (|Q|_inf/p) C^p rho^(p-e) t^e with
// e = gn_kinetic_exponent and the documented constant C = gn_constant().
// Valid whenever |u|_p <= C t^(e/p) rho^(1-e/p) holds for u.
double gn_constant();
double gn_bound(const EnergyModel& model, double kinetic_norm_value, double rho);

}  // namespace nlslab
