#pragma once

#include "bergman/common.hpp"

namespace bergman {

// Disc automorphism phi_a(z) = (a - z)/(1 - conj(a) z).
cplx mobius(cplx a, cplx z);

// Pseudohyperbolic distance rho(z, w) = |phi_z(w)|, symmetric, in [0, 1).
double pseudo_dist(cplx z, cplx w);

// Carleson square S(a) = { re^{it} : |a| < r < 1, |arg(a e^{-it})| < (1-|a|)/2 }.
// S(0) is the whole disc by convention (the level-0 root square); its anchor
// angle is 0 and its half_angle is pi.
//
// All areas are in the normalized measure dA = dx dy / pi. The Euclidean area
// |S| used by some of the weight-class formulas is pi * area.
struct CarlesonSquare {
  cplx anchor;
  double r_lo = 0.0;       // |a|
  double half_angle = 0.0; // (1 - |a|)/2, or pi for the root square
  double area = 1.0;       // normalized measure of the square
  bool is_root = false;

  bool contains(cplx z) const;
  double anchor_angle() const { return is_root ? 0.0 : std::arg(anchor); }
};

CarlesonSquare carleson_square(cplx a);

// Pseudohyperbolic disc Delta(z, r) together with its Euclidean parameters
// center = (1-r^2) z / (1 - r^2 |z|^2), radius = r (1-|z|^2) / (1 - r^2 |z|^2).
struct PseudoDisc {
  cplx hyperbolic_center;
  double radius = 0.0;  // pseudohyperbolic radius
  cplx euclidean_center;
  double euclidean_radius = 0.0;

  bool contains(cplx w) const;
};

PseudoDisc pseudo_disc(cplx z, double r);

// Non-tangential approach region with vertex zeta = r e^{i theta} != 0:
// z in Gamma(zeta) iff |theta - arg z| < (1 - |z|/r) / 2.
// arg z at z = 0 is taken as 0.
bool in_nontangential(cplx vertex, cplx z);

}  // namespace bergman
