#include "bergman/geometry.hpp"

#include <cmath>

namespace bergman {

cplx mobius(cplx a, cplx z) {
  if (!(std::norm(a) < 1.0) || !(std::norm(z) < 1.0))
    throw parameter_error("mobius: arguments must lie in the open disc");
  return (a - z) / (1.0 - std::conj(a) * z);
}

double pseudo_dist(cplx z, cplx w) { return std::abs(mobius(z, w)); }

bool CarlesonSquare::contains(cplx z) const {
  if (is_root) return std::norm(z) < 1.0;
  double r = std::abs(z);
  if (!(r > r_lo && r < 1.0)) return false;
  return std::abs(angle_diff(std::arg(anchor), std::arg(z))) < half_angle;
}

CarlesonSquare carleson_square(cplx a) {
  double r = std::abs(a);
  if (!(r < 1.0)) throw parameter_error("carleson_square: anchor outside the disc");
  CarlesonSquare s;
  s.anchor = a;
  if (r == 0.0) {
    s.is_root = true;
    s.r_lo = 0.0;
    s.half_angle = kPi;
    s.area = 1.0;
    return s;
  }
  s.r_lo = r;
  s.half_angle = 0.5 * (1.0 - r);
  s.area = (1.0 - r) * (1.0 - r * r) / kTwoPi;
  return s;
}

bool PseudoDisc::contains(cplx w) const {
  return std::abs(w - euclidean_center) < euclidean_radius;
}

PseudoDisc pseudo_disc(cplx z, double r) {
  if (!(r > 0.0 && r < 1.0)) throw parameter_error("pseudo_disc: radius must be in (0,1)");
  if (!(std::norm(z) < 1.0)) throw parameter_error("pseudo_disc: center outside the disc");
  double r2 = r * r;
  double z2 = std::norm(z);
  double denom = 1.0 - r2 * z2;
  PseudoDisc d;
  d.hyperbolic_center = z;
  d.radius = r;
  d.euclidean_center = (1.0 - r2) * z / denom;
  d.euclidean_radius = r * (1.0 - z2) / denom;
  return d;
}

bool in_nontangential(cplx vertex, cplx z) {
  double r = std::abs(vertex);
  if (r == 0.0) throw parameter_error("in_nontangential: vertex must be nonzero");
  if (!(r < 1.0 && std::norm(z) < 1.0))
    throw parameter_error("in_nontangential: points must lie in the disc");
  double theta = std::arg(vertex);
  double argz = (z == cplx(0.0, 0.0)) ? 0.0 : std::arg(z);
  return std::abs(angle_diff(theta, argz)) < 0.5 * (1.0 - std::abs(z) / r);
}

}  // namespace bergman
