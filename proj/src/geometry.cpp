#include "arcdiag/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace arcdiag {

namespace {

constexpr double kPi = std::numbers::pi;

bool in_range(double x, double lo, double hi) { return x >= lo && x <= hi; }

}  // namespace

CircularArc make_arc(Vec3 a, Vec3 b, double inPlaneAngle, double planeTilt, int side) {
  const Vec3 chord = b - a;
  const double len = norm(chord);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorCode::DegenerateChord, "arc endpoints coincide");
  }
  if (!in_range(inPlaneAngle, 0.0, kPi / 2) || !in_range(planeTilt, 0.0, kPi / 2)) {
    throw Error(ErrorCode::DomainError, "arc angles must lie in [0, pi/2]");
  }
  if (side != 1 && side != -1) throw Error(ErrorCode::DomainError, "side must be +1 or -1");

  CircularArc arc;
  arc.a_ = a;
  arc.b_ = b;
  arc.inPlaneAngle_ = inPlaneAngle;
  arc.planeTilt_ = planeTilt;
  arc.side_ = side;
  arc.halfChord_ = len / 2.0;
  arc.mid_ = 0.5 * (a + b);
  arc.chordDir_ = (1.0 / len) * chord;

  const Vec3 u = arc.chordDir_;
  const Vec3 up = std::hypot(u.x, u.y) > 1e-12 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  const Vec3 vertical = normalized(up - dot(up, u) * u);
  const Vec3 left = cross(vertical, u);
  if (planeTilt == kPi / 2) {
    arc.bulgeDir_ = vertical;
  } else {
    arc.bulgeDir_ = std::sin(planeTilt) * vertical + (side * std::cos(planeTilt)) * left;
  }
  arc.normal_ = cross(u, arc.bulgeDir_);
  return arc;
}

double CircularArc::radius() const {
  if (is_segment()) return std::numeric_limits<double>::infinity();
  return halfChord_ / std::sin(inPlaneAngle_);
}

Vec3 CircularArc::center() const {
  if (is_segment()) return mid_;
  return mid_ - (halfChord_ * std::cos(inPlaneAngle_) / std::sin(inPlaneAngle_)) * bulgeDir_;
}

Vec3 CircularArc::apex() const {
  return mid_ + (halfChord_ * std::tan(inPlaneAngle_ / 2.0)) * bulgeDir_;
}

Vec3 CircularArc::tangent(ArcEnd end) const {
  const double c = std::cos(inPlaneAngle_);
  const double s = std::sin(inPlaneAngle_);
  const Vec3 along = end == ArcEnd::A ? chordDir_ : -chordDir_;
  return c * along + s * bulgeDir_;
}

Vec3 CircularArc::point_at(double t) const {
  if (t <= 0.0) return a_;
  if (t >= 1.0) return b_;
  if (is_segment()) return mid_ + ((2.0 * t - 1.0) * halfChord_) * chordDir_;
  const double alpha = inPlaneAngle_;
  const double phi = alpha * (2.0 * t - 1.0);
  const double s = std::sin(alpha);
  // R sin(phi) along the chord and R (cos(phi) - cos(alpha)) toward the bulge,
  // written without the (possibly huge) radius.
  const double along = halfChord_ * std::sin(phi) / s;
  const double up =
      halfChord_ * 2.0 * std::sin((alpha + phi) / 2.0) * std::sin((alpha - phi) / 2.0) / s;
  return mid_ + along * chordDir_ + up * bulgeDir_;
}

Vec3 tangent_at(const CircularArc& arc, ArcEnd end) { return arc.tangent(end); }

double angle_between(Vec3 t1, Vec3 t2) {
  if (norm(t1) == 0.0 || norm(t2) == 0.0) {
    throw Error(ErrorCode::ZeroVector, "angle with a zero vector is undefined");
  }
  return std::atan2(norm(cross(t1, t2)), dot(t1, t2));
}

double lemma1_delta(double alpha, double beta) {
  if (!in_range(alpha, 0.0, kPi) || !in_range(beta, 0.0, kPi / 4)) {
    throw Error(ErrorCode::DomainError, "lemma1_delta needs 0<=alpha<=pi, 0<=beta<=pi/4");
  }
  // 1 - cos(delta) = cos^2(beta) (1 - cos(alpha))  <=>  sin(delta/2) = cos(beta) sin(alpha/2)
  return 2.0 * std::asin(std::min(1.0, std::cos(beta) * std::sin(alpha / 2.0)));
}

double lemma2_delta(double alpha, double beta) {
  if (!in_range(alpha, 0.0, kPi / 2) || !(beta >= 0.0 && beta < kPi / 4)) {
    throw Error(ErrorCode::DomainError, "lemma2_delta needs 0<=alpha<=pi/2, 0<=beta<pi/4");
  }
  // 1 - cos(a)cos(b) = 2 sin^2(a/2) + 2 cos(a) sin^2(b/2)
  const double sa = std::sin(alpha / 2.0);
  const double sb = std::sin(beta / 2.0);
  return 2.0 * std::asin(std::min(1.0, std::sqrt(sa * sa + std::cos(alpha) * sb * sb)));
}

std::vector<Vec3> sample_arc(const CircularArc& arc, int k) {
  if (k < 2) throw Error(ErrorCode::DomainError, "sample_arc needs k >= 2");
  std::vector<Vec3> pts;
  pts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    pts.push_back(arc.point_at(static_cast<double>(i) / (k - 1)));
  }
  return pts;
}

}  // namespace arcdiag
