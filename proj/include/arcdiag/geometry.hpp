#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "arcdiag/error.hpp"

namespace arcdiag {

/// Point or vector in model units. The base plane is z = 0 with normal +z.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::hypot(a.x, a.y, a.z); }
inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

enum class ArcEnd { A, B };

/// Circular arc between `a` and `b`, parameterized by the angle its end
/// tangents make with the chord (inside the arc's plane) and by the dihedral
/// tilt of that plane about the chord. Center, radius and normal are derived.
///
/// Side convention: the arc plane is the vertical half-plane above the chord
/// rotated about the directed line a->b by (pi/2 - planeTilt); side = +1
/// rotates toward the left of a->b, side = -1 toward the right. For a
/// chord parallel to +z the reference "up" direction is +x instead.
class CircularArc {
 public:
  CircularArc() = default;

  Vec3 a() const { return a_; }
  Vec3 b() const { return b_; }
  double in_plane_angle() const { return inPlaneAngle_; }
  double plane_tilt() const { return planeTilt_; }
  int side() const { return side_; }

  bool is_segment() const { return inPlaneAngle_ == 0.0; }
  double chord_length() const { return 2.0 * halfChord_; }
  Vec3 chord_direction() const { return chordDir_; }
  /// Unit vector in the arc plane, perpendicular to the chord, toward the bulge.
  Vec3 bulge_direction() const { return bulgeDir_; }
  Vec3 plane_normal() const { return normal_; }
  /// Infinite for a segment.
  double radius() const;
  /// Chord midpoint for a segment.
  Vec3 center() const;
  Vec3 apex() const;

  /// Outgoing unit tangent at an endpoint (pointing along the arc).
  Vec3 tangent(ArcEnd end) const;
  /// Point at parameter t in [0, 1], uniform in arc angle; t=0 is a, t=1 is b.
  Vec3 point_at(double t) const;

  friend bool operator==(const CircularArc& l, const CircularArc& r) {
    return l.a_ == r.a_ && l.b_ == r.b_ && l.inPlaneAngle_ == r.inPlaneAngle_ &&
           l.planeTilt_ == r.planeTilt_ && l.side_ == r.side_;
  }

 private:
  friend CircularArc make_arc(Vec3, Vec3, double, double, int);

  Vec3 a_, b_;
  double inPlaneAngle_ = 0.0;
  double planeTilt_ = std::numbers::pi / 2;
  int side_ = 1;
  double halfChord_ = 0.0;
  Vec3 mid_, chordDir_, bulgeDir_, normal_;
};

/// Throws DegenerateChord when a == b, DomainError for angles outside [0, pi/2]
/// or side not in {+1, -1}.
CircularArc make_arc(Vec3 a, Vec3 b, double inPlaneAngle, double planeTilt, int side = 1);

Vec3 tangent_at(const CircularArc& arc, ArcEnd end);

/// Angle in [0, pi] between two nonzero vectors. Throws ZeroVector.
double angle_between(Vec3 t1, Vec3 t2);

/// Angle between two segments of equal elevation `beta` whose projections
/// meet at `alpha`: cos(delta) = 1 - cos^2(beta) (1 - cos(alpha)).
/// Domain 0 <= alpha <= pi, 0 <= beta <= pi/4; the result is at least alpha/2.
double lemma1_delta(double alpha, double beta);

/// Angle between a segment in the plane and one at elevation `beta` whose
/// projection meets the first at `alpha`: cos(delta) = cos(alpha) cos(beta).
/// Domain 0 <= alpha <= pi/2, 0 <= beta < pi/4; the result is at least beta.
double lemma2_delta(double alpha, double beta);

/// k >= 2 points uniformly spaced in arc angle, first == a, last == b.
std::vector<Vec3> sample_arc(const CircularArc& arc, int k);

}  // namespace arcdiag
