#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mvv/arrangement.hpp"
#include "mvv/camera.hpp"
#include "mvv/errors.hpp"
#include "mvv/subspace.hpp"

namespace mvv {

/// A world dimension, a feature dimension k, and the cameras observing it.
/// Every camera must leave room for k-planes away from its center
/// (dim c_i <= N - k - 1, i.e. h_i >= k).
class scene {
 public:
  scene(int world_dim, int k, std::vector<camera_matrix> cameras)
      : N_(world_dim), k_(k), cameras_(std::move(cameras)) {
    if (cameras_.empty()) throw error("scene needs at least one camera");
    if (k_ < 0 || k_ > N_) throw error("feature dimension out of range");
    for (std::size_t i = 0; i < cameras_.size(); ++i) {
      if (cameras_[i].world_dim() != N_) throw error("camera world dimension mismatch");
      if (cameras_[i].center().dim() > N_ - k_ - 1)
        throw error("camera " + std::to_string(i + 1) +
                    " cannot project k-planes: center too large (need dim c <= N-k-1)");
    }
  }

  int world_dim() const { return N_; }
  int k() const { return k_; }
  std::size_t views() const { return cameras_.size(); }
  const camera_matrix& camera(std::size_t i) const { return cameras_[i]; }
  const std::vector<camera_matrix>& cameras() const { return cameras_; }

  /// The centers of the cameras as a center arrangement.
  center_arrangement arrangement() const {
    std::vector<subspace> centers;
    centers.reserve(cameras_.size());
    for (const camera_matrix& c : cameras_) centers.push_back(c.center());
    return center_arrangement(N_, std::move(centers));
  }

 private:
  int N_;
  int k_;
  std::vector<camera_matrix> cameras_;
};

/// One image k-plane per camera.
struct image_tuple {
  std::vector<image_plane> planes;
};

/// Projects a world k-plane through every camera. Throws center_collision
/// (with the 1-based camera index) if the plane meets some center.
inline image_tuple synthesize(const scene& sc, const subspace& p) {
  if (p.ambient_dim() != sc.world_dim()) throw error("plane ambient mismatch");
  if (p.dim() != sc.k()) throw error("plane dimension does not match scene k");
  image_tuple out;
  out.planes.reserve(sc.views());
  for (std::size_t i = 0; i < sc.views(); ++i) {
    if (!meet(p, sc.camera(i).center()).is_empty()) throw center_collision(i + 1);
    out.planes.push_back(project(sc.camera(i), p));
  }
  return out;
}

enum class tri_status { exact, under_determined, inconsistent };

inline std::string to_string(tri_status s) {
  switch (s) {
    case tri_status::exact: return "ok";
    case tri_status::under_determined: return "under_determined";
    case tri_status::inconsistent: return "inconsistent";
  }
  return "unknown";
}

struct tri_result {
  tri_status status = tri_status::inconsistent;
  subspace plane;           // valid only when status == exact
  int intersection_dim = -1;  // dim of the intersection of all back-projections
};

inline void require_matching_tuple(const scene& sc, const image_tuple& t) {
  if (t.planes.size() != sc.views())
    throw wrong_arity("tuple has " + std::to_string(t.planes.size()) + " planes for " +
                      std::to_string(sc.views()) + " cameras");
  for (std::size_t i = 0; i < sc.views(); ++i) {
    if (t.planes[i].image_dim() != sc.camera(i).image_dim())
      throw error("tuple plane " + std::to_string(i + 1) + " lives in the wrong image space");
    if (t.planes[i].k() != sc.k())
      throw error("tuple plane " + std::to_string(i + 1) + " has the wrong dimension");
  }
}

inline std::vector<subspace> back_projections(const scene& sc, const image_tuple& t) {
  std::vector<subspace> planes;
  planes.reserve(sc.views());
  for (std::size_t i = 0; i < sc.views(); ++i)
    planes.push_back(back_project(sc.camera(i), t.planes[i]));
  return planes;
}

/// Intersects all back-projected planes. Exactly k-dimensional: the unique
/// world plane. Larger: the tuple does not pin the plane down
/// (under-determined; happens for every tuple when ell > k). Smaller: the
/// tuple is off the joint-image variety, i.e. inconsistent data.
inline tri_result triangulate(const scene& sc, const image_tuple& t) {
  require_matching_tuple(sc, t);
  const subspace common = meet_many(back_projections(sc, t));
  tri_result out;
  out.intersection_dim = common.dim();
  if (common.dim() == sc.k()) {
    out.status = tri_status::exact;
    out.plane = common;
  } else if (common.dim() > sc.k()) {
    out.status = tri_status::under_determined;
  } else {
    out.status = tri_status::inconsistent;
  }
  return out;
}

/// The three necessary conditions for a tuple to come from a world plane:
/// each back-projection contains its center (holds by construction), every
/// subset of views with intersecting centers meets in at least
/// dim c_I + k + 1 dimensions, and all back-projections share a k-plane.
struct membership_report {
  bool centers_ok = false;
  bool intersections_ok = false;
  bool common_plane_ok = false;

  bool all() const { return centers_ok && intersections_ok && common_plane_ok; }
};

inline membership_report constraint_membership(const scene& sc, const image_tuple& t) {
  require_matching_tuple(sc, t);
  const std::vector<subspace> back = back_projections(sc, t);
  membership_report rep;

  rep.centers_ok = true;
  for (std::size_t i = 0; i < sc.views(); ++i)
    if (!contains(back[i], sc.camera(i).center())) rep.centers_ok = false;

  const center_arrangement arr = sc.arrangement();
  rep.intersections_ok = true;
  const std::uint32_t full = (1u << sc.views()) - 1;
  for (std::uint32_t mask = 3; mask <= full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    if (arr.lattice_dim(mask) < 0) continue;
    std::vector<subspace> chosen;
    for (std::size_t i = 0; i < sc.views(); ++i)
      if (mask & (1u << i)) chosen.push_back(back[i]);
    if (meet_many(chosen).dim() < arr.lattice_dim(mask) + sc.k() + 1)
      rep.intersections_ok = false;
  }

  rep.common_plane_ok = meet_many(back).dim() >= sc.k();
  return rep;
}

/// Whether the tuple has an exact preimage: writing F for the intersection
/// of all back-projections, every center must satisfy
/// dim(c_i ^ F) + k + 1 <= dim F, so that F holds a k-plane missing all
/// centers. Assumes the tuple already passes the common-plane constraint.
inline bool in_image(const scene& sc, const image_tuple& t) {
  require_matching_tuple(sc, t);
  const subspace common = meet_many(back_projections(sc, t));
  for (std::size_t i = 0; i < sc.views(); ++i)
    if (meet(sc.camera(i).center(), common).dim() + sc.k() + 1 > common.dim()) return false;
  return true;
}

}  // namespace mvv
