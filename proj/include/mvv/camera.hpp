#pragma once

#include <cstdint>
#include <utility>

#include "mvv/errors.hpp"
#include "mvv/subspace.hpp"

namespace mvv {

/// Full-rank (h+1)x(N+1) rational camera, inducing the rational projection
/// P^N -> P^h. The center (kernel) is computed once at construction and has
/// projective dimension N - h - 1.
class camera_matrix {
 public:
  camera_matrix(int world_dim, matrix entries) : N_(world_dim), entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.cols() != static_cast<std::size_t>(N_) + 1)
      throw error("camera matrix shape does not match world dimension");
    h_ = static_cast<int>(entries_.rows()) - 1;
    if (h_ > N_) throw error("camera image dimension exceeds world dimension");
    if (rank(entries_) != entries_.rows()) throw error("camera matrix must have full row rank");
    center_ = subspace::span_rows(N_, kernel_basis(entries_));
  }

  int image_dim() const { return h_; }
  int world_dim() const { return N_; }
  const matrix& entries() const { return entries_; }
  const subspace& center() const { return center_; }

 private:
  int N_;
  int h_ = 0;
  matrix entries_;
  subspace center_;
};

/// k-plane in the image space P^h of some camera.
struct image_plane {
  subspace plane;

  int k() const { return plane.dim(); }
  int image_dim() const { return plane.ambient_dim(); }
};

/// Plane in P^N containing a camera center: the full preimage of an image
/// k-plane. Keeps the index (1-based) of the camera it came from.
struct back_projected_plane {
  subspace plane;
  std::size_t camera_index = 0;
};

/// Image of a k-plane disjoint from the center: the span of the images of
/// its basis. Throws center_collision when the map is undefined.
inline image_plane project(const camera_matrix& cam, const subspace& p) {
  if (p.ambient_dim() != cam.world_dim()) throw error("plane/camera ambient mismatch");
  if (!meet(p, cam.center()).is_empty()) throw center_collision();
  matrix image_rows = p.basis() * cam.entries().transposed();
  return image_plane{subspace::span_rows(cam.image_dim(), image_rows)};
}

/// Full preimage of an image k-plane p: the kernel of Q*C where the rows of
/// Q annihilate p. Contains the center; dimension N - h + k.
inline subspace back_project(const camera_matrix& cam, const image_plane& p) {
  if (p.image_dim() != cam.image_dim()) throw error("image plane/camera dimension mismatch");
  if (p.plane.is_empty()) throw error("cannot back-project the empty plane");
  matrix q = annihilator(p.plane);
  if (q.rows() == 0) return subspace::full(cam.world_dim());  // k = h
  matrix constraints = q * cam.entries();
  return subspace::span_rows(cam.world_dim(), kernel_basis(constraints));
}

/// Image of a plane through the center. For H with dim H = dim c + k + 1
/// this is the inverse of back_project: the camera identifies k-planes in
/// P^h with (dim c + k + 1)-planes through c.
inline image_plane project_backplane(const camera_matrix& cam, const subspace& h) {
  if (h.ambient_dim() != cam.world_dim()) throw error("plane/camera ambient mismatch");
  if (!contains(h, cam.center())) throw not_through_center();
  if (h.dim() <= cam.center().dim()) throw error("plane must strictly contain the center");
  matrix image_rows = h.basis() * cam.entries().transposed();
  return image_plane{subspace::span_rows(cam.image_dim(), image_rows)};
}

/// Sanity identities tying camera shape to center and back-projection
/// dimensions: dim c = N-h-1 and a sampled back-projected plane has
/// dim = N-h+k = dim c+k+1 and passes through the center.
inline bool multiview_identities_check(const camera_matrix& cam, int k, std::uint64_t seed = 1) {
  const int n = cam.world_dim(), h = cam.image_dim();
  if (k < 0 || k > h) return false;
  if (cam.center().dim() != n - h - 1) return false;
  image_plane p{sample_subspace(h, k, seed)};
  subspace back = back_project(cam, p);
  if (back.dim() != n - h + k) return false;
  if (back.dim() != cam.center().dim() + k + 1) return false;
  return contains(back, cam.center());
}

}  // namespace mvv
