#pragma once

#include <cstdint>
#include <vector>

#include "mvv/arrangement.hpp"
#include "mvv/camera.hpp"
#include "mvv/prng.hpp"
#include "mvv/subspace.hpp"
#include "mvv/triangulation.hpp"

namespace mvv {

/// Independent generic centers of the given dimensions.
inline center_arrangement random_arrangement(int ambient, const std::vector<int>& dims,
                                             std::uint64_t seed,
                                             long entry_bound = default_entry_bound) {
  std::vector<subspace> centers;
  centers.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i)
    centers.push_back(sample_subspace(ambient, dims[i], derive_seed(seed, i), entry_bound));
  return center_arrangement(ambient, std::move(centers), /*generic_hint=*/true);
}

/// Centers of the given dimensions that all contain a shared random core of
/// dimension core_dim (forced intersection; not generic).
inline center_arrangement random_arrangement_through_core(int ambient,
                                                          const std::vector<int>& dims,
                                                          int core_dim, std::uint64_t seed,
                                                          long entry_bound = default_entry_bound) {
  subspace core = sample_subspace(ambient, core_dim, derive_seed(seed, 1000), entry_bound);
  std::vector<subspace> centers;
  centers.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i)
    centers.push_back(sample_through(core, dims[i], derive_seed(seed, i), entry_bound));
  return center_arrangement(ambient, std::move(centers));
}

inline center_arrangement append_center(const center_arrangement& arr, const subspace& extra) {
  std::vector<subspace> centers = arr.centers();
  centers.push_back(extra);
  return center_arrangement(arr.ambient_dim(), std::move(centers));
}

/// Random camera whose kernel is exactly the prescribed center: its rows
/// span the annihilator of the center, mixed by a random invertible
/// transform so repeated draws differ.
inline camera_matrix camera_with_center(const subspace& center, std::uint64_t seed,
                                        long entry_bound = default_entry_bound) {
  if (center.is_full()) throw error("a camera center cannot be the whole space");
  const matrix ann = annihilator(center);
  prng rng(seed);
  for (;;) {
    matrix t = sample_integer_matrix(ann.rows(), ann.rows(), rng, entry_bound);
    if (rank(t) != t.rows()) continue;
    return camera_matrix(center.ambient_dim(), t * ann);
  }
}

/// Random full-rank (h+1)x(N+1) camera with integer entries.
inline camera_matrix random_camera(int ambient, int image_dim, std::uint64_t seed,
                                   long entry_bound = default_entry_bound) {
  prng rng(seed);
  const std::size_t rows = static_cast<std::size_t>(image_dim) + 1;
  const std::size_t cols = static_cast<std::size_t>(ambient) + 1;
  for (;;) {
    matrix m = sample_integer_matrix(rows, cols, rng, entry_bound);
    if (rank(m) == rows) return camera_matrix(ambient, m);
  }
}

inline scene random_scene(int ambient, int k, const std::vector<int>& image_dims,
                          std::uint64_t seed, long entry_bound = default_entry_bound) {
  std::vector<camera_matrix> cameras;
  cameras.reserve(image_dims.size());
  for (std::size_t i = 0; i < image_dims.size(); ++i)
    cameras.push_back(random_camera(ambient, image_dims[i], derive_seed(seed, i), entry_bound));
  return scene(ambient, k, std::move(cameras));
}

struct random_instance {
  center_arrangement arr;
  int k;
};

/// A randomized (arrangement, k) pair for oracle sweeps. Half the draws use
/// independent generic centers, half force a common core through a subset,
/// so that nontrivial lattices are exercised. k is drawn uniformly from the
/// valid range [0, N-1-max dim c_i].
inline random_instance draw_instance(int max_ambient, int max_views, std::uint64_t seed,
                                     long entry_bound = default_entry_bound) {
  prng rng(derive_seed(seed, 17));
  const int ambient = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_ambient - 1)));
  const int views = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_views)));
  std::vector<int> dims(static_cast<std::size_t>(views));
  int max_dim = 0;
  for (int& d : dims) {
    d = static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1)));  // 0..N-2
    max_dim = std::max(max_dim, d);
  }
  const int k_range = ambient - max_dim;  // k in 0..N-1-max_dim
  const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_range)));
  const bool forced = views >= 2 && rng.below(2) == 0;
  if (!forced) return {random_arrangement(ambient, dims, derive_seed(seed, 23), entry_bound), k};
  int min_dim = dims[0];
  for (int d : dims) min_dim = std::min(min_dim, d);
  const int core_dim = static_cast<int>(rng.below(static_cast<std::uint64_t>(min_dim) + 1));
  return {
      random_arrangement_through_core(ambient, dims, core_dim, derive_seed(seed, 23), entry_bound),
      k};
}

/// Point arrangement in P^N with a controlled coincidence pattern: group[i]
/// gives the identity class of point i; equal classes share the point.
inline center_arrangement point_arrangement_with_pattern(int ambient,
                                                         const std::vector<int>& group,
                                                         std::uint64_t seed,
                                                         long entry_bound = default_entry_bound) {
  std::vector<subspace> centers;
  centers.reserve(group.size());
  std::vector<subspace> pool;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const std::size_t cls = static_cast<std::size_t>(group[i]);
    while (pool.size() <= cls)
      pool.push_back(sample_subspace(ambient, 0, derive_seed(seed, pool.size()), entry_bound));
    centers.push_back(pool[cls]);
  }
  return center_arrangement(ambient, std::move(centers));
}

/// A scene whose arrangement is triangulable for its k (ell = k), drawn
/// from a small family of world/image shapes and re-drawn until the
/// triangulability check passes.
inline scene random_triangulable_scene(std::uint64_t seed,
                                       long entry_bound = default_entry_bound) {
  struct shape {
    int ambient;
    int k;
    std::vector<int> image_dims;
  };
  static const std::vector<shape> shapes = {
      {3, 0, {2, 2}},        // classical two-view points
      {3, 1, {2, 2}},        // two-view lines
      {3, 0, {2, 2, 2}},     // three-view points
      {4, 0, {3, 3}},        // points in P^4
      {4, 1, {3, 3}},        // lines in P^4
      {4, 2, {3, 3, 3}},     // planes in P^4
      {5, 0, {3, 4}},        // mixed image dimensions
      {5, 1, {4, 4}},        //
  };
  prng rng(derive_seed(seed, 41));
  for (std::uint64_t attempt = 0;; ++attempt) {
    const shape& sh = shapes[rng.below(shapes.size())];
    scene sc = random_scene(sh.ambient, sh.k, sh.image_dims, derive_seed(seed, 100 + attempt),
                            entry_bound);
    if (is_triangulable(sc.arrangement(), sh.k)) return sc;
  }
}

/// A world k-plane avoiding every center of the scene.
inline subspace random_world_plane(const scene& sc, std::uint64_t seed,
                                   long entry_bound = default_entry_bound,
                                   int redraw_cap = default_redraw_cap) {
  for (int attempt = 0; attempt < redraw_cap; ++attempt) {
    subspace p = sample_subspace(sc.world_dim(), sc.k(), derive_seed(seed, attempt), entry_bound);
    bool clear = true;
    for (const camera_matrix& cam : sc.cameras())
      if (!meet(p, cam.center()).is_empty()) {
        clear = false;
        break;
      }
    if (clear) return p;
  }
  throw sampling_exhausted("no center-avoiding world plane found");
}

}  // namespace mvv
