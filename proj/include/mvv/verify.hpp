#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mvv/arrangement.hpp"
#include "mvv/camera.hpp"
#include "mvv/generate.hpp"
#include "mvv/io.hpp"
#include "mvv/subspace.hpp"
#include "mvv/triangulation.hpp"

namespace mvv {

/// Result of one named sweep: how many cases ran, how many disagreed, and
/// the first failing instance serialized for replay.
struct check_outcome {
  std::string name;
  long cases = 0;
  long failures = 0;
  json first_failure;

  bool passed() const { return failures == 0; }

  void record(bool ok, const json& instance) {
    ++cases;
    if (!ok) {
      if (failures == 0) first_failure = instance;
      ++failures;
    }
  }
};

inline json instance_json(const center_arrangement& arr, int k, std::uint64_t seed) {
  return json{{"arrangement", arrangement_to_json(arr, false)}, {"k", k}, {"case_seed", seed}};
}

// ---------------------------------------------------------------------------
// cross-check sweeps between independent routes to the same quantity
// ---------------------------------------------------------------------------

/// Partition closed form vs the generic-sampling oracle.
inline check_outcome check_ell_oracle(long cases, int max_ambient, int max_views,
                                      std::uint64_t seed, int trials = 10,
                                      long entry_bound = default_entry_bound) {
  check_outcome out{.name = "ell closed form vs sampling oracle"};
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    random_instance inst = draw_instance(max_ambient, max_views, s, entry_bound);
    const int closed = ell_closed_form(inst.arr, inst.k).value;
    const int sampled = ell_sampled(inst.arr, inst.k, trials, derive_seed(s, 7), entry_bound);
    out.record(closed == sampled, instance_json(inst.arr, inst.k, s));
  }
  return out;
}

/// Two-view special case vs the general partition formula, with forced
/// center intersections mixed in.
inline check_outcome check_two_view(long cases, std::uint64_t seed,
                                    long entry_bound = default_entry_bound) {
  check_outcome out{.name = "two-view formula vs partition formula"};
  prng rng(derive_seed(seed, 3));
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    const int ambient = 2 + static_cast<int>(rng.below(4));  // 2..5
    std::vector<int> dims = {static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1))),
                             static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1)))};
    const int max_dim = std::max(dims[0], dims[1]);
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - max_dim)));
    center_arrangement arr = [&] {
      if (rng.below(2) == 0) return random_arrangement(ambient, dims, s, entry_bound);
      const int core = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(dims[0], dims[1])) + 1));
      return random_arrangement_through_core(ambient, dims, core, s, entry_bound);
    }();
    out.record(ell_two_view(arr, k) == ell_closed_form(arr, k).value, instance_json(arr, k, s));
  }
  return out;
}

/// Feasibility-search dimension vs (k+1)(N - ell).
inline check_outcome check_feasibility(long cases, std::uint64_t seed,
                                       long entry_bound = default_entry_bound) {
  check_outcome out{.name = "feasibility dimension vs (k+1)(N-ell)"};
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 977);
    random_instance inst = draw_instance(5, 5, s, entry_bound);
    const feasibility_value feas = dim_via_feasibility(inst.arr, inst.k);
    const long expected = dim_multiview(inst.arr, inst.k);
    bool ok = feas.h_max == expected;
    if (ok && !feas.witness.empty()) {
      long sum = 0;
      for (long v : feas.witness) sum += v;
      ok = sum == feas.h_max;
    }
    out.record(ok, instance_json(inst.arr, inst.k, s));
  }
  return out;
}

/// On every pseudo-disjoint draw the simple max{k, N-sum(h_i-k)} form must
/// reproduce the partition formula.
inline check_outcome check_pseudo_disjoint_formula(long cases, std::uint64_t seed,
                                                   long entry_bound = default_entry_bound) {
  check_outcome out{.name = "pseudo-disjoint closed form vs partition formula"};
  long tested = 0;
  for (long i = 0; tested < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 555);
    random_instance inst = draw_instance(5, 4, s, entry_bound);
    if (!is_pseudo_disjoint(inst.arr, inst.k).ok) continue;
    ++tested;
    out.record(ell_pseudo_disjoint(inst.arr, inst.k) == ell_closed_form(inst.arr, inst.k).value,
               instance_json(inst.arr, inst.k, s));
  }
  return out;
}

/// For point centers pseudo-disjointness must coincide with
/// "pairwise distinct or k = N-1".
inline check_outcome check_point_center_pseudo_disjoint(long cases, std::uint64_t seed,
                                                        long entry_bound = default_entry_bound) {
  check_outcome out{.name = "point centers: pseudo-disjoint iff distinct or k=N-1"};
  prng rng(derive_seed(seed, 5));
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 31);
    const int ambient = 2 + static_cast<int>(rng.below(3));  // 2..4
    const int n = 2 + static_cast<int>(rng.below(3));        // 2..4
    std::vector<int> group(static_cast<std::size_t>(n));
    for (int& g : group) g = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));  // 0..N-1
    center_arrangement arr = point_arrangement_with_pattern(ambient, group, s, entry_bound);
    bool distinct = true;
    for (int a = 0; a < n && distinct; ++a)
      for (int b = a + 1; b < n && distinct; ++b)
        if (arr.center(a) == arr.center(b)) distinct = false;
    const bool expected = distinct || k == ambient - 1;
    out.record(is_pseudo_disjoint(arr, k).ok == expected, instance_json(arr, k, s));
  }
  return out;
}

/// tau against hand-checked constants, and against a direct scan of the
/// locus-dimension formula.
inline check_outcome check_tau_table() {
  check_outcome out{.name = "tau against reference values"};
  auto expect = [&](long ambient, const std::vector<int>& hs, long k, long want) {
    const long got = tau(ambient, hs, k);
    out.record(got == want, json{{"N", ambient}, {"h", hs}, {"k", k}, {"want", want}, {"got", got}});
  };
  // point centers in P^3, k = 0: 1,1,0,0,0 over n = 1..5
  expect(3, {2}, 0, 1);
  expect(3, {2, 2}, 0, 1);
  expect(3, {2, 2, 2}, 0, 0);
  expect(3, {2, 2, 2, 2}, 0, 0);
  expect(3, {2, 2, 2, 2, 2}, 0, 0);
  // point centers in P^3, k = 1: 2,2,2,1,1 over n = 1..5
  expect(3, {2}, 1, 2);
  expect(3, {2, 2}, 1, 2);
  expect(3, {2, 2, 2}, 1, 2);
  expect(3, {2, 2, 2, 2}, 1, 1);
  expect(3, {2, 2, 2, 2, 2}, 1, 1);
  // single view P^N -> P^(N-1): tau = floor(sqrt(N))
  expect(4, {3}, 0, 2);
  expect(9, {8}, 0, 3);
  expect(16, {15}, 0, 4);
  // tau is the largest s >= k with nonnegative locus dimension
  for (long ambient = 2; ambient <= 6; ++ambient) {
    for (int h = 1; h <= ambient; ++h) {
      for (long k = 0; k <= h && k <= 2; ++k) {
        std::vector<int> hs = {h, std::min<int>(h + 1, static_cast<int>(ambient))};
        long largest = -1;
        for (long s = k; s <= ambient; ++s)
          if (schubert_locus_dim(ambient, hs, k, s) >= 0) largest = s;
        const long got = tau(ambient, hs, k);
        out.record(got == largest,
                   json{{"N", ambient}, {"h", hs}, {"k", k}, {"scan", largest}, {"got", got}});
      }
    }
  }
  return out;
}

/// Appending a center never increases ell.
inline check_outcome check_ell_monotonicity(long cases, std::uint64_t seed,
                                            long entry_bound = default_entry_bound) {
  check_outcome out{.name = "ell monotone under appended centers"};
  prng rng(derive_seed(seed, 11));
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 71);
    random_instance inst = draw_instance(5, 3, s, entry_bound);
    const int max_extra = inst.arr.ambient_dim() - inst.k - 1;
    const int extra_dim = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra) + 1));
    center_arrangement extended = append_center(
        inst.arr, sample_subspace(inst.arr.ambient_dim(), extra_dim, derive_seed(s, 9), entry_bound));
    out.record(ell_closed_form(extended, inst.k).value <= ell_closed_form(inst.arr, inst.k).value,
               instance_json(extended, inst.k, s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// subspace-algebra law sweeps
// ---------------------------------------------------------------------------

/// dim(V ^ W) + dim(V v W) = dim V + dim W, all inputs.
inline check_outcome check_meet_join_dims(long cases, std::uint64_t seed) {
  check_outcome out{.name = "meet/join dimension identity"};
  prng rng(derive_seed(seed, 21));
  for (long i = 0; i < cases; ++i) {
    const int ambient = 1 + static_cast<int>(rng.below(6));
    const int dv = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient) + 2));
    const int dw = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient) + 2));
    subspace v = sample_subspace(ambient, dv, rng.next());
    subspace w = sample_subspace(ambient, dw, rng.next());
    const bool ok = meet(v, w).dim() + join(v, w).dim() == v.dim() + w.dim();
    out.record(ok, json{{"N", ambient}, {"dimV", dv}, {"dimW", dw}});
  }
  return out;
}

/// sum dim H_i >= (n-1)N + k forces dim of the total intersection >= k.
inline check_outcome check_intersection_lower_bound(long cases, std::uint64_t seed) {
  check_outcome out{.name = "subspace intersection lower bound"};
  prng rng(derive_seed(seed, 22));
  for (long i = 0; i < cases; ++i) {
    const int n = 2 + static_cast<int>(rng.below(3));  // 2..4
    const int k = static_cast<int>(rng.below(3));      // 0..2
    const int ambient = n + k + static_cast<int>(rng.below(3));
    // distribute sum (n-1)N + k over n dims, each in [0, N-1]
    long remaining = static_cast<long>(n - 1) * ambient + k;
    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      const long slots_left = static_cast<long>(n - 1 - j) * (ambient - 1);
      const long lo = std::max<long>(0, remaining - slots_left);
      const long hi = std::min<long>(ambient - 1, remaining);
      dims[static_cast<std::size_t>(j)] =
          static_cast<int>(lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo) + 1)));
      remaining -= dims[static_cast<std::size_t>(j)];
    }
    std::vector<subspace> planes;
    for (int d : dims) planes.push_back(sample_subspace(ambient, d, rng.next()));
    out.record(meet_many(planes).dim() >= k, json{{"N", ambient}, {"dims", dims}, {"k", k}});
  }
  return out;
}

/// V inside W gives W ^ (V v U) = V v (W ^ U).
inline check_outcome check_modular_law(long cases, std::uint64_t seed) {
  check_outcome out{.name = "modular law for nested subspaces"};
  prng rng(derive_seed(seed, 23));
  for (long i = 0; i < cases; ++i) {
    const int ambient = 1 + static_cast<int>(rng.below(6));
    const int dw = static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient) + 1));
    subspace w = sample_subspace(ambient, dw, rng.next());
    const int dv = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dw) + 2));
    subspace v = sample_within(w, dv, rng.next());
    const int du = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient) + 2));
    subspace u = sample_subspace(ambient, du, rng.next());
    out.record(meet(w, join(v, u)) == join(v, meet(w, u)),
               json{{"N", ambient}, {"dimW", dw}, {"dimV", dv}, {"dimU", du}});
  }
  return out;
}

/// V inside W: a complement of V slices W in dimension dim W - dim V - 1.
inline check_outcome check_complement_slice(long cases, std::uint64_t seed) {
  check_outcome out{.name = "complement slice dimension"};
  prng rng(derive_seed(seed, 24));
  for (long i = 0; i < cases; ++i) {
    const int ambient = 1 + static_cast<int>(rng.below(6));
    const int dw = static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient) + 1));
    subspace w = sample_subspace(ambient, dw, rng.next());
    const int dv = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(dw) + 2));
    subspace v = sample_within(w, dv, rng.next());
    subspace comp = dual_complement(v, rng.next());
    bool ok = comp.dim() == ambient - v.dim() - 1 && meet(v, comp).is_empty();
    ok = ok && meet(w, comp).dim() == w.dim() - v.dim() - 1;
    out.record(ok, json{{"N", ambient}, {"dimW", dw}, {"dimV", dv}});
  }
  return out;
}

/// Slicing by a complement of an inner center and joining back restores any
/// plane through it: c0 v (H ^ c0*) = H whenever c0 is inside H.
inline check_outcome check_slice_roundtrip(long cases, std::uint64_t seed) {
  check_outcome out{.name = "complement slice round trip"};
  prng rng(derive_seed(seed, 25));
  for (long i = 0; i < cases; ++i) {
    const int ambient = 1 + static_cast<int>(rng.below(6));
    const int dh = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));
    subspace h = sample_subspace(ambient, dh, rng.next());
    const int dc = static_cast<int>(rng.below(static_cast<std::uint64_t>(dh) + 1));
    subspace c = sample_within(h, dc, rng.next());
    const int d0 = static_cast<int>(rng.below(static_cast<std::uint64_t>(dc) + 1));
    subspace c0 = sample_within(c, d0, rng.next());
    subspace comp = dual_complement(c0, rng.next());
    out.record(join(c0, meet(h, comp)) == h, json{{"N", ambient}, {"dimH", dh}, {"dim_c0", d0}});
  }
  return out;
}

/// Planes through fixed centers: the intersection dimension is bounded
/// below by max{dim c1^c2, dim H1 + dim H2 - N} always, with equality for
/// generically drawn planes.
inline check_outcome check_generic_intersection(long cases, std::uint64_t seed,
                                                bool require_equality = true) {
  check_outcome out{.name = "generic intersection through fixed centers"};
  prng rng(derive_seed(seed, 26));
  for (long i = 0; i < cases; ++i) {
    const int ambient = 2 + static_cast<int>(rng.below(5));
    const int dc1 = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));  // -1..N-2
    const int dc2 = -1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));
    subspace c1 = sample_subspace(ambient, dc1, rng.next());
    subspace c2 = sample_subspace(ambient, dc2, rng.next());
    const int dh1 =
        dc1 + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1 - dc1)));
    const int dh2 =
        dc2 + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1 - dc2)));
    subspace h1 = sample_through(c1, dh1, rng.next());
    subspace h2 = sample_through(c2, dh2, rng.next());
    const int lower = std::max(meet(c1, c2).dim(), dh1 + dh2 - ambient);
    const int got = meet(h1, h2).dim();
    const bool ok = require_equality ? got == lower : got >= lower;
    out.record(ok, json{{"N", ambient},
                        {"dims", json::array({dc1, dc2, dh1, dh2})},
                        {"lower", lower},
                        {"got", got}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// camera dictionary and triangulation sweeps
// ---------------------------------------------------------------------------

/// Shape identities, projection/back-projection composites, and the
/// round trips between image planes and planes through the center.
inline check_outcome check_camera_dictionary(long cases, std::uint64_t seed,
                                             long entry_bound = 50) {
  check_outcome out{.name = "camera projection dictionary"};
  prng rng(derive_seed(seed, 27));
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 303);
    const int ambient = 2 + static_cast<int>(rng.below(4));  // 2..5
    const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient)));  // 1..N
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(h) + 1));        // 0..h
    camera_matrix cam = random_camera(ambient, h, s, entry_bound);
    bool ok = multiview_identities_check(cam, k, derive_seed(s, 1));

    // world plane avoiding the center: back-projection of its image is c v P
    subspace p = subspace::empty(ambient);
    for (int attempt = 0;; ++attempt) {
      p = sample_subspace(ambient, k, derive_seed(s, 100 + attempt), entry_bound);
      if (meet(p, cam.center()).is_empty()) break;
      if (attempt > default_redraw_cap) throw sampling_exhausted("camera sweep");
    }
    image_plane image = project(cam, p);
    ok = ok && image.k() == k;
    ok = ok && back_project(cam, image) == join(cam.center(), p);

    // image -> world -> image round trip
    image_plane q{sample_subspace(h, k, derive_seed(s, 5))};
    subspace back = back_project(cam, q);
    ok = ok && project_backplane(cam, back).plane == q.plane;

    // world -> image -> world round trip on a plane through the center
    subspace through = join(cam.center(), p);
    ok = ok && back_project(cam, project_backplane(cam, through)) == through;

    out.record(ok, json{{"N", ambient}, {"h", h}, {"k", k}, {"case_seed", s}});
  }
  return out;
}

/// Exact recovery on triangulable scenes; the first draws pin the classical
/// two-view point and two-view line shapes.
inline check_outcome check_triangulation_roundtrip(long cases, std::uint64_t seed,
                                                   long entry_bound = 50) {
  check_outcome out{.name = "triangulation round trip"};
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 404);
    scene sc = [&] {
      if (i % 4 == 0 || i % 4 == 1) {
        const int k = i % 4 == 0 ? 0 : 1;
        for (std::uint64_t attempt = 0;; ++attempt) {
          scene candidate = random_scene(3, k, {2, 2}, derive_seed(s, attempt), entry_bound);
          if (is_triangulable(candidate.arrangement(), k)) return candidate;
        }
      }
      return random_triangulable_scene(s, entry_bound);
    }();
    subspace p = random_world_plane(sc, derive_seed(s, 2), entry_bound);
    image_tuple t = synthesize(sc, p);
    tri_result r = triangulate(sc, t);
    bool ok = r.status == tri_status::exact && r.plane == p;
    ok = ok && constraint_membership(sc, t).all();
    ok = ok && in_image(sc, t);
    out.record(ok, json{{"scene", scene_to_json(sc)}, {"case_seed", s}});
  }
  return out;
}

/// One camera can never determine a positive-codimension feature: the
/// intersection is the whole back-projected plane.
inline check_outcome check_single_camera_under_determined(long cases, std::uint64_t seed,
                                                          long entry_bound = 50) {
  check_outcome out{.name = "single camera is under-determined"};
  prng rng(derive_seed(seed, 28));
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 505);
    const int ambient = 2 + static_cast<int>(rng.below(4));
    const int h = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(ambient - 1)));  // < N
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(h) + 1));
    scene sc = random_scene(ambient, k, {h}, s, entry_bound);
    subspace p = random_world_plane(sc, derive_seed(s, 2), entry_bound);
    tri_result r = triangulate(sc, synthesize(sc, p));
    out.record(r.status == tri_status::under_determined,
               json{{"scene", scene_to_json(sc)}, {"case_seed", s}});
  }
  return out;
}

/// Any single-coordinate bump of a two-view point correspondence leaves the
/// joint-image variety: the two back-projected lines become skew.
inline check_outcome check_perturbation_inconsistent(long cases, std::uint64_t seed,
                                                     long entry_bound = 50) {
  check_outcome out{.name = "perturbed two-view point tuples are inconsistent"};
  for (long i = 0; i < cases; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i) + 606);
    scene sc = [&] {
      for (std::uint64_t attempt = 0;; ++attempt) {
        scene candidate = random_scene(3, 0, {2, 2}, derive_seed(s, attempt), entry_bound);
        if (is_triangulable(candidate.arrangement(), 0)) return candidate;
      }
    }();
    subspace p = random_world_plane(sc, derive_seed(s, 2), entry_bound);
    image_tuple t = synthesize(sc, p);
    bool ok = true;
    for (std::size_t view = 0; view < 2 && ok; ++view) {
      for (std::size_t coord = 0; coord < 3 && ok; ++coord) {
        image_tuple bumped = t;
        matrix row = bumped.planes[view].plane.basis();
        row(0, coord) += 1;
        bumped.planes[view].plane = subspace::span_rows(2, row);
        ok = triangulate(sc, bumped).status == tri_status::inconsistent;
      }
    }
    out.record(ok, json{{"scene", scene_to_json(sc)}, {"case_seed", s}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// worked reference examples with pinned expected values
// ---------------------------------------------------------------------------

namespace detail {

inline subspace coord_span(int ambient, std::initializer_list<int> units) {
  matrix m(units.size(), static_cast<std::size_t>(ambient) + 1);
  std::size_t r = 0;
  for (int u : units) m(r++, static_cast<std::size_t>(u)) = 1;
  return subspace::span_rows(ambient, m);
}

}  // namespace detail

/// Known configurations with hand-checked invariants. Every expected value
/// below is a frozen reference constant.
inline std::vector<check_outcome> run_reference_examples(std::uint64_t seed = 20240901) {
  using detail::coord_span;
  std::vector<check_outcome> outcomes;
  auto check = [&](const std::string& name, bool ok, const json& detail = json::object()) {
    check_outcome c{.name = name};
    c.record(ok, detail);
    outcomes.push_back(std::move(c));
  };

  const subspace e0_p2 = coord_span(2, {0});
  const subspace e1_p2 = coord_span(2, {1});
  const subspace e0 = coord_span(3, {0});
  const subspace e1 = coord_span(3, {1});
  const subspace line01 = coord_span(3, {0, 1});
  const subspace line12 = coord_span(3, {1, 2});
  const subspace line23 = coord_span(3, {2, 3});

  {  // two disjoint line centers in P^3, k = 0: ell = 1, not triangulable
    center_arrangement arr(3, {line01, line23});
    const ell_value ell = ell_closed_form(arr, 0);
    check("two disjoint line centers in P^3, k=0: ell=1",
          ell.value == 1 && !is_triangulable(arr, 0) &&
              ell_sampled(arr, 0, 10, derive_seed(seed, 1)) == 1 &&
              ell_pseudo_disjoint(arr, 0) == 1,
          json{{"ell", ell.value}});
  }
  {  // two line centers meeting in a point, k = 0: pseudo-disjoint, ell = 1
    center_arrangement arr(3, {line01, line12});
    check("two meeting line centers in P^3, k=0: pseudo-disjoint, ell=1",
          is_pseudo_disjoint(arr, 0).ok && ell_two_view(arr, 0) == 1 &&
              ell_closed_form(arr, 0).value == 1);
  }
  {  // two distinct point centers in P^3
    center_arrangement arr(3, {e0, e1});
    const bool k1 = ell_closed_form(arr, 1).value == 1 && is_triangulable(arr, 1) &&
                    ell_two_view(arr, 1) == 1 && ell_pseudo_disjoint(arr, 1) == 1 &&
                    !is_proper(arr, 1);
    const bool k0 = ell_closed_form(arr, 0).value == 0 && is_triangulable(arr, 0) &&
                    ell_sampled(arr, 0, 20, derive_seed(seed, 2)) == 0 &&
                    ell_pseudo_disjoint(arr, 0) == 0 && is_proper(arr, 0);
    const feasibility_value feas = dim_via_feasibility(arr, 0);
    check("two distinct point centers in P^3: k=1 triangulable and full, k=0 proper",
          k1 && k0 && dim_multiview(arr, 1) == 4 && dim_multiview(arr, 0) == 3 &&
              feas.h_max == 3);
  }
  {  // coincident vs distinct point centers in P^2, k = 0
    center_arrangement same(2, {e0_p2, e0_p2});
    center_arrangement distinct(2, {e0_p2, e1_p2});
    const pseudo_disjoint_result pd = is_pseudo_disjoint(same, 0);
    check("coincident point centers in P^2, k=0: not pseudo-disjoint",
          !pd.ok && pd.violating == 0b11 && is_proper(same, 0) &&
              is_pseudo_disjoint(distinct, 0).ok);
    check("coincident point centers in P^2, k=1: pseudo-disjoint",
          is_pseudo_disjoint(same, 1).ok);
  }
  {  // single point center in P^3, k = 0
    center_arrangement arr(3, {e0});
    const analysis_report rep = analyze(arr, 0, {.seed = seed});
    check("single point center in P^3, k=0: ell=1, dim=2, not proper",
          rep.ell == 1 && rep.dim_variety == 2 && !rep.triangulable && rep.pseudo_disjoint &&
              !rep.proper && rep.consistent);
  }
  {  // identical centers: two-view formula degenerates to dim c + k + 1
    subspace line = sample_subspace(3, 1, derive_seed(seed, 3));
    center_arrangement arr(3, {line, line});
    check("identical line centers in P^3, k=0: ell = dim c + k + 1",
          ell_two_view(arr, 0) == 2 && ell_closed_form(arr, 0).value == 2);
  }
  {  // classical two-camera setup
    matrix c1(3, 4), c2(3, 4);
    for (int i = 0; i < 3; ++i) c1(i, i) = 1;                // kernel e3
    for (int i = 0; i < 3; ++i) c2(i, i + 1) = 1;            // kernel e0
    scene sc(3, 0, {camera_matrix(3, c1), camera_matrix(3, c2)});
    const analysis_report rep = analyze(sc.arrangement(), 0, {.seed = seed});
    check("classical two-camera setup, k=0: ell=0, dim=3, triangulable, proper",
          rep.ell == 0 && rep.dim_variety == 3 && rep.triangulable && rep.pseudo_disjoint &&
              rep.proper && rep.consistent);
    const camera_matrix& cam = sc.camera(0);
    image_plane pt{sample_subspace(2, 0, derive_seed(seed, 4))};
    image_plane ln{sample_subspace(2, 1, derive_seed(seed, 5))};
    check("classical 3x4 camera: center is a point, back-projections have dims 1 and 2",
          cam.center().dim() == 0 && back_project(cam, pt).dim() == 1 &&
              back_project(cam, ln).dim() == 2);
  }
  {  // tau reference table
    check_outcome taus = check_tau_table();
    taus.name = "tau reference table";
    outcomes.push_back(std::move(taus));
  }
  {  // generic point centers in P^3: upsilon table for k = 0 and k = 1
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n) {
      std::vector<int> dims(static_cast<std::size_t>(n), 0);
      center_arrangement arr = random_arrangement(3, dims, derive_seed(seed, 600 + n));
      const upsilon_value u0 = upsilon(arr, 0, true);
      ok = u0.value == (n <= 2 ? 1 : 0) && u0.method == upsilon_method::exact_generic;
      if (ok) {
        const upsilon_value u1 = upsilon(arr, 1, true);
        ok = u1.value == (n <= 3 ? 2 : 1);
      }
    }
    check("generic point centers in P^3: upsilon tables for k=0,1", ok);
  }
  {  // single point center in P^N: upsilon 1 although tau = floor(sqrt(N))
    bool ok = true;
    for (int ambient : {4, 9, 16}) {
      center_arrangement arr(ambient, {sample_subspace(ambient, 0, derive_seed(seed, 700 + ambient))});
      const upsilon_value u = upsilon(arr, 0, true);
      ok = ok && u.value == 1;
    }
    check("single point center in P^4/P^9/P^16: upsilon=1", ok);
  }
  {  // three collinear point centers: search certifies upsilon >= 1 via the common line
    const subspace e01 = subspace::point(3, {1, 1, 0, 0});
    center_arrangement arr(3, {e0, e1, e01});
    const upsilon_value u = upsilon(arr, 0, false, derive_seed(seed, 8));
    check("three collinear point centers in P^3, k=0: lower bound upsilon=1",
          u.value == 1 && u.method == upsilon_method::lower_bound);
  }
  {  // arbitrary planes through meeting line centers always satisfy the
     // intersection constraint (two planes in P^3 share a line)
    center_arrangement arr(3, {line01, line12});
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      subspace h1 = sample_through(line01, 2, derive_seed(seed, 900 + t));
      subspace h2 = sample_through(line12, 2, derive_seed(seed, 950 + t));
      ok = meet(h1, h2).dim() >= arr.lattice_dim(0b11) + 0 + 1;
    }
    check("planes through meeting line centers satisfy the intersection constraint", ok);
  }
  return outcomes;
}

/// The randomized cross-check battery driven by the `verify` command.
inline std::vector<check_outcome> run_verification(long cases, int max_ambient, int max_views,
                                                   std::uint64_t seed, int trials = 10,
                                                   long entry_bound = default_entry_bound) {
  std::vector<check_outcome> outcomes;
  if (cases <= 0) return outcomes;
  outcomes.push_back(check_ell_oracle(cases, max_ambient, max_views, seed, trials, entry_bound));
  outcomes.push_back(check_two_view(2 * cases, derive_seed(seed, 101), entry_bound));
  outcomes.push_back(check_feasibility(std::max<long>(cases / 2, 1), derive_seed(seed, 102),
                                       entry_bound));
  outcomes.push_back(check_pseudo_disjoint_formula(cases, derive_seed(seed, 103), entry_bound));
  outcomes.push_back(check_tau_table());
  return outcomes;
}

}  // namespace mvv
