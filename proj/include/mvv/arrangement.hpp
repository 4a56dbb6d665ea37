#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mvv/errors.hpp"
#include "mvv/subspace.hpp"

namespace mvv {

inline constexpr int default_partition_cap = 12;
inline constexpr int default_feasibility_cap = 6;
inline constexpr int max_arrangement_size = 16;

/// Ordered list of centers in a common P^N together with the full
/// intersection lattice: dim c_I for every nonempty index set I, with
/// dim(empty subspace) = -1. Immutable after construction.
class center_arrangement {
 public:
  center_arrangement(int ambient, std::vector<subspace> centers, bool generic_hint = false)
      : N_(ambient), centers_(std::move(centers)), generic_hint_(generic_hint) {
    if (centers_.empty()) throw error("arrangement needs at least one center");
    if (centers_.size() > max_arrangement_size)
      throw error("arrangement exceeds supported center count");
    for (const subspace& c : centers_)
      if (c.ambient_dim() != N_) throw error("center ambient dimension mismatch");
    build_lattice();
  }

  int ambient_dim() const { return N_; }
  int size() const { return static_cast<int>(centers_.size()); }
  const subspace& center(int i) const { return centers_[static_cast<std::size_t>(i)]; }
  const std::vector<subspace>& centers() const { return centers_; }
  bool generic_hint() const { return generic_hint_; }

  /// dim of the intersection of the centers selected by `mask` (nonzero).
  int lattice_dim(std::uint32_t mask) const {
    return lattice_[mask];
  }

  /// Image dimension h_i = N - dim c_i - 1 of a camera with this center.
  int image_dim(int i) const { return N_ - centers_[static_cast<std::size_t>(i)].dim() - 1; }

  std::vector<int> image_dims() const {
    std::vector<int> hs(centers_.size());
    for (int i = 0; i < size(); ++i) hs[static_cast<std::size_t>(i)] = image_dim(i);
    return hs;
  }

  int max_center_dim() const {
    int best = -1;
    for (const subspace& c : centers_) best = std::max(best, c.dim());
    return best;
  }

  int min_center_dim() const {
    int best = N_;
    for (const subspace& c : centers_) best = std::min(best, c.dim());
    return best;
  }

 private:
  void build_lattice() {
    const std::uint32_t full = (1u << centers_.size()) - 1;
    std::vector<subspace> meets(full + 1, subspace::full(N_));
    lattice_.assign(full + 1, N_);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      meets[mask] = rest == 0 ? centers_[static_cast<std::size_t>(low)]
                              : meet(meets[rest], centers_[static_cast<std::size_t>(low)]);
      lattice_[mask] = meets[mask].dim();
    }
  }

  int N_;
  std::vector<subspace> centers_;
  std::vector<int> lattice_;
  bool generic_hint_;
};

/// Pre: 0 <= k <= N - 1 - max_i dim c_i, so every k-plane avoiding the
/// centers exists and all projections are defined.
inline void require_valid_k(const center_arrangement& arr, int k) {
  if (k < 0 || k > arr.ambient_dim() - 1 - arr.max_center_dim())
    throw error("k out of range for this arrangement (need 0 <= k <= N-1-max dim c_i)");
}

/// Set partition of {0,..,n-1}, blocks as bitmasks.
struct set_partition {
  std::vector<std::uint32_t> blocks;
};

/// Visits every set partition of {0,..,n-1} via restricted growth strings.
/// fn receives the blocks of one partition as a span of bitmasks.
template <typename Fn>
void for_each_partition(int n, Fn&& fn) {
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  std::vector<std::uint32_t> blocks(static_cast<std::size_t>(n), 0);
  for (;;) {
    int nblocks = 0;
    for (int i = 0; i < n; ++i) nblocks = std::max(nblocks, code[static_cast<std::size_t>(i)] + 1);
    std::fill(blocks.begin(), blocks.begin() + nblocks, 0u);
    for (int i = 0; i < n; ++i)
      blocks[static_cast<std::size_t>(code[static_cast<std::size_t>(i)])] |= 1u << i;
    fn(std::span<const std::uint32_t>(blocks.data(), static_cast<std::size_t>(nblocks)));
    // advance to the next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = 0;
      for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, code[static_cast<std::size_t>(j)]);
      if (code[static_cast<std::size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) return;
    ++code[static_cast<std::size_t>(i)];
    std::fill(code.begin() + i + 1, code.end(), 0);
  }
}

struct ell_value {
  int value = 0;
  set_partition witness;
};

/// Generic intersection dimension of the back-projected planes, maximized
/// in closed form over all set partitions of the view indices:
///   ell = N + max over partitions of ( -|blocks|*(N-k-1) + sum dim c_I ).
inline ell_value ell_closed_form(const center_arrangement& arr, int k,
                                 int partition_cap = default_partition_cap) {
  require_valid_k(arr, k);
  const int n = arr.size();
  if (n > partition_cap)
    throw partition_budget_exceeded("partition enumeration capped at n = " +
                                    std::to_string(partition_cap));
  const long slope = arr.ambient_dim() - k - 1;
  long best = 0;
  bool first = true;
  set_partition witness;
  for_each_partition(n, [&](std::span<const std::uint32_t> blocks) {
    long value = -static_cast<long>(blocks.size()) * slope;
    for (std::uint32_t mask : blocks) value += arr.lattice_dim(mask);
    if (first || value > best) {
      first = false;
      best = value;
      witness.blocks.assign(blocks.begin(), blocks.end());
    }
  });
  return ell_value{static_cast<int>(arr.ambient_dim() + best), std::move(witness)};
}

/// Two-view special case:
///   ell = max{ dim c_1^c_2 + k + 1, dim c_1 + dim c_2 + 2k + 2 - N }.
inline int ell_two_view(const center_arrangement& arr, int k) {
  if (arr.size() != 2) throw wrong_arity("two-view formula requires exactly 2 centers");
  require_valid_k(arr, k);
  const int meet_dim = arr.lattice_dim(0b11);
  const int d1 = arr.center(0).dim(), d2 = arr.center(1).dim();
  return std::max(meet_dim + k + 1, d1 + d2 + 2 * k + 2 - arr.ambient_dim());
}

/// Sampling oracle for ell: the minimum over seeded trials of
/// dim of the intersection of all c_i v P for random center-avoiding
/// k-planes P. Independent of the partition formula.
inline int ell_sampled(const center_arrangement& arr, int k, int trials, std::uint64_t seed,
                       long entry_bound = default_entry_bound,
                       int redraw_cap = default_redraw_cap) {
  require_valid_k(arr, k);
  if (trials < 1) throw error("ell_sampled needs at least one trial");
  int best = arr.ambient_dim() + 1;
  for (int t = 0; t < trials; ++t) {
    subspace p = subspace::empty(arr.ambient_dim());
    bool found = false;
    for (int attempt = 0; attempt < redraw_cap && !found; ++attempt) {
      p = sample_subspace(arr.ambient_dim(), k,
                          derive_seed(seed, static_cast<std::uint64_t>(t) * 1024 + attempt),
                          entry_bound);
      found = true;
      for (const subspace& c : arr.centers())
        if (!meet(p, c).is_empty()) {
          found = false;
          break;
        }
    }
    if (!found)
      throw sampling_exhausted("no center-avoiding k-plane found within the redraw budget");
    std::vector<subspace> back;
    back.reserve(arr.centers().size());
    for (const subspace& c : arr.centers()) back.push_back(join(c, p));
    best = std::min(best, meet_many(back).dim());
  }
  return best;
}

struct pseudo_disjoint_result {
  bool ok = true;
  std::uint32_t violating = 0;  // first violating index set when !ok
};

/// An arrangement acts as if its centers were disjoint iff for every
/// nonempty I with c_I nonempty:
///   sum_{i in I} dim c_i >= (|I|-1)(N-k-1) + dim c_I.
inline pseudo_disjoint_result is_pseudo_disjoint(const center_arrangement& arr, int k) {
  if (k < 0) throw error("k must be nonnegative");
  const int n = arr.size();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int meet_dim = arr.lattice_dim(mask);
    if (meet_dim < 0) continue;
    long lhs = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) lhs += arr.center(i).dim();
    const long rhs =
        static_cast<long>(std::popcount(mask) - 1) * (arr.ambient_dim() - k - 1) + meet_dim;
    if (lhs < rhs) return {false, mask};
  }
  return {true, 0};
}

/// Sum of h_i - k over the views; the total projective codimension budget.
inline long excess(const center_arrangement& arr, int k) {
  long sum = 0;
  for (int i = 0; i < arr.size(); ++i) sum += arr.image_dim(i) - k;
  return sum;
}

/// Closed form valid exactly on pseudo-disjoint arrangements:
///   ell = max{ k, N - sum(h_i - k) }.
inline int ell_pseudo_disjoint(const center_arrangement& arr, int k) {
  require_valid_k(arr, k);
  if (!is_pseudo_disjoint(arr, k).ok)
    throw not_pseudo_disjoint("arrangement is not pseudo-disjoint for this k");
  return static_cast<int>(std::max<long>(k, arr.ambient_dim() - excess(arr, k)));
}

/// Generic tuples determine the world plane uniquely iff ell = k.
inline bool is_triangulable(const center_arrangement& arr, int k,
                            int partition_cap = default_partition_cap) {
  return ell_closed_form(arr, k, partition_cap).value == k;
}

/// Dimension of the joint-image variety: (k+1)(N - ell).
inline long dim_multiview(const center_arrangement& arr, int k,
                          int partition_cap = default_partition_cap) {
  return static_cast<long>(k + 1) *
         (arr.ambient_dim() - ell_closed_form(arr, k, partition_cap).value);
}

/// Dimension of the unconstrained product of per-view plane families.
inline long dim_product_space(const center_arrangement& arr, int k) {
  long sum = 0;
  for (int i = 0; i < arr.size(); ++i)
    sum += static_cast<long>(k + 1) * (arr.image_dim(i) - k);
  return sum;
}

struct feasibility_value {
  long h_max = -1;
  std::vector<long> witness;
};

/// Independent route to the variety dimension: the largest h admitting a
/// vector m in N^n with sum m_i = h and, for every index set I,
/// sum_{i in I} m_i <= (k+1)(N - dim c_I - k - 1). Exhaustive search with
/// subset-constraint pruning; intentionally unscalable past the cap.
inline feasibility_value dim_via_feasibility(const center_arrangement& arr, int k,
                                             int feasibility_cap = default_feasibility_cap) {
  require_valid_k(arr, k);
  const int n = arr.size();
  if (n > feasibility_cap)
    throw feasibility_budget_exceeded("feasibility search capped at n = " +
                                      std::to_string(feasibility_cap));
  const long t = k + 1;
  const std::uint32_t full = (1u << n) - 1;
  std::vector<long> bound(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask)
    bound[mask] = t * (arr.ambient_dim() - arr.lattice_dim(mask) - k - 1);
  std::vector<long> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + bound[1u << i];
  std::vector<long> m(static_cast<std::size_t>(n), 0);
  feasibility_value out;
  auto rec = [&](auto&& self, int i, long sum) -> void {
    if (sum + suffix[static_cast<std::size_t>(i)] <= out.h_max) return;  // cannot improve
    if (i == n) {
      out.h_max = sum;
      out.witness = m;
      return;
    }
    for (long v = bound[1u << i]; v >= 0; --v) {
      m[static_cast<std::size_t>(i)] = v;
      bool ok = true;
      for (std::uint32_t rest = 0; rest < (1u << i) && ok; ++rest) {
        const std::uint32_t mask = rest | (1u << i);
        long s = 0;
        for (int b = 0; b <= i; ++b)
          if (mask & (1u << b)) s += m[static_cast<std::size_t>(b)];
        if (s > bound[mask]) ok = false;
      }
      if (ok) self(self, i + 1, sum + v);
    }
    m[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

/// The joint image fills the whole product of per-view families iff the
/// arrangement is pseudo-disjoint and N - sum(h_i - k) >= k; "proper" means
/// it does not, i.e. the variety actually constrains image tuples.
inline bool is_proper(const center_arrangement& arr, int k) {
  require_valid_k(arr, k);
  return !(is_pseudo_disjoint(arr, k).ok && arr.ambient_dim() - excess(arr, k) >= k);
}

/// Expected dimension of the family of s-planes meeting each of n generic
/// centers of image dimension h_i in at least s-k-1 dimensions:
///   max{ -1, (s+1)(N-s) - (s-k) sum(h_i - k) }.
inline long schubert_locus_dim(long ambient, const std::vector<int>& image_dims, long k, long s) {
  if (k < 0 || s < k) throw error("schubert_locus_dim requires 0 <= k <= s");
  long ex = 0;
  for (int hi : image_dims) ex += hi - k;
  const long value = (s + 1) * (ambient - s) - (s - k) * ex;
  return std::max<long>(-1, value);
}

/// Largest s for which the generic incidence family above is nonempty,
/// found by exact integer search on s^2 - (N-1-sum(h_i-k))s <= N + sum k(h_i-k)
/// (no floating point; the square-root form of this threshold is recovered
/// exactly by scanning upward from s = 0).
inline long tau(long ambient, const std::vector<int>& image_dims, long k) {
  if (k < 0) throw error("tau requires k >= 0");
  long linear = 0, rhs = ambient;
  for (int hi : image_dims) {
    if (hi > ambient) throw error("image dimension exceeds ambient dimension");
    if (hi < k) throw error("image dimension below feature dimension");
    linear += hi - k;
    rhs += k * (hi - k);
  }
  const long a = ambient - 1 - linear;
  long s = 0;
  while ((s + 1) * (s + 1) - a * (s + 1) <= rhs) ++s;
  return s;
}

enum class upsilon_method { exact_generic, lower_bound };

struct upsilon_value {
  int value = 0;
  upsilon_method method = upsilon_method::lower_bound;
};

/// Maximal intersection dimension over the whole variety. For generic
/// arrangements this is exactly min{ tau, dim c_i + k + 1 }. Otherwise no
/// closed form is available and a certified lower bound is returned: the
/// best dim V over candidates V = (join of a center subset), optionally
/// joined with sampled k-planes, subject to V meeting every center in at
/// least dim V - k - 1 dimensions.
inline upsilon_value upsilon(const center_arrangement& arr, int k, bool assume_generic,
                             std::uint64_t seed = 0, long entry_bound = default_entry_bound,
                             int samples_per_subset = 4) {
  require_valid_k(arr, k);
  const int n = arr.size();
  const int cap_dim = arr.min_center_dim() + k + 1;
  if (assume_generic) {
    const long t = tau(arr.ambient_dim(), arr.image_dims(), k);
    return {static_cast<int>(std::min<long>(t, cap_dim)), upsilon_method::exact_generic};
  }
  int best = k;  // any k-plane meets each center in >= -1 dimensions
  auto consider = [&](const subspace& v) {
    const int d = v.dim();
    if (d <= best || d > cap_dim) return;
    for (const subspace& c : arr.centers())
      if (meet(v, c).dim() < d - k - 1) return;
    best = d;
  };
  const std::uint32_t full = (1u << n) - 1;
  std::vector<subspace> joins(full + 1, subspace::empty(arr.ambient_dim()));
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    joins[mask] = join(joins[mask & (mask - 1)], arr.center(low));
    consider(joins[mask]);
    for (int s = 0; s < samples_per_subset; ++s) {
      subspace p = sample_subspace(arr.ambient_dim(), k,
                                   derive_seed(seed, static_cast<std::uint64_t>(mask) * 131 + s),
                                   entry_bound);
      consider(join(joins[mask], p));
    }
  }
  return {best, upsilon_method::lower_bound};
}

enum class tristate { yes, no, unknown };

struct analysis_options {
  std::uint64_t seed = 0;
  int trials = 10;
  int partition_cap = default_partition_cap;
  int feasibility_cap = default_feasibility_cap;
  long entry_bound = default_entry_bound;
  bool assume_generic = false;
};

/// Everything the library can say about one (arrangement, k) pair, with the
/// built-in cross-checks between independent routes. `consistent` is false
/// only when two routes that must agree did not (an implementation bug or
/// a sampling collision); both values are kept for inspection.
struct analysis_report {
  int ambient = 0;
  int views = 0;
  int k = 0;
  int ell = 0;
  set_partition ell_witness;
  int ell_sampled_value = 0;
  long dim_variety = 0;
  long dim_product = 0;
  bool has_feasibility = false;
  feasibility_value feasibility;
  bool pseudo_disjoint = false;
  std::uint32_t pd_violating = 0;
  bool triangulable = false;
  bool proper = false;
  long tau_value = 0;
  upsilon_value upsilon_result;
  tristate super_triangulable = tristate::unknown;
  bool consistent = true;
  std::vector<std::string> inconsistencies;
  analysis_options options;
};

inline analysis_report analyze(const center_arrangement& arr, int k,
                               const analysis_options& opt = {}) {
  analysis_report rep;
  rep.options = opt;
  rep.ambient = arr.ambient_dim();
  rep.views = arr.size();
  rep.k = k;

  const ell_value ell = ell_closed_form(arr, k, opt.partition_cap);
  rep.ell = ell.value;
  rep.ell_witness = ell.witness;
  rep.ell_sampled_value =
      ell_sampled(arr, k, std::max(opt.trials, 1), derive_seed(opt.seed, 1), opt.entry_bound);
  if (rep.ell_sampled_value != rep.ell)
    rep.inconsistencies.push_back("sampled ell " + std::to_string(rep.ell_sampled_value) +
                                  " != closed form " + std::to_string(rep.ell));

  rep.dim_variety = static_cast<long>(k + 1) * (arr.ambient_dim() - rep.ell);
  rep.dim_product = dim_product_space(arr, k);

  if (arr.size() <= opt.feasibility_cap) {
    rep.has_feasibility = true;
    rep.feasibility = dim_via_feasibility(arr, k, opt.feasibility_cap);
    if (rep.feasibility.h_max != rep.dim_variety)
      rep.inconsistencies.push_back("feasibility dimension " +
                                    std::to_string(rep.feasibility.h_max) + " != (k+1)(N-ell) " +
                                    std::to_string(rep.dim_variety));
  }

  const pseudo_disjoint_result pd = is_pseudo_disjoint(arr, k);
  rep.pseudo_disjoint = pd.ok;
  rep.pd_violating = pd.violating;
  if (pd.ok) {
    const int simple = static_cast<int>(std::max<long>(k, arr.ambient_dim() - excess(arr, k)));
    if (simple != rep.ell)
      rep.inconsistencies.push_back("pseudo-disjoint formula " + std::to_string(simple) +
                                    " != closed form " + std::to_string(rep.ell));
  }

  rep.triangulable = rep.ell == k;
  rep.proper = !(pd.ok && arr.ambient_dim() - excess(arr, k) >= k);
  rep.tau_value = tau(arr.ambient_dim(), arr.image_dims(), k);
  rep.upsilon_result = upsilon(arr, k, opt.assume_generic || arr.generic_hint(),
                               derive_seed(opt.seed, 2), opt.entry_bound);

  if (rep.upsilon_result.method == upsilon_method::exact_generic) {
    rep.super_triangulable = rep.upsilon_result.value == k ? tristate::yes : tristate::no;
    if (rep.upsilon_result.value < rep.ell)
      rep.inconsistencies.push_back("exact upsilon below ell (non-generic input?)");
  } else {
    rep.super_triangulable =
        rep.upsilon_result.value > k ? tristate::no : tristate::unknown;
  }

  rep.consistent = rep.inconsistencies.empty();
  return rep;
}

}  // namespace mvv
