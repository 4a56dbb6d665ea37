#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvv {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or JSON document.
struct parse_error : error {
  using error::error;
};

/// A projection was requested for a subspace that meets the camera center.
struct center_collision : error {
  std::size_t camera_index;  // 1-based; 0 when no specific camera is known
  explicit center_collision(std::size_t index = 0)
      : error(index == 0
                  ? std::string("subspace meets the camera center")
                  : "subspace meets the center of camera " + std::to_string(index)),
        camera_index(index) {}
};

/// A candidate back-projected plane does not contain the camera center.
struct not_through_center : error {
  not_through_center() : error("plane does not contain the camera center") {}
};

/// An operation restricted to a fixed number of views got a different count.
struct wrong_arity : error {
  using error::error;
};

/// The pseudo-disjointness precondition of a closed form does not hold.
struct not_pseudo_disjoint : error {
  using error::error;
};

/// Too many views for exhaustive set-partition enumeration.
struct partition_budget_exceeded : error {
  using error::error;
};

/// Too many views for the exhaustive feasibility search.
struct feasibility_budget_exceeded : error {
  using error::error;
};

/// Bounded redraws failed to produce a subspace avoiding all centers.
struct sampling_exhausted : error {
  using error::error;
};

}  // namespace mvv
