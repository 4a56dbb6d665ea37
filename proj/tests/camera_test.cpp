#include "mvv/camera.hpp"

#include <gtest/gtest.h>

#include "mvv/generate.hpp"
#include "mvv/verify.hpp"

namespace {

using mvv::camera_matrix;
using mvv::image_plane;
using mvv::matrix;
using mvv::subspace;

camera_matrix coordinate_camera(int ambient, int image_dim) {
  // [I | 0]: kernel is the span of the trailing coordinate points
  matrix m(static_cast<std::size_t>(image_dim) + 1, static_cast<std::size_t>(ambient) + 1);
  for (int i = 0; i <= image_dim; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
  return camera_matrix(ambient, m);
}

TEST(Camera, RejectsBadShapes) {
  EXPECT_THROW(camera_matrix(2, matrix(4, 3)), mvv::error);  // h > N
  matrix rank_deficient(2, 4);
  rank_deficient(0, 0) = 1;
  rank_deficient(1, 0) = 2;
  EXPECT_THROW(camera_matrix(3, rank_deficient), mvv::error);
}

TEST(Center, CoordinateProjection) {
  camera_matrix cam = coordinate_camera(5, 2);
  EXPECT_EQ(cam.center().dim(), 2);  // N-h-1 = 5-2-1
  matrix expected(3, 6);
  expected(0, 3) = 1;
  expected(1, 4) = 1;
  expected(2, 5) = 1;
  EXPECT_EQ(cam.center(), subspace::span_rows(5, expected));
}

TEST(Center, ClassicalCameraHasPointCenter) {
  camera_matrix cam = mvv::random_camera(3, 2, 99, 20);
  EXPECT_EQ(cam.center().dim(), 0);
}

TEST(Center, KernelPropertyOnWideCamera) {
  // 3x6 camera: three image coordinates on P^5, center of dimension 2
  camera_matrix cam = mvv::random_camera(5, 2, 100, 20);
  EXPECT_EQ(cam.center().dim(), 2);
  matrix product = cam.entries() * cam.center().basis().transposed();
  for (std::size_t r = 0; r < product.rows(); ++r)
    for (std::size_t c = 0; c < product.cols(); ++c) EXPECT_EQ(product(r, c), 0);
}

TEST(Project, PointMapsToItsImage) {
  camera_matrix cam = coordinate_camera(3, 2);
  subspace x = subspace::point(3, {1, 2, 3, 4});
  image_plane img = mvv::project(cam, x);
  EXPECT_EQ(img.plane, subspace::point(2, {1, 2, 3}));
}

TEST(Project, CenterCollisionIsRejected) {
  camera_matrix cam = coordinate_camera(3, 2);
  subspace center_point = subspace::point(3, {0, 0, 0, 1});
  EXPECT_THROW(mvv::project(cam, center_point), mvv::center_collision);
  // a line through the center collides as well
  subspace through = mvv::join(center_point, subspace::point(3, {1, 0, 0, 0}));
  EXPECT_THROW(mvv::project(cam, through), mvv::center_collision);
}

TEST(Project, ImageDimensionIsExact) {
  mvv::prng rng(51);
  for (int i = 0; i < 50; ++i) {
    camera_matrix cam = mvv::random_camera(4, 2, rng.next(), 20);
    subspace p = mvv::sample_subspace(4, 1, rng.next(), 20);
    if (!mvv::meet(p, cam.center()).is_empty()) continue;
    EXPECT_EQ(mvv::project(cam, p).k(), 1);
  }
}

TEST(BackProject, FullImagePlaneGivesWholeWorld) {
  camera_matrix cam = coordinate_camera(4, 2);
  image_plane full{subspace::full(2)};
  EXPECT_EQ(mvv::back_project(cam, full), subspace::full(4));
}

TEST(BackProject, ClassicalImagePointGivesLineThroughCenter) {
  camera_matrix cam = mvv::random_camera(3, 2, 7, 20);
  image_plane x{mvv::sample_subspace(2, 0, 8, 20)};
  subspace line = mvv::back_project(cam, x);
  EXPECT_EQ(line.dim(), 1);
  EXPECT_TRUE(mvv::contains(line, cam.center()));
}

TEST(BackProject, ComposedWithProjectGivesJoinWithCenter) {
  mvv::prng rng(52);
  for (int i = 0; i < 50; ++i) {
    camera_matrix cam = mvv::random_camera(4, 3, rng.next(), 20);
    subspace p = mvv::sample_subspace(4, 1, rng.next(), 20);
    if (!mvv::meet(p, cam.center()).is_empty()) continue;
    EXPECT_EQ(mvv::back_project(cam, mvv::project(cam, p)), mvv::join(cam.center(), p));
  }
}

TEST(ProjectBackplane, FactorsThroughJoin) {
  camera_matrix cam = mvv::random_camera(4, 2, 53, 20);
  subspace p = mvv::sample_subspace(4, 0, 54, 20);
  ASSERT_TRUE(mvv::meet(p, cam.center()).is_empty());
  subspace h = mvv::join(cam.center(), p);
  EXPECT_EQ(mvv::project_backplane(cam, h).plane, mvv::project(cam, p).plane);
}

TEST(ProjectBackplane, RequiresThePlaneThroughTheCenter) {
  camera_matrix cam = coordinate_camera(3, 2);
  subspace off_center_line = mvv::join(subspace::point(3, {1, 0, 0, 0}),
                                       subspace::point(3, {0, 1, 0, 0}));
  EXPECT_THROW(mvv::project_backplane(cam, off_center_line), mvv::not_through_center);
}

TEST(ProjectBackplane, FullSpaceMapsToFullImage) {
  camera_matrix cam = mvv::random_camera(4, 2, 55, 20);
  EXPECT_EQ(mvv::project_backplane(cam, subspace::full(4)).plane, subspace::full(2));
}

TEST(MultiviewIdentities, ClassicalDims) {
  camera_matrix cam = mvv::random_camera(3, 2, 56, 20);
  EXPECT_TRUE(mvv::multiview_identities_check(cam, 0));
  EXPECT_TRUE(mvv::multiview_identities_check(cam, 1));
  image_plane pt{mvv::sample_subspace(2, 0, 57)};
  image_plane ln{mvv::sample_subspace(2, 1, 58)};
  EXPECT_EQ(mvv::back_project(cam, pt).dim(), 1);
  EXPECT_EQ(mvv::back_project(cam, ln).dim(), 2);
}

TEST(CameraDictionary, RandomizedSweep) {
  EXPECT_EQ(mvv::check_camera_dictionary(50, 2024).failures, 0);
}

}  // namespace
