#include <random>

#include <gtest/gtest.h>

#include "mhs/lattice.hpp"

using namespace mhs;

namespace {

LatticePolytope hexagon_old() { return hull({{1, 0}, {0, 2}, {-1, 2}, {-2, 1}, {-2, 0}, {0, -1}}); }

std::vector<int> face_counts(const LatticePolytope& P) {
  std::vector<int> c(P.dim() + 2, 0);
  for (int f = 0; f < P.num_faces(); ++f) ++c[P.face_dim(f) + 1];
  return c;
}

// oracle: scan the bounding box of the parallelepiped and keep points whose
// coordinates in the ray basis lie in [0,1)
std::int64_t count_box_parallelepiped(const std::vector<IVec>& rays) {
  int N = static_cast<int>(rays[0].size());
  IVec lo(N, 0), hi(N, 0);
  for (const auto& r : rays)
    for (int i = 0; i < N; ++i) {
      if (r[i] < 0) lo[i] += r[i];
      if (r[i] > 0) hi[i] += r[i];
    }
  std::int64_t count = 0;
  IVec y = lo;
  while (true) {
    try {
      auto lam = solve_in_span(rays, y);
      bool ok = std::all_of(lam.begin(), lam.end(), [](const Rational& a) { return a >= 0 && a < 1; });
      if (ok) ++count;
    } catch (const InvalidInput&) {
    }
    int k = 0;
    while (k < N && y[k] == hi[k]) {
      y[k] = lo[k];
      ++k;
    }
    if (k == N) break;
    ++y[k];
  }
  return count;
}

}  // namespace

TEST(Hull, Square) {
  auto P = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(P.vertices().size(), 4u);
  EXPECT_EQ(face_counts(P), (std::vector<int>{1, 4, 4, 1}));
  EXPECT_TRUE(P.face_poset()->interval_is_eulerian(P.empty_face(), P.top_face()));
}

TEST(Hull, CollinearAndPoint) {
  auto S = hull({{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(S.dim(), 1);
  EXPECT_EQ(S.vertices(), (std::vector<IVec>{{0, 0}, {2, 0}}));
  auto pt = hull({{3, 4, 5}});
  EXPECT_EQ(pt.dim(), 0);
  EXPECT_EQ(pt.num_faces(), 2);
  EXPECT_EQ(pt.normalized_volume(), 1);
}

TEST(Hull, DoubleFibreSupport) {
  // support of the running two-variable example plus the origin
  auto P = hull({{0, 0}, {5, 0}, {4, 2}, {1, 5}, {0, 5}, {1, 2}, {2, 1}});
  EXPECT_EQ(P.vertices(), (std::vector<IVec>{{0, 0}, {0, 5}, {1, 5}, {4, 2}, {5, 0}}));
}

TEST(LatticePoints, Counts) {
  auto sq = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_EQ(lattice_points(sq, 1).size(), 4u);
  auto H = hexagon_old();
  EXPECT_EQ(lattice_points(H, 0), (std::vector<IVec>{{0, 0}}));
  for (int m = 1; m <= 4; ++m) EXPECT_EQ(static_cast<int>(lattice_points(H, m).size()), 6 * m * m + 3 * m + 1);
  EXPECT_EQ(interior_lattice_points(H, 1), (std::vector<IVec>{{-1, 0}, {-1, 1}, {0, 0}, {0, 1}}));
  // Ehrhart reciprocity for the unweighted count
  for (int m = 1; m <= 3; ++m)
    EXPECT_EQ(static_cast<int>(interior_lattice_points(H, m).size()), 6 * m * m - 3 * m + 1);
}

TEST(LatticePoints, LowerDimensional) {
  auto seg = hull({{0, 0, 0}, {2, 4, 6}});
  EXPECT_EQ(seg.dim(), 1);
  EXPECT_EQ(lattice_points(seg, 1).size(), 3u);
  EXPECT_EQ(lattice_points(seg, 2).size(), 5u);
  EXPECT_EQ(interior_lattice_points(seg, 1), (std::vector<IVec>{{1, 2, 3}}));
  EXPECT_EQ(seg.normalized_volume(), 2);
  auto tri = hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(tri.normalized_volume(), 1);
  EXPECT_EQ(lattice_points(tri, 2).size(), 6u);
}

TEST(Volume, Examples) {
  EXPECT_EQ(hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).normalized_volume(), 2);
  EXPECT_EQ(hexagon_old().normalized_volume(), 12);
  EXPECT_EQ(hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 3}}).normalized_volume(), 3);
  // pulling triangulation covers the cube
  auto cube = hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(cube.normalized_volume(), 6);
  EXPECT_EQ(face_counts(cube), (std::vector<int>{1, 8, 12, 6, 1}));
}

TEST(Sublattice, Index) {
  EXPECT_EQ(sublattice_index({{1, 0}, {0, 1}}), 1);
  EXPECT_EQ(sublattice_index({{2, 0}, {0, 3}}), 6);
  EXPECT_EQ(sublattice_index({{1, 1}, {1, -1}}), 2);
  EXPECT_EQ(sublattice_index({{2, 4, 6}}), 2);
  EXPECT_THROW(sublattice_index({{1, 2}, {2, 4}}), DependentVectors);
}

TEST(Box, StandardSimplexAndOracle) {
  auto c = cone_over({{0, 0}, {1, 0}, {0, 1}});
  auto b = box_points(c);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].coordinates, (IVec{0, 0, 0}));
  auto c2 = cone_over({{0, 0}, {2, 0}, {0, 3}});
  EXPECT_EQ(box_points(c2).size(), 6u);
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int it = 0; it < 40; ++it) {
    std::vector<IVec> verts;
    for (int i = 0; i < 3; ++i) verts.push_back({d(rng), d(rng)});
    if (affine_dimension(verts) < 2) continue;
    auto cone = cone_over(verts);
    auto bp = box_points(cone);
    EXPECT_EQ(static_cast<std::int64_t>(bp.size()), count_box_parallelepiped(cone.rays));
    Integer vol = hull(verts).normalized_volume();
    EXPECT_EQ(Integer(bp.size()), vol);
    for (const auto& p : bp) {
      IVec s(3, 0);
      Rational h = 0;
      for (int i = 0; i < 3; ++i) {
        EXPECT_TRUE(p.barycentric[i] >= 0 && p.barycentric[i] < 1);
        h += p.barycentric[i];
      }
      EXPECT_EQ(Rational(p.height), h);
    }
  }
  // lower-dimensional cone in Z^4
  auto c3 = cone_over({{0, 0, 0}, {2, 2, 0}});
  EXPECT_EQ(box_points(c3).size(), 2u);
}
