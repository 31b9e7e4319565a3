#include <doctest.h>

#include <cmath>

#include "vbrick/verlinde.hpp"

using namespace vbrick;

TEST_CASE("fusion data shape") {
  const FusionData fd = make_fusion_data(4);
  REQUIRE(fd.matrices.size() == 5);
  // N0 is the identity, every N_i is symmetric with 0/1 entries
  for (int i = 0; i <= 4; ++i)
    for (int r = 0; r <= 4; ++r)
      for (int c = 0; c <= 4; ++c) {
        CHECK(fd.matrices[i][r][c] == fd.matrices[i][c][r]);
        CHECK((fd.matrices[i][r][c] == 0 || fd.matrices[i][r][c] == 1));
        if (i == 0) CHECK(fd.matrices[0][r][c] == (r == c ? 1 : 0));
      }
  // handle matrix is symmetric with positive diagonal
  for (int r = 0; r <= 4; ++r) {
    CHECK(fd.handle[r][r] > 0);
    for (int c = 0; c <= 4; ++c) CHECK(fd.handle[r][c] == fd.handle[c][r]);
  }
}

TEST_CASE("fusion matrices commute (k <= 40)") {
  for (int k = 1; k <= 40; ++k) {
    const FusionData fd = make_fusion_data(k);
    const int n = k + 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            long ij = 0, ji = 0;
            for (int l = 0; l < n; ++l) {
              ij += fd.matrices[i][r][l] * fd.matrices[j][l][c];
              ji += fd.matrices[j][r][l] * fd.matrices[i][l][c];
            }
            CHECK(ij == ji);
          }
  }
}

TEST_CASE("dimension examples") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(verlinde_dim(1, k) == k + 1);
    CHECK(verlinde_dim_twisted(1, k) == (k % 2 == 0 ? 1 : 0));
  }
  CHECK(verlinde_dim(2, 2) == 10);
  CHECK(verlinde_dim_twisted(2, 2) == 6);
  CHECK(verlinde_dim(2, 4) == 35);
  CHECK(verlinde_dim_twisted(2, 4) == 19);
  CHECK(verlinde_dim(2, 1) == 4);
  // level-2 closed forms
  for (int g = 1; g <= 8; ++g) {
    const Integer half = pow2(static_cast<unsigned long>(g - 1));
    const Integer full = pow2(static_cast<unsigned long>(g));
    CHECK(verlinde_dim(g, 2) == half * (full + 1));
    CHECK(verlinde_dim_twisted(g, 2) == half * (full - 1));
  }
}

TEST_CASE("involution traces") {
  CHECK(involution_trace(2, 3) == 0);
  CHECK(involution_trace(2, 2) == 2);
  CHECK(involution_trace(3, 4) == 9);
  CHECK(twisted_involution_trace(2, 2) == -2);
  CHECK(twisted_involution_trace(2, 4) == 3);
  for (int k = 2; k <= 10; k += 2) CHECK(twisted_involution_trace(1, k) == ((k / 2) % 2 ? -1 : 1));
  CHECK_THROWS_AS(twisted_involution_trace(2, 3), std::domain_error);
  // character bounds
  for (int g = 1; g <= 5; ++g)
    for (int k = 1; k <= 16; ++k) {
      CHECK(abs(involution_trace(g, k)) <= verlinde_dim(g, k));
      if (k % 2 == 0)
        CHECK(abs(twisted_involution_trace(g, k)) <= verlinde_dim_twisted(g, k));
    }
}

TEST_CASE("twisted dimension vanishes at odd levels via the exact route") {
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= 15; k += 2) CHECK(verlinde_dim_twisted(g, k) == 0);
}

TEST_CASE("oracle examples") {
  const OracleResult a = verlinde_oracle(2, 2, false);
  CHECK(a.value == 10);
  CHECK(a.residual < 1e-9);
  const OracleResult b = verlinde_oracle(2, 4, true);
  CHECK(b.value == 19);
  CHECK(b.residual < 1e-9);
  const OracleResult c = verlinde_oracle(4, 10, false);
  CHECK(c.value == verlinde_dim(4, 10));
  // explicit precision below the floor is rejected
  CHECK_THROWS_AS(verlinde_oracle(2, 2, false, 32), std::invalid_argument);
}

TEST_CASE("oracle agrees with the fusion traces (g <= 4, k <= 14)") {
  for (int g = 1; g <= 4; ++g)
    for (int k = 1; k <= 14; ++k) {
      const FusionData fd = make_fusion_data(k);
      const OracleResult u = verlinde_oracle(g, k, false);
      const OracleResult t = verlinde_oracle(g, k, true);
      CHECK(u.value == verlinde_dim(fd, g));
      CHECK(t.value == verlinde_dim_twisted(fd, g));
      CHECK(u.residual < 1e-6);
      CHECK(t.residual < 1e-6);
    }
}

TEST_CASE("sin vectors diagonalize the fusion matrices") {
  const double pi = std::acos(-1.0);
  for (int k = 1; k <= 20; ++k) {
    const FusionData fd = make_fusion_data(k);
    const int n = k + 1;
    for (int j = 0; j < n; ++j) {
      std::vector<double> v(n);
      for (int i = 0; i < n; ++i) v[i] = std::sin((i + 1.0) * (j + 1.0) * pi / (k + 2.0));
      for (int i = 0; i < n; ++i) {
        const double eigen = v[i] / v[0];
        for (int r = 0; r < n; ++r) {
          double acc = 0;
          for (int c = 0; c < n; ++c) acc += fd.matrices[i][r][c] * v[c];
          CHECK(std::abs(acc - eigen * v[r]) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("root-of-unity normalization identity") {
  CHECK(root_of_unity_identity(1, SignConvention(1)));
  CHECK(root_of_unity_identity(2, SignConvention(-1)));
  for (int k = 1; k <= 200; ++k)
    for (int e : {1, -1}) CHECK(root_of_unity_identity(k, SignConvention(e)));
}
