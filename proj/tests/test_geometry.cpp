#include "testutil.hpp"

#include "gysin/geometry.hpp"

using namespace gysin;
using gysin::testing::expect_error;

TEST_CASE("flag geometry construction bounds") {
    auto a = FlagGeometry::flag_a(4, {2});
    CHECK(a.family() == Family::a_flag);
    CHECK(a.rank_e() == 4);
    CHECK(a.d() == 2);
    CHECK(a.twist() == Twist::zero);

    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_a(4, {4}); });
    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_a(4, {2, 2}); });
    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_a(4, {}); });
    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_a(1, {1}); });

    auto c = FlagGeometry::flag_c(2, {2});
    CHECK(c.rank_e() == 4);
    CHECK(c.twist() == Twist::formal);
    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_c(2, {3}); });

    auto bd = FlagGeometry::flag_bd(5, {2});
    CHECK(bd.n() == 2);
    CHECK(bd.rank_e() == 5);
    expect_error(ErrorCode::geometry, [] { FlagGeometry::flag_bd(5, {3}); });

    auto kl = FlagGeometry::kl_a(4, StrictPartition({3, 1}));
    CHECK(kl.is_kl());
    CHECK(kl.d() == 2);
    expect_error(ErrorCode::geometry,
                 [] { FlagGeometry::kl_a(2, StrictPartition({3, 1})); });
}

TEST_CASE("symplectic admissibility") {
    CHECK(FlagGeometry::kl_c(2, StrictPartition({4, 3})).rank_e() == 4);
    CHECK(FlagGeometry::kl_c(2, StrictPartition({4, 2})).d() == 2);
    // mu_i + mu_j = 2n + 1 is rejected with the offending pair named
    try {
        FlagGeometry::kl_c(2, StrictPartition({4, 1}));
        FAIL_CHECK("expected inadmissible mu to be rejected");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::geometry);
        CHECK(std::string(e.what()).find("2n + 1") != std::string::npos);
    }
    expect_error(ErrorCode::geometry,
                 [] { FlagGeometry::kl_c(2, StrictPartition({5, 2})); });
}

TEST_CASE("lambda to nu conversions, type A") {
    CHECK(nu_from_lambda_a(Partition(), 4, 2) == StrictPartition({4, 3}));
    CHECK(nu_from_lambda_a(Partition({2, 1}), 4, 2) == StrictPartition({3, 1}));
    CHECK(nu_from_lambda_a(Partition({2, 2}), 4, 2) == StrictPartition({2, 1}));
    expect_error(ErrorCode::geometry,
                 [] { nu_from_lambda_a(Partition({3}), 4, 2); });
    expect_error(ErrorCode::geometry,
                 [] { nu_from_lambda_a(Partition({1, 1, 1}), 4, 2); });
}

TEST_CASE("lambda to nu conversions, type C") {
    CHECK(nu_from_lambda_c(Partition(), 2, 2) == StrictPartition({4, 3}));
    CHECK(nu_from_lambda_c(Partition({1}), 2, 2) == StrictPartition({4, 2}));
    // nu = (3,2) sums to 2n + 1
    expect_error(ErrorCode::geometry,
                 [] { nu_from_lambda_c(Partition({1, 1}), 2, 2); });
}

TEST_CASE("conversion roundtrips") {
    // every lambda in the box comes back unchanged
    for (int n = 2; n <= 7; ++n) {
        for (int d = 1; d < n; ++d) {
            for (int a = 0; a <= n - d; ++a) {
                for (int b = 0; b <= a; ++b) {
                    Partition lambda = d >= 2 ? Partition({a, b}) : Partition({a});
                    if (!lambda.fits_in_box(d, n - d)) continue;
                    StrictPartition nu = nu_from_lambda_a(lambda, n, d);
                    // nu_1 = n - lambda_d <= n and nu_i >= d + 1 - i
                    CHECK(nu.part(0) == n - lambda.part(d - 1));
                    for (int i = 1; i <= d; ++i) {
                        CHECK(nu.part(i - 1) <= n);
                        CHECK(nu.part(i - 1) >= d + 1 - i);
                    }
                    CHECK(lambda_from_nu_a(nu, n) == lambda);
                }
            }
        }
    }
    CHECK(lambda_from_nu_c(nu_from_lambda_c(Partition({2, 1}), 3, 2), 3) ==
          Partition({2, 1}));
}

TEST_CASE("extraction exponents per family") {
    CHECK(exponents_for(FlagGeometry::flag_a(4, {2})) == std::vector<int>{3, 2});
    CHECK(exponents_for(FlagGeometry::flag_a(3, {1, 2})) == std::vector<int>{2, 2});
    CHECK(exponents_for(FlagGeometry::flag_a(5, {1, 3})) ==
          std::vector<int>{4, 3, 4});
    CHECK(exponents_for(FlagGeometry::flag_c(2, {2})) == std::vector<int>{3, 2});
    CHECK(exponents_for(FlagGeometry::flag_bd(7, {1, 3})) ==
          std::vector<int>{6, 5, 6});
    CHECK(exponents_for(FlagGeometry::kl_a(4, StrictPartition({4, 2}))) ==
          std::vector<int>{3, 1});
    // full flag: all exponents equal rank - 1
    CHECK(exponents_for(FlagGeometry::flag_a(4, {1, 2, 3})) ==
          std::vector<int>{3, 3, 3});
}

TEST_CASE("fiber dimensions") {
    CHECK(fiber_dim(FlagGeometry::flag_a(4, {2})) == 4);
    CHECK(fiber_dim(FlagGeometry::flag_c(2, {2})) == 3);
    CHECK(fiber_dim(FlagGeometry::flag_bd(4, {1})) == 2);
    // Grassmann bundles: d(n - d) for all small cases
    for (int n = 2; n <= 7; ++n) {
        for (int d = 1; d < n; ++d) {
            CHECK(fiber_dim(FlagGeometry::flag_a(n, {d})) == d * (n - d));
        }
    }
    // KL towers: sum of (mu_i - i)
    for (const auto& mu : {std::vector<int>{3, 1}, {4, 2, 1}, {5, 3}}) {
        int expect = 0;
        for (size_t i = 0; i < mu.size(); ++i) {
            expect += mu[i] - static_cast<int>(i) - 1;
        }
        CHECK(fiber_dim(FlagGeometry::kl_a(5, StrictPartition(mu))) == expect);
    }
    // the KL model of the full Grassmannian has the Grassmannian fiber dim
    CHECK(fiber_dim(FlagGeometry::kl_a(4, StrictPartition({4, 3}))) ==
          fiber_dim(FlagGeometry::flag_a(4, {2})));
}

TEST_CASE("geometry descriptions") {
    CHECK(FlagGeometry::flag_a(4, {2}).str() == "A(n=4, dims=(2))");
    CHECK(FlagGeometry::flag_c(2, {1, 2}, Twist::formal, BaseMode::trivial).str() ==
          "C(n=2, dims=(1,2), twisted, trivial base)");
    CHECK(FlagGeometry::kl_c(3, StrictPartition({6, 2}), Twist::zero).str() ==
          "KL_C(n=3, mu=(6,2))");
    CHECK(FlagGeometry::flag_bd(6, {3}, Twist::zero).str() ==
          "BD(n=3, rank=6, dims=(3))");
}
