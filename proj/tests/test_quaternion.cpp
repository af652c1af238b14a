#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>

#include "klab/linear_maps.hpp"
#include "klab/point.hpp"
#include "klab/quaternion.hpp"
#include "klab/rng.hpp"

using namespace klab;

namespace {

Quaternion quat(double w, double x, double y, double z) { return {w, x, y, z}; }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

QuaternionValuedLinearMap map_k_z1() {
    // A(x) = k z1 = x0 k + x1 j
    QuaternionValuedLinearMap A;
    A.m[2] = {0.0, 1.0, 0.0, 0.0};
    A.m[3] = {1.0, 0.0, 0.0, 0.0};
    return A;
}

QuaternionValuedLinearMap map_conj_z1() {
    QuaternionValuedLinearMap A;
    A.m[0] = {1.0, 0.0, 0.0, 0.0};
    A.m[1] = {0.0, -1.0, 0.0, 0.0};
    return A;
}

QuaternionValuedLinearMap map_conj_z2() {
    QuaternionValuedLinearMap A;
    A.m[0] = {0.0, 0.0, 1.0, 0.0};
    A.m[1] = {0.0, 0.0, 0.0, -1.0};
    return A;
}

} // namespace

TEST_CASE("multiplication table") {
    const Quaternion i = quat(0, 1, 0, 0), j = quat(0, 0, 1, 0), k = quat(0, 0, 0, 1);
    CHECK(qmul(i, j).z == 1.0);
    CHECK(qmul(j, k).x == 1.0);
    CHECK(qmul(k, i).y == 1.0);
    CHECK(qmul(i, i).w == -1.0);
    CHECK(qmul(j, j).w == -1.0);
    CHECK(qmul(k, k).w == -1.0);

    const Quaternion q = quat(0.3, -1.2, 2.5, 0.7);
    const Quaternion one = quat(1, 0, 0, 0);
    const Quaternion p = qmul(one, q);
    CHECK(p.w == q.w);
    CHECK(p.x == q.x);
    CHECK(p.y == q.y);
    CHECK(p.z == q.z);
}

TEST_CASE("associativity and norm multiplicativity on seeded triples") {
    SeededRng rng(99);
    for (int t = 0; t < 1000; ++t) {
        const Quaternion a = quat(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        const Quaternion b = quat(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        const Quaternion c = quat(rng.normal(), rng.normal(), rng.normal(), rng.normal());
        const Quaternion lhs = qmul(qmul(a, b), c);
        const Quaternion rhs = qmul(a, qmul(b, c));
        const double scale = a.norm() * b.norm() * c.norm() + 1.0;
        CHECK((lhs - rhs).norm() / scale <= 1e-14);
        CHECK(std::abs(qmul(a, b).norm() - a.norm() * b.norm()) /
                  (a.norm() * b.norm() + 1.0) <=
              1e-14);
    }
}

TEST_CASE("the three views share bits") {
    SeededRng rng(3);
    for (int t = 0; t < 100; ++t) {
        const Point4 p{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const Point4 back = Point4::from_complex(p.z1(), p.z2());
        CHECK(same_bits(back.x0, p.x0));
        CHECK(same_bits(back.x1, p.x1));
        CHECK(same_bits(back.x2, p.x2));
        CHECK(same_bits(back.x3, p.x3));
        const Point4 qback = Quaternion::from_point(p).to_point();
        CHECK(same_bits(qback.x0, p.x0));
        CHECK(same_bits(qback.x3, p.x3));
    }
}

TEST_CASE("jmul is left multiplication by i") {
    const Point4 e0{1, 0, 0, 0};
    const Point4 j0 = jmul(e0);
    CHECK(j0.x0 == 0.0);
    CHECK(j0.x1 == 1.0);

    const Point4 e2{0, 0, 1, 0};
    const Point4 j2 = jmul(e2);
    CHECK(j2.x2 == 0.0);
    CHECK(j2.x3 == 1.0);

    SeededRng rng(17);
    const Quaternion qi = quat(0, 1, 0, 0);
    for (int t = 0; t < 100; ++t) {
        const Point4 p{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const Point4 jj = jmul(jmul(p));
        CHECK(jj.x0 == -p.x0);
        CHECK(jj.x1 == -p.x1);
        CHECK(jj.x2 == -p.x2);
        CHECK(jj.x3 == -p.x3);
        const Point4 lq = qmul(qi, Quaternion::from_point(p)).to_point();
        CHECK(same_bits(lq.x0, jmul(p).x0));
        CHECK(same_bits(lq.x1, jmul(p).x1));
        CHECK(same_bits(lq.x2, jmul(p).x2));
        CHECK(same_bits(lq.x3, jmul(p).x3));
    }
}

TEST_CASE("decomposition of component functionals") {
    SUBCASE("A(x) = z1") {
        const auto A = QuaternionValuedLinearMap::from_functional({1.0, 0.0});
        const MapDecomposition d = decompose_A(A);
        CHECK(d.a[0] == 1.0);
        CHECK(d.b[1] == 1.0);
        CHECK(d.beta_norm() == 0.0);
        CHECK(d.c == std::array<double, 4>{0, 0, 0, 0});
        CHECK(d.d == std::array<double, 4>{0, 0, 0, 0});
    }
    SUBCASE("A(x) = k z1 has alpha = 0, beta = z1") {
        const MapDecomposition d = decompose_A(map_k_z1());
        CHECK(d.alpha_norm() == 0.0);
        CHECK(d.beta_value({1, 0, 0, 0}) == Complex(1.0, 0.0));
        CHECK(d.beta_value({0, 1, 0, 0}) == Complex(0.0, 1.0));
        CHECK(d.beta_norm() > 0.0);
    }
    SUBCASE("zero map") {
        const MapDecomposition d = decompose_A(QuaternionValuedLinearMap{});
        CHECK(d.alpha_norm() == 0.0);
        CHECK(d.beta_norm() == 0.0);
    }
}

TEST_CASE("holomorphy defect separates complex functionals") {
    SeededRng rng(5);
    for (int t = 0; t < 100; ++t) {
        const ComplexFunctional L{{rng.normal(), rng.normal()}, {rng.normal(), rng.normal()}};
        const auto A = QuaternionValuedLinearMap::from_functional(L);
        CHECK(holomorphy_defect_quadratic(A) <= 1e-12);
    }
    CHECK(holomorphy_defect_quadratic(map_conj_z1()) > 0.1);
    CHECK(holomorphy_defect_quadratic(map_k_z1()) > 0.1);
}

TEST_CASE("beta below the holomorphy defect") {
    // maps with a substantial j/k part never look holomorphic
    SeededRng rng(31);
    for (int t = 0; t < 100; ++t) {
        QuaternionValuedLinearMap A;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) A.m[r][c] = rng.normal();
        const MapDecomposition d = decompose_A(A);
        if (d.beta_norm() < 0.1) continue;
        CHECK(holomorphy_defect_quadratic(A) >= 0.01);
    }
}

TEST_CASE("classification") {
    SUBCASE("identity recovery") {
        const ComplexFunctional L{{2.0, 1.0}, {3.0, 0.0}};
        const ClassifyResult r =
            classify_A(QuaternionValuedLinearMap::from_functional(L), 1e-9);
        REQUIRE(r.complex_linear);
        CHECK(std::abs(r.L.c1 - Complex(2.0, 1.0)) <= 1e-12);
        CHECK(std::abs(r.L.c2 - Complex(3.0, 0.0)) <= 1e-12);
    }
    SUBCASE("conj(z2) is rejected") {
        const ClassifyResult r = classify_A(map_conj_z2(), 1e-6);
        CHECK(!r.complex_linear);
        CHECK(r.defect > 0.1);
    }
    SUBCASE("random maps with a beta part are rejected") {
        SeededRng rng(77);
        for (int t = 0; t < 20; ++t) {
            QuaternionValuedLinearMap A;
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) A.m[r][c] = rng.normal();
            if (decompose_A(A).beta_norm() < 0.5) continue;
            CHECK(!classify_A(A, 1e-6).complex_linear);
        }
    }
    SUBCASE("classify after embed is the identity on seeded functionals") {
        SeededRng rng(123);
        for (int t = 0; t < 100; ++t) {
            const ComplexFunctional L{{rng.uniform(-1, 1), rng.uniform(-1, 1)},
                                      {rng.uniform(-1, 1), rng.uniform(-1, 1)}};
            const ClassifyResult r =
                classify_A(QuaternionValuedLinearMap::from_functional(L), 1e-8);
            REQUIRE(r.complex_linear);
            CHECK(std::abs(r.L.c1 - L.c1) <= 1e-12);
            CHECK(std::abs(r.L.c2 - L.c2) <= 1e-12);
        }
    }
}
