#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "qpoker/octonion.hpp"
#include "qpoker/quaternion.hpp"
#include "qpoker/rational.hpp"
#include "qpoker/sampling.hpp"
#include "qpoker/su2.hpp"

using namespace qp;

TEST_CASE("rationals normalize sign and gcd") {
    CHECK(rational(2, 4) == rational(1, 2));
    CHECK(rational(-2, -4) == rational(1, 2));
    CHECK(rational(3, -6) == rational(-1, 2));
    CHECK(rational(0, 7) == rational(0));
    CHECK(rational(1, 2).num() == 1);
    CHECK(rational(1, 2).den() == 2);
    CHECK_THROWS_AS(rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(rational(1, 3) + rational(1, 6) == rational(1, 2));
    CHECK(rational(1, 3) - rational(1, 2) == rational(-1, 6));
    CHECK(rational(2, 3) * rational(9, 4) == rational(3, 2));
    CHECK(rational(5, 6) / rational(5, 3) == rational(1, 2));
    CHECK(-rational(3, 7) == rational(-3, 7));
    CHECK(rational(1, 3) < rational(1, 2));
    CHECK(rational(-1, 2) < rational(-1, 3));
    CHECK(rational(7, 2) >= rational(7, 2));
    CHECK(rational(5, 6).to_double() == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("rational strings round-trip") {
    CHECK(rational(5, 2).str() == "5/2");
    CHECK(rational(-3).str() == "-3");
    CHECK(rational(0).str() == "0");
    CHECK(rational::parse("5/2") == rational(5, 2));
    CHECK(rational::parse("-7/3") == rational(-7, 3));
    CHECK(rational::parse("4") == rational(4));
    CHECK(rational::parse("6/4") == rational(3, 2));
    CHECK_THROWS_AS(rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(rational::parse("x"), std::invalid_argument);
}

TEST_CASE("quaternion units multiply cyclically") {
    auto i = quaternion::i(), j = quaternion::j(), k = quaternion::k();
    CHECK(approx_equal(i * j, k));
    CHECK(approx_equal(j * k, i));
    CHECK(approx_equal(k * i, j));
    CHECK(approx_equal(j * i, -k));
    CHECK(approx_equal(i * i, -quaternion::one()));
    CHECK(approx_equal(j * j, -quaternion::one()));
    CHECK(approx_equal(k * k, -quaternion::one()));
}

TEST_CASE("quaternion norm and inverse") {
    rng_stream rng(41);
    for (int t = 0; t < 20; ++t) {
        quaternion a = sample_unit_quaternion(rng);
        quaternion b = sample_unit_quaternion(rng);
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-12);
        CHECK(approx_equal(a * a.inverse(), quaternion::one(), 1e-12));
        CHECK(approx_equal(a.inverse() * a, quaternion::one(), 1e-12));
        CHECK(approx_equal((a * b) * a, a * (b * a), 1e-12));
    }
    CHECK_THROWS_AS(quaternion(0, 0, 0, 0).inverse(), std::domain_error);
    quaternion q(1, 1, 0, 0);
    CHECK(approx_equal(q.inverse(), quaternion(0.5, -0.5, 0, 0)));
}

TEST_CASE("octonion basis products") {
    auto e = [](std::size_t idx) { return octonion::unit(idx); };
    CHECK(approx_equal(e(1) * e(2), e(3)));
    CHECK(approx_equal(e(1) * e(4), e(5)));
    CHECK(approx_equal(e(4) * e(5), e(1)));
    CHECK(approx_equal(e(2) * e(4), e(6)));
    CHECK(approx_equal(e(2) * e(5), e(7)));
    CHECK(approx_equal(e(3) * e(4), e(7)));
    CHECK(approx_equal(e(3) * e(6), e(5)));
    CHECK(approx_equal(e(1) * e(7), e(6)));
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(approx_equal(e(i) * e(i), -e(0)));
        for (std::size_t j = 1; j < 8; ++j)
            if (i != j) CHECK(approx_equal(e(i) * e(j), -(e(j) * e(i))));
    }
}

TEST_CASE("basis table matches the products") {
    const auto& t = octonion_basis_table();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            octonion prod = octonion::unit(i) * octonion::unit(j);
            CHECK(approx_equal(prod, double(t.sign[i][j]) *
                                         octonion::unit(std::size_t(t.index[i][j]))));
        }
}

TEST_CASE("seven lines, smallest element first") {
    auto triples = fano_triples();
    REQUIRE(triples.size() == 7);
    std::set<std::array<int, 3>> got(triples.begin(), triples.end());
    std::set<std::array<int, 3>> want = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                                         {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    CHECK(got == want);
}

TEST_CASE("octonions are alternative, not associative") {
    auto e = [](std::size_t idx) { return octonion::unit(idx); };
    octonion left = (e(1) * e(2)) * e(4);
    octonion right = e(1) * (e(2) * e(4));
    CHECK(approx_equal(left, -right));
    rng_stream rng(42);
    auto random_oct = [&] {
        std::array<double, 8> c{};
        for (auto& v : c) v = rng.normal();
        return octonion(c);
    };
    for (int t = 0; t < 10; ++t) {
        octonion a = random_oct(), b = random_oct();
        CHECK(approx_equal((a * a) * b, a * (a * b), 1e-9));
        CHECK(approx_equal((a * b) * b, a * (b * b), 1e-9));
        CHECK(std::abs((a * b).norm() - a.norm() * b.norm()) < 1e-9);
    }
}

TEST_CASE("octonion inverse") {
    octonion u = octonion(quaternion(1, 1, 0, 0), quaternion(0, 0, 0, 0));
    octonion inv = u.inverse();
    CHECK(approx_equal(inv, octonion(quaternion(0.5, -0.5, 0, 0), quaternion(0, 0, 0, 0))));
    CHECK(approx_equal(u * inv, octonion::unit(0), 1e-12));
    CHECK_THROWS_AS(octonion().inverse(), std::domain_error);
}

TEST_CASE("matrix embedding of quaternions") {
    quaternion q(0.1, 0.2, 0.3, 0.4);
    mat2 m = su2(q);
    CHECK(m(0, 0) == cplx(0.1, -0.4));
    CHECK(m(0, 1) == cplx(0.3, 0.2));
    CHECK(m(1, 0) == cplx(-0.3, 0.2));
    CHECK(m(1, 1) == cplx(0.1, 0.4));

    rng_stream rng(43);
    for (int t = 0; t < 20; ++t) {
        quaternion a = sample_unit_quaternion(rng);
        quaternion b = sample_unit_quaternion(rng);
        CHECK(approx_equal(su2(a * b), su2(a) * su2(b), 1e-12));
        CHECK(std::abs(su2(a).det() - cplx(1.0)) < 1e-12);
        CHECK(approx_equal(su2(a) * su2(a).dagger(), mat2::identity(), 1e-12));
        quaternion back = quaternion_from_su2(su2(a));
        CHECK(approx_equal(back, a, 1e-12));
    }
    mat2 bad;
    bad(0, 0) = 1.0;
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(quaternion_from_su2(bad), std::domain_error);
}

TEST_CASE("random streams are deterministic and split") {
    rng_stream a(5), b(5);
    for (int t = 0; t < 10; ++t) CHECK(a.uniform() == b.uniform());
    CHECK(substream_seed(5, 0) != substream_seed(5, 1));
    CHECK(substream_seed(5, 0) != substream_seed(6, 0));

    rng_stream rng(7);
    for (int t = 0; t < 100; ++t) {
        quaternion q = sample_unit_quaternion(rng);
        CHECK(std::abs(q.norm() - 1.0) < 1e-12);
        double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    std::vector<double> w = {0.25, 0.25, 0.5};
    CHECK(sample_index(w, 0.0) == 0);
    CHECK(sample_index(w, 0.3) == 1);
    CHECK(sample_index(w, 0.9) == 2);
    CHECK(sample_index(w, 0.999999999) == 2);
}
