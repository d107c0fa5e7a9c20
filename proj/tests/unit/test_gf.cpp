#include <doctest.h>

#include <random>

#include "comack/gf.hpp"

using namespace comack;
using gf::Mat;
using gf::PrimeField;
using gf::Subspace;

namespace {

Mat random_mat(PrimeField f, size_t r, size_t c, std::mt19937& rng) {
    Mat m(f, r, c);
    std::uniform_int_distribution<uint32_t> dist(0, f.p - 1);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("PrimeField rejects composites") {
    CHECK_NOTHROW(PrimeField(2));
    CHECK_NOTHROW(PrimeField(13));
    CHECK_THROWS_AS(PrimeField(1), Error);
    CHECK_THROWS_AS(PrimeField(6), Error);
    PrimeField f5(5);
    for (uint32_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
}

TEST_CASE("rref: identity, zero, rank-1") {
    PrimeField f2(2), f3(3), f5(5);
    Mat id3 = Mat::identity(f2, 3);
    auto r = gf::rref(id3);
    CHECK(r.r == id3);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2});

    Mat zero24(f3, 2, 4);
    auto rz = gf::rref(zero24);
    CHECK(rz.r == zero24);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());

    // row2 = 2*row1 mod 5
    Mat m = Mat::from_rows(f5, {{1, 2}, {2, 4}});
    auto rm = gf::rref(m);
    CHECK(rm.rank == 1);
    CHECK(rm.r == Mat::from_rows(f5, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel: identity, zero map, augmentation row") {
    PrimeField f2(2), f3(3);
    CHECK(gf::kernel(Mat::identity(f3, 4)).dim() == 0);
    CHECK(gf::kernel(Mat(f3, 3, 4)).dim() == 4);

    Mat aug = Mat::from_rows(f2, {{1, 1}});
    Subspace k = gf::kernel(aug);
    CHECK(k.dim() == 1);
    CHECK(k.basis() == Mat::from_rows(f2, {{1, 1}}));
}

TEST_CASE("solve: identity, zero/nonzero, back-substitution") {
    PrimeField f2(2);
    Mat b = Mat::from_rows(f2, {{1}, {1}});
    CHECK(*gf::solve(Mat::identity(f2, 2), b) == b);

    CHECK(!gf::solve(Mat(f2, 2, 2), b).has_value());

    Mat a = Mat::from_rows(f2, {{1, 1}, {0, 1}});
    auto x = gf::solve(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == Mat::from_rows(f2, {{0}, {1}}));
    CHECK(a.mul(*x) == b);

    // dimension mismatch is a contract violation, not "absent"
    CHECK_THROWS_AS(gf::solve(Mat(f2, 2, 2), Mat(f2, 3, 1)), Error);
}

TEST_CASE("subspace lattice ops in GF(2)^2") {
    PrimeField f2(2);
    Subspace u = Subspace::span_rows(Mat::from_rows(f2, {{1, 0}}));
    Subspace w = Subspace::span_rows(Mat::from_rows(f2, {{1, 1}}));
    CHECK(u.intersect(u) == u);
    CHECK(u.sum(Subspace::zero(f2, 2)) == u);
    CHECK(u.intersect(w).dim() == 0);
    CHECK(u.sum(w) == Subspace::full(f2, 2));
    CHECK_THROWS_AS(u.sum(Subspace::zero(f2, 3)), Error);
}

TEST_CASE("kron conventions") {
    PrimeField f3(3);
    CHECK(gf::kron(Mat::identity(f3, 2), Mat::identity(f3, 3)) == Mat::identity(f3, 6));
    CHECK(gf::kron(Mat::from_rows(f3, {{1, 2}}), Mat(f3, 2, 2)).is_zero());
    // standard block layout: kron(a, b)[(i*rb+k), (j*cb+l)] = a(i,j)b(k,l)
    Mat a = Mat::from_rows(f3, {{1, 1}});
    Mat col = Mat::from_rows(f3, {{1}, {2}});
    CHECK(gf::kron(a, col) == Mat::from_rows(f3, {{1, 1}, {2, 2}}));
    Mat row = Mat::from_rows(f3, {{1, 2}});
    CHECK(gf::kron(a, row) == Mat::from_rows(f3, {{1, 2, 1, 2}}));
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
    std::mt19937 rng(12345);
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 25; ++trial) {
            size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
            Mat m = random_mat(f, r, c, rng);
            auto rr = gf::rref(m);
            CHECK(rr.rank + gf::kernel(m).dim() == c);
            CHECK(gf::rref(rr.r).r == rr.r);
            // solve(a, a·x) returns a valid solution
            Mat x = random_mat(f, c, 2, rng);
            Mat b = m.mul(x);
            auto sol = gf::solve(m, b);
            REQUIRE(sol.has_value());
            CHECK(m.mul(*sol) == b);
        }
    }
}

TEST_CASE("modular law dim U + dim W = dim(U+W) + dim(U∩W)") {
    std::mt19937 rng(999);
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int trial = 0; trial < 20; ++trial) {
            size_t n = 4 + rng() % 3;
            Subspace u = Subspace::span_rows(random_mat(f, 1 + rng() % n, n, rng));
            Subspace w = Subspace::span_rows(random_mat(f, 1 + rng() % n, n, rng));
            CHECK(u.dim() + w.dim() == u.sum(w).dim() + u.intersect(w).dim());
            CHECK(u.sum(w).contains(u));
            CHECK(u.contains(u.intersect(w)));
        }
    }
}

TEST_CASE("intertwiner basis: commutant of a permutation") {
    PrimeField f2(2);
    // X with X·S = S·X for the swap S on GF(2)^2: circulant matrices, dim 2
    Mat swap = Mat::from_rows(f2, {{0, 1}, {1, 0}});
    auto basis = gf::intertwiner_basis(f2, 2, 2, {{swap, swap}});
    CHECK(basis.size() == 2);
    for (const auto& x : basis) CHECK(x.mul(swap) == swap.mul(x));
}
