#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "extlim/normal_forms.hpp"

using namespace extlim;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
    return m;
}

// Product of a few shears, permutations and sign flips; entries stay small.
IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int entry_bound = 10) {
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
    while (true) {
        IntMatrix u = IntMatrix::identity(n);
        for (int step = 0; step < 4 && n >= 2; ++step) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            switch (step % 3) {
                case 0: u.add_col_multiple(i, j, coef(rng)); break;
                case 1: u.swap_cols(i, j); break;
                default: u.negate_col(i); break;
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (abs(u(i, j)) > entry_bound) ok = false;
        if (ok) return u;
    }
}

Int det(const IntMatrix& m) {
    // fraction-free Gaussian elimination (Bareiss)
    REQUIRE(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace

TEST_CASE("hnf basic examples") {
    CHECK(hnf(IntMatrix::from_rows({{6, 4}})).basis == IntMatrix::from_rows({{2}}));
    CHECK(hnf(IntMatrix::zero(3, 2)).rank() == 0);
    CHECK(hnf(IntMatrix::zero(0, 4)).rank() == 0);
    IntMatrix d = IntMatrix::from_rows({{2, 0}, {0, 3}});
    CHECK(hnf(d).basis == d);
}

TEST_CASE("hnf is canonical under unimodular column changes") {
    std::mt19937 rng(17);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 6, c = 1 + (it / 2) % 6;
        IntMatrix m = random_matrix(rng, r, c, 10);
        IntMatrix t = random_unimodular(rng, c);
        CHECK(hnf(m * t).basis == hnf(m).basis);
        CHECK(hnf(hnf(m).basis).basis == hnf(m).basis);
    }
}

TEST_CASE("snf examples and invariants") {
    SmithDecomposition s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(s.D == IntMatrix::from_rows({{1, 0}, {0, 6}}));
    CHECK(snf(IntMatrix::identity(3)).D == IntMatrix::identity(3));
    CHECK(snf(IntMatrix::from_rows({{0}})).D == IntMatrix::from_rows({{0}}));

    std::mt19937 rng(29);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it / 3) % 5;
        IntMatrix m = random_matrix(rng, r, c, 9);
        SmithDecomposition d = snf(m);
        CHECK(d.U * m * d.V == d.D);
        Int du = det(d.U), dv = det(d.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i + 1 < d.diagonal_length(); ++i) {
            CHECK(d.diagonal(i) >= 0);
            if (d.diagonal(i) != 0)
                CHECK(d.diagonal(i + 1) % d.diagonal(i) == 0);
            else
                CHECK(d.diagonal(i + 1) == 0);
        }
        for (std::size_t i = 0; i < d.D.rows(); ++i)
            for (std::size_t j = 0; j < d.D.cols(); ++j)
                if (i != j) CHECK(d.D(i, j) == 0);
    }
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(IntMatrix::from_rows({{1, 1}})).basis ==
          hnf(IntMatrix::from_rows({{1}, {-1}})).basis);
    CHECK(kernel_basis(IntMatrix::identity(2)).rank() == 0);

    // oracle: enumerate small solutions of [[2,-4]] x = 0 and compare lattices
    IntMatrix m = IntMatrix::from_rows({{2, -4}});
    std::vector<Int> found;
    IntMatrix enumerated(2, 0);
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y)
            if (2 * x - 4 * y == 0 && (x || y)) {
                IntMatrix c(2, 1);
                c(0, 0) = x;
                c(1, 0) = y;
                enumerated = enumerated.cols() ? hstack(enumerated, c) : c;
            }
    CHECK(lattice_equal(kernel_basis(m).basis, enumerated));
    CHECK(kernel_basis(m).basis == hnf(IntMatrix::from_rows({{2}, {1}})).basis);

    std::mt19937 rng(43);
    for (int it = 0; it < 50; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it / 2) % 6;
        IntMatrix a = random_matrix(rng, r, c, 8);
        HermiteBasis k = kernel_basis(a);
        CHECK((a * k.basis).is_zero());
        CHECK(k.rank() == c - hnf(a).rank());
    }
}

TEST_CASE("solve") {
    {
        auto x = solve(IntMatrix::from_rows({{2}}), {Int(4)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == 2);
    }
    CHECK(!solve(IntMatrix::from_rows({{2}}), {Int(3)}).has_value());
    {
        IntMatrix m = IntMatrix::from_rows({{1, 1}, {0, 2}});
        auto x = solve(m, {Int(3), Int(2)});
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == std::vector<Int>{Int(3), Int(2)});
        CHECK(*x == std::vector<Int>{Int(2), Int(1)});
    }
    std::mt19937 rng(57);
    for (int it = 0; it < 60; ++it) {
        std::size_t r = 1 + it % 5, c = 1 + (it / 2) % 5;
        IntMatrix m = random_matrix(rng, r, c, 7);
        IntMatrix xs = random_matrix(rng, c, 1, 5);
        std::vector<Int> b = m.apply(xs.col(0));
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == b);
    }
}

TEST_CASE("image_intersection") {
    CHECK(image_intersection(IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{3}})).basis ==
          IntMatrix::from_rows({{6}}));

    IntMatrix m = IntMatrix::from_rows({{2, 1}, {0, 3}});
    CHECK(image_intersection(m, m).basis == hnf(m).basis);

    // oracle: brute-force common vectors of colspan{(2,0),(0,1)} and colspan{(1,1)}
    IntMatrix m1 = IntMatrix::from_rows({{2, 0}, {0, 1}});
    IntMatrix m2 = IntMatrix::from_rows({{1}, {1}});
    IntMatrix common(2, 0);
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            for (int c = -8; c <= 8; ++c)
                if (2 * a == c && b == c && (a || b)) {
                    IntMatrix v(2, 1);
                    v(0, 0) = 2 * a;
                    v(1, 0) = b;
                    common = common.cols() ? hstack(common, v) : v;
                }
    HermiteBasis inter = image_intersection(m1, m2);
    CHECK(lattice_equal(inter.basis, common));
    CHECK(inter.basis == hnf(IntMatrix::from_rows({{2}, {2}})).basis);

    std::mt19937 rng(73);
    for (int it = 0; it < 40; ++it) {
        std::size_t r = 1 + it % 4;
        IntMatrix a = random_matrix(rng, r, 1 + it % 3, 6);
        IntMatrix b = random_matrix(rng, r, 1 + (it / 2) % 3, 6);
        HermiteBasis i = image_intersection(a, b);
        for (std::size_t j = 0; j < i.rank(); ++j) {
            CHECK(in_column_span(a, i.basis.col(j)));
            CHECK(in_column_span(b, i.basis.col(j)));
        }
        // any sampled common vector a*x = b*y lies in the returned lattice
        IntMatrix x = random_matrix(rng, a.cols(), 1, 4);
        std::vector<Int> v = a.apply(x.col(0));
        if (in_column_span(b, v)) CHECK(in_column_span(i.basis, v));
    }
}

TEST_CASE("kronecker") {
    CHECK(kronecker(IntMatrix::identity(2), IntMatrix::identity(3)) == IntMatrix::identity(6));
    CHECK(kronecker(IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{3}})) ==
          IntMatrix::from_rows({{6}}));
    IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(kronecker(swap, IntMatrix::from_rows({{1}})) == swap);

    std::mt19937 rng(97);
    for (int it = 0; it < 25; ++it) {
        IntMatrix a = random_matrix(rng, 2, 3, 5), c = random_matrix(rng, 3, 2, 5);
        IntMatrix b = random_matrix(rng, 3, 2, 5), d = random_matrix(rng, 2, 3, 5);
        CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
    }
}

TEST_CASE("reduce_mod_lattice gives unique coset representatives") {
    std::mt19937 rng(131);
    for (int it = 0; it < 40; ++it) {
        std::size_t n = 2 + it % 4;
        IntMatrix rel = random_matrix(rng, n, 1 + it % 4, 6);
        HermiteBasis h = hnf(rel);
        IntMatrix v = random_matrix(rng, n, 1, 9);
        std::vector<Int> base = reduce_mod_lattice(h, v.col(0));
        // shifting by lattice vectors does not change the representative
        std::vector<Int> shifted = v.col(0);
        for (std::size_t j = 0; j < h.rank(); ++j)
            for (std::size_t i = 0; i < n; ++i) shifted[i] += 3 * h.basis(i, j);
        CHECK(reduce_mod_lattice(h, shifted) == base);
    }
}
