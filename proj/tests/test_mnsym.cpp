#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "khopf/mnsym.hpp"
#include "khopf/words.hpp"

using namespace khopf;

TEST_CASE("three-term ribbon product") {
    RibbonSum p = rib_product(Composition{2, 2}, Composition{1, 2});
    CHECK(p.coefficient(Composition{2, 2, 1, 2}) == 1);
    CHECK(p.coefficient(Composition{2, 2, 2}) == 1);
    CHECK(p.coefficient(Composition{2, 3, 2}) == 1);
    CHECK(p.term_count() == 3);

    CHECK(rib_product(Composition{}, Composition{2, 1}) ==
          RibbonSum::unit(Composition{2, 1}));
    CHECK(rib_product(Composition{2, 1}, Composition{}) ==
          RibbonSum::unit(Composition{2, 1}));

    RibbonSum square = rib_product(Composition{1}, Composition{1});
    CHECK(square.coefficient(Composition{1, 1}) == 1);
    CHECK(square.coefficient(Composition{1}) == 1);
    CHECK(square.coefficient(Composition{2}) == 1);
}

TEST_CASE("ribbon product is associative") {
    auto labels = compositions_up_to(5);
    for (const Composition& a : labels)
        for (const Composition& b : labels)
            for (const Composition& c : labels) {
                if (a.size() + b.size() + c.size() > 7) continue;
                CHECK(rib_product(rib_product(a, b), RibbonSum::unit(c)) ==
                      rib_product(RibbonSum::unit(a), rib_product(b, c)));
            }
}

TEST_CASE("ribbon coproduct of one-part compositions") {
    for (int n = 1; n <= 5; ++n) {
        RibbonTensorSum delta = rib_coproduct(Composition{std::vector<int>{n}});
        CHECK(delta.term_count() == static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) {
            Composition left = k == 0 ? Composition{} : Composition{std::vector<int>{k}};
            Composition right =
                k == n ? Composition{} : Composition{std::vector<int>{n - k}};
            CHECK(delta.coefficient({left, right}) == 1);
        }
    }
    RibbonTensorSum unit = rib_coproduct(Composition{});
    CHECK(unit.coefficient({Composition{}, Composition{}}) == 1);
    CHECK(unit.term_count() == 1);
}

TEST_CASE("coefficient of R1 x R1 in the coproduct of R21") {
    RibbonTensorSum delta = rib_coproduct(Composition{2, 1});
    CHECK(delta.coefficient({Composition{1}, Composition{1}}) == 1);
}

TEST_CASE("coproduct coefficients do not depend on the representative") {
    for (int n = 1; n <= 4; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            RibbonTensorSum reference = rib_coproduct(alpha);
            for (int b = 0; b <= n; ++b) {
                for (const Composition& beta : compositions_of(b)) {
                    for (int d = 0; d + b <= n; ++d) {
                        for (const Composition& delta : compositions_of(d)) {
                            Int expected = reference.coefficient({beta, delta});
                            for (const Word& wb : permutations_with_descent_composition(beta)) {
                                for (const Word& wd :
                                     permutations_with_descent_composition(delta)) {
                                    Int count = 0;
                                    for (const Word& u : multishuffles(wb, shift(wd, b), n))
                                        if (descent_composition(u) == alpha) ++count;
                                    CHECK(count == expected);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("coproduct is coassociative and a morphism for the product") {
    using Triple = std::tuple<Composition, Composition, Composition>;
    for (int n = 0; n <= 5; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            std::map<Triple, Int> left, right;
            for (const auto& [pair, c] : rib_coproduct(alpha)) {
                for (const auto& [pair2, c2] : rib_coproduct(pair.left))
                    left[{pair2.left, pair2.right, pair.right}] += c * c2;
                for (const auto& [pair2, c2] : rib_coproduct(pair.right))
                    right[{pair.left, pair2.left, pair2.right}] += c * c2;
            }
            std::erase_if(left, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(right, [](const auto& kv) { return kv.second == 0; });
            CHECK(left == right);
        }
    }

    for (const Composition& alpha : compositions_up_to(5)) {
        for (const Composition& beta : compositions_up_to(5)) {
            if (alpha.size() + beta.size() > 5) continue;
            RibbonTensorSum morphism_lhs;
            for (const auto& [gamma, c] : rib_product(alpha, beta))
                morphism_lhs.add(rib_coproduct(gamma), c);
            RibbonTensorSum morphism_rhs;
            for (const auto& [pa, ca] : rib_coproduct(alpha))
                for (const auto& [pb, cb] : rib_coproduct(beta))
                    for (const auto& [l, cl] : rib_product(pa.left, pb.left))
                        for (const auto& [r, cr] : rib_product(pa.right, pb.right))
                            morphism_rhs.add({l, r}, ca * cb * cl * cr);
            CHECK(morphism_lhs == morphism_rhs);
        }
    }
}

TEST_CASE("merging antipode on worked cases") {
    CHECK(rib_antipode(Composition{1}) == RibbonSum::unit(Composition{1}, -1));

    for (int n = 1; n <= 6; ++n) {
        RibbonSum s = rib_antipode(Composition{std::vector<int>{n}});
        Int sign = n % 2 == 0 ? 1 : -1;
        CHECK(s.term_count() == static_cast<std::size_t>(n));
        for (int k = 0; k <= n - 1; ++k) {
            std::vector<int> ones(static_cast<std::size_t>(k) + 1, 1);
            CHECK(s.coefficient(Composition(ones)) == sign * binomial(n - 1, k));
        }
    }

    RibbonSum s12 = rib_antipode(Composition{1, 2});
    CHECK(s12.coefficient(Composition{1, 2}) == -1);
    CHECK(s12.coefficient(Composition{1, 1}) == -1);
    CHECK(s12.coefficient(Composition{2}) == -1);
    CHECK(s12.coefficient(Composition{1}) == -1);
    CHECK(s12.term_count() == 4);

    CHECK(rib_antipode(Composition{}) == RibbonSum::unit(Composition{}));
}

TEST_CASE("recursive antipode oracle") {
    CHECK(rib_antipode_recursive(Composition{1}) == RibbonSum::unit(Composition{1}, -1));
    RibbonSum s2 = rib_antipode_recursive(Composition{2});
    CHECK(s2.coefficient(Composition{1}) == 1);
    CHECK(s2.coefficient(Composition{1, 1}) == 1);
    CHECK(s2.term_count() == 2);

    for (int n = 0; n <= 4; ++n)
        for (const Composition& alpha : compositions_of(n))
            CHECK(rib_antipode(alpha) == rib_antipode_recursive(alpha));
}

TEST_CASE("convolution identities") {
    CHECK(rib_convolution_check(Composition{1}).ok);
    CHECK(rib_convolution_check(Composition{1, 2}).ok);
    CHECK(rib_convolution_check(Composition{}).ok);
}

TEST_CASE("the antipode is an algebra anti-endomorphism") {
    for (const Composition& alpha : compositions_up_to(5)) {
        for (const Composition& beta : compositions_up_to(5)) {
            if (alpha.size() + beta.size() > 5) continue;
            RibbonSum lhs;
            for (const auto& [gamma, c] : rib_product(alpha, beta))
                lhs.add(rib_antipode(gamma), c);
            RibbonSum rhs = rib_product(rib_antipode(beta), rib_antipode(alpha));
            CHECK(lhs == rhs);
        }
    }
}
