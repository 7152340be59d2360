// Acceptance suite: one line per criterion, exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "khopf/ksym.hpp"
#include "khopf/mnsym.hpp"
#include "khopf/mqsym.hpp"
#include "khopf/tableaux.hpp"
#include "khopf/words.hpp"

using namespace khopf;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& title, double time_budget_seconds,
             const std::function<bool()>& body) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = body();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" (exception: ") + e.what() + ")";
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (time_budget_seconds > 0 && elapsed > time_budget_seconds) {
            ok = false;
            note += " (over time budget)";
        }
        if (!ok) ++failures;
        std::printf("%s criterion %2d: %s [%.2fs]%s\n", ok ? "PASS" : "FAIL", number,
                    title.c_str(), elapsed, note.c_str());
        std::fflush(stdout);
    }
};

bool criterion_1() {
    SeriesContext ctx{4, 4};
    TruncatedSeries k = ktilde_series(SkewShape(Partition{2, 1}), ctx);
    return k.coefficient({2, 1, 0, 0}) == 1 && k.coefficient({1, 1, 1, 0}) == 2 &&
           k.coefficient({2, 2, 0, 0}) == 1 && k.coefficient({2, 1, 1, 0}) == 3 &&
           k.coefficient({1, 1, 1, 1}) == 8;
}

bool criterion_2() {
    RibbonSum s12 = rib_antipode(Composition{1, 2});
    bool ok = s12.term_count() == 4 && s12.coefficient(Composition{1, 2}) == -1 &&
              s12.coefficient(Composition{1, 1}) == -1 &&
              s12.coefficient(Composition{2}) == -1 && s12.coefficient(Composition{1}) == -1;
    for (int n = 1; n <= 6 && ok; ++n) {
        RibbonSum s = rib_antipode(Composition{std::vector<int>{n}});
        if (s.term_count() != static_cast<std::size_t>(n)) ok = false;
        Int sign = n % 2 == 0 ? 1 : -1;
        for (int k = 0; k <= n - 1 && ok; ++k) {
            std::vector<int> ones(static_cast<std::size_t>(k) + 1, 1);
            if (s.coefficient(Composition(ones)) != sign * binomial(n - 1, k)) ok = false;
        }
    }
    return ok;
}

bool criterion_3() {
    int cases = 0;
    for (int n = 1; n <= 5; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            ++cases;
            if (!rib_convolution_check(alpha).ok) return false;
        }
    return cases >= 31;
}

bool criterion_4() {
    for (int n = 0; n <= 5; ++n)
        for (const Composition& alpha : compositions_of(n))
            if (!(rib_antipode(alpha) == rib_antipode_recursive(alpha))) return false;
    return true;
}

bool criterion_5() {
    SeriesContext ctx{4, 4};
    std::map<std::pair<Composition, Composition>, FormalSum<Composition>> product_constants;
    for (int b = 0; b <= 4; ++b)
        for (const Composition& beta : compositions_of(b))
            for (int d = 0; b + d <= 4; ++d)
                for (const Composition& delta : compositions_of(d)) {
                    FormalSum<Composition> via_shuffles =
                        ltilde_product(beta, delta, 4).terms;
                    FormalSum<Composition> via_series = expand_series_in_ltilde(
                        ltilde_series(beta, ctx) * ltilde_series(delta, ctx));
                    if (!(via_shuffles == via_series)) return false;
                    product_constants[{beta, delta}] = via_shuffles;
                }
    for (int n = 0; n <= 4; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            RibbonTensorSum coproduct = rib_coproduct(alpha);
            for (const auto& [pair, expected] : product_constants) {
                Int from_coproduct = coproduct.coefficient({pair.first, pair.second});
                if (from_coproduct != expected.coefficient(alpha)) return false;
            }
        }
    return true;
}

bool criterion_6() {
    TensorSum<Composition> delta = ltilde_coproduct(Composition{2, 1});
    Int total = 0;
    for (const auto& [pair, c] : delta.terms()) total += c;
    bool coproduct_ok = total == 7 &&
                        delta.coefficient({Composition{}, Composition{2, 1}}) == 1 &&
                        delta.coefficient({Composition{1}, Composition{2, 1}}) == 1 &&
                        delta.coefficient({Composition{1}, Composition{1, 1}}) == 1 &&
                        delta.coefficient({Composition{2}, Composition{1, 1}}) == 1 &&
                        delta.coefficient({Composition{2}, Composition{1}}) == 1 &&
                        delta.coefficient({Composition{2, 1}, Composition{1}}) == 1 &&
                        delta.coefficient({Composition{2, 1}, Composition{}}) == 1;

    LSum p = ltilde_product(Composition{1}, Composition{2, 1}, 4);
    bool product_ok = p.terms.term_count() == 4 &&
                      p.terms.coefficient(Composition{3, 1}) == 1 &&
                      p.terms.coefficient(Composition{1, 2, 1}) == 1 &&
                      p.terms.coefficient(Composition{2, 2}) == 1 &&
                      p.terms.coefficient(Composition{2, 1, 1}) == 1;
    return coproduct_ok && product_ok;
}

bool criterion_7() {
    FormalSum<Composition> expected;
    expected.add(Composition{2, 2, 1, 2}, 1);
    expected.add(Composition{1, 3, 1, 2}, 2);
    expected.add(Composition{1, 2, 2, 2}, 1);
    expected.add(Composition{1, 2, 1, 3}, 2);

    Composition alpha{1, 2, 1, 2};
    if (!(degree_component_lhat(alpha, 1) == expected)) return false;

    SeriesContext ctx{6, 7};
    FormalSum<Composition> from_series =
        expand_in_fundamental(lhat_series(alpha, ctx), alpha.size() + 1);
    return from_series == expected;
}

bool criterion_8() {
    SeriesContext ctx{6, 6};
    for (int n = 1; n <= 3; ++n)
        for (const Composition& alpha : compositions_of(n)) {
            TruncatedSeries via_mergings =
                realize(ltilde_antipode(alpha, ctx.max_degree), ctx, LBasis::Ltilde);
            if (!(via_mergings == lhat_antipode_series(alpha, ctx))) return false;
            TruncatedSeries residual(ctx);
            for (const auto& [pair, c] : ltilde_coproduct(alpha)) {
                TruncatedSeries left =
                    realize(ltilde_antipode(pair.left, ctx.max_degree), ctx, LBasis::Ltilde);
                residual += (left * ltilde_series(pair.right, ctx)).scaled(c);
            }
            if (!residual.is_zero()) return false;
        }
    return true;
}

bool criterion_9() {
    LabeledPoset shape32 = row_reading_poset(SkewShape(Partition{3, 2}));
    PosetFilling example(5);
    example[static_cast<std::size_t>(shape32.element_with_label(3))] = {1, 1, 2};
    example[static_cast<std::size_t>(shape32.element_with_label(4))] = {2, 3};
    example[static_cast<std::size_t>(shape32.element_with_label(5))] = {3, 4, 5};
    example[static_cast<std::size_t>(shape32.element_with_label(1))] = {4, 5};
    example[static_cast<std::size_t>(shape32.element_with_label(2))] = {6, 6, 7};
    KhatBijectionImage image = khat_bijection_forward(shape32, example);
    if (image.w != Word{3, 4, 5, 1, 5, 1, 5, 2}) return false;
    if (descent_composition(image.w) != Composition{3, 2, 2, 1}) return false;
    if (!(khat_bijection_backward(shape32, image) == example)) return false;

    LabeledPoset shape21 = row_reading_poset(SkewShape(Partition{2, 1}));
    bool ok = true;
    int seen = 0;
    enumerate_multiset_valued(shape21, 3, 5, [&](const PosetFilling& sigma) {
        ++seen;
        KhatBijectionImage img = khat_bijection_forward(shape21, sigma);
        if (!(khat_bijection_backward(shape21, img) == sigma)) ok = false;
    });
    return ok && seen > 0;
}

bool criterion_10() {
    SeriesContext ctx{6, 6};
    for (const Partition& lambda : partitions_up_to(4)) {
        SkewShape shape(lambda);
        if (!(omega_sym(ktilde_series(shape, ctx)) == J_series(shape, ctx))) return false;
        if (!(omega_sym(g_series(shape, ctx)) == j_series(shape, ctx))) return false;
    }
    return true;
}

bool criterion_11() {
    for (const Partition& mu :
         {Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{2, 2}}) {
        int bound = mu.size() + 3;
        SeriesContext ctx{bound, bound};
        TruncatedSeries lhs = J_series(SkewShape(mu), ctx);
        TruncatedSeries rhs(ctx);
        Partition mu_t = conjugate(mu);
        for (const Partition& lambda : partitions_up_to(bound)) {
            Int p = restricted_pp_count(mu_t, lambda);
            if (p != 0) rhs += G_series(SkewShape(lambda), ctx).scaled(p);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool criterion_12() {
    for (const Partition& lambda : partitions_up_to(3))
        for (const Partition& nu : partitions_up_to(6))
            if (!transition_identity_check(lambda, nu).ok) return false;

    // Exhaustive phi/psi round-trip.
    for (const Partition& nu_t : partitions_up_to(8)) {
        for (const Partition& lambda : partitions_up_to(nu_t.size())) {
            if (!nu_t.contains(lambda)) continue;
            std::set<CellFilling> images;
            Int pairs = 0;
            bool ok = true;
            enumerate_elegant_pairs(lambda, nu_t, [&](const ElegantPair& pair) {
                ++pairs;
                CellFilling rpp = phi_map(lambda, nu_t, pair);
                if (!is_restricted_pp(lambda, nu_t, rpp)) ok = false;
                if (!(psi_map(lambda, nu_t, rpp) == pair)) ok = false;
                images.insert(rpp);
            });
            if (!ok || Int(static_cast<long>(images.size())) != pairs) return false;
            if (pairs != restricted_pp_count(lambda, nu_t)) return false;
        }
    }

    // The worked instance.
    Partition lambda{3, 2, 1}, nu_t{5, 4, 4, 3};
    ElegantPair pair;
    pair.mu = Partition{3, 3, 2, 2};
    pair.inner_filling[{2, 3}] = {1};
    pair.inner_filling[{3, 2}] = {1};
    pair.inner_filling[{4, 1}] = {2};
    pair.inner_filling[{4, 2}] = {3};
    pair.outer_filling[{1, 4}] = {2};
    pair.outer_filling[{1, 5}] = {4};
    pair.outer_filling[{2, 4}] = {3};
    pair.outer_filling[{3, 3}] = {1};
    pair.outer_filling[{3, 4}] = {3};
    pair.outer_filling[{4, 3}] = {2};
    CellFilling rpp = phi_map(lambda, nu_t, pair);
    CellFilling shown;
    shown[{1, 4}] = {2};
    shown[{1, 5}] = {1};
    shown[{2, 3}] = {3};
    shown[{2, 4}] = {1};
    shown[{3, 2}] = {3};
    shown[{3, 3}] = {2};
    shown[{3, 4}] = {1};
    shown[{4, 1}] = {2};
    shown[{4, 2}] = {2};
    shown[{4, 3}] = {1};
    return rpp == shown && is_restricted_pp(lambda, nu_t, rpp) &&
           psi_map(lambda, nu_t, rpp) == pair;
}

bool criterion_13() {
    for (const Partition& lambda : partitions_up_to(4)) {
        SeriesContext ctx{5, std::max(lambda.size(), 1)};
        TruncatedSeries lhs = g_series(SkewShape(lambda), ctx);
        TruncatedSeries rhs(ctx);
        Partition lambda_t = conjugate(lambda);
        for (const Partition& mu : partitions_up_to(lambda_t.size())) {
            if (!lambda_t.contains(mu)) continue;
            Int p = restricted_pp_count(mu, lambda_t);
            if (p != 0) rhs += jtilde_series(SkewShape(mu), ctx).scaled(p);
        }
        if (!(lhs == rhs)) return false;
    }
    // The hand-checked case: g_(2) = jtilde_(1,1) + jtilde_(1) = h_2.
    SeriesContext ctx{4, 2};
    TruncatedSeries h2(ctx);
    for (int a = 1; a <= 4; ++a)
        for (int b = a; b <= 4; ++b) {
            std::vector<int> exps(4, 0);
            ++exps[static_cast<std::size_t>(a) - 1];
            ++exps[static_cast<std::size_t>(b) - 1];
            h2.add_term(exps, 1);
        }
    return g_series(SkewShape(Partition{2}), ctx) ==
               jtilde_series(SkewShape(Partition{1, 1}), ctx) +
                   jtilde_series(SkewShape(Partition{1}), ctx) &&
           g_series(SkewShape(Partition{2}), ctx) == h2;
}

bool criterion_14() {
    SeriesContext ctx{7, 7};
    return hall_duality_check(4, ctx).ok;
}

bool criterion_15() {
    SeriesContext ctx{6, 6};
    for (const Partition& lambda : partitions_up_to(3))
        if (!(expand_in_schur(G_series(SkewShape(lambda), ctx)) ==
              lenart_G_to_s(lambda, ctx.max_degree).terms))
            return false;

    for (const Partition& lambda : partitions_up_to(4)) {
        for (const Partition& nu : partitions_up_to(6)) {
            Int acc = 0;
            for (const Partition& mu : partitions_up_to(6)) {
                if (!mu.contains(lambda) || !nu.contains(mu)) continue;
                Int term = strict_elegant_count(mu, lambda) * elegant_count(mu, nu);
                acc += (mu.size() - lambda.size()) % 2 == 0 ? term : -term;
            }
            if (acc != (lambda == nu ? 1 : 0)) return false;
        }
    }
    return true;
}

}  // namespace

int main() {
    Harness h;
    h.run(1, "Ktilde (2,1) truncation has coefficients 1,2,1,3,8", 1.0, criterion_1);
    h.run(2, "ribbon antipode worked cases and the binomial formula", 0, criterion_2);
    h.run(3, "MNSym convolution vanishes for all |alpha| <= 5", 60.0, criterion_3);
    h.run(4, "merging antipode matches the recursive oracle, |alpha| <= 5", 0, criterion_4);
    h.run(5, "ribbon coproduct constants are the Ltilde product constants", 0, criterion_5);
    h.run(6, "worked coproduct and product of Ltilde labels", 0, criterion_6);
    h.run(7, "Lhat degree component of (1,2,1,2) via two routes", 0, criterion_7);
    h.run(8, "mQSym antipode route agreement and convolution, |alpha| <= 3", 300.0, criterion_8);
    h.run(9, "Khat bijection round trips and the worked (3,2) image", 0, criterion_9);
    h.run(10, "omega relations for all |lambda| <= 4", 0, criterion_10);
    h.run(11, "J equals the P-weighted G sum for the five stated shapes", 300.0, criterion_11);
    h.run(12, "transition identity and the phi/psi bijection", 0, criterion_12);
    h.run(13, "finite MSym identity for all |lambda| <= 4", 0, criterion_13);
    h.run(14, "Hall duality table up to size 4", 0, criterion_14);
    h.run(15, "Lenart transition matrices and their composition", 0, criterion_15);
    if (h.failures == 0)
        std::printf("all 15 acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", h.failures);
    return h.failures;
}
