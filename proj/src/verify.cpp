#include "khopf/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "khopf/ksym.hpp"
#include "khopf/mnsym.hpp"
#include "khopf/mqsym.hpp"
#include "khopf/tableaux.hpp"
#include "khopf/words.hpp"

namespace khopf {

namespace {

void suite_core(VerifyReport& report, int max_size) {
    for (int n = 0; n <= max_size; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            VerifyCase c{"core alpha=" + alpha.to_string(), true, ""};
            if (composition_of_subset(subset_of_composition(alpha), n) != alpha) {
                c.ok = false;
                c.detail = "subset round trip failed";
            }
            if (omega(omega(alpha)) != alpha) {
                c.ok = false;
                c.detail = "omega is not an involution here";
            }
            if (!alpha.empty() &&
                composition_of_ribbon_word(ribbon_word(alpha)) != alpha) {
                c.ok = false;
                c.detail = "ribbon word round trip failed";
            }
            if (!alpha.empty()) {
                // omega flips the ribbon walk: reverse it and swap R with U.
                RibbonWord flipped = ribbon_word(alpha);
                std::reverse(flipped.steps.begin(), flipped.steps.end());
                for (Step& s : flipped.steps) s = s == Step::R ? Step::U : Step::R;
                if (ribbon_word(omega(alpha)) != flipped) {
                    c.ok = false;
                    c.detail = "omega ribbon word is not the reverse complement";
                }
            }
            if (descent_composition(canonical_permutation(alpha)) != alpha) {
                c.ok = false;
                c.detail = "canonical permutation has the wrong descents";
            }
            report.cases.push_back(std::move(c));
        }
    }
}

void suite_words(VerifyReport& report, int max_size) {
    for (int n = 0; n <= max_size; ++n) {
        Word w(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
        VerifyCase c{"cuut length n=" + std::to_string(n), true, ""};
        if (static_cast<int>(cuut(w).size()) != 2 * n + 1) {
            c.ok = false;
            c.detail = "expected 2n+1 splits";
        }
        report.cases.push_back(std::move(c));
    }
    for (int a = 1; a <= std::min(max_size, 5); ++a) {
        for (int b = 1; a + b <= std::min(max_size + 1, 6); ++b) {
            Word u(static_cast<std::size_t>(a)), v(static_cast<std::size_t>(b));
            for (int i = 0; i < a; ++i) u[static_cast<std::size_t>(i)] = i + 1;
            for (int i = 0; i < b; ++i) v[static_cast<std::size_t>(i)] = a + i + 1;
            auto shuffles = multishuffles(u, v, a + b);
            VerifyCase c{"ordinary shuffles " + std::to_string(a) + "+" + std::to_string(b), true,
                         ""};
            if (Int(static_cast<long>(shuffles.size())) != binomial(a + b, a)) {
                c.ok = false;
                c.detail = "count is not binomial(a+b, a)";
            }
            for (const Word& s : shuffles) {
                if (!is_m_permutation(s)) {
                    c.ok = false;
                    c.detail = "output has equal adjacent letters";
                }
                Word ru, rv;
                for (int x : s) (x <= a ? ru : rv).push_back(x);
                if (!is_multiword(ru, u) || !is_multiword(rv, v)) {
                    c.ok = false;
                    c.detail = "restriction is not a multiword of its source";
                }
            }
            report.cases.push_back(std::move(c));
        }
    }
}

void suite_mnsym(VerifyReport& report, int max_size) {
    for (int n = 1; n <= max_size; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            VerifyCase c{"mnsym alpha=" + alpha.to_string(), true, ""};
            ConvolutionResult conv = rib_convolution_check(alpha);
            if (!conv.ok) {
                c.ok = false;
                c.detail = "convolution residual " + conv.residual_s_id.to_string();
            }
            if (rib_antipode(alpha) != rib_antipode_recursive(alpha)) {
                c.ok = false;
                c.detail = "merging antipode disagrees with the recursive oracle";
            }
            report.cases.push_back(std::move(c));
        }
    }
}

void suite_mqsym(VerifyReport& report, int max_size) {
    SeriesContext ctx{6, 6};
    for (int n = 1; n <= max_size; ++n) {
        for (const Composition& alpha : compositions_of(n)) {
            VerifyCase c{"mqsym alpha=" + alpha.to_string(), true, ""};
            TruncatedSeries via_mergings =
                realize(ltilde_antipode(alpha, ctx.max_degree), ctx, LBasis::Ltilde);
            TruncatedSeries closed_form = lhat_antipode_series(alpha, ctx);
            if (!(via_mergings == closed_form)) {
                c.ok = false;
                c.detail = "antipode routes disagree";
            }
            TruncatedSeries residual(ctx);
            for (const auto& [pair, coeff] : ltilde_coproduct(alpha)) {
                TruncatedSeries left =
                    realize(ltilde_antipode(pair.left, ctx.max_degree), ctx, LBasis::Ltilde);
                residual += (left * ltilde_series(pair.right, ctx)).scaled(coeff);
            }
            if (!residual.is_zero()) {
                c.ok = false;
                c.detail = "convolution residual is nonzero";
            }
            report.cases.push_back(std::move(c));
        }
    }
}

void suite_omega(VerifyReport& report, int max_size) {
    SeriesContext ctx{6, 6};
    for (const Partition& lambda : partitions_up_to(max_size)) {
        VerifyCase c{"omega lambda=" + lambda.to_string(), true, ""};
        SkewShape shape(lambda);
        if (!(omega_sym(ktilde_series(shape, ctx)) == J_series(shape, ctx))) {
            c.ok = false;
            c.detail = "omega(Ktilde) != J";
        }
        if (!(omega_sym(g_series(shape, ctx)) == j_series(shape, ctx))) {
            c.ok = false;
            c.detail = "omega(g) != j";
        }
        report.cases.push_back(std::move(c));
    }
}

void suite_sg_identity(VerifyReport& report, int max_size) {
    for (const Partition& mu : partitions_up_to(max_size)) {
        if (mu.empty()) continue;
        int bound = mu.size() + 3;
        SeriesContext ctx{bound, bound};
        VerifyCase c{"sg mu=" + mu.to_string(), true, ""};
        TruncatedSeries lhs = J_series(SkewShape(mu), ctx);
        TruncatedSeries rhs(ctx);
        Partition mu_t = conjugate(mu);
        for (const Partition& lambda : partitions_up_to(bound)) {
            Int p = restricted_pp_count(mu_t, lambda);
            if (p != 0) rhs += G_series(SkewShape(lambda), ctx).scaled(p);
        }
        if (!(lhs == rhs)) {
            c.ok = false;
            c.detail = "J differs from the restricted-plane-partition expansion";
        }
        report.cases.push_back(std::move(c));
    }
}

void suite_hall(VerifyReport& report, int max_size) {
    int bound = max_size + 3;
    SeriesContext ctx{bound, bound};
    HallDualityReport hall = hall_duality_check(max_size, ctx);
    report.cases.push_back({"hall duality up to size " + std::to_string(max_size), hall.ok,
                            hall.first_failure});
}

void suite_lenart(VerifyReport& report, int max_size) {
    SeriesContext ctx{6, 6};
    for (const Partition& lambda : partitions_up_to(std::min(max_size, 3))) {
        VerifyCase c{"lenart G->s lambda=" + lambda.to_string(), true, ""};
        if (!(expand_in_schur(G_series(SkewShape(lambda), ctx)) ==
              lenart_G_to_s(lambda, ctx.max_degree).terms)) {
            c.ok = false;
            c.detail = "schur expansion differs from the strict elegant counts";
        }
        report.cases.push_back(std::move(c));
    }
    VerifyCase composition_case{
        "lenart transition composition up to size " + std::to_string(max_size), true, ""};
    for (const Partition& lambda : partitions_up_to(max_size)) {
        for (const Partition& nu : partitions_up_to(6)) {
            Int acc = 0;
            for (const Partition& mu : partitions_up_to(6)) {
                if (!mu.contains(lambda) || !nu.contains(mu)) continue;
                Int term = strict_elegant_count(mu, lambda) * elegant_count(mu, nu);
                acc += (mu.size() - lambda.size()) % 2 == 0 ? term : -term;
            }
            Int expected = lambda == nu ? 1 : 0;
            if (acc != expected && composition_case.ok) {
                composition_case.ok = false;
                composition_case.detail = "not the identity at lambda=" + lambda.to_string() +
                                          " nu=" + nu.to_string();
            }
        }
    }
    report.cases.push_back(std::move(composition_case));
}

void suite_transition(VerifyReport& report, int max_size) {
    VerifyCase grid{"transition identity grid (|lambda| <= " +
                        std::to_string(std::min(max_size, 3)) + ", |nu| <= 6)",
                    true, ""};
    for (const Partition& lambda : partitions_up_to(std::min(max_size, 3))) {
        for (const Partition& nu : partitions_up_to(6)) {
            TransitionCheck check = transition_identity_check(lambda, nu);
            if (!check.ok && grid.ok) {
                grid.ok = false;
                grid.detail = "lambda=" + lambda.to_string() + " nu=" + nu.to_string() +
                              " counts " + check.sum_of_products.get_str() + "/" +
                              check.rpp_count.get_str() + "/" + check.pair_count.get_str();
            }
        }
    }
    report.cases.push_back(std::move(grid));
}

void suite_msym(VerifyReport& report, int max_size) {
    SeriesContext ctx{max_size + 1, max_size};
    for (const Partition& lambda : partitions_up_to(max_size)) {
        VerifyCase c{"msym finite identity lambda=" + lambda.to_string(), true, ""};
        TruncatedSeries lhs = g_series(SkewShape(lambda), ctx);
        TruncatedSeries rhs(ctx);
        Partition lambda_t = conjugate(lambda);
        for (const Partition& mu : partitions_up_to(lambda_t.size())) {
            if (!lambda_t.contains(mu)) continue;
            Int p = restricted_pp_count(mu, lambda_t);
            if (p != 0) rhs += jtilde_series(SkewShape(mu), ctx).scaled(p);
        }
        if (!(lhs == rhs)) {
            c.ok = false;
            c.detail = "g differs from the P-weighted jtilde sum";
        }
        report.cases.push_back(std::move(c));
    }
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
    static const std::vector<SuiteInfo> suites = {
        {"core", "composition/omega/ribbon round trips and canonical permutations", 8, 8},
        {"words", "cuut sizes, shuffle counts, multiword restrictions", 8, 8},
        {"mnsym", "MNSym convolution residuals and antipode route agreement", 5, 6},
        {"mqsym", "mQSym antipode routes and convolution residual as series", 3, 3},
        {"omega", "omega(Ktilde)=J and omega(g)=j as truncated series", 4, 4},
        {"sg-identity", "J = sum of P-weighted G as truncated series", 4, 4},
        {"hall-duality", "<g,G> = delta via Schur expansions", 4, 4},
        {"lenart", "Schur/Grothendieck transition matrices and their composition", 4, 4},
        {"transition", "r*f = P identity with the phi/psi bijection", 3, 3},
        {"msym", "finite identity g = sum of P-weighted jtilde", 4, 4},
    };
    return suites;
}

VerifyReport run_suite(const std::string& name, int max_size) {
    const SuiteInfo* info = nullptr;
    for (const auto& s : verify_suites())
        if (s.name == name) info = &s;
    if (!info) throw std::invalid_argument("unknown suite '" + name + "'");
    int size = std::min(max_size > 0 ? max_size : info->default_max_size, info->cap);
    VerifyReport report;
    report.suite = name;
    if (name == "core") suite_core(report, size);
    else if (name == "words") suite_words(report, size);
    else if (name == "mnsym") suite_mnsym(report, size);
    else if (name == "mqsym") suite_mqsym(report, size);
    else if (name == "omega") suite_omega(report, size);
    else if (name == "sg-identity") suite_sg_identity(report, size);
    else if (name == "hall-duality") suite_hall(report, size);
    else if (name == "lenart") suite_lenart(report, size);
    else if (name == "transition") suite_transition(report, size);
    else if (name == "msym") suite_msym(report, size);
    return report;
}

}  // namespace khopf
