#include "khopf/mnsym.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "khopf/tableaux.hpp"
#include "khopf/words.hpp"

namespace khopf {

RibbonSum rib_product(const Composition& alpha, const Composition& beta) {
    if (alpha.empty()) return RibbonSum::unit(beta);
    if (beta.empty()) return RibbonSum::unit(alpha);
    RibbonSum out;
    std::vector<int> concat = alpha.parts();
    concat.insert(concat.end(), beta.parts().begin(), beta.parts().end());
    out.add(Composition(concat), 1);

    std::vector<int> near = alpha.parts();
    near.back() += beta.parts().front() - 1;
    near.insert(near.end(), beta.parts().begin() + 1, beta.parts().end());
    out.add(Composition(near), 1);

    std::vector<int> merged = alpha.parts();
    merged.back() += beta.parts().front();
    merged.insert(merged.end(), beta.parts().begin() + 1, beta.parts().end());
    out.add(Composition(merged), 1);
    return out;
}

RibbonSum rib_product(const RibbonSum& a, const RibbonSum& b) {
    RibbonSum out;
    for (const auto& [alpha, ca] : a.terms())
        for (const auto& [beta, cb] : b.terms()) out.add(rib_product(alpha, beta), ca * cb);
    return out;
}

RibbonTensorSum rib_coproduct(const Composition& alpha) {
    int n = alpha.size();
    RibbonTensorSum out;
    for (int b = 0; b <= n; ++b) {
        for (const Composition& beta : compositions_of(b)) {
            Word w_beta = canonical_permutation(beta);
            for (int d = 0; d + b <= n; ++d) {
                for (const Composition& delta : compositions_of(d)) {
                    Word w_delta = shift(canonical_permutation(delta), b);
                    Int count = 0;
                    for (const Word& u : multishuffles(w_beta, w_delta, n))
                        if (descent_composition(u) == alpha) ++count;
                    out.add({beta, delta}, count);
                }
            }
        }
    }
    return out;
}

RibbonSum rib_antipode(const Composition& alpha) {
    RibbonSum out;
    Int sign = alpha.size() % 2 == 0 ? 1 : -1;
    for (const auto& [beta, count] : mergings(omega(alpha))) out.add(beta, sign * count);
    return out;
}

RibbonSum rib_antipode_recursive(const Composition& alpha) {
    static std::map<Composition, RibbonSum> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    }
    RibbonSum result;
    if (alpha.empty()) {
        result = RibbonSum::unit(alpha);
    } else {
        RibbonSum acc;
        Int own_coefficient = 0;
        for (const auto& [pair, coeff] : rib_coproduct(alpha)) {
            if (pair.left == alpha && pair.right.empty()) {
                own_coefficient = coeff;
                continue;
            }
            if (pair.left.size() >= alpha.size())
                throw std::logic_error("coproduct left factors shrink strictly");
            acc.add(rib_product(rib_antipode_recursive(pair.left), RibbonSum::unit(pair.right)),
                    coeff);
        }
        if (own_coefficient != 1)
            throw std::logic_error("the (alpha, empty) coproduct term has coefficient one");
        result = acc.scaled(-1);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[alpha] = result;
    return result;
}

ConvolutionResult rib_convolution_check(const Composition& alpha) {
    ConvolutionResult res;
    RibbonTensorSum delta = rib_coproduct(alpha);
    for (const auto& [pair, coeff] : delta.terms()) {
        res.residual_s_id.add(rib_product(rib_antipode(pair.left), RibbonSum::unit(pair.right)),
                              coeff);
        res.residual_id_s.add(rib_product(RibbonSum::unit(pair.left), rib_antipode(pair.right)),
                              coeff);
    }
    if (alpha.empty()) {
        res.residual_s_id.add(alpha, -1);
        res.residual_id_s.add(alpha, -1);
    }
    res.ok = res.residual_s_id.is_zero() && res.residual_id_s.is_zero();
    return res;
}

}  // namespace khopf
