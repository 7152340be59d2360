#pragma once

#include "khopf/core.hpp"
#include "khopf/formal_sum.hpp"

namespace khopf {

/// Element of MNSym in the Multi-noncommutative ribbon basis.
using RibbonSum = FormalSum<Composition>;
using RibbonTensorSum = TensorSum<Composition>;

/// Three-term product: concatenation, the near-concatenation that merges
/// the adjacent parts minus one, and the one that merges them outright.
/// The empty composition is the unit.
RibbonSum rib_product(const Composition& alpha, const Composition& beta);
RibbonSum rib_product(const RibbonSum& a, const RibbonSum& b);

/// Coproduct: the coefficient of R~_beta (x) R~_delta is the number of
/// multishuffles of w_beta and w_delta shifted by |beta| whose descent
/// composition is alpha.
RibbonTensorSum rib_coproduct(const Composition& alpha);

/// Merging antipode: (-1)^{|alpha|} sum of M_{omega(alpha),beta} R~_beta.
RibbonSum rib_antipode(const Composition& alpha);

/// Independent oracle: unwinds the convolution identity (S*id) = unit and
/// recurses on strictly smaller left factors.
RibbonSum rib_antipode_recursive(const Composition& alpha);

struct ConvolutionResult {
    bool ok = false;
    RibbonSum residual_s_id;  // (S*id)(R~_alpha) - eta(eps(R~_alpha))
    RibbonSum residual_id_s;
};

/// Evaluates both convolutions with the merging antipode; ok iff both
/// residuals vanish.
ConvolutionResult rib_convolution_check(const Composition& alpha);

}  // namespace khopf
