#include "khopf/series.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace khopf {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        degree_ += e;
    }
}

int Monomial::exponent(int var) const {
    if (var < 1 || var > static_cast<int>(exps_.size())) return 0;
    return exps_[static_cast<std::size_t>(var) - 1];
}

std::string Monomial::to_string() const {
    if (degree_ == 0) return "1";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << "x" << (i + 1);
        if (exps_[i] > 1) out << "^" << exps_[i];
    }
    return out.str();
}

TruncatedSeries TruncatedSeries::one(SeriesContext ctx) {
    TruncatedSeries s(ctx);
    s.add_term(std::vector<int>(static_cast<std::size_t>(ctx.num_vars), 0), 1);
    return s;
}

TruncatedSeries TruncatedSeries::variable(SeriesContext ctx, int var) {
    if (var < 1 || var > ctx.num_vars) throw std::invalid_argument("variable index out of range");
    TruncatedSeries s(ctx);
    std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
    exps[static_cast<std::size_t>(var) - 1] = 1;
    s.add_term(exps, 1);
    return s;
}

void TruncatedSeries::add_term(const std::vector<int>& exps, const Int& coeff) {
    if (coeff == 0) return;
    if (static_cast<int>(exps.size()) != ctx_.num_vars)
        throw std::invalid_argument("exponent vector length must equal num_vars");
    Monomial mono(exps);
    if (mono.degree() > ctx_.max_degree) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int TruncatedSeries::coefficient(const std::vector<int>& exps) const {
    std::vector<int> padded = exps;
    for (std::size_t i = static_cast<std::size_t>(ctx_.num_vars); i < padded.size(); ++i)
        if (padded[i] != 0) return 0;
    padded.resize(static_cast<std::size_t>(ctx_.num_vars), 0);
    auto it = terms_.find(Monomial(padded));
    return it == terms_.end() ? Int(0) : it->second;
}

namespace {

void require_same_context(const SeriesContext& a, const SeriesContext& b) {
    if (!(a == b)) throw std::invalid_argument("series context mismatch");
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    require_same_context(ctx_, other.ctx_);
    for (const auto& [mono, coeff] : other.terms_) {
        auto [it, inserted] = terms_.try_emplace(mono, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    *this += other.scaled(-1);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_context(a.ctx_, b.ctx_);
    TruncatedSeries out(a.ctx_);
    int m = a.ctx_.num_vars;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma.degree() + mb.degree() > a.ctx_.max_degree) continue;
            std::vector<int> exps(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                exps[static_cast<std::size_t>(i)] = ma.exponents()[static_cast<std::size_t>(i)] +
                                                    mb.exponents()[static_cast<std::size_t>(i)];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Int& c) const {
    TruncatedSeries out(ctx_);
    if (c == 0) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, coeff * c);
    return out;
}

TruncatedSeries TruncatedSeries::negate_variables() const {
    TruncatedSeries out(ctx_);
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace(mono, mono.degree() % 2 == 0 ? coeff : -coeff);
    return out;
}

TruncatedSeries TruncatedSeries::homogeneous_component(int degree) const {
    TruncatedSeries out(ctx_);
    for (const auto& [mono, coeff] : terms_)
        if (mono.degree() == degree) out.terms_.emplace(mono, coeff);
    return out;
}

TruncatedSeries TruncatedSeries::restricted(SeriesContext smaller) const {
    if (smaller.num_vars > ctx_.num_vars || smaller.max_degree > ctx_.max_degree)
        throw std::invalid_argument("restricted() only shrinks a context");
    TruncatedSeries out(smaller);
    for (const auto& [mono, coeff] : terms_) {
        if (mono.degree() > smaller.max_degree) continue;
        bool uses_high_var = false;
        for (int v = smaller.num_vars + 1; v <= ctx_.num_vars; ++v)
            if (mono.exponent(v) > 0) uses_high_var = true;
        if (uses_high_var) continue;
        std::vector<int> exps(mono.exponents().begin(),
                              mono.exponents().begin() + smaller.num_vars);
        out.add_term(exps, coeff);
    }
    return out;
}

std::string TruncatedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) out << (coeff > 0 ? " + " : " - ");
        else if (coeff < 0) out << "-";
        first = false;
        Int mag = abs(coeff);
        if (mag != 1 || mono.degree() == 0) out << mag.get_str();
        if (mag != 1 && mono.degree() > 0) out << "*";
        if (mono.degree() > 0) out << mono.to_string();
    }
    return out.str();
}

namespace {

// Nonzero exponents of a monomial, read in variable order.
Composition packed_composition(const Monomial& mono) {
    std::vector<int> parts;
    for (int e : mono.exponents())
        if (e > 0) parts.push_back(e);
    return Composition(parts);
}

// Places parts at the variable positions listed in vars (1-based,
// increasing).
Monomial place_at(const Composition& alpha, const std::vector<int>& vars, int m) {
    std::vector<int> exps(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < vars.size(); ++i)
        exps[static_cast<std::size_t>(vars[i]) - 1] = alpha.parts()[i];
    return Monomial(exps);
}

void for_each_increasing_selection(int m, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> sel(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == k) {
            visit(sel);
            return;
        }
        for (int v = low; v <= m - (k - pos - 1); ++v) {
            sel[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, v + 1);
        }
    };
    rec(0, 1);
}

}  // namespace

bool is_quasisymmetric_component(const TruncatedSeries& f, int degree,
                                 std::pair<Monomial, Monomial>* witness) {
    int m = f.context().num_vars;
    TruncatedSeries component = f.homogeneous_component(degree);
    std::set<Composition> seen;
    for (const auto& [mono, coeff] : component.terms())
        seen.insert(packed_composition(mono));
    for (const Composition& alpha : seen) {
        int k = alpha.length();
        Monomial canonical = place_at(alpha, [&] {
            std::vector<int> first(static_cast<std::size_t>(k));
            std::iota(first.begin(), first.end(), 1);
            return first;
        }(), m);
        Int expected = component.coefficient(canonical.exponents());
        bool ok = true;
        Monomial bad;
        for_each_increasing_selection(m, k, [&](const std::vector<int>& vars) {
            if (!ok) return;
            Monomial mono = place_at(alpha, vars, m);
            if (component.coefficient(mono.exponents()) != expected) {
                ok = false;
                bad = mono;
            }
        });
        if (!ok) {
            if (witness) *witness = {canonical, bad};
            return false;
        }
    }
    return true;
}

bool is_symmetric_component(const TruncatedSeries& f, int degree,
                            std::pair<Monomial, Monomial>* witness) {
    TruncatedSeries component = f.homogeneous_component(degree);
    std::set<std::vector<int>> seen;  // sorted-descending exponent vectors
    for (const auto& [mono, coeff] : component.terms()) {
        std::vector<int> sorted = mono.exponents();
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        seen.insert(sorted);
    }
    for (const std::vector<int>& sorted : seen) {
        Monomial canonical(sorted);
        Int expected = component.coefficient(sorted);
        std::vector<int> perm = sorted;
        std::sort(perm.begin(), perm.end());
        do {
            if (component.coefficient(perm) != expected) {
                if (witness) *witness = {canonical, Monomial(perm)};
                return false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

TruncatedSeries fundamental_L(const Composition& alpha, SeriesContext ctx) {
    if (alpha.size() > ctx.max_degree)
        throw std::invalid_argument("composition size exceeds degree bound");
    TruncatedSeries out(ctx);
    int n = alpha.size();
    if (n == 0) return TruncatedSeries::one(ctx);
    std::set<int> descents = subset_of_composition(alpha);
    std::vector<int> entry(static_cast<std::size_t>(n));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
            for (int e : entry) ++exps[static_cast<std::size_t>(e) - 1];
            out.add_term(exps, 1);
            return;
        }
        int low = 1;
        if (pos > 0) low = entry[static_cast<std::size_t>(pos) - 1] + (descents.count(pos) ? 1 : 0);
        for (int v = low; v <= ctx.num_vars; ++v) {
            entry[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

TruncatedSeries monomial_M(const Composition& alpha, SeriesContext ctx) {
    if (alpha.size() > ctx.max_degree)
        throw std::invalid_argument("composition size exceeds degree bound");
    TruncatedSeries out(ctx);
    int k = alpha.length();
    if (k == 0) return TruncatedSeries::one(ctx);
    if (k > ctx.num_vars) return out;
    for_each_increasing_selection(ctx.num_vars, k, [&](const std::vector<int>& vars) {
        out.add_term(place_at(alpha, vars, ctx.num_vars).exponents(), 1);
    });
    return out;
}

TruncatedSeries schur_skew(const SkewShape& shape, SeriesContext ctx) {
    if (shape.cell_count() > ctx.max_degree)
        throw std::invalid_argument("shape size exceeds degree bound");
    static std::map<std::tuple<Partition, Partition, int, int>, TruncatedSeries> cache;
    static std::mutex cache_mutex;
    std::tuple<Partition, Partition, int, int> key{shape.outer(), shape.inner(), ctx.num_vars,
                                                   ctx.max_degree};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    TruncatedSeries out(ctx);
    auto cells = shape.cells();
    int n = static_cast<int>(cells.size());
    if (n == 0) {
        out = TruncatedSeries::one(ctx);
    } else {
        std::map<Cell, int> value;
        std::function<void(int)> rec = [&](int idx) {
            if (idx == n) {
                std::vector<int> exps(static_cast<std::size_t>(ctx.num_vars), 0);
                for (const auto& [cell, v] : value) ++exps[static_cast<std::size_t>(v) - 1];
                out.add_term(exps, 1);
                return;
            }
            Cell cell = cells[static_cast<std::size_t>(idx)];
            int low = 1;
            if (auto it = value.find({cell.row, cell.col - 1}); it != value.end())
                low = std::max(low, it->second);
            if (auto it = value.find({cell.row - 1, cell.col}); it != value.end())
                low = std::max(low, it->second + 1);
            for (int v = low; v <= ctx.num_vars; ++v) {
                value[cell] = v;
                rec(idx + 1);
            }
            value.erase(cell);
        };
        rec(0);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(key, out);
    return out;
}

TruncatedSeries schur(const Partition& lambda, SeriesContext ctx) {
    return schur_skew(SkewShape(lambda), ctx);
}

FormalSum<Composition> expand_in_fundamental(const TruncatedSeries& f, int degree) {
    std::pair<Monomial, Monomial> witness;
    if (!is_quasisymmetric_component(f, degree, &witness))
        throw NotSymmetricError("component is not quasisymmetric: coefficient of " +
                                    witness.first.to_string() + " differs from " +
                                    witness.second.to_string(),
                                witness.first, witness.second);
    int m = f.context().num_vars;
    TruncatedSeries component = f.homogeneous_component(degree);

    // Monomial-basis coefficients, then Moebius inversion over the subset
    // lattice of descent sets.
    std::map<Composition, Int> m_coeff;
    for (const Composition& gamma : compositions_of(degree)) {
        if (gamma.length() > m) continue;
        std::vector<int> first(static_cast<std::size_t>(gamma.length()));
        std::iota(first.begin(), first.end(), 1);
        m_coeff[gamma] = component.coefficient(place_at(gamma, first, m).exponents());
    }
    FormalSum<Composition> out;
    for (const auto& [beta, unused] : m_coeff) {
        std::set<int> sb_set = subset_of_composition(beta);
        std::vector<int> sb(sb_set.begin(), sb_set.end());
        Int total = 0;
        for (unsigned long mask = 0; mask < (1UL << sb.size()); ++mask) {
            std::set<int> s;
            int dropped = 0;
            for (std::size_t i = 0; i < sb.size(); ++i) {
                if (mask & (1UL << i)) s.insert(sb[i]);
                else ++dropped;
            }
            Int c = m_coeff.at(composition_of_subset(s, degree));
            total += (dropped % 2 == 0) ? c : -c;
        }
        out.add(beta, total);
    }

    // The inversion is complete when m >= degree; in fewer variables it is
    // still exact for labels with at most m parts, which we verify by
    // resynthesis.
    TruncatedSeries check(f.context());
    for (const auto& [beta, c] : out.terms())
        check += fundamental_L(beta, f.context()).scaled(c);
    if (!(check == component))
        throw std::runtime_error("fundamental expansion does not reproduce the component");
    return out;
}

FormalSum<Partition> expand_in_schur(const TruncatedSeries& f) {
    const SeriesContext& ctx = f.context();
    if (ctx.num_vars < ctx.max_degree)
        throw std::invalid_argument("schur expansion needs num_vars >= max_degree");
    FormalSum<Partition> out;
    for (int d = 0; d <= ctx.max_degree; ++d) {
        std::pair<Monomial, Monomial> witness;
        if (!is_symmetric_component(f, d, &witness))
            throw NotSymmetricError("component is not symmetric: coefficient of " +
                                        witness.first.to_string() + " differs from " +
                                        witness.second.to_string(),
                                    witness.first, witness.second);
        TruncatedSeries component = f.homogeneous_component(d);
        while (!component.is_zero()) {
            // Leading monomial in (degree, lex) order has weakly decreasing
            // exponents since the component is symmetric.
            auto lead = std::prev(component.terms().end());
            std::vector<int> exps = lead->first.exponents();
            Int c = lead->second;
            std::vector<int> parts;
            for (int e : exps)
                if (e > 0) parts.push_back(e);
            if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
                throw std::logic_error("leading monomial of a symmetric component is a partition");
            Partition lambda(parts);
            component -= schur(lambda, ctx).scaled(c);
            out.add(lambda, c);
        }
    }
    return out;
}

Int hall_pairing(const FormalSum<Partition>& a, const FormalSum<Partition>& b) {
    Int total = 0;
    for (const auto& [lambda, ca] : a.terms()) total += ca * b.coefficient(lambda);
    return total;
}

Int hall_pairing(const TruncatedSeries& a, const TruncatedSeries& b) {
    return hall_pairing(expand_in_schur(a), expand_in_schur(b));
}

TruncatedSeries omega_sym(const TruncatedSeries& f) {
    TruncatedSeries out(f.context());
    for (const auto& [lambda, c] : expand_in_schur(f))
        out += schur(conjugate(lambda), f.context()).scaled(c);
    return out;
}

}  // namespace khopf
