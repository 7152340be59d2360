#include "khopf/core.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace khopf {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
        size_ += p;
    }
}

std::string Composition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::part(int row) const {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row) - 1];
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.part(r) > part(r)) return false;
    return true;
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

bool SkewShape::contains(int row, int col) const {
    return col >= 1 && col <= outer_.part(row) && col > inner_.part(row);
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
    return out;
}

SkewShape SkewShape::transpose() const { return {conjugate(outer_), conjugate(inner_)}; }

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

std::string RibbonWord::to_string() const {
    std::string out;
    for (Step s : steps) out += (s == Step::R ? 'R' : 'U');
    return out;
}

bool is_m_permutation(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] == w[i + 1]) return false;
    return true;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "-";
    bool digits = std::all_of(w.begin(), w.end(), [](int x) { return x >= 1 && x <= 9; });
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!digits && i) out << ',';
        out << w[i];
    }
    return out.str();
}

LabeledPoset::LabeledPoset(int n, std::vector<std::pair<int, int>> covers, std::vector<int> theta)
    : n_(n), covers_(std::move(covers)), theta_(std::move(theta)) {
    if (n_ < 0) throw std::invalid_argument("poset size must be nonnegative");
    if (static_cast<int>(theta_.size()) != n_)
        throw std::invalid_argument("theta must assign a label to every element");
    theta_inv_.assign(static_cast<std::size_t>(n_), -1);
    for (int e = 0; e < n_; ++e) {
        int lab = theta_[static_cast<std::size_t>(e)];
        if (lab < 1 || lab > n_ || theta_inv_[static_cast<std::size_t>(lab) - 1] != -1)
            throw std::invalid_argument("theta must be a bijection onto [n]");
        theta_inv_[static_cast<std::size_t>(lab) - 1] = e;
    }

    // Reachability closure of the covers.
    less_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), false);
    auto at = [&](int a, int b) -> std::vector<bool>::reference {
        return less_[static_cast<std::size_t>(a * n_ + b)];
    };
    for (auto [s, t] : covers_) {
        if (s < 0 || s >= n_ || t < 0 || t >= n_ || s == t)
            throw std::invalid_argument("cover endpoints out of range");
        at(s, t) = true;
    }
    for (int k = 0; k < n_; ++k)
        for (int a = 0; a < n_; ++a)
            if (at(a, k))
                for (int b = 0; b < n_; ++b)
                    if (at(k, b)) at(a, b) = true;
    for (int a = 0; a < n_; ++a)
        if (at(a, a)) throw std::invalid_argument("covers contain a cycle");
    // Each cover must be a genuine covering relation.
    for (auto [s, t] : covers_)
        for (int k = 0; k < n_; ++k)
            if (at(s, k) && at(k, t))
                throw std::invalid_argument("covers are not transitively reduced");

    // Topological order, smallest ready element index first.
    topo_.reserve(static_cast<std::size_t>(n_));
    std::vector<bool> placed(static_cast<std::size_t>(n_), false);
    while (static_cast<int>(topo_.size()) < n_) {
        for (int e = 0; e < n_; ++e) {
            if (placed[static_cast<std::size_t>(e)]) continue;
            bool ready = true;
            for (int f = 0; f < n_; ++f)
                if (!placed[static_cast<std::size_t>(f)] && less(f, e)) ready = false;
            if (ready) {
                topo_.push_back(e);
                placed[static_cast<std::size_t>(e)] = true;
                break;
            }
        }
    }
}

LabeledPoset LabeledPoset::chain(const Word& w) {
    int n = static_cast<int>(w.size());
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    return {n, std::move(covers), w};
}

Composition composition_of_subset(const std::set<int>& s, int n) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    for (int x : s)
        if (x < 1 || x > n - 1) throw std::invalid_argument("subset element outside [n-1]");
    std::vector<int> parts;
    int prev = 0;
    for (int x : s) {
        parts.push_back(x - prev);
        prev = x;
    }
    if (n > prev) parts.push_back(n - prev);
    return Composition(parts);
}

std::set<int> subset_of_composition(const Composition& alpha) {
    std::set<int> s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
        acc += alpha.parts()[i];
        s.insert(acc);
    }
    return s;
}

Composition descent_composition(const Word& w) {
    if (!is_m_permutation(w))
        throw std::invalid_argument("descent composition needs adjacent letters to differ");
    std::set<int> des;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) des.insert(static_cast<int>(i) + 1);
    return composition_of_subset(des, static_cast<int>(w.size()));
}

namespace {

// Depth-first search for the lex-least permutation with prescribed
// ascent/descent pattern; first hit wins.
bool build_lex_min(const std::set<int>& descents, int n, std::vector<bool>& used, Word& acc) {
    int pos = static_cast<int>(acc.size());
    if (pos == n) return true;
    for (int v = 1; v <= n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (pos > 0) {
            bool want_descent = descents.count(pos) > 0;
            if (want_descent ? (v > acc.back()) : (v < acc.back())) continue;
        }
        used[static_cast<std::size_t>(v)] = true;
        acc.push_back(v);
        if (build_lex_min(descents, n, used, acc)) return true;
        acc.pop_back();
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

}  // namespace

Word canonical_permutation(const Composition& alpha) {
    static std::map<Composition, Word> cache;
    static std::mutex cache_mutex;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        if (auto it = cache.find(alpha); it != cache.end()) return it->second;
    }
    int n = alpha.size();
    std::set<int> descents = subset_of_composition(alpha);
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    Word acc;
    if (!build_lex_min(descents, n, used, acc))
        throw std::logic_error("every descent set is realizable");
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[alpha] = acc;
    return acc;
}

std::vector<Word> permutations_with_descent_composition(const Composition& alpha) {
    int n = alpha.size();
    Word w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Word> out;
    do {
        if (descent_composition(w) == alpha) out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Composition reverse(const Composition& alpha) {
    std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
    return Composition(parts);
}

Composition omega(const Composition& alpha) {
    int n = alpha.size();
    std::set<int> rev_sums = subset_of_composition(reverse(alpha));
    std::set<int> complement;
    for (int i = 1; i <= n - 1; ++i)
        if (!rev_sums.count(i)) complement.insert(i);
    return composition_of_subset(complement, n);
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    for (int c = 1; c <= (lambda.empty() ? 0 : lambda.parts()[0]); ++c) {
        int height = 0;
        for (int r = 1; r <= lambda.length(); ++r)
            if (lambda.part(r) >= c) ++height;
        cols.push_back(height);
    }
    return Partition(cols);
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n == 0 ? 1 : n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& p : partitions_of(k)) out.push_back(p);
    return out;
}

std::vector<Composition> compositions_of(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // One composition per subset of [n-1].
    for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
        std::set<int> s;
        for (int i = 1; i <= n - 1; ++i)
            if (mask & (1UL << (i - 1))) s.insert(i);
        out.push_back(composition_of_subset(s, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Composition> compositions_up_to(int n) {
    std::vector<Composition> out;
    for (int k = 0; k <= n; ++k)
        for (auto& c : compositions_of(k)) out.push_back(c);
    return out;
}

RibbonWord ribbon_word(const Composition& alpha) {
    RibbonWord word;
    for (int i = 0; i < alpha.length(); ++i) {
        if (i > 0) word.steps.push_back(Step::U);
        for (int r = 1; r < alpha.parts()[static_cast<std::size_t>(i)]; ++r)
            word.steps.push_back(Step::R);
    }
    return word;
}

Composition composition_of_ribbon_word(const RibbonWord& word) {
    std::vector<int> parts{1};
    for (Step s : word.steps) {
        if (s == Step::R)
            ++parts.back();
        else
            parts.push_back(1);
    }
    return Composition(parts);
}

LabeledPoset row_reading_poset(const SkewShape& shape) {
    auto cells = shape.cells();
    int n = static_cast<int>(cells.size());
    std::map<Cell, int> index;
    for (int i = 0; i < n; ++i) index[cells[static_cast<std::size_t>(i)]] = i;

    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i) {
        Cell c = cells[static_cast<std::size_t>(i)];
        if (auto it = index.find({c.row, c.col + 1}); it != index.end())
            covers.emplace_back(i, it->second);
        if (auto it = index.find({c.row + 1, c.col}); it != index.end())
            covers.emplace_back(i, it->second);
    }

    // theta_s: bottom row first, left to right.
    std::vector<int> theta(static_cast<std::size_t>(n));
    int next = 1;
    for (int r = shape.outer().length(); r >= 1; --r)
        for (int c = shape.inner().part(r) + 1; c <= shape.outer().part(r); ++c)
            theta[static_cast<std::size_t>(index.at({r, c}))] = next++;
    return {n, std::move(covers), std::move(theta)};
}

namespace {

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty() || text == "-") return parts;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in '" + text + "'");
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad part '" + tok + "'");
        parts.push_back(v);
    }
    return parts;
}

}  // namespace

Composition parse_composition(const std::string& text) { return Composition(parse_parts(text)); }

Partition parse_partition(const std::string& text) { return Partition(parse_parts(text)); }

SkewShape parse_skew_shape(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.empty() || text == "-") return w;
    if (text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("bad letter in word '" + text + "'");
            w.push_back(ch - '0');
        }
        return w;
    }
    for (int p : parse_parts(text)) {
        if (p < 1) throw std::invalid_argument("word letters must be positive");
        w.push_back(p);
    }
    return w;
}

}  // namespace khopf
