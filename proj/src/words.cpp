#include "khopf/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace khopf {

bool is_multiword(const Word& w, const Word& a) {
    std::size_t r = w.size(), k = a.size();
    if (k == 0) return r == 0;
    if (r < k) return false;
    // dp[j] : w[0..i) can map onto a[0..j).
    std::vector<bool> dp(k + 1, false);
    dp[0] = true;
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<bool> next(k + 1, false);
        for (std::size_t j = 1; j <= k; ++j)
            if (w[i - 1] == a[j - 1] && (dp[j] || dp[j - 1])) next[j] = true;
        dp = std::move(next);
    }
    return dp[k];
}

Word shift(const Word& w, int n) {
    Word out = w;
    for (int& x : out) x += n;
    return out;
}

namespace {

struct ShuffleState {
    const Word& u;
    const Word& v;
    int target_len;
    std::vector<Word>* out;
    Word acc;

    void extend(std::size_t iu, std::size_t iv) {
        int len = static_cast<int>(acc.size());
        int need = static_cast<int>(u.size() - iu) + static_cast<int>(v.size() - iv);
        if (len + need > target_len) return;
        if (len == target_len) {
            if (iu == u.size() && iv == v.size()) out->push_back(acc);
            return;
        }
        int last = acc.empty() ? 0 : acc.back();
        // Candidate next letters: advance in u, repeat u's current letter,
        // advance in v, repeat v's current letter. Sorted for lex output.
        struct Option {
            int letter;
            std::size_t iu, iv;
        };
        std::vector<Option> opts;
        opts.reserve(4);
        if (iu < u.size()) opts.push_back({u[iu], iu + 1, iv});
        if (iu > 0) opts.push_back({u[iu - 1], iu, iv});
        if (iv < v.size()) opts.push_back({v[iv], iu, iv + 1});
        if (iv > 0) opts.push_back({v[iv - 1], iu, iv});
        std::sort(opts.begin(), opts.end(),
                  [](const Option& a, const Option& b) { return a.letter < b.letter; });
        for (std::size_t i = 0; i < opts.size(); ++i) {
            if (opts[i].letter == last) continue;
            acc.push_back(opts[i].letter);
            extend(opts[i].iu, opts[i].iv);
            acc.pop_back();
        }
    }
};

void require_distinct(const Word& w, const char* which) {
    std::set<int> seen(w.begin(), w.end());
    if (seen.size() != w.size())
        throw std::invalid_argument(std::string("multishuffle input ") + which +
                                    " must have distinct letters");
}

}  // namespace

std::vector<Word> multishuffles(const Word& u, const Word& v, int exact_length) {
    require_distinct(u, "u");
    require_distinct(v, "v");
    std::set<int> alpha_u(u.begin(), u.end());
    for (int x : v)
        if (alpha_u.count(x)) throw std::invalid_argument("multishuffle alphabets must be disjoint");

    std::vector<Word> out;
    if (exact_length < static_cast<int>(std::max(u.size(), v.size()))) return out;
    ShuffleState state{u, v, exact_length, &out, {}};
    state.extend(0, 0);
    return out;
}

std::vector<TensorSplit> cuut(const Word& w) {
    std::size_t k = w.size();
    std::vector<TensorSplit> out;
    out.reserve(2 * k + 1);
    out.push_back({{}, w});
    for (std::size_t i = 1; i <= k; ++i) {
        Word prefix(w.begin(), w.begin() + static_cast<long>(i));
        out.push_back({prefix, Word(w.begin() + static_cast<long>(i) - 1, w.end())});
        out.push_back({prefix, Word(w.begin() + static_cast<long>(i), w.end())});
    }
    return out;
}

namespace {

void extend_multi_extension(const LabeledPoset& poset, int n_letters, int next_letter,
                            std::vector<std::vector<int>>& blocks, int unstarted,
                            std::vector<MultiExtension>& out) {
    int n = poset.size();
    if (next_letter > n_letters) {
        if (unstarted == 0) out.push_back(blocks);
        return;
    }
    if (n_letters - next_letter + 1 < unstarted) return;
    for (int e = 0; e < n; ++e) {
        auto& block = blocks[static_cast<std::size_t>(e)];
        // No block may contain consecutive letters.
        if (!block.empty() && block.back() == next_letter - 1) continue;
        // Blocks of strictly larger elements must lie entirely above; once
        // one has started, this element is frozen.
        bool blocked = false;
        for (int f = 0; f < n && !blocked; ++f)
            if (poset.less(e, f) && !blocks[static_cast<std::size_t>(f)].empty()) blocked = true;
        if (blocked) continue;
        bool was_empty = block.empty();
        block.push_back(next_letter);
        extend_multi_extension(poset, n_letters, next_letter + 1, blocks,
                               unstarted - (was_empty ? 1 : 0), out);
        block.pop_back();
    }
}

}  // namespace

std::vector<MultiExtension> linear_multi_extensions(const LabeledPoset& poset, int n_letters) {
    if (n_letters < poset.size())
        throw std::invalid_argument("linear multi-extension needs at least |P| letters");
    std::vector<MultiExtension> out;
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(poset.size()));
    extend_multi_extension(poset, n_letters, 1, blocks, poset.size(), out);
    return out;
}

std::vector<Word> multi_jordan_holder(const LabeledPoset& poset, int n_letters) {
    std::vector<Word> out;
    for (const auto& ext : linear_multi_extensions(poset, n_letters)) {
        Word w(static_cast<std::size_t>(n_letters));
        for (int e = 0; e < poset.size(); ++e)
            for (int i : ext[static_cast<std::size_t>(e)])
                w[static_cast<std::size_t>(i) - 1] = poset.label(e);
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_i_extension(const std::set<int>& d, int n, int i,
                          const std::function<void(const std::set<int>& e)>& visit) {
    if (i < 0) throw std::invalid_argument("i must be nonnegative");
    int domain = n - 1, range = n + i - 1;
    if (domain < 0) return;
    // Choose the image of the order-preserving injection; E is then forced.
    std::vector<int> image(static_cast<std::size_t>(domain));
    std::function<void(int, int)> choose = [&](int pos, int low) {
        if (pos == domain) {
            std::set<int> e;
            std::set<int> in_image;
            for (int j = 1; j <= domain; ++j) {
                int t = image[static_cast<std::size_t>(j) - 1];
                in_image.insert(t);
                if (d.count(j)) e.insert(t);
            }
            for (int x = 1; x <= range; ++x)
                if (!in_image.count(x)) e.insert(x);
            visit(e);
            return;
        }
        for (int t = low; t <= range - (domain - pos - 1); ++t) {
            image[static_cast<std::size_t>(pos)] = t;
            choose(pos + 1, t + 1);
        }
    };
    choose(0, 1);
}

Int i_extension_count(const std::set<int>& d, int n, const std::set<int>& e, int i) {
    if (static_cast<int>(e.size()) != static_cast<int>(d.size()) + i) return 0;
    Int count = 0;
    for_each_i_extension(d, n, i, [&](const std::set<int>& candidate) {
        if (candidate == e) ++count;
    });
    return count;
}

}  // namespace khopf
