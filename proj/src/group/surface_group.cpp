#include "scc/group/surface_group.hpp"

#include "scc/exact/errors.hpp"

namespace scc {

SurfaceGroup::SurfaceGroup(int genus) : g_(genus) {
    if (genus < 2) throw PreconditionError("surface group needs genus >= 2");
    for (int i = 0; i < g_; ++i) {
        Word c = commutator({letter(2 * i, 1)}, {letter(2 * i + 1, 1)});
        r_.insert(r_.end(), c.begin(), c.end());
    }
    const size_t L = r_.size();
    for (const Word& base : {r_, inverse(r_)})
        for (size_t k = 0; k < L; ++k) sym_.push_back(rotate(base, k));
    by_first_.assign(4 * g_ + 1, {});
    for (const auto& s : sym_) by_first_[s[0] + 2 * g_].push_back(s);
    if (!small_cancellation(1, 6)) throw PreconditionError("relator fails C'(1/6)");
}

std::vector<Word> SurfaceGroup::generators() const {
    std::vector<Word> r;
    for (int k = 0; k < 2 * g_; ++k) {
        r.push_back({letter(k, 1)});
        r.push_back({letter(k, -1)});
    }
    return r;
}

const std::vector<Word>& SurfaceGroup::relators_starting_with(int l) const { return by_first_.at(l + 2 * g_); }

int SurfaceGroup::max_piece_length() const {
    int best = 0;
    for (size_t a = 0; a < sym_.size(); ++a)
        for (size_t b = a + 1; b < sym_.size(); ++b) {
            if (sym_[a] == sym_[b]) continue;
            int m = 0;
            while (m < static_cast<int>(sym_[a].size()) && sym_[a][m] == sym_[b][m]) ++m;
            best = std::max(best, m);
        }
    return best;
}

bool SurfaceGroup::small_cancellation(int num, int den) const {
    return static_cast<long>(max_piece_length()) * den < static_cast<long>(r_.size()) * num;
}

Word SurfaceGroup::dehn_reduce(const Word& w0) const {
    Word w = free_reduce(w0);
    const int L = static_cast<int>(r_.size());
    bool changed = true;
    while (changed) {
        changed = false;
        const int n = static_cast<int>(w.size());
        for (int i = 0; i < n && !changed; ++i) {
            for (const Word& s : relators_starting_with(w[i])) {
                int m = 0;
                while (m < L && i + m < n && w[i + m] == s[m]) ++m;
                if (2 * m <= L) continue;
                Word rest(s.begin() + m, s.end());
                Word nw(w.begin(), w.begin() + i);
                Word ri = inverse(rest);
                nw.insert(nw.end(), ri.begin(), ri.end());
                nw.insert(nw.end(), w.begin() + i + m, w.end());
                w = free_reduce(nw);
                changed = true;
                break;
            }
        }
    }
    return w;
}

Word SurfaceGroup::cyclic_reduce(const Word& w, Word* conj) const {
    Word c;
    Word v = cyclic_free_reduce(dehn_reduce(w), &c);
    const int L = static_cast<int>(r_.size());
    for (;;) {
        Word c2;
        v = cyclic_free_reduce(dehn_reduce(v), &c2);
        c.insert(c.end(), c2.begin(), c2.end());
        const int n = static_cast<int>(v.size());
        int found = -1;
        for (int i = 0; i < n && found < 0; ++i) {
            for (const Word& s : relators_starting_with(v[i])) {
                int m = 0;
                while (m < L && m < n && v[(i + m) % n] == s[m]) ++m;
                if (2 * m > L) {
                    found = i;
                    break;
                }
            }
        }
        if (found < 0) break;
        if (found == 0) {
            // match starts at 0 but wraps: rotate by one so linear reduction sees it
            found = 1 % std::max(1, n);
            if (n <= 1) break;
        }
        c.insert(c.end(), v.begin(), v.begin() + found);
        v = rotate(v, static_cast<size_t>(found));
    }
    if (conj) *conj = free_reduce(c);
    return v;
}

std::optional<std::pair<Word, int>> SurfaceGroup::literal_power(const Word& w) const {
    Word c;
    Word v = cyclic_reduce(w, &c);
    const size_t n = v.size();
    for (size_t p = 1; p < n; ++p) {
        if (n % p) continue;
        if (rotate(v, p) != v) continue;
        Word root(v.begin(), v.begin() + static_cast<long>(p));
        return std::make_pair(dehn_reduce(concat({c, root, inverse(c)})), static_cast<int>(n / p));
    }
    return std::nullopt;
}

std::vector<Word> all_reduced_words(int genus, int max_len) {
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (int k = 0; k < 2 * genus; ++k)
                for (int s : {1, -1}) {
                    int l = letter(k, s);
                    if (!w.empty() && w.back() == -l) continue;
                    Word x = w;
                    x.push_back(l);
                    next.push_back(std::move(x));
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

bool conjugate_bounded(const SurfaceGroup& G, const Word& a, const Word& b, int max_conj_len) {
    if (G.canonical_cyclic(a) == G.canonical_cyclic(b)) return true;
    Word ib = inverse(b);
    for (const Word& x : all_reduced_words(G.genus(), max_conj_len))
        if (G.is_identity(concat({x, a, inverse(x), ib}))) return true;
    return false;
}

}  // namespace scc
