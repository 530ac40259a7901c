#pragma once

#include <optional>
#include <vector>

#include "scc/group/word.hpp"

namespace scc {

class SurfaceGroup {
public:
    explicit SurfaceGroup(int genus);  // checks C'(1/6), which Dehn's algorithm needs

    int genus() const { return g_; }
    int num_generators() const { return 2 * g_; }
    const Word& relator() const { return r_; }
    Word generator(int k, int sign = 1) const { return {letter(k, sign)}; }
    std::vector<Word> generators() const;  // 4g signed single letters

    // longest common prefix over distinct elements of the symmetrised relator set
    int max_piece_length() const;
    // pieces strictly shorter than |r| * num / den
    bool small_cancellation(int num, int den) const;

    Word dehn_reduce(const Word& w) const;
    bool is_identity(const Word& w) const { return dehn_reduce(w).empty(); }
    bool equal(const Word& a, const Word& b) const { return is_identity(concat(a, inverse(b))); }
    bool commute(const Word& a, const Word& b) const { return is_identity(commutator(a, b)); }
    // cyclically free and Dehn reduced; w = conj * result * conj^-1
    Word cyclic_reduce(const Word& w, Word* conj = nullptr) const;
    // canonical representative of the conjugacy class up to rotation
    Word canonical_cyclic(const Word& w) const { return min_rotation(cyclic_reduce(w)); }
    int length(const Word& w) const { return static_cast<int>(dehn_reduce(w).size()); }

    // w = root^n with root a literal rotation-period of the cyclic reduction (conjugated back)
    std::optional<std::pair<Word, int>> literal_power(const Word& w) const;

    Word parse(const std::string& s) const { return parse_word(s, g_); }

    // symmetrised relators starting with a given letter
    const std::vector<Word>& relators_starting_with(int l) const;

private:
    int g_;
    Word r_;
    std::vector<Word> sym_;
    std::vector<std::vector<Word>> by_first_;  // index letter + 2g
};

// brute-force test oracles (exponential; small inputs only)
std::vector<Word> all_reduced_words(int genus, int max_len);
bool conjugate_bounded(const SurfaceGroup& G, const Word& a, const Word& b, int max_conj_len);

}  // namespace scc
