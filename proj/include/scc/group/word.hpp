#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace scc {

// Letter encoding: generator k (0-based, order a1 b1 a2 b2 ...) is +(k+1), its inverse -(k+1).
using Word = std::vector<int>;

inline int letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int gen_of(int l) { return (l > 0 ? l : -l) - 1; }

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<Word> parts);
Word power(const Word& w, int n);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
Word free_reduce(const Word& w);
Word cyclic_free_reduce(const Word& w, Word* conj = nullptr);  // w = conj * result * conj^-1
Word rotate(const Word& w, size_t k);
Word min_rotation(const Word& w);
int letter_key(int l);  // total order a1 < A1 < b1 < B1 < a2 ...
bool word_less(const Word& a, const Word& b);

// "a1 b1 A1 B1", "a1^-1", "(a1 b1 a2)^3", "[a1,b1]"
Word parse_word(const std::string& s, int genus);
std::string format_word(const Word& w);

nlohmann::json word_to_json(const Word& w);  // [[index, sign], ...]
Word word_from_json(const nlohmann::json& j);

}  // namespace scc
