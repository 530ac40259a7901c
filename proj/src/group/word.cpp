#include "scc/group/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "scc/exact/errors.hpp"

namespace scc {

Word inverse(const Word& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) l = -l;
    return r;
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Word concat(std::initializer_list<Word> parts) {
    Word r;
    for (const auto& p : parts) r.insert(r.end(), p.begin(), p.end());
    return r;
}

Word power(const Word& w, int n) {
    Word base = n < 0 ? inverse(w) : w;
    Word r;
    for (int i = 0; i < (n < 0 ? -n : n); ++i) r.insert(r.end(), base.begin(), base.end());
    return r;
}

Word commutator(const Word& a, const Word& b) { return concat({a, b, inverse(a), inverse(b)}); }

Word free_reduce(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (int l : w) {
        if (!r.empty() && r.back() == -l)
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

Word cyclic_free_reduce(const Word& w, Word* conj) {
    Word r = free_reduce(w);
    size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    if (conj) *conj = Word(r.begin(), r.begin() + static_cast<long>(i));
    return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word rotate(const Word& w, size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word r(w.begin() + static_cast<long>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
    return r;
}

int letter_key(int l) { return 2 * gen_of(l) + (l < 0 ? 1 : 0); }

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
    return false;
}

Word min_rotation(const Word& w) {
    Word best = w;
    for (size_t k = 1; k < w.size(); ++k) {
        Word c = rotate(w, k);
        if (word_less(c, best)) best = std::move(c);
    }
    return best;
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    int genus;

    void ws() {
        while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.')) ++i;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw PreconditionError("word parse error at " + std::to_string(i) + ": " + msg + " in \"" + s + "\"");
    }
    Word seq(char stop1, char stop2) {
        Word r;
        for (;;) {
            ws();
            if (i >= s.size() || s[i] == stop1 || s[i] == stop2) return r;
            Word it = item();
            r.insert(r.end(), it.begin(), it.end());
        }
    }
    Word item() {
        Word a = atom();
        ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            ws();
            size_t st = i;
            if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (st == i || (i == st + 1 && !std::isdigit(static_cast<unsigned char>(s[st])))) fail("bad exponent");
            a = power(a, std::stoi(s.substr(st, i - st)));
        }
        return a;
    }
    Word atom() {
        ws();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        if (c == '(') {
            ++i;
            Word r = seq(')', ')');
            if (i >= s.size()) fail("missing )");
            ++i;
            return r;
        }
        if (c == '[') {
            ++i;
            Word x = seq(',', ']');
            if (i >= s.size() || s[i] != ',') fail("missing ,");
            ++i;
            Word y = seq(']', ']');
            if (i >= s.size()) fail("missing ]");
            ++i;
            return commutator(x, y);
        }
        if (c == 'a' || c == 'b' || c == 'A' || c == 'B') {
            ++i;
            size_t st = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (st == i) fail("generator index missing");
            int k = std::stoi(s.substr(st, i - st));
            if (k < 1 || k > genus) fail("generator index out of range");
            int gen = 2 * (k - 1) + (c == 'b' || c == 'B' ? 1 : 0);
            return {letter(gen, std::isupper(static_cast<unsigned char>(c)) ? -1 : 1)};
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

Word parse_word(const std::string& s, int genus) {
    Parser p{s, 0, genus};
    Word w = p.seq('\0', '\0');
    if (p.i < s.size()) p.fail("trailing input");
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (int l : w) {
        int g = gen_of(l);
        if (!out.empty()) out += ' ';
        char c = (g % 2 == 0) ? 'a' : 'b';
        if (l < 0) c = static_cast<char>(std::toupper(c));
        out += c;
        out += std::to_string(g / 2 + 1);
    }
    return out;
}

nlohmann::json word_to_json(const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    for (int l : w) j.push_back({gen_of(l), l > 0 ? 1 : -1});
    return j;
}

Word word_from_json(const nlohmann::json& j) {
    Word w;
    for (const auto& e : j) w.push_back(letter(e.at(0).get<int>(), e.at(1).get<int>()));
    return w;
}

}  // namespace scc
