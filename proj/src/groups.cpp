#include "qons/groups.hpp"

#include <sstream>

namespace qons {

FreeProductWord FreeProductWord::parse(const std::string& s) {
    FreeProductWord w;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '1' && s.size() == 1) break;
        if (c != 'a' && c != 'b' && c != 'c')
            throw ConfigError(std::string("invalid free-product letter '") + c + "'");
        if (!w.letters_.empty() && w.letters_.back() == c) w.letters_.pop_back();
        else w.letters_.push_back(c);
    }
    return w;
}

FreeProductWord FreeProductWord::inverse() const {
    FreeProductWord w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    return w;
}

FreeProductWord fp_multiply(const FreeProductWord& x, const FreeProductWord& y) {
    FreeProductWord r = x;
    for (char c : y.letters_) {
        if (!r.letters_.empty() && r.letters_.back() == c) r.letters_.pop_back();
        else r.letters_.push_back(c);
    }
    return r;
}

std::vector<FreeProductWord> reduced_words_up_to(size_t max_length) {
    std::vector<FreeProductWord> out{FreeProductWord()};
    size_t lo = 0;
    for (size_t len = 1; len <= max_length; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i) {
            const std::string w = out[i].letters();
            for (char c : {'a', 'b', 'c'}) {
                if (!w.empty() && w.back() == c) continue;
                out.push_back(FreeProductWord::parse(w + c));
            }
        }
        lo = hi;
    }
    return out;
}

SemidirectWord::SemidirectWord(std::vector<Letter> free_part, int flip) : flip_(flip & 1) {
    for (const Letter& l : free_part) {
        if (!free_part_.empty() && free_part_.back().gen == l.gen &&
            free_part_.back().exp == -l.exp)
            free_part_.pop_back();
        else free_part_.push_back(l);
    }
}

SemidirectWord SemidirectWord::s() { return SemidirectWord({}, 1); }

SemidirectWord SemidirectWord::t(int gen, int exp) { return SemidirectWord({{gen, exp}}, 0); }

SemidirectWord SemidirectWord::parse(const std::string& s) {
    SemidirectWord acc;
    for (size_t i = 0; i < s.size();) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
            ++i;
            continue;
        }
        if (c == 's') {
            acc = sd_multiply(acc, SemidirectWord::s());
            ++i;
            continue;
        }
        if ((c == 't' || c == 'T') && i + 1 < s.size() && (s[i + 1] == '0' || s[i + 1] == '1')) {
            int gen = s[i + 1] - '0';
            acc = sd_multiply(acc, SemidirectWord::t(gen, c == 't' ? 1 : -1));
            i += 2;
            continue;
        }
        throw ConfigError("invalid semidirect word near '" + s.substr(i) + "'");
    }
    return acc;
}

std::string SemidirectWord::str() const {
    if (is_identity()) return "1";
    std::ostringstream out;
    for (const Letter& l : free_part_) out << (l.exp > 0 ? 't' : 'T') << l.gen;
    if (flip_) out << 's';
    return out.str();
}

SemidirectWord sd_multiply(const SemidirectWord& x, const SemidirectWord& y) {
    std::vector<SemidirectWord::Letter> part = x.free_part();
    for (SemidirectWord::Letter l : y.free_part()) {
        if (x.flip()) l.exp = -l.exp;  // conjugation by the flip inverts t-letters
        part.push_back(l);
    }
    return SemidirectWord(std::move(part), x.flip() ^ y.flip());
}

SemidirectWord translate_fp_to_sd(const FreeProductWord& x) {
    SemidirectWord acc;
    for (char c : x.letters()) {
        SemidirectWord img;
        switch (c) {
            case 'a': img = sd_multiply(SemidirectWord::s(), SemidirectWord::t(1, 1)); break;
            case 'b': img = sd_multiply(SemidirectWord::t(0, 1), SemidirectWord::s()); break;
            case 'c': img = SemidirectWord::s(); break;
        }
        acc = sd_multiply(acc, img);
    }
    return acc;
}

FreeProductWord translate_sd_to_fp(const SemidirectWord& y) {
    FreeProductWord acc;
    auto mul = [&](const char* s) { acc = fp_multiply(acc, FreeProductWord::parse(s)); };
    for (const auto& l : y.free_part()) {
        if (l.gen == 0) mul(l.exp > 0 ? "bc" : "cb");
        else mul(l.exp > 0 ? "ca" : "ac");
    }
    if (y.flip()) mul("c");
    return acc;
}

Morphism GroupActionBinding::letter(char c) const {
    switch (c) {
        case 'a': return compose(S, T1);
        case 'b': return compose(T0, S);
        case 'c': return S;
    }
    throw ConfigError(std::string("invalid group letter '") + c + "'");
}

Morphism realize(const GroupActionBinding& binding, const FreeProductWord& w) {
    Morphism acc = Morphism::identity(binding.S.alphabet());
    // rightmost letter acts first: realize(uv) = realize(u) ∘ realize(v)
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        acc = compose(binding.letter(*it), acc);
    return acc;
}

NcPoly quotient_image(const GroupActionBinding& binding, const FreeProductWord& w, NcPoly x,
                      const RewriteSystem& rs) {
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        x = reduce(rs, apply(binding.letter(*it), x));
    return x;
}

}  // namespace qons
