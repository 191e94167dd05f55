#include "qons/freealg.hpp"

#include <sstream>

namespace qons {

Alphabet::Alphabet(std::vector<GenSymbol> symbols) : symbols_(std::move(symbols)) {
    for (size_t i = 0; i < symbols_.size(); ++i) {
        if (!index_.emplace(symbols_[i].name, int(i)).second)
            throw ConfigError("duplicate generator name: " + symbols_[i].name);
    }
}

std::optional<int> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool Alphabet::operator==(const Alphabet& o) const {
    if (symbols_.size() != o.symbols_.size()) return false;
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name != o.symbols_[i].name) return false;
    return true;
}

std::vector<std::string> Alphabet::names() const {
    std::vector<std::string> r;
    r.reserve(symbols_.size());
    for (const auto& s : symbols_) r.push_back(s.name);
    return r;
}

AlphabetPtr make_alphabet(std::vector<GenSymbol> symbols) {
    return std::make_shared<const Alphabet>(std::move(symbols));
}

Word Word::of(std::initializer_list<int> idx) {
    std::basic_string<unsigned char> s;
    s.reserve(idx.size());
    for (int i : idx) s.push_back(static_cast<unsigned char>(i));
    return Word(std::move(s));
}

Word Word::single(int idx) { return Word::of({idx}); }

Word Word::operator*(const Word& o) const { return Word(letters_ + o.letters_); }

Word Word::prefix(size_t len) const { return Word(letters_.substr(0, len)); }

Word Word::suffix_from(size_t pos) const { return Word(letters_.substr(pos)); }

Word Word::subword(size_t pos, size_t len) const { return Word(letters_.substr(pos, len)); }

size_t Word::find(const Word& pattern, size_t from) const {
    return letters_.find(pattern.letters_, from);
}

bool mono_less(const Word& a, const Word& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    // same degree: lower symbol index means higher precedence, so the
    // byte-lexicographically smaller word is the larger monomial
    return a.letters() > b.letters();
}

NcPoly NcPoly::one(AlphabetPtr a) {
    NcPoly p(std::move(a));
    p.terms_.emplace(Word(), Scalar::one());
    return p;
}

NcPoly NcPoly::generator(const AlphabetPtr& a, int sym) {
    if (sym < 0 || sym >= a->size()) throw Error("generator index out of range");
    NcPoly p(a);
    p.terms_.emplace(Word::single(sym), Scalar::one());
    return p;
}

NcPoly NcPoly::monomial(AlphabetPtr a, Word w, Scalar c) {
    NcPoly p(std::move(a));
    if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

NcPoly NcPoly::constant(AlphabetPtr a, Scalar c) {
    return monomial(std::move(a), Word(), std::move(c));
}

const Word& NcPoly::leading_word() const {
    if (terms_.empty()) throw Error("leading_word of zero polynomial");
    return terms_.begin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
    return terms_.begin()->second;
}

Scalar NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

size_t NcPoly::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void NcPoly::add_sandwich(const Scalar& c, const Word& l, const NcPoly& x, const Word& r) {
    if (c.is_zero()) return;
    for (const auto& [w, s] : x.terms_) add_term(l * w * r, c * s);
}

void NcPoly::require_same(const NcPoly& o) const {
    if (alphabet_ == o.alphabet_) return;
    if (alphabet_ && o.alphabet_ && *alphabet_ == *o.alphabet_) return;
    throw AlphabetMismatch();
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    require_same(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    require_same(o);
    NcPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    require_same(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    require_same(o);
    NcPoly r(alphabet_ ? alphabet_ : o.alphabet_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(wa * wb, ca * cb);
    return r;
}

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NcPoly NcPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return NcPoly(alphabet_);
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = c * s;
    return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
}

std::string NcPoly::word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream out;
    for (size_t i = 0; i < w.degree(); ++i) {
        if (i) out << "*";
        out << alphabet_->symbol(w.letter(i)).name;
    }
    return out.str();
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        // render |c| and extract the sign when the coefficient is a pure
        // rational multiple, so output stays close to handwritten form
        Scalar mag = c;
        bool neg = false;
        if (c.den().is_one() && c.num().term_count() == 1 && c.num().leading_coeff() < 0) {
            neg = true;
            mag = -c;
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::string cs = mag.str();
        if (w.empty()) {
            out << cs;
        } else if (mag.is_one()) {
            out << word_str(w);
        } else {
            out << cs << "*" << word_str(w);
        }
    }
    return out.str();
}

NcPoly poly_arith(const NcPoly& lhs, const NcPoly& rhs, PolyOp op, const Scalar& s) {
    switch (op) {
        case PolyOp::add: return lhs + rhs;
        case PolyOp::sub: return lhs - rhs;
        case PolyOp::mul: return lhs * rhs;
        case PolyOp::scalar_mul: return lhs * s;
    }
    throw Error("bad poly op");
}

NcPoly bracket(const NcPoly& x, const NcPoly& y) { return x * y - y * x; }

NcPoly q_bracket_op(const NcPoly& x, const NcPoly& y) {
    return scaled_q_bracket(Scalar::q_power(1), x, y);
}

NcPoly scaled_q_bracket(const Scalar& s, const NcPoly& x, const NcPoly& y) {
    return x * y * s - y * x * s.inverse();
}

Morphism::Morphism(AlphabetPtr alphabet, std::vector<NcPoly> images, Variance variance)
    : alphabet_(std::move(alphabet)), images_(std::move(images)), variance_(variance) {
    if (int(images_.size()) != alphabet_->size())
        throw ConfigError("morphism must give an image for every generator");
    for (const auto& img : images_) {
        if (img.alphabet() && !(*img.alphabet() == *alphabet_)) throw AlphabetMismatch();
    }
}

Morphism Morphism::identity(AlphabetPtr a, Variance v) {
    std::vector<NcPoly> images;
    images.reserve(size_t(a->size()));
    for (int i = 0; i < a->size(); ++i) images.push_back(NcPoly::generator(a, i));
    return Morphism(std::move(a), std::move(images), v);
}

size_t Morphism::max_image_degree() const {
    size_t d = 0;
    for (const auto& img : images_) d = std::max(d, img.degree());
    return d;
}

NcPoly apply(const Morphism& m, const NcPoly& x) {
    if (x.alphabet() && !(*x.alphabet() == *m.alphabet())) throw AlphabetMismatch();
    NcPoly result(m.alphabet());
    for (const auto& [w, c] : x.terms()) {
        NcPoly prod = NcPoly::one(m.alphabet());
        if (m.variance() == Variance::hom) {
            for (size_t i = 0; i < w.degree(); ++i) prod = prod * m.image(w.letter(i));
        } else {
            for (size_t i = w.degree(); i-- > 0;) prod = prod * m.image(w.letter(i));
        }
        result.add_sandwich(c, Word(), prod, Word());
    }
    return result;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
    if (!(*outer.alphabet() == *inner.alphabet())) throw AlphabetMismatch();
    std::vector<NcPoly> images;
    images.reserve(inner.images().size());
    for (const auto& img : inner.images()) images.push_back(apply(outer, img));
    Variance v = (outer.variance() == inner.variance()) ? Variance::hom : Variance::antihom;
    return Morphism(outer.alphabet(), std::move(images), v);
}

}  // namespace qons
