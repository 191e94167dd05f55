#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qons/scalar.hpp"

namespace qons {

struct AlphabetMismatch : Error {
    AlphabetMismatch() : Error("operands live over different alphabets") {}
};

struct GenSymbol {
    std::string name;     // token used by the parser and in serialized words
    std::string display;  // human-facing form used in report headers
};

/// Generator alphabet. The listing order is the precedence order used by the
/// monomial order: earlier symbols are larger.
class Alphabet {
  public:
    explicit Alphabet(std::vector<GenSymbol> symbols);
    int size() const { return int(symbols_.size()); }
    const GenSymbol& symbol(int i) const { return symbols_.at(size_t(i)); }
    std::optional<int> find(const std::string& name) const;
    bool operator==(const Alphabet& o) const;
    std::vector<std::string> names() const;

  private:
    std::vector<GenSymbol> symbols_;
    std::map<std::string, int> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<GenSymbol> symbols);

/// Monomial of the free algebra: a (possibly empty) sequence of symbol
/// indices. The empty word is the multiplicative identity.
class Word {
  public:
    Word() = default;
    explicit Word(std::basic_string<unsigned char> letters) : letters_(std::move(letters)) {}
    static Word of(std::initializer_list<int> idx);
    static Word single(int idx);

    size_t degree() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int letter(size_t i) const { return letters_[i]; }
    const std::basic_string<unsigned char>& letters() const { return letters_; }

    Word operator*(const Word& o) const;
    Word prefix(size_t len) const;
    Word suffix_from(size_t pos) const;
    Word subword(size_t pos, size_t len) const;
    /// first position where pattern occurs as a factor, or npos
    size_t find(const Word& pattern, size_t from = 0) const;
    static constexpr size_t npos = size_t(-1);

    auto operator<=>(const Word&) const = default;

  private:
    std::basic_string<unsigned char> letters_;
};

/// Degree-first monomial order, ties broken by symbol precedence from the
/// left (alphabet listing order, earlier = larger).
bool mono_less(const Word& a, const Word& b);

struct MonoGreater {
    bool operator()(const Word& a, const Word& b) const { return mono_less(b, a); }
};

/// Noncommutative polynomial: finite Scalar combination of Words over one
/// alphabet. Terms iterate leading-first; zero coefficients are never stored.
class NcPoly {
  public:
    NcPoly() = default;
    explicit NcPoly(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
    static NcPoly zero(AlphabetPtr a) { return NcPoly(std::move(a)); }
    static NcPoly one(AlphabetPtr a);
    static NcPoly generator(const AlphabetPtr& a, int sym);
    static NcPoly monomial(AlphabetPtr a, Word w, Scalar c);
    static NcPoly constant(AlphabetPtr a, Scalar c);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Word, Scalar, MonoGreater>& terms() const { return terms_; }
    const Word& leading_word() const;
    const Scalar& leading_coeff() const;
    Scalar coeff(const Word& w) const;
    size_t degree() const;  // 0 for the zero polynomial

    void add_term(const Word& w, const Scalar& c);
    /// *this += c * (l * x * r), computed term by term
    void add_sandwich(const Scalar& c, const Word& l, const NcPoly& x, const Word& r);

    NcPoly operator+(const NcPoly&) const;
    NcPoly operator-(const NcPoly&) const;
    NcPoly operator*(const NcPoly&) const;
    NcPoly operator-() const;
    NcPoly operator*(const Scalar&) const;
    NcPoly& operator+=(const NcPoly&);
    NcPoly& operator-=(const NcPoly&);

    bool operator==(const NcPoly& o) const;

    std::string str() const;
    std::string word_str(const Word& w) const;

  private:
    void require_same(const NcPoly& o) const;
    AlphabetPtr alphabet_;
    std::map<Word, Scalar, MonoGreater> terms_;
};

enum class PolyOp { add, sub, mul, scalar_mul };
NcPoly poly_arith(const NcPoly& lhs, const NcPoly& rhs, PolyOp op, const Scalar& s = Scalar::one());

NcPoly bracket(const NcPoly& x, const NcPoly& y);                          // xy - yx
NcPoly q_bracket_op(const NcPoly& x, const NcPoly& y);                     // q xy - q^-1 yx
NcPoly scaled_q_bracket(const Scalar& s, const NcPoly& x, const NcPoly& y);  // s xy - s^-1 yx

enum class Variance { hom, antihom };

/// Map of the free algebra given by generator images, applied linearly and
/// multiplicatively (order-reversing when variance is antihom). Whether a
/// Morphism descends to a quotient is checked by the engine, never assumed.
class Morphism {
  public:
    Morphism(AlphabetPtr alphabet, std::vector<NcPoly> images, Variance variance);
    static Morphism identity(AlphabetPtr a, Variance v = Variance::hom);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const NcPoly& image(int sym) const { return images_.at(size_t(sym)); }
    const std::vector<NcPoly>& images() const { return images_; }
    Variance variance() const { return variance_; }
    size_t max_image_degree() const;

  private:
    AlphabetPtr alphabet_;
    std::vector<NcPoly> images_;
    Variance variance_;
};

NcPoly apply(const Morphism& m, const NcPoly& x);
/// compose(f, g): apply g first, then f. Variance law: antihom ∘ antihom = hom.
Morphism compose(const Morphism& outer, const Morphism& inner);

}  // namespace qons
