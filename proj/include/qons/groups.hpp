#pragma once

#include "qons/engine.hpp"

namespace qons {

/// Reduced word in the free product of three copies of Z2 on a, b, c:
/// no two adjacent letters are equal.
class FreeProductWord {
  public:
    FreeProductWord() = default;
    static FreeProductWord parse(const std::string& s);  // letters a, b, c
    const std::string& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    FreeProductWord inverse() const;  // reverse (each letter is an involution)
    std::string str() const { return letters_.empty() ? "1" : letters_; }
    auto operator<=>(const FreeProductWord&) const = default;

    friend FreeProductWord fp_multiply(const FreeProductWord& x, const FreeProductWord& y);

  private:
    std::string letters_;  // reduced
};

FreeProductWord fp_multiply(const FreeProductWord& x, const FreeProductWord& y);
/// All reduced words of length <= max_length, shortest first, lexicographic within a length.
std::vector<FreeProductWord> reduced_words_up_to(size_t max_length);

/// Element of the second presentation: a reduced word in the free group on
/// t0, t1 together with the exponent of the flip s.
class SemidirectWord {
  public:
    struct Letter {
        int gen = 0;  // 0 = t0, 1 = t1
        int exp = 1;  // +1 or -1
        bool operator==(const Letter&) const = default;
    };
    SemidirectWord() = default;
    SemidirectWord(std::vector<Letter> free_part, int flip);
    static SemidirectWord parse(const std::string& s);  // tokens s, t0, T0, t1, T1
    static SemidirectWord s();
    static SemidirectWord t(int gen, int exp);

    const std::vector<Letter>& free_part() const { return free_part_; }
    int flip() const { return flip_; }
    bool is_identity() const { return free_part_.empty() && flip_ == 0; }
    std::string str() const;
    bool operator==(const SemidirectWord&) const = default;

  private:
    std::vector<Letter> free_part_;  // freely reduced
    int flip_ = 0;
};

SemidirectWord sd_multiply(const SemidirectWord& x, const SemidirectWord& y);

/// a -> s t1,  b -> t0 s,  c -> s
SemidirectWord translate_fp_to_sd(const FreeProductWord& x);
/// t0 -> bc,  t0^-1 -> cb,  t1 -> ca,  t1^-1 -> ac,  s -> c
FreeProductWord translate_sd_to_fp(const SemidirectWord& y);

/// Base morphisms of a group action on a quotient algebra.
struct GroupActionBinding {
    std::string target_tag;  // recorded in reports
    Morphism S, T0, T0inv, T1, T1inv;

    Morphism letter(char c) const;  // a = S∘T1, b = T0∘S, c = S
};

/// Word acting as a composite morphism, rightmost letter applied first.
/// The result is an antihomomorphism exactly when the word has odd length.
Morphism realize(const GroupActionBinding& binding, const FreeProductWord& w);

/// Image of x under the word, reduced to normal form after each letter.
/// Valid on quotient classes once the base morphisms are proven well defined.
NcPoly quotient_image(const GroupActionBinding& binding, const FreeProductWord& w, NcPoly x,
                      const RewriteSystem& rs);

}  // namespace qons
