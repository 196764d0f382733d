#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "ospq/algebra.hpp"
#include "ospq/tensor.hpp"
#include "ospq/torus.hpp"

namespace ospq {

// ---- canonical printing -------------------------------------------------------

namespace detail {

inline void append_run(std::string& out, const char* letter, const Letters& ls) {
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) ++j;
        if (!out.empty()) out += "*";
        out += letter + std::to_string(int(ls[i]));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
}

inline std::string word_str(const NormalWord& w) {
    std::string s;
    append_run(s, "F", w.f);
    if (!w.torus.is_zero()) {
        if (!s.empty()) s += "*";
        s += "K" + w.torus.str();
    }
    if (!w.gamma.is_zero()) {
        if (!s.empty()) s += "*";
        s += "xi" + w.gamma.str();
    }
    append_run(s, "E", w.e);
    return s.empty() ? "1" : s;
}

inline std::string term_str(const NormalWord& w, const Scalar& c) {
    std::string ws = word_str(w);
    if (w.is_torus_word() && w.torus.is_zero() && w.gamma.is_zero()) return c.str();
    if (c.is_one()) return ws;
    if (c == Scalar(-1)) return "-" + ws;
    std::string cs = c.is_simple_factor() ? c.str() : "(" + c.str() + ")";
    return cs + "*" + ws;
}

inline std::string join_terms(std::string acc, const std::string& t) {
    if (acc.empty()) return t;
    if (!t.empty() && t[0] == '-') return acc + " - " + t.substr(1);
    return acc + " + " + t;
}

} // namespace detail

inline std::string to_string(const Element& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : x.terms()) s = detail::join_terms(s, detail::term_str(w, c));
    return s;
}

inline std::string to_string(const TensorElement& t) {
    if (t.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : t.terms()) {
        std::string term = detail::term_str(p.first, c) + " (x) " + detail::word_str(p.second);
        s = detail::join_terms(s, term);
    }
    return s;
}

inline std::string to_string(const TorusElement& t, int rank) {
    return to_string(t.to_element(rank));
}

// ---- parsing --------------------------------------------------------------------

// Grammar:  element := ['-'] term (('+'|'-') term)*
//           term    := factor (('*'|'/') factor)*
//           factor  := atom ['^' ['-'] digits]
//           atom    := E<i> | F<i> | K[t,..] | xi[b,..] | v | I | digits | '(' element ')'
// Division and negative powers need an invertible operand (a scalar, or a
// single torus word).
class ElementParser {
  public:
    ElementParser(const Algebra& algebra, std::string_view text, bool scalars_only = false)
        : A_(algebra), s_(text), scalars_only_(scalars_only) {}

    Element parse() {
        Element r = parse_element();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

  private:
    Element parse_element() {
        skip_ws();
        bool neg = accept('-');
        Element acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (accept('+'))
                acc = acc + parse_term();
            else if (accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    Element parse_term() {
        Element acc = parse_factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = A_.mul(acc, parse_factor());
            } else if (accept('/')) {
                size_t at = pos_;
                Element d = parse_factor();
                acc = A_.mul(acc, invert(d, at));
            } else {
                return acc;
            }
        }
    }

    Element parse_factor() {
        Element a = parse_atom();
        skip_ws();
        if (!accept('^')) return a;
        skip_ws();
        bool neg = accept('-');
        size_t at = pos_;
        long n = parse_int_digits();
        if (neg) return A_.pow(invert(a, at), static_cast<int>(n));
        return A_.pow(a, static_cast<int>(n));
    }

    Element parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Element inner = parse_element();
            skip_ws();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return A_.scalar(Scalar(GQ(Rat(parse_int_digits()))));
        if (c == 'v') {
            ++pos_;
            return A_.scalar(Scalar::v());
        }
        if (c == 'I') {
            ++pos_;
            return A_.scalar(Scalar::unit_i());
        }
        if (c == 'E' || c == 'F') {
            size_t at = pos_;
            ++pos_;
            long i = parse_int_digits();
            if (scalars_only_) fail_at(at, "scalar expression expected");
            if (i < 1 || i > A_.rank()) fail_at(at, "generator index out of range 1..l");
            return c == 'E' ? A_.E(static_cast<int>(i)) : A_.F(static_cast<int>(i));
        }
        if (c == 'K') {
            size_t at = pos_;
            ++pos_;
            auto list = parse_int_list();
            if (scalars_only_) fail_at(at, "scalar expression expected");
            if (static_cast<int>(list.size()) != A_.rank())
                fail_at(at, "torus weight needs exactly l coordinates");
            for (long t : list)
                if (t & 1) fail_at(at, "torus coordinates must be even twice-coordinates");
            std::vector<int> tw(list.begin(), list.end());
            return A_.K(Weight(tw));
        }
        if (c == 'x' && pos_ + 1 < s_.size() && s_[pos_ + 1] == 'i') {
            size_t at = pos_;
            pos_ += 2;
            auto list = parse_int_list();
            if (scalars_only_) fail_at(at, "scalar expression expected");
            if (static_cast<int>(list.size()) != A_.rank())
                fail_at(at, "sign-group element needs exactly l bits");
            std::vector<uint8_t> bits;
            for (long b : list) {
                if (b != 0 && b != 1) fail_at(at, "sign-group coordinates must be bits");
                bits.push_back(static_cast<uint8_t>(b));
            }
            return A_.xi(Gamma(bits));
        }
        fail("expected an atom");
        return Element(); // unreachable
    }

    Element invert(const Element& a, size_t at) {
        if (auto sc = a.as_scalar()) {
            if (sc->is_zero()) fail_at(at, "division by zero");
            return A_.scalar(sc->inverse());
        }
        if (a.size() == 1) {
            const auto& [w, c] = *a.terms().begin();
            if (w.is_torus_word())
                return A_.mul(A_.scalar(c.inverse()),
                              A_.mul(A_.K(-w.torus), A_.xi(w.gamma)));
        }
        fail_at(at, "operand is not invertible");
        return Element();
    }

    std::vector<long> parse_int_list() {
        skip_ws();
        expect('[');
        std::vector<long> out;
        skip_ws();
        if (accept(']')) return out;
        for (;;) {
            skip_ws();
            bool neg = accept('-');
            long n = parse_int_digits();
            out.push_back(neg ? -n : n);
            skip_ws();
            if (accept(']')) return out;
            expect(',');
        }
    }

    long parse_int_digits() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected digits");
        long n = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            n = n * 10 + (s_[pos_] - '0');
            if (n > 1000000000) fail("number too large");
            ++pos_;
        }
        return n;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(pos_, msg); }
    [[noreturn]] void fail_at(size_t at, const std::string& msg) const {
        throw parse_error(at, msg);
    }

    const Algebra& A_;
    std::string_view s_;
    bool scalars_only_;
    size_t pos_ = 0;
};

inline Element parse_element(const Algebra& A, std::string_view text) {
    return ElementParser(A, text).parse();
}

inline Scalar parse_scalar(const Algebra& A, std::string_view text) {
    Element x = ElementParser(A, text, /*scalars_only=*/true).parse();
    auto sc = x.as_scalar();
    if (!sc) throw parse_error(0, "expression is not a scalar");
    return *sc;
}

} // namespace ospq
