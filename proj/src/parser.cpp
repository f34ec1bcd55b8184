#include "wilddiag/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "wilddiag/errors.hpp"

namespace wilddiag {

namespace {

struct Token {
    enum class Kind { ident, integer, string, punct, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        const int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::end, "", line, col};
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                word.push_back(take());
            return {Token::Kind::ident, word, line, col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits.push_back(take());
            return {Token::Kind::integer, digits, line, col};
        }
        if (c == '"') {
            take();
            std::string body;
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') body.push_back(take());
            if (pos_ >= text_.size() || text_[pos_] != '"')
                throw parse_error(line, col, "unterminated string");
            take();
            return {Token::Kind::string, body, line, col};
        }
        static const std::string puncts = "{}[]:,/^()+-*";
        if (puncts.find(c) != std::string::npos) {
            take();
            return {Token::Kind::punct, std::string(1, c), line, col};
        }
        throw parse_error(line, col, std::string("unexpected character '") + c + "'");
    }

    Token peek() {
        const std::size_t pos = pos_;
        const int line = line_, col = col_;
        Token t = next();
        pos_ = pos;
        line_ = line;
        col_ = col;
        return t;
    }

private:
    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw parse_error(t.line, t.column, msg);
}

std::int64_t parse_int_token(const Token& t) {
    if (t.kind != Token::Kind::integer) fail(t, "expected an integer");
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        fail(t, "integer out of range");
    }
}

Token expect_punct(Lexer& lex, char c) {
    Token t = lex.next();
    if (t.kind != Token::Kind::punct || t.text[0] != c)
        fail(t, std::string("expected '") + c + "'");
    return t;
}

bool peek_punct(Lexer& lex, char c) {
    Token t = lex.peek();
    return t.kind == Token::Kind::punct && t.text[0] == c;
}

// ---------------------------------------------------------------------------
// Factor strings

class FactorParser {
public:
    explicit FactorParser(const std::string& text) : lex_(text) {}

    ExpFactor parse() {
        ExpFactor out;
        bool negative = consume_sign(true);
        for (;;) {
            parse_term(out, negative);
            Token t = lex_.peek();
            if (t.kind == Token::Kind::end) break;
            if (t.kind == Token::Kind::punct && (t.text == "+" || t.text == "-")) {
                lex_.next();
                negative = t.text == "-";
                continue;
            }
            fail(t, "expected '+', '-' or end of factor");
        }
        return out;
    }

private:
    bool consume_sign(bool optional) {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::punct && (t.text == "+" || t.text == "-")) {
            lex_.next();
            return t.text == "-";
        }
        if (!optional) fail(t, "expected a sign");
        return false;
    }

    Rational parse_rational_atom() {
        Token t = lex_.next();
        std::int64_t num = parse_int_token(t);
        if (peek_punct(lex_, '/')) {
            lex_.next();
            Token d = lex_.next();
            std::int64_t den = parse_int_token(d);
            if (den == 0) fail(d, "zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // coeff atoms: INT[/INT] | (RAT) | i | z INT ^ INT
    bool try_parse_coeff_atom(CycloNumber& coeff) {
        Token t = lex_.peek();
        if (t.kind == Token::Kind::integer) {
            coeff = coeff * CycloNumber(parse_rational_atom());
            return true;
        }
        if (t.kind == Token::Kind::punct && t.text == "(") {
            lex_.next();
            bool neg = consume_sign(true);
            Rational r = parse_rational_atom();
            expect_punct(lex_, ')');
            coeff = coeff * CycloNumber(neg ? Rational(-r) : r);
            return true;
        }
        if (t.kind == Token::Kind::ident && t.text == "i") {
            lex_.next();
            coeff = coeff * CycloNumber::root_of_unity(4, 1);
            return true;
        }
        if (t.kind == Token::Kind::ident && t.text.size() > 1 && t.text[0] == 'z' &&
            std::isdigit(static_cast<unsigned char>(t.text[1]))) {
            lex_.next();
            std::int64_t level = 0;
            for (std::size_t i = 1; i < t.text.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
                    fail(t, "malformed root of unity");
                level = level * 10 + (t.text[i] - '0');
            }
            if (level < 1) throw validation_error("root of unity level must be positive");
            expect_punct(lex_, '^');
            Token p = lex_.next();
            coeff = coeff * CycloNumber::root_of_unity(level, parse_int_token(p));
            return true;
        }
        return false;
    }

    void parse_term(ExpFactor& out, bool negative) {
        CycloNumber coeff{Rational(1)};
        bool saw_coeff = false;
        for (;;) {
            if (try_parse_coeff_atom(coeff)) {
                saw_coeff = true;
                if (peek_punct(lex_, '*')) lex_.next();
                continue;
            }
            break;
        }
        Token t = lex_.peek();
        bool saw_x = false;
        Rational exponent(1);
        if (t.kind == Token::Kind::ident && t.text == "x") {
            lex_.next();
            saw_x = true;
            if (peek_punct(lex_, '^')) {
                lex_.next();
                exponent = parse_exponent();
            }
        }
        if (!saw_coeff && !saw_x) fail(t, "expected a term");
        if (negative) coeff = -coeff;
        if (!saw_x) {
            if (!coeff.is_zero()) throw validation_error("constant term in factor");
            return;  // an explicit zero term
        }
        if (exponent <= 0) throw validation_error("nonpositive exponent in factor");
        if (!coeff.is_zero()) out.add_term(exponent, coeff);
    }

    Rational parse_exponent() {
        if (peek_punct(lex_, '(')) {
            lex_.next();
            bool neg = consume_sign(true);
            Rational r = parse_rational_atom();
            expect_punct(lex_, ')');
            return neg ? Rational(-r) : r;
        }
        bool neg = consume_sign(true);
        Token t = lex_.next();
        std::int64_t v = parse_int_token(t);
        return Rational(neg ? -v : v);
    }

    Lexer lex_;
};

// ---------------------------------------------------------------------------
// Documents

class DocumentParser {
public:
    explicit DocumentParser(const std::string& text) : lex_(text) {}

    InputDocument parse(const std::string& source) {
        InputDocument doc;
        doc.source = source;
        bool saw_infinity = false;
        for (;;) {
            Token t = lex_.next();
            if (t.kind == Token::Kind::end) break;
            if (t.kind != Token::Kind::ident) fail(t, "expected 'infinity' or 'pole'");
            if (t.text == "infinity") {
                if (saw_infinity) throw validation_error("multiple infinity stanzas");
                saw_infinity = true;
                parse_infinity();
            } else if (t.text == "pole") {
                parse_pole(doc);
            } else {
                fail(t, "expected 'infinity' or 'pole'");
            }
        }
        if (!saw_infinity) throw validation_error("missing infinity stanza");
        finalize(doc);
        return doc;
    }

private:
    struct RawCircle {
        ExpFactor factor;
        std::int64_t mult;
        std::optional<JordanClass> monodromy;
        int line;
    };

    void parse_infinity() {
        expect_punct(lex_, '{');
        bool any = false;
        for (;;) {
            Token t = lex_.peek();
            if (t.kind == Token::Kind::punct && t.text == "}") {
                lex_.next();
                break;
            }
            if (t.kind != Token::Kind::ident || t.text != "factor") fail(t, "expected 'factor' or '}'");
            lex_.next();
            any = true;
            Token str = lex_.next();
            if (str.kind != Token::Kind::string) fail(str, "expected a quoted factor string");
            RawCircle raw;
            raw.line = str.line;
            raw.factor = parse_factor_at(str);
            Token kw = lex_.next();
            if (kw.kind != Token::Kind::ident || kw.text != "mult") fail(kw, "expected 'mult'");
            Token mult = lex_.next();
            raw.mult = parse_int_token(mult);
            if (raw.mult < 1) throw validation_error("multiplicities must be positive");
            Token after = lex_.peek();
            if (after.kind == Token::Kind::ident && after.text == "monodromy") {
                lex_.next();
                raw.monodromy = parse_class();
            }
            raws_.push_back(std::move(raw));
        }
        if (!any) throw validation_error("the infinity stanza lists no circles");
    }

    void parse_pole(InputDocument& doc) {
        Token t = lex_.peek();
        std::string location;
        if (t.kind == Token::Kind::ident) {
            lex_.next();
            location = t.text;
        } else {
            bool neg = false;
            if (t.kind == Token::Kind::punct && t.text == "-") {
                lex_.next();
                neg = true;
                t = lex_.peek();
            }
            if (t.kind != Token::Kind::integer) fail(t, "expected a pole location");
            Token num = lex_.next();
            std::int64_t n = parse_int_token(num);
            Rational loc(neg ? -n : n);
            if (peek_punct(lex_, '/')) {
                lex_.next();
                Token d = lex_.next();
                std::int64_t den = parse_int_token(d);
                if (den == 0) fail(d, "zero denominator");
                loc /= den;
            }
            location = to_string(loc);
        }
        JordanClass cls = parse_class();
        doc.input.poles.push_back(TamePole{location, std::move(cls)});
    }

    JordanClass parse_class() {
        expect_punct(lex_, '{');
        std::vector<JordanClass::Entry> entries;
        std::int64_t total = 0;
        for (;;) {
            Token label = lex_.next();
            if (label.kind != Token::Kind::ident) fail(label, "expected an eigenvalue label");
            expect_punct(lex_, ':');
            expect_punct(lex_, '[');
            std::vector<std::int64_t> partition;
            for (;;) {
                Token p = lex_.next();
                std::int64_t part = parse_int_token(p);
                if (part < 1) throw validation_error("partition parts must be positive");
                partition.push_back(part);
                total += part;
                Token sep = lex_.next();
                if (sep.kind == Token::Kind::punct && sep.text == ",") continue;
                if (sep.kind == Token::Kind::punct && sep.text == "]") break;
                fail(sep, "expected ',' or ']'");
            }
            entries.emplace_back(label.text, std::move(partition));
            Token sep = lex_.next();
            if (sep.kind == Token::Kind::punct && sep.text == ",") continue;
            if (sep.kind == Token::Kind::punct && sep.text == "}") break;
            fail(sep, "expected ',' or '}'");
        }
        return JordanClass(total, std::move(entries));
    }

    ExpFactor parse_factor_at(const Token& str) {
        try {
            return FactorParser(str.text).parse();
        } catch (const parse_error& e) {
            // Report document coordinates: the string body starts one column
            // after the opening quote.
            throw parse_error(str.line, str.column + e.column, e.message);
        }
    }

    void finalize(InputDocument& doc) {
        for (auto& raw : raws_) {
            Circle circle = circle_of(raw.factor);
            bool merged = false;
            for (auto& entry : doc.input.infinity) {
                if (entry.circle != circle) continue;
                if (!entry.monodromy_default || raw.monodromy.has_value())
                    throw validation_error("duplicate circle " + circle.to_string() +
                                           " at infinity with explicit monodromy");
                entry.mult += raw.mult;
                entry.monodromy = JordanClass::regular_semisimple(entry.mult);
                doc.warnings.push_back("merged Galois-conjugate factors into " + circle.to_string());
                merged = true;
                break;
            }
            if (merged) continue;
            JordanClass monodromy = raw.monodromy ? *raw.monodromy
                                                  : JordanClass::regular_semisimple(raw.mult);
            doc.input.infinity.push_back(
                InfinityEntry{std::move(circle), raw.mult, std::move(monodromy), !raw.monodromy});
        }
        doc.input.validate();
    }

    Lexer lex_;
    std::vector<RawCircle> raws_;
};

}  // namespace

InputDocument parse_input(const std::string& text) { return DocumentParser(text).parse(text); }

ExpFactor parse_factor(const std::string& text) { return FactorParser(text).parse(); }

std::string canonical_source(const ProblemInput& input) {
    std::ostringstream os;
    os << "infinity {\n";
    for (const auto& entry : input.infinity) {
        os << "  factor \"" << entry.circle.rep().to_string() << "\" mult " << entry.mult;
        if (!entry.monodromy_default) os << " monodromy " << entry.monodromy.to_string();
        os << "\n";
    }
    os << "}\n";
    for (const auto& pole : input.poles)
        os << "pole " << pole.location << " " << pole.cls.to_string() << "\n";
    return os.str();
}

}  // namespace wilddiag
