#include "wordeq/terms.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace wordeq {

bool is_constant_letter(char c) noexcept { return (c >= 'a' && c <= 'z') || c == '#'; }

Alphabet::Alphabet(std::string_view letters) {
    for (char c : letters) {
        if (!is_constant_letter(c))
            throw InvalidArgument(std::string("illegal alphabet letter '") + c + "'");
        letters_.push_back(c);
    }
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.empty()) throw InvalidArgument("alphabet must be non-empty");
}

bool Alphabet::contains(char c) const noexcept {
    return std::binary_search(letters_.begin(), letters_.end(), c);
}

Alphabet Alphabet::merged(const Alphabet& other) const { return Alphabet(letters_ + other.letters_); }

namespace {

Alphabet default_alphabet(const Pattern& lhs, const Pattern& rhs) {
    std::string present = constants_of(lhs) + constants_of(rhs);
    return Alphabet(present.empty() ? std::string("a") : present);
}

}  // namespace

Equation::Equation(Pattern l, Pattern r, Alphabet a)
    : lhs(std::move(l)), rhs(std::move(r)), alphabet(std::move(a)) {
    if (lhs.empty() || rhs.empty()) throw InvalidArgument("equation sides must be non-empty");
    for (const Pattern* side : {&lhs, &rhs})
        for (const Symbol& s : *side)
            if (s.is_constant() && !alphabet.contains(s.letter()))
                throw InvalidArgument(std::string("constant '") + s.letter() + "' not in alphabet");
}

Equation::Equation(Pattern l, Pattern r) : Equation(l, r, default_alphabet(l, r)) {}

namespace {

// Single-pass tokenizer over one line of text. `offset` is the column of
// text[0] minus one, so errors report columns in the original line.
class Lexer {
public:
    Lexer(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    Equation equation() {
        Pattern lhs = pattern_until('=');
        if (pos_ >= text_.size()) fail("missing '='");
        std::size_t eq_col = pos_ + 1;
        ++pos_;
        if (lhs.empty()) fail_at("empty left side", eq_col);
        Pattern rhs = pattern_until('=');
        if (pos_ < text_.size()) fail("multiple '='");
        if (rhs.empty()) fail_at("empty right side", text_.size() + 1);
        return Equation(std::move(lhs), std::move(rhs));
    }

private:
    Pattern pattern_until(char stop) {
        Pattern out;
        while (true) {
            skip_blank();
            if (pos_ >= text_.size() || text_[pos_] == stop) return out;
            char c = text_[pos_];
            if (c == 'X') {
                std::size_t start = pos_++;
                std::size_t digits = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (digits == pos_) fail_at("'X' must be followed by digits", start + 1);
                unsigned long long id = 0;
                for (std::size_t i = digits; i < pos_; ++i) {
                    id = id * 10 + static_cast<unsigned>(text_[i] - '0');
                    if (id > 1'000'000'000ULL) fail_at("variable index too large", start + 1);
                }
                if (id == 0) fail_at("variable indices start at 1", start + 1);
                out.push_back(Symbol::variable(static_cast<VarId>(id)));
            } else if (is_constant_letter(c)) {
                out.push_back(Symbol::constant(c));
                ++pos_;
            } else {
                fail(std::string("illegal character '") + c + "'");
            }
        }
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                pos_ = text_.size();
            } else {
                return;
            }
        }
    }

    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_ + 1); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t col) { throw ParseError(msg, line_, col); }

    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

bool is_blank_line(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    return i == line.size() || line.substr(i, 2) == "//";
}

}  // namespace

Equation parse_equation(std::string_view text) { return Lexer(text, 0).equation(); }

std::vector<Equation> parse_equations(std::string_view text) {
    std::vector<Equation> out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (is_blank_line(line)) continue;
        out.push_back(Lexer(line, line_no).equation());
    }
    return out;
}

std::string render_pattern(const Pattern& p) {
    std::string out;
    for (const Symbol& s : p) {
        if (s.is_variable())
            out += "X" + std::to_string(s.var());
        else
            out += s.letter();
    }
    return out;
}

std::string render_equation(const Equation& eq) { return render_pattern(eq.lhs) + " = " + render_pattern(eq.rhs); }

Substitution parse_substitution(std::string_view text) {
    Substitution h;
    std::size_t col = 1;
    while (true) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        std::string_view trimmed = trim(item);
        if (!trimmed.empty()) {
            auto eq = trimmed.find('=');
            if (eq == std::string_view::npos) throw ParseError("expected 'X<n>=<word>'", 0, col);
            std::string_view name = trim(trimmed.substr(0, eq));
            std::string_view word = trim(trimmed.substr(eq + 1));
            if (name.size() < 2 || name[0] != 'X' ||
                !std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw ParseError("bad variable name '" + std::string(name) + "'", 0, col);
            VarId id = static_cast<VarId>(std::stoul(std::string(name.substr(1))));
            if (id == 0) throw ParseError("variable indices start at 1", 0, col);
            for (char c : word)
                if (!is_constant_letter(c)) throw ParseError(std::string("illegal letter '") + c + "'", 0, col);
            if (!h.emplace(id, std::string(word)).second)
                throw ParseError("duplicate binding for X" + std::to_string(id), 0, col);
        }
        if (comma == std::string_view::npos) break;
        col += comma + 1;
        text.remove_prefix(comma + 1);
    }
    return h;
}

std::string render_substitution(const Substitution& h) {
    std::string out;
    for (const auto& [var, word] : h) {
        if (!out.empty()) out += ',';
        out += "X" + std::to_string(var) + "=" + word;
    }
    return out;
}

std::set<VarId> variables(const Pattern& p) {
    std::set<VarId> out;
    for (const Symbol& s : p)
        if (s.is_variable()) out.insert(s.var());
    return out;
}

std::set<VarId> variables(const Equation& eq) {
    auto out = variables(eq.lhs);
    auto r = variables(eq.rhs);
    out.insert(r.begin(), r.end());
    return out;
}

std::map<VarId, std::size_t> occurrences(const Pattern& p) {
    std::map<VarId, std::size_t> out;
    for (const Symbol& s : p)
        if (s.is_variable()) ++out[s.var()];
    return out;
}

std::size_t constant_count(const Pattern& p) {
    return static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](const Symbol& s) { return s.is_constant(); }));
}

std::string constants_of(const Pattern& p) {
    std::string out;
    for (const Symbol& s : p)
        if (s.is_constant()) out += s.letter();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string apply_substitution(const Pattern& p, const Substitution& h) {
    std::string out;
    std::vector<unsigned> missing;
    for (const Symbol& s : p) {
        if (s.is_constant()) {
            out += s.letter();
            continue;
        }
        auto it = h.find(s.var());
        if (it == h.end()) {
            if (std::find(missing.begin(), missing.end(), s.var()) == missing.end()) missing.push_back(s.var());
            continue;
        }
        out += it->second;
    }
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        throw UnboundVariableError(std::move(missing));
    }
    return out;
}

bool is_solution(const Equation& eq, const Substitution& h) {
    return apply_substitution(eq.lhs, h) == apply_substitution(eq.rhs, h);
}

std::size_t solution_length(const Equation& eq, const Substitution& h) { return apply_substitution(eq.lhs, h).size(); }

std::ostream& operator<<(std::ostream& os, const Equation& eq) { return os << render_equation(eq); }

}  // namespace wordeq
