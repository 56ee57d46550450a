#include "wordeq/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

namespace wordeq {

namespace {

std::string_view trim(std::string_view s) {
    auto c = s.find("//");
    if (c != std::string_view::npos) s = s.substr(0, c);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string> words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

}  // namespace

Dfa Dfa::parse(std::string_view text) {
    Dfa a;
    std::map<std::string, int> id;
    std::optional<std::string> initial;
    std::vector<std::string> accepting;
    std::vector<std::tuple<std::string, char, std::string, std::size_t>> edges;
    std::size_t line_no = 0;
    bool saw_states = false;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty()) continue;
        auto colon = line.find(':');
        auto arrow = line.find("->");
        if (colon != std::string_view::npos && arrow == std::string_view::npos) {
            std::string key(trim(line.substr(0, colon)));
            auto rest = words(line.substr(colon + 1));
            if (key == "states") {
                saw_states = true;
                for (auto& s : rest) {
                    if (id.count(s)) throw ParseError("duplicate state '" + s + "'", line_no, 0);
                    id[s] = static_cast<int>(a.names_.size());
                    a.names_.push_back(s);
                }
            } else if (key == "initial") {
                if (rest.size() != 1) throw ParseError("expected one initial state", line_no, 0);
                initial = rest[0];
            } else if (key == "accepting") {
                accepting.insert(accepting.end(), rest.begin(), rest.end());
            } else {
                throw ParseError("unknown key '" + key + "'", line_no, 0);
            }
            continue;
        }
        auto comma = line.find(',');
        if (arrow == std::string_view::npos || comma == std::string_view::npos || comma > arrow)
            throw ParseError("expected 'q,a->q'", line_no, 0);
        std::string from(trim(line.substr(0, comma)));
        std::string_view letter = trim(line.substr(comma + 1, arrow - comma - 1));
        std::string to(trim(line.substr(arrow + 2)));
        if (letter.size() != 1 || !is_constant_letter(letter[0]))
            throw ParseError("transition letter must be one of [a-z#]", line_no, 0);
        edges.emplace_back(from, letter[0], to, line_no);
    }
    if (!saw_states || a.names_.empty()) throw ParseError("missing 'states:' line", 0, 0);
    if (!initial) throw ParseError("missing 'initial:' line", 0, 0);
    auto lookup = [&](const std::string& s, std::size_t line) {
        auto it = id.find(s);
        if (it == id.end()) throw ParseError("unknown state '" + s + "'", line, 0);
        return it->second;
    };
    a.initial_ = lookup(*initial, 0);
    a.accepting_.assign(a.names_.size(), false);
    for (auto& s : accepting) a.accepting_[static_cast<std::size_t>(lookup(s, 0))] = true;
    a.delta_.assign(a.names_.size(), {});
    for (auto& [from, c, to, line] : edges) {
        int f = lookup(from, line);
        int t = lookup(to, line);
        auto [it, fresh] = a.delta_[static_cast<std::size_t>(f)].emplace(c, t);
        if (!fresh && it->second != t) throw ParseError("nondeterministic transition", line, 0);
    }
    a.finish();
    return a;
}

Dfa Dfa::from_table(std::size_t states, std::size_t initial, std::vector<std::size_t> accepting,
                    const std::vector<std::tuple<std::size_t, char, std::size_t>>& transitions) {
    Dfa a;
    for (std::size_t i = 0; i < states; ++i) a.names_.push_back("q" + std::to_string(i));
    if (initial >= states) throw InvalidArgument("initial state out of range");
    a.initial_ = static_cast<int>(initial);
    a.accepting_.assign(states, false);
    for (auto q : accepting) a.accepting_.at(q) = true;
    a.delta_.assign(states, {});
    for (auto& [f, c, t] : transitions) {
        if (f >= states || t >= states) throw InvalidArgument("transition state out of range");
        a.delta_[f][c] = static_cast<int>(t);
    }
    a.finish();
    return a;
}

void Dfa::finish() {
    std::string letters;
    for (auto& row : delta_)
        for (auto& [c, t] : row) letters += c;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    letters_ = letters;
    // Backward reachability from accepting states.
    live_ = accepting_;
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t q = 0; q < delta_.size(); ++q) {
            if (live_[q]) continue;
            for (auto& [c, t] : delta_[q])
                if (live_[static_cast<std::size_t>(t)]) {
                    live_[q] = true;
                    grew = true;
                    break;
                }
        }
    }
}

int Dfa::step(int q, char c) const {
    if (q == dead) return dead;
    const auto& row = delta_[static_cast<std::size_t>(q)];
    auto it = row.find(c);
    return it == row.end() ? dead : it->second;
}

bool Dfa::accepts(std::string_view w) const {
    int q = initial_;
    for (char c : w) q = step(q, c);
    return accepting(q);
}

namespace {

std::string re_union(const std::string& a, const std::string& b) {
    if (a == "re.none") return b;
    if (b == "re.none") return a;
    if (a == b) return a;
    return "(re.union " + a + " " + b + ")";
}

std::string re_concat(const std::vector<std::string>& parts) {
    std::vector<std::string> kept;
    for (auto& p : parts) {
        if (p == "re.none") return "re.none";
        if (p != "(str.to_re \"\")") kept.push_back(p);
    }
    if (kept.empty()) return "(str.to_re \"\")";
    if (kept.size() == 1) return kept[0];
    std::string out = "(re.++";
    for (auto& p : kept) out += " " + p;
    return out + ")";
}

std::string re_star(const std::string& a) {
    if (a == "re.none" || a == "(str.to_re \"\")") return "(str.to_re \"\")";
    return "(re.* " + a + ")";
}

std::string re_letter(char c) {
    if (c == '#') return "(str.to_re \"\\u{23}\")";
    return std::string("(str.to_re \"") + c + "\")";
}

}  // namespace

std::string Dfa::to_smtlib_regex() const {
    // State elimination over a generalized NFA with fresh start S and end F.
    std::size_t n = size();
    std::size_t S = n, F = n + 1;
    std::vector<std::vector<std::string>> r(n + 2, std::vector<std::string>(n + 2, "re.none"));
    r[S][static_cast<std::size_t>(initial_)] = "(str.to_re \"\")";
    for (std::size_t q = 0; q < n; ++q) {
        if (accepting_[q]) r[q][F] = "(str.to_re \"\")";
        for (auto& [c, t] : delta_[q]) r[q][static_cast<std::size_t>(t)] = re_union(r[q][static_cast<std::size_t>(t)], re_letter(c));
    }
    std::vector<bool> gone(n + 2, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::string loop = re_star(r[k][k]);
        for (std::size_t i = 0; i < n + 2; ++i) {
            if (gone[i] || i == k || r[i][k] == "re.none") continue;
            for (std::size_t j = 0; j < n + 2; ++j) {
                if (gone[j] || j == k || r[k][j] == "re.none") continue;
                r[i][j] = re_union(r[i][j], re_concat({r[i][k], loop, r[k][j]}));
            }
        }
        gone[k] = true;
    }
    return r[S][F];
}

Constraints load_constraints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open constraint file '" + path + "'");
    auto dir = std::filesystem::path(path).parent_path();
    Constraints out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view t = trim(line);
        if (t.empty()) continue;
        auto colon = t.find(':');
        if (colon == std::string_view::npos || t.size() < 2 || t[0] != 'X')
            throw ParseError("expected 'X<n>: <automaton file>'", line_no, 1);
        std::string name(trim(t.substr(1, colon - 1)));
        if (name.empty() || !std::all_of(name.begin(), name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("bad variable name", line_no, 1);
        VarId x = static_cast<VarId>(std::stoul(name));
        std::filesystem::path file{std::string(trim(t.substr(colon + 1)))};
        if (file.is_relative()) file = dir / file;
        std::ifstream af(file);
        if (!af) throw InvalidArgument("cannot open automaton file '" + file.string() + "'");
        std::stringstream buf;
        buf << af.rdbuf();
        if (!out.emplace(x, Dfa::parse(buf.str())).second)
            throw ParseError("duplicate constraint for X" + name, line_no, 1);
    }
    return out;
}

}  // namespace wordeq
