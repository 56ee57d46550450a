#include "wordeq/chains.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wordeq/classify.hpp"

namespace wordeq {

std::string render_position(const Position& p) {
    std::string sym = p.symbol.is_variable() ? "X" + std::to_string(p.symbol.var()) : std::string(1, p.symbol.letter());
    return "(" + sym + "," + std::to_string(p.z) + "," + std::to_string(p.d) + ")";
}

std::string render_sequence(const Sequence& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (i) out += ",";
        out += render_position(s.entries[i]);
    }
    return out + "]";
}

namespace {

struct Occurrence {
    Symbol symbol;
    std::size_t z;
    int side;            // 0 = lhs, 1 = rhs
    std::size_t start;   // offset of the image inside its side's image
    std::size_t length;  // image length
};

// Precomputed correspondence tables for one (equation, solution) pair.
class Layout {
public:
    Layout(const Equation& eq, const Substitution& h) {
        std::map<Symbol, std::size_t> count;
        std::size_t offset[2] = {0, 0};
        for (int side = 0; side < 2; ++side) {
            const Pattern& p = side == 0 ? eq.lhs : eq.rhs;
            for (const Symbol& s : p) {
                std::size_t len = s.is_constant() ? 1 : h.at(s.var()).size();
                Occurrence o{s, ++count[s], side, offset[side], len};
                index_[{s, o.z}] = occ_.size();
                for (std::size_t d = 0; d < len; ++d) image_[side].push_back({occ_.size(), d + 1});
                occ_.push_back(o);
                offset[side] += len;
            }
        }
        total_ = count;
    }

    const std::vector<Occurrence>& occurrences() const { return occ_; }

    bool terminal(const Symbol& s) const { return s.is_constant() || total_.at(s) == 1; }

    Position at(int side, std::size_t g) const {
        auto [i, d] = image_[side][g];
        return Position{occ_[i].symbol, occ_[i].z, d};
    }

    std::pair<int, std::size_t> locate(const Position& p) const {
        const Occurrence& o = occ_[index_.at({p.symbol, p.z})];
        return {o.side, o.start + p.d - 1};
    }

    std::size_t image_length() const { return image_[0].size(); }

private:
    std::vector<Occurrence> occ_;
    std::map<std::pair<Symbol, std::size_t>, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> image_[2];
    std::map<Symbol, std::size_t> total_;
};

std::pair<std::size_t, std::size_t> anchor_key(const Layout& lay, const Position& p) {
    // Occurrence order in lhs·rhs, then offset.
    const auto& occ = lay.occurrences();
    for (std::size_t i = 0; i < occ.size(); ++i)
        if (occ[i].symbol == p.symbol && occ[i].z == p.z) return {i, p.d};
    return {occ.size(), p.d};
}

void require_quadratic_solution(const Equation& eq, const Substitution& h) {
    if (!classify(eq).quadratic) throw InvalidArgument("equation is not quadratic");
    if (!is_solution(eq, h)) throw InvalidArgument("substitution is not a solution");
}

}  // namespace

std::vector<Sequence> build_sequences(const Equation& eq, const Substitution& h) {
    require_quadratic_solution(eq, h);
    Layout lay(eq, h);
    std::size_t guard = 2 * lay.image_length() + 2;
    std::vector<Sequence> out;
    for (const Occurrence& o : lay.occurrences()) {
        if (!lay.terminal(o.symbol)) continue;
        for (std::size_t d = 1; d <= o.length; ++d) {
            Position anchor{o.symbol, o.z, d};
            Sequence seq{anchor, {anchor}};
            auto [side, g] = lay.locate(anchor);
            while (true) {
                Position next = lay.at(1 - side, g);
                seq.entries.push_back(next);
                if (lay.terminal(next.symbol)) break;
                if (seq.entries.size() > guard) throw InternalError("position sequence does not terminate");
                Position other{next.symbol, next.z == 1 ? 2u : 1u, next.d};
                std::tie(side, g) = lay.locate(other);
            }
            if (anchor_key(lay, seq.entries.back()) < anchor_key(lay, anchor)) continue;
            out.push_back(std::move(seq));
        }
    }
    return out;
}

std::optional<Square> find_square(const Sequence& seq) {
    const auto& e = seq.entries;
    for (std::size_t t = 1; 2 * t <= e.size(); ++t) {
        for (std::size_t s = 0; s + 2 * t <= e.size(); ++s) {
            bool ok = true;
            long shift = static_cast<long>(e[s + t].d) - static_cast<long>(e[s].d);
            for (std::size_t j = 0; j < t && ok; ++j) {
                ok = e[s + j].similar(e[s + t + j]) &&
                     static_cast<long>(e[s + t + j].d) - static_cast<long>(e[s + j].d) == shift;
            }
            if (!ok || shift == 0) continue;
            Square sq;
            sq.start = s + 1;
            sq.half = t;
            sq.shift = shift;
            sq.window.assign(e.begin() + static_cast<long>(s), e.begin() + static_cast<long>(s + 2 * t));
            return sq;
        }
    }
    return std::nullopt;
}

namespace {

// 0-based [from, to) removed from the first-half entry i.
std::pair<std::size_t, std::size_t> block(const Position& p, long shift) {
    if (shift > 0) return {p.d - 1, p.d - 1 + static_cast<std::size_t>(shift)};
    // Mirror image of the positive case under reversal of both sides:
    // the block ends at d and extends |C| positions to the left.
    std::size_t c = static_cast<std::size_t>(-shift);
    return {p.d - c, p.d};
}

}  // namespace

std::string square_factor(const Square& sq, const Substitution& h) {
    if (sq.shift == 0 || sq.window.empty()) throw InvalidArgument("degenerate square");
    const Position& p = sq.window.front();
    if (!p.symbol.is_variable()) throw InvalidArgument("square starts at a constant");
    auto [from, to] = block(p, sq.shift);
    return h.at(p.symbol.var()).substr(from, to - from);
}

Substitution shorten(const Equation& eq, const Substitution& h, const Square& sq) {
    if (sq.shift == 0 || sq.half == 0 || sq.window.size() != 2 * sq.half) throw InvalidArgument("degenerate square");
    std::map<VarId, std::set<std::size_t>> doomed;
    for (std::size_t i = 0; i < sq.half; ++i) {
        const Position& p = sq.window[i];
        if (!p.symbol.is_variable()) throw InvalidArgument("square contains a constant position");
        auto [from, to] = block(p, sq.shift);
        std::size_t len = h.at(p.symbol.var()).size();
        if (to > len || from > to) throw InvalidArgument("square block outside the image");
        for (std::size_t k = from; k < to; ++k) doomed[p.symbol.var()].insert(k);
    }
    Substitution g = h;
    for (const auto& [x, idx] : doomed) {
        std::string w;
        const std::string& old = h.at(x);
        for (std::size_t k = 0; k < old.size(); ++k)
            if (!idx.count(k)) w += old[k];
        g[x] = std::move(w);
    }
    if (!is_solution(eq, g)) throw InternalError("square removal did not produce a solution");
    if (solution_length(eq, g) >= solution_length(eq, h)) throw InternalError("square removal did not shorten");
    return g;
}

Reduction reduce_via_squares(const Equation& eq, const Substitution& h) {
    require_quadratic_solution(eq, h);
    Reduction r{h, {}};
    std::size_t budget = solution_length(eq, h) + 1;
    while (true) {
        auto seqs = build_sequences(eq, r.result);
        bool changed = false;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            auto sq = find_square(seqs[i]);
            if (!sq) continue;
            Substitution next = shorten(eq, r.result, *sq);
            r.trace.push_back({*sq, i, r.result, next});
            r.result = std::move(next);
            changed = true;
            break;
        }
        if (!changed) return r;
        if (--budget == 0) throw InternalError("square reduction failed to terminate");
    }
}

}  // namespace wordeq
