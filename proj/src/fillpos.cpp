#include "wordeq/fillpos.hpp"

#include <algorithm>
#include <limits>

namespace wordeq {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::size_t side_length(const Pattern& p, const LengthAssignment& la, std::vector<unsigned>& missing) {
    std::size_t n = 0;
    for (const Symbol& s : p) {
        if (s.is_constant()) {
            ++n;
            continue;
        }
        auto it = la.find(s.var());
        if (it == la.end())
            missing.push_back(s.var());
        else
            n += it->second;
    }
    return n;
}

}  // namespace

std::pair<std::size_t, std::size_t> side_lengths(const Equation& eq, const LengthAssignment& la) {
    std::vector<unsigned> missing;
    std::size_t l = side_length(eq.lhs, la, missing);
    std::size_t r = side_length(eq.rhs, la, missing);
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        throw UnboundVariableError(std::move(missing));
    }
    return {l, r};
}

PositionGraph::PositionGraph(const Equation& eq, const LengthAssignment& la) {
    auto [l, r] = side_lengths(eq, la);
    if (l != r) throw InvalidArgument("sides have different lengths under the assignment");
    image_length_ = l;
    for (VarId x : variables(eq)) {
        std::size_t len = la.at(x);
        lengths_[x] = len;
        base_[x] = var_cells_;
        var_cells_ += len;
    }
    anchors_ = constants_of(eq.lhs) + constants_of(eq.rhs);
    std::sort(anchors_.begin(), anchors_.end());
    anchors_.erase(std::unique(anchors_.begin(), anchors_.end()), anchors_.end());
    cell_count_ = var_cells_ + anchors_.size();
    uf_.reset(cell_count_);
    lettered_.assign(cell_count_, npos);
    for (std::size_t i = 0; i < anchors_.size(); ++i) lettered_[var_cells_ + i] = var_cells_ + i;

    // Walk both sides in lockstep, one union per global position.
    auto expand = [&](const Pattern& p) {
        std::vector<std::size_t> cells;
        cells.reserve(image_length_);
        for (const Symbol& s : p) {
            if (s.is_constant()) {
                cells.push_back(anchor_cell(s.letter()));
            } else {
                std::size_t b = base_.at(s.var());
                for (std::size_t d = 0; d < lengths_.at(s.var()); ++d) cells.push_back(b + d);
            }
        }
        return cells;
    };
    std::vector<std::size_t> lc = expand(eq.lhs);
    std::vector<std::size_t> rc = expand(eq.rhs);
    for (std::size_t g = 0; g < image_length_; ++g) unite(lc[g], rc[g]);
}

void PositionGraph::unite(std::size_t a, std::size_t b) {
    ++unions_;
    std::size_t ra = uf_.find(a);
    std::size_t rb = uf_.find(b);
    if (ra == rb) return;
    std::size_t la = lettered_[ra];
    std::size_t lb = lettered_[rb];
    if (la != npos && lb != npos && anchors_[la - var_cells_] != anchors_[lb - var_cells_] && !conflict_) {
        conflict_ = std::pair{a, b};
        conflict_letters_ = {anchors_[la - var_cells_], anchors_[lb - var_cells_]};
    }
    std::size_t root = uf_.unite(ra, rb);
    lettered_[root] = la != npos ? la : lb;
}

std::size_t PositionGraph::var_cell(VarId x, std::size_t offset) const { return base_.at(x) + offset; }

std::size_t PositionGraph::anchor_cell(char c) const {
    auto pos = anchors_.find(c);
    if (pos == std::string::npos) throw InvalidArgument(std::string("no anchor for letter '") + c + "'");
    return var_cells_ + pos;
}

char PositionGraph::forced_letter(std::size_t cell) {
    std::size_t rep = lettered_[uf_.find(cell)];
    return rep == npos ? '\0' : anchors_[rep - var_cells_];
}

std::vector<std::size_t> PositionGraph::free_classes() {
    std::vector<std::size_t> out;
    std::vector<bool> seen(cell_count_, false);
    for (std::size_t c = 0; c < var_cells_; ++c) {
        std::size_t r = uf_.find(c);
        if (seen[r] || lettered_[r] != npos) continue;
        seen[r] = true;
        out.push_back(r);
    }
    return out;
}

std::string PositionGraph::describe(std::size_t cell) const {
    if (cell >= var_cells_) return std::string("'") + anchors_[cell - var_cells_] + "'";
    for (auto it = base_.rbegin(); it != base_.rend(); ++it)
        if (it->second <= cell && cell < it->second + lengths_.at(it->first))
            return "X" + std::to_string(it->first) + "[" + std::to_string(cell - it->second + 1) + "]";
    return "?";
}

Substitution derive_min_letter_solution(PositionGraph& graph, char default_letter) {
    return graph.build([default_letter](std::size_t) { return default_letter; });
}

LengthCheck check_lengths(const Equation& eq, const LengthAssignment& la, std::optional<char> default_letter) {
    auto [l, r] = side_lengths(eq, la);
    if (l != r) return LengthMismatch{l, r};
    char fill = default_letter.value_or(eq.alphabet.first());
    if (!eq.alphabet.contains(fill)) throw InvalidArgument(std::string("default letter '") + fill + "' not in alphabet");
    PositionGraph g(eq, la);
    if (auto c = g.conflict()) {
        Contradiction out;
        out.cells = *c;
        out.letters = g.conflict_letters();
        out.description = g.describe(c->first) + " ~ " + g.describe(c->second);
        return out;
    }
    LengthSolution sol;
    sol.free_classes = g.free_classes().size();
    sol.h = derive_min_letter_solution(g, fill);
    if (!is_solution(eq, sol.h)) throw InternalError("filled substitution is not a solution");
    return sol;
}

}  // namespace wordeq
