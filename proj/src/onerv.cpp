#include "wordeq/onerv.hpp"

#include <algorithm>
#include <chrono>

#include "wordeq/classify.hpp"
#include "wordeq/periods.hpp"

namespace wordeq {

bool ClassDSide::has_wildcards() const {
    auto var = [](const Symbol& s) { return s.is_variable(); };
    return std::any_of(prefix.begin(), prefix.end(), var) || std::any_of(suffix.begin(), suffix.end(), var);
}

namespace {

ClassDSide split_side(const Pattern& side, std::optional<VarId> x) {
    ClassDSide out;
    std::size_t first = side.size(), last = side.size();
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (x && side[i].is_variable() && side[i].var() == *x) {
            if (first == side.size()) first = i;
            last = i;
        }
    }
    if (first == side.size()) {
        out.prefix = side;
        return out;
    }
    out.prefix.assign(side.begin(), side.begin() + static_cast<std::ptrdiff_t>(first));
    out.suffix.assign(side.begin() + static_cast<std::ptrdiff_t>(last) + 1, side.end());
    std::string block;
    out.copies = 1;
    for (std::size_t i = first + 1; i <= last; ++i) {
        if (side[i].is_variable()) {
            out.blocks.push_back(block);
            block.clear();
            ++out.copies;
        } else {
            block += side[i].letter();
        }
    }
    return out;
}

}  // namespace

std::optional<ClassDForm> to_class_d_form(const Equation& eq) {
    ClassDMembership m = class_d_membership(eq);
    if (!m.member) return std::nullopt;
    ClassDForm form;
    form.x = m.repeated;
    form.lhs = split_side(eq.lhs, form.x);
    form.rhs = split_side(eq.rhs, form.x);
    if (form.lhs.has_wildcards() && form.rhs.has_wildcards()) return std::nullopt;
    return form;
}

Pattern render_side(const ClassDSide& side, std::optional<VarId> x) {
    Pattern out = side.prefix;
    if (side.copies > 0) {
        if (!x) throw InvalidArgument("side has copies of x but no x is given");
        for (std::size_t i = 0; i < side.copies; ++i) {
            if (i > 0)
                for (char c : side.blocks[i - 1]) out.push_back(Symbol::constant(c));
            out.push_back(Symbol::variable(*x));
        }
    }
    out.insert(out.end(), side.suffix.begin(), side.suffix.end());
    return out;
}

std::optional<Substitution> match_regular_pattern(const Pattern& p, std::string_view w) {
    std::vector<std::string> blocks(1);
    std::vector<VarId> vars;
    for (const Symbol& s : p) {
        if (s.is_constant()) {
            blocks.back() += s.letter();
            continue;
        }
        if (std::find(vars.begin(), vars.end(), s.var()) != vars.end())
            throw InvalidArgument("pattern is not regular: X" + std::to_string(s.var()) + " repeats");
        vars.push_back(s.var());
        blocks.emplace_back();
    }
    if (vars.empty()) {
        if (blocks[0] != w) return std::nullopt;
        return Substitution{};
    }
    const std::string& head = blocks.front();
    const std::string& tail = blocks.back();
    if (head.size() + tail.size() > w.size()) return std::nullopt;
    if (w.substr(0, head.size()) != head || w.substr(w.size() - tail.size()) != tail) return std::nullopt;

    Substitution h;
    std::size_t cur = head.size();
    std::size_t end = w.size() - tail.size();
    for (std::size_t i = 1; i + 1 < blocks.size(); ++i) {
        std::size_t pos = w.substr(0, end).find(blocks[i], cur);
        if (pos == std::string_view::npos) return std::nullopt;
        h[vars[i - 1]] = std::string(w.substr(cur, pos - cur));
        cur = pos + blocks[i].size();
    }
    h[vars.back()] = std::string(w.substr(cur, end - cur));
    return h;
}

std::size_t default_onerv_bound(const Equation& eq) {
    std::size_t n = equation_size(eq);
    return 8 * n * n;
}

namespace {

constexpr int kX = -1;

// A pattern factor free of single-occurring variables: letters and copies
// of x. Positions depend on the current |h(x)|.
struct Factor {
    std::vector<int> items;
    std::vector<std::size_t> consts_before{0};
    std::vector<std::size_t> xs_before{0};

    void push(int item) {
        items.push_back(item);
        consts_before.push_back(consts_before.back() + (item == kX ? 0 : 1));
        xs_before.push_back(xs_before.back() + (item == kX ? 1 : 0));
    }
    std::size_t pos(std::size_t i, std::size_t ell) const { return consts_before[i] + xs_before[i] * ell; }
    std::size_t length(std::size_t ell) const { return pos(items.size(), ell); }
    std::size_t copies() const { return xs_before.back(); }
    std::size_t item_length(std::size_t i, std::size_t ell) const { return items[i] == kX ? ell : 1; }

    // Index of the item covering position p (p < length).
    std::size_t locate(std::size_t p, std::size_t ell) const {
        std::size_t lo = 0, hi = items.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            if (pos(mid, ell) <= p)
                lo = mid;
            else
                hi = mid;
        }
        return lo;
    }
};

// Constraints on h(x) collected from one alignment.
struct Events {
    std::vector<std::size_t> periods;
    std::vector<std::pair<std::size_t, char>> letters;

    void clear() {
        periods.clear();
        letters.clear();
    }
};

// Compares a[a0, a0+len) with b[b0, b0+len). False on a letter mismatch.
bool align(const Factor& a, std::size_t a0, const Factor& b, std::size_t b0, std::size_t len, std::size_t ell,
           Events& ev) {
    if (len == 0) return true;
    std::size_t ia = a.locate(a0, ell), ib = b.locate(b0, ell);
    std::size_t oa = a0 - a.pos(ia, ell), ob = b0 - b.pos(ib, ell);
    std::size_t done = 0;
    while (done < len) {
        while (oa >= a.item_length(ia, ell)) {
            oa -= a.item_length(ia, ell);
            ++ia;
        }
        while (ob >= b.item_length(ib, ell)) {
            ob -= b.item_length(ib, ell);
            ++ib;
        }
        int ca = a.items[ia], cb = b.items[ib];
        std::size_t step = std::min({a.item_length(ia, ell) - oa, b.item_length(ib, ell) - ob, len - done});
        if (ca != kX && cb != kX) {
            if (ca != cb) return false;
        } else if (ca == kX && cb == kX) {
            if (oa != ob) ev.periods.push_back(oa > ob ? oa - ob : ob - oa);
        } else if (ca == kX) {
            ev.letters.emplace_back(oa, static_cast<char>(cb));
        } else {
            ev.letters.emplace_back(ob, static_cast<char>(ca));
        }
        oa += step;
        ob += step;
        done += step;
    }
    return true;
}

// Letters forced on the classes of x, with rollback.
class XLetters {
public:
    void reset(const PeriodClasses* classes) {
        classes_ = classes;
        assigned_.clear();
    }
    bool assign(std::size_t d, char c) {
        std::uint64_t k = classes_->key(d);
        for (const auto& [key, letter] : assigned_)
            if (key == k) return letter == c;
        assigned_.emplace_back(k, c);
        return true;
    }
    bool assign_all(const std::vector<std::pair<std::size_t, char>>& letters) {
        for (const auto& [d, c] : letters)
            if (!assign(d, c)) return false;
        return true;
    }
    std::size_t mark() const { return assigned_.size(); }
    void rollback(std::size_t m) { assigned_.resize(m); }

    // Word of the configuration, free classes filled with `fill`.
    std::string word(char fill, std::size_t* free_classes) const {
        std::string out(classes_->length(), fill);
        std::vector<std::uint64_t> free;
        for (std::size_t d = 0; d < out.size(); ++d) {
            std::uint64_t k = classes_->key(d);
            bool found = false;
            for (const auto& [key, letter] : assigned_) {
                if (key == k) {
                    out[d] = letter;
                    found = true;
                    break;
                }
            }
            if (!found && std::find(free.begin(), free.end(), k) == free.end()) free.push_back(k);
        }
        if (free_classes) *free_classes = free.size();
        return out;
    }

private:
    const PeriodClasses* classes_ = nullptr;
    std::vector<std::pair<std::uint64_t, char>> assigned_;
};

Factor factor_of(const Pattern& p, std::size_t from, std::size_t to, std::optional<VarId> x) {
    Factor f;
    for (std::size_t i = from; i < to; ++i) {
        const Symbol& s = p[i];
        if (s.is_constant())
            f.push(static_cast<unsigned char>(s.letter()));
        else if (x && s.var() == *x)
            f.push(kX);
        else
            throw InternalError("wildcard inside a factor");
    }
    return f;
}

bool is_wildcard(const Symbol& s, std::optional<VarId> x) { return s.is_variable() && !(x && s.var() == *x); }

// Splits a side at its single-occurring variables.
std::vector<Factor> segments_of(const Pattern& p, std::optional<VarId> x) {
    std::vector<Factor> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.size(); ++i) {
        if (i == p.size() || is_wildcard(p[i], x)) {
            out.push_back(factor_of(p, start, i, x));
            start = i + 1;
        }
    }
    return out;
}

Pattern substitute_x(const Pattern& p, std::optional<VarId> x, const std::string& image) {
    Pattern out;
    for (const Symbol& s : p) {
        if (x && s.is_variable() && s.var() == *x) {
            for (char c : image) out.push_back(Symbol::constant(c));
        } else {
            out.push_back(s);
        }
    }
    return out;
}

char fill_letter(const Equation& eq, std::optional<char> requested) {
    if (!requested) return eq.alphabet.first();
    if (!eq.alphabet.contains(*requested))
        throw InvalidArgument(std::string("default letter '") + *requested + "' not in alphabet");
    return *requested;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void finish_sat(SolveResult& res, const Equation& eq, Substitution h, std::size_t free_classes) {
    if (!is_solution(eq, h)) throw InternalError("one-variable engine produced a non-solution");
    res.status = Status::Sat;
    res.total_length = solution_length(eq, h);
    res.free_classes = free_classes;
    res.stats.first_sat_total_length = res.total_length;
    res.h = std::move(h);
}

void finish_unsat(SolveResult& res, std::size_t bound, bool exact) {
    res.status = Status::Unsat;
    if (exact)
        res.note = "no solution for any |h(x)|";
    else
        res.note = "no solution with |h(x)| <= " + std::to_string(bound);
}

// One side without single-occurring variables (`pure`), the other split at
// its single-occurring variables into segments placed in order inside
// h(pure), the first flush left and the last flush right.
//
// Offset window: when the other side is wildcards, one x segment S and
// wildcards, a configuration in which some copy of h(x) in S overlaps the
// copies of h(pure) with a shift far from |h(x)|/2 forces a short period on
// h(x), and deleting one period from every copy gives a configuration with
// a shorter h(x). From |h(x)| >= window_start() on, only offsets where every
// copy in S sits near the middle between two copies, or exactly on one, are
// tried. check_offset_window() verifies the shortening on skipped offsets.
class PureEngine {
public:
    PureEngine(const Equation& eq, std::optional<VarId> x, bool lhs_pure, char fill, bool exhaustive = false)
        : eq_(eq), x_(x), fill_(fill) {
        pure_ = lhs_pure ? eq.lhs : eq.rhs;
        other_ = lhs_pure ? eq.rhs : eq.lhs;
        text_ = factor_of(pure_, 0, pure_.size(), x);
        segs_ = segments_of(other_, x);
        for (std::size_t i = 0; i < segs_.size(); ++i)
            if (segs_[i].copies() > 0) xseg_ = i;
        for (std::size_t i = 0; i < text_.items.size(); ++i)
            if (text_.items[i] == kX) text_copies_.push_back(i);
        if (xseg_) {
            const Factor& s = segs_[*xseg_];
            for (std::size_t i = 0; i < s.items.size(); ++i)
                if (s.items[i] == kX) seg_copies_.push_back(i);
            bool others_empty = true;
            for (std::size_t i = 0; i < segs_.size(); ++i)
                if (i != *xseg_ && !segs_[i].items.empty()) others_empty = false;
            window_ = !exhaustive && others_empty && *xseg_ > 0 && *xseg_ + 1 < segs_.size();
            std::size_t run = 0, longest = 0;
            for (const Factor* f : std::initializer_list<const Factor*>{&text_, &s}) {
                run = 0;
                for (int item : f->items) {
                    run = item == kX ? 0 : run + 1;
                    longest = std::max(longest, run);
                }
            }
            slack_ = 2 * longest + 4;
        }
        window_start_ = offset_window_start(eq);
    }

    bool has_window() const { return window_; }
    std::size_t window_start() const { return window_start_; }

    SolveResult run(std::size_t bound) {
        Timer timer;
        SolveResult res;
        res.engine = "onerv";
        res.bound_used = bound;

        // Without x in the segments, deleting a position of h(x) that no
        // constant covers keeps a solution, so |h(x)| <= #constants suffices.
        std::size_t limit = bound;
        bool exact = false;
        if (!x_) {
            limit = 0;
            exact = true;
        } else if (!xseg_) {
            std::size_t consts = constant_count(other_);
            if (consts <= bound) {
                limit = consts;
                exact = true;
            }
        }
        std::size_t seg_copies = 0;
        for (const Factor& f : segs_) seg_copies += f.copies();

        for (std::size_t ell = 0; ell <= limit; ++ell) {
            std::size_t n = text_.length(ell);
            std::size_t fixed = 0;
            for (const Factor& f : segs_) fixed += f.length(ell);
            if (fixed > n) {
                // fixed - n never decreases from here on
                if (seg_copies >= text_.copies()) {
                    exact = true;
                    break;
                }
                continue;
            }
            if (segs_.size() == 1 && fixed != n) continue;
            if (try_length(ell, n, res)) {
                res.stats.total_time = timer.seconds();
                return res;
            }
        }
        finish_unsat(res, bound, exact);
        res.stats.total_time = timer.seconds();
        return res;
    }

    // See check_offset_window().
    std::optional<std::string> audit(std::size_t from, std::size_t to) {
        if (!window_) return std::nullopt;
        for (std::size_t ell = std::max(from, window_start_); ell <= to; ++ell) {
            ell_ = ell;
            n_ = text_.length(ell);
            auto [lo, hi] = offset_range();
            if (lo > hi) continue;
            for (std::size_t o = lo; o <= hi; ++o) {
                if (in_window(o)) continue;
                if (!load(o)) continue;
                if (shortens(o)) continue;
                return "|h(x)|=" + std::to_string(ell) + " offset " + std::to_string(o) +
                       " is skipped but neither contradictory nor shortening";
            }
        }
        return std::nullopt;
    }

private:
    std::pair<std::size_t, std::size_t> offset_range() const {
        std::size_t j = *xseg_;
        std::size_t before = 0, after = 0;
        for (std::size_t i = 0; i < segs_.size(); ++i) {
            if (i < j) before += segs_[i].length(ell_);
            if (i > j) after += segs_[i].length(ell_);
        }
        std::size_t len = segs_[j].length(ell_);
        if (before + len + after > n_) return {1, 0};
        std::size_t lo = j == 0 ? 0 : before;
        std::size_t hi = n_ - after - len;
        if (j + 1 == segs_.size()) lo = hi;
        if (j == 0) hi = 0;
        return {lo, hi};
    }

    std::size_t text_copy_start(std::size_t t) const { return text_.pos(text_copies_[t], ell_); }
    std::size_t seg_copy_start(std::size_t i, std::size_t o) const {
        return o + segs_[*xseg_].pos(seg_copies_[i], ell_);
    }

    // Smallest shift between copy i of S and an overlapping copy of
    // h(pure); 0 when it sits exactly on one.
    std::size_t copy_shift(std::size_t i, std::size_t o) const {
        std::size_t sigma = seg_copy_start(i, o);
        std::size_t best = ell_;
        for (std::size_t t = 0; t < text_copies_.size(); ++t) {
            std::size_t tau = text_copy_start(t);
            std::size_t d = sigma > tau ? sigma - tau : tau - sigma;
            if (d < ell_) best = std::min(best, d);
        }
        return best;
    }

    bool in_window(std::size_t o) const {
        bool mid = true;
        for (std::size_t i = 0; i < seg_copies_.size(); ++i) {
            std::size_t p = copy_shift(i, o);
            if (p == 0) return true;
            if (2 * p + 2 * slack_ <= ell_) mid = false;
        }
        return mid;
    }

    // Offsets tried at the current |h(x)|, ascending.
    void window_offsets(std::size_t lo, std::size_t hi, std::vector<std::size_t>& out) const {
        out.clear();
        auto add = [&](long long a, long long b) {
            a = std::max<long long>(a, static_cast<long long>(lo));
            b = std::min<long long>(b, static_cast<long long>(hi));
            for (long long o = a; o <= b; ++o) out.push_back(static_cast<std::size_t>(o));
        };
        long long half = static_cast<long long>(ell_ / 2);
        long long sl = static_cast<long long>(slack_);
        for (std::size_t t = 0; t < text_copies_.size(); ++t) {
            long long tau = static_cast<long long>(text_copy_start(t));
            for (std::size_t i = 0; i < seg_copies_.size(); ++i) {
                long long rel = static_cast<long long>(seg_copy_start(i, 0));
                add(tau - rel, tau - rel);
                if (i == 0) add(tau - rel + half - sl - 1, tau - rel + half + 2 * sl + 1);
                if (i == 0) add(tau - rel - half - 2 * sl - 1, tau - rel - half + sl + 1);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        out.erase(std::remove_if(out.begin(), out.end(), [&](std::size_t o) { return !in_window(o); }), out.end());
    }

    // Aligns S at offset o and loads its constraints. False if contradictory.
    bool load(std::size_t o) {
        const Factor& s = segs_[*xseg_];
        events_.clear();
        if (!align(text_, o, s, 0, s.length(ell_), ell_, events_)) return false;
        if (!classes_.reset(ell_, events_.periods, events_.letters)) return false;
        letters_.reset(&classes_);
        if (!letters_.assign_all(events_.letters)) return false;
        xstart_ = o;
        return true;
    }

    // Every copy of h(pure) loses a block of p cells: inside the copy of S
    // it is matched with (same cells), or outside S's span.
    bool shortens(std::size_t o) const {
        std::size_t p = classes_.base_period();
        if (p == 0) return false;
        std::size_t span_lo = o, span_hi = o + segs_[*xseg_].length(ell_);
        std::size_t k = text_copies_.size(), m = seg_copies_.size();
        std::vector<std::vector<char>> dp(k + 1, std::vector<char>(m + 1, 0));
        dp[0][0] = 1;
        for (std::size_t t = 0; t < k; ++t) {
            std::size_t a = text_copy_start(t), b = a + ell_;
            std::size_t left = span_lo > a ? std::min(span_lo, b) - a : 0;
            std::size_t right = b > span_hi ? b - std::max(span_hi, a) : 0;
            bool free = std::max(left, right) >= p;
            for (std::size_t i = 0; i <= m; ++i) {
                if (!dp[t][i]) continue;
                if (free) dp[t + 1][i] = 1;
                if (i < m) {
                    std::size_t c = seg_copy_start(i, o), d = c + ell_;
                    std::size_t lo = std::max(a, c), hi = std::min(b, d);
                    if (hi > lo && hi - lo >= p) dp[t + 1][i + 1] = 1;
                }
            }
        }
        return dp[k][m];
    }

    bool try_length(std::size_t ell, std::size_t n, SolveResult& res) {
        ell_ = ell;
        n_ = n;
        if (!xseg_) {
            ++res.stats.vectors_tried;
            classes_.reset(ell, {});
            letters_.reset(&classes_);
            return place(0, 0, res);
        }
        auto [lo, hi] = offset_range();
        if (lo > hi) return false;
        if (window_ && ell >= window_start_) {
            window_offsets(lo, hi, offsets_);
            for (std::size_t o : offsets_) {
                ++res.stats.vectors_tried;
                if (load(o) && place(0, 0, res)) return true;
            }
            return false;
        }
        for (std::size_t o = lo; o <= hi; ++o) {
            ++res.stats.vectors_tried;
            if (load(o) && place(0, 0, res)) return true;
        }
        return false;
    }

    // Places segments i.. (skipping the x segment) from text position `from`.
    bool place(std::size_t i, std::size_t from, SolveResult& res) {
        if (i == segs_.size()) return witness(res);
        if (xseg_ && i == *xseg_) return place(i + 1, xstart_ + segs_[i].length(ell_), res);
        bool left = xseg_ && i < *xseg_;
        std::size_t stop = left ? xstart_ : n_;
        std::size_t last = left ? *xseg_ : segs_.size();
        std::size_t need = 0;
        for (std::size_t t = i; t < last; ++t) need += segs_[t].length(ell_);
        if (from + need > stop) return false;
        const Factor& seg = segs_[i];
        std::size_t len = seg.length(ell_);
        std::size_t lo = from, hi = stop - need;
        if (i == 0) {
            if (from != 0) return false;
            hi = 0;
        }
        if (i + 1 == segs_.size()) {
            if (n_ - len < from) return false;
            lo = hi = n_ - len;
        }
        for (std::size_t p = lo; p <= hi; ++p) {
            events_.clear();
            if (!align(text_, p, seg, 0, len, ell_, events_)) continue;
            std::size_t m = letters_.mark();
            if (letters_.assign_all(events_.letters) && place(i + 1, p + len, res)) return true;
            letters_.rollback(m);
        }
        return false;
    }

    bool witness(SolveResult& res) {
        std::size_t free = 0;
        std::string xw = letters_.word(fill_, &free);
        Substitution h;
        if (x_) h[*x_] = xw;
        std::string w = apply_substitution(substitute_x(pure_, x_, xw), {});
        auto m = match_regular_pattern(substitute_x(other_, x_, xw), w);
        if (!m) throw InternalError("one-variable engine: wildcard match failed");
        h.insert(m->begin(), m->end());
        finish_sat(res, eq_, std::move(h), free);
        return true;
    }

    const Equation& eq_;
    std::optional<VarId> x_;
    char fill_;
    Pattern pure_;
    Pattern other_;
    Factor text_;
    std::vector<Factor> segs_;
    std::optional<std::size_t> xseg_;
    std::vector<std::size_t> text_copies_;  // item indices of x in text_
    std::vector<std::size_t> seg_copies_;   // item indices of x in the x segment
    bool window_ = false;
    std::size_t slack_ = 0;
    std::size_t window_start_ = 0;

    std::size_t ell_ = 0, n_ = 0, xstart_ = 0;
    Events events_;
    PeriodClasses classes_;
    XLetters letters_;
    std::vector<std::size_t> offsets_;
};

// Both sides have single-occurring variables: the equation is solvable for
// a given h(x) iff the heads before the first single-occurring variables are
// prefix-comparable and the tails after the last ones suffix-comparable.
SolveResult run_mixed(const Equation& eq, std::optional<VarId> x, std::size_t bound, char fill) {
    Timer timer;
    SolveResult res;
    res.engine = "onerv";
    res.bound_used = bound;

    auto head_tail = [&](const Pattern& p) {
        std::size_t first = p.size(), last = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (is_wildcard(p[i], x)) {
                if (first == p.size()) first = i;
                last = i;
            }
        }
        return std::pair{factor_of(p, 0, first, x), factor_of(p, last + 1, p.size(), x)};
    };
    auto [ha, ta] = head_tail(eq.lhs);
    auto [hb, tb] = head_tail(eq.rhs);
    bool ell_matters = ha.copies() + ta.copies() + hb.copies() + tb.copies() > 0;
    std::size_t limit = ell_matters ? bound : 0;

    Events ev;
    PeriodClasses classes;
    XLetters letters;
    for (std::size_t ell = 0; ell <= limit; ++ell) {
        ++res.stats.vectors_tried;
        ev.clear();
        std::size_t lha = ha.length(ell), lhb = hb.length(ell), lta = ta.length(ell), ltb = tb.length(ell);
        std::size_t mh = std::min(lha, lhb), mt = std::min(lta, ltb);
        if (!align(ha, 0, hb, 0, mh, ell, ev)) continue;
        if (!align(ta, lta - mt, tb, ltb - mt, mt, ell, ev)) continue;
        if (!classes.reset(ell, ev.periods, ev.letters)) continue;
        letters.reset(&classes);
        if (!letters.assign_all(ev.letters)) continue;

        std::size_t free = 0;
        std::string xw = letters.word(fill, &free);
        Substitution hx;
        if (x) hx[*x] = xw;
        Pattern pa = substitute_x(eq.lhs, x, xw), pb = substitute_x(eq.rhs, x, xw);
        // Solution word: longer head, both middles with wildcards empty, longer tail.
        auto constant_part = [](const Pattern& p, std::size_t from, std::size_t to) {
            std::string s;
            for (std::size_t i = from; i < to; ++i)
                if (p[i].is_constant()) s += p[i].letter();
            return s;
        };
        auto middle = [&](const Pattern& p, std::size_t head_len, std::size_t tail_len) {
            return constant_part(p, head_len, p.size() - tail_len);
        };
        auto prefix_len = [](const Pattern& p) {
            std::size_t i = 0;
            while (i < p.size() && p[i].is_constant()) ++i;
            return i;
        };
        auto suffix_len = [](const Pattern& p) {
            std::size_t i = 0;
            while (i < p.size() && p[p.size() - 1 - i].is_constant()) ++i;
            return i;
        };
        std::size_t pha = prefix_len(pa), phb = prefix_len(pb), pta = suffix_len(pa), ptb = suffix_len(pb);
        std::string head = pha >= phb ? constant_part(pa, 0, pha) : constant_part(pb, 0, phb);
        std::string tail = pta >= ptb ? constant_part(pa, pa.size() - pta, pa.size())
                                      : constant_part(pb, pb.size() - ptb, pb.size());
        std::string w = head + middle(pa, pha, pta) + middle(pb, phb, ptb) + tail;
        auto ma = match_regular_pattern(pa, w);
        auto mb = match_regular_pattern(pb, w);
        if (!ma || !mb) throw InternalError("one-variable engine: mixed witness match failed");
        hx.insert(ma->begin(), ma->end());
        hx.insert(mb->begin(), mb->end());
        finish_sat(res, eq, std::move(hx), free);
        res.stats.total_time = timer.seconds();
        return res;
    }
    finish_unsat(res, bound, !ell_matters);
    res.stats.total_time = timer.seconds();
    return res;
}

PureEngine make_pure_engine(const Equation& eq, std::optional<VarId> x, char fill) {
    auto wild = [&](const Pattern& p) {
        return std::any_of(p.begin(), p.end(), [&](const Symbol& s) { return is_wildcard(s, x); });
    };
    return PureEngine(eq, x, !wild(eq.lhs), fill);
}

}  // namespace

SolveResult solve_one_rv(const Equation& eq, const OneRvOptions& opts) {
    ClassDMembership m = class_d_membership(eq);
    if (!m.member) throw InvalidArgument("equation is not in class D");
    std::optional<VarId> x = m.repeated;
    char fill = fill_letter(eq, opts.default_letter);
    std::size_t bound = opts.bound.value_or(default_onerv_bound(eq));

    auto wild = [&](const Pattern& p) {
        return std::any_of(p.begin(), p.end(), [&](const Symbol& s) { return is_wildcard(s, x); });
    };
    bool wl = wild(eq.lhs), wr = wild(eq.rhs);
    if (wl && wr) return run_mixed(eq, x, bound, fill);
    return PureEngine(eq, x, !wl, fill, opts.exhaustive_offsets).run(bound);
}

SolveResult delegate_mixed(const Equation& eq, const OneRvOptions& opts) {
    ClassDMembership m = class_d_membership(eq);
    if (!m.member) throw InvalidArgument("equation is not in class D");
    auto wild = [&](const Pattern& p) {
        return std::any_of(p.begin(), p.end(), [&](const Symbol& s) { return is_wildcard(s, m.repeated); });
    };
    if (!wild(eq.lhs) || !wild(eq.rhs)) return solve_one_rv(eq, opts);
    char fill = fill_letter(eq, opts.default_letter);
    return run_mixed(eq, m.repeated, opts.bound.value_or(default_onerv_bound(eq)), fill);
}

std::optional<std::string> check_offset_window(const Equation& eq, std::size_t ell_from, std::size_t ell_to) {
    ClassDMembership m = class_d_membership(eq);
    if (!m.member) throw InvalidArgument("equation is not in class D");
    auto wild = [&](const Pattern& p) {
        return std::any_of(p.begin(), p.end(), [&](const Symbol& s) { return is_wildcard(s, m.repeated); });
    };
    if (wild(eq.lhs) && wild(eq.rhs)) return std::nullopt;
    return make_pure_engine(eq, m.repeated, eq.alphabet.first()).audit(ell_from, ell_to);
}

std::size_t offset_window_start(const Equation& eq) { return 8 * equation_size(eq) + 16; }

}  // namespace wordeq
