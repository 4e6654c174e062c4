#include "arrangis/wiring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "arrangis/errors.hpp"

namespace arrangis {

namespace {

void apply_event(std::vector<std::string>& at, const WiringEvent& ev) {
    if (std::holds_alternative<BraidWord>(ev)) {
        for (int l : std::get<BraidWord>(ev).letters) {
            const int i = std::abs(l) - 1;
            std::swap(at[i], at[i + 1]);
        }
    } else {
        const auto& s = std::get<SingularEvent>(ev);
        std::reverse(at.begin() + (s.lo - 1), at.begin() + s.hi);
    }
}

}  // namespace

int WiringDiagram::singular_count() const {
    int k = 0;
    for (const auto& ev : events)
        if (std::holds_alternative<SingularEvent>(ev)) ++k;
    return k;
}

const SingularEvent& WiringDiagram::singular(int index) const {
    int k = 0;
    for (const auto& ev : events) {
        if (std::holds_alternative<SingularEvent>(ev) && ++k == index)
            return std::get<SingularEvent>(ev);
    }
    throw InputError("singular fiber index " + std::to_string(index) + " out of range");
}

std::vector<std::string> WiringDiagram::labels_after_fiber(int u) const {
    std::vector<std::string> at = initial_labels;
    int k = 0;
    for (const auto& ev : events) {
        if (u == 0) break;
        apply_event(at, ev);
        if (std::holds_alternative<SingularEvent>(ev) && ++k == u) break;
    }
    if (k < u) throw InputError("singular fiber index " + std::to_string(u) + " out of range");
    return at;
}

std::vector<std::string> WiringDiagram::terminal_labels() const {
    std::vector<std::string> at = initial_labels;
    for (const auto& ev : events) apply_event(at, ev);
    return at;
}

std::vector<std::string> WiringDiagram::members_of(int index) const {
    std::vector<std::string> at = initial_labels;
    int k = 0;
    for (const auto& ev : events) {
        if (std::holds_alternative<SingularEvent>(ev) && ++k == index) {
            const auto& s = std::get<SingularEvent>(ev);
            return {at.begin() + (s.lo - 1), at.begin() + s.hi};
        }
        apply_event(at, ev);
    }
    throw InputError("singular fiber index " + std::to_string(index) + " out of range");
}

int WiringDiagram::fiber_of_pair(const std::string& a, const std::string& b) const {
    const int k = singular_count();
    for (int u = 1; u <= k; ++u) {
        const auto m = members_of(u);
        if (std::find(m.begin(), m.end(), a) != m.end() && std::find(m.begin(), m.end(), b) != m.end())
            return u;
    }
    return 0;
}

void WiringDiagram::validate() const {
    if (strands < 1) throw InputError("diagram needs at least one strand");
    if (static_cast<int>(initial_labels.size()) != strands)
        throw InputError("diagram has " + std::to_string(initial_labels.size()) + " labels for " +
                         std::to_string(strands) + " strands");
    std::set<std::string> seen;
    for (const auto& l : initial_labels) {
        if (l.empty() || l.find_first_of(" \t\n,") != std::string::npos)
            throw InputError("bad strand label '" + l + "'");
        if (!seen.insert(l).second) throw InputError("duplicate strand label " + l);
    }
    std::set<std::string> point_ids;
    for (const auto& ev : events) {
        if (std::holds_alternative<BraidWord>(ev)) {
            const auto& w = std::get<BraidWord>(ev);
            if (w.strands != strands) throw InputError("braid event strand count mismatch");
            for (int l : w.letters)
                if (l == 0 || std::abs(l) >= strands)
                    throw InputError("braid letter " + std::to_string(l) + " out of range");
        } else {
            const auto& s = std::get<SingularEvent>(ev);
            if (s.lo < 1 || s.hi > strands || s.hi < s.lo + 1)
                throw InputError("singular range " + std::to_string(s.lo) + ".." + std::to_string(s.hi) +
                                 " is not a contiguous interval of width >= 2");
            if (!s.point_id.empty() && !point_ids.insert(s.point_id).second)
                throw InputError("point " + s.point_id + " appears twice");
        }
    }
}

void normalize_events(WiringDiagram& w) {
    std::vector<WiringEvent> out;
    for (auto& ev : w.events) {
        if (std::holds_alternative<BraidWord>(ev)) {
            auto& b = std::get<BraidWord>(ev);
            if (b.letters.empty()) continue;
            b.strands = w.strands;
            if (!out.empty() && std::holds_alternative<BraidWord>(out.back()))
                std::get<BraidWord>(out.back()).append(b);
            else
                out.push_back(std::move(b));
        } else {
            out.push_back(std::move(ev));
        }
    }
    w.events = std::move(out);
}

namespace {

struct Token {
    std::string text;
    int line, column;
};

std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    int line = 1, col = 1;
    std::string tok;
    int tok_col = 1;
    auto flush_tok = [&]() {
        if (!tok.empty()) {
            current.push_back({tok, line, tok_col});
            tok.clear();
        }
    };
    auto flush_line = [&]() {
        flush_tok();
        if (!current.empty()) lines.push_back(std::move(current));
        current.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '#') {
            flush_tok();
            while (i < text.size() && text[i] != '\n') ++i;
            flush_line();
            ++line;
            col = 1;
            continue;
        }
        if (ch == '\n') {
            flush_line();
            ++line;
            col = 1;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            flush_tok();
            ++col;
            continue;
        }
        if (tok.empty()) tok_col = col;
        tok.push_back(ch);
        ++col;
    }
    flush_line();
    return lines;
}

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

int parse_int(const Token& t, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(t.text, &used);
        if (used != t.text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        fail_at(t.line, t.column, std::string("expected ") + what + ", got '" + t.text + "'");
    }
}

}  // namespace

WiringDiagram parse_wiring(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw InputError("line 1, column 1: empty wiring document");
    const auto& head = lines.front();
    if (head[0].text != "strands") fail_at(head[0].line, head[0].column, "expected 'strands'");
    if (head.size() < 2) fail_at(head[0].line, head[0].column, "missing strand count");
    WiringDiagram w;
    w.strands = parse_int(head[1], "strand count");
    if (w.strands < 1) fail_at(head[1].line, head[1].column, "strand count must be positive");
    if (head.size() < 3 || head[2].text != "labels")
        fail_at(head[1].line, head[1].column, "expected 'labels' after the strand count");
    if (static_cast<int>(head.size()) != 3 + w.strands)
        fail_at(head[2].line, head[2].column,
                "expected " + std::to_string(w.strands) + " labels, got " + std::to_string(head.size() - 3));
    for (int i = 0; i < w.strands; ++i) w.initial_labels.push_back(head[3 + i].text);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks[0].text == "b") {
            if (toks.size() < 2) fail_at(toks[0].line, toks[0].column, "braid event without letters");
            BraidWord word;
            word.strands = w.strands;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const int l = parse_int(toks[i], "signed braid letter");
                if (l == 0 || std::abs(l) >= w.strands)
                    fail_at(toks[i].line, toks[i].column, "braid letter out of range");
                word.letters.push_back(l);
            }
            w.events.emplace_back(std::move(word));
        } else if (toks[0].text == "p") {
            if (toks.size() != 3) fail_at(toks[0].line, toks[0].column, "expected 'p <lo>..<hi> <point-id>'");
            const std::string& range = toks[1].text;
            const auto dots = range.find("..");
            if (dots == std::string::npos)
                fail_at(toks[1].line, toks[1].column, "expected a range '<lo>..<hi>'");
            Token lo_tok{range.substr(0, dots), toks[1].line, toks[1].column};
            Token hi_tok{range.substr(dots + 2), toks[1].line, toks[1].column + static_cast<int>(dots) + 2};
            SingularEvent ev;
            ev.lo = parse_int(lo_tok, "range start");
            ev.hi = parse_int(hi_tok, "range end");
            ev.point_id = toks[2].text;
            if (ev.lo < 1 || ev.hi > w.strands || ev.hi < ev.lo + 1)
                fail_at(toks[1].line, toks[1].column, "singular range must cover >= 2 positions in range");
            w.events.emplace_back(std::move(ev));
        } else {
            fail_at(toks[0].line, toks[0].column, "expected event 'b' or 'p', got '" + toks[0].text + "'");
        }
    }
    normalize_events(w);
    w.validate();
    return w;
}

std::string print_wiring(const WiringDiagram& w) {
    std::ostringstream os;
    os << "strands " << w.strands << " labels";
    for (const auto& l : w.initial_labels) os << " " << l;
    os << "\n";
    for (const auto& ev : w.events) {
        if (std::holds_alternative<BraidWord>(ev)) {
            os << "b";
            for (int l : std::get<BraidWord>(ev).letters) os << " " << (l > 0 ? "+" : "") << l;
            os << "\n";
        } else {
            const auto& s = std::get<SingularEvent>(ev);
            os << "p " << s.lo << ".." << s.hi << " " << s.point_id << "\n";
        }
    }
    return os.str();
}

LabeledBraid beta_uv(const WiringDiagram& w, int u, int v) {
    const int k = w.singular_count();
    if (u < 0 || v < 0 || u > k || v > k || u == v)
        throw InputError("fiber indices " + std::to_string(u) + ", " + std::to_string(v) +
                         " invalid for a diagram with " + std::to_string(k) + " singular fibers");
    if (u > v) {
        LabeledBraid fwd = beta_uv(w, v, u);
        return fwd.inverse();
    }
    LabeledBraid out;
    out.word.strands = w.strands;
    out.entry_labels = w.labels_after_fiber(u);
    int fiber = 0;
    for (const auto& ev : w.events) {
        if (std::holds_alternative<SingularEvent>(ev)) {
            ++fiber;
            if (fiber <= u) continue;
            if (fiber >= v) break;
            const auto& s = std::get<SingularEvent>(ev);
            out.word.append(half_twist(w.strands, s.lo, s.hi - s.lo + 1));
        } else if (fiber >= u) {
            out.word.append(std::get<BraidWord>(ev));
        }
    }
    return out;
}

Combinatorics combinatorics_from_wiring(const WiringDiagram& w, const std::string& infinity_label) {
    w.validate();
    Combinatorics c;
    c.lines.push_back(infinity_label);
    for (const auto& l : w.initial_labels) {
        if (l == infinity_label) throw InputError("infinity line " + infinity_label + " is also a strand");
        c.lines.push_back(l);
    }
    const int n = static_cast<int>(c.lines.size());
    const int k = w.singular_count();
    std::vector<char> met(static_cast<std::size_t>(n) * n, 0);
    for (int u = 1; u <= k; ++u) {
        std::vector<int> m;
        for (const auto& label : w.members_of(u)) m.push_back(c.line_index(label));
        std::sort(m.begin(), m.end());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) met[m[i] * n + m[j]] = 1;
        c.points.push_back(std::move(m));
    }
    // Strands that never meet are parallel: they share their point at
    // infinity with the infinity line.  Group them into classes.
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int i = 1; i < n; ++i) {
        if (cls[i] != -1) continue;
        cls[i] = static_cast<int>(classes.size());
        classes.push_back({i});
        for (int j = i + 1; j < n; ++j) {
            if (cls[j] == -1 && !met[i * n + j]) {
                cls[j] = cls[i];
                classes.back().push_back(j);
            }
        }
    }
    for (auto& cl : classes) {
        std::vector<int> m{0};
        m.insert(m.end(), cl.begin(), cl.end());
        std::sort(m.begin(), m.end());
        c.points.push_back(std::move(m));
    }
    require_valid(c);
    return c;
}

}  // namespace arrangis
