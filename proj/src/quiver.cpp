#include "quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace qvc {

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return int(i);
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return int(i);
    return -1;
}

std::string Path::str(const Quiver& q) const {
    if (is_lazy()) return "e_" + q.vertices[vertex];
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += '*';
        s += q.arrows[arrows[i]].name;
    }
    return s;
}

std::string RelationExpr::str(const Quiver& q) const {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        const Rat& c = terms[i].coeff;
        if (i == 0) {
            if (c == -1)
                s += "-";
            else if (c != 1)
                s += c.get_str() + " ";
        } else {
            s += c < 0 ? " - " : " + ";
            Rat a = abs(c);
            if (a != 1) s += a.get_str() + " ";
        }
        s += terms[i].path.str(q);
    }
    return s;
}

int BoundQuiver::relations_between(int i, int j) const {
    int n = 0;
    for (const auto& r : relations)
        if (r.src == i && r.tgt == j) ++n;
    return n;
}

Path compose_paths(const Quiver& qv, const Path& p, const Path& q) {
    if (q.target(qv) != p.source(qv))
        throw InputError("cannot compose " + p.str(qv) + " after " + q.str(qv) + ": path " + q.str(qv) +
                         " ends at vertex " + qv.vertices[q.target(qv)] + " but " + p.str(qv) +
                         " starts at vertex " + qv.vertices[p.source(qv)]);
    if (p.is_lazy()) return q;
    if (q.is_lazy()) return p;
    Path r = p;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    r.vertex = q.source(qv);
    return r;
}

std::vector<Path> enumerate_paths(const Quiver& q) {
    std::vector<Path> all;
    for (int v = 0; v < q.num_vertices(); ++v) all.push_back(Path::lazy(v));
    // Grow paths by prepending arrows at the target end (functional order).
    std::vector<Path> frontier;
    for (int a = 0; a < q.num_arrows(); ++a) frontier.push_back(Path{q.arrows[a].src, {a}});
    while (!frontier.empty()) {
        all.insert(all.end(), frontier.begin(), frontier.end());
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (int a = 0; a < q.num_arrows(); ++a)
                if (q.arrows[a].src == p.target(q)) {
                    Path e = p;
                    e.arrows.insert(e.arrows.begin(), a);
                    next.push_back(e);
                }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) { return PathLess{}(a, b); });
    return all;
}

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    int col() const { return int(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }
};

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_word(Cursor& c) {
    c.skip_ws();
    size_t start = c.pos;
    while (c.pos < c.s.size() && is_word_char(c.s[c.pos])) ++c.pos;
    if (c.pos == start) c.fail("expected identifier");
    return c.s.substr(start, c.pos - start);
}

// path := arrow ('*' arrow)*
Path read_path(Cursor& c, const Quiver& qv) {
    std::vector<std::string> names;
    names.push_back(read_word(c));
    while (true) {
        c.skip_ws();
        if (c.pos < c.s.size() && c.s[c.pos] == '*') {
            ++c.pos;
            names.push_back(read_word(c));
        } else
            break;
    }
    Path p;
    for (const auto& n : names) {
        int a = qv.arrow_index(n);
        if (a < 0) c.fail("unknown arrow '" + n + "' in relation");
        p.arrows.push_back(a);
    }
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (qv.arrows[p.arrows[i]].src != qv.arrows[p.arrows[i + 1]].tgt)
            c.fail("arrows '" + qv.arrows[p.arrows[i + 1]].name + "' and '" + qv.arrows[p.arrows[i]].name +
                   "' do not compose");
    p.vertex = qv.arrows[p.arrows.back()].src;
    return p;
}

// coefficient := integer ('/' integer)?   (sign handled by the caller)
Rat read_coeff(Cursor& c) {
    size_t start = c.pos;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
    std::string num = c.s.substr(start, c.pos - start);
    std::string den = "1";
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '/') {
        ++c.pos;
        c.skip_ws();
        size_t dstart = c.pos;
        while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
        den = c.s.substr(dstart, c.pos - dstart);
        if (den.empty()) c.fail("expected denominator after '/'");
        if (Int(den) == 0) c.fail("zero denominator in coefficient");
    }
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
}

// relation := ('-')? term (('+'|'-') term)* ; term := (coeff '*'?)? path
RelationExpr read_relation(Cursor& c, const Quiver& qv) {
    RelationExpr rel;
    bool first = true;
    while (true) {
        c.skip_ws();
        Rat sign = 1;
        if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
            if (first && c.s[c.pos] == '+') c.fail("unexpected '+' at start of relation");
            sign = c.s[c.pos] == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            break;
        }
        c.skip_ws();
        Rat coeff = sign;
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            coeff = sign * read_coeff(c);
            c.skip_ws();
            if (c.pos < c.s.size() && c.s[c.pos] == '*') {
                // A '*' after the coefficient is optional separator syntax,
                // but only when followed by an arrow name.
                size_t save = c.pos;
                ++c.pos;
                c.skip_ws();
                if (c.pos >= c.s.size() || !is_word_char(c.s[c.pos])) c.pos = save;
            }
        }
        if (coeff == 0) c.fail("zero coefficient in relation term");
        Path p = read_path(c, qv);
        rel.terms.push_back({coeff, p});
        first = false;
    }
    if (!c.done()) c.fail("trailing characters after relation");
    // Merge duplicate monomials.
    std::map<Path, Rat, PathLess> merged;
    for (const auto& t : rel.terms) merged[t.path] += t.coeff;
    rel.terms.clear();
    for (const auto& [p, coeff] : merged)
        if (coeff != 0) rel.terms.push_back({coeff, p});
    if (rel.terms.empty()) c.fail("relation has no nonzero term");
    rel.src = rel.terms[0].path.source(qv);
    rel.tgt = rel.terms[0].path.target(qv);
    for (const auto& t : rel.terms) {
        if (t.path.source(qv) != rel.src || t.path.target(qv) != rel.tgt)
            c.fail("relation terms are not parallel: '" + t.path.str(qv) + "' runs " +
                   qv.vertices[t.path.source(qv)] + " -> " + qv.vertices[t.path.target(qv)] + " but '" +
                   rel.terms[0].path.str(qv) + "' runs " + qv.vertices[rel.src] + " -> " + qv.vertices[rel.tgt]);
        if (t.path.length() < 2)
            c.fail("relation term '" + t.path.str(qv) + "' has length " + std::to_string(t.path.length()) +
                   "; relations must lie in paths of length >= 2");
    }
    return rel;
}

std::vector<int> topological_order(const Quiver& q, int err_line) {
    int n = q.num_vertices();
    std::vector<int> indeg(n, 0);
    for (const auto& a : q.arrows) ++indeg[a.tgt];
    std::deque<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::vector<int> order;
    while (!ready.empty()) {
        // Smallest declared index first, for a stable order.
        auto it = std::min_element(ready.begin(), ready.end());
        int v = *it;
        ready.erase(it);
        order.push_back(v);
        for (const auto& a : q.arrows)
            if (a.src == v && --indeg[a.tgt] == 0) ready.push_back(a.tgt);
    }
    if (int(order.size()) != n) throw ParseError("quiver has an oriented cycle", err_line, 1);
    return order;
}

}  // namespace

BoundQuiver parse_quiver_spec(const std::string& text) {
    BoundQuiver bq;
    enum class Section { None, Arrows, Relations };
    Section section = Section::None;
    bool saw_vertices = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int last_line = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        last_line = lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        Cursor c{line, 0, lineno};
        if (c.done()) continue;

        if (line.compare(c.pos, 6, "quiver") == 0 && (c.pos + 6 == line.size() || !is_word_char(line[c.pos + 6]))) {
            c.pos += 6;
            if (!bq.name.empty()) c.fail("duplicate 'quiver' header");
            bq.name = read_word(c);
            if (!c.done()) c.fail("trailing characters after quiver name");
            continue;
        }
        if (line.compare(c.pos, 9, "vertices:") == 0) {
            c.pos += 9;
            if (saw_vertices) c.fail("duplicate 'vertices:' section");
            saw_vertices = true;
            while (!c.done()) {
                std::string v = read_word(c);
                if (bq.quiver.vertex_index(v) >= 0) c.fail("duplicate vertex '" + v + "'");
                bq.quiver.vertices.push_back(v);
            }
            continue;
        }
        if (line.compare(c.pos, 7, "arrows:") == 0) {
            c.pos += 7;
            if (!c.done()) c.fail("arrows are declared one per line below 'arrows:'");
            section = Section::Arrows;
            continue;
        }
        if (line.compare(c.pos, 10, "relations:") == 0) {
            c.pos += 10;
            if (!c.done()) c.fail("relations are declared one per line below 'relations:'");
            section = Section::Relations;
            continue;
        }

        if (section == Section::Arrows) {
            // name: src -> tgt
            std::string name = read_word(c);
            c.skip_ws();
            if (c.pos >= line.size() || line[c.pos] != ':') c.fail("expected ':' after arrow name");
            ++c.pos;
            std::string src = read_word(c);
            c.skip_ws();
            if (line.compare(c.pos, 2, "->") != 0) c.fail("expected '->' between arrow endpoints");
            c.pos += 2;
            std::string tgt = read_word(c);
            if (!c.done()) c.fail("trailing characters after arrow declaration");
            if (bq.quiver.arrow_index(name) >= 0) c.fail("duplicate arrow '" + name + "'");
            int si = bq.quiver.vertex_index(src);
            int ti = bq.quiver.vertex_index(tgt);
            if (si < 0) c.fail("unknown vertex '" + src + "'");
            if (ti < 0) c.fail("unknown vertex '" + tgt + "'");
            bq.quiver.arrows.push_back({name, si, ti});
            continue;
        }
        if (section == Section::Relations) {
            bq.relations.push_back(read_relation(c, bq.quiver));
            continue;
        }
        c.fail("unexpected content outside any section");
    }

    if (bq.quiver.vertices.empty()) throw ParseError("no vertices declared", last_line ? last_line : 1, 1);
    if (bq.name.empty()) bq.name = "unnamed";
    bq.topo_order = topological_order(bq.quiver, last_line ? last_line : 1);
    return bq;
}

}  // namespace qvc
