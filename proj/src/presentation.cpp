#include "aq/presentation.hpp"

#include "aq/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace aq {

void Presentation::validate() const
{
    Fp fp(p);
    for (auto& [name, w] : vars) {
        if (name.empty())
            domain_error("variable with empty name");
        if (w < 1)
            domain_error("variable '" + name + "' must have positive weight");
    }
    for (auto& r : rels) {
        if (r.is_zero())
            domain_error("zero relation");
        for (auto& t : r.terms) {
            if (t.first.is_unit())
                domain_error("relation has nonzero constant term");
            if (t.first.weight != r.terms[0].first.weight)
                domain_error("relation is not weight-homogeneous");
            for (auto& f : t.first.factors)
                if (f.first >= vars.size())
                    domain_error("relation references unknown variable");
            if (t.second == 0 || t.second >= p)
                domain_error("relation coefficient not reduced mod p");
        }
    }
}

int Presentation::max_var_weight() const
{
    int w = 1;
    for (auto& v : vars)
        w = std::max(w, v.second);
    return w;
}

int Presentation::max_rel_weight() const
{
    int w = 0;
    for (auto& r : rels)
        w = std::max(w, r.terms[0].first.weight);
    return w;
}

std::string Presentation::poly_str(const Poly& q) const
{
    if (q.is_zero())
        return "0";
    std::string s;
    for (auto& t : q.terms) {
        if (!s.empty())
            s += "+";
        if (t.second != 1 || t.first.is_unit())
            s += std::to_string(t.second) + (t.first.is_unit() ? "" : "*");
        bool first = true;
        for (auto& f : t.first.factors) {
            if (!first)
                s += "*";
            first = false;
            s += vars[f.first].first;
            if (f.second > 1)
                s += "^" + std::to_string(f.second);
        }
    }
    return s;
}

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;
    int line = 1, col = 1;

    [[noreturn]] void fail(const std::string& msg) const
    {
        domain_error("parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + msg);
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    char get()
    {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else
            ++col;
        return c;
    }
    void skip_space_in_line()
    {
        while (!done() && (peek() == ' ' || peek() == '\t'))
            get();
    }
};

std::string read_ident(Cursor& c)
{
    std::string s;
    while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
        s += c.get();
    return s;
}

long read_int(Cursor& c)
{
    c.skip_space_in_line();
    bool neg = false;
    if (c.peek() == '-') {
        neg = true;
        c.get();
    }
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        c.fail("expected an integer");
    long v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        v = v * 10 + (c.get() - '0');
    return neg ? -v : v;
}

} // namespace

Presentation parse_presentation(const std::string& text)
{
    Presentation P;
    bool have_p = false;
    std::map<std::string, uint32_t> var_id;

    /* split into statements on newlines and ';', strip comments */
    Cursor c{text};
    auto statements = [&]() {
        std::vector<std::tuple<std::string, int, int>> out; /* text, line, col */
        std::string cur;
        int sl = 1, sc = 1;
        bool fresh = true;
        while (!c.done()) {
            char ch = c.peek();
            if (ch == '#') {
                while (!c.done() && c.peek() != '\n')
                    c.get();
                continue;
            }
            if (ch == '\n' || ch == ';') {
                c.get();
                if (!cur.empty())
                    out.emplace_back(cur, sl, sc);
                cur.clear();
                fresh = true;
                continue;
            }
            if (fresh && !(ch == ' ' || ch == '\t')) {
                sl = c.line;
                sc = c.col;
                fresh = false;
            }
            cur += c.get();
        }
        if (!cur.empty())
            out.emplace_back(cur, sl, sc);
        return out;
    }();

    auto parse_poly = [&](const std::string& s, int line, int col) -> Poly {
        Cursor pc{s};
        pc.line = line;
        pc.col = col;
        Poly out;
        int sign = 1;
        pc.skip_space_in_line();
        if (pc.done())
            pc.fail("empty polynomial");
        while (true) {
            /* one term: [coeff] [* name [^exp]]... */
            long coeff = 1;
            Monomial mono;
            bool any = false;
            pc.skip_space_in_line();
            if (std::isdigit(static_cast<unsigned char>(pc.peek()))) {
                coeff = read_int(pc);
                any = true;
                pc.skip_space_in_line();
                if (pc.peek() == '*')
                    pc.get();
            }
            while (true) {
                pc.skip_space_in_line();
                if (!std::isalpha(static_cast<unsigned char>(pc.peek())) && pc.peek() != '_')
                    break;
                std::string name = read_ident(pc);
                auto it = var_id.find(name);
                if (it == var_id.end())
                    pc.fail("unknown variable '" + name + "'");
                long e = 1;
                pc.skip_space_in_line();
                if (pc.peek() == '^') {
                    pc.get();
                    e = read_int(pc);
                    if (e < 1)
                        pc.fail("exponent must be positive");
                }
                mono = mono.times([&] {
                    Monomial f;
                    f.factors = {{it->second, static_cast<uint16_t>(e)}};
                    f.weight = static_cast<int>(e) * P.vars[it->second].second;
                    return f;
                }());
                any = true;
                pc.skip_space_in_line();
                if (pc.peek() == '*') {
                    pc.get();
                    continue;
                }
                break;
            }
            if (!any)
                pc.fail("expected a term");
            Fp fp(P.p);
            uint32_t cc = fp.reduce(sign * coeff);
            if (cc)
                out.terms.emplace_back(std::move(mono), cc);
            pc.skip_space_in_line();
            if (pc.done())
                break;
            if (pc.peek() == '+') {
                pc.get();
                sign = 1;
            } else if (pc.peek() == '-') {
                pc.get();
                sign = -1;
            } else
                pc.fail(std::string("unexpected character '") + pc.peek() + "'");
        }
        poly_normalize(out, Fp(P.p));
        return out;
    };

    for (auto& [stmt, line, col] : statements) {
        Cursor sc{stmt};
        sc.line = line;
        sc.col = col;
        sc.skip_space_in_line();
        std::string head = read_ident(sc);
        sc.skip_space_in_line();
        if (head == "p") {
            if (sc.peek() != '=')
                sc.fail("expected '=' after p");
            sc.get();
            long v = read_int(sc);
            if (v < 2 || v >= (1 << 16) || !is_prime_u32(static_cast<uint32_t>(v)))
                sc.fail("p must be prime");
            P.p = static_cast<uint32_t>(v);
            have_p = true;
        } else if (head == "vars") {
            if (!have_p)
                sc.fail("p must be declared before vars");
            if (sc.peek() != ':')
                sc.fail("expected ':' after vars");
            sc.get();
            sc.skip_space_in_line();
            while (!sc.done()) {
                std::string name = read_ident(sc);
                if (name.empty())
                    sc.fail("expected a variable name");
                sc.skip_space_in_line();
                if (sc.peek() != ':')
                    sc.fail("expected ':weight' after variable name");
                sc.get();
                long w = read_int(sc);
                if (w < 1)
                    sc.fail("variable weight must be >= 1");
                if (var_id.count(name))
                    sc.fail("duplicate variable '" + name + "'");
                var_id[name] = static_cast<uint32_t>(P.vars.size());
                P.vars.emplace_back(name, static_cast<int>(w));
                sc.skip_space_in_line();
                if (sc.peek() == ',') {
                    sc.get();
                    sc.skip_space_in_line();
                    continue;
                }
                break;
            }
        } else if (head == "rels") {
            if (!have_p)
                sc.fail("p must be declared before rels");
            if (sc.peek() != ':')
                sc.fail("expected ':' after rels");
            sc.get();
            /* split on top-level commas */
            std::string rest = stmt.substr(sc.pos);
            size_t start = 0;
            for (size_t i = 0; i <= rest.size(); ++i) {
                if (i == rest.size() || rest[i] == ',') {
                    std::string piece = rest.substr(start, i - start);
                    if (piece.find_first_not_of(" \t") != std::string::npos)
                        P.rels.push_back(parse_poly(piece, line, col));
                    start = i + 1;
                }
            }
        } else
            sc.fail("unknown statement '" + head + "'");
    }
    if (!have_p)
        domain_error("parse error: missing 'p=<prime>'");
    P.validate();
    return P;
}

std::vector<Monomial> var_monomials(const Presentation& P, int w)
{
    std::vector<Monomial> out;
    std::vector<std::pair<uint32_t, uint16_t>> cur;
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (rem == 0) {
            Monomial m;
            m.factors = cur;
            m.weight = w;
            out.push_back(std::move(m));
            return;
        }
        if (i == P.vars.size())
            return;
        self(self, i + 1, rem);
        int vw = P.vars[i].second;
        for (int e = 1; e * vw <= rem; ++e) {
            cur.emplace_back(static_cast<uint32_t>(i), static_cast<uint16_t>(e));
            self(self, i + 1, rem - e * vw);
            cur.pop_back();
        }
    };
    rec(rec, 0, w);
    std::sort(out.begin(), out.end());
    return out;
}

GradedQuotient::GradedQuotient(const Presentation& P, int W) : P_(P), W_(W), fp_(P.p)
{
    monos_.resize(W + 1);
    echelon_.resize(W + 1);
    leads_.resize(W + 1);
    basis_.resize(W + 1);
    for (int w = 0; w <= W; ++w)
        monos_[w] = var_monomials(P, w);

    auto index_of = [&](int w, const Monomial& m) {
        auto it = std::lower_bound(monos_[w].begin(), monos_[w].end(), m);
        return static_cast<size_t>(it - monos_[w].begin());
    };

    for (int w = 0; w <= W; ++w) {
        std::vector<bool> is_lead(monos_[w].size(), false);
        RowSpan span(P.p, monos_[w].size());
        for (auto& r : P.rels) {
            int rw = r.terms[0].first.weight;
            if (rw > w)
                continue;
            for (auto& m : var_monomials(P, w - rw)) {
                Poly prod = poly_mul(Poly::from_monomial(m), r, fp_, W_);
                std::vector<uint32_t> v(monos_[w].size(), 0);
                for (auto& t : prod.terms)
                    v[index_of(w, t.first)] = t.second;
                auto res = span.residue(v);
                size_t lead = monos_[w].size();
                for (size_t j = 0; j < res.size(); ++j)
                    if (res[j]) {
                        lead = j;
                        break;
                    }
                if (lead != monos_[w].size()) {
                    span.add(v);
                    is_lead[lead] = true;
                    echelon_[w].push_back(std::move(res));
                    leads_[w].push_back(lead);
                }
            }
        }
        for (size_t j = 0; j < monos_[w].size(); ++j)
            if (!is_lead[j])
                basis_[w].push_back(j);
    }
}

std::vector<uint32_t> GradedQuotient::reduce_coords(const Poly& x, int w) const
{
    std::vector<uint32_t> v(monos_[w].size(), 0);
    for (auto& t : x.terms) {
        if (t.first.weight != w)
            invariant_error("reduce_coords: non-homogeneous element");
        auto it = std::lower_bound(monos_[w].begin(), monos_[w].end(), t.first);
        if (it == monos_[w].end() || !(*it == t.first))
            invariant_error("reduce_coords: monomial outside range");
        v[it - monos_[w].begin()] = t.second;
    }
    /* reduce against the echelon */
    for (size_t i = 0; i < echelon_[w].size(); ++i) {
        uint32_t f = v[leads_[w][i]];
        if (!f)
            continue;
        uint32_t piv = echelon_[w][i][leads_[w][i]];
        uint32_t c = fp_.mul(f, fp_.inv(piv));
        for (size_t j = 0; j < v.size(); ++j)
            v[j] = fp_.sub(v[j], fp_.mul(c, echelon_[w][i][j]));
    }
    std::vector<uint32_t> out(basis_[w].size());
    for (size_t i = 0; i < basis_[w].size(); ++i)
        out[i] = v[basis_[w][i]];
    return out;
}

bool GradedQuotient::in_ideal(const Poly& x, int w) const
{
    auto r = reduce_coords(x, w);
    return std::all_of(r.begin(), r.end(), [](uint32_t v) { return v == 0; });
}

} // namespace aq
