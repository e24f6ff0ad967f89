#include "sullivan/io.hpp"

#include <json.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <vector>

namespace sullivan {

namespace {

struct Token {
    enum Type { Ident, Number, Plus, Minus, Star, Slash, Caret, Equals, End } type;
    std::string text;
    int col;
};

struct LineLexer {
    std::string_view line;
    int lineno;
    size_t pos = 0;

    Token next() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        int col = static_cast<int>(pos) + 1;
        if (pos >= line.size() || line[pos] == '#') return {Token::End, "", col};
        char c = line[pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < line.size() &&
                   (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
                ++pos;
            return {Token::Ident, std::string(line.substr(start, pos - start)), col};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
            return {Token::Number, std::string(line.substr(start, pos - start)), col};
        }
        ++pos;
        switch (c) {
            case '+': return {Token::Plus, "+", col};
            case '-': return {Token::Minus, "-", col};
            case '*': return {Token::Star, "*", col};
            case '/': return {Token::Slash, "/", col};
            case '^': return {Token::Caret, "^", col};
            case '=': return {Token::Equals, "=", col};
        }
        throw ParseError(lineno, col, std::string("unexpected character '") + c + "'");
    }
};

struct ExprParser {
    LineLexer& lex;
    const Algebra& alg;
    Token tok;

    explicit ExprParser(LineLexer& l, const Algebra& a) : lex(l), alg(a) { tok = lex.next(); }

    void advance() { tok = lex.next(); }

    Int parse_integer() {
        if (tok.type != Token::Number)
            throw ParseError(lex.lineno, tok.col, "expected an integer");
        Int n(tok.text);
        advance();
        return n;
    }

    // factor := name ('^' int)?
    std::pair<int, int> parse_factor() {
        if (tok.type != Token::Ident)
            throw ParseError(lex.lineno, tok.col, "expected a generator name");
        int idx = alg.find(tok.text);
        if (idx < 0)
            throw ParseError(lex.lineno, tok.col, "unknown generator " + tok.text);
        advance();
        int exp = 1;
        if (tok.type == Token::Caret) {
            advance();
            Int e = parse_integer();
            if (e < 0 || e > 1'000'000)
                throw ParseError(lex.lineno, tok.col, "exponent out of range");
            exp = static_cast<int>(e.get_si());
        }
        return {idx, exp};
    }

    // term := (int ('/' int)? '*')? factor ('*' factor)*
    //       | int ('/' int)?            -- rejected: constants are not terms
    Element parse_term() {
        Rat coeff(1);
        if (tok.type == Token::Number) {
            Int num = parse_integer();
            Int den(1);
            if (tok.type == Token::Slash) {
                advance();
                den = parse_integer();
                if (den == 0) throw ParseError(lex.lineno, tok.col, "zero denominator");
            }
            coeff = make_rat(num, den);
            if (tok.type != Token::Star)
                throw ParseError(lex.lineno, tok.col, "expected '*' after coefficient");
            advance();
        }
        std::vector<std::pair<int, int>> factors;
        factors.push_back(parse_factor());
        while (tok.type == Token::Star) {
            advance();
            factors.push_back(parse_factor());
        }
        SignedMonomial nf = normal_form(alg, factors);
        if (nf.sign == 0) return Element::zero(alg);
        return Element::term(alg, nf.mono, coeff * nf.sign);
    }

    // expr := '0' | ('-')? term (('+'|'-') term)*
    Element parse_expr() {
        if (tok.type == Token::Number && tok.text == "0") {
            advance();
            if (tok.type != Token::End)
                throw ParseError(lex.lineno, tok.col, "unexpected input after 0");
            return Element::zero(alg);
        }
        Element acc = Element::zero(alg);
        bool negate = false;
        if (tok.type == Token::Minus) {
            negate = true;
            advance();
        } else if (tok.type == Token::Plus) {
            advance();
        }
        acc = add_scaled(acc, Rat(negate ? -1 : 1), parse_term());
        while (tok.type == Token::Plus || tok.type == Token::Minus) {
            bool neg = tok.type == Token::Minus;
            advance();
            acc = add_scaled(acc, Rat(neg ? -1 : 1), parse_term());
        }
        if (tok.type != Token::End)
            throw ParseError(lex.lineno, tok.col, "unexpected input after expression");
        return acc;
    }
};

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true;
}

}  // namespace

Model parse_model(std::string_view text, std::string name) {
    auto lines = split_lines(text);

    // First pass: generator declarations fix the algebra.
    std::vector<Generator> gens;
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string_view raw = lines[li];
        if (blank_or_comment(raw)) continue;
        LineLexer lex{raw, static_cast<int>(li) + 1};
        Token head = lex.next();
        if (head.type != Token::Ident)
            throw ParseError(lex.lineno, head.col, "expected 'generator' or 'd'");
        if (head.text == "generator") {
            Token nm = lex.next();
            if (nm.type != Token::Ident)
                throw ParseError(lex.lineno, nm.col, "expected a generator name");
            Token deg = lex.next();
            if (deg.type != Token::Number)
                throw ParseError(lex.lineno, deg.col, "expected a degree");
            Token end = lex.next();
            if (end.type != Token::End)
                throw ParseError(lex.lineno, end.col, "unexpected input after declaration");
            for (const auto& g : gens)
                if (g.name == nm.text)
                    throw ParseError(lex.lineno, nm.col, "generator " + nm.text + " declared twice");
            int d = std::stoi(deg.text);
            if (d < 1) throw ParseError(lex.lineno, deg.col, "degree must be >= 1");
            gens.push_back({nm.text, static_cast<int>(gens.size()), d});
        } else if (head.text != "d") {
            throw ParseError(lex.lineno, head.col, "expected 'generator' or 'd'");
        }
    }
    Algebra alg(std::move(gens));

    // Second pass: differentials.
    std::vector<Element> diffs(alg.size(), Element::zero(alg));
    std::vector<bool> assigned(alg.size(), false);
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string_view raw = lines[li];
        if (blank_or_comment(raw)) continue;
        LineLexer lex{raw, static_cast<int>(li) + 1};
        Token head = lex.next();
        if (head.text != "d") continue;
        Token nm = lex.next();
        if (nm.type != Token::Ident)
            throw ParseError(lex.lineno, nm.col, "expected a generator name");
        int idx = alg.find(nm.text);
        if (idx < 0) throw ParseError(lex.lineno, nm.col, "unknown generator " + nm.text);
        if (assigned[static_cast<size_t>(idx)])
            throw ParseError(lex.lineno, nm.col, "differential of " + nm.text + " declared twice");
        Token eq = lex.next();
        if (eq.type != Token::Equals)
            throw ParseError(lex.lineno, eq.col, "expected '='");
        ExprParser ep(lex, alg);
        diffs[static_cast<size_t>(idx)] = ep.parse_expr();
        assigned[static_cast<size_t>(idx)] = true;
    }
    return Model(std::move(alg), std::move(diffs), std::move(name));
}

std::string serialize_element(const Element& e) {
    if (e.is_zero()) return "0";
    const Algebra& alg = e.algebra();
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : e.terms()) {
        Rat a = abs(coeff);
        bool neg = coeff < 0;
        std::string monos;
        for (size_t j = 0; j < alg.size(); ++j) {
            if (mono.exps[j] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += alg.gen(j).name;
            if (mono.exps[j] > 1) monos += "^" + std::to_string(mono.exps[j]);
        }
        std::string body;
        if (monos.empty()) {
            body = to_string(a);
        } else if (a == 1) {
            body = monos;
        } else {
            body = to_string(a) + "*" + monos;
        }
        if (first) {
            out += neg ? "- " + body : body;
            first = false;
        } else {
            out += neg ? " - " + body : " + " + body;
        }
    }
    return out;
}

std::string serialize_model(const Model& m) {
    std::string out;
    const Algebra& alg = m.algebra();
    for (const auto& g : alg.generators())
        out += "generator " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const auto& g : alg.generators())
        out += "d " + g.name + " = " + serialize_element(m.differential(static_cast<size_t>(g.index))) + "\n";
    return out;
}

namespace {

nlohmann::ordered_json betti_json(const CohomologyReport& r) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : r.slices) arr.push_back(s.betti);
    return arr;
}

}  // namespace

std::string emit_report_machine(const HilaliVerdict& v, const CohomologyReport& r) {
    nlohmann::ordered_json j;
    j["model_name"] = v.model_name;
    j["dim_v"] = v.dim_v;
    j["chi_pi"] = v.invariants.chi_pi;
    j["betti"] = betti_json(r);
    j["chi_c"] = r.chi_c;
    j["fd_predicted"] = r.fd_predicted;
    j["fd_observed"] = r.fd_observed;
    j["total_dim"] = r.total_dim;
    j["classification"] = {
        {"minimal", v.classification.minimal},
        {"pure", v.classification.pure},
        {"hyperelliptic", v.classification.hyperelliptic},
        {"odd_generated", v.classification.odd_generated},
    };
    j["hilali_holds"] = v.holds;
    j["margin"] = v.margin;
    nlohmann::ordered_json th = nlohmann::ordered_json::object();
    for (const auto& t : v.theorems) th[t.tag] = to_string(t.verdict);
    j["theorems"] = th;
    j["ellipticity_evidence"] = v.ellipticity_evidence;
    return j.dump(2) + "\n";
}

std::string emit_report_human(const HilaliVerdict& v, const CohomologyReport& r) {
    std::ostringstream os;
    os << "model: " << (v.model_name.empty() ? "(unnamed)" : v.model_name) << "\n";
    os << std::left;
    os << std::setw(22) << "dim V" << v.dim_v << "\n";
    os << std::setw(22) << "dim H (window)" << v.dim_h << "\n";
    os << std::setw(22) << "chi_pi" << v.invariants.chi_pi << "\n";
    os << std::setw(22) << "chi_c" << r.chi_c << "\n";
    os << std::setw(22) << "fd predicted" << r.fd_predicted << "\n";
    os << std::setw(22) << "fd observed" << r.fd_observed << "\n";
    os << std::setw(22) << "window" << r.window << "\n";
    os << std::setw(22) << "poincare duality" << (r.duality_ok ? "yes" : "no") << "\n";
    os << std::setw(22) << "elliptic evidence" << (v.ellipticity_evidence ? "yes" : "no") << "\n";
    os << std::setw(22) << "minimal" << (v.classification.minimal ? "yes" : "no") << "\n";
    os << std::setw(22) << "pure" << (v.classification.pure ? "yes" : "no") << "\n";
    os << std::setw(22) << "hyperelliptic" << (v.classification.hyperelliptic ? "yes" : "no") << "\n";
    os << std::setw(22) << "odd generated" << (v.classification.odd_generated ? "yes" : "no") << "\n";
    os << "betti:";
    for (const auto& s : r.slices) os << " " << s.betti;
    os << "\n";
    os << "theorems:\n";
    for (const auto& t : v.theorems) {
        os << "  " << std::setw(26) << t.tag << std::setw(9) << to_string(t.verdict)
           << (t.note.empty() ? "" : t.note) << "\n";
    }
    os << "hilali: dim V = " << v.dim_v << (v.holds ? " <= " : " > ") << "dim H = " << v.dim_h
       << (v.holds ? "  HOLDS" : "  FAILS") << " (margin " << v.margin << ")\n";
    return os.str();
}

std::string emit_cohomology_machine(const Model& m, const CohomologyReport& r) {
    nlohmann::ordered_json j;
    j["model_name"] = m.name();
    j["window"] = r.window;
    j["betti"] = betti_json(r);
    j["chi_c"] = r.chi_c;
    j["fd_predicted"] = r.fd_predicted;
    j["fd_observed"] = r.fd_observed;
    j["total_dim"] = r.total_dim;
    j["even_dim"] = r.even_dim;
    j["odd_dim"] = r.odd_dim;
    j["duality_ok"] = r.duality_ok;
    j["ellipticity_evidence"] = r.ellipticity_evidence;
    nlohmann::ordered_json reps = nlohmann::ordered_json::array();
    for (const auto& s : r.slices) {
        nlohmann::ordered_json degree_reps = nlohmann::ordered_json::array();
        for (const auto& rep : s.representatives) degree_reps.push_back(serialize_element(rep));
        reps.push_back(degree_reps);
    }
    j["representatives"] = reps;
    return j.dump(2) + "\n";
}

std::string emit_cohomology_human(const Model& m, const CohomologyReport& r) {
    std::ostringstream os;
    os << "model: " << (m.name().empty() ? "(unnamed)" : m.name()) << "\n";
    os << "deg  betti  cocycles  coboundaries  representatives\n";
    for (const auto& s : r.slices) {
        os << std::left << std::setw(5) << s.degree << std::setw(7) << s.betti << std::setw(10)
           << s.dim_cocycles << std::setw(14) << s.dim_coboundaries;
        for (size_t i = 0; i < s.representatives.size(); ++i) {
            if (i) os << " ; ";
            os << "[" << serialize_element(s.representatives[i]) << "]";
        }
        os << "\n";
    }
    os << "total dim " << r.total_dim << ", chi_c " << r.chi_c << ", fd observed " << r.fd_observed
       << " (predicted " << r.fd_predicted << ")"
       << ", duality " << (r.duality_ok ? "yes" : "no")
       << ", elliptic evidence " << (r.ellipticity_evidence ? "yes" : "no") << "\n";
    return os.str();
}

std::string format_enum_row(const DegreeSequence& s) {
    auto tuple = [](const std::vector<int>& v) {
        std::string out = "(";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
        return out + ")";
    };
    return "fd=" + std::to_string(s.fd) + ": " + tuple(s.even_degrees) + " | " +
           tuple(s.odd_degrees);
}

std::vector<DegreeSequence> parse_enum_rows(std::string_view text) {
    std::vector<DegreeSequence> rows;
    auto lines = split_lines(text);
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string_view line = lines[li];
        if (blank_or_comment(line)) continue;
        std::string s(line);
        const int lineno = static_cast<int>(li) + 1;
        size_t pos = 0;
        auto expect = [&](std::string_view prefix) {
            while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
            if (s.compare(pos, prefix.size(), prefix) != 0)
                throw ParseError(lineno, static_cast<int>(pos) + 1,
                                 "expected '" + std::string(prefix) + "'");
            pos += prefix.size();
        };
        auto read_int = [&]() {
            while (pos < s.size() && s[pos] == ' ') ++pos;
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos)
                throw ParseError(lineno, static_cast<int>(pos) + 1, "expected an integer");
            return std::stoi(s.substr(start, pos - start));
        };
        auto read_tuple = [&]() {
            std::vector<int> v;
            expect("(");
            while (pos < s.size() && s[pos] == ' ') ++pos;
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                return v;
            }
            while (true) {
                v.push_back(read_int());
                while (pos < s.size() && s[pos] == ' ') ++pos;
                if (pos < s.size() && s[pos] == ',') {
                    ++pos;
                    continue;
                }
                expect(")");
                break;
            }
            return v;
        };
        DegreeSequence seq;
        expect("fd=");
        seq.fd = read_int();
        expect(":");
        seq.even_degrees = read_tuple();
        expect("|");
        seq.odd_degrees = read_tuple();
        rows.push_back(std::move(seq));
    }
    return rows;
}

}  // namespace sullivan
