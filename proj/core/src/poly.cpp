#include "vsb/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace vsb {

std::uint64_t total_degree(const ExponentVec& e) {
    std::uint64_t s = 0;
    for (auto v : e) s += v;
    return s;
}

int nonzero_count(const ExponentVec& e) {
    int c = 0;
    for (auto v : e)
        if (v != 0) ++c;
    return c;
}

bool GrlexDescLess::operator()(const ExponentVec& a, const ExponentVec& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b; // lexicographically larger vector prints first
}

SparsePoly::SparsePoly(FieldPtr field, int nvars)
    : field_(std::move(field)), nvars_(nvars) {
    if (!field_) throw BadParamsError("null field");
    if (nvars_ < 1) throw BadParamsError("polynomial needs at least one variable");
}

bool SparsePoly::is_constant() const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) > 0) return false;
    return true;
}

std::uint64_t SparsePoly::degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void SparsePoly::add_term(const ExponentVec& exps, const FieldElement& coeff) {
    if (exps.size() != static_cast<std::size_t>(nvars_))
        throw BadParamsError("exponent vector length mismatch");
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    FieldElement s = it->second + coeff;
    if (s.is_zero())
        terms_.erase(it);
    else
        it->second = s;
}

FieldElement SparsePoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
        throw BadParamsError("evaluation point has wrong arity");
    FieldElement acc = field_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElement t = c;
        for (int i = 0; i < nvars_; ++i) {
            auto ei = e[static_cast<std::size_t>(i)];
            if (ei == 0) continue;
            t = t * field_->pow(point[static_cast<std::size_t>(i)], ei);
        }
        acc = acc + t;
    }
    return acc;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || !field_->compatible(*o.field_))
        throw FieldMismatchError("polynomial addition across different rings");
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || !field_->compatible(*o.field_))
        throw FieldMismatchError("polynomial multiplication across different rings");
    SparsePoly r(field_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExponentVec e(e1);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SparsePoly SparsePoly::pow(std::uint32_t e) const {
    SparsePoly acc(field_, nvars_);
    acc.add_term(ExponentVec(static_cast<std::size_t>(nvars_), 0), field_->one());
    SparsePoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (nvars_ != o.nvars_ || !field_->compatible(*o.field_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto it2 = o.terms_.begin();
    for (auto it1 = terms_.begin(); it1 != terms_.end(); ++it1, ++it2)
        if (it1->first != it2->first || !(it1->second == it2->second)) return false;
    return true;
}

namespace {

void render_powprod(std::ostream& os, const ExponentVec& e, bool lead_coeff) {
    bool first = !lead_coeff;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
    }
}

} // namespace

std::string SparsePoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool constant_term = total_degree(e) == 0;
        bool unit = c == field_->one();
        if (constant_term || !unit) os << c.to_string();
        if (!constant_term) render_powprod(os, e, constant_term || !unit);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Map text parsing

namespace {

struct Token {
    enum Kind { Int, Ident, Punct, Sep, End } kind;
    std::string text;
    std::uint64_t value = 0; // for Int, reduced lazily by the consumer
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                      src_[pos_] == '\r')) {
            ++pos_;
            ++col_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::End;
            tok_.text = "<end>";
            return;
        }
        char c = src_[pos_];
        if (c == '\n' || c == ';') {
            tok_.kind = Token::Sep;
            tok_.text = std::string(1, c);
            ++pos_;
            if (c == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Int;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Ident;
            tok_.text = src_.substr(start, pos_ - start);
            return;
        }
        if (std::string(":=+-*^()").find(c) != std::string::npos) {
            tok_.kind = Token::Punct;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'",
                         line_, col_);
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

class MapParser {
public:
    MapParser(const std::string& text, FieldPtr field)
        : lex_(text), field_(std::move(field)) {}

    PolyMap run() {
        expect_ident("vars");
        expect_punct(":");
        nvars_ = static_cast<int>(expect_int_value(1000));
        if (nvars_ < 1)
            throw ParseError("vars must be at least 1", lex_.peek().line,
                             lex_.peek().col);
        skip_seps();
        std::vector<SparsePoly> comps;
        while (lex_.peek().kind != Token::End) {
            Token name = lex_.next();
            if (name.kind != Token::Ident || name.text.size() < 2 ||
                name.text[0] != 'f')
                throw ParseError("expected component name f" +
                                     std::to_string(comps.size() + 1),
                                 name.line, name.col);
            std::string want = "f" + std::to_string(comps.size() + 1);
            if (name.text != want) {
                if (name.text.size() > 1 &&
                    std::all_of(name.text.begin() + 1, name.text.end(),
                                [](char ch) { return std::isdigit(
                                      static_cast<unsigned char>(ch)); }))
                    throw ComponentCountError(
                        "components must appear in order; expected " + want +
                            " but found " + name.text,
                        name.line, name.col);
                throw ParseError("expected component name " + want, name.line,
                                 name.col);
            }
            expect_punct("=");
            comps.push_back(parse_expr());
            if (lex_.peek().kind == Token::Sep)
                skip_seps();
            else if (lex_.peek().kind != Token::End)
                throw ParseError("expected end of component", lex_.peek().line,
                                 lex_.peek().col);
        }
        if (static_cast<int>(comps.size()) != nvars_)
            throw ComponentCountError(
                "map in " + std::to_string(nvars_) + " variables needs " +
                    std::to_string(nvars_) + " components, found " +
                    std::to_string(comps.size()),
                lex_.peek().line, lex_.peek().col);
        return PolyMap(field_, std::move(comps));
    }

private:
    void skip_seps() {
        while (lex_.peek().kind == Token::Sep) lex_.next();
    }

    void expect_ident(const std::string& s) {
        Token t = lex_.next();
        if (t.kind != Token::Ident || t.text != s)
            throw ParseError("expected '" + s + "'", t.line, t.col);
    }

    void expect_punct(const std::string& s) {
        Token t = lex_.next();
        if (t.kind != Token::Punct || t.text != s)
            throw ParseError("expected '" + s + "'", t.line, t.col);
    }

    // Integer with a sanity cap, for var counts and exponents.
    std::uint64_t expect_int_value(std::uint64_t cap) {
        Token t = lex_.next();
        if (t.kind != Token::Int)
            throw ParseError("expected an integer", t.line, t.col);
        if (t.text.size() > 7)
            throw ParseError("integer out of range", t.line, t.col);
        std::uint64_t v = std::stoull(t.text);
        if (v > cap) throw ParseError("integer out of range", t.line, t.col);
        return v;
    }

    // Integer coefficient reduced mod p; arbitrary length.
    FieldElement int_coeff(const Token& t) {
        std::uint64_t p = field_->p();
        std::uint64_t v = 0;
        for (char ch : t.text) v = (v * 10 + static_cast<std::uint64_t>(ch - '0')) % p;
        return field_->from_int(v);
    }

    SparsePoly parse_expr() {
        SparsePoly poly(field_, nvars_);
        bool negate = false;
        for (;;) {
            auto [coeff, exps] = parse_term();
            poly.add_term(exps, negate ? -coeff : coeff);
            const Token& t = lex_.peek();
            if (t.kind == Token::Punct && (t.text == "+" || t.text == "-")) {
                negate = t.text == "-";
                lex_.next();
                continue;
            }
            break;
        }
        return poly;
    }

    std::pair<FieldElement, ExponentVec> parse_term() {
        const Token& t = lex_.peek();
        FieldElement coeff = field_->one();
        bool saw_coeff = false;
        if (t.kind == Token::Int) {
            coeff = int_coeff(lex_.next());
            saw_coeff = true;
        } else if (t.kind == Token::Punct && t.text == "(") {
            coeff = parse_tpoly();
            saw_coeff = true;
        }
        ExponentVec exps(static_cast<std::size_t>(nvars_), 0);
        if (saw_coeff) {
            if (lex_.peek().kind == Token::Punct && lex_.peek().text == "*") {
                lex_.next();
                parse_powprod(exps);
            }
        } else {
            parse_powprod(exps);
        }
        return {coeff, exps};
    }

    void parse_powprod(ExponentVec& exps) {
        parse_factor(exps);
        while (lex_.peek().kind == Token::Punct && lex_.peek().text == "*") {
            lex_.next();
            parse_factor(exps);
        }
    }

    void parse_factor(ExponentVec& exps) {
        Token t = lex_.next();
        if (t.kind != Token::Ident || t.text.size() < 2 || t.text[0] != 'x' ||
            !std::all_of(t.text.begin() + 1, t.text.end(), [](char ch) {
                return std::isdigit(static_cast<unsigned char>(ch));
            }))
            throw ParseError("expected a variable", t.line, t.col);
        int idx = std::stoi(t.text.substr(1));
        if (idx < 1 || idx > nvars_)
            throw UnknownVariableError("unknown variable " + t.text, t.line,
                                       t.col);
        std::uint64_t e = 1;
        if (lex_.peek().kind == Token::Punct && lex_.peek().text == "^") {
            lex_.next();
            e = expect_int_value(1000000);
        }
        exps[static_cast<std::size_t>(idx - 1)] += static_cast<std::uint32_t>(e);
    }

    // "(c0 + c1*t + c2*t^2 + ...)" -> field element
    FieldElement parse_tpoly() {
        expect_punct("(");
        FieldElement acc = field_->zero();
        FieldElement gen = field_->generator();
        bool negate = false;
        for (;;) {
            Token t = lex_.next();
            FieldElement c = field_->one();
            std::uint64_t tpow = 0;
            if (t.kind == Token::Int) {
                c = int_coeff(t);
                if (lex_.peek().kind == Token::Punct && lex_.peek().text == "*") {
                    lex_.next();
                    t = lex_.next();
                    if (t.kind != Token::Ident || t.text != "t")
                        throw ParseError("expected 't'", t.line, t.col);
                    tpow = 1;
                }
            } else if (t.kind == Token::Ident && t.text == "t") {
                tpow = 1;
            } else {
                throw ParseError("expected a coefficient term", t.line, t.col);
            }
            if (tpow == 1 && lex_.peek().kind == Token::Punct &&
                lex_.peek().text == "^") {
                lex_.next();
                tpow = expect_int_value(1000000);
            }
            FieldElement term = c * field_->pow(gen, tpow);
            acc = acc + (negate ? -term : term);
            const Token& nx = lex_.peek();
            if (nx.kind == Token::Punct && (nx.text == "+" || nx.text == "-")) {
                negate = nx.text == "-";
                lex_.next();
                continue;
            }
            break;
        }
        expect_punct(")");
        return acc;
    }

    Lexer lex_;
    FieldPtr field_;
    int nvars_ = 0;
};

} // namespace

PolyMap::PolyMap(FieldPtr field, std::vector<SparsePoly> components)
    : field_(std::move(field)), comps_(std::move(components)) {
    if (!field_) throw BadParamsError("null field");
    if (comps_.empty()) throw BadParamsError("map needs at least one component");
    nvars_ = comps_[0].nvars();
    if (static_cast<int>(comps_.size()) != nvars_)
        throw BadParamsError("self-map needs exactly as many components as variables");
    for (const auto& c : comps_)
        if (c.nvars() != nvars_ || !field_->compatible(*c.field()))
            throw BadParamsError("components disagree on variables or field");
}

PolyMap PolyMap::parse(const std::string& text, FieldPtr field) {
    return MapParser(text, std::move(field)).run();
}

std::vector<FieldElement> PolyMap::eval(const std::vector<FieldElement>& point) const {
    std::vector<FieldElement> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.eval(point));
    return out;
}

std::uint64_t PolyMap::degree() const {
    bool constant = true;
    std::uint64_t d = 0;
    for (const auto& c : comps_) {
        if (!c.is_constant()) constant = false;
        d = std::max(d, c.degree());
    }
    if (constant)
        throw ConstantMapError("degree of a constant map is undefined");
    return d;
}

DegreeMatrix PolyMap::degree_matrix() const {
    std::set<ExponentVec, GrlexDescLess> cols;
    for (const auto& c : comps_)
        for (const auto& [e, coeff] : c.terms())
            if (total_degree(e) > 0) cols.insert(e);
    DegreeMatrix d;
    d.nvars = nvars_;
    d.columns.assign(cols.begin(), cols.end());
    return d;
}

std::set<int> PolyMap::unused_variables() const {
    std::vector<bool> used(static_cast<std::size_t>(nvars_), false);
    for (const auto& c : comps_)
        for (const auto& [e, coeff] : c.terms())
            for (int i = 0; i < nvars_; ++i)
                if (e[static_cast<std::size_t>(i)] != 0)
                    used[static_cast<std::size_t>(i)] = true;
    std::set<int> out;
    for (int i = 0; i < nvars_; ++i)
        if (!used[static_cast<std::size_t>(i)]) out.insert(i + 1);
    return out;
}

std::string PolyMap::render() const {
    std::ostringstream os;
    os << "vars:" << nvars_ << "\n";
    for (std::size_t i = 0; i < comps_.size(); ++i)
        os << "f" << (i + 1) << " = " << comps_[i].render() << "\n";
    return os.str();
}

bool PolyMap::operator==(const PolyMap& o) const {
    return nvars_ == o.nvars_ && comps_ == o.comps_;
}

SparsePoly combine(const PolyMap& f, const ExtensionCtx& ctx) {
    if (!ctx.base()->compatible(*f.field()))
        throw FieldMismatchError("combine expects the map's field as extension base");
    if (ctx.degree() != f.nvars())
        throw BadParamsError("extension degree must equal the number of variables");
    SparsePoly g(ctx.top(), f.nvars());
    for (int i = 0; i < f.nvars(); ++i) {
        const FieldElement& ei = ctx.basis()[static_cast<std::size_t>(i)];
        for (const auto& [e, c] : f.components()[static_cast<std::size_t>(i)].terms())
            g.add_term(e, ctx.embed(c) * ei);
    }
    return g;
}

} // namespace vsb
