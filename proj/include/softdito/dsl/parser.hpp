#ifndef SOFTDITO_DSL_PARSER_HPP
#define SOFTDITO_DSL_PARSER_HPP

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "document.hpp"
#include "serialize.hpp"

namespace softdito::dsl {

/// One lexical, syntax or resolution problem.
struct Diagnostic {
    Location loc;
    std::string kind;  // "lexical", "syntax" or "resolution"
    std::string message;

    std::string to_string() const {
        return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + kind + " error: " + message;
    }
};

struct ParseResult {
    SpecDocument document;  // the declarations that resolved cleanly
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

namespace detail {

enum class Tok { ident, lbrace, rbrace, lparen, rparen, comma, colon, equals, arrow, end };

inline const char* describe(Tok t) {
    switch (t) {
    case Tok::ident: return "identifier";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    Location loc;
};

inline bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

inline std::vector<Token> lex(std::string_view src, std::vector<Diagnostic>& errors) {
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        const Location loc{line, col};
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (ident_char(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) {
                ++j;
            }
            out.push_back({Tok::ident, std::string(src.substr(i, j - i)), loc});
            advance(j - i);
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
            out.push_back({Tok::arrow, "->", loc});
            advance(2);
            continue;
        }
        Tok kind = Tok::end;
        switch (c) {
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        case ',': kind = Tok::comma; break;
        case ':': kind = Tok::colon; break;
        case '=': kind = Tok::equals; break;
        default: break;
        }
        if (kind == Tok::end) {
            // Multi-byte UTF-8 sequences are reported once, as a whole.
            std::size_t len = 1;
            while (i + len < src.size() && (static_cast<unsigned char>(src[i + len]) & 0xC0) == 0x80) {
                ++len;
            }
            errors.push_back({loc, "lexical", "unexpected character '" + std::string(src.substr(i, len)) + "'"});
            advance(len);
            continue;
        }
        out.push_back({kind, std::string(1, c), loc});
        advance(1);
    }
    out.push_back({Tok::end, "", Location{line, col}});
    return out;
}

struct SyntaxError {
    Diagnostic diag;
};

struct LabelRef {
    std::string text;
    Location loc;
};

struct SetLiteral {
    Location loc;
    std::vector<std::pair<LabelRef, std::vector<LabelRef>>> entries;
};

inline const std::set<std::string, std::less<>>& keywords() {
    static const std::set<std::string, std::less<>> k = {
        "context", "softset", "point", "domain", "topology", "cotopology", "ditopology", "map",
    };
    return k;
}

class Parser {
public:
    explicit Parser(std::string_view src) { tokens_ = lex(src, result_.errors); }

    ParseResult run() {
        while (peek().kind != Tok::end) {
            const auto start = pos_;
            try {
                declaration();
            } catch (const SyntaxError& e) {
                result_.errors.push_back(e.diag);
                recover(start);
            }
        }
        std::stable_sort(result_.errors.begin(), result_.errors.end(), [](const Diagnostic& a, const Diagnostic& b) {
            return a.loc.line != b.loc.line ? a.loc.line < b.loc.line : a.loc.column < b.loc.column;
        });
        return std::move(result_);
    }

private:
    // ---- token plumbing -------------------------------------------------

    const Token& peek() const { return tokens_[pos_]; }

    const Token& take() {
        const auto& t = tokens_[pos_];
        if (t.kind != Tok::end) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail(const Token& t, const std::string& expected) const {
        const std::string found = t.kind == Tok::ident ? "'" + t.text + "'" : describe(t.kind);
        throw SyntaxError{{t.loc, "syntax", "expected " + expected + ", found " + found}};
    }

    const Token& expect(Tok k) {
        if (peek().kind != k) {
            fail(peek(), describe(k));
        }
        return take();
    }

    const Token& expect_word(std::string_view word) {
        if (peek().kind != Tok::ident || peek().text != word) {
            fail(peek(), "'" + std::string(word) + "'");
        }
        return take();
    }

    LabelRef label() {
        const auto& t = expect(Tok::ident);
        return {t.text, t.loc};
    }

    void skip_comma() {
        if (peek().kind == Tok::comma) {
            take();
        }
    }

    // Skips to the next declaration keyword at nesting depth 0, or to one that
    // begins a line (which resynchronizes after an unbalanced brace).
    void recover(std::size_t start) {
        int depth = 0;
        for (std::size_t k = start; k < pos_; ++k) {
            depth += nesting(tokens_[k].kind);
        }
        if (pos_ == start) {
            take();
        }
        while (peek().kind != Tok::end) {
            const auto& t = peek();
            const bool starts_line = pos_ == 0 || tokens_[pos_ - 1].loc.line < t.loc.line;
            if ((depth <= 0 || starts_line) && t.kind == Tok::ident && keywords().count(t.text) != 0) {
                return;
            }
            depth += nesting(t.kind);
            take();
        }
    }

    static int nesting(Tok k) {
        if (k == Tok::lbrace || k == Tok::lparen) return 1;
        if (k == Tok::rbrace || k == Tok::rparen) return -1;
        return 0;
    }

    // ---- grammar ----------------------------------------------------------

    std::vector<LabelRef> label_set() {
        expect(Tok::lbrace);
        std::vector<LabelRef> out;
        while (peek().kind != Tok::rbrace) {
            out.push_back(label());
            if (peek().kind != Tok::rbrace) {
                expect(Tok::comma);
            }
        }
        take();
        return out;
    }

    SetLiteral set_literal() {
        SetLiteral lit{peek().loc, {}};
        expect(Tok::lbrace);
        while (peek().kind != Tok::rbrace) {
            auto key = label();
            expect(Tok::colon);
            lit.entries.emplace_back(std::move(key), label_set());
            skip_comma();
        }
        take();
        return lit;
    }

    std::vector<std::pair<LabelRef, LabelRef>> arrow_table(std::string_view word) {
        expect_word(word);
        expect(Tok::lbrace);
        std::vector<std::pair<LabelRef, LabelRef>> out;
        while (peek().kind != Tok::rbrace) {
            auto from = label();
            expect(Tok::arrow);
            out.emplace_back(std::move(from), label());
            skip_comma();
        }
        take();
        return out;
    }

    void declaration() {
        const auto& kw = peek();
        if (kw.kind != Tok::ident || keywords().count(kw.text) == 0) {
            fail(kw, "a declaration (context, softset, point, domain, topology, cotopology, ditopology or map)");
        }
        const std::string word = take().text;
        if (word == "context") context_decl();
        else if (word == "softset") softset_decl();
        else if (word == "point") point_decl();
        else if (word == "domain") domain_decl();
        else if (word == "topology") family_decl<OpenKind>(result_.document.topologies);
        else if (word == "cotopology") family_decl<ClosedKind>(result_.document.cotopologies);
        else if (word == "ditopology") ditopology_decl();
        else map_decl();
    }

    void context_decl() {
        const auto name = label();
        expect(Tok::lbrace);
        expect_word("universe");
        expect(Tok::equals);
        const auto points = label_set();
        expect_word("params");
        expect(Tok::equals);
        const auto params = label_set();
        expect(Tok::rbrace);

        bool ok = claim(name);
        ok = distinct(points, "point") && ok;
        ok = distinct(params, "parameter") && ok;
        if (points.empty()) {
            error(name.loc, "context '" + name.text + "' has an empty universe");
            ok = false;
        }
        if (params.empty()) {
            error(name.loc, "context '" + name.text + "' has no parameters");
            ok = false;
        }
        if (points.size() > kMaxLabels || params.size() > kMaxLabels) {
            error(name.loc, "context '" + name.text + "' has more than 64 points or parameters");
            ok = false;
        }
        if (!ok) {
            poison(name);
            return;
        }
        result_.document.contexts.push_back({name.text, Context::make(texts(points), texts(params)), name.loc});
    }

    void softset_decl() {
        const auto name = label();
        expect_word("in");
        const auto ctx_ref = label();
        expect_word("over");
        const auto over = label_set();
        const auto lit = set_literal();

        bool ok = claim(name);
        const auto* ctx = context_ref(ctx_ref);
        if (ctx == nullptr) {
            poison(name);
            return;
        }
        ParamSet declared;
        for (const auto& p : over) {
            if (auto e = resolve_param(**ctx, p)) {
                declared = declared.with(*e);
            } else {
                ok = false;
            }
        }
        auto value = resolve_literal(*ctx, lit);
        if (!value) {
            poison(name);
            return;
        }
        if (ok && value->domain() != declared) {
            error(lit.loc, "soft set '" + name.text + "' lists parameters " + format_params(**ctx, value->domain())
                               + " but is declared over " + format_params(**ctx, declared));
            ok = false;
        }
        if (!ok) {
            poison(name);
            return;
        }
        result_.document.sets.push_back({name.text, std::move(*value), name.loc});
    }

    void point_decl() {
        const auto name = label();
        expect_word("in");
        const auto ctx_ref = label();
        expect(Tok::equals);
        const auto x = label();
        expect_word("over");
        const auto over = label_set();

        bool ok = claim(name);
        const auto* ctx = context_ref(ctx_ref);
        if (ctx == nullptr) {
            poison(name);
            return;
        }
        const auto pt = resolve_point(**ctx, x);
        auto dom = resolve_params(**ctx, over);
        ok = ok && pt && dom;
        if (dom && dom->empty()) {
            error(name.loc, "soft point '" + name.text + "' needs a non-empty parameter set");
            ok = false;
        }
        if (!ok) {
            poison(name);
            return;
        }
        result_.document.points.push_back({name.text, SoftPoint{*ctx, *pt, *dom}, name.loc});
    }

    void domain_decl() {
        const auto name = label();
        expect_word("in");
        const auto ctx_ref = label();
        expect(Tok::equals);
        const auto over = label_set();

        const bool fresh = claim(name);
        const auto* ctx = context_ref(ctx_ref);
        if (ctx == nullptr) {
            poison(name);
            return;
        }
        auto dom = resolve_params(**ctx, over);
        if (!fresh || !dom) {
            poison(name);
            return;
        }
        result_.document.domains.push_back({name.text, DomainDecl{*ctx, *dom}, name.loc});
    }

    template<typename Kind_>
    void family_decl(std::vector<Decl<SoftFamily<Kind_>>>& into) {
        const auto name = label();
        expect_word("in");
        const auto ctx_ref = label();
        expect(Tok::equals);
        expect(Tok::lbrace);
        struct Member {
            std::optional<LabelRef> ref;
            std::optional<SetLiteral> lit;
        };
        std::vector<Member> members;
        while (peek().kind != Tok::rbrace) {
            if (peek().kind == Tok::lbrace) {
                members.push_back({std::nullopt, set_literal()});
            } else {
                members.push_back({label(), std::nullopt});
            }
            if (peek().kind != Tok::rbrace) {
                expect(Tok::comma);
            }
        }
        take();

        bool ok = claim(name);
        const auto* ctx = context_ref(ctx_ref);
        if (ctx == nullptr) {
            poison(name);
            return;
        }
        std::vector<SoftSet> resolved;
        for (const auto& m : members) {
            if (m.lit) {
                if (auto s = resolve_literal(*ctx, *m.lit)) {
                    resolved.push_back(std::move(*s));
                } else {
                    ok = false;
                }
                continue;
            }
            const auto* s = result_.document.set(m.ref->text);
            if (s == nullptr) {
                if (!poisoned_.count(m.ref->text)) {
                    error(m.ref->loc, "unknown soft set '" + m.ref->text + "'");
                }
                ok = false;
            } else if (!same_context(s->context(), *ctx)) {
                error(m.ref->loc, "soft set '" + m.ref->text + "' does not live in context '" + ctx_ref.text + "'");
                ok = false;
            } else {
                resolved.push_back(*s);
            }
        }
        if (!ok) {
            poison(name);
            return;
        }
        into.push_back({name.text, SoftFamily<Kind_>(*ctx, std::move(resolved)), name.loc});
    }

    void ditopology_decl() {
        const auto name = label();
        expect_word("in");
        const auto ctx_ref = label();
        expect(Tok::equals);
        expect(Tok::lparen);
        const auto tau_ref = label();
        expect(Tok::comma);
        const auto kappa_ref = label();
        expect(Tok::rparen);

        bool ok = claim(name);
        const auto* ctx = context_ref(ctx_ref);
        const auto* tau = result_.document.topology(tau_ref.text);
        const auto* kappa = result_.document.cotopology(kappa_ref.text);
        if (tau == nullptr && !poisoned_.count(tau_ref.text)) {
            error(tau_ref.loc, "unknown topology '" + tau_ref.text + "'");
        }
        if (kappa == nullptr && !poisoned_.count(kappa_ref.text)) {
            error(kappa_ref.loc, "unknown cotopology '" + kappa_ref.text + "'");
        }
        ok = ok && ctx && tau && kappa;
        if (ok && !same_context(tau->context(), *ctx)) {
            error(tau_ref.loc, "topology '" + tau_ref.text + "' does not live in context '" + ctx_ref.text + "'");
            ok = false;
        }
        if (ok && !same_context(kappa->context(), *ctx)) {
            error(kappa_ref.loc, "cotopology '" + kappa_ref.text + "' does not live in context '" + ctx_ref.text + "'");
            ok = false;
        }
        if (!ok) {
            poison(name);
            return;
        }
        result_.document.ditopologies.push_back(
            {name.text, DitopologyDecl{tau_ref.text, kappa_ref.text, Ditopology(*tau, *kappa)}, name.loc});
    }

    void map_decl() {
        const auto name = label();
        expect(Tok::colon);
        const auto src_ref = label();
        expect(Tok::arrow);
        const auto tgt_ref = label();
        expect(Tok::lbrace);
        const auto points = arrow_table("points");
        const auto params = arrow_table("params");
        expect(Tok::rbrace);

        bool ok = claim(name);
        const auto* src = context_ref(src_ref);
        const auto* tgt = context_ref(tgt_ref);
        if (src == nullptr || tgt == nullptr) {
            poison(name);
            return;
        }
        auto table = [&](const auto& entries, std::size_t n, auto resolve_from, auto resolve_to, const std::vector<std::string>& names,
                         const char* what) {
            std::vector<std::size_t> out(n, 0);
            std::vector<bool> seen(n, false);
            for (const auto& [from, to] : entries) {
                const auto i = resolve_from(from);
                const auto j = resolve_to(to);
                if (!i || !j) {
                    ok = false;
                    continue;
                }
                if (seen[*i]) {
                    error(from.loc, std::string(what) + " '" + from.text + "' is mapped twice");
                    ok = false;
                }
                seen[*i] = true;
                out[*i] = *j;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (!seen[i]) {
                    error(name.loc, "map '" + name.text + "' has no image for " + what + " '" + names[i] + "'");
                    ok = false;
                }
            }
            return out;
        };
        const auto& s = **src;
        const auto& t = **tgt;
        auto phi = table(points, s.num_points(), [&](const LabelRef& r) { return resolve_point(s, r); },
                         [&](const LabelRef& r) { return resolve_point(t, r); }, s.points(), "point");
        auto psi = table(params, s.num_params(), [&](const LabelRef& r) { return resolve_param(s, r); },
                         [&](const LabelRef& r) { return resolve_param(t, r); }, s.params(), "parameter");
        if (!ok) {
            poison(name);
            return;
        }
        result_.document.maps.push_back({name.text, SoftMap(*src, *tgt, std::move(phi), std::move(psi)), name.loc});
    }

    // ---- resolution -------------------------------------------------------

    void error(Location loc, std::string msg) { result_.errors.push_back({loc, "resolution", std::move(msg)}); }

    // Declarations that failed are remembered so that references to them do
    // not produce a second, derived error.
    void poison(const LabelRef& name) { poisoned_.insert(name.text); }

    bool claim(const LabelRef& name) {
        const auto kind = result_.document.kind_of(name.text);
        if (!kind.empty() || poisoned_.count(name.text)) {
            error(name.loc, "duplicate declaration '" + name.text + "'" + (kind.empty() ? "" : " (already a " + kind + ")"));
            return false;
        }
        return true;
    }

    bool distinct(const std::vector<LabelRef>& labels, const char* what) {
        std::set<std::string> seen;
        bool ok = true;
        for (const auto& l : labels) {
            if (!seen.insert(l.text).second) {
                error(l.loc, std::string("duplicate ") + what + " '" + l.text + "'");
                ok = false;
            }
        }
        return ok;
    }

    static std::vector<std::string> texts(const std::vector<LabelRef>& labels) {
        std::vector<std::string> out;
        for (const auto& l : labels) {
            out.push_back(l.text);
        }
        return out;
    }

    const ContextPtr* context_ref(const LabelRef& r) {
        const auto* c = result_.document.context(r.text);
        if (c == nullptr && !poisoned_.count(r.text)) {
            error(r.loc, "unknown context '" + r.text + "'");
        }
        return c;
    }

    std::optional<std::size_t> resolve_point(const Context& ctx, const LabelRef& r) {
        auto i = ctx.find_point(r.text);
        if (!i) {
            error(r.loc, "unknown point '" + r.text + "'");
        }
        return i;
    }

    std::optional<std::size_t> resolve_param(const Context& ctx, const LabelRef& r) {
        auto i = ctx.find_param(r.text);
        if (!i) {
            error(r.loc, "unknown parameter '" + r.text + "'");
        }
        return i;
    }

    std::optional<ParamSet> resolve_params(const Context& ctx, const std::vector<LabelRef>& labels) {
        ParamSet out;
        bool ok = distinct(labels, "parameter");
        for (const auto& l : labels) {
            if (auto e = resolve_param(ctx, l)) {
                out = out.with(*e);
            } else {
                ok = false;
            }
        }
        return ok ? std::optional<ParamSet>(out) : std::nullopt;
    }

    std::optional<SoftSet> resolve_literal(const ContextPtr& ctx, const SetLiteral& lit) {
        std::vector<PointSet> values(ctx->num_params());
        ParamSet dom;
        bool ok = true;
        for (const auto& [key, pts] : lit.entries) {
            const auto e = resolve_param(*ctx, key);
            if (e && dom.contains(*e)) {
                error(key.loc, "parameter '" + key.text + "' listed twice");
                ok = false;
            }
            ok = distinct(pts, "point") && ok;
            PointSet v;
            for (const auto& p : pts) {
                if (auto x = resolve_point(*ctx, p)) {
                    v = v.with(*x);
                } else {
                    ok = false;
                }
            }
            if (!e) {
                ok = false;
                continue;
            }
            dom = dom.with(*e);
            values[*e] = v;
        }
        if (!ok) {
            return std::nullopt;
        }
        return make_soft_set(ctx, dom, std::move(values));
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    ParseResult result_;
    std::set<std::string, std::less<>> poisoned_;
};

} // namespace detail

/// Parses and resolves a specification, collecting every error.
inline ParseResult parse(std::string_view text) { return detail::Parser(text).run(); }

/// Reads and parses a file; an unreadable file is reported as a diagnostic.
inline ParseResult parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        ParseResult r;
        r.errors.push_back({{0, 0}, "io", "cannot read '" + path + "'"});
        return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace softdito::dsl

#endif
