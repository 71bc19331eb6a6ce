#include "realchern/io/workspace.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "realchern/algebra/error.hpp"
#include "realchern/algebra/parser.hpp"

namespace realchern {

namespace {

struct Token {
    enum Kind { Ident, Number, Punct, End } kind = End;
    std::string text;
    int line = 1;
    int column = 1;
};

/// Expression text captured verbatim up to the terminating ';'.
struct Raw {
    std::string text;
    int line = 1;
    int column = 1;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message, int line, int column)
{
    throw ParseError(code, message, line, column);
}

[[noreturn]] void fail(ErrorCode code, const std::string& message, const Token& at)
{
    fail(code, message, at.line, at.column);
}

std::string describe(const Token& t)
{
    switch (t.kind) {
    case Token::End:
        return "end of input";
    case Token::Number:
        return "number " + t.text;
    default:
        return "'" + t.text + "'";
    }
}

class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {}

    Token next()
    {
        skip();
        Token t;
        t.line = line_;
        t.column = column_;
        if (pos_ >= src_.size())
            return t;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Token::Ident;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                t.text += advance();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                t.text += advance();
        } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.kind = Token::Punct;
            t.text = "->";
            advance();
            advance();
        } else if (std::string_view("{};:=*").find(c) != std::string_view::npos) {
            t.kind = Token::Punct;
            t.text = std::string(1, advance());
        } else {
            fail(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", line_, column_);
        }
        return t;
    }

    Token peek()
    {
        Lexer copy = *this;
        return copy.next();
    }

    /// Everything up to the next ';' (which is consumed).
    Raw expression()
    {
        skip();
        Raw r;
        r.line = line_;
        r.column = column_;
        while (pos_ < src_.size() && src_[pos_] != ';') {
            if (src_[pos_] == '{' || src_[pos_] == '}' || src_[pos_] == '#')
                fail(ErrorCode::SyntaxError, "expected ';' after expression", line_, column_);
            r.text += advance();
        }
        if (pos_ >= src_.size())
            fail(ErrorCode::SyntaxError, "expected ';' after expression", line_, column_);
        advance();
        while (!r.text.empty() && std::isspace(static_cast<unsigned char>(r.text.back())))
            r.text.pop_back();
        if (r.text.empty())
            fail(ErrorCode::SyntaxError, "expected an expression", r.line, r.column);
        return r;
    }

private:
    char advance()
    {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip()
    {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

struct SqDecl {
    Token generator;
    int index = 0;
    Raw value;
};

struct RingBlock {
    std::vector<Generator> generators;
    std::vector<Token> generator_tokens;
    std::vector<Raw> relations;
    std::vector<SqDecl> squares;
};

struct ImageDecl {
    Token generator;
    Raw value;
};

class DefinitionParser {
public:
    DefinitionParser(std::string_view text, Workspace& ws) : lex_(text), ws_(ws) {}

    void run()
    {
        while (lex_.peek().kind != Token::End)
            statement();
    }

private:
    void statement()
    {
        const Token t = lex_.next();
        if (t.kind != Token::Ident)
            fail(ErrorCode::SyntaxError, "expected 'space', 'bundle', 'manifold' or 'map', got " + describe(t), t);
        if (t.text == "space")
            space();
        else if (t.text == "bundle")
            bundle();
        else if (t.text == "manifold")
            manifold();
        else if (t.text == "map")
            map();
        else
            fail(ErrorCode::SyntaxError, "unknown statement '" + t.text + "'", t);
        if (lex_.peek().kind == Token::Punct && lex_.peek().text == ";")
            lex_.next();
    }

    // ---- token helpers

    Token ident(const char* what)
    {
        Token t = lex_.next();
        if (t.kind != Token::Ident)
            fail(ErrorCode::SyntaxError, std::string("expected ") + what + ", got " + describe(t), t);
        return t;
    }

    Token punct(const char* p)
    {
        Token t = lex_.next();
        if (t.kind != Token::Punct || t.text != p)
            fail(ErrorCode::SyntaxError, std::string("expected '") + p + "', got " + describe(t), t);
        return t;
    }

    int number(const char* what)
    {
        Token t = lex_.next();
        if (t.kind != Token::Number)
            fail(ErrorCode::SyntaxError, std::string("expected ") + what + ", got " + describe(t), t);
        if (t.text.size() > 6)
            fail(ErrorCode::SyntaxError, std::string(what) + " is too large", t);
        return std::stoi(t.text);
    }

    bool closing()
    {
        Token t = lex_.peek();
        if (t.kind == Token::End)
            fail(ErrorCode::SyntaxError, "unterminated block, expected '}'", t);
        if (t.kind == Token::Punct && t.text == "}") {
            lex_.next();
            return true;
        }
        return false;
    }

    Token fresh_name()
    {
        Token name = ident("a name");
        if (ws_.has(name.text))
            fail(ErrorCode::DuplicateName, "'" + name.text + "' is already defined as a " + ws_.kind_of(name.text),
                 name);
        return name;
    }

    Token reference(const char* kind)
    {
        Token t = ident(kind);
        if (ws_.kind_of(t.text) != kind)
            fail(ErrorCode::UnknownName, std::string("unknown ") + kind + " '" + t.text + "'", t);
        return t;
    }

    Poly expr(const Raw& raw, const RingPtr& ring)
    {
        ParseOptions options;
        options.allow_truncation = ws_.options().allow_truncation;
        options.line = raw.line;
        options.column = raw.column;
        return parse_poly(raw.text, ring, options);
    }

    Monomial monomial(const Raw& raw, const RingPtr& ring, const char* what)
    {
        const Poly p = expr(raw, ring);
        if (p.terms().size() != 1 || p.terms().begin()->second != 1)
            fail(ErrorCode::InvalidPresentation, std::string(what) + " must be a single monomial", raw.line,
                 raw.column);
        return p.terms().begin()->first;
    }

    /// Runs a model constructor, attaching the stanza position to its errors.
    template <typename F>
    auto at(const Token& where, F&& build)
    {
        try {
            return build();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.code(), e.what(), where.line, where.column);
        }
    }

    // ---- space

    bool ring_item(const Token& t, RingBlock& block)
    {
        if (t.text == "generator") {
            Token name = ident("a generator name");
            punct(":");
            const int degree = number("a degree");
            punct(";");
            block.generators.push_back({name.text, degree});
            block.generator_tokens.push_back(name);
        } else if (t.text == "relation") {
            block.relations.push_back(lex_.expression());
        } else if (t.text == "sq") {
            SqDecl d;
            d.generator = ident("a generator name");
            d.index = number("a square index");
            punct("=");
            d.value = lex_.expression();
            block.squares.push_back(std::move(d));
        } else {
            return false;
        }
        return true;
    }

    static constexpr int relation_cap = 4096;

    RingPtr build_ring(const RingBlock& block, Coefficients coeffs, int cap, const Token& where)
    {
        for (std::size_t i = 0; i < block.generators.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (block.generators[i].name == block.generators[j].name)
                    fail(ErrorCode::DuplicateName, "generator '" + block.generators[i].name + "' declared twice",
                         block.generator_tokens[i]);
        // relations are read without the cap; those above it are implied by
        // the truncation and dropped (this happens under a small --max-degree)
        RingPtr bare = at(where, [&] { return RingPresentation::create(coeffs, block.generators, relation_cap); });
        std::vector<Monomial> relations;
        for (const auto& raw : block.relations) {
            Monomial m = monomial(raw, bare, "a relation");
            if (m.degree() <= cap)
                relations.push_back(std::move(m));
        }
        return at(where, [&] { return RingPresentation::create(coeffs, block.generators, cap, relations); });
    }

    SqDeclarations squares(const RingBlock& block, const RingPtr& ring)
    {
        SqDeclarations out;
        for (const auto& d : block.squares) {
            if (!ring->index_of(d.generator.text))
                fail(ErrorCode::UnknownGenerator, "sq for unknown generator '" + d.generator.text + "'", d.generator);
            if (!out.emplace(std::make_pair(d.generator.text, d.index), expr(d.value, ring)).second)
                fail(ErrorCode::DuplicateName,
                     "sq " + d.generator.text + " " + std::to_string(d.index) + " declared twice", d.generator);
        }
        return out;
    }

    void space()
    {
        const Token name = fresh_name();
        punct("{");
        RingBlock integral;
        RingBlock fixed;
        std::vector<ImageDecl> kappa;
        std::optional<int> cap;
        bool trivial = false;
        bool fixed_seen = false;
        while (!closing()) {
            const Token t = ident("a space item");
            if (ring_item(t, integral))
                continue;
            if (t.text == "degree_cap") {
                if (cap)
                    fail(ErrorCode::DuplicateName, "degree_cap given twice", t);
                cap = number("a degree cap");
                punct(";");
            } else if (t.text == "trivial_involution") {
                trivial = true;
                punct(";");
            } else if (t.text == "kappa") {
                ImageDecl d;
                d.generator = ident("a generator name");
                punct("->");
                d.value = lex_.expression();
                kappa.push_back(std::move(d));
            } else if (t.text == "fixed") {
                if (fixed_seen)
                    fail(ErrorCode::DuplicateName, "fixed block given twice", t);
                fixed_seen = true;
                punct("{");
                while (!closing()) {
                    const Token f = ident("a fixed-ring item");
                    if (!ring_item(f, fixed))
                        fail(ErrorCode::SyntaxError, "unknown fixed-ring item '" + f.text + "'", f);
                }
            } else {
                fail(ErrorCode::SyntaxError, "unknown space item '" + t.text + "'", t);
            }
        }
        if (!fixed_seen)
            fail(ErrorCode::InvalidModel, name.text + ": missing fixed block", name);

        const int D = cap.value_or(ws_.options().default_degree_cap);
        SpaceDefinition def;
        def.name = name.text;
        def.integral_ring = build_ring(integral, Coefficients::Integer, D, name);
        def.fixed_ring = build_ring(fixed, Coefficients::Mod2, D / 2, name);
        def.mod2_squares = squares(integral, def.integral_ring->companion(Coefficients::Mod2));
        def.fixed_squares = squares(fixed, def.fixed_ring);
        for (const auto& d : kappa)
            if (!def.kappa.emplace(d.generator.text, expr(d.value, def.fixed_ring)).second)
                fail(ErrorCode::DuplicateName, "kappa " + d.generator.text + " declared twice", d.generator);
        def.trivial_involution = trivial;
        ws_.add(at(name, [&] { return SpaceModel::create(std::move(def)); }));
    }

    // ---- bundle

    void bundle()
    {
        const Token name = fresh_name();
        punct("{");
        std::optional<Token> base;
        std::optional<Raw> chern;
        std::optional<Raw> sw;
        while (!closing()) {
            const Token t = ident("a bundle item");
            if (t.text == "base") {
                base = reference("space");
                punct(";");
            } else if (t.text == "chern" || t.text == "sw_fixed") {
                punct("=");
                (t.text == "chern" ? chern : sw) = lex_.expression();
            } else {
                fail(ErrorCode::SyntaxError, "unknown bundle item '" + t.text + "'", t);
            }
        }
        if (!base || !chern || !sw)
            fail(ErrorCode::InvalidModel, name.text + ": a bundle needs base, chern and sw_fixed", name);
        const SpacePtr& space = ws_.space(base->text);
        Poly c = expr(*chern, space->integral_ring());
        Poly w = expr(*sw, space->fixed_ring());
        ws_.add(at(name, [&] { return RealBundle::unchecked(name.text, space, std::move(c), std::move(w)); }));
    }

    // ---- manifold

    void manifold()
    {
        const Token name = fresh_name();
        const Token open = lex_.next();
        if (open.kind == Token::Punct && open.text == "=") {
            const Token a = reference("manifold");
            punct("*");
            const Token b = reference("manifold");
            punct(";");
            ws_.add(at(name, [&] {
                return product_manifold(ws_.manifold(a.text), ws_.manifold(b.text), name.text);
            }));
            return;
        }
        if (open.kind != Token::Punct || open.text != "{")
            fail(ErrorCode::SyntaxError, "expected '{' or '=', got " + describe(open), open);
        std::optional<Token> space_name;
        std::optional<int> dimension;
        std::map<std::string, Raw> fields;
        while (!closing()) {
            const Token t = ident("a manifold item");
            if (t.text == "space") {
                space_name = reference("space");
                punct(";");
            } else if (t.text == "dimension") {
                dimension = number("a dimension");
                punct(";");
            } else if (t.text == "total_sw" || t.text == "fixed_total_sw") {
                punct("=");
                fields[t.text] = lex_.expression();
            } else if (t.text == "fundamental" || t.text == "fixed_fundamental") {
                fields[t.text] = lex_.expression();
            } else {
                fail(ErrorCode::SyntaxError, "unknown manifold item '" + t.text + "'", t);
            }
        }
        for (const char* f : {"total_sw", "fixed_total_sw", "fundamental", "fixed_fundamental"})
            if (!fields.count(f))
                fail(ErrorCode::InvalidModel, name.text + ": missing " + f, name);
        if (!space_name || !dimension)
            fail(ErrorCode::InvalidModel, name.text + ": a manifold needs space and dimension", name);
        const SpacePtr& space = ws_.space(space_name->text);
        Poly w = expr(fields["total_sw"], space->mod2_ring());
        Poly wn = expr(fields["fixed_total_sw"], space->fixed_ring());
        Monomial top = monomial(fields["fundamental"], space->mod2_ring(), "fundamental");
        Monomial fixed_top = monomial(fields["fixed_fundamental"], space->fixed_ring(), "fixed_fundamental");
        ws_.add(at(name, [&] {
            return ManifoldModel::unchecked(name.text, space, *dimension, std::move(w), std::move(wn), std::move(top),
                                            std::move(fixed_top));
        }));
    }

    // ---- map

    void map()
    {
        const Token name = fresh_name();
        punct(":");
        const Token source = reference("space");
        punct("->");
        const Token target = reference("space");
        punct("{");
        std::vector<ImageDecl> integral;
        std::vector<ImageDecl> fixed;
        auto image = [&](const Token& gen, std::vector<ImageDecl>& into) {
            punct("->");
            into.push_back({gen, lex_.expression()});
        };
        while (!closing()) {
            const Token t = ident("a generator name");
            if (t.text == "fixed" && lex_.peek().text == "{") {
                punct("{");
                while (!closing())
                    image(ident("a generator name"), fixed);
            } else {
                image(t, integral);
            }
        }
        const SpacePtr& src = ws_.space(source.text);
        const SpacePtr& dst = ws_.space(target.text);
        auto collect = [&](const std::vector<ImageDecl>& decls, const RingPtr& from, const RingPtr& into) {
            std::vector<std::optional<Poly>> slots(from->size());
            for (const auto& d : decls) {
                auto index = from->index_of(d.generator.text);
                if (!index)
                    fail(ErrorCode::UnknownGenerator,
                         "'" + d.generator.text + "' is not a generator of " + target.text, d.generator);
                if (slots[*index])
                    fail(ErrorCode::DuplicateName, "image of '" + d.generator.text + "' given twice", d.generator);
                slots[*index] = expr(d.value, into);
            }
            std::vector<Poly> out;
            for (std::size_t g = 0; g < slots.size(); ++g) {
                if (!slots[g])
                    fail(ErrorCode::MissingImage, name.text + ": no image for '" + from->generators()[g].name + "'",
                         name);
                out.push_back(*slots[g]);
            }
            return out;
        };
        auto ints = collect(integral, dst->integral_ring(), src->integral_ring());
        auto fixes = collect(fixed, dst->fixed_ring(), src->fixed_ring());
        ws_.add(at(name, [&] { return SpaceMap(name.text, src, dst, std::move(ints), std::move(fixes)); }));
    }

    Lexer lex_;
    Workspace& ws_;
};

}  // namespace

void Workspace::load_text(std::string_view text)
{
    DefinitionParser(text, *this).run();
}

void Workspace::load_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::UnknownName, "cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    load_text(buffer.str());
}

void Workspace::load_catalogue()
{
    load_text(standard_catalogue());
}

std::string Workspace::kind_of(std::string_view name) const
{
    auto it = kinds_.find(std::string(name));
    return it == kinds_.end() ? std::string() : it->second;
}

namespace {

template <typename T, typename Name>
const T& lookup(const std::vector<T>& items, std::string_view name, const char* kind, Name&& name_of)
{
    for (const auto& item : items)
        if (name_of(item) == name)
            return item;
    throw Error(ErrorCode::UnknownName, std::string("unknown ") + kind + " '" + std::string(name) + "'");
}

}  // namespace

const SpacePtr& Workspace::space(std::string_view name) const
{
    return lookup(spaces_, name, "space", [](const SpacePtr& s) -> const std::string& { return s->name(); });
}

const RealBundle& Workspace::bundle(std::string_view name) const
{
    return lookup(bundles_, name, "bundle", [](const RealBundle& b) -> const std::string& { return b.name(); });
}

const ManifoldModel& Workspace::manifold(std::string_view name) const
{
    return lookup(manifolds_, name, "manifold",
                  [](const ManifoldModel& m) -> const std::string& { return m.name(); });
}

const SpaceMap& Workspace::map(std::string_view name) const
{
    return lookup(maps_, name, "map", [](const SpaceMap& f) -> const std::string& { return f.name(); });
}

void Workspace::claim(const std::string& name, const char* kind)
{
    if (!kinds_.emplace(name, kind).second)
        throw Error(ErrorCode::DuplicateName, "'" + name + "' is already defined as a " + kinds_[name]);
}

void Workspace::add(SpacePtr space)
{
    claim(space->name(), "space");
    spaces_.push_back(std::move(space));
}

void Workspace::add(RealBundle bundle)
{
    claim(bundle.name(), "bundle");
    bundles_.push_back(std::move(bundle));
}

void Workspace::add(ManifoldModel manifold)
{
    claim(manifold.name(), "manifold");
    manifolds_.push_back(std::move(manifold));
}

void Workspace::add(SpaceMap map)
{
    claim(map.name(), "map");
    maps_.push_back(std::move(map));
}

}  // namespace realchern
