#include "keyclass/java_parser.hpp"

#include "keyclass/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace keyclass {

namespace {

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '$' || c >= 0x80;
}

// Blanks comments and string/char literals, preserving newlines so token
// line numbers stay aligned with the original text.
std::string mask_source(std::string_view src, const std::string& file) {
    std::string out(src);
    enum class State { Code, LineComment, BlockComment, String, Char } state = State::Code;
    int line = 1;
    int open_line = 1;
    bool escaped = false;

    for (std::size_t i = 0; i < src.size(); ++i) {
        char c = src[i];
        char next = i + 1 < src.size() ? src[i + 1] : '\0';
        if (c == '\n') ++line;

        switch (state) {
        case State::Code:
            if (c == '/' && next == '/') {
                state = State::LineComment;
                out[i] = out[i + 1] = ' ';
                ++i;
            } else if (c == '/' && next == '*') {
                state = State::BlockComment;
                open_line = line;
                out[i] = out[i + 1] = ' ';
                ++i;
            } else if (c == '"') {
                state = State::String;
                open_line = line;
                escaped = false;
                out[i] = ' ';
            } else if (c == '\'') {
                state = State::Char;
                open_line = line;
                escaped = false;
                out[i] = ' ';
            }
            break;
        case State::LineComment:
            if (c == '\n') {
                state = State::Code;
            } else {
                out[i] = ' ';
            }
            break;
        case State::BlockComment:
            if (c == '*' && next == '/') {
                state = State::Code;
                out[i] = out[i + 1] = ' ';
                ++i;
            } else if (c != '\n') {
                out[i] = ' ';
            }
            break;
        case State::String:
        case State::Char: {
            char quote = state == State::String ? '"' : '\'';
            if (c == '\n') {
                throw ParseError(file, open_line, "unterminated literal");
            }
            if (!escaped && c == quote) {
                state = State::Code;
            }
            escaped = !escaped && c == '\\';
            out[i] = ' ';
            break;
        }
        }
    }
    if (state == State::BlockComment) throw ParseError(file, open_line, "unterminated comment");
    if (state == State::String || state == State::Char) {
        throw ParseError(file, open_line, "unterminated literal");
    }
    return out;
}

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 0;
};

std::vector<Token> tokenize(std::string_view masked) {
    std::vector<Token> tokens;
    int line = 1;
    std::size_t i = 0;
    while (i < masked.size()) {
        unsigned char c = masked[i];
        if (c == '\n') {
            ++line;
            ++i;
            continue;
        }
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t begin = i;
            while (i < masked.size() && is_ident_char(static_cast<unsigned char>(masked[i]))) ++i;
            tokens.push_back({Token::Kind::Ident, std::string(masked.substr(begin, i - begin)), line});
            continue;
        }
        if (std::isdigit(c)) {
            // Rough numeric literal munch; numbers only occur in skipped
            // initializers and bodies, so suffix details do not matter.
            std::size_t begin = i;
            while (i < masked.size()) {
                unsigned char d = masked[i];
                if (std::isalnum(d) || d == '_') {
                    ++i;
                } else if (d == '.' && i + 1 < masked.size() &&
                           std::isdigit(static_cast<unsigned char>(masked[i + 1]))) {
                    ++i;
                } else {
                    break;
                }
            }
            tokens.push_back({Token::Kind::Number, std::string(masked.substr(begin, i - begin)), line});
            continue;
        }
        tokens.push_back({Token::Kind::Punct, std::string(1, static_cast<char>(c)), line});
        ++i;
    }
    tokens.push_back({Token::Kind::End, "", line});
    return tokens;
}

const std::vector<std::string> kModifiers = {
    "public", "protected", "private", "abstract", "final",    "static",
    "native", "synchronized", "transient", "volatile", "strictfp", "default", "sealed"};

class Parser {
public:
    Parser(std::vector<Token> tokens, std::string file)
        : tokens_(std::move(tokens)), file_(std::move(file)) {}

    CompilationUnit parse_unit() {
        CompilationUnit unit;
        unit.file = file_;
        skip_annotations_and_semis();
        if (at_ident("package")) {
            advance();
            unit.package_name = parse_qualified_name();
            expect_punct(";");
        }
        for (;;) {
            skip_annotations_and_semis();
            if (!at_ident("import")) break;
            advance();
            bool is_static = at_ident("static");
            if (is_static) advance();
            ImportDecl imp;
            imp.name = parse_qualified_name();
            if (at_punct(".")) { // trailing ".*"
                advance();
                expect_punct("*");
                imp.on_demand = true;
            }
            expect_punct(";");
            if (!is_static) unit.imports.push_back(std::move(imp));
        }
        while (!at_end()) {
            skip_annotations_and_semis();
            if (at_end()) break;
            if (auto decl = parse_type_decl(unit.package_name, "")) {
                unit.types.push_back(std::move(*decl));
            }
        }
        return unit;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    bool at_end() const { return peek().kind == Token::Kind::End; }
    bool at_punct(std::string_view p) const {
        return peek().kind == Token::Kind::Punct && peek().text == p;
    }
    bool at_ident(std::string_view name) const {
        return peek().kind == Token::Kind::Ident && peek().text == name;
    }
    bool at_any_ident() const { return peek().kind == Token::Kind::Ident; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(file_, peek().line, msg); }

    void expect_punct(std::string_view p) {
        if (!at_punct(p)) fail("expected '" + std::string(p) + "', got '" + peek().text + "'");
        advance();
    }

    std::string expect_ident() {
        if (!at_any_ident()) fail("expected identifier, got '" + peek().text + "'");
        return advance().text;
    }

    std::string parse_qualified_name() {
        std::string name = expect_ident();
        while (at_punct(".") && (peek(1).kind == Token::Kind::Ident || peek(1).text == "*")) {
            advance();
            if (at_punct("*")) {
                // Leave the '*' for the caller; rewind the dot.
                --pos_;
                break;
            }
            name += ".";
            name += advance().text;
        }
        return name;
    }

    // Consumes "@Name", "@p.q.Name" and an optional argument list.
    void skip_annotation() {
        expect_punct("@");
        parse_qualified_name();
        if (at_punct("(")) skip_balanced("(", ")");
    }

    void skip_annotations_and_semis() {
        for (;;) {
            if (at_punct(";")) {
                advance();
            } else if (at_punct("@") && peek(1).kind == Token::Kind::Ident &&
                       peek(1).text != "interface") {
                skip_annotation();
            } else {
                return;
            }
        }
    }

    // Skips a balanced pair, returning the lines of the open and close tokens.
    std::pair<int, int> skip_balanced(std::string_view open, std::string_view close) {
        if (!at_punct(open)) fail("expected '" + std::string(open) + "'");
        int open_line = peek().line;
        advance();
        int depth = 1;
        while (depth > 0) {
            if (at_end()) {
                throw ParseError(file_, open_line,
                                 "unbalanced '" + std::string(open) + "' opened here");
            }
            if (at_punct(open)) ++depth;
            else if (at_punct(close)) --depth;
            if (depth == 0) break;
            advance();
        }
        int close_line = peek().line;
        advance();
        return {open_line, close_line};
    }

    struct Modifiers {
        bool is_static = false;
        bool any = false;
    };

    Modifiers parse_modifiers() {
        Modifiers mods;
        for (;;) {
            if (at_punct("@") && peek(1).kind == Token::Kind::Ident && peek(1).text != "interface") {
                skip_annotation();
                mods.any = true;
                continue;
            }
            if (at_any_ident() &&
                std::find(kModifiers.begin(), kModifiers.end(), peek().text) != kModifiers.end()) {
                // "static { ... }" initializer is handled by the caller.
                if (peek().text == "static" && peek(1).text == "{") return mods;
                if (peek().text == "default" && peek(1).kind != Token::Kind::Ident &&
                    peek(1).text != "<") {
                    return mods; // annotation "default" clause, not a modifier
                }
                mods.is_static |= peek().text == "static";
                mods.any = true;
                advance();
                continue;
            }
            if (at_ident("non") && peek(1).text == "-" && peek(2).text == "sealed") {
                advance();
                advance();
                advance();
                mods.any = true;
                continue;
            }
            return mods;
        }
    }

    TypeRef parse_type_ref() {
        if (at_punct("@")) skip_annotation();
        TypeRef ref;
        if (at_punct("?")) { // wildcard: keep the bound when there is one
            advance();
            if (at_ident("extends") || at_ident("super")) {
                advance();
                return parse_type_ref();
            }
            ref.name = "?";
            return ref;
        }
        ref.name = parse_qualified_name();
        if (at_punct("<")) {
            advance();
            if (at_punct(">")) { // diamond
                advance();
            } else {
                for (;;) {
                    ref.args.push_back(parse_type_ref());
                    if (at_punct(",")) {
                        advance();
                        continue;
                    }
                    expect_punct(">");
                    break;
                }
            }
        }
        while (at_punct("[") && peek(1).text == "]") {
            advance();
            advance();
            ++ref.array_dims;
        }
        return ref;
    }

    std::vector<TypeRef> parse_type_ref_list() {
        std::vector<TypeRef> refs;
        refs.push_back(parse_type_ref());
        while (at_punct(",")) {
            advance();
            refs.push_back(parse_type_ref());
        }
        return refs;
    }

    std::optional<ClassDecl> parse_type_decl(const std::string& package, const std::string& enclosing) {
        parse_modifiers();
        if (at_punct("@") && peek(1).text == "interface") {
            // Annotation type declaration: skip wholesale, no ClassDecl.
            advance();
            advance();
            expect_ident();
            while (!at_punct("{") && !at_end()) advance();
            skip_balanced("{", "}");
            return std::nullopt;
        }
        TypeDeclKind kind;
        if (at_ident("class")) kind = TypeDeclKind::Class;
        else if (at_ident("interface")) kind = TypeDeclKind::Interface;
        else if (at_ident("enum")) kind = TypeDeclKind::Enum;
        else fail("unsupported declaration starting at '" + peek().text + "'");
        advance();

        ClassDecl decl;
        decl.kind = kind;
        decl.simple_name = expect_ident();
        std::string chain = enclosing.empty() ? decl.simple_name : enclosing + "." + decl.simple_name;
        decl.qualified_name = package.empty() ? chain : package + "." + chain;

        if (at_punct("<")) skip_balanced("<", ">"); // type parameters
        if (at_ident("extends")) {
            advance();
            if (kind == TypeDeclKind::Interface) {
                decl.interfaces = parse_type_ref_list();
            } else {
                decl.superclass = parse_type_ref();
            }
        }
        if (at_ident("implements")) {
            advance();
            auto list = parse_type_ref_list();
            decl.interfaces.insert(decl.interfaces.end(), list.begin(), list.end());
        }
        if (at_ident("permits")) {
            advance();
            parse_type_ref_list();
        }
        expect_punct("{");
        if (kind == TypeDeclKind::Enum) parse_enum_constants(decl);
        parse_members(decl, package, chain);
        return decl;
    }

    // Enum constant section, up to the ';' separator or the closing brace.
    // Each constant becomes a static field of the enum's own type.
    void parse_enum_constants(ClassDecl& decl) {
        for (;;) {
            while (at_punct("@") && peek(1).text != "interface") skip_annotation();
            if (at_punct(";")) {
                advance();
                return;
            }
            if (at_punct("}")) return; // constant-only enum; parse_members sees '}'
            FieldDecl constant;
            constant.name = expect_ident();
            constant.type.name = decl.simple_name;
            constant.is_static = true;
            decl.fields.push_back(std::move(constant));
            if (at_punct("(")) skip_balanced("(", ")");
            if (at_punct("{")) skip_balanced("{", "}"); // constant class body
            if (at_punct(",")) {
                advance();
                continue;
            }
        }
    }

    void parse_members(ClassDecl& decl, const std::string& package, const std::string& chain) {
        for (;;) {
            if (at_end()) throw ParseError(file_, peek().line, "unbalanced '{' in " + decl.simple_name);
            if (at_punct("}")) {
                advance();
                return;
            }
            if (at_punct(";")) {
                advance();
                continue;
            }
            if (at_punct("{")) { // instance initializer
                skip_balanced("{", "}");
                continue;
            }
            std::size_t start = pos_;
            Modifiers mods = parse_modifiers();
            if (at_ident("static") && peek(1).text == "{") { // static initializer
                advance();
                skip_balanced("{", "}");
                continue;
            }
            if (at_ident("class") || at_ident("interface") || at_ident("enum") ||
                (at_punct("@") && peek(1).text == "interface")) {
                pos_ = start; // let parse_type_decl re-read the modifiers
                if (auto nested = parse_type_decl(package, chain)) {
                    decl.nested.push_back(std::move(*nested));
                }
                continue;
            }
            try {
                parse_member(decl, mods);
            } catch (const ParseError&) {
                recover_member(decl, start);
            }
        }
    }

    void parse_member(ClassDecl& decl, const Modifiers& mods) {
        if (at_punct("<")) skip_balanced("<", ">"); // generic method type parameters

        bool returns_void = false;
        TypeRef first;
        if (at_ident("void")) {
            advance();
            returns_void = true;
        } else {
            first = parse_type_ref();
        }

        if (at_punct("(")) {
            // Constructor: bare class name straight into a parameter list.
            if (returns_void || first.name != decl.simple_name || !first.args.empty() ||
                first.array_dims != 0) {
                fail("unsupported member shape before '('");
            }
            ConstructorDecl ctor;
            ctor.params = parse_params();
            skip_throws();
            if (at_punct("{")) skip_balanced("{", "}");
            else expect_punct(";");
            decl.constructors.push_back(std::move(ctor));
            return;
        }

        std::string name = expect_ident();
        if (at_punct("(")) {
            MethodDecl method;
            method.name = std::move(name);
            if (!returns_void) method.return_type = std::move(first);
            method.params = parse_params();
            while (at_punct("[") && peek(1).text == "]") { // old-style array return
                advance();
                advance();
                if (method.return_type) ++method.return_type->array_dims;
            }
            skip_throws();
            if (at_punct("{")) {
                auto [open_line, close_line] = skip_balanced("{", "}");
                method.body_line_count = std::max(0, close_line - open_line - 1);
            } else {
                expect_punct(";"); // abstract or interface method
            }
            decl.methods.push_back(std::move(method));
            return;
        }

        if (returns_void) fail("field of type void");
        // Field declaration: one or more declarators.
        for (;;) {
            FieldDecl field;
            field.type = first;
            field.name = name;
            field.is_static = mods.is_static || decl.kind == TypeDeclKind::Interface;
            while (at_punct("[") && peek(1).text == "]") {
                advance();
                advance();
                ++field.type.array_dims;
            }
            decl.fields.push_back(std::move(field));
            if (at_punct("=")) {
                advance();
                skip_initializer();
            }
            if (at_punct(",")) {
                advance();
                name = expect_ident();
                continue;
            }
            expect_punct(";");
            return;
        }
    }

    std::vector<TypeRef> parse_params() {
        expect_punct("(");
        std::vector<TypeRef> params;
        if (at_punct(")")) {
            advance();
            return params;
        }
        for (;;) {
            while (at_punct("@") && peek(1).text != "interface") skip_annotation();
            if (at_ident("final")) advance();
            TypeRef type = parse_type_ref();
            if (at_punct(".") && peek(1).text == "." && peek(2).text == ".") { // varargs
                advance();
                advance();
                advance();
                ++type.array_dims;
            }
            std::string param_name = expect_ident();
            (void)param_name;
            while (at_punct("[") && peek(1).text == "]") {
                advance();
                advance();
                ++type.array_dims;
            }
            params.push_back(std::move(type));
            if (at_punct(",")) {
                advance();
                continue;
            }
            expect_punct(")");
            return params;
        }
    }

    void skip_throws() {
        if (!at_ident("throws")) return;
        advance();
        parse_type_ref_list();
    }

    // Skips a field initializer up to the declarator-separating ',' or the
    // terminating ';'. Parens, brackets and braces nest; a top-level comma
    // only separates declarators when an identifier followed by '=', ',',
    // ';' or '[' comes next, which keeps commas inside generic argument
    // lists like "new HashMap<K, V>()" from splitting the declarator.
    void skip_initializer() {
        int open_line = peek().line;
        int depth = 0;
        for (;;) {
            if (at_end()) throw ParseError(file_, open_line, "unterminated field initializer");
            if (peek().kind == Token::Kind::Punct) {
                const std::string& p = peek().text;
                if (p == "(" || p == "[" || p == "{") ++depth;
                else if (p == ")" || p == "]" || p == "}") {
                    if (depth == 0) fail("unexpected '" + p + "' in field initializer");
                    --depth;
                } else if (depth == 0 && p == ";") {
                    return;
                } else if (depth == 0 && p == ",") {
                    const Token& ident = peek(1);
                    const Token& after = peek(2);
                    if (ident.kind == Token::Kind::Ident &&
                        (after.text == "=" || after.text == "," || after.text == ";" ||
                         after.text == "[")) {
                        return;
                    }
                }
            }
            advance();
        }
    }

    // Failed member parse: rewind, record the raw text, skip to the next ';'
    // or over one balanced brace block at this nesting level.
    void recover_member(ClassDecl& decl, std::size_t start) {
        pos_ = start;
        std::string raw;
        int depth = 0;
        while (!at_end()) {
            if (peek().kind == Token::Kind::Punct) {
                const std::string& p = peek().text;
                if (p == "{" || p == "(" || p == "[") ++depth;
                else if (p == "}" || p == ")" || p == "]") {
                    if (depth == 0) break; // enclosing class brace
                    --depth;
                    if (depth == 0 && p == "}") {
                        raw += peek().text;
                        advance();
                        break;
                    }
                } else if (p == ";" && depth == 0) {
                    advance();
                    break;
                }
            }
            if (!raw.empty()) raw += " ";
            raw += peek().text;
            advance();
        }
        if (pos_ == start) { // stray closing token: consume it so the loop advances
            raw = peek().text;
            advance();
        }
        decl.unparsed_members.push_back(std::move(raw));
    }

    std::vector<Token> tokens_;
    std::string file_;
    std::size_t pos_ = 0;
};

} // namespace

CompilationUnit parse_compilation_unit(std::string_view source, const std::string& file) {
    std::string masked = mask_source(source, file);
    Parser parser(tokenize(masked), file);
    return parser.parse_unit();
}

namespace {

void print_type_decl(std::ostringstream& out, const ClassDecl& decl, int indent_level) {
    std::string indent(static_cast<std::size_t>(indent_level) * 4, ' ');
    std::string inner = indent + "    ";

    out << indent;
    switch (decl.kind) {
    case TypeDeclKind::Class: out << "class "; break;
    case TypeDeclKind::Interface: out << "interface "; break;
    case TypeDeclKind::Enum: out << "enum "; break;
    }
    out << decl.simple_name;
    if (decl.superclass) out << " extends " << decl.superclass->text();
    if (!decl.interfaces.empty()) {
        out << (decl.kind == TypeDeclKind::Interface ? " extends " : " implements ");
        for (std::size_t i = 0; i < decl.interfaces.size(); ++i) {
            if (i) out << ", ";
            out << decl.interfaces[i].text();
        }
    }
    out << " {\n";

    if (decl.kind == TypeDeclKind::Enum) {
        // Static self-typed fields print as the constant list.
        bool first = true;
        for (const auto& field : decl.fields) {
            if (!field.is_static || field.type.name != decl.simple_name) continue;
            out << (first ? inner : ", ") << field.name;
            first = false;
        }
        out << (first ? inner + ";\n" : ";\n");
    }
    for (const auto& field : decl.fields) {
        if (decl.kind == TypeDeclKind::Enum && field.is_static && field.type.name == decl.simple_name)
            continue;
        out << inner << (field.is_static ? "static " : "") << field.type.text() << " " << field.name
            << ";\n";
    }
    for (const auto& ctor : decl.constructors) {
        out << inner << decl.simple_name << "(";
        for (std::size_t i = 0; i < ctor.params.size(); ++i) {
            if (i) out << ", ";
            out << ctor.params[i].text() << " p" << i;
        }
        out << ") {\n" << inner << "}\n";
    }
    for (const auto& method : decl.methods) {
        out << inner << (method.return_type ? method.return_type->text() : "void") << " "
            << method.name << "(";
        for (std::size_t i = 0; i < method.params.size(); ++i) {
            if (i) out << ", ";
            out << method.params[i].text() << " p" << i;
        }
        out << ") {\n";
        for (int i = 0; i < method.body_line_count; ++i) out << "\n";
        out << inner << "}\n";
    }
    for (const auto& nested : decl.nested) {
        print_type_decl(out, nested, indent_level + 1);
    }
    out << indent << "}\n";
}

} // namespace

std::string pretty_print(const CompilationUnit& unit) {
    std::ostringstream out;
    if (!unit.package_name.empty()) out << "package " << unit.package_name << ";\n\n";
    for (const auto& imp : unit.imports) {
        out << "import " << imp.name << (imp.on_demand ? ".*" : "") << ";\n";
    }
    if (!unit.imports.empty()) out << "\n";
    for (const auto& type : unit.types) {
        print_type_decl(out, type, 0);
    }
    return out.str();
}

} // namespace keyclass
