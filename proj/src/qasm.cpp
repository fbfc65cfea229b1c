#include "qho/qasm.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <vector>

namespace qho {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Circuit lower_circuit(const Circuit& c, const QasmOptions& opts) {
    validate_circuit(c);
    Circuit out;
    out.num_qubits = c.num_qubits;
    out.system_qubits = c.system_qubits;
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::ACNOT: {
                const int ctl = g.qubits[0], tgt = g.qubits[1];
                out.gates.push_back(Gate::x(ctl));
                out.gates.push_back(Gate::cnot(ctl, tgt));
                out.gates.push_back(Gate::x(ctl));
                break;
            }
            case GateKind::ACU3: {
                // X-conjugated controlled-U3; the inner six gates are the
                // standard exact controlled-U3 decomposition.
                const double th = g.params[0], ph = g.params[1], la = g.params[2];
                const int ctl = g.qubits[0], tgt = g.qubits[1];
                out.gates.push_back(Gate::x(ctl));
                out.gates.push_back(Gate::u1((la + ph) / 2.0, ctl));
                out.gates.push_back(Gate::u1((la - ph) / 2.0, tgt));
                out.gates.push_back(Gate::cnot(ctl, tgt));
                out.gates.push_back(Gate::u3(-th / 2.0, 0.0, -(ph + la) / 2.0, tgt));
                out.gates.push_back(Gate::cnot(ctl, tgt));
                out.gates.push_back(Gate::u3(th / 2.0, ph, 0.0, tgt));
                out.gates.push_back(Gate::x(ctl));
                break;
            }
            case GateKind::CH: {
                if (!opts.decompose_ch) {
                    out.gates.push_back(g);
                    break;
                }
                // CH = (I x Ry(-pi/4)) CNOT (I x Ry(pi/4)), Ry(a) = u3(a,0,0); exact.
                const int ctl = g.qubits[0], tgt = g.qubits[1];
                out.gates.push_back(Gate::u3(kPi / 4.0, 0.0, 0.0, tgt));
                out.gates.push_back(Gate::cnot(ctl, tgt));
                out.gates.push_back(Gate::u3(-kPi / 4.0, 0.0, 0.0, tgt));
                break;
            }
            default:
                out.gates.push_back(g);
                break;
        }
    }
    return out;
}

std::string emit_qasm(const Circuit& c, const QasmOptions& opts) {
    const Circuit low = lower_circuit(c, opts);
    std::string s;
    s += "OPENQASM 2.0;\n";
    s += "include \"qelib1.inc\";\n";
    s += "qreg q[" + std::to_string(low.num_qubits) + "];\n";
    s += "creg c[" + std::to_string(low.system_qubits.size()) + "];\n";
    for (const Gate& g : low.gates) {
        auto q = [&](int i) { return "q[" + std::to_string(g.qubits[i]) + "]"; };
        switch (g.kind) {
            case GateKind::X:
                s += "x " + q(0) + ";\n";
                break;
            case GateKind::H:
                s += "h " + q(0) + ";\n";
                break;
            case GateKind::U1:
                s += "u1(" + fmt(g.params[0]) + ") " + q(0) + ";\n";
                break;
            case GateKind::U3:
                s += "u3(" + fmt(g.params[0]) + "," + fmt(g.params[1]) + "," +
                     fmt(g.params[2]) + ") " + q(0) + ";\n";
                break;
            case GateKind::CNOT:
                s += "cx " + q(0) + "," + q(1) + ";\n";
                break;
            case GateKind::CCNOT:
                s += "ccx " + q(0) + "," + q(1) + "," + q(2) + ";\n";
                break;
            case GateKind::CH:
                s += "ch " + q(0) + "," + q(1) + ";\n";
                break;
            default:
                throw std::logic_error("emit_qasm: gate survived lowering: " +
                                       std::string(gate_name(g.kind)));
        }
    }
    for (std::size_t k = 0; k < low.system_qubits.size(); ++k)
        s += "measure q[" + std::to_string(low.system_qubits[k]) + "] -> c[" +
             std::to_string(k) + "];\n";
    return s;
}

qasm_error::qasm_error(int line, int col, const std::string& msg)
    : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ")"),
      line_(line),
      col_(col) {}

namespace {

enum class Tok { ident, number, string, punct, arrow, eof };

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        skip_space();
        tok_ = Token{Tok::eof, "", line_, col_};
        if (pos_ >= src_.size()) return;
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Tok::ident;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
                bump();
            if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                bump();
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) bump();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    bump();
            }
            tok_.kind = Tok::number;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            return;
        }
        if (c == '"') {
            bump();
            std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') bump();
            if (pos_ >= src_.size())
                throw qasm_error(tok_.line, tok_.col, "unterminated string");
            tok_.kind = Tok::string;
            tok_.text = std::string(src_.substr(start, pos_ - start));
            bump();
            return;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            bump();
            bump();
            tok_.kind = Tok::arrow;
            tok_.text = "->";
            return;
        }
        tok_.kind = Tok::punct;
        tok_.text = std::string(1, c);
        bump();
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                break;
            }
        }
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

struct GateSig {
    GateKind kind;
    int arity;
    int params;
};

const std::map<std::string, GateSig, std::less<>>& gate_table() {
    static const std::map<std::string, GateSig, std::less<>> table = {
        {"x", {GateKind::X, 1, 0}},    {"h", {GateKind::H, 1, 0}},
        {"u1", {GateKind::U1, 1, 1}},  {"u2", {GateKind::U3, 1, 2}},
        {"u3", {GateKind::U3, 1, 3}},  {"cx", {GateKind::CNOT, 2, 0}},
        {"ccx", {GateKind::CCNOT, 3, 0}}, {"ch", {GateKind::CH, 2, 0}},
    };
    return table;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Circuit parse() {
        expect_ident("OPENQASM");
        const Token ver = expect(Tok::number, "version number");
        if (ver.text != "2.0" && ver.text != "2")
            throw qasm_error(ver.line, ver.col, "unsupported OPENQASM version " + ver.text);
        expect_punct(";");
        while (lex_.peek().kind != Tok::eof) statement();
        if (qreg_size_ < 0)
            throw qasm_error(lex_.peek().line, lex_.peek().col, "missing qreg declaration");

        Circuit c;
        c.num_qubits = qreg_size_;
        c.gates = std::move(gates_);
        if (measures_.empty()) {
            for (int q = 0; q < qreg_size_; ++q) c.system_qubits.push_back(q);
        } else {
            for (const auto& [clbit, entry] : measures_)
                c.system_qubits.push_back(entry.qubit);
        }
        validate_circuit(c);
        return c;
    }

  private:
    struct Measure {
        int qubit;
        Token tok;
    };

    void statement() {
        const Token t = lex_.take();
        if (t.kind != Tok::ident)
            throw qasm_error(t.line, t.col, "expected a statement, got '" + t.text + "'");
        if (t.text == "include") {
            expect(Tok::string, "include file name");
            expect_punct(";");
            return;
        }
        if (t.text == "qreg" || t.text == "creg") {
            const bool quantum = t.text == "qreg";
            const Token name = expect(Tok::ident, "register name");
            expect_punct("[");
            const Token size = expect(Tok::number, "register size");
            expect_punct("]");
            expect_punct(";");
            const long n = std::strtol(size.text.c_str(), nullptr, 10);
            if (n < 1) throw qasm_error(size.line, size.col, "register size must be >= 1");
            if (quantum) {
                if (qreg_size_ >= 0)
                    throw qasm_error(t.line, t.col,
                                     "unsupported: multiple quantum registers");
                qreg_name_ = name.text;
                qreg_size_ = static_cast<int>(n);
            } else {
                if (creg_size_ >= 0)
                    throw qasm_error(t.line, t.col,
                                     "unsupported: multiple classical registers");
                creg_name_ = name.text;
                creg_size_ = static_cast<int>(n);
            }
            return;
        }
        if (t.text == "measure") {
            const auto [q, qtok] = qubit_ref();
            const Token arrow = lex_.take();
            if (arrow.kind != Tok::arrow)
                throw qasm_error(arrow.line, arrow.col, "expected '->' in measure");
            const auto [cl, ctok] = clbit_ref();
            expect_punct(";");
            for (const auto& [clbit, entry] : measures_) {
                if (clbit == cl)
                    throw qasm_error(ctok.line, ctok.col,
                                     "classical bit measured more than once");
                if (entry.qubit == q)
                    throw qasm_error(qtok.line, qtok.col, "qubit measured more than once");
            }
            measures_[cl] = Measure{q, qtok};
            return;
        }
        gate_call(t);
    }

    void gate_call(const Token& name) {
        const auto it = gate_table().find(name.text);
        if (it == gate_table().end())
            throw qasm_error(name.line, name.col, "unsupported gate '" + name.text + "'");
        const GateSig& sig = it->second;

        std::vector<double> params;
        if (lex_.peek().kind == Tok::punct && lex_.peek().text == "(") {
            lex_.take();
            params.push_back(expr());
            while (lex_.peek().kind == Tok::punct && lex_.peek().text == ",") {
                lex_.take();
                params.push_back(expr());
            }
            expect_punct(")");
        }
        if (static_cast<int>(params.size()) != sig.params)
            throw qasm_error(name.line, name.col,
                             name.text + " expects " + std::to_string(sig.params) +
                                 " parameter(s), got " + std::to_string(params.size()));

        std::vector<int> qubits;
        for (int i = 0; i < sig.arity; ++i) {
            if (i > 0) expect_punct(",");
            auto [q, tok] = qubit_ref();
            for (std::size_t j = 0; j < qubits.size(); ++j)
                if (qubits[j] == q)
                    throw qasm_error(tok.line, tok.col, "duplicate qubit argument");
            qubits.push_back(q);
        }
        expect_punct(";");

        Gate g;
        g.kind = sig.kind;
        g.qubits = qubits;
        if (name.text == "u2")
            g.params = {kPi / 2.0, params[0], params[1]};
        else
            g.params = params;
        gates_.push_back(std::move(g));
    }

    std::pair<int, Token> qubit_ref() {
        const Token name = expect(Tok::ident, "quantum register reference");
        if (qreg_size_ < 0 || name.text != qreg_name_)
            throw qasm_error(name.line, name.col,
                             "unknown quantum register '" + name.text + "'");
        expect_punct("[");
        const Token idx = expect(Tok::number, "qubit index");
        expect_punct("]");
        const long i = std::strtol(idx.text.c_str(), nullptr, 10);
        if (i < 0 || i >= qreg_size_)
            throw qasm_error(idx.line, idx.col,
                             "qubit index out of range for '" + qreg_name_ + "'");
        return {static_cast<int>(i), name};
    }

    std::pair<int, Token> clbit_ref() {
        const Token name = expect(Tok::ident, "classical register reference");
        if (creg_size_ < 0 || name.text != creg_name_)
            throw qasm_error(name.line, name.col,
                             "unknown classical register '" + name.text + "'");
        expect_punct("[");
        const Token idx = expect(Tok::number, "classical bit index");
        expect_punct("]");
        const long i = std::strtol(idx.text.c_str(), nullptr, 10);
        if (i < 0 || i >= creg_size_)
            throw qasm_error(idx.line, idx.col,
                             "classical bit index out of range for '" + creg_name_ + "'");
        return {static_cast<int>(i), name};
    }

    // expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
    // unary := '-' unary | number | 'pi' | '(' expr ')'
    double expr() {
        double v = term();
        while (lex_.peek().kind == Tok::punct &&
               (lex_.peek().text == "+" || lex_.peek().text == "-")) {
            const std::string op = lex_.take().text;
            const double r = term();
            v = op == "+" ? v + r : v - r;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (lex_.peek().kind == Tok::punct &&
               (lex_.peek().text == "*" || lex_.peek().text == "/")) {
            const std::string op = lex_.take().text;
            const double r = unary();
            v = op == "*" ? v * r : v / r;
        }
        return v;
    }

    double unary() {
        const Token t = lex_.take();
        if (t.kind == Tok::punct && t.text == "-") return -unary();
        if (t.kind == Tok::number) return std::strtod(t.text.c_str(), nullptr);
        if (t.kind == Tok::ident && t.text == "pi") return kPi;
        if (t.kind == Tok::punct && t.text == "(") {
            const double v = expr();
            expect_punct(")");
            return v;
        }
        throw qasm_error(t.line, t.col, "expected an angle expression, got '" + t.text + "'");
    }

    Token expect(Tok kind, const std::string& what) {
        const Token t = lex_.take();
        if (t.kind != kind)
            throw qasm_error(t.line, t.col, "expected " + what + ", got '" + t.text + "'");
        return t;
    }

    void expect_ident(const std::string& word) {
        const Token t = lex_.take();
        if (t.kind != Tok::ident || t.text != word)
            throw qasm_error(t.line, t.col, "expected '" + word + "'");
    }

    void expect_punct(const std::string& p) {
        const Token t = lex_.take();
        if (t.kind != Tok::punct || t.text != p)
            throw qasm_error(t.line, t.col, "expected '" + p + "', got '" + t.text + "'");
    }

    Lexer lex_;
    std::string qreg_name_;
    int qreg_size_ = -1;
    std::string creg_name_;
    int creg_size_ = -1;
    std::vector<Gate> gates_;
    std::map<int, Measure> measures_;
};

}  // namespace

Circuit parse_qasm(std::string_view text) {
    Parser p(text);
    return p.parse();
}

}  // namespace qho
