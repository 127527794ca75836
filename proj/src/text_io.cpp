#include "hazardkit/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hazardkit {

namespace {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Circuit parse(int min_vars) {
        circuit_.num_vars = min_vars;
        circuit_.is_formula = true;
        circuit_.output = parse_expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return std::move(circuit_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    int emit(Gate g) {
        circuit_.gates.push_back(std::move(g));
        return static_cast<int>(circuit_.gates.size()) - 1;
    }

    int parse_expr() {
        std::vector<int> parts{parse_term()};
        while (eat('|')) parts.push_back(parse_term());
        if (parts.size() == 1) return parts[0];
        return emit({Gate::Kind::Or, {}, std::move(parts)});
    }

    int parse_term() {
        std::vector<int> parts{parse_factor().gate};
        while (eat('&')) parts.push_back(parse_factor().gate);
        if (parts.size() == 1) return parts[0];
        return emit({Gate::Kind::And, {}, std::move(parts)});
    }

    struct Factor {
        int gate;
        bool bare_variable;  // produced by the variable rule, no parens
    };

    Factor parse_factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '!') {
            advance();
            Factor inner = parse_factor();
            if (inner.bare_variable) {
                circuit_.gates[static_cast<std::size_t>(inner.gate)].lit.negated ^= true;
                return inner;
            }
            return {emit({Gate::Kind::Not, {}, {inner.gate}}), false};
        }
        if (c == '(') {
            advance();
            int e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return {e, false};
        }
        if (c == 'x') return {parse_variable(), true};
        fail(std::string("unexpected character '") + c + "'");
    }

    int parse_variable() {
        advance();  // 'x'
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected variable index after 'x'");
        long idx = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            idx = idx * 10 + (text_[pos_] - '0');
            if (idx > 1'000'000) fail("variable index too large");
            advance();
        }
        if (idx == 0) fail("variable indices start at x1");
        int var = static_cast<int>(idx) - 1;
        circuit_.num_vars = std::max(circuit_.num_vars, var + 1);
        return emit({Gate::Kind::Input, {var, false}, {}});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Circuit circuit_;
};

void serialize_gate(const Circuit& c, int gi, std::string& out) {
    const Gate& g = c.gates[static_cast<std::size_t>(gi)];
    switch (g.kind) {
        case Gate::Kind::Input:
            if (g.lit.negated) out += '!';
            out += 'x';
            out += std::to_string(g.lit.var + 1);
            break;
        case Gate::Kind::Not:
            out += "!(";
            serialize_gate(c, g.children[0], out);
            out += ')';
            break;
        case Gate::Kind::And:
        case Gate::Kind::Or: {
            const char sep = g.kind == Gate::Kind::And ? '&' : '|';
            for (std::size_t i = 0; i < g.children.size(); ++i) {
                if (i) out += sep;
                const Gate& ch = c.gates[static_cast<std::size_t>(g.children[i])];
                bool compound = ch.kind == Gate::Kind::And || ch.kind == Gate::Kind::Or;
                if (compound) out += '(';
                serialize_gate(c, g.children[i], out);
                if (compound) out += ')';
            }
            break;
        }
    }
}

}  // namespace

Circuit parse_formula(std::string_view text, int min_vars) {
    return FormulaParser(text).parse(min_vars);
}

std::string serialize_formula(const Circuit& c) {
    std::string out;
    serialize_gate(c, c.output, out);
    return out;
}

DnfFormula parse_dnf(std::string_view text, int min_vars) {
    Circuit c = parse_formula(text, min_vars);
    try {
        return dnf_from_circuit(c);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("not a DNF: ") + e.what(), 1, 1);
    }
}

CnfFormula parse_cnf(std::string_view text, int min_vars) {
    Circuit c = parse_formula(text, min_vars);
    try {
        return cnf_from_circuit(c);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("not a CNF: ") + e.what(), 1, 1);
    }
}

PartialAssignment parse_partial_assignment(std::string_view text) {
    PartialAssignment a(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '0': a[i] = TernaryValue::Zero; break;
            case '1': a[i] = TernaryValue::One; break;
            case 'u': a[i] = TernaryValue::U; break;
            default:
                throw ParseError(std::string("invalid assignment character '") + text[i] + "'", 1,
                                 static_cast<int>(i) + 1);
        }
    }
    return a;
}

}  // namespace hazardkit
