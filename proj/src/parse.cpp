#include "sharphardy/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sharphardy/error.hpp"
#include "sharphardy/numfmt.hpp"

namespace sharphardy {

namespace {

class Parser {
public:
    Parser(const std::string& text, const Bindings& b) : s_(text), b_(b) {}

    FuncExpr parse_all() {
        FuncExpr f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("cannot parse function '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    double number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ';' && s_[pos_] != ']' && s_[pos_] != ':' &&
               !std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::string tok = s_.substr(start, pos_ - start);
        if (tok.empty()) fail("expected a number");
        std::string name = tok;
        double sign = 1.0;
        if (name[0] == '-' || name[0] == '+') {
            sign = name[0] == '-' ? -1.0 : 1.0;
            name = name.substr(1);
        }
        if (auto it = b_.find(name); it != b_.end()) return sign * it->second;
        try {
            return parse_num(tok);
        } catch (const ParameterError&) {
            pos_ = start;
            fail("'" + tok + "' is not a number" + (b_.empty() ? "" : " or a known parameter"));
        }
    }

    LogForm form() {
        const std::string w = word();
        if (w == "el") return LogForm::ElOverX;
        if (w == "l") return LogForm::LOverX;
        if (w == "dual") return LogForm::Dual;
        fail("log form must be el, l or dual");
    }

    FuncExpr sampled_inline() {
        std::vector<double> xs, vs;
        if (!accept(']')) {
            do {
                xs.push_back(number());
                expect(':');
                vs.push_back(number());
            } while (accept(';'));
            expect(']');
        }
        return FuncExpr::sampled(std::move(xs), std::move(vs));
    }

    FuncExpr sampled_file() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ';' && s_[pos_] != ']') ++pos_;
        std::string path = s_.substr(start, pos_ - start);
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
        std::ifstream in(path);
        if (!in) fail("cannot open sampled file '" + path + "'");
        std::vector<double> xs, vs;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            std::stringstream ss(line);
            std::string a, b;
            if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
                throw ParameterError(path + ":" + std::to_string(lineno) + ": expected two columns x,value");
            try {
                xs.push_back(parse_num(a));
                vs.push_back(parse_num(b));
            } catch (const ParameterError&) {
                if (lineno == 1 && xs.empty()) continue;  // header row
                throw ParameterError(path + ":" + std::to_string(lineno) + ": not numeric");
            }
        }
        return FuncExpr::sampled(std::move(xs), std::move(vs), path);
    }

    FuncExpr expr() {
        const std::string kind = word();
        if (!accept(':')) fail("expected ':' after '" + kind + "'");
        if (kind == "pow") {
            const double A = number();
            expect(',');
            return FuncExpr::power(A, number());
        }
        if (kind == "ind") {
            const double c1 = number();
            expect(',');
            const double c2 = number();
            double A = 1.0;
            if (accept(',')) A = number();
            return FuncExpr::indicator(c1, c2, A);
        }
        if (kind == "logpow") {
            const double A = number();
            expect(',');
            const double a = number();
            expect(',');
            const double b = number();
            expect(',');
            const LogForm f = form();
            double ell = 1.0;
            if (accept(',')) ell = number();
            return FuncExpr::log_power(A, a, b, f, ell);
        }
        if (kind == "bliss") {
            const double A = number();
            expect(',');
            const double b = number();
            expect(',');
            return FuncExpr::bliss(A, b, number());
        }
        if (kind == "sum") {
            expect('[');
            std::vector<FuncExpr> parts;
            do {
                parts.push_back(expr());
            } while (accept(';'));
            expect(']');
            return FuncExpr::sum(std::move(parts));
        }
        if (kind == "warp") {
            const double k = number();
            expect(',');
            expect('[');
            FuncExpr inner = expr();
            expect(']');
            return FuncExpr::warp(inner, k);
        }
        if (kind == "sampled") {
            if (accept('@')) return sampled_file();
            expect('[');
            return sampled_inline();
        }
        fail("unknown function kind '" + kind + "'");
    }

    std::string s_;
    const Bindings& b_;
    std::size_t pos_ = 0;
};

}  // namespace

FuncExpr parse_function(const std::string& text, const Bindings& bindings) {
    return Parser(text, bindings).parse_all();
}

Bindings bindings_for(const Exponents& e, double ell) {
    return {{"p", e.p}, {"q", e.q}, {"alpha", e.alpha}, {"beta", e.beta}, {"a", e.a}, {"ell", ell}};
}

}  // namespace sharphardy
