#include "nevwb/poly_io.hpp"

#include <cctype>

#include "nevwb/error.hpp"
#include "nevwb/poly_algorithms.hpp"

namespace nevwb {

json gauss_to_json(const GaussRat& c) { return {{"re", c.re().get_str()}, {"im", c.im().get_str()}}; }

namespace {

std::string as_rational_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw Error(ErrorKind::Parse, "coefficient must be an exact rational string or integer");
}

}  // namespace

GaussRat gauss_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return GaussRat(GaussRat::parse_rational(as_rational_string(j)));
    if (!j.is_object()) throw Error(ErrorKind::Parse, "expected {re, im}");
    std::string re = j.contains("re") ? as_rational_string(j["re"]) : "0";
    std::string im = j.contains("im") ? as_rational_string(j["im"]) : "0";
    return GaussRat::from_strings(re, im);
}

json poly_to_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t = gauss_to_json(c);
        t["exp"] = e;
        terms.push_back(t);
    }
    return {{"vars", p.num_vars()}, {"terms", terms}};
}

SparsePoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars")) throw Error(ErrorKind::Parse, "polynomial document needs \"vars\"");
    if (j.value("laurent", false)) throw Error(ErrorKind::Parse, "Laurent document where a polynomial was expected");
    std::size_t n = j["vars"].get<std::size_t>();
    if (j.contains("text")) {
        std::vector<std::string> names;
        if (j.contains("names")) names = j["names"].get<std::vector<std::string>>();
        return parse_poly(j["text"].get<std::string>(), n, names);
    }
    SparsePoly p(n);
    if (!j.contains("terms")) return p;
    for (const auto& t : j["terms"]) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != n) throw Error(ErrorKind::Parse, "exponent vector length does not match vars");
        for (int x : e)
            if (x < 0) throw Error(ErrorKind::Parse, "negative exponent in a polynomial document");
        p.add_term(e, gauss_from_json(t));
    }
    return p;
}

json laurent_to_json(const LaurentBivar& p) {
    json terms = json::array();
    for (const auto& [k, c] : p.terms()) {
        json t = gauss_to_json(c);
        t["exp"] = {k[0], k[1]};
        terms.push_back(t);
    }
    return {{"laurent", true}, {"vars", 2}, {"terms", terms}};
}

LaurentBivar laurent_from_json(const json& j) {
    if (j.value("vars", 2) != 2) throw Error(ErrorKind::Parse, "Laurent document must have vars = 2");
    LaurentBivar p;
    for (const auto& t : j.at("terms")) {
        auto e = t.at("exp").get<std::vector<int>>();
        if (e.size() != 2) throw Error(ErrorKind::Parse, "Laurent exponent must have length 2");
        p.add_term(e[0], e[1], gauss_from_json(t));
    }
    return p;
}

json roots_to_json(const AlgebraicRoots& r) {
    json roots = json::array();
    for (const auto& x : r.roots) {
        json o = {{"center", {x.center.real(), x.center.imag()}}, {"radius", x.radius}, {"multiplicity", x.multiplicity}};
        if (x.exact) o["exact"] = gauss_to_json(*x.exact);
        roots.push_back(o);
    }
    return {{"defining_poly", poly_to_json(r.defining_poly)}, {"roots", roots}};
}

namespace {

class Parser {
public:
    Parser(const std::string& s, std::size_t n, std::vector<std::string> names)
        : s_(s), n_(n), names_(std::move(names)) {
        if (names_.empty()) names_ = default_var_names(n);
        if (names_.size() != n) throw Error(ErrorKind::Parse, "variable name list does not match vars");
    }

    SparsePoly parse() {
        SparsePoly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::Parse, what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
    }

    SparsePoly constant(const GaussRat& c) { return SparsePoly::constant(n_, c); }

    SparsePoly expr() {
        SparsePoly acc(n_);
        bool first = true;
        while (true) {
            skip();
            bool neg = false;
            if (peek('+')) {
                ++pos_;
            } else if (peek('-')) {
                ++pos_;
                neg = true;
            } else if (!first) {
                break;
            }
            SparsePoly t = term();
            acc += neg ? -t : t;
            first = false;
        }
        return acc;
    }

    SparsePoly term() {
        SparsePoly acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * power();
            } else if (peek('/')) {
                ++pos_;
                SparsePoly d = power();
                if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
                acc = acc * d.constant_term().inverse();
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    SparsePoly power() {
        SparsePoly b = base();
        if (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (peek('-')) {
                ++pos_;
                neg = true;
            }
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (st == pos_) fail("expected integer exponent");
            int k = std::stoi(s_.substr(st, pos_ - st));
            if (neg) {
                if (!b.is_constant() || b.is_zero()) fail("negative power of a non-constant");
                return constant(nevwb::pow(b.constant_term(), -k));
            }
            return b.pow(k);
        }
        return b;
    }

    SparsePoly base() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SparsePoly e = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return e;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string num = s_.substr(st, pos_ - st);
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                std::size_t fs = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                std::string frac = s_.substr(fs, pos_ - fs);
                mpq_class q(mpz_class(num + frac), mpz_class("1" + std::string(frac.size(), '0')));
                q.canonicalize();
                return constant(GaussRat(q));
            }
            return constant(GaussRat(mpq_class(mpz_class(num))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string id = s_.substr(st, pos_ - st);
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == id) return SparsePoly::variable(n_, k);
            if (id == "i" || id == "I") return constant(GaussRat::i());
            fail("unknown identifier '" + id + "'");
        }
        fail("unexpected character");
    }

    std::string s_;
    std::size_t n_;
    std::vector<std::string> names_;
    std::size_t pos_ = 0;
};

}  // namespace

SparsePoly parse_poly(const std::string& text, std::size_t nvars, const std::vector<std::string>& names) {
    return Parser(text, nvars, names).parse();
}

}  // namespace nevwb
