#include "samelson/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace samelson {

RingPtr Ring::make(std::vector<std::string> names, std::vector<int> degrees, std::vector<Expo> ideal,
                   int word_limit, long mod_p, int mod_e) {
    auto r = std::make_shared<Ring>();
    if (names.size() != degrees.size()) throw DataError("ring: names/degrees size mismatch");
    {
        std::set<std::string> seen(names.begin(), names.end());
        if (seen.size() != names.size()) throw DataError("ring: duplicate variable name");
    }
    r->names = std::move(names);
    r->degrees = std::move(degrees);
    for (auto& g : ideal)
        if (g.size() != r->names.size()) throw DataError("ring: ideal generator arity mismatch");
    r->ideal = std::move(ideal);
    r->word_limit = word_limit;
    r->mod_p = mod_p;
    r->mod_e = mod_e;
    return r;
}

RingPtr with_quotient(const RingPtr& r, std::vector<Expo> ideal, int word_limit) {
    auto q = std::make_shared<Ring>(*r);
    for (auto& g : ideal) q->ideal.push_back(g);
    if (word_limit) q->word_limit = word_limit;
    return q;
}

RingPtr with_modulus(const RingPtr& r, long p, int e) {
    auto q = std::make_shared<Ring>(*r);
    q->mod_p = p;
    q->mod_e = e;
    return q;
}

int Ring::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    throw DataError("unknown variable " + name);
}

int Ring::degree_of(const Expo& e) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += e[i] * degrees[i];
    return d;
}

int Ring::word_length(const Expo& e) const {
    int w = 0;
    for (int x : e) w += x;
    return w;
}

bool Ring::killed(const Expo& e) const {
    if (word_limit > 0 && word_length(e) > word_limit) return true;
    for (const auto& g : ideal)
        if (expo_divides(g, e)) return true;
    return false;
}

bool Ring::same(const Ring& o) const {
    return names == o.names && degrees == o.degrees && ideal == o.ideal &&
           word_limit == o.word_limit && mod_p == o.mod_p && mod_e == o.mod_e;
}

Expo expo_mul(const Expo& a, const Expo& b) {
    Expo r(a);
    for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

bool expo_divides(const Expo& d, const Expo& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

std::string expo_str(const Ring& ring, const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(RingPtr ring, const Rat& c) : ring_(std::move(ring)) {
    if (c != 0) add_term(Expo(ring_->nvars(), 0), c);
}

Poly Poly::variable(const RingPtr& ring, const std::string& name, int power) {
    Expo e(ring->nvars(), 0);
    e[ring->index_of(name)] = power;
    return monomial(ring, e, 1);
}

Poly Poly::monomial(const RingPtr& ring, const Expo& e, const Rat& c) {
    Poly p(ring);
    p.add_term(e, c);
    return p;
}

void Poly::reduce_coeff(Rat& c) const {
    if (ring_->mod_p) c = Rat(mod_prime_power(c, ring_->mod_p, ring_->mod_e));
}

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == 0 || ring_->killed(e)) return;
    Key k{ring_->degree_of(e), e};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        Rat v = c;
        reduce_coeff(v);
        if (v != 0) terms_.emplace(k, v);
    } else {
        it->second += c;
        reduce_coeff(it->second);
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::set_coeff(const Expo& e, const Rat& c) {
    Key k{ring_->degree_of(e), e};
    terms_.erase(k);
    add_term(e, c);
}

Rat Poly::coeff(const Expo& e) const {
    auto it = terms_.find(Key{ring_->degree_of(e), e});
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.first;  // descending order: leading term first
}

bool Poly::homogeneous(int d) const {
    for (auto& [k, c] : terms_)
        if (k.first != d) return false;
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    if (!ring_) {
        *this = o;
        return *this;
    }
    if (!ring_->same(*o.ring_)) throw RingMismatch("add: ring mismatch");
    for (auto& [k, c] : o.terms_) add_term(k.second, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (!ring_) {
        *this = -o;
        return *this;
    }
    if (!ring_->same(*o.ring_)) throw RingMismatch("sub: ring mismatch");
    for (auto& [k, c] : o.terms_) add_term(k.second, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (!a.ring_->same(*b.ring_)) throw RingMismatch("mul: ring mismatch");
    Poly r(a.ring_);
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) r.add_term(expo_mul(ka.second, kb.second), ca * cb);
    return r;
}

Poly operator*(const Rat& c, Poly a) {
    if (c == 0) return Poly(a.ring_);
    Poly r(a.ring_);
    for (auto& [k, v] : a.terms_) r.add_term(k.second, c * v);
    return r;
}

Poly Poly::operator-() const { return Rat(-1) * (*this); }

bool Poly::operator==(const Poly& o) const {
    if (!ring_ || !o.ring_) return terms_.empty() && o.terms_.empty();
    return ring_->same(*o.ring_) && terms_ == o.terms_;
}

Poly Poly::truncate_degree(int max_deg) const {
    Poly r(ring_);
    for (auto& [k, c] : terms_)
        if (k.first <= max_deg) r.terms_.emplace(k, c);
    return r;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(ring_);
    for (auto& [k, c] : terms_)
        if (k.first == d) r.terms_.emplace(k, c);
    return r;
}

Poly Poly::mod_p(long p, int e) const {
    Poly r(with_modulus(ring_, p, e));
    for (auto& [k, c] : terms_) r.add_term(k.second, c);
    return r;
}

Poly Poly::map_through(const RingPtr& target, const std::vector<Poly>& images) const {
    if (images.size() != ring_->nvars()) throw DataError("map_through: wrong image count");
    Poly r(target);
    for (auto& [k, c] : terms_) {
        Poly t(target, c);
        for (size_t i = 0; i < k.second.size(); ++i)
            for (int j = 0; j < k.second[i]; ++j) t = t * images[i];
        r += t;
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [k, c] : terms_) {
        Rat a = c;
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        std::string mono = expo_str(*ring_, k.second);
        if (a == 1 && mono != "1")
            s += mono;
        else {
            s += a.get_str();
            if (mono != "1") s += "*" + mono;
        }
    }
    return s;
}

long p_valuation_min(const Poly& a, long p) {
    if (a.is_zero()) throw std::invalid_argument("p_valuation of zero poly");
    long v = 0;
    bool first = true;
    for (auto& [k, c] : a.terms()) {
        long w = p_valuation(c, p);
        if (first || w < v) v = w;
        first = false;
    }
    return v;
}

/* ---------- parsing ---------- */

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;
    explicit Lexer(const std::string& t) : s(t) {}
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
};

Int parse_int(Lexer& lx) {
    std::string d;
    while (!lx.eof() && std::isdigit((unsigned char)lx.peek())) d += lx.get();
    if (d.empty()) throw DataError("poly parse: expected integer near '" + lx.s.substr(lx.i) + "'");
    return Int(d);
}

std::string parse_ident(Lexer& lx) {
    std::string id;
    while (!lx.eof() && (std::isalnum((unsigned char)lx.peek()) || lx.peek() == '_')) id += lx.get();
    return id;
}

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    Poly result(ring);
    Lexer lx(text);
    if (lx.eof()) return result;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            throw DataError("poly parse: expected +/- near '" + text.substr(lx.i) + "'");
        }
        first = false;
        Rat coeff = sign;
        bool have_num = false;
        if (std::isdigit((unsigned char)lx.peek())) {
            Int num = parse_int(lx);
            Int den = 1;
            if (lx.peek() == '/') {
                lx.get();
                den = parse_int(lx);
            }
            coeff *= Rat(num, den);
            coeff.canonicalize();
            have_num = true;
        }
        Expo e(ring->nvars(), 0);
        bool have_var = false;
        while (true) {
            if (lx.peek() == '*') {
                lx.get();
                continue;
            }
            if (!std::isalpha((unsigned char)lx.peek()) && lx.peek() != '_') break;
            std::string id = parse_ident(lx);
            int pw = 1;
            if (lx.peek() == '^') {
                lx.get();
                pw = (int)parse_int(lx).get_si();
            }
            e[ring->index_of(id)] += pw;
            have_var = true;
        }
        if (!have_num && !have_var)
            throw DataError("poly parse: empty term in '" + text + "'");
        result.add_term(e, coeff);
    }
    return result;
}

}  // namespace samelson
