#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "samelson/rational.hpp"

namespace samelson {

/* exponent vector over the ring's declared variables */
using Expo = std::vector<int>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/* A polynomial ring with named, evenly graded variables, an optional
   quotient by a monomial ideal, an optional word-length cut (drop all
   monomials in >= word_limit+1 generators) and optional coefficients
   mod p^e.  Everything downstream carries its ring along. */
class Ring {
public:
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<Expo> ideal;
    int word_limit = 0;  // 0 = no cut
    long mod_p = 0;      // 0 = exact rational coefficients
    int mod_e = 1;

    static RingPtr make(std::vector<std::string> names, std::vector<int> degrees,
                        std::vector<Expo> ideal = {}, int word_limit = 0, long mod_p = 0,
                        int mod_e = 1);

    size_t nvars() const { return names.size(); }
    int index_of(const std::string& name) const;
    int degree_of(const Expo& e) const;
    int word_length(const Expo& e) const;
    bool killed(const Expo& e) const;  // in the ideal or beyond the word cut
    bool same(const Ring& o) const;
};

RingPtr with_quotient(const RingPtr& r, std::vector<Expo> ideal, int word_limit = 0);
RingPtr with_modulus(const RingPtr& r, long p, int e = 1);

using Key = std::pair<int, Expo>;  // (degree, exponents), ordered descending

class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
    Poly(RingPtr ring, const Rat& c);  // constant

    static Poly variable(const RingPtr& ring, const std::string& name, int power = 1);
    static Poly monomial(const RingPtr& ring, const Expo& e, const Rat& c);

    const RingPtr& ring() const { return ring_; }
    const std::map<Key, Rat, std::greater<Key>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int degree() const;  // max term degree, -1 for 0
    bool homogeneous(int d) const;

    Rat coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Rat& c);  // applies ring reduction rules
    void add_term(const Expo& e, const Rat& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& c, Poly a);
    Poly operator-() const;
    bool operator==(const Poly& o) const;

    Poly truncate_degree(int max_deg) const;
    Poly homogeneous_part(int d) const;
    Poly mod_p(long p, int e = 1) const;

    /* image under a variable substitution into another ring */
    Poly map_through(const RingPtr& target, const std::vector<Poly>& images) const;

    std::string str() const;

private:
    void reduce_coeff(Rat& c) const;
    RingPtr ring_;
    std::map<Key, Rat, std::greater<Key>> terms_;
};

Poly parse_poly(const RingPtr& ring, const std::string& text);

/* monomial helpers */
Expo expo_mul(const Expo& a, const Expo& b);
bool expo_divides(const Expo& d, const Expo& m);
std::string expo_str(const Ring& ring, const Expo& e);

long p_valuation_min(const Poly& a, long p);  // min over coefficients; throws on zero poly

}  // namespace samelson
