#include "samelson/liedata.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "samelson/symfunc.hpp"
#include "samelson/weights.hpp"

namespace samelson {

std::string group_name(GroupId g) {
    switch (g) {
        case GroupId::G2: return "G2";
        case GroupId::F4: return "F4";
        case GroupId::E6: return "E6";
        case GroupId::E7: return "E7";
        case GroupId::E8: return "E8";
    }
    return "?";
}

GroupId group_from_name(const std::string& s) {
    if (s == "G2") return GroupId::G2;
    if (s == "F4") return GroupId::F4;
    if (s == "E6") return GroupId::E6;
    if (s == "E7") return GroupId::E7;
    if (s == "E8") return GroupId::E8;
    throw DataError("unknown group " + s);
}

std::string data_dir() {
    if (const char* env = std::getenv("SAMELSON_DATA")) return env;
    return SAMELSON_DATA_DIR;
}

namespace {

std::vector<std::string> read_lines(const std::string& file) {
    std::ifstream in(data_dir() + "/" + file);
    if (!in) throw DataError("cannot open data file " + file);
    std::vector<std::string> lines;
    std::string l;
    while (std::getline(in, l)) {
        auto h = l.find('#');
        if (h != std::string::npos) l = l.substr(0, h);
        while (!l.empty() && std::isspace((unsigned char)l.back())) l.pop_back();
        if (!l.empty()) lines.push_back(l);
    }
    return lines;
}

std::vector<std::string> tokens(const std::string& l) {
    std::istringstream is(l);
    std::vector<std::string> t;
    std::string w;
    while (is >> w) t.push_back(w);
    return t;
}

struct GroupTable {
    std::map<GroupId, std::vector<int>> type;
    std::map<std::pair<GroupId, long>, std::vector<Factor>> decomp;
    std::map<std::pair<GroupId, long>, std::vector<std::pair<int, int>>> tp;  // (i, r)
};

const GroupTable& table() {
    static GroupTable t = [] {
        GroupTable tt;
        for (const auto& line : read_lines("groups.txt")) {
            auto tok = tokens(line);
            if (tok[0] == "type") {
                auto g = group_from_name(tok[1]);
                for (size_t i = 2; i < tok.size(); ++i) tt.type[g].push_back(std::stoi(tok[i]));
            } else if (tok[0] == "decomp") {
                auto g = group_from_name(tok[1]);
                long p = std::stol(tok[2]);
                std::vector<Factor> fs;
                for (size_t i = 3; i < tok.size(); ++i) {
                    Factor f;
                    const std::string& s = tok[i];
                    if (s[0] == 'B') {
                        auto comma = s.find(',');
                        f.bottom = std::stoi(s.substr(2, comma - 2));
                        f.top = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
                        f.rank = 2;
                        if (f.top - f.bottom != 2 * (p - 1))
                            throw DataError("decomp: bad bundle " + s + " at p=" + tok[2]);
                    } else {
                        f.bottom = std::stoi(s.substr(2, s.size() - 3));
                        f.rank = 1;
                    }
                    if (f.bottom % 2 == 0) throw DataError("decomp: even bottom cell in " + s);
                    f.i = (f.bottom + 1) / 2;
                    fs.push_back(f);
                }
                tt.decomp[{g, p}] = fs;
            } else if (tok[0] == "tp") {
                auto g = group_from_name(tok[1]);
                long p = std::stol(tok[2]);
                std::vector<std::pair<int, int>> v;
                for (size_t i = 3; i < tok.size(); ++i) {
                    auto colon = tok[i].find(':');
                    v.push_back({std::stoi(tok[i].substr(0, colon)),
                                 std::stoi(tok[i].substr(colon + 1))});
                }
                tt.tp[{g, p}] = v;
            } else {
                throw DataError("groups.txt: unknown record " + tok[0]);
            }
        }
        // audit: the tabulated t_p(G) agrees with the decomposition
        for (auto& [key, fs] : tt.decomp) {
            std::vector<std::pair<int, int>> derived;
            for (auto& f : fs) derived.push_back({f.i, f.rank});
            std::sort(derived.begin(), derived.end());
            auto it = tt.tp.find(key);
            if (it == tt.tp.end() || it->second != derived)
                throw DataError("groups.txt: t_p table mismatch for " + group_name(key.first) +
                                " p=" + std::to_string(key.second));
            for (auto& [i, r] : derived) {
                const auto& ty = tt.type[key.first];
                if (std::find(ty.begin(), ty.end(), i) == ty.end())
                    throw DataError("groups.txt: t_p not inside t(G)");
            }
        }
        return tt;
    }();
    return t;
}

}  // namespace

const std::vector<int>& group_type(GroupId g) { return table().type.at(g); }

bool quasi_p_regular(GroupId g, long p) {
    long bound = (g == GroupId::E7 || g == GroupId::E8) ? 11 : 5;
    return p >= bound;
}

GroupCtx group_ctx(GroupId g, long p) {
    if (!quasi_p_regular(g, p))
        throw NotQuasiPRegular(group_name(g) + " is not quasi-p-regular at p=" + std::to_string(p));
    auto it = table().decomp.find({g, p});
    if (it == table().decomp.end())
        throw OutOfValidRange(group_name(g) + " is p-regular at p=" + std::to_string(p) +
                              "; outside the tabulated quasi-p-regular range");
    GroupCtx ctx;
    ctx.g = g;
    ctx.p = p;
    ctx.type = table().type.at(g);
    ctx.factors = it->second;
    for (auto& f : ctx.factors) ctx.tp.push_back(f.i);
    std::sort(ctx.tp.begin(), ctx.tp.end());
    return ctx;
}

int GroupCtx::r(int i) const { return factor(i).rank; }

bool GroupCtx::in_tp(int i) const { return std::find(tp.begin(), tp.end(), i) != tp.end(); }

const Factor& GroupCtx::factor(int i) const {
    for (auto& f : factors)
        if (f.i == i) return f;
    throw OutOfValidRange("index " + std::to_string(i) + " not in t_p(" + group_name(g) + ")");
}

std::vector<std::pair<GroupId, long>> all_cases() {
    std::vector<std::pair<GroupId, long>> v;
    for (auto& [key, fs] : table().decomp) v.push_back(key);
    std::sort(v.begin(), v.end());
    return v;
}

bool classical_admissible(const std::string& family, int n, long p) {
    long b = (p - 1) * (p - 2);
    if (family == "SU") return n <= b + 1;
    if (family == "Sp" || family == "SpinOdd") return 2 * n <= b;
    if (family == "SpinEven") return 2 * (n - 1) <= b;
    throw DataError("classical_admissible: unknown family " + family);
}

/* ---------- generator images ---------- */

namespace {

RingPtr x_ring(const std::vector<int>& degrees) {
    std::vector<std::string> names;
    for (int d : degrees) names.push_back("x" + std::to_string(d));
    return Ring::make(names, degrees);
}

struct RawImages {
    std::map<int, MaskedPoly> image;
    std::map<int, Poly> k2pull;
};

RawImages parse_images(const std::string& file, const RingPtr& spin, const RingPtr& k2ring = {}) {
    RawImages out;
    struct Pending {
        int deg;
        std::string qual;
        int p1_power = 0;
        Poly known;
        std::vector<Expo> excludes;
    };
    std::vector<Pending> pend;
    for (const auto& line : read_lines(file)) {
        auto tok = tokens(line);
        if (tok[0] == "ring") continue;  // informational; the caller supplies the ring
        if (tok[0] == "image") {
            Pending p;
            p.deg = std::stoi(tok[1].substr(1));
            p.qual = tok[2];
            size_t at = 3;
            if (p.qual == "mod") {
                std::string m = tok[3];
                p.p1_power = m == "p1" ? 1 : std::stoi(m.substr(m.find('^') + 1));
                at = 4;
            }
            std::string rest;
            for (size_t i = at; i < tok.size(); ++i) rest += tok[i] + " ";
            p.known = parse_poly(spin, rest);
            pend.push_back(std::move(p));
        } else if (tok[0] == "exclude") {
            int deg = std::stoi(tok[1].substr(1));
            Poly m = parse_poly(spin, tok[2]);
            for (auto& pd : pend)
                if (pd.deg == deg) pd.excludes.push_back(m.terms().begin()->first.second);
        } else if (tok[0] == "k2pull") {
            if (!k2ring) throw DataError(file + ": unexpected k2pull record");
            int deg = std::stoi(tok[1].substr(1));
            std::string rest;
            for (size_t i = 2; i < tok.size(); ++i) rest += tok[i] + " ";
            out.k2pull[deg] = parse_poly(k2ring, rest);
        } else {
            throw DataError(file + ": unknown record " + tok[0]);
        }
    }
    for (auto& pd : pend) {
        if (!pd.known.homogeneous(pd.deg))
            throw DataError(file + ": image of x" + std::to_string(pd.deg) + " not homogeneous");
        MaskedPoly mp(pd.known);
        auto excluded = [&](const Expo& e) {
            return std::find(pd.excludes.begin(), pd.excludes.end(), e) != pd.excludes.end();
        };
        if (pd.qual == "mod") {
            Expo p1(spin->nvars(), 0);
            p1[spin->index_of("p1")] = pd.p1_power;
            for (auto& e : monomials_of_degree(spin, pd.deg))
                if (expo_divides(p1, e) && !excluded(e)) mp.add_unknown(e);
        } else if (pd.qual == "partial") {
            for (auto& e : monomials_of_degree(spin, pd.deg)) {
                if (excluded(e)) continue;
                if (pd.known.coeff(e) != 0) continue;
                mp.add_unknown(e);
            }
        } else if (pd.qual != "exact") {
            throw DataError(file + ": unknown qualifier " + pd.qual);
        }
        out.image.emplace(pd.deg, std::move(mp));
    }
    return out;
}

GroupGens build_e8_spin15() {
    GroupGens g;
    g.degrees = {4, 16, 24, 28, 36, 40, 48, 60};
    g.xring = x_ring(g.degrees);
    g.spin = pontryagin_ring(7);
    g.image = parse_images("images_e8.txt", g.spin).image;
    return g;
}

GroupGens build_e8() {
    const GroupGens& big = e8_images_spin15();
    GroupGens g;
    g.degrees = big.degrees;
    g.xring = big.xring;
    g.spin = spin11_ring();
    std::vector<Poly> restrict;
    for (int i = 1; i <= 5; ++i) restrict.push_back(Poly::variable(g.spin, "p" + std::to_string(i)));
    restrict.push_back(Poly(g.spin));
    restrict.push_back(Poly(g.spin));
    for (auto& [d, mp] : big.image) g.image.emplace(d, mp_map(mp, g.spin, restrict));
    return g;
}

GroupGens build_e7() {
    GroupGens g;
    g.degrees = {4, 12, 16, 20, 24, 28, 36};
    g.xring = x_ring(g.degrees);
    g.spin = spin11_ring();
    auto raw = parse_images("images_e7.txt", g.spin, with_quotient(g.xring, {}, 2));
    const GroupGens& e8 = generator_images(GroupId::E8);
    for (int d : {4, 16, 24, 28, 36}) g.image.emplace(d, e8.image.at(d));
    g.image.emplace(12, raw.image.at(12));
    g.image.emplace(20, raw.image.at(20));
    return g;
}

GroupGens build_e6() {
    GroupGens g;
    g.degrees = {4, 10, 12, 16, 18, 24};
    g.xring = x_ring(g.degrees);
    g.spin = spin10_ring();
    g.has_euler = true;
    g.image = parse_images("images_e6.txt", g.spin).image;
    return g;
}

GroupGens build_f4() {
    const GroupGens& e6 = generator_images(GroupId::E6);
    GroupGens g;
    g.degrees = {4, 12, 16, 24};
    g.xring = x_ring(g.degrees);
    g.spin = pontryagin_ring(4);
    std::vector<Poly> restrict;  // Spin(9) -> Spin(10): p_i -> p_i, c5 -> 0
    for (int i = 1; i <= 4; ++i) restrict.push_back(Poly::variable(g.spin, "p" + std::to_string(i)));
    restrict.push_back(Poly(g.spin));
    for (int d : g.degrees) g.image.emplace(d, mp_map(e6.image.at(d), g.spin, restrict));
    return g;
}

}  // namespace

const GroupGens& e8_images_spin15() {
    static GroupGens g = build_e8_spin15();
    return g;
}

const GroupGens& generator_images(GroupId gid) {
    static std::map<GroupId, GroupGens> cache;
    auto it = cache.find(gid);
    if (it != cache.end()) return it->second;
    GroupGens g;
    switch (gid) {
        case GroupId::E8: g = build_e8(); break;
        case GroupId::E7: g = build_e7(); break;
        case GroupId::E6: g = build_e6(); break;
        case GroupId::F4: g = build_f4(); break;
        default: throw DataError("no generator data for " + group_name(gid));
    }
    return cache.emplace(gid, std::move(g)).first->second;
}

const std::map<int, Poly>& e7_quadratic_pullbacks() {
    static std::map<int, Poly> m = [] {
        const auto& e7 = generator_images(GroupId::E7);
        auto raw = parse_images("images_e7.txt", e7.spin, with_quotient(e7.xring, {}, 2));
        return raw.k2pull;
    }();
    return m;
}

int rep_index(GroupId g) {
    switch (g) {
        case GroupId::E6: return 6;
        case GroupId::E7: return 7;
        case GroupId::E8: return 8;
        default: throw DataError("no stable representation attached to " + group_name(g));
    }
}

}  // namespace samelson
