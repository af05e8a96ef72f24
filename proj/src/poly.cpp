#include "poly.hpp"

#include <sstream>

namespace mk3 {

void Poly::add_term(const Expo& e, const Rat& c) {
    if (c == Rat(0)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == Rat(0)) terms_.erase(it);
    }
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

Poly Poly::var(int i) {
    Poly p;
    Expo e{0, 0, 0, 0};
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Expo e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            r.add_term(e, c1 * c2);
        }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r;
    for (auto& [e, c0] : terms_) r.add_term(e, c0 * c);
    return r;
}

int Poly::deg_k() const {
    int d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[3]);
    return d;
}

Rat Poly::eval(const Rat& x, const Rat& y, const Rat& z, const Rat& k) const {
    auto powr = [](Rat b, int e) {
        Rat r(1);
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    Rat s(0);
    for (auto& [e, c] : terms_) s += c * powr(x, e[0]) * powr(y, e[1]) * powr(z, e[2]) * powr(k, e[3]);
    return s;
}

Poly Poly::d(int i) const {
    Poly r;
    for (auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Expo e2 = e;
        e2[i] -= 1;
        r.add_term(e2, c * Rat(e[i]));
    }
    return r;
}

std::pair<Poly, Poly> Poly::div_by_family(const Poly& family) const {
    // family = R(x,y,z) - k; write this = sum_i c_i(x,y,z) k^i and divide in k.
    Poly R;
    for (auto& [e, c] : family.terms()) {
        if (e[3] == 0) {
            Poly t;
            t.add_term(e, c);
            R = R + t;
        } else if (!(e[3] == 1 && e[0] == 0 && e[1] == 0 && e[2] == 0 && c == Rat(-1))) {
            throw std::invalid_argument("div_by_family: divisor is not R(x,y,z) - k");
        }
    }
    Poly rem = *this;
    Poly quo;
    while (rem.deg_k() > 0) {
        int d = rem.deg_k();
        // leading k-coefficient: all terms with e[3] == d
        Poly lead;
        for (auto& [e, c] : rem.terms_) {
            if (e[3] == d) {
                Expo e2 = e;
                e2[3] = 0;
                lead.add_term(e2, c);
            }
        }
        // rem -= lead * k^{d-1} * (R - k)  ==  rem + lead*k^{d-1}*k - lead*k^{d-1}*R
        Poly kd1 = Poly::constant(Rat(1));
        for (int i = 0; i < d - 1; ++i) kd1 = kd1 * Poly::var(3);
        Poly piece = lead * kd1;
        quo = quo - piece;
        rem = rem + piece * family;  // family = R - k, so this removes the k^d head
    }
    return {quo, rem};
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    const char* names[4] = {"x", "y", "z", "k"};
    for (auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (int i = 0; i < 4; ++i) {
            if (e[i] > 0) {
                os << "*" << names[i];
                if (e[i] > 1) os << "^" << e[i];
            }
        }
    }
    return os.str();
}

}  // namespace mk3
