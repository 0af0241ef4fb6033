#include "kshape/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "kshape/bijection.hpp"
#include "kshape/errors.hpp"

namespace kshape {

namespace {

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

const char* var_name(int var) {
    static const char* names[kNumVars] = {"x", "y", "z", "xb", "yb", "zb"};
    return names[var];
}

void check_var(int var) {
    if (var < 0 || var >= kNumVars) throw DomainError("variable index out of range");
}

BigInt binomial(int n, int r) {
    BigInt result = 1;
    for (int t = 1; t <= r; ++t) {
        result = result * (n - r + t) / t;
    }
    return result;
}

} // namespace

bool GrevlexDescending::operator()(const Exponents& a, const Exponents& b) const {
    const int da = degree_of(a);
    const int db = degree_of(b);
    if (da != db) return da > db;
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(BigInt value) {
    MultiPoly p;
    p.add_term(Exponents{}, value);
    return p;
}

MultiPoly MultiPoly::variable(int var, int power) {
    check_var(var);
    if (power < 0) throw DomainError("variable powers must be non-negative");
    Exponents e{};
    e[static_cast<std::size_t>(var)] = power;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, BigInt coefficient) {
    for (const int e : exps) {
        if (e < 0) throw DomainError("monomial exponents must be non-negative");
    }
    MultiPoly p;
    p.add_term(exps, coefficient);
    return p;
}

BigInt MultiPoly::coefficient(const Exponents& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [exps, coef] : terms_) best = std::max(best, degree_of(exps));
    return best;
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& coefficient) {
    if (coefficient == 0) return;
    const auto [it, inserted] = terms_.emplace(exps, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [exps, coef] : rhs.terms_) add_term(exps, coef);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [exps, coef] : rhs.terms_) add_term(exps, -coef);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out -= rhs;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i) e[static_cast<std::size_t>(i)] =
                ea[static_cast<std::size_t>(i)] + eb[static_cast<std::size_t>(i)];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const BigInt& scalar) const {
    MultiPoly out;
    for (const auto& [exps, coef] : terms_) out.add_term(exps, coef * scalar);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    return *this * BigInt(-1);
}

MultiPoly MultiPoly::shift_var(int var) const {
    check_var(var);
    MultiPoly out;
    for (const auto& [exps, coef] : terms_) {
        const int n = exps[static_cast<std::size_t>(var)];
        for (int m = 0; m <= n; ++m) {
            Exponents e = exps;
            e[static_cast<std::size_t>(var)] = m;
            out.add_term(e, coef * binomial(n, m));
        }
    }
    return out;
}

MultiPoly MultiPoly::substitute_var(int src, int dst) const {
    check_var(src);
    check_var(dst);
    MultiPoly out;
    for (const auto& [exps, coef] : terms_) {
        Exponents e = exps;
        if (src != dst) {
            e[static_cast<std::size_t>(dst)] += e[static_cast<std::size_t>(src)];
            e[static_cast<std::size_t>(src)] = 0;
        }
        out.add_term(e, coef);
    }
    return out;
}

MultiPoly MultiPoly::specialize(int var, const BigInt& value) const {
    check_var(var);
    MultiPoly out;
    for (const auto& [exps, coef] : terms_) {
        Exponents e = exps;
        const int n = e[static_cast<std::size_t>(var)];
        e[static_cast<std::size_t>(var)] = 0;
        BigInt scaled = coef;
        for (int t = 0; t < n; ++t) scaled *= value;
        out.add_term(e, scaled);
    }
    return out;
}

BigInt MultiPoly::evaluate(const std::array<BigInt, kNumVars>& point) const {
    BigInt total = 0;
    for (const auto& [exps, coef] : terms_) {
        BigInt term = coef;
        for (int i = 0; i < kNumVars; ++i) {
            for (int t = 0; t < exps[static_cast<std::size_t>(i)]; ++t) {
                term *= point[static_cast<std::size_t>(i)];
            }
        }
        total += term;
    }
    return total;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coef] : terms_) {
        const bool negative = coef < 0;
        const BigInt magnitude = negative ? BigInt(-coef) : coef;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::ostringstream mono;
        bool any_var = false;
        for (int i = 0; i < kNumVars; ++i) {
            const int e = exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (any_var) mono << '*';
            mono << var_name(i);
            if (e > 1) mono << '^' << e;
            any_var = true;
        }
        if (!any_var) {
            os << magnitude;
        } else if (magnitude == 1) {
            os << mono.str();
        } else {
            os << magnitude << '*' << mono.str();
        }
    }
    return os.str();
}

MultiPoly gandhi(int k) {
    if (k < 1) throw DomainError("the quadratic recursion starts at index 1");
    MultiPoly q = MultiPoly::variable(VarX, 2);
    const MultiPoly x_squared = MultiPoly::variable(VarX, 2);
    for (int step = 1; step < k; ++step) {
        q = x_squared * (q.shift_var(VarX) - q);
    }
    return q;
}

BigInt genocchi(int k) {
    if (k < 2) throw DomainError("the alternating sequence starts at index 2");
    std::array<BigInt, kNumVars> ones;
    ones.fill(1);
    return gandhi(k - 1).evaluate(ones);
}

MultiPoly dumont_foata(int k) {
    if (k < 1) throw DomainError("the three-variable recursion starts at index 1");
    MultiPoly f = MultiPoly::constant(1);
    const MultiPoly x = MultiPoly::variable(VarX);
    const MultiPoly y = MultiPoly::variable(VarY);
    const MultiPoly z = MultiPoly::variable(VarZ);
    for (int step = 1; step < k; ++step) {
        f = (x + y) * (x + z) * f.shift_var(VarX) - MultiPoly::variable(VarX, 2) * f;
    }
    return f;
}

MultiPoly generalized_dumont_foata(int k) {
    if (k < 1) throw DomainError("the six-variable recursion starts at index 1");
    MultiPoly g = MultiPoly::constant(1);
    const MultiPoly x = MultiPoly::variable(VarX);
    const MultiPoly y = MultiPoly::variable(VarY);
    const MultiPoly z = MultiPoly::variable(VarZ);
    const MultiPoly xb = MultiPoly::variable(VarXBar);
    const MultiPoly yb = MultiPoly::variable(VarYBar);
    const MultiPoly zb = MultiPoly::variable(VarZBar);
    for (int step = 1; step < k; ++step) {
        const MultiPoly shifted = g.shift_var(VarX).shift_var(VarXBar);
        g = (x + zb) * (y + xb) * shifted +
            (x * (yb - y) + xb * (z - zb) - x * xb) * g;
    }
    return g;
}

MultiPoly poly_from_pistols(int k, PistolWeighting weighting, ProminentConvention convention) {
    MultiPoly total;
    enumerate_pistols(k, [&](const Pistol& f) {
        const PointStats st = point_stats(f, convention);
        Exponents e{};
        switch (weighting) {
        case PistolWeighting::GandhiFixed:
            e[VarX] = st.fix + 2;
            break;
        case PistolWeighting::MaxFixProminent:
            e[VarX] = st.max;
            e[VarY] = st.fix;
            e[VarZ] = st.pro;
            break;
        case PistolWeighting::MaxFixSurfixed:
            e[VarX] = st.max;
            e[VarY] = st.fix;
            e[VarZ] = st.sur;
            break;
        case PistolWeighting::SixVariable:
            e[VarX] = st.mo;
            e[VarY] = st.fl;
            e[VarZ] = st.snl;
            e[VarXBar] = st.me;
            e[VarYBar] = st.fnl;
            e[VarZBar] = st.sl;
            break;
        }
        total += MultiPoly::monomial(e, 1);
    });
    return total;
}

MultiPoly poly_from_shapes(int k, ShapeWeighting weighting) {
    if (k < 1) throw DomainError("shape sums start at pistol height 1");
    MultiPoly total;
    enumerate_pistols(k, [&](const Pistol& f) {
        const Partition shape = varphi(f);
        Exponents e{};
        if (k == 1) {
            // The only irreducible 2-shape is empty: no sites, no free sites.
            if (weighting == ShapeWeighting::GandhiFree) e[VarX] = 2;
        } else {
            switch (weighting) {
            case ShapeWeighting::SiteTriple: {
                const SiteClassification cls = classify_sites(shape, k + 1);
                e[VarX] = cls.ful;
                e[VarY] = cls.stats.fr();
                e[VarZ] = cls.fro + cls.sch;
                break;
            }
            case ShapeWeighting::GandhiFree:
                e[VarX] = shape_stats(shape, k + 1).fr() + 2;
                break;
            }
        }
        total += MultiPoly::monomial(e, 1);
    });
    return total;
}

bool is_symmetric_xyz(const MultiPoly& p) {
    const auto permuted = [&p](int a, int b, int c) {
        MultiPoly out;
        for (const auto& [exps, coef] : p.terms()) {
            Exponents e = exps;
            e[VarX] = exps[static_cast<std::size_t>(a)];
            e[VarY] = exps[static_cast<std::size_t>(b)];
            e[VarZ] = exps[static_cast<std::size_t>(c)];
            out += MultiPoly::monomial(e, coef);
        }
        return out;
    };
    return permuted(VarY, VarX, VarZ) == p && permuted(VarX, VarZ, VarY) == p;
}

} // namespace kshape
